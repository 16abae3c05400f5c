use std::path::Path;
use std::process::Command;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_rootfield")).args(args).output().unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn realize_g2_certified() {
    let (code, out, _) = run(&["realize", "--type", "G2", "--certify"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().filter(|l| l.starts_with("root: ")).count(), 12);
    assert_eq!(out.lines().filter(|l| l.starts_with("reflection: ")).count(), 12);
    assert!(out.contains("weyl_in_L: true"));
}

#[test]
fn realize_bc2_is_non_reduced() {
    let (code, out, _) = run(&["realize", "--type", "BC2"]);
    assert_eq!(code, 0);
    assert!(out.contains("reduced: false"));
    assert!(!out.contains("weyl_order"));
}

#[test]
fn realize_rejects_higher_rank() {
    let (code, _, err) = run(&["realize", "--type", "E6"]);
    assert_eq!(code, 2);
    assert!(err.contains("rank 1 and 2"));
}

#[test]
fn realize_is_deterministic_and_writes_files() {
    let dir = tempfile::tempdir().unwrap();
    let a = run(&["realize", "--type", "B2", "--certify"]).1;
    let b = run(&["realize", "--type", "B2", "--certify"]).1;
    assert_eq!(a, b);
    let path = dir.path().join("b2.txt");
    let (code, _, _) = run(&["realize", "--type", "B2", "--certify", "--out", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(std::fs::read_to_string(path).unwrap(), a);
}

#[test]
fn realize_structured() {
    let (code, out, _) = run(&["realize", "--type", "A1", "--certify", "--format", "structured"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["verified_type"], "A1");
    assert_eq!(v["weyl"]["order"], 2);
    assert_eq!(v["reflections"][0]["multiplier"], "-1");
}

#[test]
fn classify_rank_four() {
    let (code, out, _) = run(&["classify", "--rank", "4"]);
    assert_eq!(code, 0);
    assert!(out.contains("survivors: 2A1+A2, A2+B2\n"));
    assert!(out.contains("incomplete: none\n"));
}

#[test]
fn classify_rank_one_and_range() {
    assert!(run(&["classify", "--rank", "1"]).1.contains("survivors: A1\n"));
    assert_eq!(run(&["classify", "--rank", "17"]).0, 2);
    assert_eq!(run(&["classify", "--rank", "0"]).0, 2);
    assert_eq!(run(&["classify", "--rank", "x"]).0, 2);
    assert_eq!(run(&["classify", "--rank", "2", "--filters", "bogus"]).0, 2);
}

#[test]
fn classify_structured_trace() {
    let (code, out, _) = run(&["classify", "--rank", "4", "--trace", "--format", "structured"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["matches_expected"], true);
    let a4 = v["reports"].as_array().unwrap().iter().find(|r| r["type"] == "A4").unwrap();
    assert_eq!(a4["filter"], "cyclic_normal");
}

#[test]
fn recognize_files() {
    let dir = tempfile::tempdir().unwrap();
    let b2 = write(dir.path(), "b2", "dim: 2\nform: 2 0 0 2\nroots: 1 0; -1 0; 0 1; 0 -1; 1 1; -1 -1; 1 -1; -1 1\n");
    let (code, out, _) = run(&["recognize", &b2]);
    assert_eq!(code, 0);
    assert!(out.contains("type: B2\n") && out.contains("weyl_order: 8\n"));

    let bad = write(dir.path(), "bad", "dim: 2\nroots: 1 0; -1 0; 0 1; 0 -1; 1 1; -1 -1\n");
    let (code, out, _) = run(&["recognize", &bad]);
    assert_eq!(code, 1);
    assert!(out.contains("not a root system"));

    let empty = write(dir.path(), "empty", "dim: 2\n");
    assert_eq!(run(&["recognize", &empty]).0, 2);
    assert_eq!(run(&["recognize", "/nonexistent/file"]).0, 2);
}

#[test]
fn opcheck_cases() {
    let dir = tempfile::tempdir().unwrap();
    let id = write(dir.path(), "id", "1 0\n0 1\n");
    let (code, out, _) = run(&["opcheck", &id, "--field", "eisenstein"]);
    assert_eq!(code, 0);
    assert!(out.contains("in L(K): (1, id)\n") && out.contains("order: 1\n"));

    let diag = write(dir.path(), "diag", "1 0\n0 2\n");
    let (code, out, _) = run(&["opcheck", &diag, "--field", "eisenstein"]);
    assert_eq!(code, 0);
    assert!(out.contains("not in L(K)"));

    assert_eq!(run(&["opcheck", &diag, "--field", "biquadratic"]).0, 2);
    assert_eq!(run(&["opcheck", &diag, "--field", "nosuchfield"]).0, 2);
    let singular = write(dir.path(), "singular", "1 1\n1 1\n");
    assert!(run(&["opcheck", &singular, "--field", "gaussian"]).1.contains("not in L(K)"));
}

#[test]
fn figures_written() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().join("figs");
    let (code, out, _) = run(&["figures", "--out", out_dir.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.contains("marked O(1)=6 O(3)=6"));
    assert!(out.contains("marked O(1)=4 O(2)=4 O(4)=4"));
    let svg = std::fs::read_to_string(out_dir.join("figure1_eisenstein.svg")).unwrap();
    assert!(svg.starts_with("<svg") && svg.trim_end().ends_with("</svg>"));
    assert_eq!(svg.matches(r#"r="7""#).count(), 6);

    let (code, out, _) = run(&["figures", "--out", out_dir.to_str().unwrap(), "--radius", "0"]);
    assert_eq!(code, 0);
    assert!(out.contains("lattice points 1, marked O(1)=0 O(3)=0"));
    assert_eq!(run(&["figures", "--out", out_dir.to_str().unwrap(), "--radius", "-1"]).0, 2);
}
