//! Acceptance suite: one PASS/FAIL line per criterion.

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::process::Command;
use std::sync::Arc;
use std::time::{Duration, Instant};

use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use rootfield::classify::{
    classify_rank, degree_bound_certificate, enumerate_types, expected_survivors, ClassifyConfig,
};
use rootfield::exactmath::{ratio, Rational};
use rootfield::lgroup::{recognize, LOp};
use rootfield::numberfield::{preset, preset_names, FieldElement, NumberField};
use rootfield::realizations::{
    biquadratic_embedding, build_realization, fixed_space_obstruction, EmbeddingPair, RealizationLabel,
};
use rootfield::rootsystems::catalogue;
use rootfield::rootsystems::{Component, Family, RootSystemType};
use rootfield::weyldata;

type Check = fn() -> Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn t(s: &str) -> RootSystemType {
    s.parse().expect("valid type")
}

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_rootfield")
}

fn run_cli(args: &[&str]) -> (i32, String) {
    let out = Command::new(bin()).args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8_lossy(&out.stdout).into_owned())
}

fn within(limit: Duration, start: Instant) -> Result<String, String> {
    let elapsed = start.elapsed();
    ensure(elapsed < limit, format!("took {elapsed:?}, limit {limit:?}"))?;
    Ok(format!("{:.2}s", elapsed.as_secs_f64()))
}

fn realizations_certify() -> Result<String, String> {
    let start = Instant::now();
    for label in RealizationLabel::ALL {
        let cert = build_realization(label, true).map_err(|e| format!("{label}: {e}"))?;
        ensure(cert.is_valid(), format!("{label}: invalid certificate"))?;
        let k = &cert.field;
        let c = k.conjugation_index().ok_or("no conjugation")?;
        for w in &cert.reflections {
            // r_a = mult(−a·c(a)⁻¹)∘c, computed here from scratch
            let expected = w.root.neg().mul(&w.root.apply_aut(c).inv().map_err(|e| e.to_string())?).unwrap();
            ensure(
                w.lop.multiplier() == &expected && w.lop.aut_index() == c && w.recognized,
                format!("{label}: reflection in {} is not mult(-a/c(a))c", w.root),
            )?;
        }
    }
    let elapsed_lib = start.elapsed();
    let g2 = build_realization(RealizationLabel::G2, false).unwrap();
    let count = |n: i64| g2.norms.iter().filter(|x| **x == Rational::from_integer(n.into())).count();
    ensure(g2.roots.len() == 12 && count(1) == 6 && count(3) == 6, "G2 root counts")?;
    ensure(build_realization(RealizationLabel::BC2, false).unwrap().roots.len() == 12, "BC2 root count")?;
    ensure(elapsed_lib < Duration::from_secs(1), format!("library certification took {elapsed_lib:?}"))?;
    for label in RealizationLabel::ALL {
        let (code, out) = run_cli(&["realize", "--type", label.name(), "--certify"]);
        ensure(code == 0 && out.contains("valid: true"), format!("realize {label} exited {code}"))?;
    }
    let (code, _) = run_cli(&["realize", "--type", "E6"]);
    ensure(code == 2, "realize E6 should exit 2")?;
    Ok(format!("11 labels certified in {:.3}s; G2 6 short + 6 long; BC2 12 roots", elapsed_lib.as_secs_f64()))
}

fn factorial(m: u64) -> u64 {
    (1..=m).product()
}

/// Closed forms of the order table, evaluated independently of the library.
fn table_order(c: Component) -> u64 {
    let l = c.rank as u64;
    match c.family {
        Family::A => factorial(l + 1),
        Family::B | Family::C => (1 << l) * factorial(l),
        Family::D => (1 << (l - 1)) * factorial(l),
        Family::E => match l {
            6 => (1 << 7) * 81 * 5,
            7 => (1 << 10) * 81 * 5 * 7,
            _ => (1 << 14) * 243 * 25 * 7,
        },
        Family::F => (1 << 7) * 9,
        Family::G => 4 * 3,
        Family::BC => unreachable!(),
    }
}

fn weyl_orders() -> Result<String, String> {
    let start = Instant::now();
    let mut components: Vec<Component> = (1..=4)
        .flat_map(|r| rootfield::classify::irreducible_of_rank(r, false))
        .collect();
    components.extend(["A5", "B5", "D5"].map(|s| s.parse::<Component>().unwrap()));
    for &c in &components {
        let explicit = weyldata::explicit_order(c, 100_000).map_err(|e| format!("{c}: {e}"))?;
        let closed = weyldata::component_order(c).to_u64().unwrap();
        ensure(explicit == closed && closed == table_order(c), format!("{c}: explicit {explicit}, closed {closed}"))?;
    }
    ensure(weyldata::explicit_order(t("F4").components()[0], 10_000) == Ok(1152), "F4 order")?;
    for (s, e) in [("A1", 2), ("A2", 6), ("B2", 4), ("G2", 6)] {
        ensure(weyldata::exponent(&t(s), 1000) == Some(e), format!("exp W({s}) != {e}"))?;
    }
    let time = within(Duration::from_secs(30), start)?;
    Ok(format!("{} irreducible types match; exponents 2/6/4/6; {time}", components.len()))
}

fn valuation_table() -> Result<String, String> {
    let a2 = [1, 1, 3, 3, 4, 4, 7, 7, 8, 8, 10, 10, 11, 11, 15, 15];
    let a3 = [0, 1, 1, 1, 2, 2, 2, 4, 4, 4, 5, 5, 5, 6, 6, 6];
    let bc2 = [3, 4, 7, 8, 10, 11, 15, 16, 18, 19, 22, 23, 25, 26, 31];
    let bc3 = [0, 1, 1, 1, 2, 2, 2, 4, 4, 4, 5, 5, 5, 6, 6];
    let d2 = [6, 7, 9, 10, 14, 15, 17, 18, 21, 22, 24, 25, 30];
    let d3 = [1, 1, 2, 2, 2, 4, 4, 4, 5, 5, 5, 6, 6];
    let mut rows: Vec<(String, u64, u64)> = Vec::new();
    for l in 1..=16 {
        rows.push((format!("A{l}"), a2[l - 1], a3[l - 1]));
    }
    for l in 2..=16 {
        rows.push((format!("B{l}"), bc2[l - 2], bc3[l - 2]));
        rows.push((format!("C{l}"), bc2[l - 2], bc3[l - 2]));
    }
    for l in 4..=16 {
        rows.push((format!("D{l}"), d2[l - 4], d3[l - 4]));
    }
    for (s, v2, v3) in [("E6", 7, 4), ("E7", 10, 4), ("E8", 14, 5), ("F4", 7, 2), ("G2", 2, 1)] {
        rows.push((s.into(), v2, v3));
    }
    let mut checked = 0;
    for (s, v2, v3) in &rows {
        let ty = t(s);
        let got = (weyldata::nu_p(&ty, 2), weyldata::nu_p(&ty, 3));
        ensure(got == (*v2, *v3), format!("{s}: got {got:?}, table ({v2}, {v3})"))?;
        checked += 2;
    }
    Ok(format!("{checked} (type, p) entries match"))
}

fn two_adic_lower_bound() -> Result<String, String> {
    let mut count = 0;
    for rank in 1..=8 {
        for ty in enumerate_types(rank, false) {
            let bound = (rank as u64).div_ceil(2);
            let nu2 = weyldata::nu_p(&ty, 2);
            ensure(nu2 >= bound, format!("{ty}: nu2 = {nu2} < {bound}"))?;
            count += 1;
        }
    }
    let extremal = t("3A2");
    let nu = weyldata::nu_p(&extremal, 2);
    ensure(nu == 3 && nu == (extremal.rank() as u64).div_ceil(2), "3A2 does not attain equality")?;
    Ok(format!("{count} reduced types of rank <= 8; equality at 3A2 (nu2 = 3)"))
}

fn classification() -> Result<String, String> {
    let start = Instant::now();
    let config = ClassifyConfig::default();
    let cert = degree_bound_certificate();
    ensure(cert.holds() && cert.survivors == vec![1, 2, 4, 6, 8, 16], "degree bound certificate")?;
    let mut notes = Vec::new();
    for n in [1, 2, 3, 4, 5, 6, 7, 8, 16] {
        let c = classify_rank(n, &config).map_err(|e| e.to_string())?;
        ensure(c.survivors() == expected_survivors(n), format!("n = {n}: survivors {:?}", c.survivors()))?;
        ensure(c.incomplete().is_empty(), format!("n = {n}: incomplete candidates"))?;
        ensure(c.reports.iter().all(|r| r.witnesses_recheck()), format!("n = {n}: witness recheck failed"))?;
        if [3, 5, 7].contains(&n) {
            ensure(
                c.reports.iter().all(|r| r.eliminated_by().is_some_and(|(f, _)| f == "valuation")),
                format!("n = {n}: not all eliminated by valuation"),
            )?;
        }
        let rule = |s: &str| c.report(&t(s)).and_then(|r| r.eliminated_by()).map(|(_, w)| w.rule());
        match n {
            4 => {
                ensure(rule("A4") == Some("cyclic-normal"), "A4 not by cyclic-normal")?;
                ensure(rule("A1+A3") == Some("max-element-order"), "A1+A3 not by max-element-order")?;
                let w = c.report(&t("A1+A3")).unwrap().eliminated_by().unwrap().1.to_string();
                ensure(w.contains("max element order is 6"), format!("A1+A3 witness: {w}"))?;
                for s in ["A1+B3", "A1+C3", "2A1+B2", "4A1", "2A1+G2", "B2+G2"] {
                    ensure(rule(s) == Some("mA1"), format!("{s} not by mA1"))?;
                }
            }
            6 => ensure(rule("3A2") == Some("exponent"), "3A2 not by exponent")?,
            _ => {}
        }
        notes.push(format!("n={n}:{}", c.survivors().len()));
    }
    let (code, out) = run_cli(&["classify", "--rank", "6", "--trace"]);
    ensure(code == 0 && out.contains("3A2\t|W|=216") && out.contains("exponent\t|W| = 216"), "classify --rank 6 --trace")?;
    let time = within(Duration::from_secs(60), start)?;
    Ok(format!("survivor counts {}; named eliminations match; {time}", notes.join(" ")))
}

fn embeddings() -> Result<String, String> {
    let mut parts = Vec::new();
    for (pair, order) in [(EmbeddingPair::A2PlusB2, 48), (EmbeddingPair::A2Plus2A1, 24)] {
        let e = biquadratic_embedding(pair).map_err(|e| e.to_string())?;
        ensure(e.group.order() == order, format!("{}: order {}", pair.name(), e.group.order()))?;
        // abstract direct product from independently generated catalogue groups
        let oracle = catalogue::weyl_group_of_type(&pair.root_type(), 1000).unwrap().order_multiset();
        ensure(e.order_multiset == oracle, format!("{}: order multiset differs from W({})", pair.name(), pair.name()))?;
        ensure(e.order_multiset == e.product_multiset, format!("{}: product multiset", pair.name()))?;
        parts.push(format!("{} -> {order}", pair.name()));
    }
    Ok(parts.join(", "))
}

fn obstruction() -> Result<String, String> {
    for pair in EmbeddingPair::ALL {
        let o = fixed_space_obstruction(pair).map_err(|e| e.to_string())?;
        ensure(o.z_order == 3, "z has order 3")?;
        ensure(o.psi == 0, format!("{}: psi(z) is not the identity", pair.name()))?;
        ensure(o.fixed_dim == 0, format!("{}: fixed space of dimension {}", pair.name(), o.fixed_dim))?;
        let recognized = recognize(&o.z.matrix_of(), o.z.field()).unwrap();
        ensure(recognized.as_ref() == Some(&o.z), "recognize(z) disagrees")?;
        ensure(o.control_fixed_dim == 0, "control")?;
    }
    Ok("both rank-4 images: order-3 z with psi = id, dim K^z = 0".into())
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p.display().to_string()
}

fn operator_order_examples() -> Result<String, String> {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    // columns: images of 1 and t under x ↦ (1 + t)·g(x), g(t) = −t
    let sqrt2 = write(dir.path(), "sqrt2.txt", "1 -2\n1 -1\n");
    // x ↦ ((3 + 4i)/5)·c(x)
    let gauss = write(dir.path(), "gauss.txt", "3/5 4/5\n4/5 -3/5\n");
    let (code, out) = run_cli(&["opcheck", &sqrt2, "--field", "sqrt2"]);
    ensure(code == 0 && out.contains("order: 4\n") && out.contains("multiplier_order: infinite"), format!("sqrt2: {out}"))?;
    let (code, out) = run_cli(&["opcheck", &gauss, "--field", "gaussian"]);
    ensure(code == 0 && out.contains("order: 2\n") && out.contains("multiplier_order: infinite"), format!("gaussian: {out}"))?;
    Ok("mult(1+sqrt2)g has order 4, mult((3+4i)/5)c has order 2, multipliers of infinite order".into())
}

fn random_element(k: &Arc<NumberField>, rng: &mut ChaCha8Rng) -> FieldElement {
    loop {
        let coords: Vec<Rational> = (0..k.degree()).map(|_| ratio(rng.gen_range(-5..=5), rng.gen_range(1..=4))).collect();
        let a = k.element(coords);
        if !a.is_zero() {
            return a;
        }
    }
}

fn random_lop(k: &Arc<NumberField>, rng: &mut ChaCha8Rng) -> LOp {
    let g = rng.gen_range(0..k.aut_count());
    LOp::new(random_element(k, rng), g).unwrap()
}

/// Finite-order elements `(b/c(b), c)` and `(ζ, g)` for imaginary quadratic fields.
fn random_finite_lop(k: &Arc<NumberField>, rng: &mut ChaCha8Rng) -> LOp {
    let c = k.conjugation_index().unwrap();
    if rng.gen_bool(0.5) {
        let b = random_element(k, rng);
        LOp::new(b.div(&b.apply_aut(c)).unwrap(), c).unwrap()
    } else {
        let mu = k.roots_of_unity().unwrap();
        let z = mu.generator.pow(rng.gen_range(0..mu.order as u64));
        LOp::new(z, rng.gen_range(0..k.aut_count())).unwrap()
    }
}

fn property_suites() -> Result<String, String> {
    const SAMPLES: usize = 1000;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut totals: BTreeMap<&str, usize> = BTreeMap::new();
    for name in preset_names() {
        let k = preset(name).map_err(|e| e.to_string())?;
        for _ in 0..SAMPLES {
            let (u, v, w) = (random_lop(&k, &mut rng), random_lop(&k, &mut rng), random_lop(&k, &mut rng));
            let uv = u.compose(&v).unwrap();
            ensure(uv.compose(&w).unwrap() == u.compose(&v.compose(&w).unwrap()).unwrap(), format!("{name}: associativity"))?;
            ensure(uv.matrix_of() == u.matrix_of().mul(&v.matrix_of()).unwrap(), format!("{name}: product rule"))?;
            // g∘mult(a)∘g⁻¹ = mult(g(a))
            let g = LOp::aut(&k, u.aut_index()).unwrap();
            let a = v.multiplier().clone();
            let lhs = g.compose(&LOp::mult(a.clone()).unwrap()).unwrap().compose(&g.inverse()).unwrap();
            ensure(lhs == LOp::mult(a.apply_aut(u.aut_index())).unwrap(), format!("{name}: conjugation rule"))?;
            // (a, g)⁻¹ = (g⁻¹(a⁻¹), g⁻¹)
            let gi = k.aut_inverse(u.aut_index());
            let inv = LOp::new(u.multiplier().inv().unwrap().apply_aut(gi), gi).unwrap();
            ensure(u.inverse() == inv && u.compose(&inv).unwrap().is_identity(), format!("{name}: inverse"))?;
            ensure(recognize(&u.matrix_of(), &k).unwrap().as_ref() == Some(&u), format!("{name}: recognize"))?;
            *totals.entry("laws").or_default() += 1;
        }
        if k.degree() == 2 && k.conjugation_index().is_some_and(|c| c != 0) {
            for _ in 0..SAMPLES {
                let u = random_finite_lop(&k, &mut rng);
                ensure(u.finite_order().is_some(), format!("{name}: expected finite order"))?;
                ensure(u.preserves_trace_form().unwrap(), format!("{name}: {u} does not preserve the trace form"))?;
                *totals.entry("finite").or_default() += 1;
            }
        }
    }
    // every finite-order operator met in the certificates and embeddings
    for label in RealizationLabel::ALL {
        let cert = build_realization(label, false).unwrap();
        for w in &cert.reflections {
            ensure(w.lop.preserves_trace_form().unwrap(), format!("{label}: reflection"))?;
            *totals.entry("finite").or_default() += 1;
        }
    }
    for pair in EmbeddingPair::ALL {
        let e = biquadratic_embedding(pair).unwrap();
        for u in e.group.elements() {
            ensure(u.preserves_trace_form().unwrap(), format!("{}: element {u}", pair.name()))?;
            ensure(recognize(&u.matrix_of(), u.field()).unwrap().as_ref() == Some(u), "recognize")?;
            *totals.entry("finite").or_default() += 1;
        }
    }
    ensure(!totals.is_empty() && totals["laws"] >= SAMPLES * preset_names().len(), "sample count")?;
    Ok(format!(
        "{} law samples over {} presets, {} finite-order operators preserve the trace form",
        totals["laws"],
        preset_names().len(),
        totals["finite"]
    ))
}

fn main() {
    let criteria: [(&str, Check); 9] = [
        ("realizations certify", realizations_certify),
        ("Weyl group orders and exponents", weyl_orders),
        ("2- and 3-adic valuation table", valuation_table),
        ("2-adic lower bound", two_adic_lower_bound),
        ("classification by rank", classification),
        ("biquadratic embeddings", embeddings),
        ("order-3 fixed-space obstruction", obstruction),
        ("operator orders in L(K)", operator_order_examples),
        ("L(K) property suites", property_suites),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let result = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_else(|| "panic".into()))
        });
        match result {
            Ok(detail) => println!("PASS {} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
