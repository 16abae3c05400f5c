//! `rootfield`: realizations, classification, recognition and operator checks
//! from the command line.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use rootfield::classify::{classify_rank, degree_bound_certificate, expected_survivors, ClassifyConfig, Verdict};
use rootfield::exactmath::{fmt_rational, fmt_vec};
use rootfield::lgroup::{aut_label, recognize};
use rootfield::numberfield::file::make_field;
use rootfield::realizations::{build_realization, RealizationCertificate, RealizationLabel};
use rootfield::rootsystems::RootSetFile;
use rootfield::textfmt::parse_matrix;
use rootfield::weyldata::weyl_order;
use rootfield::Error;

mod figures;

#[derive(Parser)]
#[command(name = "rootfield", version, about = "Root systems realized in rings of integers of number fields")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    /// JSON.
    Structured,
}

#[derive(Subcommand)]
enum Command {
    /// Build and certify the realization of a rank 1 or 2 type.
    Realize {
        /// One of A1, A1', A2, A2-alt, G2, 2A1, 2A1-alt, B2, BC2, 2A1', A1+A1'.
        #[arg(long = "type")]
        label: String,
        /// Generate W(R) and decompose every element in L(K).
        #[arg(long)]
        certify: bool,
        /// Write the certificate to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the elimination pipeline over every type of the given rank.
    Classify {
        #[arg(long)]
        rank: usize,
        /// Include BC and A1' components.
        #[arg(long)]
        nonreduced: bool,
        /// Print one line per candidate, grouped by eliminating filter.
        #[arg(long)]
        trace: bool,
        /// Run expensive filters after a type is already eliminated.
        #[arg(long)]
        all_filters: bool,
        /// Comma-separated filter names, in evaluation order.
        #[arg(long, value_delimiter = ',')]
        filters: Vec<String>,
    },
    /// Verify a root-set file and report its type and Weyl group order.
    Recognize { file: PathBuf },
    /// Decide whether a matrix (power basis, acting on columns) lies in L(K).
    Opcheck {
        file: PathBuf,
        /// Preset name or field description file.
        #[arg(long)]
        field: String,
    },
    /// Write SVG pictures of the Eisenstein and Gaussian lattices with norm levels marked.
    Figures {
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 2.5)]
        radius: f64,
    },
}

/// Text and JSON renderings of a command result.
struct Output {
    text: String,
    json: Value,
}

struct Failure {
    code: u8,
    message: String,
    output: Option<Output>,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self { code: 2, message: message.into(), output: None }
    }

    fn verification(message: impl Into<String>, output: Option<Output>) -> Self {
        Self { code: 1, message: message.into(), output }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::AxiomViolation(_) | Error::Certification(_) | Error::UnknownDiagram(_) => {
                Failure::verification(e.to_string(), None)
            }
            _ => Failure::usage(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Realize { label, certify, out } => realize(&label, certify, out.as_deref(), cli.format),
        Command::Classify { rank, nonreduced, trace, all_filters, filters } => {
            let config = ClassifyConfig { nonreduced, all_filters, filters, ..ClassifyConfig::default() };
            classify(rank, &config, trace)
        }
        Command::Recognize { file } => recognize_file(&file),
        Command::Opcheck { file, field } => opcheck(&file, &field),
        Command::Figures { out, radius } => figures::run(&out, radius),
    };
    let emit = |o: &Output| match cli.format {
        Format::Text => print!("{}", o.text),
        Format::Structured => println!("{}", serde_json::to_string_pretty(&o.json).expect("serializable")),
    };
    match result {
        Ok(o) => {
            emit(&o);
            ExitCode::SUCCESS
        }
        Err(f) => {
            if let Some(o) = &f.output {
                emit(o);
            }
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))
}

fn certificate_json(c: &RealizationCertificate) -> Value {
    let coords = |a: &rootfield::numberfield::FieldElement| fmt_vec(a.coords());
    json!({
        "realization": c.label.name(),
        "field": c.field.name(),
        "construction": c.construction,
        "claimed_type": c.claimed_type.to_string(),
        "verified_type": c.verified_type.to_string(),
        "reduced": c.reduced,
        "roots": c.roots.iter().zip(&c.norms).map(|(a, n)| json!({"coords": coords(a), "norm": fmt_rational(n)})).collect::<Vec<_>>(),
        "short_roots": c.short_roots(),
        "base": c.base.iter().map(coords).collect::<Vec<_>>(),
        "reference_base": c.reference_base.as_ref().map(|b| b.iter().map(coords).collect::<Vec<_>>()),
        "reflections": c.reflections.iter().map(|w| json!({
            "root": coords(&w.root),
            "multiplier": coords(w.lop.multiplier()),
            "aut": aut_label(&c.field, w.lop.aut_index()),
            "order": w.order,
            "form_match": w.matches_form_reflection,
            "recognized": w.recognized,
        })).collect::<Vec<_>>(),
        "weyl": c.weyl.as_ref().map(|w| json!({
            "order": w.order,
            "lop_group_order": w.lop_group_order,
            "weyl_in_L": w.all_in_l,
            "levels_preserved": w.levels_preserved,
        })),
        "valid": c.is_valid(),
    })
}

fn realize(label: &str, certify: bool, out: Option<&Path>, format: Format) -> Result<Output, Failure> {
    let label: RealizationLabel = label.parse()?;
    let cert = build_realization(label, certify)?;
    let output = Output { text: cert.to_text(), json: certificate_json(&cert) };
    match out {
        Some(path) => {
            let body = match format {
                Format::Text => output.text.clone(),
                Format::Structured => serde_json::to_string_pretty(&output.json).expect("serializable") + "\n",
            };
            std::fs::write(path, body)
                .map_err(|e| Failure::verification(format!("cannot write {}: {e}", path.display()), None))?;
            Ok(Output {
                text: format!("wrote {}\n", path.display()),
                json: json!({"written": path.display().to_string(), "valid": cert.is_valid()}),
            })
        }
        None => Ok(output),
    }
}

fn join_types(v: &[rootfield::rootsystems::RootSystemType]) -> String {
    if v.is_empty() {
        "none".into()
    } else {
        v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
    }
}

fn classify(rank: usize, config: &ClassifyConfig, trace: bool) -> Result<Output, Failure> {
    let c = classify_rank(rank, config)?;
    let bound = degree_bound_certificate();
    let survivors = c.survivors();
    let mut text = String::new();
    let _ = writeln!(text, "rank: {rank}");
    let _ = writeln!(text, "types: {}", c.reports.len());
    let _ = writeln!(text, "filters: {}", c.filters.join(", "));
    let _ = writeln!(
        text,
        "degree_bound: floor((n+1)/2) <= 2*nu_2(n)+1 only for n in {{{}}} ({})",
        bound.survivors.iter().map(u64::to_string).collect::<Vec<_>>().join(", "),
        if bound.holds() { "certified" } else { "FAILED" }
    );
    let _ = writeln!(text, "survivors: {}", join_types(&survivors));
    let _ = writeln!(text, "expected: {}", join_types(&expected_survivors(rank)));
    let _ = writeln!(text, "incomplete: {}", join_types(&c.incomplete()));
    if trace {
        for name in &c.filters {
            let lines: Vec<String> = c
                .reports
                .iter()
                .filter(|r| r.eliminated_by().is_some_and(|(f, _)| f == *name))
                .map(|r| r.line())
                .collect();
            let _ = writeln!(text, "\n# eliminated by {name}: {}", lines.len());
            for l in lines {
                let _ = writeln!(text, "{l}");
            }
        }
        for (title, verdict) in [("survivors", Verdict::Survives), ("incomplete", Verdict::Incomplete)] {
            let lines: Vec<String> = c.reports.iter().filter(|r| r.verdict == verdict).map(|r| r.line()).collect();
            let _ = writeln!(text, "\n# {title}: {}", lines.len());
            for l in lines {
                let _ = writeln!(text, "{l}");
            }
        }
    }
    let reports: Vec<Value> = c
        .reports
        .iter()
        .map(|r| {
            let killed = r.eliminated_by();
            json!({
                "type": r.root_type.to_string(),
                "order": r.order.to_string(),
                "nu2": r.nu2,
                "nu3": r.nu3,
                "exponent": r.exponent,
                "verdict": r.verdict.to_string(),
                "filter": killed.map(|(f, _)| f),
                "rule": killed.map(|(_, w)| w.rule()),
                "witness": killed.map(|(_, w)| w.to_string()),
                "outcomes": r.outcomes.iter().map(|(f, o)| json!({"filter": f, "outcome": o.to_string()})).collect::<Vec<_>>(),
            })
        })
        .collect();
    let json = json!({
        "rank": rank,
        "filters": c.filters,
        "degree_bound": {"survivors": bound.survivors, "certified": bound.holds()},
        "survivors": survivors.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "incomplete": c.incomplete().iter().map(ToString::to_string).collect::<Vec<_>>(),
        "matches_expected": c.matches_expected(),
        "reports": if trace { Value::from(reports) } else { Value::Null },
    });
    Ok(Output { text, json })
}

fn recognize_file(path: &Path) -> Result<Output, Failure> {
    let set = RootSetFile::parse(&read(path)?)?;
    let verification = match set.verify() {
        Ok(v) => v,
        Err(e) => {
            let output = Output {
                text: format!("verdict: not a root system\nwitness: {e}\n"),
                json: json!({"root_system": false, "witness": e.to_string()}),
            };
            return Err(Failure::verification("axiom failure", Some(output)));
        }
    };
    let t = set.classify()?;
    let order = weyl_order(&t);
    let base: Vec<String> = set.base().iter().map(|v| fmt_vec(v)).collect();
    let text = format!(
        "verdict: root system\ntype: {t}\nreduced: {}\nrank: {}\nroots: {}\nbase: {}\nweyl_order: {order}\n",
        verification.reduced,
        verification.rank,
        verification.root_count,
        base.join("; ")
    );
    let json = json!({
        "root_system": true,
        "type": t.to_string(),
        "reduced": verification.reduced,
        "rank": verification.rank,
        "roots": verification.root_count,
        "base": base,
        "weyl_order": order.to_string(),
    });
    Ok(Output { text, json })
}

fn opcheck(path: &Path, field: &str) -> Result<Output, Failure> {
    let k = make_field(field)?;
    let m = parse_matrix(&read(path)?)?;
    let found = match recognize(&m, &k) {
        Err(Error::SingularMatrix) => None,
        other => other?,
    };
    let Some(u) = found else {
        return Ok(Output {
            text: format!("field: {}\nnot in L(K)\n", k.name()),
            json: json!({"field": k.name(), "in_L": false}),
        });
    };
    let order = u.finite_order();
    let multiplier_order = u.multiplier().is_root_of_unity();
    let show = |o: Option<u64>| o.map_or("infinite".to_string(), |o| o.to_string());
    let text = format!(
        "field: {}\nin L(K): {u}\nmultiplier: {}\nmultiplier_order: {}\nautomorphism: {}\norder: {}\n",
        k.name(),
        fmt_vec(u.multiplier().coords()),
        show(multiplier_order.map(|o| o as u64)),
        aut_label(&k, u.aut_index()),
        show(order)
    );
    let json = json!({
        "field": k.name(),
        "in_L": true,
        "multiplier": fmt_vec(u.multiplier().coords()),
        "multiplier_order": multiplier_order,
        "automorphism": aut_label(&k, u.aut_index()),
        "order": order,
    });
    Ok(Output { text, json })
}
