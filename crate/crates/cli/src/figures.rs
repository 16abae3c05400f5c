//! SVG pictures of `O_K` in the complex plane with norm levels marked.

use std::fmt::Write as _;
use std::path::Path;

use serde_json::json;

use rootfield::exactmath::to_f64;
use rootfield::numberfield::{preset, NumberField};

use crate::{Failure, Output};

const SCALE: f64 = 60.0;

struct Plot {
    file: &'static str,
    field: &'static str,
    title: &'static str,
    levels: &'static [i64],
}

const PLOTS: [Plot; 2] = [
    Plot { file: "figure1_eisenstein.svg", field: "eisenstein", title: "O_K, O_K(1), O_K(3) for K = Q(sqrt(-3))", levels: &[1, 3] },
    Plot { file: "figure2_gaussian.svg", field: "gaussian", title: "O_K, O_K(1), O_K(2), O_K(4) for K = Q(sqrt(-1))", levels: &[1, 2, 4] },
];

/// The root of the quadratic minimal polynomial with positive imaginary part.
fn generator_point(k: &NumberField) -> (f64, f64) {
    let c = k.min_poly();
    let (c0, c1) = (to_f64(&c[0]), to_f64(&c[1]));
    (-c1 / 2.0, (c0 - c1 * c1 / 4.0).sqrt())
}

fn marker(level_index: usize, x: f64, y: f64) -> String {
    match level_index {
        0 => format!(r#"<circle cx="{x:.3}" cy="{y:.3}" r="7" fill="black"/>"#),
        1 => format!(r#"<rect x="{:.3}" y="{:.3}" width="12" height="12" fill="none" stroke="black" stroke-width="2"/>"#, x - 6.0, y - 6.0),
        _ => format!(
            r#"<polygon points="{x:.3},{:.3} {:.3},{y:.3} {x:.3},{:.3} {:.3},{y:.3}" fill="none" stroke="black" stroke-width="2"/>"#,
            y - 8.0,
            x + 8.0,
            y + 8.0,
            x - 8.0
        ),
    }
}

fn legend_name(level_index: usize) -> &'static str {
    ["filled circle", "square", "diamond"][level_index.min(2)]
}

/// SVG text, lattice point count, and marked points per norm level.
type Rendered = (String, usize, Vec<(i64, usize)>);

fn render(plot: &Plot, radius: f64) -> Result<Rendered, Failure> {
    let k = preset(plot.field)?;
    let (gx, gy) = generator_point(&k);
    let half = (radius + 0.75) * SCALE;
    let size = 2.0 * half;
    let to_screen = |x: f64, y: f64| (half + x * SCALE, half - y * SCALE);
    let mut svg = String::new();
    let _ = writeln!(svg, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{size:.0}" height="{:.0}" viewBox="0 0 {size:.0} {:.0}">"#, size + 40.0, size + 40.0);
    let _ = writeln!(svg, "<title>{}</title>", plot.title);
    let _ = writeln!(svg, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(svg, r##"<line x1="0" y1="{half:.3}" x2="{size:.3}" y2="{half:.3}" stroke="#bbbbbb"/>"##);
    let _ = writeln!(svg, r##"<line x1="{half:.3}" y1="0" x2="{half:.3}" y2="{size:.3}" stroke="#bbbbbb"/>"##);

    // a + b·t with |a + b·t| ≤ radius; |b|·|Im t| ≤ radius bounds b
    let span = (radius / gy).ceil() as i64 + 1;
    let mut lattice = 0;
    for b in -span..=span {
        for a in -span - 2..=span + 2 {
            let (x, y) = (a as f64 + b as f64 * gx, b as f64 * gy);
            if x * x + y * y <= radius * radius + 1e-9 {
                lattice += 1;
                let (sx, sy) = to_screen(x, y);
                let _ = writeln!(svg, r##"<circle cx="{sx:.3}" cy="{sy:.3}" r="2.5" fill="#888888"/>"##);
            }
        }
    }

    let mut marked = Vec::new();
    for (i, &d) in plot.levels.iter().enumerate() {
        let mut count = 0;
        if (d as f64) <= radius * radius + 1e-9 {
            for a in k.norm_level_set(d)? {
                let c = a.coords();
                let (x, y) = (to_f64(&c[0]) + to_f64(&c[1]) * gx, to_f64(&c[1]) * gy);
                let (sx, sy) = to_screen(x, y);
                let _ = writeln!(svg, "{}", marker(i, sx, sy));
                count += 1;
            }
        }
        marked.push((d, count));
    }

    let legend: Vec<String> = plot
        .levels
        .iter()
        .enumerate()
        .map(|(i, d)| format!("O_K({d}): {}", legend_name(i)))
        .collect();
    let _ = writeln!(svg, r#"<text x="8" y="{:.0}" font-family="sans-serif" font-size="13">{}</text>"#, size + 28.0, legend.join("   "));
    svg.push_str("</svg>\n");
    Ok((svg, lattice, marked))
}

pub fn run(dir: &Path, radius: f64) -> Result<Output, Failure> {
    if !radius.is_finite() || radius < 0.0 {
        return Err(Failure::usage("radius must be a non-negative number"));
    }
    std::fs::create_dir_all(dir)
        .map_err(|e| Failure::verification(format!("cannot create {}: {e}", dir.display()), None))?;
    let mut text = String::new();
    let mut entries = Vec::new();
    for plot in &PLOTS {
        let (svg, lattice, marked) = render(plot, radius)?;
        let path = dir.join(plot.file);
        std::fs::write(&path, svg)
            .map_err(|e| Failure::verification(format!("cannot write {}: {e}", path.display()), None))?;
        let counts: Vec<String> = marked.iter().map(|(d, c)| format!("O({d})={c}")).collect();
        let _ = writeln!(text, "{}: lattice points {lattice}, marked {}", path.display(), counts.join(" "));
        entries.push(json!({
            "file": path.display().to_string(),
            "field": plot.field,
            "lattice_points": lattice,
            "marked": marked.iter().map(|(d, c)| json!({"level": d, "count": c})).collect::<Vec<_>>(),
        }));
    }
    Ok(Output { text, json: json!({ "radius": radius, "figures": entries }) })
}
