use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::Value;

use tropexp_core::expansion::FibreComplex;
use tropexp_core::io::{as_rational, parse_value, LoadError, Model};
use tropexp_core::report::{self, rational_text};
use tropexp_core::rubber::{rubber_report, LabelledMatrix};
use tropexp_core::trop_maps::{check_stability, validate_map};
use tropexp_core::{corpus, BigInt, BigRational, ExpansionReport};

#[derive(Parser)]
#[command(
    name = "tropexp",
    version,
    about = "Exact computations with tropical expansions"
)]
struct Cli {
    /// Print compact JSON (the default).
    #[arg(long, global = true, conflicts_with = "text")]
    json: bool,
    /// Pretty-print the JSON output.
    #[arg(long, global = true, conflicts_with = "text")]
    pretty: bool,
    /// Print a human-readable summary instead of JSON.
    #[arg(long, global = true)]
    text: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the expansion axioms and completeness.
    Validate { input: PathBuf },
    /// Compute the fibre complex over a point of the base cone.
    Fibre {
        input: PathBuf,
        /// Comma-separated exact coordinates, e.g. "1/2,3".
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        /// Write an SVG drawing of the fibre (two-dimensional targets only).
        #[arg(long)]
        figure: Option<PathBuf>,
    },
    /// Print the position maps of every vertex stratum.
    Positions { input: PathBuf },
    /// Print the full rubber torus analysis.
    Rubber { input: PathBuf },
    /// List strata, the combinatorial type and tube vertices.
    Strata { input: PathBuf },
    /// Decide stability of a tropical map given in the input.
    Stability {
        input: PathBuf,
        #[arg(long)]
        map: String,
    },
    /// Recompute the example corpus and compare with the stored reports.
    Examples {
        /// Directory holding `<name>.json` inputs and `expected/<name>.json` reports.
        #[arg(long)]
        dir: Option<PathBuf>,
        /// Overwrite the stored reports instead of comparing.
        #[arg(long, requires = "dir")]
        bless: bool,
    },
}

struct Output {
    json: bool,
    pretty: bool,
}

impl Output {
    fn emit(&self, value: &Value, text: impl FnOnce() -> String) {
        if self.pretty {
            println!("{}", serde_json::to_string_pretty(value).expect("json"));
        } else if self.json {
            println!("{value}");
        } else {
            print!("{}", text());
        }
    }
}

enum Failure {
    Usage(String),
    Invalid,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = Output {
        json: !cli.text,
        pretty: cli.pretty,
    };
    match run(cli.command, &out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Invalid) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn read_document(path: &Path) -> Result<Value, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| Failure::Usage(format!("{}: parse error: {e}", path.display())))
}

/// Loads a model, reporting validation failures on stdout.
fn load(path: &Path, out: &Output) -> Result<Model, Failure> {
    let doc = read_document(path)?;
    match parse_value(&doc) {
        Ok(model) => {
            let r = model.expansion.validate();
            if r.report.is_valid {
                Ok(model)
            } else {
                print_validation(&r, out);
                Err(Failure::Invalid)
            }
        }
        Err(LoadError::Validation(r)) => {
            print_validation(&r, out);
            Err(Failure::Invalid)
        }
        Err(e) => Err(Failure::Usage(format!("{}: {e}", path.display()))),
    }
}

fn run(command: Command, out: &Output) -> Result<(), Failure> {
    match command {
        Command::Validate { input } => {
            let doc = read_document(&input)?;
            let r = match parse_value(&doc) {
                Ok(model) => model.expansion.validate(),
                Err(LoadError::Validation(r)) => *r,
                Err(e) => return Err(Failure::Usage(format!("{}: {e}", input.display()))),
            };
            print_validation(&r, out);
            if r.report.is_valid {
                Ok(())
            } else {
                Err(Failure::Invalid)
            }
        }
        Command::Fibre {
            input,
            point,
            figure,
        } => {
            let model = load(&input, out)?;
            let f = parse_point(&point)?;
            let fibre = model
                .expansion
                .fibre(&f)
                .map_err(|e| Failure::Usage(e.to_string()))?;
            if let Some(path) = figure {
                let svg = fibre_svg(&fibre, model.expansion.sigma_rank())?;
                std::fs::write(&path, svg)
                    .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
            }
            out.emit(&report::fibre_json(&fibre), || fibre_text(&fibre));
            Ok(())
        }
        Command::Positions { input } => {
            let model = load(&input, out)?;
            let r = rubber_report(&model.expansion).map_err(|e| Failure::Usage(e.to_string()))?;
            out.emit(&report::positions_json(&r), || {
                let mut s = format!(
                    "rubber torus rank {} ({})\n",
                    r.torus.rank,
                    r.torus.basis_labels.join(", ")
                );
                for p in &r.position_maps {
                    let _ = writeln!(s, "\n{} over {}:", p.vertex, p.sigma_v);
                    s.push_str(&matrix_text(&p.matrix));
                }
                s
            });
            Ok(())
        }
        Command::Rubber { input } => {
            let model = load(&input, out)?;
            let r = rubber_report(&model.expansion).map_err(|e| Failure::Usage(e.to_string()))?;
            out.emit(&report::rubber_json(&r), || {
                let mut s = format!(
                    "rubber torus rank {} ({})\n",
                    r.torus.rank,
                    r.torus.basis_labels.join(", ")
                );
                for p in &r.position_maps {
                    let _ = writeln!(s, "\nposition map of {} over {}:", p.vertex, p.sigma_v);
                    s.push_str(&matrix_text(&p.matrix));
                }
                for st in &r.strata {
                    let _ = writeln!(
                        s,
                        "\nstratum {} (dim {}, over {}): {}",
                        st.polyhedron,
                        st.dim,
                        st.sigma_p,
                        if st.trivial {
                            "trivial action"
                        } else {
                            "nontrivial action"
                        }
                    );
                    s.push_str(&matrix_text(&st.phi));
                }
                let _ = writeln!(
                    s,
                    "\nproduct map injective: {}",
                    if r.injectivity.holds { "yes" } else { "no" }
                );
                if let Some(w) = &r.injectivity.witness {
                    let _ = writeln!(s, "  kernel witness {}", vec_text(w));
                }
                for j in &r.join_divisors {
                    let _ = writeln!(
                        s,
                        "join divisor {} ({}, {}): {}",
                        j.edge,
                        j.vertices.0,
                        j.vertices.1,
                        if j.trivial { "trivial" } else { "nontrivial" }
                    );
                }
                for n in &r.notes {
                    let _ = writeln!(s, "note: {n}");
                }
                s
            });
            Ok(())
        }
        Command::Strata { input } => {
            let model = load(&input, out)?;
            let e = &model.expansion;
            out.emit(&report::strata_json(e), || {
                let mut s = String::new();
                for st in e.strata() {
                    let _ = writeln!(s, "{} dim {} over {}", st.name, st.dim, st.sigma);
                }
                if let Ok(t) = e.tube_vertices() {
                    let _ = writeln!(s, "tube vertices: {}", t.tube_vertices.join(", "));
                }
                s
            });
            Ok(())
        }
        Command::Stability { input, map } => {
            let model = load(&input, out)?;
            let m = model
                .map(&map)
                .ok_or_else(|| Failure::Usage(format!("no map named {map}")))?;
            let check = validate_map(&model.expansion, m);
            let v =
                check_stability(&model.expansion, m).map_err(|e| Failure::Usage(e.to_string()))?;
            out.emit(&report::stability_json(&map, &check, &v), || {
                let mut s = format!(
                    "{map}: {}\n",
                    if v.stable { "stable" } else { "not stable" }
                );
                for f in &check.findings {
                    let _ = writeln!(s, "  map check {} at {}: {}", f.code, f.subject, f.detail);
                }
                for r in &v.reasons {
                    let _ = writeln!(s, "  {} at {}: {}", r.code.as_str(), r.subject, r.detail);
                }
                for n in &v.notes {
                    let _ = writeln!(s, "  assumes: {n}");
                }
                s
            });
            Ok(())
        }
        Command::Examples { dir, bless } => run_examples(dir.as_deref(), bless, out),
    }
}

fn run_examples(dir: Option<&Path>, bless: bool, out: &Output) -> Result<(), Failure> {
    let cases: Vec<(String, String, Option<String>)> = match dir {
        None => corpus::CASES
            .iter()
            .map(|c| {
                (
                    c.name.to_string(),
                    c.input.to_string(),
                    Some(c.expected.to_string()),
                )
            })
            .collect(),
        Some(d) => {
            let mut names: Vec<PathBuf> = std::fs::read_dir(d)
                .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", d.display())))?
                .filter_map(|e| e.ok().map(|e| e.path()))
                .filter(|p| p.extension().is_some_and(|x| x == "json"))
                .collect();
            names.sort();
            if names.is_empty() {
                return Err(Failure::Usage(format!(
                    "no .json inputs in {}",
                    d.display()
                )));
            }
            let mut cases = Vec::new();
            for p in names {
                let name = p.file_stem().unwrap().to_string_lossy().to_string();
                let input = std::fs::read_to_string(&p)
                    .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", p.display())))?;
                let expected =
                    std::fs::read_to_string(d.join("expected").join(format!("{name}.json"))).ok();
                cases.push((name, input, expected));
            }
            cases
        }
    };
    let mut results = Vec::new();
    let mut all_ok = true;
    for (name, input, expected) in cases {
        let doc: Value = serde_json::from_str(&input)
            .map_err(|e| Failure::Usage(format!("{name}: parse error: {e}")))?;
        let got = report::document_report(&doc);
        let mut diff = None;
        let status = if bless {
            let path = dir
                .expect("bless requires a directory")
                .join("expected")
                .join(format!("{name}.json"));
            let text = serde_json::to_string_pretty(&got).expect("json") + "\n";
            std::fs::write(&path, text)
                .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
            "blessed"
        } else {
            match expected.as_deref().map(serde_json::from_str::<Value>) {
                Some(Ok(want)) if want == got => "ok",
                Some(Ok(want)) => {
                    diff = first_difference(&want, &got, "$");
                    "mismatch"
                }
                Some(Err(e)) => {
                    diff = Some(format!("stored report is not JSON: {e}"));
                    "mismatch"
                }
                None => "missing",
            }
        };
        if status == "mismatch" || status == "missing" {
            all_ok = false;
        }
        results.push((name, status, diff));
    }
    let value = Value::Array(
        results
            .iter()
            .map(|(n, s, d)| match d {
                Some(d) => serde_json::json!({"name": n, "status": s, "diff": d}),
                None => serde_json::json!({"name": n, "status": s}),
            })
            .collect(),
    );
    out.emit(&value, || {
        results
            .iter()
            .map(|(n, s, d)| match d {
                Some(d) => format!("{s:>8}  {n}\n          {d}\n"),
                None => format!("{s:>8}  {n}\n"),
            })
            .collect()
    });
    if all_ok {
        Ok(())
    } else {
        Err(Failure::Invalid)
    }
}

/// The first place where two reports disagree, as a JSON path.
fn first_difference(want: &Value, got: &Value, path: &str) -> Option<String> {
    match (want, got) {
        (Value::Object(a), Value::Object(b)) => {
            for key in a.keys().chain(b.keys()) {
                let sub = format!("{path}.{key}");
                match (a.get(key), b.get(key)) {
                    (Some(x), Some(y)) => {
                        if let Some(d) = first_difference(x, y, &sub) {
                            return Some(d);
                        }
                    }
                    (Some(_), None) => return Some(format!("{sub}: missing from the new report")),
                    (None, Some(_)) => return Some(format!("{sub}: not in the stored report")),
                    (None, None) => {}
                }
            }
            None
        }
        (Value::Array(a), Value::Array(b)) => {
            for (i, (x, y)) in a.iter().zip(b).enumerate() {
                if let Some(d) = first_difference(x, y, &format!("{path}[{i}]")) {
                    return Some(d);
                }
            }
            (a.len() != b.len())
                .then(|| format!("{path}: stored length {}, new length {}", a.len(), b.len()))
        }
        _ => (want != got).then(|| format!("{path}: expected {want}, found {got}")),
    }
}

fn parse_point(text: &str) -> Result<Vec<BigRational>, Failure> {
    text.split(',')
        .map(|part| {
            let part = part.trim();
            let value = match part.split_once('/') {
                Some((n, d)) => serde_json::json!({"num": n.trim(), "den": d.trim()}),
                None => Value::String(part.to_string()),
            };
            as_rational(&value, "--point")
                .map_err(|_| Failure::Usage(format!("--point: {part:?} is not an exact rational")))
        })
        .collect()
}

fn print_validation(r: &ExpansionReport, out: &Output) {
    out.emit(&report::validation_json(r), || {
        let mut s = format!(
            "valid: {}\ncomplete: {}\n",
            if r.report.is_valid { "yes" } else { "no" },
            if r.report.is_complete { "yes" } else { "no" }
        );
        for v in &r.report.violations {
            let _ = writeln!(s, "violation {} at {}", v.axiom.code(), v.cones.join(", "));
        }
        for n in &r.report.notes {
            let _ = writeln!(s, "note: {n}");
        }
        s
    });
}

fn vec_text(v: &[BigInt]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

fn point_text(v: &[BigRational]) -> String {
    let parts: Vec<String> = v.iter().map(rational_text).collect();
    format!("({})", parts.join(", "))
}

fn matrix_text(m: &LabelledMatrix) -> String {
    let width = m
        .row_labels
        .iter()
        .chain(&m.col_labels)
        .map(|l| l.chars().count())
        .chain(
            m.matrix
                .row_vectors()
                .iter()
                .flatten()
                .map(|x| x.to_string().len()),
        )
        .max()
        .unwrap_or(1);
    let mut s = format!("  {:>width$}", "");
    for c in &m.col_labels {
        let _ = write!(s, " {c:>width$}");
    }
    s.push('\n');
    for (label, row) in m.row_labels.iter().zip(m.matrix.row_vectors()) {
        let _ = write!(s, "  {label:>width$}");
        for x in row {
            let _ = write!(s, " {:>width$}", x.to_string());
        }
        s.push('\n');
    }
    s
}

fn fibre_text(f: &FibreComplex) -> String {
    let mut s = format!(
        "fibre over {} (face {})\n",
        point_text(&f.base_point),
        f.base_face
    );
    for p in &f.polyhedra {
        let verts: Vec<String> = p
            .vertices
            .iter()
            .map(|(n, x)| format!("{n}={}", point_text(x)))
            .collect();
        let _ = write!(
            s,
            "  {} dim {} over {}: {}",
            p.name,
            p.dim,
            p.sigma,
            verts.join(" ")
        );
        if !p.recession.is_empty() {
            let rec: Vec<String> = p.recession.iter().map(|r| vec_text(r)).collect();
            let _ = write!(s, " + cone{{{}}}", rec.join(", "));
        }
        s.push('\n');
    }
    s
}

fn to_f64(x: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or(0.0)
}

/// Draws the vertices and edges of a planar fibre. Unbounded edges are
/// drawn with a fixed length and an open end.
fn fibre_svg(f: &FibreComplex, rank: usize) -> Result<String, Failure> {
    if rank != 2 {
        return Err(Failure::Usage(format!(
            "--figure needs a two-dimensional fibre target, this one has rank {rank}"
        )));
    }
    let points: Vec<(f64, f64)> = f
        .polyhedra
        .iter()
        .flat_map(|p| {
            p.vertices
                .iter()
                .map(|(_, x)| (to_f64(&x[0]), to_f64(&x[1])))
        })
        .collect();
    let (mut xmin, mut xmax, mut ymin, mut ymax) = (0.0f64, 1.0f64, 0.0f64, 1.0f64);
    for &(x, y) in &points {
        xmin = xmin.min(x);
        xmax = xmax.max(x);
        ymin = ymin.min(y);
        ymax = ymax.max(y);
    }
    let ray_len = 0.6 * (xmax - xmin).max(ymax - ymin);
    let pad = ray_len + 0.5;
    let scale = 400.0 / ((xmax - xmin).max(ymax - ymin) + 2.0 * pad);
    let tx = |x: f64| (x - xmin + pad) * scale;
    let ty = |y: f64| (ymax + pad - y) * scale;
    let w = (xmax - xmin + 2.0 * pad) * scale;
    let h = (ymax - ymin + 2.0 * pad) * scale;
    let mut s = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w:.0}\" height=\"{h:.0}\" viewBox=\"0 0 {w:.1} {h:.1}\">\n"
    );
    let ray_end = |x: (f64, f64), r: &[BigInt]| {
        let (rx, ry) = (big_f64(&r[0]), big_f64(&r[1]));
        let n = (rx * rx + ry * ry).sqrt().max(1e-9);
        (x.0 + ray_len * rx / n, x.1 + ray_len * ry / n)
    };
    for p in f.polyhedra.iter().filter(|p| p.dim == 2) {
        let mut pts = Vec::new();
        for (_, x) in &p.vertices {
            let x = (to_f64(&x[0]), to_f64(&x[1]));
            pts.push(x);
            for r in &p.recession {
                pts.push(ray_end(x, r));
            }
        }
        let hull: Vec<String> = convex_hull(pts)
            .iter()
            .map(|&(x, y)| format!("{:.2},{:.2}", tx(x), ty(y)))
            .collect();
        let _ = writeln!(
            s,
            "  <polygon points=\"{}\" fill=\"#dde6f0\" stroke=\"none\"><title>{}</title></polygon>",
            hull.join(" "),
            xml_escape(&p.name)
        );
    }
    for p in f.polyhedra.iter().filter(|p| p.dim == 1) {
        let (a, b) = match (p.vertices.as_slice(), p.recession.as_slice()) {
            ([(_, a), (_, b)], []) => (
                (to_f64(&a[0]), to_f64(&a[1])),
                (to_f64(&b[0]), to_f64(&b[1])),
            ),
            ([(_, a)], [r]) => {
                let a = (to_f64(&a[0]), to_f64(&a[1]));
                (a, ray_end(a, r))
            }
            _ => continue,
        };
        let dash = if p.recession.is_empty() {
            ""
        } else {
            " stroke-dasharray=\"6 4\""
        };
        let _ = writeln!(
            s,
            "  <line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"black\" stroke-width=\"2\"{dash}><title>{}</title></line>",
            tx(a.0), ty(a.1), tx(b.0), ty(b.1), xml_escape(&p.name)
        );
    }
    for p in f.polyhedra.iter().filter(|p| p.dim == 0) {
        for (n, x) in &p.vertices {
            let (cx, cy) = (tx(to_f64(&x[0])), ty(to_f64(&x[1])));
            let _ = writeln!(
                s,
                "  <circle cx=\"{cx:.2}\" cy=\"{cy:.2}\" r=\"5\" fill=\"black\"/>"
            );
            let _ = writeln!(
                s,
                "  <text x=\"{:.2}\" y=\"{:.2}\" font-size=\"14\">{}</text>",
                cx + 8.0,
                cy - 8.0,
                xml_escape(n)
            );
        }
    }
    s.push_str("</svg>\n");
    Ok(s)
}

fn big_f64(x: &BigInt) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or(0.0)
}

fn xml_escape(text: &str) -> String {
    text.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

/// Andrew's monotone chain, counter-clockwise.
fn convex_hull(mut pts: Vec<(f64, f64)>) -> Vec<(f64, f64)> {
    pts.sort_by(|a, b| a.partial_cmp(b).expect("finite coordinates"));
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let cross = |o: (f64, f64), a: (f64, f64), b: (f64, f64)| {
        (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
    };
    let mut hull: Vec<(f64, f64)> = Vec::new();
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &(f64, f64)>> = if pass == 0 {
            Box::new(pts.iter())
        } else {
            Box::new(pts.iter().rev())
        };
        for &p in iter {
            while hull.len() >= start + 2
                && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0.0
            {
                hull.pop();
            }
            hull.push(p);
        }
        hull.pop();
    }
    hull
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hull_drops_interior_points() {
        let pts = vec![
            (0.0, 0.0),
            (2.0, 0.0),
            (1.0, 1.0),
            (2.0, 2.0),
            (0.0, 2.0),
            (1.0, 0.0),
        ];
        let hull = convex_hull(pts);
        assert_eq!(hull, vec![(0.0, 0.0), (2.0, 0.0), (2.0, 2.0), (0.0, 2.0)]);
    }

    #[test]
    fn points_parse_exactly() {
        let p = parse_point("1/2, -3,4/6").ok().unwrap();
        let want: Vec<BigRational> = vec![
            BigRational::new(1.into(), 2.into()),
            BigRational::from_integer((-3).into()),
            BigRational::new(2.into(), 3.into()),
        ];
        assert_eq!(p, want);
        assert!(parse_point("0.5").is_err());
        assert!(parse_point("1/0").is_err());
    }
}
