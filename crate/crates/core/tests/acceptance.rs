//! Acceptance criteria, run in order by a plain `main` so that every
//! criterion prints its PASS/FAIL line even under `cargo test`.

mod common;

use std::collections::BTreeSet;
use std::sync::atomic::{AtomicUsize, Ordering};

use common::*;
use proptest::strategy::{Strategy, ValueTree};
use proptest::test_runner::TestRunner;
use tropexp_core::io::{load_str, LoadError};
use tropexp_core::report::document_report;
use tropexp_core::rubber::{
    position_map, product_injectivity, rubber_report, rubber_torus, stratum_action,
};
use tropexp_core::{corpus, Axiom, BigRational, IntMatrix, ReasonCode, TropicalExpansion, Witness};

static FAILED: AtomicUsize = AtomicUsize::new(0);

fn verdict(n: u32, title: &str, failures: Vec<String>) {
    let status = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!("criterion {n:>2}: {status}  {title}");
    for f in &failures {
        println!("    {f}");
    }
    if !failures.is_empty() {
        FAILED.fetch_add(1, Ordering::SeqCst);
    }
}

fn expect_matrix(failures: &mut Vec<String>, what: &str, got: &IntMatrix, want: &IntMatrix) {
    if got != want {
        failures.push(format!("{what}: got {got}, expected {want}"));
    }
}

fn ambient(e: &TropicalExpansion, v: &str) -> IntMatrix {
    position_map(e, v).unwrap().ambient.matrix
}

fn criterion_01_introduction_position_maps() {
    let e = model("introduction").expansion;
    let mut f = Vec::new();
    let want = [
        ("v0", "0", mat(&[], 2), vec![]),
        ("v1", "D2", mat(&[&[1, 1]], 2), vec!["D2"]),
        (
            "v2",
            "<D2,D1>",
            mat(&[&[1, 0], &[1, 0]], 2),
            vec!["D1", "D2"],
        ),
        (
            "v3",
            "<D2,D1>",
            mat(&[&[1, 0], &[1, 1]], 2),
            vec!["D1", "D2"],
        ),
    ];
    if e.vertex_names().len() != 4 {
        f.push(format!(
            "expected 4 vertex cones, found {:?}",
            e.vertex_names()
        ));
    }
    for (v, sigma, m, rows) in &want {
        let pm = position_map(&e, v).unwrap();
        if pm.sigma_v != *sigma {
            f.push(format!("{v}: sigma_v is {}, expected {sigma}", pm.sigma_v));
        }
        if pm.matrix.row_labels != *rows || pm.matrix.col_labels != ["e1", "e2"] {
            f.push(format!(
                "{v}: labels {:?} x {:?}",
                pm.matrix.row_labels, pm.matrix.col_labels
            ));
        }
        expect_matrix(&mut f, v, &pm.matrix.matrix, m);
    }
    // Independent check: the fibre over f places each vertex at φ_v(f).
    let points = [
        rvec(&[1, 1]),
        rvec(&[2, 1]),
        rvec(&[1, 3]),
        vec![
            BigRational::new(1.into(), 2.into()),
            BigRational::new(5.into(), 3.into()),
        ],
    ];
    for p in &points {
        let fibre = e.fibre(p).unwrap();
        for v in e.vertex_names() {
            let expected = ambient(&e, &v).mul_rational_vec(p);
            if fibre.vertex_position(&v) != Some(&expected) {
                f.push(format!("{v}: fibre position over {p:?} disagrees with φ_v"));
            }
        }
    }
    verdict(1, "introduction position maps match the table", f);
}

fn criterion_02_rank_one_weights() {
    let e = model("rank_one").expansion;
    let mut f = Vec::new();
    expect_matrix(
        &mut f,
        "v1",
        &position_map(&e, "v1").unwrap().matrix.matrix,
        &mat(&[&[1, 0]], 2),
    );
    expect_matrix(
        &mut f,
        "v2",
        &position_map(&e, "v2").unwrap().matrix.matrix,
        &mat(&[&[1, 1]], 2),
    );
    for p in ["P01", "P12"] {
        let sa = stratum_action(&e, p).unwrap();
        if !sa.phi.is_zero() {
            f.push(format!(
                "{p}: action should be trivial, phi = {}",
                sa.phi.matrix
            ));
        }
    }
    let r = rubber_report(&e).unwrap();
    if r.join_divisors.len() != 2 || r.join_divisors.iter().any(|j| !j.trivial) {
        f.push(format!("join divisors: {:?}", r.join_divisors));
    }
    // The fibre over (1, 1) is the chain 0 - 1 - 2 along the ray.
    let fibre = e.fibre(&rvec(&[1, 1])).unwrap();
    for (v, x) in [("v0", 0), ("v1", 1), ("v2", 2)] {
        if fibre.vertex_position(v) != Some(&rvec(&[x])) {
            f.push(format!("{v} is not at {x} in the fibre over (1, 1)"));
        }
    }
    verdict(
        2,
        "rank-one weights (1,0), (1,1) and trivial join divisors",
        f,
    );
}

fn criterion_03_action_on_divisors() {
    let m = model("actionondiv");
    let e = &m.expansion;
    let mut f = Vec::new();
    let torus = rubber_torus(e);
    if torus.rank != 1 {
        f.push(format!("rubber torus rank {}", torus.rank));
    }
    let p01 = stratum_action(e, "P01").unwrap();
    if p01.theta.dim != 0 || !p01.phi.is_zero() {
        f.push(format!(
            "P01: theta dim {} phi {}",
            p01.theta.dim, p01.phi.matrix
        ));
    }
    let p02 = stratum_action(e, "P02").unwrap();
    if p02.theta.quotient_rank != 1 || !p02.phi.is_zero() {
        f.push(format!(
            "P02: quotient rank {} phi {}",
            p02.theta.quotient_rank, p02.phi.matrix
        ));
    }
    if p02.k_p.matrix.column(0) != ivec(&[1, 1]) {
        f.push(format!("P02: kernel {}", p02.k_p.matrix));
    }
    let p12 = stratum_action(e, "P12").unwrap();
    if p12.theta.quotient_rank != 1 || p12.theta.dim != 1 {
        f.push(format!(
            "P12: theta rank {} dim {}",
            p12.theta.quotient_rank, p12.theta.dim
        ));
    }
    expect_matrix(&mut f, "P12 phi", &p12.phi.matrix, &mat(&[&[1]], 1));
    expect_matrix(
        &mut f,
        "P12 projection",
        &p12.projection.matrix,
        &mat(&[&[0, 1]], 2),
    );
    if p12.k_p.matrix.column(0) != ivec(&[1, 0]) {
        f.push(format!("P12: kernel {}", p12.k_p.matrix));
    }
    let r = rubber_report(e).unwrap();
    if p02.theta.strictly_convex
        || !r
            .notes
            .iter()
            .any(|n| n.contains("P02") && n.contains("not strictly convex"))
    {
        f.push("the convexity of theta for P02 is not reported".into());
    }
    verdict(3, "actionondiv strata: theta and phi for P01, P02, P12", f);
}

fn rank2rubber2_checks(e: &TropicalExpansion, vertices: &[&str]) -> Vec<String> {
    let mut f = Vec::new();
    let want = [
        ("v1", mat(&[&[0, 1]], 2)),
        ("v2", mat(&[&[1, 0], &[1, 0]], 2)),
        ("v3", mat(&[&[1, 0], &[1, 1]], 2)),
    ];
    for (v, m) in &want {
        if vertices.contains(v) {
            expect_matrix(&mut f, v, &position_map(e, v).unwrap().matrix.matrix, m);
        }
    }
    f
}

fn criterion_04_rank2rubber2() {
    let e = model("rank2rubber2").expansion;
    let mut f = rank2rubber2_checks(&e, &["v1", "v2", "v3"]);
    let r = rubber_report(&e).unwrap();
    for j in &r.join_divisors {
        let pair = (j.vertices.0.as_str(), j.vertices.1.as_str());
        let should_move = matches!(
            pair,
            ("v1", "v3") | ("v3", "v1") | ("v2", "v3") | ("v3", "v2")
        );
        if j.trivial == should_move {
            f.push(format!("join divisor {pair:?}: trivial = {}", j.trivial));
        }
    }
    for pair in [("v1", "v3"), ("v2", "v3")] {
        if !r
            .join_divisors
            .iter()
            .any(|j| (j.vertices.0.as_str(), j.vertices.1.as_str()) == pair)
        {
            f.push(format!("no join divisor between {pair:?}"));
        }
    }
    verdict(
        4,
        "rank2rubber2 position maps and nontrivial join divisors",
        f,
    );
}

fn criterion_05_diagonal_refinement() {
    let old = model("rank2rubber2").expansion;
    let diagonal = mat(&[&[1], &[1]], 1);
    let new = old
        .base_change(orthant(1), vec!["t".into()], &diagonal)
        .unwrap();
    let fixture = model("diagonal_refinement").expansion;
    let mut f = Vec::new();
    if !new.validate().report.is_valid {
        f.push("the base change is not a valid expansion".into());
    }
    let (r_old, r_new) = (rubber_torus(&old).rank, rubber_torus(&new).rank);
    if (r_old, r_new) != (2, 1) {
        f.push(format!("rubber torus ranks {r_old} -> {r_new}"));
    }
    let mut a: Vec<_> = new.upsilon().iter().map(|(_, c)| c.clone()).collect();
    let mut b: Vec<_> = fixture.upsilon().iter().map(|(_, c)| c.clone()).collect();
    a.sort();
    b.sort();
    if a != b {
        f.push("the base change differs from the stored refinement".into());
    }
    let names = |e: &TropicalExpansion| e.vertex_names().into_iter().collect::<BTreeSet<_>>();
    if names(&new) != names(&old) || names(&fixture) != names(&old) {
        f.push(format!(
            "vertices {:?} / {:?}",
            new.vertex_names(),
            fixture.vertex_names()
        ));
    }
    for v in old.vertex_names() {
        let composed = &ambient(&old, &v) * &diagonal;
        expect_matrix(
            &mut f,
            &format!("{v} (base change)"),
            &ambient(&new, &v),
            &composed,
        );
        expect_matrix(
            &mut f,
            &format!("{v} (stored)"),
            &ambient(&fixture, &v),
            &composed,
        );
    }
    verdict(
        5,
        "diagonal base change reduces the torus and composes phi",
        f,
    );
}

fn criterion_06_noncomplete() {
    let e = model("noncomplete").expansion;
    let full = model("rank2rubber2").expansion;
    let r = e.validate();
    let mut f = Vec::new();
    if !r.report.is_valid || r.report.is_complete {
        f.push(format!(
            "valid {} complete {}",
            r.report.is_valid, r.report.is_complete
        ));
    }
    f.extend(rank2rubber2_checks(&e, &["v2", "v3"]));
    for v in ["v0", "v2", "v3"] {
        let (a, b) = (
            position_map(&e, v).unwrap(),
            position_map(&full, v).unwrap(),
        );
        if a.matrix != b.matrix {
            f.push(format!("{v}: phi differs from the complete example"));
        }
    }
    verdict(6, "non-complete expansion is handled uniformly", f);
}

fn criterion_07_property_sweep() {
    let mut runner = TestRunner::deterministic();
    let mut f = Vec::new();
    let mut cases = 0;
    for (name, strategy) in [("A", recipe_a().boxed()), ("B", recipe_b().boxed())] {
        for _ in 0..60 {
            let recipe = strategy.new_tree(&mut runner).unwrap().current();
            let e = build(&recipe);
            for failure in check_properties(&e) {
                f.push(format!("generator {name} {recipe:?}: {failure}"));
            }
            cases += 1;
        }
    }
    if cases < 100 {
        f.push(format!("only {cases} cases"));
    }
    verdict(7, "property suite over 120 generated expansions", f);
}

fn criterion_08_injectivity() {
    let mut f = Vec::new();
    for name in [
        "introduction",
        "rank_one",
        "actionondiv",
        "rank2rubber2",
        "diagonal_refinement",
        "noncomplete",
    ] {
        let inj = product_injectivity(&model(name).expansion).unwrap();
        if !inj.holds {
            f.push(format!("{name}: not injective, witness {:?}", inj.witness));
        }
    }
    let e = model("unused_ray").expansion;
    let inj = product_injectivity(&e).unwrap();
    match &inj.witness {
        Some(w) if !inj.holds => {
            if *w != ivec(&[0, 0, 1]) && *w != ivec(&[0, 0, -1]) {
                f.push(format!(
                    "unused_ray: witness {w:?} is not the unused direction"
                ));
            }
            for v in e.vertex_names() {
                if ambient(&e, &v).mul_vec(w).iter().any(|x| *x != int(0)) {
                    f.push(format!("unused_ray: witness moves {v}"));
                }
            }
        }
        _ => f.push("unused_ray: injectivity should fail".into()),
    }
    verdict(
        8,
        "injectivity of the rubber action and its counterexample",
        f,
    );
}

fn criterion_09_validator_rejects_fixtures() {
    let mut f = Vec::new();
    for (name, axiom) in [
        ("bad_integrality", Axiom::Integrality),
        ("bad_saturation", Axiom::PSaturation),
    ] {
        let input = corpus::case(name).unwrap().input;
        match load_str(input) {
            Err(LoadError::Validation(r)) => {
                if !r.report.violations.iter().any(|v| v.axiom == axiom) {
                    f.push(format!(
                        "{name}: no {} violation in {:?}",
                        axiom.code(),
                        r.report.violations
                    ));
                }
            }
            other => f.push(format!("{name}: not rejected ({:?})", other.map(|_| ()))),
        }
    }
    match load_str(corpus::case("improper_overlap").unwrap().input) {
        Err(LoadError::Validation(r)) => {
            let v = r
                .report
                .violations
                .iter()
                .find(|v| v.axiom == Axiom::ImproperIntersection);
            match v.map(|v| &v.witness) {
                Some(Witness::Point(p)) => {
                    let (a, b) = (
                        tropexp_core::Cone::from_generators(2, &[ivec(&[0, 1]), ivec(&[1, 1])])
                            .unwrap(),
                        tropexp_core::Cone::from_generators(2, &[ivec(&[0, 1]), ivec(&[2, 1])])
                            .unwrap(),
                    );
                    if !a.contains_point(p)
                        || !b.contains_point(p)
                        || a.intersect(&b).contains_point(p) && a.intersect(&b).dim() < 1
                    {
                        f.push(format!(
                            "improper_overlap: witness {p:?} is not in the overlap"
                        ));
                    }
                }
                _ => {
                    f.push("improper_overlap: no improper intersection with a point witness".into())
                }
            }
        }
        other => f.push(format!(
            "improper_overlap: not rejected ({:?})",
            other.map(|_| ())
        )),
    }
    verdict(9, "violation fixtures rejected with the right axiom", f);
}

fn criterion_10_stability() {
    let m = model("tube_example");
    let e = &m.expansion;
    let mut f = Vec::new();
    let verdict_of = |name: &str| tropexp_core::check_stability(e, m.map(name).unwrap()).unwrap();
    let has = |v: &tropexp_core::StabilityVerdict, code: ReasonCode, subject: &str| {
        v.reasons
            .iter()
            .any(|r| r.code == code && r.subject == subject)
    };
    let m1 = verdict_of("m1");
    if m1.stable || !has(&m1, ReasonCode::TubeAlongNonTube, "v1") {
        f.push(format!("m1: {:?}", m1.reasons));
    }
    let m2 = verdict_of("m2");
    if m2
        .reasons
        .iter()
        .any(|r| r.code == ReasonCode::TubeAlongNonTube)
    {
        f.push(format!("m2: {:?}", m2.reasons));
    }
    let m4 = verdict_of("m4");
    if m4.stable
        || !m4
            .reasons
            .iter()
            .any(|r| r.code == ReasonCode::MissedStratum)
    {
        f.push(format!("m4: {:?}", m4.reasons));
    }
    verdict(
        10,
        "tube map unstable, repaired variant clears it, missed stratum caught",
        f,
    );
}

fn criterion_11_determinism() {
    let mut f = Vec::new();
    for case in corpus::CASES {
        let doc: serde_json::Value = serde_json::from_str(case.input).unwrap();
        let a = serde_json::to_string_pretty(&document_report(&doc)).unwrap();
        let b = serde_json::to_string_pretty(&document_report(&doc)).unwrap();
        if a != b {
            f.push(format!("{}: two runs differ", case.name));
        }
        if a + "\n" != case.expected {
            f.push(format!("{}: report differs from the stored one", case.name));
        }
    }
    verdict(11, "byte-identical reports for every corpus case", f);
}

fn main() {
    let criteria: [(u32, fn()); 11] = [
        (1, criterion_01_introduction_position_maps),
        (2, criterion_02_rank_one_weights),
        (3, criterion_03_action_on_divisors),
        (4, criterion_04_rank2rubber2),
        (5, criterion_05_diagonal_refinement),
        (6, criterion_06_noncomplete),
        (7, criterion_07_property_sweep),
        (8, criterion_08_injectivity),
        (9, criterion_09_validator_rejects_fixtures),
        (10, criterion_10_stability),
        (11, criterion_11_determinism),
    ];
    for (n, run) in criteria {
        if std::panic::catch_unwind(run).is_err() {
            println!("criterion {n:>2}: FAIL  (panicked)");
            FAILED.fetch_add(1, Ordering::SeqCst);
        }
    }
    let failed = FAILED.load(Ordering::SeqCst);
    println!(
        "acceptance: {} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
