//! Properties of expansions, rubber actions, tropical maps and the input
//! format over randomly generated expansions and the corpus.

mod common;

use common::*;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use tropexp_core::complex::validate_subdivision;
use tropexp_core::io::{load_str, load_value, parse_value, to_document};
use tropexp_core::rubber::position_map;
use tropexp_core::trop_maps::{
    check_stability, tube_along, validate_map, MapEdge, MapVertex, TropicalMap,
};
use tropexp_core::{corpus, BigInt, BigRational, Model, TropicalExpansion};

fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// Interior points of the orthant `τ`: positive combinations of its rays.
fn interior_points(
    e: &TropicalExpansion,
    coefficients: &[Vec<(i64, i64)>],
) -> Vec<Vec<BigRational>> {
    let rays = e.tau().rays();
    coefficients
        .iter()
        .map(|cs| {
            let mut f = vec![BigRational::zero(); e.tau_rank()];
            for (ray, &(n, d)) in rays.iter().zip(cs.iter().cycle()) {
                for (fi, ri) in f.iter_mut().zip(ray) {
                    *fi += rational(n, d) * BigRational::from_integer(ri.clone());
                }
            }
            f
        })
        .collect()
}

fn sample_coefficients() -> Vec<Vec<(i64, i64)>> {
    vec![
        vec![(1, 1), (1, 1), (1, 1)],
        vec![(1, 2), (3, 1), (2, 3)],
        vec![(7, 5), (1, 3), (5, 1)],
    ]
}

fn fibre_checks(e: &TropicalExpansion) -> Result<(), TestCaseError> {
    let points = interior_points(e, &sample_coefficients());
    let first = e.fibre(&points[0]).unwrap();
    let reference = first.combinatorial_type(e.sigma());
    prop_assert_eq!(first.polyhedra.len(), e.strata().len());
    for f in &points {
        let fibre = e.fibre(f).unwrap();
        prop_assert_eq!(&fibre.combinatorial_type(e.sigma()), &reference);
        for p in &fibre.polyhedra {
            // a relative interior point from the vertex data alone
            let k = BigRational::from_integer(BigInt::from(p.vertices.len()));
            let mut x = vec![BigRational::zero(); e.sigma_rank()];
            for (_, v) in &p.vertices {
                for (xi, vi) in x.iter_mut().zip(v) {
                    *xi += vi / &k;
                }
            }
            for r in &p.recession {
                for (xi, ri) in x.iter_mut().zip(r) {
                    *xi += BigRational::from_integer(ri.clone());
                }
            }
            prop_assert_eq!(e.sigma().locate(&x), Some(p.sigma.as_str()), "{}", p.name);
        }
        for v in e.vertex_names() {
            let expected = position_map(e, &v)
                .unwrap()
                .ambient
                .matrix
                .mul_rational_vec(f);
            prop_assert_eq!(fibre.vertex_position(&v), Some(&expected));
        }
    }
    let asym = e.asymptotic_complex().unwrap();
    let report = validate_subdivision(&asym, e.sigma());
    prop_assert!(report.is_valid);
    prop_assert_eq!(report.is_complete, e.validate().report.is_complete);
    Ok(())
}

fn round_trip(model: &Model) -> Result<(), TestCaseError> {
    let doc = to_document(model);
    let again = parse_value(&doc).unwrap();
    prop_assert_eq!(&again, model);
    let text = serde_json::to_string(&doc).unwrap();
    prop_assert_eq!(
        serde_json::to_string(&to_document(&load_str(&text).unwrap())).unwrap(),
        text
    );
    Ok(())
}

/// The same expansion with every vertex declared a vertex of the 1-complex.
fn with_all_vertices(e: &TropicalExpansion) -> TropicalExpansion {
    TropicalExpansion::new(
        e.sigma().clone(),
        e.tau().clone(),
        e.tau_labels().to_vec(),
        e.upsilon().clone(),
        Some(e.vertex_names()),
    )
    .unwrap()
}

/// A map tracing the whole fibre: one stable vertex per fibre vertex and
/// one edge per fibre edge.
fn tracing_map(e: &TropicalExpansion, f: &[BigRational]) -> TropicalMap {
    let fibre = e.fibre(f).unwrap();
    let vertices: Vec<MapVertex> = fibre
        .polyhedra
        .iter()
        .filter(|p| p.dim == 0)
        .map(|p| MapVertex {
            name: format!("m_{}", p.name),
            target: p.name.clone(),
            position: p.vertices[0].1.clone(),
            genus: 0,
            marks: 0,
            geometrically_stable: true,
        })
        .collect();
    let mut edges = Vec::new();
    for p in fibre.polyhedra.iter().filter(|p| p.dim == 1) {
        let slope = p.slope.clone().unwrap();
        let (a, pa) = &p.vertices[0];
        let (to, length) = match p.vertices.get(1) {
            Some((b, pb)) => {
                let i = slope.iter().position(|s| !s.is_zero()).unwrap();
                let len = (&pb[i] - &pa[i]) / BigRational::from_integer(slope[i].clone());
                (Some(format!("m_{b}")), Some(len))
            }
            None => (None, None),
        };
        edges.push(MapEdge {
            name: format!("e_{}", p.name),
            from: format!("m_{a}"),
            to,
            slope,
            length,
        });
    }
    TropicalMap {
        name: "trace".into(),
        base_point: f.to_vec(),
        vertices,
        edges,
        legs: Vec::new(),
    }
}

/// The primitive integral vector along a nonzero rational direction, by
/// clearing denominators and dividing by a Euclidean gcd.
fn primitive_direction(d: &[BigRational]) -> Vec<BigInt> {
    let lcm = d.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = d
        .iter()
        .map(|x| (x * BigRational::from_integer(lcm.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    ints.iter().map(|x| x / &g).collect()
}

fn slope_checks(e: &TropicalExpansion) -> Result<(), TestCaseError> {
    let f = interior_points(e, &sample_coefficients()[..1])[0].clone();
    let fibre = e.fibre(&f).unwrap();
    for v in e.vertex_names() {
        let here = fibre.vertex_position(&v).unwrap().clone();
        let mut expected: Vec<Vec<BigInt>> = Vec::new();
        for p in fibre.polyhedra.iter().filter(|p| p.dim == 1) {
            let Some(i) = p.vertices.iter().position(|(n, _)| *n == v) else {
                continue;
            };
            let d: Vec<BigRational> = match (p.vertices.len(), p.recession.first()) {
                (2, _) => p.vertices[1 - i]
                    .1
                    .iter()
                    .zip(&here)
                    .map(|(a, b)| a - b)
                    .collect(),
                (_, Some(r)) => r
                    .iter()
                    .map(|x| BigRational::from_integer(x.clone()))
                    .collect(),
                _ => continue,
            };
            expected.push(primitive_direction(&d));
        }
        let mut got: Vec<Vec<BigInt>> = e
            .incident_edges(&v)
            .unwrap()
            .into_iter()
            .map(|(_, s)| s)
            .collect();
        got.sort();
        expected.sort();
        prop_assert_eq!(got, expected, "slopes at {}", v);
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn generator_a_satisfies_the_rubber_identities(recipe in recipe_a()) {
        let e = build(&recipe);
        let failures = check_properties(&e);
        prop_assert!(failures.is_empty(), "{:?}", failures);
    }

    #[test]
    fn generator_b_satisfies_the_rubber_identities(recipe in recipe_b()) {
        let e = build(&recipe);
        let failures = check_properties(&e);
        prop_assert!(failures.is_empty(), "{:?}", failures);
    }

    #[test]
    fn fibres_have_constant_type_and_consistent_data(recipe in prop_oneof![recipe_a(), recipe_b()]) {
        fibre_checks(&build(&recipe))?;
    }

    #[test]
    fn generated_models_round_trip(recipe in prop_oneof![recipe_a(), recipe_b()]) {
        let e = build(&recipe);
        round_trip(&Model { expansion: e, maps: Vec::new() })?;
    }

    #[test]
    fn slopes_are_primitive_edge_directions(recipe in recipe_a()) {
        slope_checks(&with_all_vertices(&build(&recipe)))?;
    }

    #[test]
    fn tracing_maps_are_valid_and_stable(
        recipe in (1..=3usize).prop_flat_map(|b| {
            prop::collection::vec((prop::collection::vec(0i64..=2, 1), 0..=b), 1..=3).prop_map(move |cuts| Recipe {
                sigma_rank: 1,
                tau_rank: b,
                sigma_cuts: Vec::new(),
                cuts,
            })
        })
    ) {
        let e = with_all_vertices(&build(&recipe));
        let f = interior_points(&e, &sample_coefficients()[1..2])[0].clone();
        let m = tracing_map(&e, &f);
        let check = validate_map(&e, &m);
        prop_assert!(check.is_valid, "{:?}", check.findings);
        let verdict = check_stability(&e, &m).unwrap();
        prop_assert!(verdict.stable, "{:?}", verdict.reasons);
    }

    #[test]
    fn tube_detection_ignores_names_and_scale(
        names in prop::collection::btree_set("[a-z]{1,6}", 4),
        scale in (1i64..=9, 1i64..=9),
        which in 0usize..4,
    ) {
        let model = model("tube_example");
        let e = &model.expansion;
        let original = &model.maps[which];
        let names: Vec<String> = names.into_iter().collect();
        let rename = |n: &str| -> String {
            let i = original.vertices.iter().position(|v| v.name == n).unwrap();
            names[i].clone()
        };
        let lambda = rational(scale.0, scale.1);
        let mut m = original.clone();
        for v in &mut m.vertices {
            v.name = rename(&v.name);
        }
        for edge in &mut m.edges {
            edge.from = rename(&edge.from);
            edge.to = edge.to.as_deref().map(rename);
            edge.length = edge.length.as_ref().map(|l| l * &lambda);
        }
        for v in e.tube_vertices().unwrap().bivalent_non_tube {
            prop_assert_eq!(tube_along(e, &m, &v).unwrap(), tube_along(e, original, &v).unwrap());
        }
    }
}

#[test]
fn corpus_models_round_trip() {
    for case in corpus::CASES {
        if let Ok(model) = load_str(case.input) {
            round_trip(&model).unwrap_or_else(|e| panic!("{}: {e}", case.name));
        }
    }
}

#[test]
fn corpus_fibres_are_consistent() {
    for name in [
        "introduction",
        "rank_one",
        "actionondiv",
        "rank2rubber2",
        "diagonal_refinement",
        "noncomplete",
        "tube_example",
        "unused_ray",
    ] {
        let e = model(name).expansion;
        fibre_checks(&e).unwrap_or_else(|err| panic!("{name}: {err}"));
        let failures = check_properties(&e);
        assert!(failures.is_empty(), "{name}: {failures:?}");
    }
}

#[test]
fn floats_and_unknown_keys_are_schema_errors() {
    let base: serde_json::Value =
        serde_json::from_str(corpus::case("rank_one").unwrap().input).unwrap();
    let mut doc = base.clone();
    doc["tau"]["gens"][0][0] = serde_json::json!(1.0);
    let err = load_value(&doc).unwrap_err().to_string();
    assert!(err.contains("$.tau.gens[0][0]"), "{err}");
    let mut doc = base.clone();
    doc["upsilon"]["extra"] = serde_json::json!(1);
    assert!(load_value(&doc)
        .unwrap_err()
        .to_string()
        .contains("$.upsilon.extra"));
    let mut doc = base;
    doc["sigma"]["cones"][0]["gens"] = serde_json::json!([[1, 2]]);
    assert!(load_value(&doc)
        .unwrap_err()
        .to_string()
        .contains("$.sigma.cones[0].gens[0]"));
}

#[test]
fn large_integers_may_be_strings() {
    let mut doc: serde_json::Value =
        serde_json::from_str(corpus::case("actionondiv").unwrap().input).unwrap();
    doc["tau"]["gens"][0][0] = serde_json::json!("1");
    let a = load_value(&doc).unwrap();
    let b = load_str(corpus::case("actionondiv").unwrap().input).unwrap();
    assert_eq!(a, b);
    let big = "123456789012345678901234567890";
    assert!(tropexp_core::io::as_integer(&serde_json::json!(big), "$")
        .unwrap()
        .is_positive());
}
