#![allow(dead_code)]

use std::collections::BTreeMap;

use proptest::prelude::*;
use tropexp_core::complex::{cone_as_complex, product};
use tropexp_core::io::load_str;
use tropexp_core::linalg::{kernel_basis, right_inverse};
use tropexp_core::rubber::{
    position_map, stratum_action, stratum_action_with_section, stratum_base_map,
};
use tropexp_core::{
    corpus, BigInt, BigRational, Cone, ConeComplex, IntMatrix, Model, TropicalExpansion,
};

pub fn model(name: &str) -> Model {
    let case = corpus::case(name).unwrap_or_else(|| panic!("no corpus case {name}"));
    load_str(case.input).unwrap_or_else(|e| panic!("{name}: {e}"))
}

pub fn int(x: i64) -> BigInt {
    BigInt::from(x)
}

pub fn ivec(v: &[i64]) -> Vec<BigInt> {
    v.iter().copied().map(BigInt::from).collect()
}

pub fn rvec(v: &[i64]) -> Vec<BigRational> {
    v.iter()
        .map(|&x| BigRational::from_integer(x.into()))
        .collect()
}

pub fn mat(rows: &[&[i64]], cols: usize) -> IntMatrix {
    let rows: Vec<Vec<BigInt>> = rows.iter().map(|r| ivec(r)).collect();
    IntMatrix::from_row_vectors(cols, &rows)
}

pub fn orthant(n: usize) -> Cone {
    let gens: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| int((i == j) as i64)).collect())
        .collect();
    Cone::from_generators(n, &gens).unwrap()
}

/// Recipe for a random small expansion of an orthant over an orthant.
///
/// `sigma_cuts` star-subdivide `Σ` first (the refined `Σ'` times `τ` is a
/// subdivision of `Σ × τ`); `cuts` then star-subdivide `Υ` at `(s, e_k)`
/// with `k = 0` meaning `p = 0`. Base parts of `0` or a unit vector keep
/// every image a face of the orthant `τ` and keep `p` saturated.
#[derive(Clone, Debug)]
pub struct Recipe {
    pub sigma_rank: usize,
    pub tau_rank: usize,
    pub sigma_cuts: Vec<Vec<i64>>,
    pub cuts: Vec<(Vec<i64>, usize)>,
}

pub fn build(recipe: &Recipe) -> TropicalExpansion {
    let (a, b) = (recipe.sigma_rank, recipe.tau_rank);
    let mut sigma = ConeComplex::build(a, vec![(None, orthant(a))]).unwrap();
    for s in &recipe.sigma_cuts {
        if s.iter().all(|&x| x == 0) {
            continue;
        }
        sigma = sigma.star_subdivide(&ivec(s)).unwrap();
    }
    let labels: Vec<String> = (1..=b).map(|i| format!("e{i}")).collect();
    let ray_labels: BTreeMap<Vec<BigInt>, String> = (0..b)
        .map(|i| {
            let r: Vec<BigInt> = (0..b).map(|j| int((i == j) as i64)).collect();
            (r, labels[i].clone())
        })
        .collect();
    let tau_complex = cone_as_complex(&orthant(b), &ray_labels);
    let mut upsilon = product(&sigma, &tau_complex);
    for (s, k) in &recipe.cuts {
        let mut v = ivec(s);
        v.extend((1..=b).map(|j| int((j == *k) as i64)));
        if v.iter().all(|x| *x == int(0)) {
            continue;
        }
        upsilon = upsilon.star_subdivide(&v).unwrap();
    }
    TropicalExpansion::new(sigma, orthant(b), labels, upsilon, None).unwrap()
}

fn shapes() -> impl Strategy<Value = (usize, usize)> {
    prop::sample::select(vec![(1, 1), (2, 1), (1, 2), (2, 2), (3, 1), (1, 3)])
}

/// Generator A: star subdivisions of `Σ × τ` only.
pub fn recipe_a() -> impl Strategy<Value = Recipe> {
    shapes().prop_flat_map(|(a, b)| {
        prop::collection::vec((prop::collection::vec(0i64..=2, a), 0..=b), 1..=3).prop_map(
            move |cuts| Recipe {
                sigma_rank: a,
                tau_rank: b,
                sigma_cuts: Vec::new(),
                cuts,
            },
        )
    })
}

/// Generator B: a refinement of `Σ` followed by star subdivisions of `Υ`.
pub fn recipe_b() -> impl Strategy<Value = Recipe> {
    prop::sample::select(vec![(2, 1), (2, 2), (3, 1)]).prop_flat_map(|(a, b)| {
        (
            prop::collection::vec(prop::collection::vec(0i64..=2, a), 1..=2),
            prop::collection::vec((prop::collection::vec(0i64..=2, a), 0..=b), 0..=2),
        )
            .prop_map(move |(sigma_cuts, cuts)| Recipe {
                sigma_rank: a,
                tau_rank: b,
                sigma_cuts,
                cuts,
            })
    })
}

/// A list of failed checks; empty when every property holds.
pub fn check_properties(e: &TropicalExpansion) -> Vec<String> {
    let mut failures = Vec::new();
    let report = e.validate();
    if !report.report.violations.is_empty() {
        failures.push(format!("violations: {:?}", report.report.violations));
    }
    let tau_dim = e.tau().dim();
    for v in e.vertex_names() {
        failures.extend(section_identity(e, &v));
        let pm = position_map(e, &v).unwrap();
        let sa = stratum_action(e, &v).unwrap();
        if pm.matrix.matrix != sa.phi.matrix {
            failures.push(format!("{v}: stratum action differs from the position map"));
        }
    }
    for s in e.strata() {
        let sa = stratum_action(e, &s.name).unwrap();
        let sigma_dim = e.sigma().get(&s.sigma).unwrap().dim();
        let p_dim = e.omega(&s.name).unwrap().dim() - tau_dim;
        if sa.theta.dim != sigma_dim - p_dim {
            failures.push(format!(
                "{}: dim theta {} but dim sigma - dim P = {}",
                s.name,
                sa.theta.dim,
                sigma_dim - p_dim
            ));
        }
        failures.extend(splitting_independence(e, &s.name));
    }
    failures
}

/// `(φ_v(t), t)` is a lattice point of `ω_v` over `t`, and lies in `ω_v`
/// for `t` in `τ`.
pub fn section_identity(e: &TropicalExpansion, v: &str) -> Vec<String> {
    let mut out = Vec::new();
    let pm = position_map(e, v).unwrap();
    let omega = e.omega(v).unwrap();
    let t = e.tau().lattice_matrix();
    for j in 0..t.cols() {
        let mut x = pm.ambient.matrix.column(j);
        let tj = t.column(j);
        x.extend(tj.iter().cloned());
        if omega.lattice_coordinates(&x).is_none() {
            out.push(format!(
                "{v}: lift of basis vector {j} is not in the lattice of the vertex cone"
            ));
        }
        if e.p(&x) != tj {
            out.push(format!("{v}: p does not undo the lift of basis vector {j}"));
        }
    }
    for ray in e.tau().rays() {
        let coords = tropexp_core::linalg::solve_integral(&t, ray).unwrap();
        let mut x = pm.ambient.matrix.mul_vec(&coords);
        x.extend(ray.iter().cloned());
        if !omega.contains_vector(&x) {
            out.push(format!("{v}: lift of a ray of tau leaves the vertex cone"));
        }
    }
    out
}

/// `φ_P` computed from three different sections `s + K·X` agrees.
pub fn splitting_independence(e: &TropicalExpansion, name: &str) -> Vec<String> {
    let a = stratum_base_map(e, name).unwrap();
    let s = right_inverse(&a).unwrap();
    let k = kernel_basis(&a);
    let base = stratum_action(e, name).unwrap().phi.matrix;
    let mut out = Vec::new();
    let choices: [fn(usize, usize) -> i64; 3] = [
        |i, j| (i + j) as i64 + 1,
        |i, j| if (i + j) % 2 == 0 { -2 } else { 3 },
        |i, j| 5 * i as i64 - 7 * j as i64,
    ];
    for (n, f) in choices.iter().enumerate() {
        let x_rows: Vec<Vec<BigInt>> = (0..k.cols())
            .map(|i| (0..s.cols()).map(|j| int(f(i, j))).collect())
            .collect();
        let x = IntMatrix::from_row_vectors(s.cols(), &x_rows);
        let section = if k.cols() == 0 {
            s.clone()
        } else {
            let kx = &k * &x;
            let rows: Vec<Vec<BigInt>> = (0..s.rows())
                .map(|i| (0..s.cols()).map(|j| s.get(i, j) + kx.get(i, j)).collect())
                .collect();
            IntMatrix::from_row_vectors(s.cols(), &rows)
        };
        if &a * &section != IntMatrix::identity(a.rows()) {
            out.push(format!("{name}: section {n} is not a section"));
            continue;
        }
        let phi = stratum_action_with_section(e, name, Some(&section))
            .unwrap()
            .phi
            .matrix;
        if phi != base {
            out.push(format!("{name}: phi depends on the section (choice {n})"));
        }
    }
    out
}
