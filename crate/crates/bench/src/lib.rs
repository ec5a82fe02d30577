//! Inputs shared by the benchmarks.

use std::collections::BTreeMap;

use tropexp_core::complex::{cone_as_complex, product};
use tropexp_core::{
    corpus, load_str, BigInt, BigRational, Cone, ConeComplex, Model, TropicalExpansion,
};

/// Every corpus case that passes validation.
pub fn corpus_models() -> Vec<(&'static str, Model)> {
    corpus::CASES
        .iter()
        .filter_map(|c| load_str(c.input).ok().map(|m| (c.name, m)))
        .collect()
}

fn orthant(n: usize) -> Cone {
    let gens: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| BigInt::from((i == j) as i64)).collect())
        .collect();
    Cone::from_generators(n, &gens).expect("square identity")
}

/// The orthant of rank `sigma_rank` times a rank-2 orthant, star-subdivided
/// `cuts` times along rays `(s, e_k)`, giving a chain of expansions whose
/// size grows with `cuts`.
pub fn layered(sigma_rank: usize, cuts: usize) -> TropicalExpansion {
    let sigma =
        ConeComplex::build(sigma_rank, vec![(None, orthant(sigma_rank))]).expect("one cone");
    let labels = vec!["e1".to_string(), "e2".to_string()];
    let ray_labels: BTreeMap<Vec<BigInt>, String> = [
        (vec![BigInt::from(1), BigInt::from(0)], labels[0].clone()),
        (vec![BigInt::from(0), BigInt::from(1)], labels[1].clone()),
    ]
    .into_iter()
    .collect();
    let mut upsilon = product(&sigma, &cone_as_complex(&orthant(2), &ray_labels));
    for k in 0..cuts {
        let mut v: Vec<BigInt> = (0..sigma_rank)
            .map(|i| {
                BigInt::from(
                    ((i + k) % sigma_rank == 0) as i64 * (1 + k as i64 / sigma_rank as i64),
                )
            })
            .collect();
        v.push(BigInt::from((k % 2 == 0) as i64));
        v.push(BigInt::from((k % 2 == 1) as i64));
        upsilon = upsilon.star_subdivide(&v).expect("ray in the support");
    }
    TropicalExpansion::new(sigma, orthant(2), labels, upsilon, None)
        .expect("valid layered expansion")
}

/// The sum of the rays of `τ`, an interior point of the base.
pub fn interior_point(e: &TropicalExpansion) -> Vec<BigRational> {
    let mut f = vec![BigRational::from_integer(BigInt::from(0)); e.tau_rank()];
    for r in e.tau().rays() {
        for (fi, ri) in f.iter_mut().zip(r) {
            *fi += BigRational::from_integer(ri.clone());
        }
    }
    f
}
