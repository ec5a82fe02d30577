//! The rubber torus and its action: position maps of vertices and the
//! generalized data `(σ_P, K_P, θ_P, φ_P)` of every stratum.
//!
//! Matrices map the lattice of `τ` (in the coordinates of its Hermite
//! basis, which for an orthant is the standard one) into the lattice of a
//! cone of `Σ`. For a simplicial `σ` whose rays form a lattice basis, the
//! rays are used as basis, so entries are weights along the rays.

use num_bigint::BigInt;
use num_traits::{One, Signed};
use thiserror::Error;

use crate::cone::Cone;
use crate::expansion::{ExpansionError, TropicalExpansion};
use crate::linalg::{
    kernel_basis, quotient_by, right_inverse, solve_integral, IntMatrix, LinalgError,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RubberError {
    #[error(
        "{0} is not a vertex cone: p does not map its lattice isomorphically onto that of the base"
    )]
    NotAVertexCone(String),
    #[error("{0} is not a stratum: it does not map onto the base cone")]
    NotAStratum(String),
    #[error("lattice computation failed for {0}: {1}")]
    Lattice(String, LinalgError),
    #[error(transparent)]
    Expansion(#[from] ExpansionError),
}

/// A matrix with labelled rows and columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelledMatrix {
    pub row_labels: Vec<String>,
    pub col_labels: Vec<String>,
    pub matrix: IntMatrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RubberTorus {
    pub rank: usize,
    pub basis_labels: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositionMap {
    pub vertex: String,
    pub sigma_v: String,
    /// `N_τ → N_{σ_v}` in the chosen basis of `N_{σ_v}`.
    pub matrix: LabelledMatrix,
    /// The same map into `N_Σ`.
    pub ambient: LabelledMatrix,
    /// True when the rows are the rays of a simplicial unimodular `σ_v`.
    pub per_ray: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaCone {
    pub quotient_rank: usize,
    pub dim: usize,
    /// Images of the generators of `σ_P` in `N_{σ_P}/K_P`.
    pub generators: Vec<Vec<BigInt>>,
    pub strictly_convex: bool,
    pub cone: Cone,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StratumAction {
    pub polyhedron: String,
    pub dim: usize,
    pub sigma_p: String,
    /// Basis of `K_P` in the chosen basis of `N_{σ_P}` (columns).
    pub k_p: LabelledMatrix,
    /// The quotient map `N_{σ_P} → N_{θ_P}`.
    pub projection: LabelledMatrix,
    pub theta: ThetaCone,
    /// `φ_P : N_τ → N_{θ_P}`.
    pub phi: LabelledMatrix,
    pub trivial: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Injectivity {
    pub holds: bool,
    pub witness: Option<Vec<BigInt>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JoinDivisor {
    pub edge: String,
    pub vertices: (String, String),
    pub trivial: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RubberReport {
    pub torus: RubberTorus,
    pub position_maps: Vec<PositionMap>,
    pub strata: Vec<StratumAction>,
    pub injectivity: Injectivity,
    pub join_divisors: Vec<JoinDivisor>,
    pub trivial_strata: Vec<String>,
    pub nontrivial_strata: Vec<String>,
    pub notes: Vec<String>,
}

/// A basis of `N_σ` with labels: the rays when `σ` is simplicial and they
/// form a lattice basis, otherwise the Hermite basis.
pub struct SigmaBasis {
    pub labels: Vec<String>,
    pub basis: IntMatrix,
    pub per_ray: bool,
}

pub fn sigma_basis(e: &TropicalExpansion, sigma_name: &str) -> SigmaBasis {
    let sigma = e.sigma().get(sigma_name).expect("cone of sigma");
    let n = e.sigma_rank();
    let rays = sigma.rays();
    if sigma.is_strictly_convex() && rays.len() == sigma.dim() {
        let mut ordered = rays.to_vec();
        ordered.sort_by(|a, b| b.cmp(a));
        let m = IntMatrix::from_columns(n, &ordered);
        let lattice = sigma.lattice_matrix();
        let coords: Option<Vec<Vec<BigInt>>> = ordered
            .iter()
            .map(|r| solve_integral(&lattice, r))
            .collect();
        let unimodular = coords.is_some_and(|c| {
            IntMatrix::from_columns(sigma.dim(), &c)
                .determinant()
                .is_ok_and(|d| d.abs().is_one())
        });
        if unimodular {
            let labels = ordered
                .iter()
                .map(|r| {
                    let ray = Cone::from_generators(n, std::slice::from_ref(r)).unwrap();
                    e.sigma().name_of(&ray).unwrap_or("?").to_string()
                })
                .collect();
            return SigmaBasis {
                labels,
                basis: m,
                per_ray: true,
            };
        }
    }
    SigmaBasis {
        labels: (0..sigma.dim()).map(|i| format!("b{i}")).collect(),
        basis: sigma.lattice_matrix(),
        per_ray: false,
    }
}

impl SigmaBasis {
    fn coords(&self, v: &[BigInt]) -> Vec<BigInt> {
        solve_integral(&self.basis, v).expect("vector lies in the lattice of the cone")
    }

    fn coords_matrix(&self, m: &IntMatrix) -> IntMatrix {
        let cols: Vec<Vec<BigInt>> = m.columns().iter().map(|c| self.coords(c)).collect();
        IntMatrix::from_columns(self.basis.cols(), &cols)
    }
}

/// Labels for the coordinates of `N_τ` used as matrix columns.
fn tau_labels(e: &TropicalExpansion) -> Vec<String> {
    let t = e.tau().lattice_matrix();
    if t.is_identity() {
        e.tau_labels().to_vec()
    } else {
        (0..t.cols()).map(|i| format!("t{i}")).collect()
    }
}

/// `p(W)` in the coordinates of the lattice of `τ`.
fn base_coords(e: &TropicalExpansion, w: &IntMatrix) -> IntMatrix {
    let t = e.tau().lattice_matrix();
    let pw = &e.p_matrix() * w;
    let cols: Vec<Vec<BigInt>> = pw
        .columns()
        .iter()
        .map(|c| solve_integral(&t, c).expect("p maps into the lattice of tau"))
        .collect();
    IntMatrix::from_columns(t.cols(), &cols)
}

pub fn rubber_torus(e: &TropicalExpansion) -> RubberTorus {
    RubberTorus {
        rank: e.tau().dim(),
        basis_labels: tau_labels(e),
    }
}

pub fn position_map(e: &TropicalExpansion, v: &str) -> Result<PositionMap, RubberError> {
    let not_vertex = || RubberError::NotAVertexCone(v.to_string());
    let omega = e.omega(v)?;
    if omega.dim() != e.tau().dim() {
        return Err(not_vertex());
    }
    let w = omega.lattice_matrix();
    let a = base_coords(e, &w);
    if a.rows() != a.cols() || !a.determinant().is_ok_and(|d| d.abs().is_one()) {
        return Err(not_vertex());
    }
    let inv = right_inverse(&a).map_err(|_| not_vertex())?;
    let ambient = &(&e.r_matrix() * &w) * &inv;
    let sigma_v = e.sigma_of(v)?.ok_or_else(not_vertex)?.to_string();
    let basis = sigma_basis(e, &sigma_v);
    let cols = tau_labels(e);
    Ok(PositionMap {
        vertex: v.to_string(),
        sigma_v,
        matrix: LabelledMatrix {
            row_labels: basis.labels.clone(),
            col_labels: cols.clone(),
            matrix: basis.coords_matrix(&ambient),
        },
        ambient: LabelledMatrix {
            row_labels: (0..e.sigma_rank()).map(|i| format!("x{i}")).collect(),
            col_labels: cols,
            matrix: ambient,
        },
        per_ray: basis.per_ray,
    })
}

/// The weights of the rubber action on the component of `v`: the position
/// map, with rows labelled by the rays of `σ_v` when that makes sense.
pub fn rubber_weights(e: &TropicalExpansion, v: &str) -> Result<LabelledMatrix, RubberError> {
    Ok(position_map(e, v)?.matrix)
}

/// Computes the stratum data using the section `section` of
/// `N_ω → N_τ` (in lattice coordinates on both sides), or a canonical one.
pub fn stratum_action_with_section(
    e: &TropicalExpansion,
    name: &str,
    section: Option<&IntMatrix>,
) -> Result<StratumAction, RubberError> {
    let stratum = e
        .strata()
        .into_iter()
        .find(|s| s.name == name)
        .ok_or_else(|| {
            if e.upsilon().get(name).is_some() {
                RubberError::NotAStratum(name.to_string())
            } else {
                RubberError::Expansion(ExpansionError::UnknownCone(name.to_string()))
            }
        })?;
    let lat = |err| RubberError::Lattice(name.to_string(), err);
    let omega = e.omega(name)?;
    let w = omega.lattice_matrix();
    let a = base_coords(e, &w);
    let k = kernel_basis(&a);
    let basis = sigma_basis(e, &stratum.sigma);
    let r = e.r_matrix();
    let k_sigma = basis.coords_matrix(&(&r * &(&w * &k)));
    let q = quotient_by(&k_sigma, basis.basis.cols()).map_err(lat)?;
    let s = match section {
        Some(s) => s.clone(),
        None => right_inverse(&a).map_err(lat)?,
    };
    let lifted = basis.coords_matrix(&(&r * &(&w * &s)));
    let phi = &q.projection * &lifted;

    let sigma_cone = e.sigma().get(&stratum.sigma).expect("cone of sigma");
    let gens: Vec<Vec<BigInt>> = sigma_cone
        .generators()
        .iter()
        .map(|g| q.projection.mul_vec(&basis.coords(g)))
        .collect();
    let theta_cone = Cone::from_generators(q.quotient_rank, &gens).expect("quotient rank");
    let theta = ThetaCone {
        quotient_rank: q.quotient_rank,
        dim: theta_cone.dim(),
        generators: gens,
        strictly_convex: theta_cone.is_strictly_convex(),
        cone: theta_cone,
    };
    let qlabels: Vec<String> = (0..q.quotient_rank).map(|i| format!("q{i}")).collect();
    let cols = tau_labels(e);
    Ok(StratumAction {
        polyhedron: name.to_string(),
        dim: stratum.dim,
        sigma_p: stratum.sigma.clone(),
        k_p: LabelledMatrix {
            row_labels: basis.labels.clone(),
            col_labels: (0..k_sigma.cols()).map(|i| format!("k{i}")).collect(),
            matrix: k_sigma,
        },
        projection: LabelledMatrix {
            row_labels: qlabels.clone(),
            col_labels: basis.labels,
            matrix: q.projection,
        },
        trivial: phi.is_zero(),
        phi: LabelledMatrix {
            row_labels: qlabels,
            col_labels: cols,
            matrix: phi,
        },
        theta,
    })
}

pub fn stratum_action(e: &TropicalExpansion, name: &str) -> Result<StratumAction, RubberError> {
    stratum_action_with_section(e, name, None)
}

/// The lattice map `N_ω → N_τ` of a stratum, in lattice coordinates; its
/// sections are the valid inputs of [`stratum_action_with_section`].
pub fn stratum_base_map(e: &TropicalExpansion, name: &str) -> Result<IntMatrix, RubberError> {
    let omega = e.omega(name)?;
    Ok(base_coords(e, &omega.lattice_matrix()))
}

/// Whether the stacked position maps of all vertices are jointly injective.
pub fn product_injectivity(e: &TropicalExpansion) -> Result<Injectivity, RubberError> {
    let d = e.tau().dim();
    let mut stacked = IntMatrix::zeros(0, d);
    for v in e.vertex_names() {
        stacked = stacked.vstack(&position_map(e, &v)?.ambient.matrix);
    }
    let k = kernel_basis(&stacked);
    Ok(Injectivity {
        holds: k.cols() == 0,
        witness: (k.cols() > 0).then(|| k.column(0)),
    })
}

pub fn rubber_report(e: &TropicalExpansion) -> Result<RubberReport, RubberError> {
    let torus = rubber_torus(e);
    let strata_list = e.strata();
    let mut position_maps = Vec::new();
    for s in strata_list.iter().filter(|s| s.dim == 0) {
        position_maps.push(position_map(e, &s.name)?);
    }
    let mut strata = Vec::new();
    for s in &strata_list {
        strata.push(stratum_action(e, &s.name)?);
    }
    let injectivity = product_injectivity(e)?;

    let mut join_divisors = Vec::new();
    let vertex_names: Vec<String> = position_maps.iter().map(|p| p.vertex.clone()).collect();
    for action in strata.iter().filter(|a| a.dim == 1) {
        let ends: Vec<String> = e
            .upsilon()
            .faces_of(&action.polyhedron)
            .into_iter()
            .filter(|f| vertex_names.iter().any(|v| v == f))
            .map(str::to_string)
            .collect();
        if let [a, b] = ends.as_slice() {
            join_divisors.push(JoinDivisor {
                edge: action.polyhedron.clone(),
                vertices: (a.clone(), b.clone()),
                trivial: action.trivial,
            });
        }
    }
    let trivial_strata = strata
        .iter()
        .filter(|a| a.trivial)
        .map(|a| a.polyhedron.clone())
        .collect();
    let nontrivial_strata = strata
        .iter()
        .filter(|a| !a.trivial)
        .map(|a| a.polyhedron.clone())
        .collect();
    let mut notes = Vec::new();
    for a in &strata {
        if !a.theta.strictly_convex {
            notes.push(format!(
                "theta of {} is not strictly convex: the image of {} in a rank-{} quotient has lineality rank {}",
                a.polyhedron,
                a.sigma_p,
                a.theta.quotient_rank,
                a.theta.cone.lineality_rank()
            ));
        }
    }
    if !injectivity.holds {
        notes.push(
            "the rubber torus acts trivially on every component along the witness direction"
                .to_string(),
        );
    }
    Ok(RubberReport {
        torus,
        position_maps,
        strata,
        injectivity,
        join_divisors,
        trivial_strata,
        nontrivial_strata,
        notes,
    })
}

impl LabelledMatrix {
    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn entry(&self, row: &str, col: &str) -> Option<&BigInt> {
        let i = self.row_labels.iter().position(|r| r == row)?;
        let j = self.col_labels.iter().position(|c| c == col)?;
        Some(self.matrix.get(i, j))
    }
}
