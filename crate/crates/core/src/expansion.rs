//! Tropical expansions `p: Υ → τ` of a cone complex `Σ`.
//!
//! `Υ` lives in `N_Σ × N_τ`: the first `rank Σ` coordinates are the
//! `Σ`-coordinates (the projection `r`) and the last `rank τ` coordinates
//! are the base coordinates (the projection `p`).

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::complex::{
    cone_as_complex, product, validate_subdivision, Axiom, ComplexError, ConeComplex, PointDisplay,
    SubdivisionReport, Violation, Witness,
};
use crate::cone::{Cone, ConeError, RationalPoint};
use crate::linalg::{
    kernel_basis, lattice_basis, primitive, primitive_from_rational, saturation, solve_rational,
    to_rational, IntMatrix,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExpansionError {
    #[error("base point {0} is not in the base cone")]
    PointOutsideBase(PointDisplay),
    #[error("base point has {found} coordinates, the base cone has rank {expected}")]
    WrongBaseRank { expected: usize, found: usize },
    #[error("no underlying 1-complex vertices were supplied")]
    MissingOneComplex,
    #[error(
        "vertex {0} is not a bivalent vertex with opposite slopes and cannot be a tube vertex"
    )]
    InvalidTube(String),
    #[error("{0} is not a vertex of the expansion")]
    UnknownVertex(String),
    #[error("{0} is not a cone of the expansion")]
    UnknownCone(String),
    #[error("the base cone has {found} coordinate labels, expected {expected}")]
    LabelCount { expected: usize, found: usize },
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Cone(#[from] ConeError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TropicalExpansion {
    sigma: ConeComplex,
    tau: Cone,
    tau_labels: Vec<String>,
    tau_faces: ConeComplex,
    upsilon: ConeComplex,
    one_complex_vertices: Option<Vec<String>>,
    n_sigma: usize,
    n_tau: usize,
    /// Per cone of `Υ` (same indexing): the cone `p(ω)`.
    images: Vec<Cone>,
    /// Name of the face of `τ` equal to `p(ω)`, when it is one.
    image_faces: Vec<Option<String>>,
    /// The minimal cone of `Σ` containing `r(ω)`.
    sigma_cones: Vec<Option<String>>,
}

/// A row of the stratum index: a cone of `Υ` mapping onto `τ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stratum {
    pub name: String,
    pub dim: usize,
    pub sigma: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeVerdict {
    pub name: String,
    pub dim: usize,
    pub image_face: Option<String>,
    pub sigma: Option<String>,
    pub integral: bool,
    pub p_saturated: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionReport {
    pub report: SubdivisionReport,
    pub cones: Vec<ConeVerdict>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FibrePolyhedron {
    pub name: String,
    pub dim: usize,
    pub sigma: String,
    /// Vertices (named by their cones) with their positions in `N_Σ ⊗ Q`.
    pub vertices: Vec<(String, RationalPoint)>,
    pub recession: Vec<Vec<BigInt>>,
    /// Primitive integral slope of an edge, pointing from the first vertex
    /// to the second, or along the recession direction.
    pub slope: Option<Vec<BigInt>>,
    /// Names of the proper faces that are themselves fibre polyhedra.
    pub faces: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FibreComplex {
    pub base_point: RationalPoint,
    pub base_face: String,
    pub polyhedra: Vec<FibrePolyhedron>,
}

/// The combinatorial type of one polyhedron: its `Σ`-cone and the Hermite
/// basis of its lattice of directions.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct TypeEntry {
    pub name: String,
    pub sigma: String,
    pub slope_lattice: Vec<Vec<BigInt>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TubeReport {
    pub tube_vertices: Vec<String>,
    /// Bivalent vertices of the 1-complex; a map may not be a tube along these.
    pub bivalent_non_tube: Vec<String>,
}

impl TropicalExpansion {
    /// Assembles an expansion. Nothing is validated beyond the shapes; see
    /// [`TropicalExpansion::validate`]. Vertex cones without a supplied
    /// name are renamed `v0, v1, ...` in canonical order.
    pub fn new(
        sigma: ConeComplex,
        tau: Cone,
        tau_labels: Vec<String>,
        upsilon: ConeComplex,
        one_complex_vertices: Option<Vec<String>>,
    ) -> Result<TropicalExpansion, ExpansionError> {
        let n_sigma = sigma.ambient_rank();
        let n_tau = tau.ambient_rank();
        if tau_labels.len() != n_tau {
            return Err(ExpansionError::LabelCount {
                expected: n_tau,
                found: tau_labels.len(),
            });
        }
        if upsilon.ambient_rank() != n_sigma + n_tau {
            return Err(ConeError::WrongLength {
                expected: n_sigma + n_tau,
                found: upsilon.ambient_rank(),
            }
            .into());
        }
        let tau_faces = cone_as_complex(&tau, &tau_ray_labels(&tau, &tau_labels));
        let mut e = TropicalExpansion {
            sigma,
            tau,
            tau_labels,
            tau_faces,
            upsilon,
            one_complex_vertices,
            n_sigma,
            n_tau,
            images: Vec::new(),
            image_faces: Vec::new(),
            sigma_cones: Vec::new(),
        };
        e.cache();
        let mut renames = BTreeMap::new();
        let mut next = 0;
        let taken: BTreeSet<String> = e.upsilon.names().iter().cloned().collect();
        for i in 0..e.upsilon.len() {
            let (name, omega) = e.upsilon.cone_at(i);
            if e.image_faces[i].as_deref() == Some(e.top_face())
                && omega.dim() == e.tau.dim()
                && !e.upsilon.has_given_name(name)
            {
                let fresh = loop {
                    let cand = format!("v{next}");
                    next += 1;
                    if !taken.contains(&cand) {
                        break cand;
                    }
                };
                renames.insert(name.to_string(), fresh);
            }
        }
        if !renames.is_empty() {
            e.upsilon = e.upsilon.renamed(&renames)?;
        }
        if let Some(g) = &e.one_complex_vertices {
            let vertices = e.vertex_names();
            if let Some(bad) = g.iter().find(|v| !vertices.contains(v)) {
                return Err(ExpansionError::UnknownVertex(bad.clone()));
            }
        }
        Ok(e)
    }

    /// Base change along a linear map `m: N_τ' → N_τ` sending `tau` into `τ`.
    ///
    /// Every cone ω is replaced by `{(s, t') : t' ∈ tau, (s, m·t') ∈ ω}`.
    /// Supplied cone names carry over; when two named cones pull back to the
    /// same cone the first name in canonical order wins.
    /// Named cones are processed before unnamed ones so no name is lost to
    /// an anonymous duplicate.
    pub fn base_change(
        &self,
        tau: Cone,
        tau_labels: Vec<String>,
        m: &IntMatrix,
    ) -> Result<TropicalExpansion, ExpansionError> {
        let n_new = tau.ambient_rank();
        if m.rows() != self.n_tau || m.cols() != n_new {
            return Err(ConeError::WrongLength {
                expected: self.n_tau,
                found: m.rows(),
            }
            .into());
        }
        let ambient = self.n_sigma + n_new;
        let pull = |y: &Vec<BigInt>| -> Vec<BigInt> {
            let mut out = y[..self.n_sigma].to_vec();
            for j in 0..n_new {
                out.push(
                    (0..self.n_tau)
                        .map(|i| &y[self.n_sigma + i] * m.get(i, j))
                        .sum(),
                );
            }
            out
        };
        let lift = |y: &Vec<BigInt>| -> Vec<BigInt> {
            let mut out = vec![BigInt::zero(); self.n_sigma];
            out.extend(y.iter().cloned());
            out
        };
        let mut seen = BTreeSet::new();
        let mut cones = Vec::new();
        let mut input = self.upsilon.named_input();
        input.sort_by_key(|(name, _)| name.is_none());
        for (name, omega) in input {
            let mut ineqs: Vec<Vec<BigInt>> = omega.facet_normals().iter().map(pull).collect();
            ineqs.extend(tau.facet_normals().iter().map(lift));
            let mut eqs: Vec<Vec<BigInt>> = omega.equations().iter().map(pull).collect();
            eqs.extend(tau.equations().iter().map(lift));
            let cone = Cone::from_inequalities(ambient, &ineqs, &eqs);
            if seen.insert((
                cone.dim(),
                cone.rays().to_vec(),
                cone.lineality_basis().to_vec(),
            )) {
                cones.push((name, cone));
            }
        }
        let upsilon = ConeComplex::build(ambient, cones)?;
        let g = self.one_complex_vertices.clone().map(|g| {
            g.into_iter()
                .filter(|v| upsilon.has_given_name(v))
                .collect()
        });
        TropicalExpansion::new(self.sigma.clone(), tau, tau_labels, upsilon, g)
    }

    fn cache(&mut self) {
        let pm = self.p_matrix();
        self.images = self.upsilon.iter().map(|(_, c)| c.image(&pm)).collect();
        self.image_faces = self
            .images
            .iter()
            .map(|img| {
                if self.tau.is_face(img) {
                    self.tau_faces.name_of(img).map(str::to_string)
                } else {
                    None
                }
            })
            .collect();
        self.sigma_cones = self
            .upsilon
            .iter()
            .map(|(_, c)| {
                let x = self.r(&c.relative_interior_point());
                self.sigma.locate_vector(&x).map(str::to_string)
            })
            .collect();
    }

    pub fn sigma(&self) -> &ConeComplex {
        &self.sigma
    }

    pub fn tau(&self) -> &Cone {
        &self.tau
    }

    pub fn tau_labels(&self) -> &[String] {
        &self.tau_labels
    }

    /// The faces of `τ`, named `0` and `{e1,e2}` style.
    pub fn tau_faces(&self) -> &ConeComplex {
        &self.tau_faces
    }

    pub fn upsilon(&self) -> &ConeComplex {
        &self.upsilon
    }

    pub fn one_complex_vertices(&self) -> Option<&[String]> {
        self.one_complex_vertices.as_deref()
    }

    pub fn sigma_rank(&self) -> usize {
        self.n_sigma
    }

    pub fn tau_rank(&self) -> usize {
        self.n_tau
    }

    /// The projection `p` as an `n_τ × (n_Σ + n_τ)` matrix.
    pub fn p_matrix(&self) -> IntMatrix {
        let n = self.n_sigma + self.n_tau;
        let mut m = IntMatrix::zeros(self.n_tau, n);
        for i in 0..self.n_tau {
            m.set(i, self.n_sigma + i, BigInt::one());
        }
        m
    }

    /// The projection `r` as an `n_Σ × (n_Σ + n_τ)` matrix.
    pub fn r_matrix(&self) -> IntMatrix {
        let n = self.n_sigma + self.n_tau;
        let mut m = IntMatrix::zeros(self.n_sigma, n);
        for i in 0..self.n_sigma {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn p<T: Clone>(&self, x: &[T]) -> Vec<T> {
        x[self.n_sigma..].to_vec()
    }

    pub fn r<T: Clone>(&self, x: &[T]) -> Vec<T> {
        x[..self.n_sigma].to_vec()
    }

    fn top_face(&self) -> &str {
        self.tau_faces
            .name_of(&self.tau)
            .expect("tau is a face of itself")
    }

    fn index(&self, name: &str) -> Result<usize, ExpansionError> {
        self.upsilon
            .index_of(name)
            .ok_or_else(|| ExpansionError::UnknownCone(name.to_string()))
    }

    pub fn omega(&self, name: &str) -> Result<&Cone, ExpansionError> {
        self.upsilon
            .get(name)
            .ok_or_else(|| ExpansionError::UnknownCone(name.to_string()))
    }

    /// The face of `τ` that `ω` maps onto, if `p(ω)` is a face.
    pub fn image_face(&self, name: &str) -> Result<Option<&str>, ExpansionError> {
        Ok(self.image_faces[self.index(name)?].as_deref())
    }

    /// The minimal cone of `Σ` containing `r(ω)`.
    pub fn sigma_of(&self, name: &str) -> Result<Option<&str>, ExpansionError> {
        Ok(self.sigma_cones[self.index(name)?].as_deref())
    }

    /// Checks the subdivision axioms against `Σ × τ`, integrality and saturation of `p`.
    pub fn validate(&self) -> ExpansionReport {
        let prod = product(&self.sigma, &self.tau_faces);
        let sub = validate_subdivision(&self.upsilon, &prod);
        let mut violations = sub.violations.clone();
        let mut cones = Vec::new();
        let pm = self.p_matrix();
        for (i, (name, omega)) in self.upsilon.iter().enumerate() {
            let face = self.image_faces[i].clone();
            let integral = face.is_some();
            if !integral {
                violations.push(Violation {
                    cones: vec![name.to_string()],
                    axiom: Axiom::Integrality,
                    witness: Witness::Point(to_rational(&self.images[i].relative_interior_point())),
                });
            }
            let pushed = &pm * &omega.lattice_matrix();
            let p_saturated = match &face {
                Some(f) => {
                    let target = self.tau_faces.get(f).expect("face of tau");
                    lattice_basis(&pushed) == target.lattice_matrix()
                }
                None => false,
            };
            if integral && !p_saturated {
                violations.push(Violation {
                    cones: vec![name.to_string()],
                    axiom: Axiom::PSaturation,
                    witness: Witness::Matrix(pushed),
                });
            }
            cones.push(ConeVerdict {
                name: name.to_string(),
                dim: omega.dim(),
                image_face: face,
                sigma: self.sigma_cones[i].clone(),
                integral,
                p_saturated,
            });
        }
        let mut report = SubdivisionReport::from_violations(violations, sub.is_complete);
        if report.is_valid {
            report.notes.push(
                "integral and saturated: the associated family is flat with reduced fibres"
                    .to_string(),
            );
        }
        ExpansionReport { report, cones }
    }

    /// Cones of `Υ` mapping onto the face `face` of `τ`, in canonical order.
    fn cones_over(&self, face: &str) -> Vec<usize> {
        (0..self.upsilon.len())
            .filter(|&i| self.image_faces[i].as_deref() == Some(face))
            .collect()
    }

    /// The strata: cones `ω` with `p(ω) = τ`.
    pub fn strata(&self) -> Vec<Stratum> {
        let top = self.top_face().to_string();
        self.cones_over(&top)
            .into_iter()
            .map(|i| {
                let (name, omega) = self.upsilon.cone_at(i);
                Stratum {
                    name: name.to_string(),
                    dim: omega.dim() - self.tau.dim(),
                    sigma: self.sigma_cones[i].clone().unwrap_or_default(),
                }
            })
            .collect()
    }

    /// Names of the vertex strata, in canonical order.
    pub fn vertex_names(&self) -> Vec<String> {
        self.strata()
            .into_iter()
            .filter(|s| s.dim == 0)
            .map(|s| s.name)
            .collect()
    }

    /// Sample points in the relative interior of `τ`: the barycenter of its
    /// rays and two perturbations with denominators 2 and 3.
    pub fn interior_samples(&self) -> Vec<RationalPoint> {
        let rays = self.tau.rays();
        let mut bary = vec![BigRational::zero(); self.n_tau];
        if !rays.is_empty() {
            let k = BigRational::from_integer(BigInt::from(rays.len()));
            for r in rays {
                for (b, x) in bary.iter_mut().zip(r) {
                    *b += BigRational::from_integer(x.clone()) / &k;
                }
            }
        }
        let mut out = vec![bary.clone()];
        for (ray, den) in [(rays.first(), 2), (rays.last(), 3)] {
            let mut p = bary.clone();
            if let Some(r) = ray {
                for (b, x) in p.iter_mut().zip(r) {
                    *b += BigRational::new(x.clone(), BigInt::from(den));
                }
            }
            out.push(p);
        }
        out
    }

    /// Lattice of directions of the fibre polyhedron of `ω`: the kernel of
    /// `N_ω → N_τ`, as vectors of `N_Σ × N_τ` (their `p`-part is zero).
    pub fn kernel_in_omega(&self, name: &str) -> Result<IntMatrix, ExpansionError> {
        let omega = self.omega(name)?;
        let b = omega.lattice_matrix();
        let k = kernel_basis(&(&self.p_matrix() * &b));
        Ok(lattice_basis(&(&b * &k)))
    }

    /// Position in `N_Σ ⊗ Q` of the vertex of `ω ∩ p⁻¹(f)` given by the
    /// cone `vertex` (which must map isomorphically onto a face containing `f`).
    fn vertex_position(&self, vertex: &Cone, f: &[BigRational]) -> Option<RationalPoint> {
        let b = vertex.lattice_matrix();
        let a = solve_rational(&(&self.p_matrix() * &b), f)?;
        Some(self.r(&b.mul_rational_vec(&a)))
    }

    /// The fibre `p⁻¹(f)`, as a polyhedral complex in `N_Σ ⊗ Q`.
    pub fn fibre(&self, f: &[BigRational]) -> Result<FibreComplex, ExpansionError> {
        if f.len() != self.n_tau {
            return Err(ExpansionError::WrongBaseRank {
                expected: self.n_tau,
                found: f.len(),
            });
        }
        let Some(face) = self.tau_faces.locate(f) else {
            return Err(ExpansionError::PointOutsideBase(PointDisplay(f.to_vec())));
        };
        let face_dim = self.tau_faces.get(face).unwrap().dim();
        let over = self.cones_over(face);
        let over_names: BTreeSet<&str> = over.iter().map(|&i| self.upsilon.cone_at(i).0).collect();
        let mut polyhedra = Vec::new();
        for &i in &over {
            let (name, omega) = self.upsilon.cone_at(i);
            let mut vertices = Vec::new();
            let mut faces = Vec::new();
            for fname in self.upsilon.faces_of(name) {
                if fname == name || !over_names.contains(fname) {
                    continue;
                }
                faces.push(fname.to_string());
                let fc = self.upsilon.get(fname).unwrap();
                if fc.dim() == face_dim {
                    let pos = self
                        .vertex_position(fc, f)
                        .expect("vertex cones map isomorphically onto their face");
                    vertices.push((fname.to_string(), pos));
                }
            }
            if omega.dim() == face_dim {
                let pos = self
                    .vertex_position(omega, f)
                    .expect("vertex cones map isomorphically onto their face");
                vertices.push((name.to_string(), pos));
            }
            let recession: Vec<Vec<BigInt>> = omega
                .rays()
                .iter()
                .filter(|g| self.p(g).iter().all(Zero::is_zero))
                .map(|g| self.r(g))
                .collect();
            let dim = omega.dim() - face_dim;
            let slope = if dim != 1 {
                None
            } else if vertices.len() == 2 {
                let d: Vec<BigRational> = vertices[1]
                    .1
                    .iter()
                    .zip(&vertices[0].1)
                    .map(|(a, b)| a - b)
                    .collect();
                Some(primitive_from_rational(&d))
            } else {
                recession.first().map(|r| primitive(r))
            };
            polyhedra.push(FibrePolyhedron {
                name: name.to_string(),
                dim,
                sigma: self.sigma_cones[i].clone().unwrap_or_default(),
                vertices,
                recession,
                slope,
                faces,
            });
        }
        Ok(FibreComplex {
            base_point: f.to_vec(),
            base_face: face.to_string(),
            polyhedra,
        })
    }

    /// The subcomplex over the origin of `τ`, re-embedded in `N_Σ`.
    pub fn asymptotic_complex(&self) -> Result<ConeComplex, ExpansionError> {
        let zero = self
            .tau_faces
            .name_of(&Cone::zero(self.n_tau))
            .expect("zero face")
            .to_string();
        let rm = self.r_matrix();
        let mut cones = Vec::new();
        for i in self.cones_over(&zero) {
            let (name, omega) = self.upsilon.cone_at(i);
            let img = omega.image(&rm);
            let lattice: Vec<Vec<BigInt>> =
                omega.lattice_basis().iter().map(|b| self.r(b)).collect();
            let img = img.with_lattice(&lattice)?;
            cones.push((Some(name.to_string()), img));
        }
        Ok(ConeComplex::build(self.n_sigma, cones)?)
    }

    /// For every stratum, its `Σ`-cone and the Hermite basis of `r(K_P)`.
    pub fn combinatorial_type(&self) -> Vec<TypeEntry> {
        self.strata()
            .into_iter()
            .map(|s| {
                let k = self.kernel_in_omega(&s.name).expect("stratum exists");
                let pushed = &self.r_matrix() * &k;
                TypeEntry {
                    name: s.name,
                    sigma: s.sigma,
                    slope_lattice: lattice_basis(&pushed).columns(),
                }
            })
            .collect()
    }

    /// Edges of the fibre over an interior point of `τ` incident to `vertex`,
    /// with their slopes pointing away from it.
    pub fn incident_edges(
        &self,
        vertex: &str,
    ) -> Result<Vec<(String, Vec<BigInt>)>, ExpansionError> {
        if !self.vertex_names().iter().any(|v| v == vertex) {
            return Err(ExpansionError::UnknownVertex(vertex.to_string()));
        }
        let f = &self.interior_samples()[0];
        let fibre = self.fibre(f)?;
        let mut out = Vec::new();
        for p in fibre.polyhedra.iter().filter(|p| p.dim == 1) {
            if !p.faces.iter().any(|n| n == vertex) {
                continue;
            }
            let slope = p.slope.clone().unwrap_or_default();
            let outward = if p.vertices.len() == 2 && p.vertices[1].0 == vertex {
                slope.iter().map(|x| -x).collect()
            } else {
                slope
            };
            out.push((p.name.clone(), outward));
        }
        Ok(out)
    }

    /// Fibre vertices outside the underlying 1-complex, each checked to be
    /// bivalent with opposite outgoing slopes.
    pub fn tube_vertices(&self) -> Result<TubeReport, ExpansionError> {
        let g = self
            .one_complex_vertices
            .as_ref()
            .ok_or(ExpansionError::MissingOneComplex)?;
        let mut tube = Vec::new();
        let mut bivalent = Vec::new();
        for v in self.vertex_names() {
            let edges = self.incident_edges(&v)?;
            let straight =
                edges.len() == 2 && edges[0].1.iter().zip(&edges[1].1).all(|(a, b)| *a == -b);
            if g.contains(&v) {
                if edges.len() == 2 {
                    bivalent.push(v);
                }
            } else if straight {
                tube.push(v);
            } else {
                return Err(ExpansionError::InvalidTube(v));
            }
        }
        Ok(TubeReport {
            tube_vertices: tube,
            bivalent_non_tube: bivalent,
        })
    }
}

/// Labels for the rays of `τ`: a ray equal to the `i`-th coordinate vector
/// takes the `i`-th label; other rays are labelled by their coordinates.
fn tau_ray_labels(tau: &Cone, labels: &[String]) -> BTreeMap<Vec<BigInt>, String> {
    tau.rays()
        .iter()
        .map(|r| {
            let unit = r.iter().filter(|x| !x.is_zero()).count() == 1
                && r.iter().all(|x| x.is_zero() || x.is_one());
            let label = if unit {
                labels[r.iter().position(|x| x.is_one()).unwrap()].clone()
            } else {
                let parts: Vec<String> = r.iter().map(ToString::to_string).collect();
                format!("({})", parts.join(" "))
            };
            (r.clone(), label)
        })
        .collect()
}

impl FibreComplex {
    /// The combinatorial type read off the geometry of the fibre: the `Σ`-cone
    /// containing each polyhedron's interior, and the saturated lattice of
    /// its directions.
    pub fn combinatorial_type(&self, sigma: &ConeComplex) -> Vec<TypeEntry> {
        self.polyhedra
            .iter()
            .map(|p| {
                let n = sigma.ambient_rank();
                let mut centre = vec![BigRational::zero(); n];
                let k = BigRational::from_integer(BigInt::from(p.vertices.len().max(1)));
                for (_, v) in &p.vertices {
                    for (c, x) in centre.iter_mut().zip(v) {
                        *c += x / &k;
                    }
                }
                for r in &p.recession {
                    for (c, x) in centre.iter_mut().zip(r) {
                        *c += BigRational::from_integer(x.clone());
                    }
                }
                let located = sigma.locate(&centre).unwrap_or_default().to_string();
                let mut dirs: Vec<Vec<BigInt>> = p.recession.clone();
                if let Some((_, v0)) = p.vertices.first() {
                    for (_, v) in &p.vertices[1..] {
                        let d: Vec<BigRational> = v.iter().zip(v0).map(|(a, b)| a - b).collect();
                        dirs.push(primitive_from_rational(&d));
                    }
                }
                let slope_lattice = if dirs.is_empty() {
                    Vec::new()
                } else {
                    lattice_basis(&saturation(&IntMatrix::from_columns(n, &dirs))).columns()
                };
                TypeEntry {
                    name: p.name.clone(),
                    sigma: located,
                    slope_lattice,
                }
            })
            .collect()
    }

    pub fn get(&self, name: &str) -> Option<&FibrePolyhedron> {
        self.polyhedra.iter().find(|p| p.name == name)
    }

    /// Position of a vertex polyhedron.
    pub fn vertex_position(&self, name: &str) -> Option<&RationalPoint> {
        self.get(name)
            .filter(|p| p.dim == 0)
            .and_then(|p| p.vertices.first().map(|v| &v.1))
    }
}
