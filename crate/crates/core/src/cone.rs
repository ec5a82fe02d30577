//! Rational polyhedral cones with an integral structure.
//!
//! A [`Cone`] is stored in a canonical form so that structural equality is
//! equality of cones: extreme rays are primitive representatives modulo the
//! lineality space, the lineality space and the lattice are stored as column
//! Hermite bases, and facet normals are primitive vectors inside the linear
//! span. Cones need not be strictly convex.

use std::collections::BTreeSet;

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::linalg::{
    dot, dot_rational, is_zero_vec, kernel_basis, lattice_basis, lattice_intersection, primitive,
    primitive_from_rational, rank, restrict_lattice, saturation, solve_integral, IntMatrix,
};

/// A point of `N ⊗ Q`.
pub type RationalPoint = Vec<BigRational>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConeError {
    #[error("vector of length {found} in a cone of ambient rank {expected}")]
    WrongLength { expected: usize, found: usize },
    #[error("lattice basis does not span the linear span of the cone")]
    LatticeMismatch,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cone {
    ambient_rank: usize,
    dim: usize,
    rays: Vec<Vec<BigInt>>,
    lineality: Vec<Vec<BigInt>>,
    facets: Vec<Vec<BigInt>>,
    equations: Vec<Vec<BigInt>>,
    lattice: Vec<Vec<BigInt>>,
}

impl Cone {
    pub fn zero(ambient_rank: usize) -> Cone {
        Cone::from_generators(ambient_rank, &[]).expect("zero cone")
    }

    /// The cone generated by `generators`, with the saturated lattice of its span.
    pub fn from_generators(
        ambient_rank: usize,
        generators: &[Vec<BigInt>],
    ) -> Result<Cone, ConeError> {
        for g in generators {
            if g.len() != ambient_rank {
                return Err(ConeError::WrongLength {
                    expected: ambient_rank,
                    found: g.len(),
                });
            }
        }
        let gens: Vec<Vec<BigInt>> = generators
            .iter()
            .filter(|g| !is_zero_vec(g))
            .map(|g| primitive(g))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let gmat = IntMatrix::from_columns(ambient_rank, &gens);
        let span = saturation(&gmat);
        let dim = span.cols();
        let equations = kernel_basis(&gmat.transpose()).columns();
        let facets = facet_normals(&gens, &span);

        let constraints = IntMatrix::from_row_vectors(
            ambient_rank,
            &facets.iter().chain(&equations).cloned().collect::<Vec<_>>(),
        );
        let lineality = kernel_basis(&constraints);
        let rays = extreme_rays(&gens, &lineality, &constraints, ambient_rank);
        Ok(Cone {
            ambient_rank,
            dim,
            rays,
            lineality: lineality.columns(),
            facets,
            equations,
            lattice: span.columns(),
        })
    }

    pub fn from_i64(ambient_rank: usize, generators: &[Vec<i64>]) -> Result<Cone, ConeError> {
        let gens: Vec<Vec<BigInt>> = generators
            .iter()
            .map(|g| g.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        Cone::from_generators(ambient_rank, &gens)
    }

    /// Replaces the lattice `N_σ` by the one spanned by `basis`, which must be
    /// a full-rank lattice in the linear span of the cone.
    pub fn with_lattice(mut self, basis: &[Vec<BigInt>]) -> Result<Cone, ConeError> {
        if let Some(bad) = basis.iter().find(|b| b.len() != self.ambient_rank) {
            return Err(ConeError::WrongLength {
                expected: self.ambient_rank,
                found: bad.len(),
            });
        }
        let b = IntMatrix::from_columns(self.ambient_rank, basis);
        let in_span = b
            .columns()
            .iter()
            .all(|c| self.equations.iter().all(|e| dot(e, c).is_zero()));
        if !in_span || rank(&b) != self.dim {
            return Err(ConeError::LatticeMismatch);
        }
        self.lattice = lattice_basis(&b).columns();
        Ok(self)
    }

    /// The cone cut out by `inequalities · x >= 0` and `equations · x = 0`.
    pub fn from_inequalities(
        ambient_rank: usize,
        inequalities: &[Vec<BigInt>],
        equations: &[Vec<BigInt>],
    ) -> Cone {
        let ineqs: Vec<Vec<BigInt>> = inequalities
            .iter()
            .filter(|a| !is_zero_vec(a))
            .map(|a| primitive(a))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let eq_mat = IntMatrix::from_row_vectors(ambient_rank, equations);
        let all = IntMatrix::from_row_vectors(
            ambient_rank,
            &ineqs.iter().chain(equations).cloned().collect::<Vec<_>>(),
        );
        let lineality = kernel_basis(&all);
        let l = lineality.cols();
        let eq_rank = rank(&eq_mat);
        let mut gens: BTreeSet<Vec<BigInt>> = BTreeSet::new();
        for c in lineality.columns() {
            gens.insert(c.iter().map(|x| -x).collect());
            gens.insert(c);
        }
        // every extreme ray of the pointed part is cut out by the equations
        // together with n - l - 1 - rank(E) independent tight inequalities
        if ambient_rank > l + eq_rank {
            let k = ambient_rank - l - 1 - eq_rank;
            for subset in (0..ineqs.len()).combinations(k) {
                let mut rows: Vec<Vec<BigInt>> = equations.to_vec();
                rows.extend(subset.iter().map(|&i| ineqs[i].clone()));
                let sys = IntMatrix::from_row_vectors(ambient_rank, &rows);
                let ker = kernel_basis(&sys);
                if ker.cols() != l + 1 {
                    continue;
                }
                let Some(dir) = ker
                    .columns()
                    .iter()
                    .map(|c| reduce_mod_lineality(c, &lineality))
                    .find(|c| !is_zero_vec(c))
                else {
                    continue;
                };
                let signs: Vec<BigInt> = ineqs.iter().map(|a| dot(a, &dir)).collect();
                if signs.iter().all(|s| !s.is_negative()) {
                    gens.insert(dir);
                } else if signs.iter().all(|s| !s.is_positive()) {
                    gens.insert(dir.iter().map(|x| -x).collect());
                }
            }
        }
        let gens: Vec<_> = gens.into_iter().collect();
        Cone::from_generators(ambient_rank, &gens).expect("lengths checked")
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Extreme rays modulo the lineality space, primitive and sorted.
    pub fn rays(&self) -> &[Vec<BigInt>] {
        &self.rays
    }

    /// Hermite basis of `σ ∩ -σ`.
    pub fn lineality_basis(&self) -> &[Vec<BigInt>] {
        &self.lineality
    }

    pub fn lineality_rank(&self) -> usize {
        self.lineality.len()
    }

    pub fn is_strictly_convex(&self) -> bool {
        self.lineality.is_empty()
    }

    /// Primitive inner normals of the facets, each lying in the span of the cone.
    pub fn facet_normals(&self) -> &[Vec<BigInt>] {
        &self.facets
    }

    /// Basis of the linear forms vanishing on the span.
    pub fn equations(&self) -> &[Vec<BigInt>] {
        &self.equations
    }

    /// Hermite basis of the lattice `N_σ`.
    pub fn lattice_basis(&self) -> &[Vec<BigInt>] {
        &self.lattice
    }

    pub fn lattice_matrix(&self) -> IntMatrix {
        IntMatrix::from_columns(self.ambient_rank, &self.lattice)
    }

    /// True when `N_σ` is the full set of integral points of the span.
    pub fn has_saturated_lattice(&self) -> bool {
        lattice_basis(&saturation(&self.lattice_matrix())) == self.lattice_matrix()
    }

    /// A generating set: extreme rays, then the lineality basis in both directions.
    pub fn generators(&self) -> Vec<Vec<BigInt>> {
        let mut out = self.rays.clone();
        for l in &self.lineality {
            out.push(l.clone());
            out.push(l.iter().map(|x| -x).collect());
        }
        out
    }

    /// All linear forms that are `>= 0` exactly on the cone: the facet normals
    /// together with both signs of every equation.
    pub fn dual_description(&self) -> Vec<Vec<BigInt>> {
        let mut out = self.facets.clone();
        for e in &self.equations {
            out.push(e.clone());
            out.push(e.iter().map(|x| -x).collect());
        }
        out
    }

    pub fn contains_point(&self, x: &[BigRational]) -> bool {
        x.len() == self.ambient_rank
            && self.equations.iter().all(|e| dot_rational(e, x).is_zero())
            && self
                .facets
                .iter()
                .all(|n| !dot_rational(n, x).is_negative())
    }

    pub fn contains_vector(&self, x: &[BigInt]) -> bool {
        x.len() == self.ambient_rank
            && self.equations.iter().all(|e| dot(e, x).is_zero())
            && self.facets.iter().all(|n| !dot(n, x).is_negative())
    }

    pub fn in_relative_interior(&self, x: &[BigRational]) -> bool {
        x.len() == self.ambient_rank
            && self.equations.iter().all(|e| dot_rational(e, x).is_zero())
            && self.facets.iter().all(|n| dot_rational(n, x).is_positive())
    }

    /// An integral point in the relative interior: the sum of the extreme rays.
    pub fn relative_interior_point(&self) -> Vec<BigInt> {
        let mut acc = vec![BigInt::zero(); self.ambient_rank];
        for r in &self.rays {
            for (a, x) in acc.iter_mut().zip(r) {
                *a += x;
            }
        }
        acc
    }

    pub fn contains_cone(&self, other: &Cone) -> bool {
        other.generators().iter().all(|g| self.contains_vector(g))
    }

    /// Same support, regardless of lattice.
    pub fn same_support(&self, other: &Cone) -> bool {
        self.dim == other.dim && self.rays == other.rays && self.lineality == other.lineality
    }

    /// The face cut out by the forms in `normals`, with the inherited lattice.
    pub fn face_cut_by(&self, normals: &[Vec<BigInt>]) -> Cone {
        let tight = |g: &Vec<BigInt>| normals.iter().all(|n| dot(n, g).is_zero());
        let gens: Vec<Vec<BigInt>> = self.generators().into_iter().filter(tight).collect();
        let face = Cone::from_generators(self.ambient_rank, &gens).expect("same ambient rank");
        self.inherit_lattice(face)
    }

    /// Gives `sub` (a cone inside the span of `self`) the lattice `N_σ ∩ span(sub)`.
    fn inherit_lattice(&self, mut sub: Cone) -> Cone {
        if sub.dim == 0 {
            return sub;
        }
        let eqs = IntMatrix::from_row_vectors(self.ambient_rank, &sub.equations);
        sub.lattice = restrict_lattice(&self.lattice_matrix(), &eqs).columns();
        sub
    }

    /// True iff `f` is a face of `self` (including `self`), compared by support.
    pub fn is_face(&self, f: &Cone) -> bool {
        if f.ambient_rank != self.ambient_rank || !self.contains_cone(f) {
            return false;
        }
        let fgens = f.generators();
        let tight: Vec<Vec<BigInt>> = self
            .facets
            .iter()
            .filter(|n| fgens.iter().all(|g| dot(n, g).is_zero()))
            .cloned()
            .collect();
        self.face_cut_by(&tight).same_support(f)
    }

    /// All faces, each once, ordered by dimension and canonical key.
    pub fn faces(&self) -> Vec<Cone> {
        let mut seen: BTreeSet<Cone> = BTreeSet::new();
        let mut stack = vec![self.clone()];
        while let Some(c) = stack.pop() {
            if !seen.insert(c.clone()) {
                continue;
            }
            for n in c.facets.clone() {
                stack.push(c.face_cut_by(&[n]));
            }
        }
        seen.into_iter().collect()
    }

    pub fn intersect(&self, other: &Cone) -> Cone {
        assert_eq!(
            self.ambient_rank, other.ambient_rank,
            "ambient ranks differ"
        );
        let ineqs: Vec<_> = self.facets.iter().chain(&other.facets).cloned().collect();
        let eqs: Vec<_> = self
            .equations
            .iter()
            .chain(&other.equations)
            .cloned()
            .collect();
        let mut c = Cone::from_inequalities(self.ambient_rank, &ineqs, &eqs);
        if c.dim > 0 {
            let both = lattice_intersection(&self.lattice_matrix(), &other.lattice_matrix());
            let eq = IntMatrix::from_row_vectors(self.ambient_rank, &c.equations);
            c.lattice = restrict_lattice(&both, &eq).columns();
        }
        c
    }

    /// Coordinates of an integral vector of the span in the basis of `N_σ`.
    pub fn lattice_coordinates(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        solve_integral(&self.lattice_matrix(), v)
    }

    /// Image of the cone under a linear map (given as a matrix), with the
    /// saturated lattice of the image span.
    pub fn image(&self, map: &IntMatrix) -> Cone {
        let gens: Vec<_> = self.generators().iter().map(|g| map.mul_vec(g)).collect();
        Cone::from_generators(map.rows(), &gens).expect("map has the right shape")
    }
}

/// Canonical representative of `v` modulo the span of the Hermite basis
/// `lineality`: clear the pivot coordinates, then make primitive.
fn reduce_mod_lineality(v: &[BigInt], lineality: &IntMatrix) -> Vec<BigInt> {
    let mut x: Vec<BigRational> = v.iter().cloned().map(BigRational::from_integer).collect();
    for col in lineality.columns() {
        let Some(p) = col.iter().position(|c| !c.is_zero()) else {
            continue;
        };
        if x[p].is_zero() {
            continue;
        }
        let q = &x[p] / BigRational::from_integer(col[p].clone());
        for (xi, ci) in x.iter_mut().zip(&col) {
            *xi -= &q * BigRational::from_integer(ci.clone());
        }
    }
    primitive_from_rational(&x)
}

/// Facet normals of the cone generated by `gens`, taken inside the span
/// whose saturated basis is `span`.
fn facet_normals(gens: &[Vec<BigInt>], span: &IntMatrix) -> Vec<Vec<BigInt>> {
    let d = span.cols();
    if d == 0 {
        return Vec::new();
    }
    let n = span.rows();
    let mut out: BTreeSet<Vec<BigInt>> = BTreeSet::new();
    for subset in (0..gens.len()).combinations(d - 1) {
        let t = IntMatrix::from_row_vectors(
            n,
            &subset.iter().map(|&i| gens[i].clone()).collect::<Vec<_>>(),
        );
        let ker = kernel_basis(&(&t * span));
        if ker.cols() != 1 {
            continue;
        }
        let y = primitive(&span.mul_vec(&ker.column(0)));
        let vals: Vec<BigInt> = gens.iter().map(|g| dot(&y, g)).collect();
        if vals.iter().all(|v| !v.is_negative()) {
            out.insert(y);
        } else if vals.iter().all(|v| !v.is_positive()) {
            out.insert(y.iter().map(|x| -x).collect());
        }
    }
    out.into_iter().collect()
}

fn extreme_rays(
    gens: &[Vec<BigInt>],
    lineality: &IntMatrix,
    constraints: &IntMatrix,
    ambient_rank: usize,
) -> Vec<Vec<BigInt>> {
    if ambient_rank <= lineality.cols() {
        return Vec::new();
    }
    let target = ambient_rank - lineality.cols() - 1;
    let mut out = BTreeSet::new();
    for g in gens {
        let r = reduce_mod_lineality(g, lineality);
        if is_zero_vec(&r) {
            continue;
        }
        let tight: Vec<Vec<BigInt>> = constraints
            .row_vectors()
            .into_iter()
            .filter(|c| dot(c, &r).is_zero())
            .collect();
        if rank(&IntMatrix::from_row_vectors(ambient_rank, &tight)) == target {
            out.insert(r);
        }
    }
    out.into_iter().collect()
}

pub fn intersect(c1: &Cone, c2: &Cone) -> Cone {
    c1.intersect(c2)
}

pub fn is_face(f: &Cone, c: &Cone) -> bool {
    c.is_face(f)
}

pub fn contains_point(c: &Cone, x: &[BigRational]) -> bool {
    c.contains_point(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cone(n: usize, gens: &[Vec<i64>]) -> Cone {
        Cone::from_i64(n, gens).unwrap()
    }

    fn pt(v: &[i64]) -> RationalPoint {
        v.iter()
            .map(|&x| BigRational::from_integer(x.into()))
            .collect()
    }

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn orthant_basics() {
        let c = cone(2, &[vec![1, 0], vec![0, 1]]);
        assert_eq!(c.dim(), 2);
        assert_eq!(c.facet_normals(), &[big(&[0, 1]), big(&[1, 0])]);
        assert_eq!(c.faces().len(), 4);
        assert!(c.contains_point(&pt(&[1, 2])));
        assert!(!c.contains_point(&pt(&[-1, 2])));
    }

    #[test]
    fn line_has_lineality() {
        let c = cone(2, &[vec![1, 0], vec![-1, 0]]);
        assert_eq!(c.lineality_rank(), 1);
        assert!(c.rays().is_empty());
        assert!(c.facet_normals().is_empty());
        assert_eq!(c.faces().len(), 1);
    }

    #[test]
    fn ray_dual_description() {
        let c = cone(2, &[vec![1, 1]]);
        let dual = c.dual_description();
        assert!(dual.contains(&big(&[1, -1])));
        assert!(dual.contains(&big(&[-1, 1])));
        assert!(c.contains_point(&pt(&[1, 1])));
        assert!(!c.contains_point(&pt(&[-1, -1])));
        assert_eq!(c.faces().len(), 2);
    }

    #[test]
    fn zero_cone() {
        let z = Cone::zero(3);
        assert_eq!(z.dim(), 0);
        assert_eq!(z.equations().len(), 3);
        assert_eq!(z.faces().len(), 1);
        let o = cone(3, &[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        assert!(o.is_face(&z));
        assert_eq!(o.faces().len(), 8);
        assert_eq!(o.intersect(&z), z);
    }

    #[test]
    fn faces_of_orthant_are_faces() {
        let o = cone(2, &[vec![1, 0], vec![0, 1]]);
        assert!(o.is_face(&cone(2, &[vec![1, 0]])));
        assert!(!o.is_face(&cone(2, &[vec![1, 1]])));
        assert!(o.is_face(&o));
    }

    #[test]
    fn intersection_of_adjacent_cones() {
        let a = cone(2, &[vec![1, 0], vec![1, 1]]);
        let b = cone(2, &[vec![1, 1], vec![0, 1]]);
        assert_eq!(a.intersect(&b), cone(2, &[vec![1, 1]]));
        assert_eq!(a.intersect(&a), a);
    }

    #[test]
    fn half_plane() {
        let c = cone(2, &[vec![1, 0], vec![-1, 0], vec![0, 1]]);
        assert_eq!(c.lineality_rank(), 1);
        assert_eq!(c.rays(), &[big(&[0, 1])]);
        assert_eq!(c.facet_normals(), &[big(&[0, 1])]);
        assert_eq!(c.faces().len(), 2);
    }

    #[test]
    fn redundant_generators_dropped() {
        let c = cone(2, &[vec![1, 0], vec![0, 1], vec![1, 1], vec![2, 0]]);
        assert_eq!(c.rays(), &[big(&[0, 1]), big(&[1, 0])]);
    }

    #[test]
    fn inequalities_round_trip() {
        let c = cone(3, &[vec![1, 1, 1], vec![0, 1, 1]]);
        let back = Cone::from_inequalities(3, c.facet_normals(), c.equations());
        assert_eq!(back, c);
    }

    #[test]
    fn custom_lattice_is_inherited() {
        let c = cone(2, &[vec![1, 0], vec![0, 1]])
            .with_lattice(&[big(&[2, 0]), big(&[0, 1])])
            .unwrap();
        assert!(!c.has_saturated_lattice());
        let faces = c.faces();
        let x_axis = faces.iter().find(|f| f.rays() == [big(&[1, 0])]).unwrap();
        assert_eq!(x_axis.lattice_basis(), &[big(&[2, 0])]);
        assert!(cone(2, &[vec![1, 1]])
            .with_lattice(&[big(&[1, 0])])
            .is_err());
    }
}
