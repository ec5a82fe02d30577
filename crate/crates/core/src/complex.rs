//! Cone complexes embedded in a common lattice, and conical subdivisions.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use crate::cone::{Cone, RationalPoint};
use crate::linalg::{is_saturated_image, solve_integral, to_rational, IntMatrix};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComplexError {
    #[error("cones {first} and {second} meet improperly (witness {witness})")]
    ImproperIntersection {
        first: String,
        second: String,
        witness: PointDisplay,
    },
    #[error("cone name {0} is used twice")]
    DuplicateName(String),
    #[error("cone {name} has ambient rank {found}, expected {expected}")]
    WrongRank {
        name: String,
        expected: usize,
        found: usize,
    },
}

/// Rational vector with a compact `(a, b/c, ...)` display.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointDisplay(pub RationalPoint);

impl fmt::Display for PointDisplay {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Support key: cones with equal keys have equal supports.
type SupportKey = (usize, Vec<Vec<BigInt>>, Vec<Vec<BigInt>>);

fn support_key(c: &Cone) -> SupportKey {
    (c.dim(), c.rays().to_vec(), c.lineality_basis().to_vec())
}

#[derive(Clone, Debug)]
pub struct ConeComplex {
    ambient_rank: usize,
    names: Vec<String>,
    /// Whether the name of cone `i` was supplied rather than generated.
    given: Vec<bool>,
    cones: Vec<Cone>,
    /// `faces[i]` lists the indices of all faces of cone `i`, itself included.
    faces: Vec<Vec<usize>>,
    maximal: Vec<usize>,
    index: BTreeMap<String, usize>,
}

impl PartialEq for ConeComplex {
    fn eq(&self, other: &Self) -> bool {
        self.ambient_rank == other.ambient_rank
            && self.names == other.names
            && self.cones == other.cones
    }
}

impl Eq for ConeComplex {}

impl ConeComplex {
    /// Builds a complex from (optionally named) cones, adding all faces.
    ///
    /// Cones are stored in canonical order. Faces that were not named get
    /// generated names: `0` for the origin, `r0, r1, ...` for rays, and the
    /// bracketed list of ray names otherwise.
    pub fn build(
        ambient_rank: usize,
        input: Vec<(Option<String>, Cone)>,
    ) -> Result<ConeComplex, ComplexError> {
        let mut by_support: BTreeMap<SupportKey, (Option<String>, Cone)> = BTreeMap::new();
        let mut listed: Vec<SupportKey> = Vec::new();
        let mut used_names: BTreeSet<String> = BTreeSet::new();
        for (name, cone) in &input {
            if cone.ambient_rank() != ambient_rank {
                return Err(ComplexError::WrongRank {
                    name: name.clone().unwrap_or_default(),
                    expected: ambient_rank,
                    found: cone.ambient_rank(),
                });
            }
            if let Some(n) = name {
                if !used_names.insert(n.clone()) {
                    return Err(ComplexError::DuplicateName(n.clone()));
                }
            }
            let key = support_key(cone);
            match by_support.get_mut(&key) {
                Some(slot) => {
                    if slot.0.is_none() {
                        slot.0 = name.clone();
                    } else if name.is_some() {
                        // the same cone listed under two names
                        return Err(ComplexError::DuplicateName(name.clone().unwrap()));
                    }
                }
                None => {
                    by_support.insert(key.clone(), (name.clone(), cone.clone()));
                    listed.push(key);
                }
            }
        }
        for key in &listed {
            let cone = by_support[key].1.clone();
            for f in cone.faces() {
                by_support.entry(support_key(&f)).or_insert((None, f));
            }
        }

        let mut entries: Vec<(Option<String>, Cone)> = by_support.into_values().collect();
        entries.sort_by(|a, b| a.1.cmp(&b.1));
        let cones: Vec<Cone> = entries.iter().map(|e| e.1.clone()).collect();
        let given: Vec<bool> = entries.iter().map(|e| e.0.is_some()).collect();
        let names = generate_names(&entries, &used_names);
        let index: BTreeMap<String, usize> = names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), i))
            .collect();

        let pos: BTreeMap<SupportKey, usize> = cones
            .iter()
            .enumerate()
            .map(|(i, c)| (support_key(c), i))
            .collect();
        let faces: Vec<Vec<usize>> = cones
            .iter()
            .map(|c| {
                let mut v: Vec<usize> = c.faces().iter().map(|f| pos[&support_key(f)]).collect();
                v.sort_unstable();
                v
            })
            .collect();
        let mut is_proper_face = vec![false; cones.len()];
        for (i, fs) in faces.iter().enumerate() {
            for &j in fs {
                if j != i {
                    is_proper_face[j] = true;
                }
            }
        }
        let maximal: Vec<usize> = (0..cones.len()).filter(|&i| !is_proper_face[i]).collect();

        let complex = ConeComplex {
            ambient_rank,
            names,
            given,
            cones,
            faces,
            maximal,
            index,
        };
        complex.check_intersections()?;
        Ok(complex)
    }

    /// Builds a complex from named cones.
    pub fn from_named(
        ambient_rank: usize,
        cones: Vec<(String, Cone)>,
    ) -> Result<ConeComplex, ComplexError> {
        Self::build(
            ambient_rank,
            cones.into_iter().map(|(n, c)| (Some(n), c)).collect(),
        )
    }

    fn check_intersections(&self) -> Result<(), ComplexError> {
        for (a, &i) in self.maximal.iter().enumerate() {
            for &j in &self.maximal[a + 1..] {
                let (ci, cj) = (&self.cones[i], &self.cones[j]);
                let meet = ci.intersect(cj);
                if !ci.is_face(&meet) || !cj.is_face(&meet) {
                    return Err(ComplexError::ImproperIntersection {
                        first: self.names[i].clone(),
                        second: self.names[j].clone(),
                        witness: PointDisplay(to_rational(&meet.relative_interior_point())),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn len(&self) -> usize {
        self.cones.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cones.is_empty()
    }

    /// All cones with their names, in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = (&str, &Cone)> {
        self.names.iter().map(String::as_str).zip(&self.cones)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn get(&self, name: &str) -> Option<&Cone> {
        self.index.get(name).map(|&i| &self.cones[i])
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn cone_at(&self, i: usize) -> (&str, &Cone) {
        (&self.names[i], &self.cones[i])
    }

    /// Name of the cone with the same support as `c`, if it belongs to the complex.
    pub fn name_of(&self, c: &Cone) -> Option<&str> {
        let key = support_key(c);
        self.cones
            .iter()
            .position(|d| support_key(d) == key)
            .map(|i| self.names[i].as_str())
    }

    pub fn maximal_cones(&self) -> impl Iterator<Item = (&str, &Cone)> {
        self.maximal
            .iter()
            .map(|&i| (self.names[i].as_str(), &self.cones[i]))
    }

    /// Names of the faces of `name` (itself included), in canonical order.
    pub fn faces_of(&self, name: &str) -> Vec<&str> {
        self.index.get(name).map_or_else(Vec::new, |&i| {
            self.faces[i]
                .iter()
                .map(|&j| self.names[j].as_str())
                .collect()
        })
    }

    pub fn is_face_of(&self, face: &str, cone: &str) -> bool {
        match (self.index.get(face), self.index.get(cone)) {
            (Some(f), Some(c)) => self.faces[*c].contains(f),
            _ => false,
        }
    }

    /// The minimal cone containing `x`, if `x` lies in the support.
    pub fn locate(&self, x: &[BigRational]) -> Option<&str> {
        self.cones
            .iter()
            .position(|c| c.in_relative_interior(x))
            .map(|i| self.names[i].as_str())
    }

    pub fn locate_vector(&self, x: &[BigInt]) -> Option<&str> {
        self.locate(&to_rational(x))
    }

    pub fn contains_point(&self, x: &[BigRational]) -> bool {
        self.locate(x).is_some()
    }

    pub fn has_given_name(&self, name: &str) -> bool {
        self.index.get(name).is_some_and(|&i| self.given[i])
    }

    /// The cones needed to rebuild the complex: every cone with a supplied
    /// name and every maximal cone.
    pub fn named_input(&self) -> Vec<(Option<String>, Cone)> {
        (0..self.cones.len())
            .filter(|&i| self.given[i] || self.maximal.contains(&i))
            .map(|i| {
                (
                    self.given[i].then(|| self.names[i].clone()),
                    self.cones[i].clone(),
                )
            })
            .collect()
    }

    /// Renames cones; the new names count as supplied and generated names
    /// are recomputed from the current ray names.
    pub fn renamed(&self, map: &BTreeMap<String, String>) -> Result<ConeComplex, ComplexError> {
        let mut out = self.clone();
        for (old, new) in map {
            let Some(&i) = self.index.get(old) else {
                continue;
            };
            out.names[i] = new.clone();
            out.given[i] = true;
        }
        // generated names mention ray names, so regenerate them
        let entries: Vec<(Option<String>, Cone)> = out
            .names
            .iter()
            .zip(&out.given)
            .zip(&out.cones)
            .map(|((n, &g), c)| (g.then(|| n.clone()), c.clone()))
            .collect();
        let taken: BTreeSet<String> = entries.iter().filter_map(|e| e.0.clone()).collect();
        out.names = generate_names(&entries, &taken);
        out.index = BTreeMap::new();
        for (i, n) in out.names.iter().enumerate() {
            if out.index.insert(n.clone(), i).is_some() {
                return Err(ComplexError::DuplicateName(n.clone()));
            }
        }
        Ok(out)
    }

    /// The star subdivision at the ray spanned by `v`, which must lie in the support.
    ///
    /// Every cone containing `v` is replaced by the joins of `v` with its
    /// faces not containing `v`. All names are regenerated.
    pub fn star_subdivide(&self, v: &[BigInt]) -> Result<ConeComplex, ComplexError> {
        let mut out: Vec<(Option<String>, Cone)> = Vec::new();
        for &i in &self.maximal {
            let c = &self.cones[i];
            if !c.contains_vector(v) {
                out.push((None, c.clone()));
                continue;
            }
            for f in c.faces() {
                if f.contains_vector(v) {
                    continue;
                }
                let mut gens = f.generators();
                gens.push(v.to_vec());
                let joined =
                    Cone::from_generators(self.ambient_rank, &gens).expect("same ambient rank");
                out.push((None, joined));
            }
        }
        ConeComplex::build(self.ambient_rank, out)
    }
}

fn generate_names(entries: &[(Option<String>, Cone)], taken: &BTreeSet<String>) -> Vec<String> {
    let mut taken = taken.clone();
    let fresh = |base: String, taken: &mut BTreeSet<String>| {
        let mut candidate = base.clone();
        let mut k = 1;
        while taken.contains(&candidate) {
            candidate = format!("{base}#{k}");
            k += 1;
        }
        taken.insert(candidate.clone());
        candidate
    };
    let mut names: Vec<Option<String>> = entries.iter().map(|e| e.0.clone()).collect();
    let mut ray_names: BTreeMap<Vec<BigInt>, String> = BTreeMap::new();
    let mut next_ray = 0;
    for (slot, (_, cone)) in names.iter_mut().zip(entries) {
        let is_ray = cone.rays().len() == 1 && cone.lineality_rank() == 0;
        if is_ray && slot.is_none() {
            let n = fresh(format!("r{next_ray}"), &mut taken);
            next_ray += 1;
            *slot = Some(n);
        }
        if is_ray {
            ray_names.insert(cone.rays()[0].clone(), slot.clone().unwrap());
        }
    }
    let mut next_other = 0;
    for (slot, (_, cone)) in names.iter_mut().zip(entries) {
        if slot.is_some() {
            continue;
        }
        let base = if cone.dim() == 0 {
            "0".to_string()
        } else if cone.lineality_rank() == 0 {
            let parts: Vec<&str> = cone.rays().iter().map(|r| ray_names[r].as_str()).collect();
            format!("<{}>", parts.join(","))
        } else {
            next_other += 1;
            format!("c{}", next_other - 1)
        };
        *slot = Some(fresh(base, &mut taken));
    }
    names.into_iter().map(Option::unwrap).collect()
}

/// The product complex `Δ × T`, with cones `σ × φ` named `"σ×φ"`.
pub fn product(delta: &ConeComplex, tau: &ConeComplex) -> ConeComplex {
    let (n, m) = (delta.ambient_rank, tau.ambient_rank);
    let mut cones = Vec::new();
    for (dn, dc) in delta.iter() {
        for (tn, tc) in tau.iter() {
            let mut gens: Vec<Vec<BigInt>> = Vec::new();
            for g in dc.generators() {
                gens.push(
                    g.into_iter()
                        .chain(std::iter::repeat_n(BigInt::zero(), m))
                        .collect(),
                );
            }
            for h in tc.generators() {
                gens.push(std::iter::repeat_n(BigInt::zero(), n).chain(h).collect());
            }
            let mut lattice: Vec<Vec<BigInt>> = Vec::new();
            for b in dc.lattice_basis() {
                lattice.push(
                    b.iter()
                        .cloned()
                        .chain(std::iter::repeat_n(BigInt::zero(), m))
                        .collect(),
                );
            }
            for b in tc.lattice_basis() {
                lattice.push(
                    std::iter::repeat_n(BigInt::zero(), n)
                        .chain(b.iter().cloned())
                        .collect(),
                );
            }
            let c = Cone::from_generators(n + m, &gens)
                .expect("product generators have the right length")
                .with_lattice(&lattice)
                .expect("product lattice spans the product cone");
            cones.push((Some(format!("{dn}×{tn}")), c));
        }
    }
    ConeComplex::build(n + m, cones).expect("products of complexes are complexes")
}

/// Names the faces of a single cone: `0` for the origin and `{a,b}` for the
/// face spanned by the rays labelled `a`, `b`.
pub fn cone_as_complex(cone: &Cone, ray_labels: &BTreeMap<Vec<BigInt>, String>) -> ConeComplex {
    let named: Vec<(Option<String>, Cone)> = cone
        .faces()
        .into_iter()
        .map(|f| {
            let name = if f.dim() == 0 {
                "0".to_string()
            } else if f.is_strictly_convex() {
                let labels: Option<Vec<&str>> = f
                    .rays()
                    .iter()
                    .map(|r| ray_labels.get(r).map(String::as_str))
                    .collect();
                match labels {
                    Some(l) => format!("{{{}}}", l.join(",")),
                    None => return (None, f),
                }
            } else {
                return (None, f);
            };
            (Some(name), f)
        })
        .collect();
    ConeComplex::build(cone.ambient_rank(), named).expect("faces of one cone form a complex")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Axiom {
    Containment,
    LatticeSaturation,
    Integrality,
    PSaturation,
    ImproperIntersection,
}

impl Axiom {
    pub fn code(self) -> &'static str {
        match self {
            Axiom::Containment => "containment",
            Axiom::LatticeSaturation => "lattice_saturation",
            Axiom::Integrality => "integrality",
            Axiom::PSaturation => "p_saturation",
            Axiom::ImproperIntersection => "improper_intersection",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Witness {
    Point(Vec<BigRational>),
    Matrix(IntMatrix),
    Text(String),
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Violation {
    pub cones: Vec<String>,
    pub axiom: Axiom,
    pub witness: Witness,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubdivisionReport {
    pub is_valid: bool,
    pub is_complete: bool,
    pub violations: Vec<Violation>,
    pub notes: Vec<String>,
}

impl SubdivisionReport {
    pub fn from_violations(mut violations: Vec<Violation>, is_complete: bool) -> Self {
        violations.sort();
        violations.dedup();
        SubdivisionReport {
            is_valid: violations.is_empty(),
            is_complete,
            violations,
            notes: Vec::new(),
        }
    }
}

/// Checks that `upsilon` is a conical subdivision of `delta`, both given in the
/// same coordinates, and whether it is complete.
pub fn validate_subdivision(upsilon: &ConeComplex, delta: &ConeComplex) -> SubdivisionReport {
    let mut violations = Vec::new();
    if upsilon.ambient_rank != delta.ambient_rank {
        violations.push(Violation {
            cones: Vec::new(),
            axiom: Axiom::Containment,
            witness: Witness::Text(format!(
                "ambient ranks {} and {} differ",
                upsilon.ambient_rank, delta.ambient_rank
            )),
        });
        return SubdivisionReport::from_violations(violations, false);
    }
    for (name, omega) in upsilon.iter() {
        let relint = to_rational(&omega.relative_interior_point());
        let target = delta.locate(&relint).map(|t| (t, delta.get(t).unwrap()));
        let Some((tname, tcone)) = target.filter(|(_, t)| t.contains_cone(omega)) else {
            let outside = omega
                .generators()
                .into_iter()
                .find(|g| !delta.contains_point(&to_rational(g)))
                .map(|g| to_rational(&g))
                .unwrap_or(relint);
            violations.push(Violation {
                cones: vec![name.to_string()],
                axiom: Axiom::Containment,
                witness: Witness::Point(outside),
            });
            continue;
        };
        let basis = IntMatrix::from_columns(tcone.ambient_rank(), tcone.lattice_basis());
        let coords: Option<Vec<Vec<BigInt>>> = omega
            .lattice_basis()
            .iter()
            .map(|b| solve_integral(&basis, b))
            .collect();
        let ok = match &coords {
            Some(cols) => is_saturated_image(&IntMatrix::from_columns(tcone.dim(), cols)),
            None => false,
        };
        if !ok {
            violations.push(Violation {
                cones: vec![name.to_string(), tname.to_string()],
                axiom: Axiom::LatticeSaturation,
                witness: Witness::Matrix(IntMatrix::from_columns(
                    omega.ambient_rank(),
                    omega.lattice_basis(),
                )),
            });
        }
    }
    let complete = is_complete_cover(upsilon, delta);
    SubdivisionReport::from_violations(violations, complete)
}

/// True iff the support of `upsilon` covers the support of `delta`.
pub fn is_complete_cover(upsilon: &ConeComplex, delta: &ConeComplex) -> bool {
    delta.maximal_cones().all(|(_, d)| {
        let pieces: Vec<&Cone> = upsilon
            .maximal_cones()
            .map(|(_, c)| c)
            .filter(|c| c.dim() == d.dim() && d.contains_cone(c))
            .collect();
        region_covered(d, d.dim(), &pieces)
    })
}

/// Exact region subtraction: is `region` covered by the union of `pieces`,
/// up to sets of dimension below `dim`? All cones are closed, so this is
/// the same as actual covering.
fn region_covered(region: &Cone, dim: usize, pieces: &[&Cone]) -> bool {
    if region.dim() < dim {
        return true;
    }
    let Some((first, rest)) = pieces.split_first() else {
        return false;
    };
    let normals = first.facet_normals();
    let base_ineqs = region.facet_normals().to_vec();
    let eqs = region.equations().to_vec();
    for (i, n) in normals.iter().enumerate() {
        let mut ineqs = base_ineqs.clone();
        ineqs.push(n.iter().map(|x| -x).collect());
        ineqs.extend(normals[..i].iter().cloned());
        let piece = Cone::from_inequalities(region.ambient_rank(), &ineqs, &eqs);
        if piece.dim() == dim && !region_covered(&piece, dim, rest) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cone(n: usize, gens: &[Vec<i64>]) -> Cone {
        Cone::from_i64(n, gens).unwrap()
    }

    fn q(v: &[i64]) -> RationalPoint {
        v.iter()
            .map(|&x| BigRational::from_integer(x.into()))
            .collect()
    }

    fn orthant_complex() -> ConeComplex {
        ConeComplex::from_named(2, vec![("s".into(), cone(2, &[vec![1, 0], vec![0, 1]]))]).unwrap()
    }

    #[test]
    fn blowup_fan_has_six_cones() {
        let c = ConeComplex::from_named(
            2,
            vec![
                ("a".into(), cone(2, &[vec![1, 0], vec![1, 1]])),
                ("b".into(), cone(2, &[vec![1, 1], vec![0, 1]])),
            ],
        )
        .unwrap();
        assert_eq!(c.len(), 6);
        assert_eq!(c.maximal_cones().count(), 2);
    }

    #[test]
    fn overlap_is_rejected() {
        let err = ConeComplex::from_named(
            2,
            vec![
                ("a".into(), cone(2, &[vec![1, 0], vec![1, 1]])),
                ("b".into(), cone(2, &[vec![1, 0], vec![0, 1]])),
            ],
        )
        .unwrap_err();
        assert!(matches!(err, ComplexError::ImproperIntersection { .. }));
    }

    #[test]
    fn locate_in_orthant() {
        let c = orthant_complex();
        assert_eq!(c.locate(&q(&[0, 0])), Some("0"));
        assert_eq!(c.locate(&q(&[1, 1])), Some("s"));
        assert_eq!(c.locate(&q(&[-1, 0])), None);
        assert_eq!(c.len(), 4);
    }

    #[test]
    fn products() {
        let o = orthant_complex();
        assert_eq!(product(&o, &o).len(), 16);
        let zero = ConeComplex::from_named(0, vec![("0".into(), Cone::zero(0))]).unwrap();
        let p = product(&o, &zero);
        assert_eq!(p.len(), 4);
        assert!(p.get("s×0").is_some());
        let ray = ConeComplex::from_named(1, vec![("l".into(), cone(1, &[vec![1]]))]).unwrap();
        let quad = product(&ray, &ray);
        assert_eq!(quad.len(), 4);
        assert_eq!(quad.get("l×l").unwrap().dim(), 2);
    }

    #[test]
    fn subdivision_of_itself_is_complete() {
        let o = orthant_complex();
        let r = validate_subdivision(&o, &o);
        assert!(r.is_valid && r.is_complete);
    }

    #[test]
    fn star_subdivision_is_complete_subdivision() {
        let o = orthant_complex();
        let s = o
            .star_subdivide(&[BigInt::from(1), BigInt::from(1)])
            .unwrap();
        assert_eq!(s.maximal_cones().count(), 2);
        let r = validate_subdivision(&s, &o);
        assert!(r.is_valid && r.is_complete, "{r:?}");
    }

    #[test]
    fn partial_cover_is_not_complete() {
        let o = orthant_complex();
        let half =
            ConeComplex::from_named(2, vec![("a".into(), cone(2, &[vec![1, 0], vec![1, 1]]))])
                .unwrap();
        let r = validate_subdivision(&half, &o);
        assert!(r.is_valid);
        assert!(!r.is_complete);
    }

    #[test]
    fn index_two_lattice_is_flagged() {
        let o = orthant_complex();
        let thin = cone(2, &[vec![1, 0], vec![0, 1]])
            .with_lattice(&[
                vec![BigInt::from(2), BigInt::zero()],
                vec![BigInt::zero(), BigInt::from(1)],
            ])
            .unwrap();
        let u = ConeComplex::from_named(2, vec![("w".into(), thin)]).unwrap();
        let r = validate_subdivision(&u, &o);
        assert!(!r.is_valid);
        assert!(r
            .violations
            .iter()
            .any(|v| v.axiom == Axiom::LatticeSaturation));
    }

    #[test]
    fn outside_cone_is_flagged() {
        let o = orthant_complex();
        let u = ConeComplex::from_named(2, vec![("w".into(), cone(2, &[vec![-1, 1]]))]).unwrap();
        let r = validate_subdivision(&u, &o);
        assert_eq!(r.violations[0].axiom, Axiom::Containment);
    }

    #[test]
    fn generated_names() {
        let c = ConeComplex::build(2, vec![(None, cone(2, &[vec![1, 0], vec![0, 1]]))]).unwrap();
        let names: BTreeSet<&str> = c.names().iter().map(String::as_str).collect();
        assert_eq!(names, ["0", "r0", "r1", "<r0,r1>"].into_iter().collect());
    }
}
