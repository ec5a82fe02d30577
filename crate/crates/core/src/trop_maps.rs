//! Tropical maps into a fibre of an expansion, and the combinatorial
//! stability check: meeting every stratum, tubes exactly along tube
//! vertices, and a proxy for the usual stability of components.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::cone::RationalPoint;
use crate::expansion::{ExpansionError, TropicalExpansion};
use crate::linalg::{dot_rational, is_zero_vec, primitive};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MapError {
    #[error("fibre vertex {0} is not bivalent")]
    NotBivalent(String),
    #[error(transparent)]
    Expansion(#[from] ExpansionError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapVertex {
    pub name: String,
    /// The fibre polyhedron (a cone of `Υ`) the vertex maps into.
    pub target: String,
    pub position: RationalPoint,
    pub genus: u32,
    pub marks: u32,
    /// Asserted stability of the composite map of this component; not
    /// decidable from tropical data.
    pub geometrically_stable: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapEdge {
    pub name: String,
    pub from: String,
    /// `None` for an unbounded end.
    pub to: Option<String>,
    pub slope: Vec<BigInt>,
    /// `None` for an unbounded end.
    pub length: Option<BigRational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapLeg {
    pub name: String,
    pub vertex: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TropicalMap {
    pub name: String,
    pub base_point: RationalPoint,
    pub vertices: Vec<MapVertex>,
    pub edges: Vec<MapEdge>,
    pub legs: Vec<MapLeg>,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Finding {
    pub code: String,
    pub subject: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapReport {
    pub is_valid: bool,
    pub findings: Vec<Finding>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ReasonCode {
    MissedStratum,
    TubeAlongNonTube,
    NotTubeAlongTube,
    UnstableComponent,
}

impl ReasonCode {
    pub fn as_str(self) -> &'static str {
        match self {
            ReasonCode::MissedStratum => "MissedStratum",
            ReasonCode::TubeAlongNonTube => "TubeAlongNonTube",
            ReasonCode::NotTubeAlongTube => "NotTubeAlongTube",
            ReasonCode::UnstableComponent => "UnstableComponent",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Reason {
    pub code: ReasonCode,
    pub subject: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilityVerdict {
    pub stable: bool,
    pub reasons: Vec<Reason>,
    pub notes: Vec<String>,
}

const ASSUMPTIONS: [&str; 4] = [
    "stability of each component in the usual sense is taken from the geometrically_stable decoration",
    "legs and marks count as special points when testing semistability",
    "balancing is only enforced at map vertices over bivalent fibre vertices",
    "finiteness of automorphisms is not computed",
];

impl TropicalMap {
    pub fn vertex(&self, name: &str) -> Option<&MapVertex> {
        self.vertices.iter().find(|v| v.name == name)
    }

    /// Outgoing slopes of the edges at a vertex; a loop contributes twice.
    pub fn outgoing_slopes(&self, vertex: &str) -> Vec<Vec<BigInt>> {
        let mut out = Vec::new();
        for e in &self.edges {
            if e.from == vertex {
                out.push(e.slope.clone());
            }
            if e.to.as_deref() == Some(vertex) {
                out.push(e.slope.iter().map(|x| -x).collect());
            }
        }
        out
    }

    pub fn special_points(&self, vertex: &str) -> usize {
        let legs = self.legs.iter().filter(|l| l.vertex == vertex).count();
        let marks = self.vertex(vertex).map_or(0, |v| v.marks as usize);
        self.outgoing_slopes(vertex).len() + legs + marks
    }

    /// Start and (for bounded edges) end point of an edge.
    fn segment(&self, e: &MapEdge) -> Option<(RationalPoint, Option<BigRational>)> {
        let start = self.vertex(&e.from)?.position.clone();
        Some((start, e.length.clone()))
    }
}

fn lift(e: &TropicalExpansion, x: &[BigRational], f: &[BigRational]) -> RationalPoint {
    debug_assert_eq!(x.len(), e.sigma_rank());
    x.iter().chain(f).cloned().collect()
}

fn add_scaled(x: &[BigRational], t: &BigRational, s: &[BigInt]) -> RationalPoint {
    x.iter()
        .zip(s)
        .map(|(a, b)| a + t * BigRational::from_integer(b.clone()))
        .collect()
}

/// Points of a segment (or ray) where the cone of `Υ` containing it may
/// change, together with the midpoints between them and one point beyond
/// the last for rays. Locating these covers the whole segment exactly.
fn sample_parameters(
    e: &TropicalExpansion,
    start: &[BigRational],
    slope: &[BigInt],
    length: Option<&BigRational>,
    f: &[BigRational],
) -> Vec<BigRational> {
    let base = lift(e, start, f);
    let dir: Vec<BigRational> = slope
        .iter()
        .cloned()
        .map(BigRational::from_integer)
        .chain(std::iter::repeat_n(BigRational::zero(), e.tau_rank()))
        .collect();
    let mut breaks: BTreeSet<BigRational> = BTreeSet::new();
    breaks.insert(BigRational::zero());
    if let Some(l) = length {
        breaks.insert(l.clone());
    }
    for (_, c) in e.upsilon().iter() {
        for n in c.facet_normals().iter().chain(c.equations()) {
            let a = dot_rational(n, &base);
            let b = dot_rational(n, &dir);
            if b.is_zero() {
                continue;
            }
            let t = -a / b;
            let inside = !t.is_negative() && length.is_none_or(|l| t <= *l);
            if inside {
                breaks.insert(t);
            }
        }
    }
    let sorted: Vec<BigRational> = breaks.into_iter().collect();
    let mut out = sorted.clone();
    for w in sorted.windows(2) {
        out.push((&w[0] + &w[1]) / BigRational::from_integer(BigInt::from(2)));
    }
    if length.is_none() {
        out.push(sorted.last().cloned().unwrap_or_default() + BigRational::one());
    }
    out.sort();
    out
}

/// Cones of `Υ` met by the edge, or `None` if it leaves the support.
fn edge_incidence(
    e: &TropicalExpansion,
    m: &TropicalMap,
    edge: &MapEdge,
) -> Option<Option<BTreeSet<String>>> {
    let (start, length) = m.segment(edge)?;
    let mut met = BTreeSet::new();
    for t in sample_parameters(e, &start, &edge.slope, length.as_ref(), &m.base_point) {
        let x = add_scaled(&start, &t, &edge.slope);
        match e.upsilon().locate(&lift(e, &x, &m.base_point)) {
            Some(name) => {
                met.insert(name.to_string());
            }
            None => return Some(None),
        }
    }
    Some(Some(met))
}

/// Checks positions, edge arithmetic, slope lattices and the support.
pub fn validate_map(e: &TropicalExpansion, m: &TropicalMap) -> MapReport {
    let mut findings = Vec::new();
    let mut push = |code: &str, subject: &str, detail: String| {
        findings.push(Finding {
            code: code.to_string(),
            subject: subject.to_string(),
            detail,
        })
    };
    let f = &m.base_point;
    if f.len() != e.tau_rank() || !e.tau().in_relative_interior(f) {
        push(
            "base_point_not_interior",
            &m.name,
            "the base point must lie in the relative interior of the base cone".into(),
        );
        return finish(findings);
    }
    let mut names = BTreeSet::new();
    for v in &m.vertices {
        if !names.insert(v.name.clone()) {
            push("duplicate_vertex", &v.name, "vertex name used twice".into());
        }
        if v.position.len() != e.sigma_rank() {
            push(
                "bad_position",
                &v.name,
                "position has the wrong length".into(),
            );
            continue;
        }
        if e.upsilon().get(&v.target).is_none() {
            push(
                "unknown_target",
                &v.name,
                format!("no polyhedron named {}", v.target),
            );
            continue;
        }
        let located = e.upsilon().locate(&lift(e, &v.position, f));
        if located != Some(v.target.as_str()) {
            push(
                "vertex_outside_target",
                &v.name,
                format!(
                    "position lies in {} rather than the relative interior of {}",
                    located.unwrap_or("no cell"),
                    v.target
                ),
            );
        }
    }
    for l in &m.legs {
        if m.vertex(&l.vertex).is_none() {
            push(
                "unknown_vertex",
                &l.name,
                format!("no vertex named {}", l.vertex),
            );
        }
    }
    for edge in &m.edges {
        let Some(from) = m.vertex(&edge.from) else {
            push(
                "unknown_vertex",
                &edge.name,
                format!("no vertex named {}", edge.from),
            );
            continue;
        };
        if edge.slope.len() != e.sigma_rank() {
            push("bad_slope", &edge.name, "slope has the wrong length".into());
            continue;
        }
        if from.position.len() != e.sigma_rank() {
            continue;
        }
        if !is_zero_vec(&edge.slope) && primitive(&edge.slope) != edge.slope {
            push(
                "slope_not_primitive",
                &edge.name,
                "slope is not primitive".into(),
            );
        }
        let far = match (&edge.to, &edge.length) {
            (Some(to), Some(len)) => {
                let Some(tv) = m.vertex(to) else {
                    push(
                        "unknown_vertex",
                        &edge.name,
                        format!("no vertex named {to}"),
                    );
                    continue;
                };
                if !len.is_positive() {
                    push("nonpositive_length", &edge.name, format!("length {len}"));
                    continue;
                }
                let expected = add_scaled(&from.position, len, &edge.slope);
                if tv.position != expected {
                    push(
                        "endpoint_mismatch",
                        &edge.name,
                        "end position differs from start + length × slope".into(),
                    );
                }
                add_scaled(
                    &from.position,
                    &(len / BigRational::from_integer(2.into())),
                    &edge.slope,
                )
            }
            (None, None) => add_scaled(&from.position, &BigRational::one(), &edge.slope),
            _ => {
                push(
                    "bad_edge",
                    &edge.name,
                    "bounded edges need both an end vertex and a length".into(),
                );
                continue;
            }
        };
        match e.sigma().locate(&far) {
            Some(s) => {
                let cone = e.sigma().get(s).unwrap();
                if cone.lattice_coordinates(&edge.slope).is_none() {
                    push(
                        "slope_outside_lattice",
                        &edge.name,
                        format!("slope does not lie in the lattice of {s}"),
                    );
                }
            }
            None => push(
                "leaves_sigma",
                &edge.name,
                "edge leaves the support of Σ".into(),
            ),
        }
        if let Some(None) = edge_incidence(e, m, edge) {
            push(
                "leaves_support",
                &edge.name,
                "edge leaves the support of the fibre".into(),
            );
        }
    }
    finish(findings)
}

fn finish(mut findings: Vec<Finding>) -> MapReport {
    findings.sort();
    findings.dedup();
    MapReport {
        is_valid: findings.is_empty(),
        findings,
    }
}

/// Normalizes a nonzero direction: primitive, first nonzero entry positive.
fn direction(v: &[BigInt]) -> Vec<BigInt> {
    let p = primitive(v);
    match p.iter().find(|x| !x.is_zero()) {
        Some(x) if x.is_negative() => p.iter().map(|y| -y).collect(),
        _ => p,
    }
}

/// Whether the map is a tube along the component of the bivalent fibre vertex `v`.
pub fn tube_along(e: &TropicalExpansion, m: &TropicalMap, v: &str) -> Result<bool, MapError> {
    if e.incident_edges(v)?.len() != 2 {
        return Err(MapError::NotBivalent(v.to_string()));
    }
    let over: Vec<&MapVertex> = m.vertices.iter().filter(|x| x.target == v).collect();
    if over.is_empty() {
        return Ok(false);
    }
    let mut directions = BTreeSet::new();
    for x in over {
        if x.genus != 0 || x.geometrically_stable || m.special_points(&x.name) != 2 {
            return Ok(false);
        }
        let mut slopes = m.outgoing_slopes(&x.name);
        // legs are contracted, so they contribute zero slope
        while slopes.len() < 2 {
            slopes.push(vec![BigInt::zero(); e.sigma_rank()]);
        }
        if slopes.iter().all(|s| is_zero_vec(s)) {
            return Ok(false);
        }
        let balanced = slopes[0].iter().zip(&slopes[1]).all(|(a, b)| *a == -b);
        if !balanced {
            return Ok(false);
        }
        directions.insert(direction(&slopes[0]));
    }
    Ok(directions.len() == 1)
}

/// Cones of `Υ` met by the image of the map.
pub fn incidences(e: &TropicalExpansion, m: &TropicalMap) -> BTreeSet<String> {
    let mut met = BTreeSet::new();
    for v in &m.vertices {
        if v.position.len() == e.sigma_rank() {
            if let Some(c) = e.upsilon().locate(&lift(e, &v.position, &m.base_point)) {
                met.insert(c.to_string());
            }
        }
    }
    for edge in &m.edges {
        if let Some(Some(cells)) = edge_incidence(e, m, edge) {
            met.extend(cells);
        }
    }
    met
}

pub fn check_stability(
    e: &TropicalExpansion,
    m: &TropicalMap,
) -> Result<StabilityVerdict, MapError> {
    let tubes = e.tube_vertices()?;
    let fibre = e.fibre(&m.base_point)?;
    let met = incidences(e, m);
    let mut reasons = Vec::new();
    for p in &fibre.polyhedra {
        if !met.contains(&p.name) {
            reasons.push(Reason {
                code: ReasonCode::MissedStratum,
                subject: p.name.clone(),
                detail: format!("the map does not meet the stratum of {}", p.name),
            });
        }
    }
    for v in &tubes.bivalent_non_tube {
        if tube_along(e, m, v)? {
            reasons.push(Reason {
                code: ReasonCode::TubeAlongNonTube,
                subject: v.clone(),
                detail: format!("the map is a tube along the non-tube component of {v}"),
            });
        }
    }
    for v in &tubes.tube_vertices {
        if !tube_along(e, m, v)? {
            reasons.push(Reason {
                code: ReasonCode::NotTubeAlongTube,
                subject: v.clone(),
                detail: format!("the map is not a tube along the tube component of {v}"),
            });
        }
    }
    for x in &m.vertices {
        let constant = m.outgoing_slopes(&x.name).iter().all(|s| is_zero_vec(s));
        if x.genus == 0 && m.special_points(&x.name) < 3 && !x.geometrically_stable && constant {
            reasons.push(Reason {
                code: ReasonCode::UnstableComponent,
                subject: x.name.clone(),
                detail: "genus 0 with fewer than 3 special points, constant in the fibre".into(),
            });
        }
    }
    reasons.sort();
    Ok(StabilityVerdict {
        stable: reasons.is_empty(),
        reasons,
        notes: ASSUMPTIONS.iter().map(|s| s.to_string()).collect(),
    })
}
