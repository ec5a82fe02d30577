//! The JSON input format.
//!
//! ```json
//! {
//!   "sigma":   {"rank": 2, "cones": [{"name": "D1", "gens": [[1, 0]]}, ...]},
//!   "tau":     {"rank": 2, "gens": [[1, 0], [0, 1]], "labels": ["e1", "e2"]},
//!   "upsilon": {"cones": [{"name": "v0", "gens": [[0, 0, 1, 0], [0, 0, 0, 1]]}, ...]},
//!   "one_complex_vertices": ["v0", "v1"],
//!   "maps": [...]
//! }
//! ```
//!
//! All numbers are exact: integers are JSON integers (or decimal strings for
//! large values) and rationals are integers or `{"num": a, "den": b}`.
//! Floating-point entries are rejected. A `υ` cone may carry an explicit
//! `"lattice"` basis when its lattice is not the saturated one.

use std::path::Path;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::complex::{Axiom, ComplexError, ConeComplex, SubdivisionReport, Violation, Witness};
use crate::cone::Cone;
use crate::expansion::{ExpansionError, ExpansionReport, TropicalExpansion};
use crate::trop_maps::{MapEdge, MapLeg, MapVertex, TropicalMap};

#[derive(Debug, Error)]
pub enum LoadError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("schema error at {path}: {message}")]
    Schema { path: String, message: String },
    #[error("validation failed")]
    Validation(Box<ExpansionReport>),
}

impl LoadError {
    fn schema(path: &str, message: impl Into<String>) -> Self {
        LoadError::Schema {
            path: path.to_string(),
            message: message.into(),
        }
    }
}

/// A loaded input: the expansion and any tropical maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Model {
    pub expansion: TropicalExpansion,
    pub maps: Vec<TropicalMap>,
}

impl Model {
    pub fn map(&self, name: &str) -> Option<&TropicalMap> {
        self.maps.iter().find(|m| m.name == name)
    }
}

pub fn load_input(path: &Path) -> Result<Model, LoadError> {
    let text = std::fs::read_to_string(path).map_err(|e| LoadError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    load_str(&text)
}

/// Parses and fully validates a document.
pub fn load_str(text: &str) -> Result<Model, LoadError> {
    let value: Value = serde_json::from_str(text).map_err(|e| LoadError::Parse(e.to_string()))?;
    load_value(&value)
}

/// Parses a document into a model without running the expansion axioms.
pub fn parse_value(value: &Value) -> Result<Model, LoadError> {
    let root = as_object(value, "$")?;
    only_keys(
        root,
        "$",
        &["sigma", "tau", "upsilon", "one_complex_vertices", "maps"],
    )?;

    let sigma_v = as_object(field(root, "sigma", "$")?, "$.sigma")?;
    only_keys(sigma_v, "$.sigma", &["rank", "cones"])?;
    let n_sigma = as_count(field(sigma_v, "rank", "$.sigma")?, "$.sigma.rank")?;
    let sigma_cones = parse_cones(
        field(sigma_v, "cones", "$.sigma")?,
        "$.sigma.cones",
        n_sigma,
    )?;
    let sigma =
        ConeComplex::build(n_sigma, sigma_cones).map_err(|e| complex_failure(e, "$.sigma"))?;

    let tau_v = as_object(field(root, "tau", "$")?, "$.tau")?;
    only_keys(tau_v, "$.tau", &["rank", "gens", "labels"])?;
    let n_tau = as_count(field(tau_v, "rank", "$.tau")?, "$.tau.rank")?;
    let tau_gens = parse_vectors(field(tau_v, "gens", "$.tau")?, "$.tau.gens", n_tau)?;
    let tau = Cone::from_generators(n_tau, &tau_gens).expect("lengths checked");
    let labels = match tau_v.get("labels") {
        Some(l) => as_strings(l, "$.tau.labels")?,
        None => (1..=n_tau).map(|i| format!("e{i}")).collect(),
    };
    if labels.len() != n_tau {
        return Err(LoadError::schema(
            "$.tau.labels",
            format!("expected {n_tau} labels"),
        ));
    }

    let ups_v = as_object(field(root, "upsilon", "$")?, "$.upsilon")?;
    only_keys(ups_v, "$.upsilon", &["cones"])?;
    let ups_cones = parse_cones(
        field(ups_v, "cones", "$.upsilon")?,
        "$.upsilon.cones",
        n_sigma + n_tau,
    )?;
    let upsilon = ConeComplex::build(n_sigma + n_tau, ups_cones)
        .map_err(|e| complex_failure(e, "$.upsilon"))?;

    let one_complex = match root.get("one_complex_vertices") {
        Some(v) => Some(as_strings(v, "$.one_complex_vertices")?),
        None => None,
    };
    let expansion =
        TropicalExpansion::new(sigma, tau, labels, upsilon, one_complex).map_err(|e| match e {
            ExpansionError::UnknownVertex(v) => {
                LoadError::schema("$.one_complex_vertices", format!("{v} is not a vertex"))
            }
            other => LoadError::schema("$", other.to_string()),
        })?;

    let mut maps = Vec::new();
    if let Some(ms) = root.get("maps") {
        for (i, m) in as_array(ms, "$.maps")?.iter().enumerate() {
            maps.push(parse_map(m, &format!("$.maps[{i}]"), n_sigma, n_tau)?);
        }
    }
    Ok(Model { expansion, maps })
}

/// Parses a document and checks the expansion axioms.
pub fn load_value(value: &Value) -> Result<Model, LoadError> {
    let model = parse_value(value)?;
    let report = model.expansion.validate();
    if !report.report.is_valid {
        return Err(LoadError::Validation(Box::new(report)));
    }
    Ok(model)
}

fn complex_failure(e: ComplexError, path: &str) -> LoadError {
    match e {
        ComplexError::ImproperIntersection {
            first,
            second,
            witness,
        } => {
            let report = SubdivisionReport::from_violations(
                vec![Violation {
                    cones: vec![first, second],
                    axiom: Axiom::ImproperIntersection,
                    witness: Witness::Point(witness.0),
                }],
                false,
            );
            LoadError::Validation(Box::new(ExpansionReport {
                report,
                cones: Vec::new(),
            }))
        }
        other => LoadError::schema(path, other.to_string()),
    }
}

fn field<'a>(obj: &'a Map<String, Value>, key: &str, path: &str) -> Result<&'a Value, LoadError> {
    obj.get(key)
        .ok_or_else(|| LoadError::schema(&format!("{path}.{key}"), "missing key"))
}

fn as_object<'a>(v: &'a Value, path: &str) -> Result<&'a Map<String, Value>, LoadError> {
    v.as_object()
        .ok_or_else(|| LoadError::schema(path, "expected an object"))
}

fn as_array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>, LoadError> {
    v.as_array()
        .ok_or_else(|| LoadError::schema(path, "expected an array"))
}

fn as_string(v: &Value, path: &str) -> Result<String, LoadError> {
    v.as_str()
        .map(str::to_string)
        .ok_or_else(|| LoadError::schema(path, "expected a string"))
}

fn as_strings(v: &Value, path: &str) -> Result<Vec<String>, LoadError> {
    as_array(v, path)?
        .iter()
        .enumerate()
        .map(|(i, x)| as_string(x, &format!("{path}[{i}]")))
        .collect()
}

fn as_bool(v: &Value, path: &str) -> Result<bool, LoadError> {
    v.as_bool()
        .ok_or_else(|| LoadError::schema(path, "expected a boolean"))
}

pub fn as_integer(v: &Value, path: &str) -> Result<BigInt, LoadError> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(BigInt::from(i))
            } else if let Some(u) = n.as_u64() {
                Ok(BigInt::from(u))
            } else {
                Err(LoadError::schema(
                    path,
                    format!("{n} is not an integer; floating-point entries are not accepted"),
                ))
            }
        }
        Value::String(s) => s
            .parse::<BigInt>()
            .map_err(|_| LoadError::schema(path, format!("{s:?} is not an integer"))),
        _ => Err(LoadError::schema(path, "expected an integer")),
    }
}

fn as_count(v: &Value, path: &str) -> Result<usize, LoadError> {
    as_integer(v, path)?
        .to_usize()
        .ok_or_else(|| LoadError::schema(path, "expected a nonnegative count"))
}

pub fn as_rational(v: &Value, path: &str) -> Result<BigRational, LoadError> {
    match v {
        Value::Object(o) => {
            for key in o.keys() {
                if key != "num" && key != "den" {
                    return Err(LoadError::schema(&format!("{path}.{key}"), "unknown key"));
                }
            }
            let num = as_integer(field(o, "num", path)?, &format!("{path}.num"))?;
            let den = as_integer(field(o, "den", path)?, &format!("{path}.den"))?;
            if den.is_zero() {
                return Err(LoadError::schema(path, "zero denominator"));
            }
            Ok(BigRational::new(num, den))
        }
        _ => Ok(BigRational::from_integer(as_integer(v, path)?)),
    }
}

fn parse_vector(v: &Value, path: &str, len: usize) -> Result<Vec<BigInt>, LoadError> {
    let arr = as_array(v, path)?;
    if arr.len() != len {
        return Err(LoadError::schema(
            path,
            format!("expected {len} entries, found {}", arr.len()),
        ));
    }
    arr.iter()
        .enumerate()
        .map(|(i, x)| as_integer(x, &format!("{path}[{i}]")))
        .collect()
}

fn parse_vectors(v: &Value, path: &str, len: usize) -> Result<Vec<Vec<BigInt>>, LoadError> {
    as_array(v, path)?
        .iter()
        .enumerate()
        .map(|(i, x)| parse_vector(x, &format!("{path}[{i}]"), len))
        .collect()
}

fn parse_rational_vector(v: &Value, path: &str, len: usize) -> Result<Vec<BigRational>, LoadError> {
    let arr = as_array(v, path)?;
    if arr.len() != len {
        return Err(LoadError::schema(
            path,
            format!("expected {len} entries, found {}", arr.len()),
        ));
    }
    arr.iter()
        .enumerate()
        .map(|(i, x)| as_rational(x, &format!("{path}[{i}]")))
        .collect()
}

fn only_keys(obj: &Map<String, Value>, path: &str, allowed: &[&str]) -> Result<(), LoadError> {
    match obj.keys().find(|k| !allowed.contains(&k.as_str())) {
        Some(key) => Err(LoadError::schema(&format!("{path}.{key}"), "unknown key")),
        None => Ok(()),
    }
}

fn parse_cones(
    v: &Value,
    path: &str,
    rank: usize,
) -> Result<Vec<(Option<String>, Cone)>, LoadError> {
    let mut out = Vec::new();
    for (i, c) in as_array(v, path)?.iter().enumerate() {
        let p = format!("{path}[{i}]");
        let obj = as_object(c, &p)?;
        for key in obj.keys() {
            if !["name", "gens", "lattice"].contains(&key.as_str()) {
                return Err(LoadError::schema(&format!("{p}.{key}"), "unknown key"));
            }
        }
        let name = match obj.get("name") {
            Some(n) => Some(as_string(n, &format!("{p}.name"))?),
            None => None,
        };
        let gens = parse_vectors(field(obj, "gens", &p)?, &format!("{p}.gens"), rank)?;
        let mut cone = Cone::from_generators(rank, &gens).expect("lengths checked");
        if let Some(l) = obj.get("lattice") {
            let basis = parse_vectors(l, &format!("{p}.lattice"), rank)?;
            cone = cone
                .with_lattice(&basis)
                .map_err(|e| LoadError::schema(&format!("{p}.lattice"), e.to_string()))?;
        }
        out.push((name, cone));
    }
    Ok(out)
}

fn parse_map(
    v: &Value,
    path: &str,
    n_sigma: usize,
    n_tau: usize,
) -> Result<TropicalMap, LoadError> {
    let obj = as_object(v, path)?;
    for key in obj.keys() {
        if !["name", "base_point", "vertices", "edges", "legs"].contains(&key.as_str()) {
            return Err(LoadError::schema(&format!("{path}.{key}"), "unknown key"));
        }
    }
    let name = as_string(field(obj, "name", path)?, &format!("{path}.name"))?;
    let base_point = parse_rational_vector(
        field(obj, "base_point", path)?,
        &format!("{path}.base_point"),
        n_tau,
    )?;
    let mut vertices = Vec::new();
    for (i, x) in as_array(field(obj, "vertices", path)?, &format!("{path}.vertices"))?
        .iter()
        .enumerate()
    {
        let p = format!("{path}.vertices[{i}]");
        let o = as_object(x, &p)?;
        let count = |key: &str| -> Result<u32, LoadError> {
            match o.get(key) {
                Some(c) => as_count(c, &format!("{p}.{key}"))?
                    .to_u32()
                    .ok_or_else(|| LoadError::schema(&format!("{p}.{key}"), "too large")),
                None => Ok(0),
            }
        };
        vertices.push(MapVertex {
            name: as_string(field(o, "name", &p)?, &format!("{p}.name"))?,
            target: as_string(field(o, "target", &p)?, &format!("{p}.target"))?,
            position: parse_rational_vector(
                field(o, "position", &p)?,
                &format!("{p}.position"),
                n_sigma,
            )?,
            genus: count("genus")?,
            marks: count("marks")?,
            geometrically_stable: match o.get("geometrically_stable") {
                Some(b) => as_bool(b, &format!("{p}.geometrically_stable"))?,
                None => false,
            },
        });
    }
    let mut edges = Vec::new();
    if let Some(es) = obj.get("edges") {
        for (i, x) in as_array(es, &format!("{path}.edges"))?.iter().enumerate() {
            let p = format!("{path}.edges[{i}]");
            let o = as_object(x, &p)?;
            let to = match o.get("to") {
                Some(t) => Some(as_string(t, &format!("{p}.to"))?),
                None => None,
            };
            let length = match o.get("length") {
                Some(l) => Some(as_rational(l, &format!("{p}.length"))?),
                None => None,
            };
            if to.is_some() != length.is_some() {
                return Err(LoadError::schema(
                    &p,
                    "bounded edges need both \"to\" and \"length\"; unbounded ends need neither",
                ));
            }
            edges.push(MapEdge {
                name: match o.get("name") {
                    Some(n) => as_string(n, &format!("{p}.name"))?,
                    None => format!("edge{i}"),
                },
                from: as_string(field(o, "from", &p)?, &format!("{p}.from"))?,
                to,
                slope: parse_vector(field(o, "slope", &p)?, &format!("{p}.slope"), n_sigma)?,
                length,
            });
        }
    }
    let mut legs = Vec::new();
    if let Some(ls) = obj.get("legs") {
        for (i, x) in as_array(ls, &format!("{path}.legs"))?.iter().enumerate() {
            let p = format!("{path}.legs[{i}]");
            let o = as_object(x, &p)?;
            legs.push(MapLeg {
                name: match o.get("name") {
                    Some(n) => as_string(n, &format!("{p}.name"))?,
                    None => format!("leg{i}"),
                },
                vertex: as_string(field(o, "vertex", &p)?, &format!("{p}.vertex"))?,
            });
        }
    }
    Ok(TropicalMap {
        name,
        base_point,
        vertices,
        edges,
        legs,
    })
}

pub fn integer_json(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(i) => json!(i),
        None => json!(x.to_string()),
    }
}

pub fn vector_json(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(integer_json).collect())
}

pub fn rational_json(x: &BigRational) -> Value {
    if x.is_integer() {
        integer_json(x.numer())
    } else {
        json!({"num": integer_json(x.numer()), "den": integer_json(x.denom())})
    }
}

pub fn rational_vector_json(v: &[BigRational]) -> Value {
    Value::Array(v.iter().map(rational_json).collect())
}

fn cones_json(c: &ConeComplex) -> Value {
    Value::Array(
        c.named_input()
            .into_iter()
            .map(|(name, cone)| {
                let mut o = Map::new();
                if let Some(n) = name {
                    o.insert("name".into(), json!(n));
                }
                o.insert(
                    "gens".into(),
                    Value::Array(cone.generators().iter().map(|g| vector_json(g)).collect()),
                );
                if !cone.has_saturated_lattice() {
                    o.insert(
                        "lattice".into(),
                        Value::Array(
                            cone.lattice_basis()
                                .iter()
                                .map(|g| vector_json(g))
                                .collect(),
                        ),
                    );
                }
                Value::Object(o)
            })
            .collect(),
    )
}

fn map_json(m: &TropicalMap) -> Value {
    let vertices: Vec<Value> = m
        .vertices
        .iter()
        .map(|v| {
            json!({
                "name": v.name,
                "target": v.target,
                "position": rational_vector_json(&v.position),
                "genus": v.genus,
                "marks": v.marks,
                "geometrically_stable": v.geometrically_stable,
            })
        })
        .collect();
    let edges: Vec<Value> = m
        .edges
        .iter()
        .map(|e| {
            let mut o = Map::new();
            o.insert("name".into(), json!(e.name));
            o.insert("from".into(), json!(e.from));
            if let Some(t) = &e.to {
                o.insert("to".into(), json!(t));
            }
            if let Some(l) = &e.length {
                o.insert("length".into(), rational_json(l));
            }
            o.insert("slope".into(), vector_json(&e.slope));
            Value::Object(o)
        })
        .collect();
    let legs: Vec<Value> = m
        .legs
        .iter()
        .map(|l| json!({"name": l.name, "vertex": l.vertex}))
        .collect();
    json!({
        "name": m.name,
        "base_point": rational_vector_json(&m.base_point),
        "vertices": vertices,
        "edges": edges,
        "legs": legs,
    })
}

/// Serializes a model back to the input format, in canonical form.
pub fn to_document(model: &Model) -> Value {
    let e = &model.expansion;
    let mut root = Map::new();
    root.insert(
        "sigma".into(),
        json!({"rank": e.sigma_rank(), "cones": cones_json(e.sigma())}),
    );
    root.insert(
        "tau".into(),
        json!({
            "rank": e.tau_rank(),
            "gens": Value::Array(e.tau().generators().iter().map(|g| vector_json(g)).collect()),
            "labels": e.tau_labels(),
        }),
    );
    root.insert("upsilon".into(), json!({"cones": cones_json(e.upsilon())}));
    if let Some(g) = e.one_complex_vertices() {
        root.insert("one_complex_vertices".into(), json!(g));
    }
    if !model.maps.is_empty() {
        root.insert(
            "maps".into(),
            Value::Array(model.maps.iter().map(map_json).collect()),
        );
    }
    Value::Object(root)
}
