//! Deterministic JSON renderings of every result type.
//!
//! Object keys are sorted (the JSON map is ordered), matrices are written as
//! `{"rows": [...], "cols": [...], "entries": [[...]]}` and rationals as
//! integers or `{"num", "den"}` pairs.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::complex::{ConeComplex, SubdivisionReport, Violation, Witness};
use crate::cone::Cone;
use crate::expansion::{ExpansionReport, FibreComplex, TropicalExpansion};
use crate::io::{rational_json, rational_vector_json, vector_json, Model};
use crate::linalg::IntMatrix;
use crate::rubber::{rubber_report, LabelledMatrix, PositionMap, RubberReport, StratumAction};
use crate::trop_maps::{check_stability, validate_map, MapReport, StabilityVerdict, TropicalMap};

fn vectors_json(v: &[Vec<BigInt>]) -> Value {
    Value::Array(v.iter().map(|x| vector_json(x)).collect())
}

pub fn matrix_json(m: &IntMatrix) -> Value {
    json!({
        "rows": m.rows(),
        "cols": m.cols(),
        "entries": vectors_json(&m.row_vectors()),
    })
}

pub fn labelled_json(m: &LabelledMatrix) -> Value {
    json!({
        "rows": m.row_labels,
        "cols": m.col_labels,
        "entries": vectors_json(&m.matrix.row_vectors()),
    })
}

pub fn cone_json(c: &Cone) -> Value {
    json!({
        "dim": c.dim(),
        "rays": vectors_json(c.rays()),
        "lineality": vectors_json(c.lineality_basis()),
    })
}

pub fn complex_json(c: &ConeComplex) -> Value {
    Value::Array(
        c.iter()
            .map(|(name, cone)| {
                json!({
                    "name": name,
                    "dim": cone.dim(),
                    "rays": vectors_json(cone.rays()),
                    "lineality": vectors_json(cone.lineality_basis()),
                })
            })
            .collect(),
    )
}

fn witness_json(w: &Witness) -> Value {
    match w {
        Witness::Point(p) => json!({"point": rational_vector_json(p)}),
        Witness::Matrix(m) => json!({"matrix": matrix_json(m)}),
        Witness::Text(t) => json!({"text": t}),
    }
}

fn violation_json(v: &Violation) -> Value {
    json!({
        "axiom": v.axiom.code(),
        "cones": v.cones,
        "witness": witness_json(&v.witness),
    })
}

pub fn subdivision_json(r: &SubdivisionReport) -> Value {
    json!({
        "valid": r.is_valid,
        "complete": r.is_complete,
        "violations": r.violations.iter().map(violation_json).collect::<Vec<_>>(),
        "notes": r.notes,
    })
}

pub fn validation_json(r: &ExpansionReport) -> Value {
    let mut v = subdivision_json(&r.report);
    v["cones"] = Value::Array(
        r.cones
            .iter()
            .map(|c| {
                json!({
                    "name": c.name,
                    "dim": c.dim,
                    "image_face": c.image_face,
                    "sigma": c.sigma,
                    "integral": c.integral,
                    "p_saturated": c.p_saturated,
                })
            })
            .collect(),
    );
    v
}

pub fn fibre_json(f: &FibreComplex) -> Value {
    json!({
        "base_point": rational_vector_json(&f.base_point),
        "base_face": f.base_face,
        "polyhedra": f.polyhedra.iter().map(|p| json!({
            "name": p.name,
            "dim": p.dim,
            "sigma": p.sigma,
            "vertices": p.vertices.iter().map(|(n, x)| json!({
                "name": n,
                "position": rational_vector_json(x),
            })).collect::<Vec<_>>(),
            "recession": vectors_json(&p.recession),
            "slope": p.slope.as_ref().map(|s| vector_json(s)),
            "faces": p.faces,
        })).collect::<Vec<_>>(),
    })
}

fn position_json(p: &PositionMap) -> Value {
    json!({
        "vertex": p.vertex,
        "sigma": p.sigma_v,
        "per_ray": p.per_ray,
        "weights": labelled_json(&p.matrix),
        "ambient": labelled_json(&p.ambient),
    })
}

pub fn positions_json(r: &RubberReport) -> Value {
    json!({
        "torus": {"rank": r.torus.rank, "labels": r.torus.basis_labels},
        "position_maps": r.position_maps.iter().map(position_json).collect::<Vec<_>>(),
    })
}

fn stratum_json(s: &StratumAction) -> Value {
    json!({
        "polyhedron": s.polyhedron,
        "dim": s.dim,
        "sigma": s.sigma_p,
        "kernel": labelled_json(&s.k_p),
        "projection": labelled_json(&s.projection),
        "theta": {
            "quotient_rank": s.theta.quotient_rank,
            "dim": s.theta.dim,
            "generators": vectors_json(&s.theta.generators),
            "strictly_convex": s.theta.strictly_convex,
        },
        "phi": labelled_json(&s.phi),
        "trivial": s.trivial,
    })
}

pub fn rubber_json(r: &RubberReport) -> Value {
    json!({
        "torus": {"rank": r.torus.rank, "labels": r.torus.basis_labels},
        "position_maps": r.position_maps.iter().map(position_json).collect::<Vec<_>>(),
        "strata": r.strata.iter().map(stratum_json).collect::<Vec<_>>(),
        "injectivity": {
            "holds": r.injectivity.holds,
            "witness": r.injectivity.witness.as_ref().map(|w| vector_json(w)),
        },
        "join_divisors": r.join_divisors.iter().map(|j| json!({
            "edge": j.edge,
            "vertices": [j.vertices.0, j.vertices.1],
            "trivial": j.trivial,
        })).collect::<Vec<_>>(),
        "trivial_strata": r.trivial_strata,
        "nontrivial_strata": r.nontrivial_strata,
        "notes": r.notes,
    })
}

pub fn strata_json(e: &TropicalExpansion) -> Value {
    let strata: Vec<Value> = e
        .strata()
        .iter()
        .map(|s| json!({"name": s.name, "dim": s.dim, "sigma": s.sigma}))
        .collect();
    let types: Vec<Value> = e
        .combinatorial_type()
        .iter()
        .map(|t| {
            json!({
                "name": t.name,
                "sigma": t.sigma,
                "slope_lattice": vectors_json(&t.slope_lattice),
            })
        })
        .collect();
    let asymptotic = match e.asymptotic_complex() {
        Ok(c) => complex_json(&c),
        Err(err) => json!({"error": err.to_string()}),
    };
    let tubes = match e.tube_vertices() {
        Ok(t) => json!({
            "tube_vertices": t.tube_vertices,
            "bivalent_non_tube": t.bivalent_non_tube,
        }),
        Err(err) => json!({"error": err.to_string()}),
    };
    json!({
        "strata": strata,
        "combinatorial_type": types,
        "asymptotic_complex": asymptotic,
        "tubes": tubes,
    })
}

pub fn map_report_json(r: &MapReport) -> Value {
    json!({
        "valid": r.is_valid,
        "findings": r.findings.iter().map(|f| json!({
            "code": f.code,
            "subject": f.subject,
            "detail": f.detail,
        })).collect::<Vec<_>>(),
    })
}

pub fn stability_json(map: &str, check: &MapReport, v: &StabilityVerdict) -> Value {
    json!({
        "map": map,
        "map_check": map_report_json(check),
        "stable": v.stable,
        "reasons": v.reasons.iter().map(|r| json!({
            "code": r.code.as_str(),
            "subject": r.subject,
            "detail": r.detail,
        })).collect::<Vec<_>>(),
        "notes": v.notes,
    })
}

fn map_stability(e: &TropicalExpansion, m: &TropicalMap) -> Value {
    let check = validate_map(e, m);
    match check_stability(e, m) {
        Ok(v) => stability_json(&m.name, &check, &v),
        Err(err) => {
            json!({"map": m.name, "map_check": map_report_json(&check), "error": err.to_string()})
        }
    }
}

/// The base point used for the fibre in a full report: the sum of the rays of `τ`.
pub fn default_fibre_point(e: &TropicalExpansion) -> Vec<BigRational> {
    e.tau()
        .relative_interior_point()
        .into_iter()
        .map(BigRational::from_integer)
        .collect()
}

/// Everything the tool computes about a model, as one document.
pub fn full_report(model: &Model) -> Value {
    let e = &model.expansion;
    let validation = e.validate();
    let base = default_fibre_point(e);
    let fibre = match e.fibre(&base) {
        Ok(f) => fibre_json(&f),
        Err(err) => json!({"error": err.to_string()}),
    };
    let (positions, rubber) = match rubber_report(e) {
        Ok(r) => (positions_json(&r), rubber_json(&r)),
        Err(err) => {
            let v = json!({"error": err.to_string()});
            (v.clone(), v)
        }
    };
    json!({
        "validate": validation_json(&validation),
        "fibre": fibre,
        "positions": positions,
        "rubber": rubber,
        "strata": strata_json(e),
        "stability": model.maps.iter().map(|m| map_stability(e, m)).collect::<Vec<_>>(),
    })
}

/// Renders a rational for human-readable output.
pub fn rational_text(x: &BigRational) -> String {
    match rational_json(x) {
        Value::Object(_) => format!("{}/{}", x.numer(), x.denom()),
        v => v.to_string().trim_matches('"').to_string(),
    }
}

/// The report for one input document. Inputs that fail validation yield
/// only the validation section; inputs that cannot be read yield an error.
pub fn document_report(value: &Value) -> Value {
    match crate::io::parse_value(value) {
        Ok(model) => {
            let validation = model.expansion.validate();
            if validation.report.is_valid {
                full_report(&model)
            } else {
                json!({"validate": validation_json(&validation)})
            }
        }
        Err(crate::io::LoadError::Validation(r)) => json!({"validate": validation_json(&r)}),
        Err(e) => json!({"error": e.to_string()}),
    }
}
