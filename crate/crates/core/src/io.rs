//! Instance files and structured output documents.
//!
//! An instance file is a single JSON document:
//! `{"degree": 8, "points": [[1,0,0], ...], "coefficients": [1, "1/3", ...]}`
//! with integer point coordinates and integer or "p/q" coefficients.
//! Floating-point literals are rejected; everything stays exact.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{Form, Instance, ProjPoint, Scalar};
use crate::error::{Error, Result};
use crate::kruskal::{BaselineReport, KruskalReport};
use crate::pipeline::Verdict;
use crate::position::{FamilyObstruction, PositionReport};
use crate::terracini::TerraciniReport;

#[derive(Debug, Serialize, Deserialize)]
struct InstanceDoc {
    degree: usize,
    points: Vec<[i64; 3]>,
    coefficients: Vec<CoeffValue>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(untagged)]
enum CoeffValue {
    Int(i64),
    Ratio(String),
}

/// Parses "p" or "p/q" with arbitrary-precision integer parts.
pub fn parse_scalar(s: &str) -> Result<Scalar> {
    let err = |msg: &str| Error::Parse {
        location: format!("coefficient \"{s}\""),
        message: msg.to_string(),
    };
    let (p, q) = match s.split_once('/') {
        None => (s.trim(), "1"),
        Some((p, q)) => (p.trim(), q.trim()),
    };
    let p: BigInt = p.parse().map_err(|_| err("invalid integer numerator"))?;
    let q: BigInt = q.parse().map_err(|_| err("invalid integer denominator"))?;
    if q.is_zero() {
        return Err(err("zero denominator"));
    }
    Ok(BigRational::new(p, q))
}

/// Renders a scalar as a bare integer string or "p/q".
pub fn scalar_string(a: &Scalar) -> String {
    if a.denom().is_one() {
        a.numer().to_string()
    } else {
        format!("{}/{}", a.numer(), a.denom())
    }
}

/// Parses an instance file. In strict mode zero coefficients are rejected
/// here; the pipeline revalidates regardless.
pub fn parse_instance(text: &str, strict: bool) -> Result<Instance> {
    let doc: InstanceDoc = serde_json::from_str(text).map_err(|e| Error::Parse {
        location: format!("line {} column {}", e.line(), e.column()),
        message: e.to_string(),
    })?;
    let mut points = Vec::with_capacity(doc.points.len());
    for (i, coords) in doc.points.iter().enumerate() {
        let p = ProjPoint::new((*coords).map(BigInt::from))
            .map_err(|_| Error::InvalidPoint { index: Some(i) })?;
        points.push(p);
    }
    let mut coefficients = Vec::with_capacity(doc.coefficients.len());
    for (i, c) in doc.coefficients.iter().enumerate() {
        let a = match c {
            CoeffValue::Int(n) => Scalar::from_integer(BigInt::from(*n)),
            CoeffValue::Ratio(s) => parse_scalar(s).map_err(|e| match e {
                Error::Parse { message, .. } => Error::Parse {
                    location: format!("coefficients[{i}]"),
                    message,
                },
                other => other,
            })?,
        };
        if strict && a.is_zero() {
            return Err(Error::ZeroCoefficient { index: i });
        }
        coefficients.push(a);
    }
    Instance::new(doc.degree, points, coefficients)
}

/// Serializes an instance in the exact file format. Fails only if a
/// canonical coordinate exceeds the i64 range of the format.
pub fn serialize_instance(inst: &Instance) -> Result<String> {
    let points = inst
        .points()
        .iter()
        .map(|p| {
            let mut out = [0i64; 3];
            for (dst, c) in out.iter_mut().zip(p.coords()) {
                *dst = i64::try_from(c).map_err(|_| {
                    Error::InvalidInstance("point coordinate exceeds the file format range".into())
                })?;
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?;
    let coefficients = inst
        .coefficients()
        .iter()
        .map(|a| {
            if a.denom().is_one() {
                if let Ok(n) = i64::try_from(a.numer()) {
                    return CoeffValue::Int(n);
                }
            }
            CoeffValue::Ratio(scalar_string(a))
        })
        .collect();
    let doc = InstanceDoc {
        degree: inst.degree(),
        points,
        coefficients,
    };
    serde_json::to_string(&doc).map_err(|e| Error::Parse {
        location: "serialization".into(),
        message: e.to_string(),
    })
}

fn form_json(f: &Form) -> serde_json::Value {
    serde_json::json!({
        "degree": f.degree(),
        "coeffs": f.coeffs().iter().map(scalar_string).collect::<Vec<_>>(),
    })
}

fn point_json(p: &ProjPoint) -> serde_json::Value {
    serde_json::Value::Array(
        p.coords()
            .iter()
            .map(|c| serde_json::Value::String(c.to_string()))
            .collect(),
    )
}

pub fn terracini_json(t: &TerraciniReport) -> serde_json::Value {
    serde_json::json!({
        "r": t.r,
        "d": t.d,
        "rank": t.rank,
        "projective_dimension": t.projective_dimension,
        "expected": t.expected,
        "full": t.full,
        "mults": t.ops.multiplications,
    })
}

pub fn kruskal_json(k: &KruskalReport) -> serde_json::Value {
    serde_json::json!({
        "d": k.d,
        "k": k.k,
        "bound": k.bound,
        "subsets_tested": k.subsets_tested,
        "witness": k.witness,
        "mults": k.ops.multiplications,
    })
}

pub fn baseline_json(b: &BaselineReport) -> serde_json::Value {
    serde_json::json!({
        "n": b.n,
        "r": b.r,
        "k2": kruskal_json(&b.k2),
        "k2_required": b.k2_required,
        "k2_ok": b.k2_ok,
        "kn3_threshold": b.kn3_threshold,
        "kn3_ok": b.kn3_ok,
        "kn3_subsets_tested": b.kn3_subsets_tested,
        "kn3_witness": b.kn3_witness,
        "identifiable": b.identifiable,
        "mults": b.ops.multiplications,
    })
}

pub fn position_json(p: &PositionReport) -> serde_json::Value {
    serde_json::json!({
        "max_collinear": p.max_collinear,
        "line_witness": p.line_witness.as_ref().map(form_json),
        "max_on_conic": p.max_on_conic,
        "conic_witness": p.conic_witness.as_ref().map(form_json),
        "in_cubic": p.in_cubic,
        "cubic_witness": p.cubic_witness.as_ref().map(form_json),
    })
}

pub fn obstruction_json(o: &FamilyObstruction) -> serde_json::Value {
    match o {
        FamilyObstruction::None => serde_json::json!({ "kind": "none" }),
        FamilyObstruction::Collinear { threshold, witness, points } => serde_json::json!({
            "kind": "collinear_family",
            "threshold": threshold,
            "witness": form_json(witness),
            "points": points.iter().map(point_json).collect::<Vec<_>>(),
        }),
        FamilyObstruction::Conic { threshold, witness, points } => serde_json::json!({
            "kind": "conic_family",
            "threshold": threshold,
            "witness": form_json(witness),
            "points": points.iter().map(point_json).collect::<Vec<_>>(),
        }),
    }
}

/// The structured verdict document the CLI prints.
pub fn verdict_document(v: &Verdict) -> serde_json::Value {
    serde_json::json!({
        "kind": v.kind.as_str(),
        "n": v.n,
        "r": v.r,
        "rank_of_md": v.rank_of_md,
        "terracini": v.terracini.as_ref().map(terracini_json),
        "position": v.position.as_ref().map(position_json),
        "obstruction": v.obstruction.as_ref().map(obstruction_json),
        "mults": v.ops.multiplications,
        "elimination_steps": v.ops.elimination_steps,
        "notes": v.notes,
    })
}
