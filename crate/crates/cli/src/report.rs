//! JSON rendering: rationals as `"p/q"` strings, floats with 17 significant digits.

use eigencubic::algebra::PeirceData;
use eigencubic::identities::{ConePoint, IdentityOutcome};
use eigencubic::rational::format_q;
use eigencubic::tables::{TripleRecord, ValidationRow};
use eigencubic::{ClassificationRecord, CliffordSystem, Q};
use serde_json::{json, Number, Value};

pub fn float(x: f64) -> Value {
    if !x.is_finite() {
        return Value::Null;
    }
    format!("{x:.16e}").parse::<Number>().map(Value::Number).unwrap_or(Value::Null)
}

pub fn floats(xs: &[f64]) -> Value {
    Value::Array(xs.iter().map(|&x| float(x)).collect())
}

pub fn rational(q: Option<&Q>) -> Value {
    q.map_or(Value::Null, |q| Value::String(format_q(q)))
}

pub fn triple(t: (usize, usize, usize)) -> Value {
    json!([t.0, t.1, t.2])
}

pub fn outcome(check: &str, o: &IdentityOutcome) -> Value {
    json!({
        "check": check,
        "pass": o.holds(),
        "constant": rational(o.constant.as_ref()),
        "mode": o.mode,
        "error_bound": o.error_bound.map_or(Value::Null, float),
    })
}

pub fn peirce(p: &PeirceData) -> Value {
    json!({
        "c": floats(&p.c),
        "length_sq": float(p.length_sq),
        "spectrum": floats(&p.spectrum),
        "triple": triple(p.triple),
        "unit_multiplicity": p.unit_multiplicity,
        "unbinned": floats(&p.unbinned),
        "residual": float(p.residual),
    })
}

pub fn classification(r: &ClassificationRecord) -> Value {
    json!({
        "is_trivial": r.is_trivial,
        "is_harmonic": r.is_harmonic,
        "radial_theta": rational(r.radial_theta.as_ref()),
        "quad_trace": rational(r.quad_trace.as_ref()),
        "cubic_trace": rational(r.cubic_trace.as_ref()),
        "multiplication_rank": r.multiplication_rank,
        "label": r.label.as_str(),
        "mode": r.mode,
        "error_bound": r.error_bound.map_or(Value::Null, float),
    })
}

pub fn triple_record(r: &TripleRecord) -> Value {
    json!({
        "triple": triple(r.triple()),
        "dim": r.dim,
        "status": r.status.as_str(),
        "witness": r.witness,
    })
}

pub fn validation(r: &ValidationRow) -> Value {
    json!({
        "triple": triple(r.triple),
        "dim": r.dim,
        "status": r.status.as_str(),
        "witness": r.witness,
        "pass": r.pass,
        "theta": r.theta,
        "mode": r.mode,
        "error_bound": r.error_bound.map_or(Value::Null, float),
        "idempotents": r.idempotents,
        "computed": r.computed.iter().map(|&t| triple(t)).collect::<Vec<_>>(),
        "note": r.note,
    })
}

pub fn clifford(s: &CliffordSystem) -> Value {
    json!({
        "q": s.q,
        "two_l": s.two_l,
        "verified": s.is_valid(),
        "mats": s.mats,
    })
}

pub fn cone_point(p: &ConePoint) -> Value {
    json!({
        "x": floats(&p.x),
        "curvature": float(p.curvature),
        "gradient_norm": float(p.gradient_norm),
    })
}
