//! JSON encodings shared by every report. Rationals are `"p/q"` strings, algebraic
//! numbers are objects, and key order is fixed by construction.

use linkspec_algebra::rational::format_rational;
use linkspec_algebra::{Inertia, Poly, QMatrix, Rational};
use serde_json::{json, Map, Value};

use crate::seifert::{Angle, HNumbers, SignatureProfile, SpecValue, SpectrumData, ValidationReport};

pub const SCHEMA: u64 = 1;

/// Precision attached to every floating-point field.
pub const FLOAT_PRECISION: f64 = 1e-9;

pub fn q(x: &Rational) -> Value {
    Value::String(format_rational(x))
}

pub fn matrix(m: &QMatrix) -> Value {
    Value::Array(m.to_rows().iter().map(|r| Value::Array(r.iter().map(q).collect())).collect())
}

pub fn poly(p: &Poly) -> Value {
    json!({
        "text": p.to_string(),
        "coefficients": p.coeffs().iter().map(q).collect::<Vec<_>>(),
    })
}

pub fn inertia(i: &Inertia) -> Value {
    json!({"plus": i.plus, "minus": i.minus, "zero": i.zero})
}

/// A point of the circle: a `"p/q"` string when rational, otherwise the trace root.
pub fn angle(a: &Angle) -> Value {
    match a.exact() {
        Some(x) => q(x),
        None => {
            let t = a.trace();
            json!({
                "approx": a.approx(),
                "precision": FLOAT_PRECISION,
                "trace_polynomial": t.poly().to_string(),
                "trace_root_index": t.index(),
                "half": format!("{:?}", a.half()).to_lowercase(),
            })
        }
    }
}

pub fn spec_value(v: &SpecValue) -> Value {
    match v.exact() {
        Some(x) => q(&x),
        None => {
            let mut o = match angle(v.angle()) {
                Value::Object(o) => o,
                _ => Map::new(),
            };
            o.insert("approx".into(), json!(v.approx()));
            o.insert("shift".into(), json!(v.shift()));
            Value::Object(o)
        }
    }
}

pub fn spectrum(s: &SpectrumData) -> Value {
    let mut counts: Vec<(SpecValue, usize)> = Vec::new();
    for v in &s.sp {
        match counts.last_mut() {
            Some((w, c)) if w == v => *c += 1,
            _ => counts.push((v.clone(), 1)),
        }
    }
    json!({
        "sp": s.sp.iter().map(spec_value).collect::<Vec<_>>(),
        "multiplicities": counts
            .iter()
            .map(|(v, c)| json!({"value": spec_value(v), "count": c}))
            .collect::<Vec<_>>(),
        "isp": s.isp.iter().map(|e| json!({
            "re": e.re,
            "im": e.im,
            "factor": e.factor.to_string(),
            "approximate": true,
            "precision": FLOAT_PRECISION,
        })).collect::<Vec<_>>(),
        "extended_cardinality": s.extended_len(),
    })
}

pub fn profile(p: &SignatureProfile) -> Value {
    json!({
        "jumps": p.jumps.iter().map(|j| json!({
            "x": angle(&j.angle),
            "sigma": j.sigma,
            "nullity": j.nullity,
        })).collect::<Vec<_>>(),
        "plateaus": p.plateaus,
        "irr": p.irr,
    })
}

pub fn h_numbers(h: &HNumbers) -> Value {
    json!({
        "p": h.p.iter().map(|e| json!({
            "x": angle(&e.angle), "k": e.k, "u": e.u, "count": e.count,
        })).collect::<Vec<_>>(),
        "blocks": h.blocks.iter().map(|b| json!({
            "x": angle(&b.angle), "k": b.k, "count": b.count,
        })).collect::<Vec<_>>(),
        "q": h.q().iter().map(|(f, k, c)| json!({
            "factor": f.to_string(), "k": k, "count": c,
        })).collect::<Vec<_>>(),
        "unresolved": h.unresolved.iter().map(|(a, k)| json!({"x": angle(a), "k": k})).collect::<Vec<_>>(),
    })
}

pub fn validation(r: &ValidationReport) -> Value {
    let v = |xs: &[crate::seifert::Violation]| {
        xs.iter()
            .map(|x| json!({"clause": x.clause.to_string(), "detail": x.detail}))
            .collect::<Vec<_>>()
    };
    json!({
        "passed": r.passed,
        "violations": v(&r.violations),
        "unverified": v(&r.unverified),
    })
}

/// Wraps a payload as a top-level document.
pub fn document(kind: &str, body: Value) -> Value {
    let mut o = Map::new();
    o.insert("schema".into(), json!(SCHEMA));
    o.insert("kind".into(), json!(kind));
    if let Value::Object(b) = body {
        o.extend(b);
    }
    Value::Object(o)
}

/// Reads a `"p/q"` string or an integer back.
pub fn parse_q(v: &Value) -> Option<Rational> {
    crate::seifert::parse_number(v).ok()
}
