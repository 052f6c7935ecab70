//! JSON documents emitted by the command-line front end.
//!
//! Every document is an object with `"schema": "weyl-torus/1"` and a `"kind"`
//! tag. Rationals are strings `"p"` or `"p/q"`, complex floats are
//! `{"re": .., "im": ..}` and polynomials are
//! `{"nvars": n, "terms": [{"exp": [..], "num": "p", "den": "q"}, ..]}`.

use num_complex::Complex64;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::exactnum::{parse_rational, GaussianRational, Rational};
use crate::geometry::McEstimate;
use crate::mpoly::{MPoly, Matrix};
use crate::orbitspace::{Coefficients, HermiteMatrix, MembershipReport, PointValue};
use crate::rootdata::{Family, RootSystemType};

pub const SCHEMA: &str = "weyl-torus/1";

fn bad(what: &str) -> Error {
    Error::Parse(format!("malformed JSON: {what}"))
}

fn document(kind: &str, ty: Option<RootSystemType>) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("schema".into(), json!(SCHEMA));
    m.insert("kind".into(), json!(kind));
    if let Some(t) = ty {
        m.insert("family".into(), json!(t.family.to_string()));
        m.insert("rank".into(), json!(t.rank));
    }
    m
}

pub fn rational_to_json(q: &Rational) -> Value {
    Value::String(q.to_string())
}

pub fn rational_from_json(v: &Value) -> Result<Rational> {
    parse_rational(v.as_str().ok_or_else(|| bad("rational must be a string"))?)
}

pub fn complex_to_json(c: Complex64) -> Value {
    json!({ "re": c.re, "im": c.im })
}

pub fn complex_from_json(v: &Value) -> Result<Complex64> {
    let f = |k: &str| v.get(k).and_then(Value::as_f64).ok_or_else(|| bad("complex needs re and im"));
    Ok(Complex64::new(f("re")?, f("im")?))
}

pub fn gaussian_to_json(g: &GaussianRational) -> Value {
    json!({ "re": rational_to_json(&g.re), "im": rational_to_json(&g.im) })
}

pub fn poly_to_json(p: &MPoly) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .map(|(e, c)| json!({ "exp": e, "num": c.numer().to_string(), "den": c.denom().to_string() }))
        .collect();
    json!({ "nvars": p.nvars(), "terms": terms })
}

pub fn poly_from_json(v: &Value) -> Result<MPoly> {
    let nvars = v.get("nvars").and_then(Value::as_u64).ok_or_else(|| bad("polynomial needs nvars"))? as usize;
    let terms = v.get("terms").and_then(Value::as_array).ok_or_else(|| bad("polynomial needs terms"))?;
    let mut out = Vec::with_capacity(terms.len());
    for t in terms {
        let exp = t
            .get("exp")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("term needs exp"))?
            .iter()
            .map(|e| e.as_u64().map(|e| e as u32).ok_or_else(|| bad("exponent must be a natural number")))
            .collect::<Result<Vec<u32>>>()?;
        let part = |k: &str| t.get(k).and_then(Value::as_str).ok_or_else(|| bad("term needs num and den"));
        let c = parse_rational(&format!("{}/{}", part("num")?, part("den")?))?;
        out.push((exp, c));
    }
    MPoly::from_terms(nvars, out)
}

fn matrix_to_json<T: Clone>(m: &Matrix<T>, f: impl Fn(&T) -> Value) -> Value {
    Value::Array(m.to_rows().iter().map(|r| Value::Array(r.iter().map(&f).collect())).collect())
}

fn kind_from_json(v: &Value) -> Result<RootSystemType> {
    let family: Family = v.get("family").and_then(Value::as_str).ok_or_else(|| bad("missing family"))?.parse()?;
    let rank = v.get("rank").and_then(Value::as_u64).ok_or_else(|| bad("missing rank"))? as usize;
    RootSystemType::new(family, rank)
}

pub fn hermite_to_json(h: &HermiteMatrix) -> Value {
    let mut m = document("hermite_matrix", Some(h.kind));
    m.insert("a2".into(), rational_to_json(&h.a2));
    m.insert("size".into(), json!(h.size()));
    m.insert("charpoly".into(), Value::Array(h.charpoly.iter().map(poly_to_json).collect()));
    m.insert("companion".into(), matrix_to_json(&h.companion, poly_to_json));
    m.insert("entries".into(), matrix_to_json(&h.h.to_matrix(), poly_to_json));
    Value::Object(m)
}

/// Type and matrix entries of an emitted Hermite matrix document.
pub fn hermite_from_json(v: &Value) -> Result<(RootSystemType, Matrix<MPoly>)> {
    if v.get("schema").and_then(Value::as_str) != Some(SCHEMA) {
        return Err(bad("unknown schema"));
    }
    let kind = kind_from_json(v)?;
    let rows = v.get("entries").and_then(Value::as_array).ok_or_else(|| bad("missing entries"))?;
    let rows = rows
        .iter()
        .map(|r| r.as_array().ok_or_else(|| bad("row must be an array"))?.iter().map(poly_from_json).collect())
        .collect::<Result<Vec<Vec<MPoly>>>>()?;
    let n = rows.len();
    if rows.iter().any(|r| r.len() != n) {
        return Err(bad("entries must form a square matrix"));
    }
    Ok((kind, Matrix::from_rows(rows)))
}

/// A numeric Hermite matrix `H(z)` with its point.
pub fn hermite_value_to_json(kind: RootSystemType, z: &[Rational], h: &Matrix<Rational>) -> Value {
    let mut m = document("hermite_value", Some(kind));
    m.insert("point".into(), Value::Array(z.iter().map(rational_to_json).collect()));
    m.insert("entries".into(), matrix_to_json(h, rational_to_json));
    Value::Object(m)
}

pub fn membership_to_json(r: &MembershipReport) -> Value {
    let mut m = document("membership", Some(r.kind));
    let (exact, point) = match &r.point {
        PointValue::Exact(z) => (true, Value::Array(z.iter().map(rational_to_json).collect())),
        PointValue::Float(z) => (false, json!(z)),
    };
    m.insert("exact".into(), json!(exact));
    m.insert("point".into(), point);
    m.insert("psd".into(), json!(r.psd));
    m.insert("class".into(), serde_json::to_value(r.class).unwrap_or(Value::Null));
    m.insert("hermite_rank".into(), json!(r.rank));
    let coeffs = match &r.charpoly {
        Coefficients::Exact(c) => Value::Array(c.a.iter().map(rational_to_json).collect()),
        Coefficients::Float(a) => json!(a),
    };
    m.insert("charpoly".into(), coeffs);
    if let Some(pre) = &r.preimages {
        let pre: Vec<Value> =
            pre.iter().map(|x| Value::Array(x.iter().map(|c| complex_to_json(*c)).collect())).collect();
        m.insert("preimages".into(), Value::Array(pre));
    }
    Value::Object(m)
}

pub fn theta_to_json(kind: RootSystemType, real: &[Value], complex: &[Value]) -> Value {
    let mut m = document("theta", Some(kind));
    m.insert("point".into(), Value::Array(real.to_vec()));
    m.insert("complex".into(), Value::Array(complex.to_vec()));
    Value::Object(m)
}

pub fn preimages_to_json(kind: RootSystemType, z: &[f64], pre: &[Vec<Complex64>]) -> Value {
    let mut m = document("preimages", Some(kind));
    m.insert("point".into(), json!(z));
    let pre: Vec<Value> = pre.iter().map(|x| Value::Array(x.iter().map(|c| complex_to_json(*c)).collect())).collect();
    m.insert("preimages".into(), Value::Array(pre));
    Value::Object(m)
}

/// Named polynomials, for `cheb` and `phi`.
pub fn polys_to_json(kind: RootSystemType, what: &str, polys: &[(String, &MPoly)]) -> Value {
    let mut m = document(what, Some(kind));
    let entries: Vec<Value> =
        polys.iter().map(|(name, p)| json!({ "name": name, "text": p.to_string(), "poly": poly_to_json(p) })).collect();
    m.insert("polynomials".into(), Value::Array(entries));
    Value::Object(m)
}

/// `M̃` either symbolically (pairs of real and imaginary parts) or at a point.
pub fn mmatrix_to_json(kind: RootSystemType, entries: &Matrix<(MPoly, MPoly)>) -> Value {
    let mut m = document("m_matrix", Some(kind));
    m.insert(
        "entries".into(),
        matrix_to_json(entries, |(re, im)| json!({ "re": poly_to_json(re), "im": poly_to_json(im) })),
    );
    Value::Object(m)
}

pub fn mmatrix_value_to_json(kind: RootSystemType, entries: &Matrix<Complex64>, eigenvalues: &[f64]) -> Value {
    let mut m = document("m_matrix_value", Some(kind));
    m.insert("entries".into(), matrix_to_json(entries, |c| complex_to_json(*c)));
    m.insert("eigenvalues".into(), json!(eigenvalues));
    Value::Object(m)
}

pub fn mc_to_json(kind: RootSystemType, mu: &[i64], nu: &[i64], seed: u64, e: &McEstimate) -> Value {
    let mut m = document("orthogonality", Some(kind));
    m.insert("mu".into(), json!(mu));
    m.insert("nu".into(), json!(nu));
    m.insert("seed".into(), json!(seed));
    m.insert("samples".into(), json!(e.samples));
    m.insert("estimate".into(), complex_to_json(e.estimate));
    m.insert("target".into(), rational_to_json(&e.target));
    m.insert("stderr".into(), json!(e.stderr));
    Value::Object(m)
}

/// Diagnostic document for a failed computation.
pub fn error_to_json(e: &Error) -> Value {
    let mut m = document("error", None);
    m.insert("message".into(), json!(e.to_string()));
    if let Error::RootFinding { residuals } = e {
        m.insert("residuals".into(), json!(residuals));
    }
    Value::Object(m)
}
