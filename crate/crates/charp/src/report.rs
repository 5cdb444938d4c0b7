//! JSON shapes of the results and their text renderings.
//!
//! Rationals are always `"num/den"` strings and ideals are lists of the
//! reduced Gröbner basis generators, so output is exact and deterministic.

use charp_core::{
    parse_poly, FptResult, HslReport, Ideal, JumpCertificate, JumpStatus, Polynomial, RingContext, Result,
};
use serde_json::{json, Value};

pub fn ideal_json(ideal: &Ideal) -> Result<Value> {
    let gens: Vec<Value> = ideal.canonical()?.iter().map(|g| Value::String(g.to_string())).collect();
    Ok(Value::Array(gens))
}

pub fn certificate_json(c: &JumpCertificate) -> Result<Value> {
    let mut v = json!({
        "value": c.value.to_string(),
        "status": c.status.as_str(),
        "tauAt": ideal_json(&c.tau_at)?,
        "tauLeft": ideal_json(&c.tau_left)?,
    });
    if let Some((lo, hi)) = &c.interval {
        v["interval"] = json!([lo.to_string(), hi.to_string()]);
    }
    Ok(v)
}

pub fn fpt_json(r: &FptResult) -> Result<Value> {
    match r {
        FptResult::Certified(c) => certificate_json(c),
        FptResult::Interval { lo, hi } => Ok(json!({
            "status": "interval",
            "interval": [lo.to_string(), hi.to_string()],
        })),
    }
}

pub fn hsl_json(r: &HslReport) -> Result<Value> {
    let chain = r.chain.iter().map(ideal_json).collect::<Result<Vec<_>>>()?;
    Ok(json!({ "hsl": r.hsl, "chain": chain }))
}

pub fn jumps_json(list: &[JumpCertificate]) -> Result<Value> {
    Ok(Value::Array(list.iter().map(certificate_json).collect::<Result<Vec<_>>>()?))
}

fn str_of(v: &Value) -> &str {
    v.as_str().unwrap_or("?")
}

fn interval_text(v: &Value, closed_right: bool) -> String {
    let right = if closed_right { "]" } else { ")" };
    format!("({}, {}{right}", str_of(&v[0]), str_of(&v[1]))
}

/// Generator list, one per line.
pub fn ideal_text(v: &Value) -> String {
    v.as_array().map(|a| a.iter().map(|g| format!("{}\n", str_of(g))).collect()).unwrap_or_default()
}

pub fn fpt_text(v: &Value) -> String {
    if v["status"] == "interval" {
        format!("{} interval\n", interval_text(&v["interval"], true))
    } else {
        format!("{} certified\n", str_of(&v["value"]))
    }
}

pub fn certificate_text(v: &Value) -> String {
    match &v["interval"] {
        Value::Array(_) => format!("{} {}\n", interval_text(&v["interval"], false), str_of(&v["status"])),
        _ => format!("{} {}\n", str_of(&v["value"]), str_of(&v["status"])),
    }
}

pub fn jumps_text(v: &Value) -> String {
    v.as_array().map(|a| a.iter().map(certificate_text).collect()).unwrap_or_default()
}

/// One-cell summaries for scan rows: (value, status).
pub fn fpt_cell(v: &Value) -> (String, String) {
    if v["status"] == "interval" {
        (interval_text(&v["interval"], true), "interval".into())
    } else {
        (str_of(&v["value"]).into(), "certified".into())
    }
}

pub fn jumps_cell(v: &Value) -> (String, String) {
    let items = v.as_array().cloned().unwrap_or_default();
    let mut uncertain = false;
    let cells: Vec<String> = items
        .iter()
        .map(|c| {
            if c["status"] == JumpStatus::Candidate.as_str() {
                uncertain = true;
                interval_text(&c["interval"], false)
            } else {
                str_of(&c["value"]).to_string()
            }
        })
        .collect();
    let status = if uncertain { "candidate" } else { "certified" };
    (cells.join(";"), status.into())
}

pub fn hsl_cell(v: &Value) -> (String, String) {
    (v["hsl"].to_string(), "ok".into())
}

/// Structural equality where generator lists compare as ideals.
pub fn same_result(ring: &RingContext, a: &Value, b: &Value) -> Result<bool> {
    match (a, b) {
        (Value::Array(x), Value::Array(y)) => {
            if let (Some(i), Some(j)) = (as_ideal(ring, x), as_ideal(ring, y)) {
                return i.equals(&j);
            }
            if x.len() != y.len() {
                return Ok(false);
            }
            for (u, v) in x.iter().zip(y) {
                if !same_result(ring, u, v)? {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        (Value::Object(x), Value::Object(y)) => {
            if x.len() != y.len() {
                return Ok(false);
            }
            for (k, u) in x {
                match y.get(k) {
                    Some(v) if same_result(ring, u, v)? => {}
                    _ => return Ok(false),
                }
            }
            Ok(true)
        }
        _ => Ok(a == b),
    }
}

fn as_ideal(ring: &RingContext, items: &[Value]) -> Option<Ideal> {
    if items.is_empty() {
        return None;
    }
    let gens = items
        .iter()
        .map(|g| g.as_str().and_then(|s| parse_poly(ring, s).ok()))
        .collect::<Option<Vec<Polynomial>>>()?;
    Ideal::new(ring, gens).ok()
}
