//! JSON rendering with numbers rounded to 12 significant digits.

use serde::Serialize;
use serde_json::{json, Value};

use crate::geometry::RegionReport;
use crate::radius::CauchyRadius;
use crate::theorems::BoundInterval;

pub const SIGNIFICANT_DIGITS: usize = 12;

/// `x` rounded to [`SIGNIFICANT_DIGITS`] significant digits.
pub fn round_sig(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x)
        .parse()
        .expect("formatted float parses")
}

/// Rounds every floating-point number in `v`; integers are left alone.
pub fn round_value(v: &mut Value) {
    match v {
        Value::Number(n) if n.is_f64() => {
            if let Some(x) = n.as_f64() {
                *v = json!(round_sig(x));
            }
        }
        Value::Array(items) => items.iter_mut().for_each(round_value),
        Value::Object(map) => map.values_mut().for_each(round_value),
        _ => {}
    }
}

/// Any serializable value as rounded, pretty-printed JSON.
pub fn to_rounded_json<T: Serialize>(value: &T) -> String {
    let mut v = serde_json::to_value(value).expect("serializable");
    round_value(&mut v);
    serde_json::to_string_pretty(&v).expect("valid JSON value")
}

pub fn region_report_json(r: &RegionReport) -> String {
    to_rounded_json(r)
}

/// `{"lower": .., "upper": ..}`.
pub fn bounds_json(b: &BoundInterval) -> String {
    let mut v = json!({ "lower": b.lower, "upper": b.upper });
    round_value(&mut v);
    serde_json::to_string(&v).expect("valid JSON value")
}

/// Cauchy radius of kind `k` and, for `k = 1`, the modulus interval it gives
/// together with the reverse polynomial's radius.
pub fn cauchy_json(radius: &CauchyRadius, reverse: Option<&CauchyRadius>) -> String {
    let mut v = json!({
        "kind": radius.kind,
        "value": radius.value,
        "residual": radius.residual,
    });
    if let Some(rev) = reverse {
        v["reverse_value"] = json!(rev.value);
        if radius.kind == 1 {
            v["lower"] = json!(1.0 / rev.value);
            v["upper"] = json!(radius.value);
        }
    }
    round_value(&mut v);
    serde_json::to_string(&v).expect("valid JSON value")
}
