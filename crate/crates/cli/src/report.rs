//! JSON and plain-text renderers shared by the commands. Every JSON
//! payload follows the same shape: {"command", "inputs", "results"},
//! with polynomial coefficients as exact "p/q" strings in ascending
//! degree order.

use serde_json::{json, Value};

use signed_corona::balance::EdgeClassCounts;
use signed_corona::{FactoredPoly, Polynomial, RationalFunction, TriadCensus};

pub fn envelope(command: &str, inputs: Value, results: Value) -> Value {
    json!({ "command": command, "inputs": inputs, "results": results })
}

pub fn poly_json(p: &Polynomial) -> Value {
    json!({ "pretty": p.to_string(), "coeffs": p.coeff_strings() })
}

pub fn factored_json(fp: &FactoredPoly) -> Value {
    json!({
        "pretty": fp.expanded.to_string(),
        "coeffs": fp.expanded.coeff_strings(),
        "factors": fp.factors.iter().map(|(f, m)| json!({
            "pretty": f.to_string(),
            "coeffs": f.coeff_strings(),
            "multiplicity": m,
        })).collect::<Vec<Value>>(),
    })
}

pub fn ratfun_json(r: &RationalFunction) -> Value {
    json!({
        "pretty": r.to_string(),
        "num_coeffs": r.num().coeff_strings(),
        "den_coeffs": r.den().coeff_strings(),
    })
}

pub fn triads_json(census: &TriadCensus) -> Value {
    json!({
        "t0": census.t0, "t1": census.t1, "t2": census.t2, "t3": census.t3,
        "total": census.total(),
    })
}

pub fn edge_classes_json(classes: &EdgeClassCounts) -> Value {
    json!({
        "positive": {
            "both_plus": classes.positive.both_plus,
            "mixed": classes.positive.mixed,
            "both_minus": classes.positive.both_minus,
        },
        "negative": {
            "both_plus": classes.negative.both_plus,
            "mixed": classes.negative.mixed,
            "both_minus": classes.negative.both_minus,
        },
    })
}

pub fn factors_pretty(fp: &FactoredPoly) -> String {
    if fp.factors.is_empty() {
        return "1".to_owned();
    }
    fp.factors
        .iter()
        .map(|(f, m)| {
            if *m == 1 {
                format!("({f})")
            } else {
                format!("({f})^{m}")
            }
        })
        .collect::<Vec<_>>()
        .join(" * ")
}
