//! Report assembly and rendering.
//!
//! Exact quantities are emitted as strings (`"p/q"`, or `"p"` for integers)
//! so that no exact field ever goes through a float. Object keys are kept in
//! sorted order, which makes parse-then-render of a JSON report byte-identical.

use flagcy_core::{Error, InvariantClass, LineBundleClass, ParabolicFlag, Rational, TwoPiMultiple};
use num_bigint::BigInt;
use serde_json::{json, Map, Value};

/// Process exit status for each outcome.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exit {
    Ok = 0,
    Parse = 1,
    Math = 2,
    Unsupported = 3,
    Tolerance = 4,
}

#[derive(Debug, Clone)]
pub struct Failure {
    pub exit: Exit,
    pub code: String,
    pub message: String,
}

impl Failure {
    pub fn parse(message: impl Into<String>) -> Self {
        Failure {
            exit: Exit::Parse,
            code: "ParseError".into(),
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        let exit = match err {
            Error::UnsupportedType(_) => Exit::Unsupported,
            Error::InvalidRank { .. } | Error::IndexOutOfRange { .. } | Error::DimensionMismatch { .. } => {
                Exit::Parse
            }
            _ => Exit::Math,
        };
        Failure {
            exit,
            code: err.code().into(),
            message: err.to_string(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub results: Value,
    pub failure: Option<Failure>,
}

impl Report {
    pub fn exit(&self) -> Exit {
        self.failure.as_ref().map_or(Exit::Ok, |f| f.exit)
    }

    pub fn to_value(&self) -> Value {
        let status = match &self.failure {
            None => json!({ "state": "ok" }),
            Some(f) => json!({
                "state": "error",
                "code": f.code,
                "message": f.message,
                "exit_code": f.exit as i32,
            }),
        };
        json!({
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "status": status,
        })
    }

    pub fn to_json(&self) -> String {
        render_json(&self.to_value())
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("command: {}\n", self.command));
        match &self.failure {
            None => out.push_str("status: ok\n"),
            Some(f) => out.push_str(&format!("status: error {} ({})\n", f.code, f.message)),
        }
        out.push_str("inputs:\n");
        write_text(&mut out, &self.inputs, 1);
        if !self.results.is_null() {
            out.push_str("results:\n");
            write_text(&mut out, &self.results, 1);
        }
        out
    }
}

pub fn render_json(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("JSON values always serialise");
    s.push('\n');
    s
}

fn write_text(out: &mut String, value: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                if let Some(inline) = inline_text(v) {
                    out.push_str(&format!("{pad}{k}: {inline}\n"));
                } else {
                    out.push_str(&format!("{pad}{k}:\n"));
                    write_text(out, v, depth + 1);
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                match inline_text(item) {
                    Some(inline) => out.push_str(&format!("{pad}- {inline}\n")),
                    None => {
                        out.push_str(&format!("{pad}-\n"));
                        write_text(out, item, depth + 1);
                    }
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar_text(other))),
    }
}

fn scalar_text(value: &Value) -> String {
    match value {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// One-line form for scalars, scalar arrays and classes.
fn inline_text(value: &Value) -> Option<String> {
    match value {
        Value::Array(items) if items.iter().all(|v| !v.is_object() && !v.is_array()) => Some(format!(
            "({})",
            items.iter().map(scalar_text).collect::<Vec<_>>().join(", ")
        )),
        Value::Object(map) if map.len() == 2 && map.contains_key("two_pi_power") => {
            let power = map["two_pi_power"].as_i64()?;
            let coeffs = map.get("coeffs").or_else(|| map.get("value"))?;
            let body = match coeffs {
                Value::Object(c) => format!(
                    "({})",
                    c.values().map(scalar_text).collect::<Vec<_>>().join(", ")
                ),
                other => scalar_text(other),
            };
            Some(match power {
                0 => body,
                1 => format!("2π·{body}"),
                p => format!("(2π)^{p}·{body}"),
            })
        }
        Value::Object(_) | Value::Array(_) => None,
        other => Some(scalar_text(other)),
    }
}

pub fn rational(r: &Rational) -> Value {
    Value::String(r.to_string())
}

pub fn rationals(rs: &[Rational]) -> Value {
    Value::Array(rs.iter().map(rational).collect())
}

pub fn integer(i: &BigInt) -> Value {
    Value::String(i.to_string())
}

pub fn alpha_key(index: usize) -> String {
    format!("alpha_{}", index + 1)
}

/// `{ "alpha_i": value }` over `Δ∖I`.
pub fn over_complement(flag: &ParabolicFlag, values: impl IntoIterator<Item = Value>) -> Value {
    let map: Map<String, Value> = flag
        .complement()
        .iter()
        .map(|&a| alpha_key(a))
        .zip(values)
        .collect();
    Value::Object(map)
}

pub fn class(flag: &ParabolicFlag, c: &InvariantClass) -> Value {
    let c = c.clone().normalized();
    json!({
        "two_pi_power": c.two_pi_power,
        "coeffs": over_complement(flag, c.coeffs.iter().map(rational)),
    })
}

pub fn bundle(flag: &ParabolicFlag, b: &LineBundleClass) -> Value {
    over_complement(flag, b.coeffs.iter().map(integer))
}

pub fn two_pi(m: &TwoPiMultiple) -> Value {
    json!({ "two_pi_power": m.two_pi_power, "value": rational(&m.value) })
}

pub fn index_list(indices: &[usize]) -> Value {
    Value::Array(indices.iter().map(|&i| json!(i + 1)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use flagcy_core::rational::rat;

    #[test]
    fn rationals_render_exactly() {
        assert_eq!(rational(&rat(3, 4)), json!("3/4"));
        assert_eq!(rational(&rat(-4, 2)), json!("-2"));
    }

    #[test]
    fn json_round_trip() {
        let r = Report {
            command: "x".into(),
            inputs: json!({ "b": 1, "a": [0.5, 1e-5] }),
            results: json!({ "z": "1/2", "y": null }),
            failure: None,
        };
        let text = r.to_json();
        let back: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(render_json(&back), text);
        assert!(text.find("\"a\"").unwrap() < text.find("\"b\"").unwrap());
    }

    #[test]
    fn text_inlines_classes() {
        let v = json!({ "c": { "two_pi_power": 1, "coeffs": { "alpha_1": "2", "alpha_2": "2" } } });
        let mut out = String::new();
        write_text(&mut out, &v, 0);
        assert_eq!(out, "c: 2π·(2, 2)\n");
    }
}
