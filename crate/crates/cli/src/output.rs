use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};
use strata_core::exact_ring::Rational;
use strata_core::{GradedPoly, HodgeDivisorClass, Partition};

/// What every command produces: a text rendering and a JSON document of the
/// shape `{"command", "inputs", "result", "citations"}`.
#[derive(Debug, Clone, PartialEq)]
pub struct OutputDocument {
    pub command: String,
    pub inputs: Map<String, Value>,
    pub result: Value,
    pub citations: Vec<String>,
    pub text: Vec<String>,
}

impl OutputDocument {
    pub fn new(command: &str) -> Self {
        Self {
            command: command.to_string(),
            inputs: Map::new(),
            result: Value::Null,
            citations: Vec::new(),
            text: Vec::new(),
        }
    }

    pub fn input(mut self, key: &str, value: Value) -> Self {
        self.inputs.insert(key.to_string(), value);
        self
    }

    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "inputs": Value::Object(self.inputs.clone()),
            "result": self.result,
            "citations": self.citations,
        })
    }

    pub fn render(&self, as_json: bool) -> String {
        if as_json {
            let mut s = serde_json::to_string_pretty(&self.to_json()).expect("serializable");
            s.push('\n');
            s
        } else {
            let mut s = self.text.join("\n");
            s.push('\n');
            s
        }
    }
}

pub fn q(r: &Rational) -> Value {
    Value::String(r.to_string())
}

pub fn q_list(rs: &[Rational]) -> Value {
    Value::Array(rs.iter().map(q).collect())
}

pub fn partition(p: &Partition) -> Value {
    json!(p.parts())
}

/// Terms in canonical monomial order.
pub fn poly(p: &GradedPoly) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .map(|(m, c)| {
            let exps: Map<String, Value> = m
                .factors()
                .iter()
                .map(|&(g, e)| (g.to_string(), json!(e)))
                .collect();
            json!({
                "monomial": m.to_string(),
                "exponents": exps,
                "coefficient": q(c),
            })
        })
        .collect();
    json!({ "text": p.to_string(), "cap": p.cap(), "terms": terms })
}

pub fn divisor_class(c: &HodgeDivisorClass) -> Value {
    let coords: Vec<Value> = c
        .coordinates()
        .into_iter()
        .map(|(label, v)| json!({ "class": label, "coefficient": q(&v) }))
        .collect();
    json!({ "text": c.to_string(), "g": c.g, "coordinates": coords })
}

/// Formats a rational for text output, optionally followed by a decimal
/// approximation that is marked as such.
pub fn fmt_q(r: &Rational, approx: bool) -> String {
    if !approx || r.is_integer() {
        return r.to_string();
    }
    match r.to_f64() {
        Some(f) => format!("{r} (≈ {f:.6}, inexact)"),
        None => r.to_string(),
    }
}
