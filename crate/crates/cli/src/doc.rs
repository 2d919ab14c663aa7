//! Report documents. Every document is a `serde_json::Value` built with
//! insertion-ordered maps, so JSON and text output share one key order.
//! Integers are decimal strings and rationals are `p/q` strings.

use std::fmt::Write;

use logdiv::poly::fmt_rat;
use logdiv::theorems::{ComplementResult, Ingredients, Ledger};
use logdiv::{Rat, VerificationReport};
use serde_json::{json, Value};

pub fn rat(r: &Rat) -> Value {
    Value::String(fmt_rat(r))
}

pub fn int(x: impl ToString) -> Value {
    Value::String(x.to_string())
}

pub fn point(p: &[Rat]) -> Value {
    Value::Array(p.iter().map(rat).collect())
}

pub fn ledger(l: &Ledger) -> Value {
    l.entries()
        .iter()
        .map(|e| json!({ "quantity": e.quantity, "value": int(&e.value), "route": e.route }))
        .collect()
}

pub fn verification(r: &VerificationReport) -> Value {
    let variants: Vec<Value> = r
        .variants
        .iter()
        .map(|v| {
            json!({
                "name": v.name,
                "default": v.name == r.default_variant,
                "rhs": int(&v.rhs),
                "residual": int(&v.residual),
                "pass": v.pass,
            })
        })
        .collect();
    json!({
        "command": "verify",
        "formula": r.formula,
        "lhs": { "quantity": r.lhs_name, "value": int(&r.lhs) },
        "default_variant": r.default_variant,
        "verdict": if r.passes() { "pass" } else { "fail" },
        "variants": variants,
        "ledger": ledger(&r.ledger),
        "notes": r.notes,
    })
}

pub fn euler(r: &ComplementResult, ing: &Ingredients) -> Value {
    json!({
        "command": "euler",
        "n": int(ing.n),
        "degrees": ing.degrees.iter().map(int).collect::<Vec<_>>(),
        "chi_complement": int(&r.value),
        "routes": {
            "log_chern": int(&r.log_chern_route),
            "inclusion_exclusion": int(&r.inclusion_exclusion_route),
        },
        "ledger": ledger(&ing.ledger),
        "notes": ing.notes,
    })
}

pub fn error(e: &crate::CliError) -> Value {
    json!({
        "error": {
            "code": e.code(),
            "kind": e.kind_name(),
            "message": e.to_string(),
        }
    })
}

/// Indented plain-text rendering of a document.
pub fn render_text(v: &Value) -> String {
    let mut out = String::new();
    walk(&mut out, v, 0);
    out
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) if items.iter().all(|i| matches!(i, Value::String(s) if !s.contains(' '))) => {
            let parts: Vec<String> = items.iter().filter_map(scalar).collect();
            Some(format!("[{}]", parts.join(", ")))
        }
        _ => None,
    }
}

fn walk(out: &mut String, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(map) => {
            for (k, item) in map {
                match scalar(item) {
                    Some(s) => writeln!(out, "{pad}{k}: {s}").unwrap(),
                    None => {
                        writeln!(out, "{pad}{k}:").unwrap();
                        walk(out, item, depth + 1);
                    }
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                match scalar(item) {
                    Some(s) => writeln!(out, "{pad}- {s}").unwrap(),
                    None => {
                        let mut inner = String::new();
                        walk(&mut inner, item, 0);
                        for (i, line) in inner.lines().enumerate() {
                            let lead = if i == 0 { "- " } else { "  " };
                            writeln!(out, "{pad}{lead}{line}").unwrap();
                        }
                    }
                }
            }
        }
        other => writeln!(out, "{pad}{}", scalar(other).unwrap_or_default()).unwrap(),
    }
}
