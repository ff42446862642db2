#![allow(dead_code)]

use std::path::{Path, PathBuf};

use serde_json::Value;

pub fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

pub fn schema(name: &str) -> Value {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("schemas").join(format!("{name}.schema.json"));
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

/// Runs the CLI in-process: (exit code, stdout, stderr).
pub fn tgg(args: &[&str]) -> (i32, String, String) {
    let argv: Vec<String> = std::iter::once("tgg").chain(args.iter().copied()).map(String::from).collect();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = tubular::cli::main_with(&argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

/// Checks `doc` against the subset of JSON Schema used by the shipped
/// schemas. Returns the first failing instance path.
pub fn check(schema: &Value, doc: &Value) -> Result<(), String> {
    check_at(schema, schema, doc, "")
}

fn check_at(root: &Value, s: &Value, doc: &Value, at: &str) -> Result<(), String> {
    let fail = |what: &str| Err(format!("{at}: {what}"));
    let Some(s) = s.as_object() else {
        return Ok(());
    };
    if let Some(r) = s.get("$ref").and_then(Value::as_str) {
        let name = r.strip_prefix("#/$defs/").expect("local refs only");
        check_at(root, &root["$defs"][name], doc, at)?;
    }
    if let Some(t) = s.get("type") {
        let types: Vec<&str> = match t {
            Value::String(x) => vec![x.as_str()],
            Value::Array(xs) => xs.iter().filter_map(Value::as_str).collect(),
            _ => panic!("bad type keyword"),
        };
        let ok = types.iter().any(|&t| match t {
            "object" => doc.is_object(),
            "array" => doc.is_array(),
            "string" => doc.is_string(),
            "boolean" => doc.is_boolean(),
            "null" => doc.is_null(),
            "integer" => doc.is_i64() || doc.is_u64(),
            "number" => doc.is_number(),
            _ => panic!("unknown type {t}"),
        });
        if !ok {
            return fail(&format!("expected {types:?}"));
        }
    }
    if let Some(c) = s.get("const") {
        if c != doc {
            return fail(&format!("expected {c}"));
        }
    }
    if let Some(e) = s.get("enum").and_then(Value::as_array) {
        if !e.contains(doc) {
            return fail("not in enum");
        }
    }
    if let Some(n) = s.get("not") {
        if check_at(root, n, doc, at).is_ok() {
            return fail("matched a forbidden schema");
        }
    }
    if let Some(alts) = s.get("oneOf").and_then(Value::as_array) {
        let matches = alts.iter().filter(|a| check_at(root, a, doc, at).is_ok()).count();
        if matches != 1 {
            return fail(&format!("{matches} oneOf branches match"));
        }
    }
    if let (Some(m), Some(x)) = (s.get("minimum").and_then(Value::as_i64), doc.as_i64()) {
        if x < m {
            return fail("below minimum");
        }
    }
    if let (Some(m), Some(x)) = (s.get("minLength").and_then(Value::as_u64), doc.as_str()) {
        if (x.chars().count() as u64) < m {
            return fail("too short");
        }
    }
    if let Some(items) = doc.as_array() {
        if let Some(m) = s.get("minItems").and_then(Value::as_u64) {
            if (items.len() as u64) < m {
                return fail("too few items");
            }
        }
        if let Some(m) = s.get("maxItems").and_then(Value::as_u64) {
            if (items.len() as u64) > m {
                return fail("too many items");
            }
        }
        if let Some(item) = s.get("items") {
            for (i, x) in items.iter().enumerate() {
                check_at(root, item, x, &format!("{at}/{i}"))?;
            }
        }
    }
    if let Some(obj) = doc.as_object() {
        let props = s.get("properties").and_then(Value::as_object);
        for r in s.get("required").and_then(Value::as_array).into_iter().flatten() {
            if !obj.contains_key(r.as_str().unwrap()) {
                return fail(&format!("missing {r}"));
            }
        }
        for (k, v) in obj {
            match props.and_then(|p| p.get(k)) {
                Some(ps) => check_at(root, ps, v, &format!("{at}/{k}"))?,
                None if s.get("additionalProperties") == Some(&Value::Bool(false)) => {
                    return fail(&format!("unexpected property {k}"))
                }
                None => {}
            }
        }
    }
    Ok(())
}
