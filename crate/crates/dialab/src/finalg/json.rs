//! JSON encoding of structure constants.

use std::collections::BTreeMap;

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::freealg::Op;
use crate::rational::{parse_q, q_to_json, Q};

use super::{FiniteAlgebra, Kind, Table};

fn malformed(msg: impl Into<String>) -> Error {
    Error::MalformedAlgebra(msg.into())
}

fn coef_to_json(c: &Q) -> Value {
    q_to_json(c)
}

fn coef_from_json(v: &Value) -> Result<Q> {
    match v {
        Value::Number(n) => {
            let i = n.as_i64().ok_or_else(|| malformed(format!("coefficient {n} is not an integer")))?;
            Ok(Q::from_integer(i.into()))
        }
        Value::String(s) => parse_q(s).map_err(|_| malformed(format!("bad coefficient {s:?}"))),
        other => Err(malformed(format!("bad coefficient {other}"))),
    }
}

pub fn algebra_to_json(a: &FiniteAlgebra) -> Value {
    let mut tables = Map::new();
    for (op, t) in a.tables() {
        let t: Vec<Vec<Vec<Value>>> =
            t.iter().map(|row| row.iter().map(|v| v.iter().map(coef_to_json).collect()).collect()).collect();
        tables.insert(op.table_name().to_string(), json!(t));
    }
    json!({ "kind": a.kind().name(), "basis": a.basis(), "tables": tables })
}

fn parse_parts(text: &str) -> Result<(Kind, Vec<String>, BTreeMap<Op, Table>)> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse(format!("invalid JSON: {e}")))?;
    let obj = v.as_object().ok_or_else(|| malformed("expected a JSON object"))?;
    let kind = obj.get("kind").and_then(Value::as_str).ok_or_else(|| malformed("missing \"kind\""))?;
    let kind = Kind::from_name(kind)?;
    let basis: Vec<String> = obj
        .get("basis")
        .and_then(Value::as_array)
        .ok_or_else(|| malformed("missing \"basis\""))?
        .iter()
        .map(|b| b.as_str().map(str::to_string).ok_or_else(|| malformed("basis names must be strings")))
        .collect::<Result<_>>()?;
    let k = basis.len();
    let raw = obj.get("tables").and_then(Value::as_object).ok_or_else(|| malformed("missing \"tables\""))?;
    let mut tables = BTreeMap::new();
    for (name, t) in raw {
        let op = kind
            .ops()
            .iter()
            .copied()
            .find(|o| o.table_name() == name)
            .ok_or_else(|| malformed(format!("unexpected table {name:?} for a {kind}")))?;
        let rows = t.as_array().ok_or_else(|| malformed(format!("table {name:?} is not an array")))?;
        if rows.len() != k {
            return Err(malformed(format!("table {name:?} has {} rows, expected {k}", rows.len())));
        }
        let mut table: Table = Vec::with_capacity(k);
        for row in rows {
            let row = row.as_array().filter(|r| r.len() == k).ok_or_else(|| malformed(format!("table {name:?} is not {k}×{k}")))?;
            let mut out = Vec::with_capacity(k);
            for cell in row {
                let cell = cell
                    .as_array()
                    .filter(|c| c.len() == k)
                    .ok_or_else(|| malformed(format!("table {name:?} has a product vector of the wrong length")))?;
                out.push(cell.iter().map(coef_from_json).collect::<Result<Vec<Q>>>()?);
            }
            table.push(out);
        }
        tables.insert(op, table);
    }
    for op in kind.ops() {
        if !tables.contains_key(op) {
            return Err(malformed(format!("missing table {:?}", op.table_name())));
        }
    }
    Ok((kind, basis, tables))
}

/// Parses and checks the axioms of the declared kind.
pub fn algebra_from_json(text: &str) -> Result<FiniteAlgebra> {
    let (kind, basis, tables) = parse_parts(text)?;
    FiniteAlgebra::new(kind, basis, tables)
}

/// Parses without checking axioms, for inspecting non-examples.
pub fn algebra_from_json_deferred(text: &str) -> Result<FiniteAlgebra> {
    let (kind, basis, tables) = parse_parts(text)?;
    FiniteAlgebra::new_deferred(kind, basis, tables)
}
