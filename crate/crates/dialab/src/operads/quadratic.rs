//! Binary quadratic non-Σ operad data and Koszul duality.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::linalg::{nullspace, rref};
use crate::rational::{fmt_q, parse_q, q_to_json, Q};

/// The two parenthesizations of a quadratic monomial in `x, y, z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Slot {
    /// `(x a y) b z`
    Left = 1,
    /// `x a (y b z)`
    Right = 2,
}

/// Generators `E′` and a relation subspace `R′ ⊂ E′⊗E′ ⊕ E′⊗E′`.
///
/// The coordinate of `(a, b)_s` is `(s - 1)·g² + a·g + b`, where `a` and `b`
/// are the operations read left to right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticData {
    generators: Vec<String>,
    relations: Vec<Vec<Q>>,
}

pub const PRESETS: [&str; 3] = ["dias", "dend", "as"];

impl QuadraticData {
    /// Reduces the relations to a row echelon basis of their span.
    pub fn new(generators: Vec<String>, relations: Vec<Vec<Q>>) -> Result<QuadraticData> {
        if generators.is_empty() {
            return Err(Error::InvalidArgument("no generators".into()));
        }
        let g = generators.len();
        for (k, r) in relations.iter().enumerate() {
            if r.len() != 2 * g * g {
                return Err(Error::InvalidArgument(format!(
                    "relation {k} has length {}, expected {}",
                    r.len(),
                    2 * g * g
                )));
            }
        }
        let (rows, _) = rref(&relations);
        Ok(QuadraticData { generators, relations: rows })
    }

    /// Builds relations from `(coefficient, a, b, slot)` terms.
    pub fn from_terms(generators: &[&str], relations: &[&[(i64, &str, &str, Slot)]]) -> Result<QuadraticData> {
        let gens: Vec<String> = generators.iter().map(|s| s.to_string()).collect();
        let g = gens.len();
        let find = |s: &str| {
            gens.iter().position(|x| x == s).ok_or_else(|| Error::InvalidArgument(format!("unknown generator {s}")))
        };
        let mut rows = Vec::new();
        for rel in relations {
            let mut v = vec![Q::zero(); 2 * g * g];
            for &(c, a, b, slot) in rel.iter() {
                v[index(g, slot, find(a)?, find(b)?)] += Q::from_integer(c.into());
            }
            rows.push(v);
        }
        QuadraticData::new(gens, rows)
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relations(&self) -> &[Vec<Q>] {
        &self.relations
    }

    pub fn ambient_dim(&self) -> usize {
        2 * self.generators.len().pow(2)
    }

    /// Coordinate of `(a, b)_slot`.
    pub fn index(&self, slot: Slot, a: usize, b: usize) -> usize {
        index(self.generators.len(), slot, a, b)
    }

    /// The signed pairing: `+1` on slot 1, `-1` on slot 2.
    pub fn pairing(&self, u: &[Q], v: &[Q]) -> Q {
        let half = self.ambient_dim() / 2;
        u.iter().zip(v).enumerate().fold(Q::zero(), |acc, (k, (a, b))| if k < half { acc + a * b } else { acc - a * b })
    }

    /// Whether both relation spaces coincide in the common ambient space.
    pub fn same_span(&self, other: &QuadraticData) -> bool {
        self.ambient_dim() == other.ambient_dim() && self.relations == other.relations
    }

    /// The relations written as sums of `(a,b)_s` symbols.
    pub fn relation_strings(&self) -> Vec<String> {
        self.relations.iter().map(|r| self.format_vector(r)).collect()
    }

    fn format_vector(&self, r: &[Q]) -> String {
        let g = self.generators.len();
        let mut s = String::new();
        for (k, c) in r.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let slot = if k < g * g { 1 } else { 2 };
            let (a, b) = ((k % (g * g)) / g, k % g);
            let sym = format!("({},{})_{slot}", self.generators[a], self.generators[b]);
            let mag = c.abs();
            let body = if mag.is_one() { sym } else { format!("{}{sym}", fmt_q(&mag)) };
            if s.is_empty() {
                s = if c.is_negative() { format!("-{body}") } else { body };
            } else {
                s.push_str(if c.is_negative() { " - " } else { " + " });
                s.push_str(&body);
            }
        }
        s
    }

    pub fn to_json(&self) -> Value {
        let rels: Vec<Value> = self
            .relations
            .iter()
            .map(|r| Value::Array(r.iter().map(q_to_json).collect()))
            .collect();
        json!({ "generators": self.generators, "relations": rels })
    }

    pub fn from_json(text: &str) -> Result<QuadraticData> {
        let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let bad = |m: &str| Error::InvalidArgument(format!("quadratic data: {m}"));
        let gens = v
            .get("generators")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing generators"))?
            .iter()
            .map(|g| g.as_str().map(str::to_string).ok_or_else(|| bad("generator is not a string")))
            .collect::<Result<Vec<_>>>()?;
        let rels = v
            .get("relations")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing relations"))?
            .iter()
            .map(|r| {
                r.as_array()
                    .ok_or_else(|| bad("relation is not an array"))?
                    .iter()
                    .map(|x| match x {
                        Value::Number(n) => parse_q(&n.to_string()),
                        Value::String(s) => parse_q(s),
                        _ => Err(bad("coefficient is not a number")),
                    })
                    .collect::<Result<Vec<Q>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        QuadraticData::new(gens, rels)
    }
}

fn index(g: usize, slot: Slot, a: usize, b: usize) -> usize {
    (slot as usize - 1) * g * g + a * g + b
}

impl fmt::Display for QuadraticData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "generators: {}", self.generators.join(", "))?;
        for r in self.relation_strings() {
            writeln!(f, "{r} = 0")?;
        }
        Ok(())
    }
}

pub fn preset_quadratic(name: &str) -> Result<QuadraticData> {
    use Slot::{Left as L, Right as R};
    match name {
        "dias" => QuadraticData::from_terms(
            &["left", "right"],
            &[
                &[(1, "left", "left", R), (-1, "left", "left", L)],
                &[(1, "left", "left", L), (-1, "left", "right", R)],
                &[(1, "right", "left", L), (-1, "right", "left", R)],
                &[(1, "left", "right", L), (-1, "right", "right", R)],
                &[(1, "right", "right", R), (-1, "right", "right", L)],
            ],
        ),
        "dend" => QuadraticData::from_terms(
            &["prec", "succ"],
            &[
                &[(1, "prec", "prec", L), (-1, "prec", "prec", R), (-1, "prec", "succ", R)],
                &[(1, "succ", "prec", L), (-1, "succ", "prec", R)],
                &[(1, "succ", "succ", R), (-1, "prec", "succ", L), (-1, "succ", "succ", L)],
            ],
        ),
        "as" => QuadraticData::from_terms(&["mult"], &[&[(1, "mult", "mult", R), (-1, "mult", "mult", L)]]),
        _ => Err(Error::UnknownPreset(name.to_string())),
    }
}

/// The annihilator of the relations under the signed pairing, on the same
/// generators.
pub fn quadratic_dual(q: &QuadraticData) -> QuadraticData {
    let half = q.ambient_dim() / 2;
    let twisted: Vec<Vec<Q>> = q
        .relations
        .iter()
        .map(|r| r.iter().enumerate().map(|(k, x)| if k < half { x.clone() } else { -x.clone() }).collect())
        .collect();
    let ann = nullspace(&twisted, q.ambient_dim());
    QuadraticData::new(q.generators.clone(), ann).expect("same ambient space")
}
