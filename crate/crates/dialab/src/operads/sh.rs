//! Relations of a strong homotopy dialgebra: one relation per tree `y`,
//! summing `± m_{y″}(a_1, …, a_i, m_{y′}(a_{i+1}, …, a_{i+k}), …, a_n)` over
//! the nested sub-trees `y′` of `y`.

use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::rational::{sign, Q};
use crate::trees::Tree;

pub const MAX_SH_DEGREE: usize = 6;

/// The exponent `c + k·(|a_1| + … + |a_k|)` of a term's sign, with
/// `c = (k+1)(i+1) + k·n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignExponent {
    pub constant: usize,
    pub k: usize,
}

impl SignExponent {
    pub fn new(n: usize, i: usize, k: usize) -> SignExponent {
        SignExponent { constant: (k + 1) * (i + 1) + k * n, k }
    }

    /// The exponent for the argument degrees `|a_1|, |a_2|, …`.
    pub fn evaluate(&self, degrees: &[i64]) -> Result<i64> {
        if degrees.len() < self.k {
            return Err(Error::InvalidArgument(format!("need {} degrees, got {}", self.k, degrees.len())));
        }
        let s: i64 = degrees[..self.k].iter().sum();
        Ok(self.constant as i64 + self.k as i64 * s)
    }

    pub fn sign(&self, degrees: &[i64]) -> Result<Q> {
        Ok(sign(self.evaluate(degrees)?))
    }
}

impl fmt::Display for SignExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sum = (1..=self.k).map(|j| format!("|a_{j}|")).collect::<Vec<_>>().join(" + ");
        if self.k == 1 {
            write!(f, "{} + {sum}", self.constant)
        } else {
            write!(f, "{} + {}({sum})", self.constant, self.k)
        }
    }
}

/// `± m_{outer}(a_1, …, a_position, m_{inner}(…), …)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShTerm {
    pub outer: Tree,
    pub position: usize,
    pub inner: Tree,
    pub exponent: SignExponent,
}

impl ShTerm {
    /// The term as an operation, e.g. `m21(1⊗m12)`; the tree `[1]` prints
    /// as `δ` and identity slots as `1`.
    pub fn operation(&self) -> String {
        let slots = self.outer.degree();
        if slots == 1 {
            return format!("δ∘{}", op_name(&self.inner));
        }
        let args: Vec<String> =
            (0..slots).map(|s| if s == self.position { op_name(&self.inner) } else { "1".into() }).collect();
        format!("{}({})", op_name(&self.outer), args.join("⊗"))
    }
}

fn op_name(y: &Tree) -> String {
    if y.degree() == 1 {
        return "δ".into();
    }
    let digits: String = y.name().iter().map(|d| d.to_string()).collect();
    format!("m{digits}")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShRelation {
    pub tree: Tree,
    pub terms: Vec<ShTerm>,
}

impl ShRelation {
    /// The terms with their signs for the given argument degrees.
    pub fn instantiate(&self, degrees: &[i64]) -> Result<Vec<(Q, String)>> {
        self.terms.iter().map(|t| Ok((t.exponent.sign(degrees)?, t.operation()))).collect()
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|t| {
                json!({
                    "outer": t.outer.to_string(),
                    "position": t.position,
                    "inner": t.inner.to_string(),
                    "sign_exponent": t.exponent.to_string(),
                    "operation": t.operation(),
                })
            })
            .collect();
        json!({ "tree": self.tree.to_string(), "terms": terms })
    }
}

impl fmt::Display for ShRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> =
            self.terms.iter().map(|t| format!("(-1)^({}) {}", t.exponent, t.operation())).collect();
        write!(f, "{}: {} = 0", self.tree, terms.join(" + "))
    }
}

pub fn sh_relation(y: &Tree) -> ShRelation {
    let n = y.degree();
    let terms = y
        .nested_subtrees()
        .into_iter()
        .map(|s| ShTerm {
            exponent: SignExponent::new(n, s.start, s.len),
            outer: s.quotient,
            position: s.start,
            inner: s.inner,
        })
        .collect();
    ShRelation { tree: y.clone(), terms }
}

/// One relation per tree of degree `n`, in the order of `Tree::enumerate`.
pub fn sh_relations(n: usize) -> Result<Vec<ShRelation>> {
    if n == 0 || n > MAX_SH_DEGREE {
        return Err(Error::InvalidArgument(format!("degree must be in 1..={MAX_SH_DEGREE}, got {n}")));
    }
    Ok(Tree::enumerate(n).iter().map(sh_relation).collect())
}
