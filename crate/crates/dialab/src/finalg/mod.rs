//! Finite-dimensional algebras given by structure constants.

mod axioms;
mod derived;
pub mod fixtures;
mod json;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::freealg::{Algebra, Op};
use crate::lincomb::LinComb;
use crate::rational::Q;

pub use axioms::{check_axioms, Violation};
pub use derived::{associativization, bar_units, leibnizification, opposite, zinbiel_as_dendriform, Associativization, Halo};
pub use fixtures::{fixture, DEFAULT_MAX_DIM};
pub use json::{algebra_from_json, algebra_from_json_deferred, algebra_to_json};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Dialgebra,
    Dendriform,
    Leibniz,
    Zinbiel,
    Associative,
}

impl Kind {
    pub fn ops(self) -> &'static [Op] {
        match self {
            Kind::Dialgebra => &[Op::Left, Op::Right],
            Kind::Dendriform => &[Op::Prec, Op::Succ],
            Kind::Leibniz => &[Op::Bracket],
            Kind::Zinbiel => &[Op::Dot],
            Kind::Associative => &[Op::Mult],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Kind::Dialgebra => "dialgebra",
            Kind::Dendriform => "dendriform",
            Kind::Leibniz => "leibniz",
            Kind::Zinbiel => "zinbiel",
            Kind::Associative => "associative",
        }
    }

    pub fn from_name(s: &str) -> Result<Kind> {
        Ok(match s {
            "dialgebra" => Kind::Dialgebra,
            "dendriform" => Kind::Dendriform,
            "leibniz" => Kind::Leibniz,
            "zinbiel" => Kind::Zinbiel,
            "associative" => Kind::Associative,
            _ => return Err(Error::MalformedAlgebra(format!("unknown kind {s:?}"))),
        })
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `tables[op][i][j][k]` is the coefficient of `e_k` in `e_i ∘ e_j`.
pub type Table = Vec<Vec<Vec<Q>>>;

#[derive(Clone, PartialEq, Eq)]
pub struct FiniteAlgebra {
    kind: Kind,
    basis: Vec<String>,
    tables: BTreeMap<Op, Table>,
    sparse: BTreeMap<Op, Vec<Vec<LinComb<usize>>>>,
}

impl fmt::Debug for FiniteAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteAlgebra({}, {:?})", self.kind, self.basis)
    }
}

impl FiniteAlgebra {
    /// Builds and checks the axioms of the declared kind.
    pub fn new(kind: Kind, basis: Vec<String>, tables: BTreeMap<Op, Table>) -> Result<FiniteAlgebra> {
        let a = Self::new_deferred(kind, basis, tables)?;
        if let Some(v) = check_axioms(&a).into_iter().next() {
            return Err(Error::AxiomFailure {
                axiom: v.axiom.to_string(),
                witness: (a.basis[v.witness.0].clone(), a.basis[v.witness.1].clone(), a.basis[v.witness.2].clone()),
            });
        }
        Ok(a)
    }

    /// Builds without checking axioms; shapes are still validated.
    pub fn new_deferred(kind: Kind, basis: Vec<String>, tables: BTreeMap<Op, Table>) -> Result<FiniteAlgebra> {
        let k = basis.len();
        let mut seen = std::collections::BTreeSet::new();
        for b in &basis {
            if !seen.insert(b) {
                return Err(Error::MalformedAlgebra(format!("repeated basis symbol {b:?}")));
            }
        }
        for op in kind.ops() {
            let t = tables
                .get(op)
                .ok_or_else(|| Error::MalformedAlgebra(format!("missing table {:?}", op.table_name())))?;
            if t.len() != k || t.iter().any(|r| r.len() != k || r.iter().any(|v| v.len() != k)) {
                return Err(Error::MalformedAlgebra(format!("table {:?} is not {k}x{k}x{k}", op.table_name())));
            }
        }
        if let Some(extra) = tables.keys().find(|op| !kind.ops().contains(op)) {
            return Err(Error::MalformedAlgebra(format!("table {:?} does not belong to a {kind}", extra.table_name())));
        }
        let sparse = tables
            .iter()
            .map(|(op, t)| {
                let s = t
                    .iter()
                    .map(|row| {
                        row.iter()
                            .map(|v| v.iter().enumerate().map(|(i, x)| (x.clone(), i)).collect())
                            .collect()
                    })
                    .collect();
                (*op, s)
            })
            .collect();
        Ok(FiniteAlgebra { kind, basis, tables, sparse })
    }

    /// Builds from a product given on basis indices.
    pub fn from_fn(
        kind: Kind,
        basis: Vec<String>,
        mut f: impl FnMut(Op, usize, usize) -> Vec<Q>,
    ) -> Result<FiniteAlgebra> {
        let k = basis.len();
        let tables = kind
            .ops()
            .iter()
            .map(|&op| (op, (0..k).map(|i| (0..k).map(|j| f(op, i, j)).collect()).collect()))
            .collect();
        Self::new(kind, basis, tables)
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn table(&self, op: Op) -> Option<&Table> {
        self.tables.get(&op)
    }

    pub fn tables(&self) -> &BTreeMap<Op, Table> {
        &self.tables
    }

    pub fn check_dim(&self, cap: usize) -> Result<()> {
        if self.dim() > cap {
            Err(Error::TooLarge { dim: self.dim(), cap })
        } else {
            Ok(())
        }
    }

    /// Product of dense coordinate vectors.
    pub fn mul_vec(&self, op: Op, u: &[Q], v: &[Q]) -> Vec<Q> {
        let t = &self.tables[&op];
        let k = self.dim();
        let mut out = vec![Q::zero(); k];
        for (i, x) in u.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in v.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let c = x * y;
                for (m, z) in t[i][j].iter().enumerate() {
                    if !z.is_zero() {
                        out[m] += &c * z;
                    }
                }
            }
        }
        out
    }

    pub fn unit_vec(&self, i: usize) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.dim()];
        v[i] = Q::from_integer(1.into());
        v
    }

    /// The same structure constants relabelled as another kind.
    pub(crate) fn reinterpret(&self, kind: Kind, map: &[(Op, Op)]) -> Result<FiniteAlgebra> {
        let tables = map.iter().map(|(to, from)| (*to, self.tables[from].clone())).collect();
        FiniteAlgebra::new(kind, self.basis.clone(), tables)
    }

    /// An associative algebra viewed as a dialgebra with `⊣ = ⊢`.
    pub fn as_dialgebra(&self) -> Result<FiniteAlgebra> {
        match self.kind {
            Kind::Dialgebra => Ok(self.clone()),
            Kind::Associative => self.reinterpret(Kind::Dialgebra, &[(Op::Left, Op::Mult), (Op::Right, Op::Mult)]),
            k => Err(Error::IncompatibleAlgebras(format!("a {k} is not a dialgebra"))),
        }
    }
}

impl Algebra for FiniteAlgebra {
    type Basis = usize;

    fn supports(&self, op: Op) -> bool {
        self.tables.contains_key(&op)
    }

    fn mul_basis(&self, op: Op, a: &usize, b: &usize) -> LinComb<usize> {
        self.sparse[&op][*a][*b].clone()
    }
}
