use std::fmt::{Debug, Display};

use crate::lincomb::LinComb;
use crate::trees::ProductSymbol;

use super::dend::{dend_mul, DendOp, DendTerm};
use super::dias::PointedWord;
use super::leib::leib_bracket_free;
use super::word::{Sym, Word};
use super::zinb::{zinb_mul, ZinbMode};

/// A binary operation of one of the algebra kinds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Op {
    /// `⊣`
    Left,
    /// `⊢`
    Right,
    /// `≺`
    Prec,
    /// `≻`
    Succ,
    Bracket,
    Dot,
    Mult,
}

impl Op {
    pub fn table_name(self) -> &'static str {
        match self {
            Op::Left => "left",
            Op::Right => "right",
            Op::Prec => "prec",
            Op::Succ => "succ",
            Op::Bracket => "bracket",
            Op::Dot => "dot",
            Op::Mult => "mult",
        }
    }

    pub fn from_symbol(s: ProductSymbol) -> Op {
        match s {
            ProductSymbol::LeftPointer => Op::Left,
            ProductSymbol::RightPointer => Op::Right,
        }
    }
}

/// Anything with structure constants on a basis.
pub trait Algebra {
    type Basis: Clone + Ord + Debug + Display;

    fn supports(&self, op: Op) -> bool;

    /// Product of two basis elements. Callers check `supports` first.
    fn mul_basis(&self, op: Op, a: &Self::Basis, b: &Self::Basis) -> LinComb<Self::Basis>;

    /// Generator weight of a basis element; `0` when ungraded.
    fn weight(&self, _b: &Self::Basis) -> usize {
        0
    }

    fn mul(&self, op: Op, a: &LinComb<Self::Basis>, b: &LinComb<Self::Basis>) -> LinComb<Self::Basis> {
        a.bilinear(b, |x, y| self.mul_basis(op, x, y))
    }
}

/// `[x,y] = x⊣y − y⊢x`.
pub fn bracket<A: Algebra>(alg: &A, a: &LinComb<A::Basis>, b: &LinComb<A::Basis>) -> LinComb<A::Basis> {
    alg.mul(Op::Left, a, b) - alg.mul(Op::Right, b, a)
}

fn truncate<B: Ord + Clone>(c: LinComb<B>, maxdeg: Option<usize>, deg: impl Fn(&B) -> usize) -> LinComb<B> {
    match maxdeg {
        None => c,
        Some(m) => c.iter().filter(|(b, _)| deg(b) <= m).map(|(b, x)| (x.clone(), b.clone())).collect(),
    }
}

/// The free dialgebra on a set of generators, optionally truncated.
#[derive(Clone, Debug)]
pub struct FreeDialgebra {
    pub gens: Vec<Sym>,
    pub maxdeg: Option<usize>,
}

impl Algebra for FreeDialgebra {
    type Basis = PointedWord;

    fn supports(&self, op: Op) -> bool {
        matches!(op, Op::Left | Op::Right)
    }

    fn mul_basis(&self, op: Op, a: &PointedWord, b: &PointedWord) -> LinComb<PointedWord> {
        let side = match op {
            Op::Left => ProductSymbol::LeftPointer,
            Op::Right => ProductSymbol::RightPointer,
            _ => panic!("free dialgebra has no {op:?}"),
        };
        truncate(LinComb::basis(a.mul(b, side)), self.maxdeg, |p| p.len())
    }

    fn weight(&self, b: &PointedWord) -> usize {
        b.len()
    }
}

/// The free dendriform algebra, optionally truncated.
#[derive(Clone, Debug)]
pub struct FreeDendriform {
    pub gens: Vec<Sym>,
    pub maxdeg: Option<usize>,
}

impl Algebra for FreeDendriform {
    type Basis = DendTerm;

    fn supports(&self, op: Op) -> bool {
        matches!(op, Op::Prec | Op::Succ)
    }

    fn mul_basis(&self, op: Op, a: &DendTerm, b: &DendTerm) -> LinComb<DendTerm> {
        let dop = match op {
            Op::Prec => DendOp::Prec,
            Op::Succ => DendOp::Succ,
            _ => panic!("free dendriform algebra has no {op:?}"),
        };
        let c = dend_mul(&LinComb::basis(a.clone()), &LinComb::basis(b.clone()), dop)
            .expect("products of nonunit terms are defined");
        truncate(c, self.maxdeg, |t| t.degree())
    }

    fn weight(&self, b: &DendTerm) -> usize {
        b.degree()
    }
}

/// The free Zinbiel algebra, optionally truncated.
#[derive(Clone, Debug)]
pub struct FreeZinbiel {
    pub gens: Vec<Sym>,
    pub maxdeg: Option<usize>,
}

impl Algebra for FreeZinbiel {
    type Basis = Word;

    fn supports(&self, op: Op) -> bool {
        matches!(op, Op::Dot)
    }

    fn mul_basis(&self, op: Op, a: &Word, b: &Word) -> LinComb<Word> {
        assert_eq!(op, Op::Dot, "free Zinbiel algebra has only the dot product");
        let c = zinb_mul(&LinComb::basis(a.clone()), &LinComb::basis(b.clone()), ZinbMode::Dot);
        truncate(c, self.maxdeg, |w| w.len())
    }

    fn weight(&self, b: &Word) -> usize {
        b.len()
    }
}

/// The free Leibniz algebra, optionally truncated.
#[derive(Clone, Debug)]
pub struct FreeLeibniz {
    pub gens: Vec<Sym>,
    pub maxdeg: Option<usize>,
}

impl Algebra for FreeLeibniz {
    type Basis = Word;

    fn supports(&self, op: Op) -> bool {
        matches!(op, Op::Bracket)
    }

    fn mul_basis(&self, op: Op, a: &Word, b: &Word) -> LinComb<Word> {
        assert_eq!(op, Op::Bracket, "free Leibniz algebra has only the bracket");
        if let Some(m) = self.maxdeg {
            if a.len() + b.len() > m {
                return LinComb::zero();
            }
        }
        leib_bracket_free(&LinComb::basis(a.clone()), &LinComb::basis(b.clone()))
    }

    fn weight(&self, b: &Word) -> usize {
        b.len()
    }
}
