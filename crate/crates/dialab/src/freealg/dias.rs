use std::fmt;

use crate::lincomb::LinComb;
use crate::trees::ProductSymbol;

use super::word::{Sym, Word};

/// `⊣` is `LeftPointer`, `⊢` is `RightPointer`.
pub type Side = ProductSymbol;

/// A word with a marked middle letter: a basis element of the free dialgebra.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointedWord {
    letters: Vec<Sym>,
    pointer: usize,
}

impl PointedWord {
    pub fn new(letters: Vec<Sym>, pointer: usize) -> PointedWord {
        assert!(pointer < letters.len(), "pointer out of range");
        PointedWord { letters, pointer }
    }

    /// The generator `x̌`.
    pub fn letter(s: Sym) -> PointedWord {
        PointedWord { letters: vec![s], pointer: 0 }
    }

    pub fn letters(&self) -> &[Sym] {
        &self.letters
    }

    pub fn pointer(&self) -> usize {
        self.pointer
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn word(&self) -> Word {
        Word::new(self.letters.clone())
    }

    /// Concatenation keeping the pointer of the chosen factor.
    pub fn mul(&self, other: &PointedWord, side: Side) -> PointedWord {
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().cloned());
        let pointer = match side {
            Side::LeftPointer => self.pointer,
            Side::RightPointer => self.len() + other.pointer,
        };
        PointedWord { letters, pointer }
    }

    /// All pointed words of length `n` over `gens`.
    pub fn all(gens: &[Sym], n: usize) -> Vec<PointedWord> {
        let mut out = Vec::new();
        for w in Word::all(gens, n) {
            for p in 0..n {
                out.push(PointedWord::new(w.0.clone(), p));
            }
        }
        out.sort();
        out
    }
}

impl fmt::Display for PointedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{s}")?;
            if i == self.pointer {
                f.write_str("^")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for PointedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A parenthesized monomial whose vertices are labelled `⊣` or `⊢`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LabelledMonomial {
    Leaf(Sym),
    Node(Side, Box<LabelledMonomial>, Box<LabelledMonomial>),
}

impl LabelledMonomial {
    pub fn node(side: Side, a: LabelledMonomial, b: LabelledMonomial) -> LabelledMonomial {
        LabelledMonomial::Node(side, Box::new(a), Box::new(b))
    }

    pub fn leaves(&self) -> Vec<Sym> {
        let mut out = Vec::new();
        self.push_leaves(&mut out);
        out
    }

    fn push_leaves(&self, out: &mut Vec<Sym>) {
        match self {
            LabelledMonomial::Leaf(s) => out.push(s.clone()),
            LabelledMonomial::Node(_, a, b) => {
                a.push_leaves(out);
                b.push_leaves(out);
            }
        }
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            LabelledMonomial::Leaf(_) => 1,
            LabelledMonomial::Node(_, a, b) => a.leaf_count() + b.leaf_count(),
        }
    }
}

impl fmt::Display for LabelledMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LabelledMonomial::Leaf(s) => write!(f, "{s}"),
            LabelledMonomial::Node(side, a, b) => write!(f, "({a}{side}{b})"),
        }
    }
}

/// The leaves in order, with the pointer at the middle: the leaf reached
/// from the root by going left at `⊣` and right at `⊢`.
pub fn normalize_monomial(m: &LabelledMonomial) -> PointedWord {
    let mut offset = 0;
    let mut cur = m;
    while let LabelledMonomial::Node(side, a, b) = cur {
        match side {
            Side::LeftPointer => cur = a,
            Side::RightPointer => {
                offset += a.leaf_count();
                cur = b;
            }
        }
    }
    PointedWord::new(m.leaves(), offset)
}

/// Bilinear extension of the free-dimonoid product.
pub fn dias_mul(a: &LinComb<PointedWord>, b: &LinComb<PointedWord>, side: Side) -> LinComb<PointedWord> {
    a.bilinear(b, |u, v| LinComb::basis(u.mul(v, side)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use LabelledMonomial as M;

    fn leaf(s: &str) -> M {
        M::Leaf(Sym::new(s))
    }

    #[test]
    fn worked_example() {
        let l = Side::LeftPointer;
        let r = Side::RightPointer;
        let m = M::node(
            l,
            M::node(r, M::node(l, leaf("x1"), leaf("x2")), M::node(l, leaf("x3"), leaf("x4"))),
            M::node(r, leaf("x5"), leaf("x6")),
        );
        assert_eq!(normalize_monomial(&m).to_string(), "x1 x2 x3^ x4 x5 x6");
        assert_eq!(normalize_monomial(&leaf("x")).to_string(), "x^");
        assert_eq!(normalize_monomial(&M::node(r, leaf("x"), leaf("y"))).to_string(), "x y^");
    }
}
