use std::fmt;

use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use crate::perm::Permutation;
use crate::rational::Q;
use crate::trees::Tree;

use super::word::Sym;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DendOp {
    /// `≺`
    Prec,
    /// `≻`
    Succ,
    /// `* = ≺ + ≻`
    Star,
}

/// A basis element `(y; x_1 … x_n)` of the free dendriform algebra.
/// The degree-0 term `([0]; )` is the unit of `*`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DendTerm {
    tree: Tree,
    word: Vec<Sym>,
}

impl DendTerm {
    pub fn new(tree: Tree, word: Vec<Sym>) -> Result<DendTerm> {
        if tree.degree() != word.len() {
            return Err(Error::InvalidArgument(format!(
                "tree {tree} has degree {} but the word has {} letters",
                tree.degree(),
                word.len()
            )));
        }
        Ok(DendTerm { tree, word })
    }

    pub fn generator(s: Sym) -> DendTerm {
        DendTerm { tree: Tree::corolla(), word: vec![s] }
    }

    pub fn unit() -> DendTerm {
        DendTerm { tree: Tree::Leaf, word: vec![] }
    }

    pub fn tree(&self) -> &Tree {
        &self.tree
    }

    pub fn word(&self) -> &[Sym] {
        &self.word
    }

    pub fn degree(&self) -> usize {
        self.word.len()
    }

    /// All terms of degree `n` over `gens`.
    pub fn all(gens: &[Sym], n: usize) -> Vec<DendTerm> {
        let mut out = Vec::new();
        for y in Tree::enumerate(n) {
            for w in super::word::Word::all(gens, n) {
                out.push(DendTerm { tree: y.clone(), word: w.0 });
            }
        }
        out.sort();
        out
    }
}

impl fmt::Display for DendTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<&str> = self.word.iter().map(|s| s.as_str()).collect();
        write!(f, "({}; {})", self.tree, parts.join(" "))
    }
}

impl fmt::Debug for DendTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The grafting products on trees: `y≺z = y1∨(y2*z)`, `y≻z = (y*z1)∨z2`,
/// with `x≺| = x = |≻x` and `|≺x = 0 = x≻|` for `x ≠ |`.
pub fn dend_tree_mul(y: &Tree, z: &Tree, op: DendOp) -> Result<LinComb<Tree>> {
    match op {
        DendOp::Prec => prec(y, z),
        DendOp::Succ => succ(y, z),
        DendOp::Star => Ok(star(y, z)),
    }
}

fn prec(y: &Tree, z: &Tree) -> Result<LinComb<Tree>> {
    match y {
        Tree::Leaf if z.is_leaf() => Err(Error::UndefinedOnUnit("≺")),
        Tree::Leaf => Ok(LinComb::zero()),
        Tree::Node(n) => Ok(star(&n.right, z).map_basis(|t| Tree::graft(n.left.clone(), t.clone()))),
    }
}

fn succ(y: &Tree, z: &Tree) -> Result<LinComb<Tree>> {
    match z {
        Tree::Leaf if y.is_leaf() => Err(Error::UndefinedOnUnit("≻")),
        Tree::Leaf => Ok(LinComb::zero()),
        Tree::Node(n) => Ok(star(y, &n.left).map_basis(|t| Tree::graft(t.clone(), n.right.clone()))),
    }
}

fn star(y: &Tree, z: &Tree) -> LinComb<Tree> {
    if y.is_leaf() {
        return LinComb::basis(z.clone());
    }
    if z.is_leaf() {
        return LinComb::basis(y.clone());
    }
    prec(y, z).unwrap() + succ(y, z).unwrap()
}

/// `*` on `K[Y_∞]`, with unit `[0]`.
pub fn tree_star(y: &Tree, z: &Tree) -> LinComb<Tree> {
    star(y, z)
}

/// The mirror involution, reversing names.
pub fn involution(y: &Tree) -> Tree {
    y.mirror()
}

/// `σ * τ = sh_{n,m}·(σ × τ)` on `K[S_∞]`.
pub fn shuffle_star(sigma: &Permutation, tau: &Permutation) -> LinComb<Permutation> {
    let cross = sigma.cross(tau);
    Permutation::shuffles(sigma.len(), tau.len())
        .into_iter()
        .map(|s| (Q::from_integer(1.into()), s.compose(&cross)))
        .collect()
}

/// Bilinear extension of the dendriform products; words concatenate.
pub fn dend_mul(a: &LinComb<DendTerm>, b: &LinComb<DendTerm>, op: DendOp) -> Result<LinComb<DendTerm>> {
    a.try_bilinear(b, |u, v| {
        let mut word = u.word.clone();
        word.extend(v.word.iter().cloned());
        Ok(dend_tree_mul(&u.tree, &v.tree, op)?.map_basis(|t| DendTerm { tree: t.clone(), word: word.clone() }))
    })
}

/// Writes `y` as a `≺/≻` monomial in its arguments and evaluates it:
/// `y1∨y2` becomes `α(y1) ≻ x ≺ α(y2)` with `x` the argument at the root.
pub fn eval_tree_on(y: &Tree, args: &[LinComb<DendTerm>]) -> Result<LinComb<DendTerm>> {
    if args.len() != y.degree() {
        return Err(Error::InvalidArgument(format!(
            "tree {y} takes {} arguments, got {}",
            y.degree(),
            args.len()
        )));
    }
    let (l, r) = y.split()?;
    let p = l.degree();
    let mid = &args[p];
    let right = if r.is_leaf() {
        mid.clone()
    } else {
        dend_mul(mid, &eval_tree_on(&r, &args[p + 1..])?, DendOp::Prec)?
    };
    if l.is_leaf() {
        Ok(right)
    } else {
        dend_mul(&eval_tree_on(&l, &args[..p])?, &right, DendOp::Succ)
    }
}

/// Evaluates the monomial of `y` on generators.
pub fn eval_tree_monomial(y: &Tree, args: &[Sym]) -> Result<LinComb<DendTerm>> {
    let args: Vec<LinComb<DendTerm>> = args.iter().map(|s| LinComb::basis(DendTerm::generator(s.clone()))).collect();
    eval_tree_on(y, &args)
}
