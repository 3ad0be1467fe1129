//! Operadic composition in the dendriform operad, on trees.

use std::collections::BTreeSet;

use num_traits::One;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::freealg::{eval_tree_monomial, eval_tree_on, DendTerm, Sym};
use crate::lincomb::LinComb;
use crate::rational::q_to_json;
use crate::trees::Tree;

/// How a nested sub-tree at slot `i` is located in the composite.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    /// `y′` spans the leaves `i - 1 ..= i - 1 + |y′|` of `y`.
    Standard,
    /// The same condition on the mirror image of `y`.
    Mirrored,
}

/// `outer ∘_i inner`: the monomial of `outer` with its `i`-th argument
/// replaced by the monomial of `inner`, all on one generator.
pub fn dend_compose(outer: &Tree, i: usize, inner: &Tree) -> Result<LinComb<Tree>> {
    let n = outer.degree();
    if i == 0 || i > n {
        return Err(Error::SlotOutOfRange { slot: i, max: n });
    }
    if inner.is_leaf() {
        return Err(Error::InvalidArgument("cannot substitute the leaf".into()));
    }
    let x = Sym::new("x");
    let gen = LinComb::basis(DendTerm::generator(x.clone()));
    let mut args = vec![gen; n];
    args[i - 1] = eval_tree_monomial(inner, &vec![x; inner.degree()])?;
    Ok(eval_tree_on(outer, &args)?.map_basis(|t| t.tree().clone()))
}

/// The trees `y` of degree `|outer| + |inner| - 1` in which `inner` is nested
/// at slot `i` with quotient `outer`.
pub fn nested_composition(outer: &Tree, i: usize, inner: &Tree, orientation: Orientation) -> Result<BTreeSet<Tree>> {
    let n = outer.degree();
    if i == 0 || i > n {
        return Err(Error::SlotOutOfRange { slot: i, max: n });
    }
    let m = inner.degree();
    let mut out = BTreeSet::new();
    for y in Tree::enumerate(n + m - 1) {
        let probe = match orientation {
            Orientation::Standard => y.clone(),
            Orientation::Mirrored => y.mirror(),
        };
        let hit = probe
            .nested_subtrees()
            .into_iter()
            .any(|s| s.start == i - 1 && s.len == m && s.inner == *inner && s.quotient == *outer);
        if hit {
            out.insert(y);
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComposeReport {
    pub outer: Tree,
    pub slot: usize,
    pub inner: Tree,
    pub result: LinComb<Tree>,
    /// Whether the result is a sum of distinct trees with coefficient 1.
    pub multiplicity_free: bool,
    pub standard: BTreeSet<Tree>,
    pub mirrored: BTreeSet<Tree>,
    pub standard_matches: bool,
    pub mirrored_matches: bool,
}

pub fn compose_report(outer: &Tree, i: usize, inner: &Tree) -> Result<ComposeReport> {
    let result = dend_compose(outer, i, inner)?;
    let support: BTreeSet<Tree> = result.support().cloned().collect();
    let multiplicity_free = result.iter().all(|(_, c)| c.is_one());
    let standard = nested_composition(outer, i, inner, Orientation::Standard)?;
    let mirrored = nested_composition(outer, i, inner, Orientation::Mirrored)?;
    Ok(ComposeReport {
        outer: outer.clone(),
        slot: i,
        inner: inner.clone(),
        standard_matches: multiplicity_free && standard == support,
        mirrored_matches: multiplicity_free && mirrored == support,
        multiplicity_free,
        standard,
        mirrored,
        result,
    })
}

impl ComposeReport {
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> =
            self.result.iter().map(|(t, c)| json!({ "tree": t.to_string(), "coef": q_to_json(c) })).collect();
        let names = |s: &BTreeSet<Tree>| s.iter().map(Tree::to_string).collect::<Vec<_>>();
        json!({
            "outer": self.outer.to_string(),
            "slot": self.slot,
            "inner": self.inner.to_string(),
            "result": terms,
            "nested_standard": names(&self.standard),
            "nested_mirrored": names(&self.mirrored),
            "standard_matches": self.standard_matches,
            "mirrored_matches": self.mirrored_matches,
        })
    }
}
