use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use crate::perm::{Permutation, PsiVariant};

use super::dend::DendTerm;
use super::word::Word;

/// `(y; x_1 … x_n) ↦ Σ_{σ ∈ ψ′⁻¹(y)} σ·(x_1 … x_n)`, the dendriform map
/// into the Zinbiel algebra on the same generators.
pub fn dend_to_zinb(t: &LinComb<DendTerm>) -> Result<LinComb<Word>> {
    let mut out = LinComb::zero();
    for (term, c) in t {
        if term.degree() == 0 {
            return Err(Error::InvalidArgument("the unit tree has no Zinbiel image".into()));
        }
        for s in Permutation::fiber(term.tree(), PsiVariant::Height) {
            out.add_term(c.clone(), Word::new(s.act(term.word())));
        }
    }
    Ok(out)
}
