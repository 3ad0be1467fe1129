use crate::lincomb::LinComb;
use crate::rational::Q;

use super::word::{Sym, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZinbMode {
    /// `x·y`
    Dot,
    /// `x·y + y·x`, the shuffle product.
    Symmetrized,
}

/// All interleavings of `a` and `b`, with multiplicity.
pub(crate) fn shuffle(a: &[Sym], b: &[Sym]) -> Vec<Vec<Sym>> {
    if a.is_empty() {
        return vec![b.to_vec()];
    }
    if b.is_empty() {
        return vec![a.to_vec()];
    }
    let mut out = Vec::new();
    for mut w in shuffle(&a[1..], b) {
        w.insert(0, a[0].clone());
        out.push(w);
    }
    for mut w in shuffle(a, &b[1..]) {
        w.insert(0, b[0].clone());
        out.push(w);
    }
    out
}

/// `(x_0 … x_p)·(x_{p+1} … x_{p+q}) = x_0 sh_{p,q}(x_1 … x_{p+q})`.
pub fn dot_words(a: &Word, b: &Word) -> LinComb<Word> {
    let one = Q::from_integer(1.into());
    shuffle(&a.0[1..], &b.0)
        .into_iter()
        .map(|mut w| {
            w.insert(0, a.0[0].clone());
            (one.clone(), Word(w))
        })
        .collect()
}

pub fn zinb_mul(a: &LinComb<Word>, b: &LinComb<Word>, mode: ZinbMode) -> LinComb<Word> {
    let dot = a.bilinear(b, dot_words);
    match mode {
        ZinbMode::Dot => dot,
        ZinbMode::Symmetrized => dot + b.bilinear(a, dot_words),
    }
}
