//! The contracting homotopy of the CY complex of a free dialgebra.
//!
//! A basis chain is `(y; a_1, …, a_n)` with pointed words `a_i`. The cases
//! look at the last entry `a_n = ω u` (last letter `u`), the previous entry
//! and whether the last two leaves of `y` form a cherry.

use super::coeffs::Coefficients;
use super::complex::{ChainIndex, ChainTerm};
use super::maps::Chain;
use crate::error::{Error, Result};
use crate::finalg::Kind;
use crate::freealg::PointedWord;
use crate::rational::sign;
use crate::trees::Tree;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HomotopyCase {
    /// `a_n` has at least two letters and the pointer is not on the last one.
    A,
    /// `a_n` has at least two letters and the pointer is on the last one.
    B,
    /// `a_n` is one letter and the last two leaves form a cherry.
    C,
    /// `a_n` is one letter, no cherry, `a_{n-1}` longer than one letter with
    /// the pointer off its last letter.
    D,
    /// As `D` with the pointer of `a_{n-1}` on its last letter.
    E,
    /// `a_n` and `a_{n-1}` are single letters and there is no cherry.
    F,
}

fn pointed(coeffs: &Coefficients) -> Result<&[PointedWord]> {
    match coeffs.pointed_words() {
        Some(w) if coeffs.kind() == Kind::Dialgebra => Ok(w),
        _ => Err(Error::InvalidArgument("the homotopy needs the free dialgebra".into())),
    }
}

fn parse(term: &ChainTerm) -> Result<&Tree> {
    match &term.index {
        ChainIndex::Tree(y) if term.degree() >= 1 => Ok(y),
        _ => Err(Error::InvalidArgument(format!("expected a CY chain, got index {}", term.index))),
    }
}

fn cherry_at_end(y: &Tree) -> bool {
    let name = y.name();
    let n = name.len();
    n == 1 || name[n - 2] > name[n - 1]
}

/// Which case of the homotopy applies to a basis chain.
pub fn homotopy_case(coeffs: &Coefficients, term: &ChainTerm) -> Result<HomotopyCase> {
    let words = pointed(coeffs)?;
    let y = parse(term)?;
    let n = term.degree();
    let last = &words[term.entries[n - 1]];
    if last.len() >= 2 {
        return Ok(if last.pointer() + 1 < last.len() { HomotopyCase::A } else { HomotopyCase::B });
    }
    if cherry_at_end(y) {
        return Ok(HomotopyCase::C);
    }
    let prev = &words[term.entries[n - 2]];
    Ok(match prev.len() {
        0 => return Err(Error::CaseDispatchFailure(term.display(coeffs.names()))),
        1 => HomotopyCase::F,
        m if prev.pointer() + 1 < m => HomotopyCase::D,
        _ => HomotopyCase::E,
    })
}

/// `h_n : CY_n → CY_{n+1}` with `dh + hd = id` in degrees `n >= 2` of every
/// weight piece.
pub fn homotopy_free_dialgebra(coeffs: &Coefficients, term: &ChainTerm) -> Result<Chain> {
    homotopy_with_sign(coeffs, term, term.degree() + 1)
}

/// The same operator with the overall sign `(-1)^n`; it satisfies
/// `dh + hd = -id` against the differential `d = -Σ (-1)^i d_i`.
pub fn homotopy_free_dialgebra_opposite(coeffs: &Coefficients, term: &ChainTerm) -> Result<Chain> {
    homotopy_with_sign(coeffs, term, term.degree())
}

fn homotopy_with_sign(coeffs: &Coefficients, term: &ChainTerm, exponent: usize) -> Result<Chain> {
    let case = homotopy_case(coeffs, term)?;
    let words = pointed(coeffs)?;
    let y = parse(term)?;
    let n = term.degree();
    let a = &term.entries;
    let sg = sign(exponent as i64);
    let id = |w: &PointedWord| {
        coeffs.pointed_position(w).ok_or_else(|| Error::CaseDispatchFailure(format!("{w} is not in the basis")))
    };
    let tree = |t: Tree| ChainIndex::Tree(t);
    let split_last = |w: &PointedWord, pointer: usize| -> Result<(usize, usize)> {
        let l = w.len();
        let head = PointedWord::new(w.letters()[..l - 1].to_vec(), pointer);
        let tail = PointedWord::letter(w.letters()[l - 1].clone());
        Ok((id(&head)?, id(&tail)?))
    };
    Ok(match case {
        HomotopyCase::A | HomotopyCase::B => {
            let last = &words[a[n - 1]];
            let l = last.len();
            let (index, pointer) = if case == HomotopyCase::A {
                (y.bifurcate(n)?, last.pointer())
            } else {
                (y.parallel_last()?, l - 2)
            };
            let (head, tail) = split_last(last, pointer)?;
            let mut e = a[..n - 1].to_vec();
            e.extend([head, tail]);
            vec![(ChainTerm::new(tree(index), e), sg)]
        }
        HomotopyCase::C | HomotopyCase::F => Vec::new(),
        HomotopyCase::D | HomotopyCase::E => {
            let prev = &words[a[n - 2]];
            let m = prev.len();
            let (other, pointer) = if case == HomotopyCase::D {
                (y.bifurcate(n - 1)?, prev.pointer())
            } else {
                (y.parallel(n - 1)?, m - 2)
            };
            let (head, tail) = split_last(prev, pointer)?;
            let mut e = a[..n - 2].to_vec();
            e.extend([head, tail, a[n - 1]]);
            vec![
                (ChainTerm::new(tree(y.parallel_last()?), e.clone()), sg.clone()),
                (ChainTerm::new(tree(other), e), -sg),
            ]
        }
    })
}
