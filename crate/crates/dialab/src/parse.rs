//! The element grammar: `term = [coef "*"] basis`, terms joined by `+`/`-`.
//!
//! Bases are pointed words `x1 x2^ x3`, dendriform terms `([1,3,1]; x y z)`
//! and words `x y z`. Coefficients are integers or `p/q`.

use num_traits::One;

use crate::error::{Error, Result};
use crate::freealg::{DendTerm, PointedWord, Sym, Word};
use crate::lincomb::LinComb;
use crate::rational::{parse_q, Q};
use crate::trees::Tree;

fn perr(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn is_symbol(t: &str) -> bool {
    let mut cs = t.chars();
    matches!(cs.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && cs.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
}

fn symbols(s: &str) -> Result<Vec<Sym>> {
    s.split_whitespace()
        .map(|t| if is_symbol(t) { Ok(Sym::new(t)) } else { Err(perr(format!("bad generator {t:?}"))) })
        .collect()
}

pub fn parse_word(s: &str) -> Result<Word> {
    let letters = symbols(s)?;
    if letters.is_empty() {
        return Err(perr("empty word"));
    }
    Ok(Word::new(letters))
}

pub fn parse_pointed_word(s: &str) -> Result<PointedWord> {
    let toks: Vec<&str> = s.split_whitespace().collect();
    let marked: Vec<usize> = (0..toks.len()).filter(|&i| toks[i].ends_with('^')).collect();
    if marked.len() != 1 {
        return Err(perr(format!("a pointed word needs exactly one ^ in {s:?}")));
    }
    let letters = toks.iter().map(|t| t.strip_suffix('^').unwrap_or(t)).collect::<Vec<_>>().join(" ");
    let letters = symbols(&letters)?;
    if letters.len() != toks.len() {
        return Err(perr(format!("bad pointed word {s:?}")));
    }
    Ok(PointedWord::new(letters, marked[0]))
}

pub fn parse_dend_term(s: &str) -> Result<DendTerm> {
    let inner = s
        .trim()
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| perr(format!("a dendriform term looks like ([1,2]; x y), got {s:?}")))?;
    let (tree, word) = inner.split_once(';').ok_or_else(|| perr("missing ';' in dendriform term"))?;
    let tree: Tree = tree.parse()?;
    DendTerm::new(tree, symbols(word)?)
}

/// Splits at top-level `+`/`-`, returning signed pieces.
fn split_terms(s: &str) -> Result<Vec<(bool, String)>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    let mut neg = false;
    for c in s.chars() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => {
                depth -= 1;
                if depth < 0 {
                    return Err(perr("unbalanced brackets"));
                }
            }
            _ => {}
        }
        if depth == 0 && (c == '+' || c == '-') {
            // a leading sign, or a sign directly after '*' is part of a term
            let t = cur.trim();
            if t.is_empty() && out.is_empty() && !neg {
                neg = c == '-';
                continue;
            }
            if t.is_empty() {
                return Err(perr("dangling sign"));
            }
            out.push((neg, t.to_string()));
            cur.clear();
            neg = c == '-';
            continue;
        }
        cur.push(c);
    }
    if depth != 0 {
        return Err(perr("unbalanced brackets"));
    }
    let t = cur.trim();
    if t.is_empty() {
        return Err(perr("empty term"));
    }
    out.push((neg, t.to_string()));
    Ok(out)
}

/// Parses a linear combination; `0` is the empty combination.
pub fn parse_lincomb<B: Ord + Clone>(s: &str, basis: impl Fn(&str) -> Result<B>) -> Result<LinComb<B>> {
    if s.trim() == "0" {
        return Ok(LinComb::zero());
    }
    let mut out = LinComb::zero();
    for (neg, t) in split_terms(s)? {
        let (c, b) = match t.split_once('*') {
            Some((c, b)) => (parse_q(c)?, b.trim().to_string()),
            None => (Q::one(), t),
        };
        let c = if neg { -c } else { c };
        out.add_term(c, basis(&b)?);
    }
    Ok(out)
}

pub fn parse_pointed(s: &str) -> Result<LinComb<PointedWord>> {
    parse_lincomb(s, parse_pointed_word)
}

pub fn parse_dend(s: &str) -> Result<LinComb<DendTerm>> {
    parse_lincomb(s, parse_dend_term)
}

pub fn parse_words(s: &str) -> Result<LinComb<Word>> {
    parse_lincomb(s, parse_word)
}
