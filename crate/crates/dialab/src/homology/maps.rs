//! Chain maps between the complexes, the operators `ad(y)` and `h(y)`, and
//! the face and degeneracy operators on chains.

use std::fmt;

use num_traits::{One, Zero};

use super::coeffs::{Coefficients, Combine, Sparse};
use super::complex::{contract, index_face, ChainComplex, ChainIndex, ChainTerm, Theory};
use crate::error::{Error, Result};
use crate::finalg::Kind;
use crate::freealg::Op;
use crate::linalg::SparseMat;
use crate::perm::Permutation;
use crate::rational::{sign, Q};

/// A linear combination of basis chains of one degree.
pub type Chain = Vec<(ChainTerm, Q)>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MapKind {
    /// `CL(D_Leib) → CS(D)`.
    Epsilon,
    /// `CS(D) → CY(D)`.
    Psi,
    /// `CDend(R) → CZinb(R)` for a Zinbiel algebra `R`.
    Theta,
}

impl MapKind {
    pub const ALL: [MapKind; 3] = [MapKind::Epsilon, MapKind::Psi, MapKind::Theta];

    pub fn name(self) -> &'static str {
        match self {
            MapKind::Epsilon => "epsilon",
            MapKind::Psi => "psi",
            MapKind::Theta => "theta",
        }
    }

    pub fn from_name(s: &str) -> Result<MapKind> {
        MapKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidArgument(format!("unknown chain map {s}")))
    }

    pub fn source(self) -> Theory {
        match self {
            MapKind::Epsilon => Theory::CL,
            MapKind::Psi => Theory::CS,
            MapKind::Theta => Theory::CDend,
        }
    }

    pub fn target(self) -> Theory {
        match self {
            MapKind::Epsilon => Theory::CS,
            MapKind::Psi => Theory::CY,
            MapKind::Theta => Theory::CZinb,
        }
    }
}

impl fmt::Display for MapKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn wrong_index(term: &ChainTerm, expected: &str) -> Error {
    Error::InvalidArgument(format!("expected a {expected} chain, got index {}", term.index))
}

/// `ε_n(x) = Σ_σ sgn(σ) (ω∘σ) ⊗ σ⁻¹·x`. Permutations label CS chains by
/// depth, so the usual `σ` appears here as its complement.
pub fn epsilon(term: &ChainTerm) -> Result<Chain> {
    if term.index != ChainIndex::Plain {
        return Err(wrong_index(term, "CL"));
    }
    let n = term.degree();
    Ok(Permutation::all(n)
        .into_iter()
        .map(|s| {
            let entries = s.inverse().act(&term.entries);
            (ChainTerm::new(ChainIndex::Perm(s.complement()), entries), Q::from_integer(s.sign().into()))
        })
        .collect())
}

/// `(σ; a) ↦ (ψ(σ); a)`.
pub fn psi_chain(term: &ChainTerm) -> Result<Chain> {
    match &term.index {
        ChainIndex::Perm(s) => Ok(vec![(ChainTerm::new(ChainIndex::Tree(s.psi()), term.entries.clone()), Q::one())]),
        _ => Err(wrong_index(term, "CS")),
    }
}

/// The signed index sequences of `θ_n^r`: `r` first, then a shuffle of
/// `r-1, …, 1` with `r+1, …, n`; the sign is `sgn · (-1)^(r-1)`.
/// There are `C(n-1, r-1)` of them.
pub fn theta_sequences(n: usize, r: usize) -> Result<Vec<(Vec<usize>, Q)>> {
    if r == 0 || r > n {
        return Err(Error::SlotOutOfRange { slot: r, max: n });
    }
    let down: Vec<usize> = (1..r).rev().collect();
    let up: Vec<usize> = (r + 1..=n).collect();
    let mut out = Vec::new();
    let mut cur = vec![r];
    interleave(&down, &up, &mut cur, &mut out);
    let base = sign(r as i64 - 1);
    Ok(out
        .into_iter()
        .map(|seq| {
            let s = Permutation::new(seq.clone()).expect("a permutation").sign();
            let c = if s > 0 { base.clone() } else { -base.clone() };
            (seq, c)
        })
        .collect())
}

fn interleave(a: &[usize], b: &[usize], cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if a.is_empty() && b.is_empty() {
        out.push(cur.clone());
        return;
    }
    if let Some((&x, rest)) = a.split_first() {
        cur.push(x);
        interleave(rest, b, cur, out);
        cur.pop();
    }
    if let Some((&x, rest)) = b.split_first() {
        cur.push(x);
        interleave(a, rest, cur, out);
        cur.pop();
    }
}

/// `[r] ⊗ x ↦ θ_n^r x`.
pub fn theta(term: &ChainTerm) -> Result<Chain> {
    let ChainIndex::Slot(r) = term.index else {
        return Err(wrong_index(term, "CDend"));
    };
    let n = term.degree();
    Ok(theta_sequences(n, r)?
        .into_iter()
        .map(|(seq, c)| {
            let entries = seq.iter().map(|&k| term.entries[k - 1]).collect();
            (ChainTerm::new(ChainIndex::Plain, entries), c)
        })
        .collect())
}

pub fn apply_map(kind: MapKind, term: &ChainTerm) -> Result<Chain> {
    match kind {
        MapKind::Epsilon => epsilon(term),
        MapKind::Psi => psi_chain(term),
        MapKind::Theta => theta(term),
    }
}

/// Checks that `source` and `target` are the complexes the map connects:
/// the right theories on the same basis, with the source structure derived
/// from the target one.
pub fn check_compatible(kind: MapKind, source: &ChainComplex, target: &ChainComplex) -> Result<()> {
    let incompatible = |why: String| Err(Error::IncompatibleAlgebras(why));
    if source.theory() != kind.source() || target.theory() != kind.target() {
        return incompatible(format!(
            "{kind} maps {} to {}, got {} to {}",
            kind.source(),
            kind.target(),
            source.theory(),
            target.theory()
        ));
    }
    if source.weight() != target.weight() {
        return incompatible("different weight pieces".into());
    }
    let (s, t) = (source.coeffs(), target.coeffs());
    let expected = match kind {
        MapKind::Epsilon => t.convert(Kind::Leibniz)?,
        MapKind::Psi => (**t).clone(),
        MapKind::Theta => t.convert(Kind::Dendriform)?,
    };
    if !s.same_structure(&expected) {
        return incompatible(format!("the {} algebra is not the one {kind} expects", source.theory()));
    }
    Ok(())
}

/// Matrix of the map from degree `n` of `source` to degree `n` of `target`.
pub fn map_matrix(kind: MapKind, source: &ChainComplex, target: &ChainComplex, n: usize) -> Result<SparseMat> {
    check_compatible(kind, source, target)?;
    let mut err = None;
    let m = source.map_matrix(n, target, n, |t| {
        apply_map(kind, t).unwrap_or_else(|e| {
            err = Some(e);
            Vec::new()
        })
    });
    match err {
        Some(e) => Err(e),
        None => Ok(m),
    }
}

/// Whether `d∘f_n = f_{n-1}∘d` on degree `n` (`n >= 2`).
pub fn commutes(kind: MapKind, source: &ChainComplex, target: &ChainComplex, n: usize) -> Result<bool> {
    let f_n = map_matrix(kind, source, target, n)?;
    let f_m = map_matrix(kind, source, target, n - 1)?;
    Ok(target.differential(n).compose(&f_n).sub(&f_m.compose(source.differential(n))).is_zero())
}

fn ad_table(coeffs: &Coefficients) -> Result<Vec<Combine>> {
    match coeffs.kind() {
        Kind::Dialgebra => Ok(vec![Combine::Op(Op::Left), Combine::Op(Op::Right)]),
        Kind::Leibniz => Ok(vec![Combine::Op(Op::Bracket)]),
        k => Err(Error::UnsupportedTheoryForSource { theory: "ad".into(), found: k.to_string() }),
    }
}

/// `ad(y)(σ ⊗ x) = Σ_i (σ; …, x_i⊣y − y⊢x_i, …)`; over a Leibniz algebra
/// the entry is `[x_i, y]`.
pub fn ad(coeffs: &Coefficients, y: &Sparse, term: &ChainTerm) -> Result<Chain> {
    let ops = ad_table(coeffs)?;
    let mut out = Vec::new();
    for i in 0..term.degree() {
        let x = term.entries[i];
        for (b, c) in y {
            let mut push = |prod: &Sparse, s: &Q| {
                for (m, v) in prod {
                    let mut e = term.entries.clone();
                    e[i] = *m;
                    out.push((ChainTerm::new(term.index.clone(), e), s * c * v));
                }
            };
            if ops.len() == 2 {
                push(coeffs.product(ops[0], x, *b), &Q::one());
                push(coeffs.product(ops[1], *b, x), &-Q::one());
            } else {
                push(coeffs.product(ops[0], x, *b), &Q::one());
            }
        }
    }
    Ok(out)
}

/// `h(y)(σ ⊗ x) = Σ_{i=0}^{n} (-1)^i s_i(σ) ⊗ (x_1, …, x_i, y, x_{i+1}, …)`.
pub fn h_of(y: &Sparse, term: &ChainTerm) -> Result<Chain> {
    let ChainIndex::Perm(s) = &term.index else {
        return Err(wrong_index(term, "CS"));
    };
    let n = term.degree();
    let mut out = Vec::new();
    for i in 0..=n {
        let si = ChainIndex::Perm(s.bifurcate(i)?);
        for (b, c) in y {
            let mut e = term.entries.clone();
            e.insert(i, *b);
            out.push((ChainTerm::new(si.clone(), e), sign(i as i64) * c));
        }
    }
    Ok(out)
}

/// Both operators of the bracket identities: `(ad(y) x, h(y) x)`.
pub fn ad_homotopy(coeffs: &Coefficients, y: &Sparse, term: &ChainTerm) -> Result<(Chain, Chain)> {
    Ok((ad(coeffs, y, term)?, h_of(y, term)?))
}

/// The inner face `d_i` of a tree, permutation or slot indexed chain.
pub fn face(coeffs: &Coefficients, term: &ChainTerm, i: usize) -> Result<Chain> {
    let n = term.degree();
    if i == 0 || i >= n {
        return Err(Error::IndexOutOfRange { index: i, max: n.saturating_sub(1) });
    }
    if matches!(term.index, ChainIndex::Plain) {
        return Err(wrong_index(term, "CY, CS or CDend"));
    }
    let (idx, c) = index_face(&term.index, n, i);
    Ok(contract(coeffs, &term.entries, i, c).into_iter().map(|(v, x)| (ChainTerm::new(idx.clone(), v), x)).collect())
}

/// `s_j(y; a) = (s_j(y); a_1, …, a_j, e, a_{j+1}, …)` for a bar-unit `e`.
pub fn degeneracy(term: &ChainTerm, j: usize, e: &Sparse) -> Result<Chain> {
    let index = match &term.index {
        ChainIndex::Tree(y) => ChainIndex::Tree(y.bifurcate(j)?),
        ChainIndex::Perm(s) => ChainIndex::Perm(s.bifurcate(j)?),
        _ => return Err(wrong_index(term, "CY or CS")),
    };
    Ok(e.iter()
        .map(|(b, c)| {
            let mut v = term.entries.clone();
            v.insert(j, *b);
            (ChainTerm::new(index.clone(), v), c.clone())
        })
        .collect())
}

/// Sum of equal terms with zero coefficients dropped, in a canonical order.
pub fn normalize(chain: Chain) -> Chain {
    let mut m: std::collections::BTreeMap<ChainTerm, Q> = std::collections::BTreeMap::new();
    for (t, x) in chain {
        *m.entry(t).or_insert_with(Q::zero) += x;
    }
    m.into_iter().filter(|(_, x)| !x.is_zero()).collect()
}
