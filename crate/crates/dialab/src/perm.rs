//! Permutations in one-line notation, viewed as increasing trees.
//!
//! Under the level coding, vertex `i` of the increasing tree of `σ` carries
//! level `σ(i)` and the largest level is the root, so forgetting levels is
//! `ψ`. Height coding complements the levels first.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::trees::{fmt_seq, parse_seq, ProductSymbol, Tree};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

/// Which coding turns a permutation into a tree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PsiVariant {
    /// `ψ`: the largest value is the root.
    Depth,
    /// `ψ′`: the smallest value is the root.
    Height,
}

impl Permutation {
    pub fn new(v: Vec<usize>) -> Result<Permutation> {
        let n = v.len();
        let mut seen = vec![false; n + 1];
        for &a in &v {
            if a == 0 || a > n || seen[a] {
                return Err(Error::InvalidPermutation(fmt_seq(&v)));
            }
            seen[a] = true;
        }
        Ok(Permutation(v))
    }

    pub fn identity(n: usize) -> Permutation {
        Permutation((1..=n).collect())
    }

    /// `ω = [n, …, 2, 1]`.
    pub fn omega(n: usize) -> Permutation {
        Permutation((1..=n).rev().collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    /// `σ(i)` for 1-based `i`.
    pub fn at(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &a) in self.0.iter().enumerate() {
            inv[a - 1] = i + 1;
        }
        Permutation(inv)
    }

    /// `(στ)(i) = σ(τ(i))`.
    pub fn compose(&self, tau: &Permutation) -> Permutation {
        assert_eq!(self.len(), tau.len());
        Permutation(tau.0.iter().map(|&t| self.0[t - 1]).collect())
    }

    pub fn sign(&self) -> i64 {
        let mut inv = 0usize;
        for i in 0..self.len() {
            for j in i + 1..self.len() {
                if self.0[i] > self.0[j] {
                    inv += 1;
                }
            }
        }
        if inv % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// All permutations of `{1..n}` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(n);
        let mut used = vec![false; n + 1];
        fn rec(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
            if cur.len() == n {
                out.push(Permutation(cur.clone()));
                return;
            }
            for a in 1..=n {
                if !used[a] {
                    used[a] = true;
                    cur.push(a);
                    rec(n, cur, used, out);
                    cur.pop();
                    used[a] = false;
                }
            }
        }
        rec(n, &mut cur, &mut used, &mut out);
        out
    }

    /// `(σ·x)` places `x_i` in position `σ(i)`.
    pub fn act<T: Clone>(&self, xs: &[T]) -> Vec<T> {
        assert_eq!(xs.len(), self.len());
        let mut out: Vec<Option<T>> = vec![None; xs.len()];
        for (i, x) in xs.iter().enumerate() {
            out[self.0[i] - 1] = Some(x.clone());
        }
        out.into_iter().map(Option::unwrap).collect()
    }

    /// Relabels a sequence of distinct integers to `{1..n}` preserving order.
    pub fn standardize(seq: &[usize]) -> Permutation {
        let mut idx: Vec<usize> = (0..seq.len()).collect();
        idx.sort_by_key(|&i| seq[i]);
        let mut v = vec![0; seq.len()];
        for (rank, &i) in idx.iter().enumerate() {
            v[i] = rank + 1;
        }
        Permutation(v)
    }

    /// `n + 1 - σ(i)`, that is `ω∘σ`.
    pub fn complement(&self) -> Permutation {
        let n = self.len();
        Permutation(self.0.iter().map(|&a| n + 1 - a).collect())
    }

    pub fn reverse(&self) -> Permutation {
        Permutation(self.0.iter().rev().cloned().collect())
    }

    /// Juxtaposition `σ × τ`.
    pub fn cross(&self, tau: &Permutation) -> Permutation {
        let n = self.len();
        let mut v = self.0.clone();
        v.extend(tau.0.iter().map(|&a| a + n));
        Permutation(v)
    }

    pub fn psi(&self) -> Tree {
        Tree::from_sequence(&self.0)
    }

    /// Height coding: `ψ′(σ) = ψ(ω∘σ)`.
    pub fn psi_prime(&self) -> Tree {
        self.complement().psi()
    }

    pub fn psi_variant(&self, variant: PsiVariant) -> Tree {
        match variant {
            PsiVariant::Depth => self.psi(),
            PsiVariant::Height => self.psi_prime(),
        }
    }

    /// The inverse image of `y`, in lexicographic order.
    pub fn fiber(y: &Tree, variant: PsiVariant) -> Vec<Permutation> {
        Permutation::all(y.degree())
            .into_iter()
            .filter(|s| &s.psi_variant(variant) == y)
            .collect()
    }

    /// Deletes the leaf `i` of the increasing tree and standardizes the levels.
    /// The vertex removed is the parent of the leaf, i.e. the neighbour of the
    /// leaf with the smaller level.
    pub fn face(&self, i: usize) -> Result<Permutation> {
        let n = self.len();
        if n == 0 {
            return Err(Error::FaceOfLeaf);
        }
        if i > n {
            return Err(Error::IndexOutOfRange { index: i, max: n });
        }
        let pos = if i == 0 {
            0
        } else if i == n {
            n - 1
        } else if self.0[i - 1] < self.0[i] {
            i - 1
        } else {
            i
        };
        let mut v = self.0.clone();
        v.remove(pos);
        Ok(Permutation::standardize(&v))
    }

    /// Bifurcates leaf `i`: a new vertex with the smallest level is inserted
    /// at position `i + 1`.
    pub fn bifurcate(&self, i: usize) -> Result<Permutation> {
        let n = self.len();
        if i > n {
            return Err(Error::IndexOutOfRange { index: i, max: n });
        }
        let mut v: Vec<usize> = self.0.iter().map(|&a| a + 1).collect();
        v.insert(i, 1);
        Ok(Permutation(v))
    }

    /// `∘_i` of the underlying tree `ψ(σ)`.
    pub fn product_symbol(&self, i: usize) -> Result<ProductSymbol> {
        let n = self.len();
        if i == 0 || i + 1 > n {
            return Err(Error::IndexOutOfRange { index: i, max: n.saturating_sub(1) });
        }
        Ok(crate::trees::symbol_of(self.0[i - 1], self.0[i]))
    }

    /// The `(n, m)`-shuffles: permutations increasing on `1..=n` and on
    /// `n+1..=n+m`.
    pub fn shuffles(n: usize, m: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let total = n + m;
        // choose the image set of 1..=n
        fn rec(start: usize, left: usize, total: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if left == 0 {
                out.push(cur.clone());
                return;
            }
            for a in start..=total {
                if total - a + 1 < left {
                    break;
                }
                cur.push(a);
                rec(a + 1, left - 1, total, cur, out);
                cur.pop();
            }
        }
        let mut sets = Vec::new();
        rec(1, n, total, &mut Vec::new(), &mut sets);
        for first in sets {
            let rest: Vec<usize> = (1..=total).filter(|a| !first.contains(a)).collect();
            let mut v = first;
            v.extend(rest);
            out.push(Permutation(v));
        }
        out.sort();
        out
    }
}

impl FromStr for Permutation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Permutation> {
        let seq = parse_seq(s).ok_or_else(|| Error::InvalidPermutation(s.trim().to_string()))?;
        Permutation::new(seq)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&fmt_seq(&self.0))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
