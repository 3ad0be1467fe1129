//! Exact linear algebra over the rationals.
//!
//! Large ranks use sparse fraction-free elimination on integer vectors
//! (denominators cleared per vector, i.e. per column of a differential).
//! Small dense problems (relation spaces, halos, ideals) use rational RREF.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::rational::{denom_lcm, Q};

/// A sparse matrix stored by columns; column `j` is the image of basis
/// vector `j`, with row indices sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMat {
    pub nrows: usize,
    pub ncols: usize,
    pub cols: Vec<Vec<(usize, Q)>>,
}

impl SparseMat {
    pub fn zero(nrows: usize, ncols: usize) -> SparseMat {
        SparseMat { nrows, ncols, cols: vec![Vec::new(); ncols] }
    }

    pub fn from_cols(nrows: usize, cols: Vec<Vec<(usize, Q)>>) -> SparseMat {
        let ncols = cols.len();
        let cols = cols
            .into_iter()
            .map(|mut c| {
                c.sort_by_key(|e| e.0);
                c
            })
            .collect();
        SparseMat { nrows, ncols, cols }
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(|c| c.len()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_empty())
    }

    /// `self · v` for a sparse vector `v`.
    pub fn apply(&self, v: &[(usize, Q)]) -> Vec<(usize, Q)> {
        let mut acc: HashMap<usize, Q> = HashMap::new();
        for (j, x) in v {
            for (i, a) in &self.cols[*j] {
                *acc.entry(*i).or_insert_with(Q::zero) += a * x;
            }
        }
        let mut out: Vec<(usize, Q)> = acc.into_iter().filter(|(_, x)| !x.is_zero()).collect();
        out.sort_by_key(|e| e.0);
        out
    }

    /// `self · other`.
    pub fn compose(&self, other: &SparseMat) -> SparseMat {
        assert_eq!(self.ncols, other.nrows, "shape mismatch");
        SparseMat {
            nrows: self.nrows,
            ncols: other.ncols,
            cols: other.cols.iter().map(|c| self.apply(c)).collect(),
        }
    }

    pub fn add(&self, other: &SparseMat) -> SparseMat {
        assert_eq!((self.nrows, self.ncols), (other.nrows, other.ncols));
        let cols = self
            .cols
            .iter()
            .zip(&other.cols)
            .map(|(a, b)| {
                let mut acc: std::collections::BTreeMap<usize, Q> = a.iter().cloned().collect();
                for (i, x) in b {
                    *acc.entry(*i).or_insert_with(Q::zero) += x;
                }
                acc.into_iter().filter(|(_, x)| !x.is_zero()).collect()
            })
            .collect();
        SparseMat { nrows: self.nrows, ncols: self.ncols, cols }
    }

    pub fn scale(&self, c: &Q) -> SparseMat {
        let cols = self
            .cols
            .iter()
            .map(|col| col.iter().map(|(i, x)| (*i, x * c)).filter(|(_, x)| !x.is_zero()).collect())
            .collect();
        SparseMat { nrows: self.nrows, ncols: self.ncols, cols }
    }

    pub fn sub(&self, other: &SparseMat) -> SparseMat {
        self.add(&other.scale(&-Q::one()))
    }

    pub fn identity(n: usize) -> SparseMat {
        SparseMat { nrows: n, ncols: n, cols: (0..n).map(|i| vec![(i, Q::one())]).collect() }
    }

    pub fn rank(&self) -> usize {
        rank_of_vectors(&self.cols)
    }

    pub fn to_dense(&self) -> Vec<Vec<Q>> {
        let mut m = vec![vec![Q::zero(); self.ncols]; self.nrows];
        for (j, c) in self.cols.iter().enumerate() {
            for (i, x) in c {
                m[*i][j] = x.clone();
            }
        }
        m
    }
}

/// Integer arithmetic for fraction-free elimination. `None` signals overflow.
trait ExactInt: Clone + PartialEq {
    fn is_zero(&self) -> bool;
    /// `a*b - c*d`
    fn mul_sub(a: &Self, b: &Self, c: &Self, d: &Self) -> Option<Self>;
    fn gcd(&self, other: &Self) -> Self;
    fn div_exact(&self, g: &Self) -> Self;
    fn is_one(&self) -> bool;
}

impl ExactInt for i64 {
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn mul_sub(a: &i64, b: &i64, c: &i64, d: &i64) -> Option<i64> {
        a.checked_mul(*b)?.checked_sub(c.checked_mul(*d)?)
    }
    fn gcd(&self, other: &i64) -> i64 {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, g: &i64) -> i64 {
        self / g
    }
    fn is_one(&self) -> bool {
        *self == 1
    }
}

impl ExactInt for BigInt {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn mul_sub(a: &BigInt, b: &BigInt, c: &BigInt, d: &BigInt) -> Option<BigInt> {
        Some(a * b - c * d)
    }
    fn gcd(&self, other: &BigInt) -> BigInt {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, g: &BigInt) -> BigInt {
        self / g
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
}

fn integer_vectors(vs: &[Vec<(usize, Q)>]) -> Vec<Vec<(usize, BigInt)>> {
    vs.iter()
        .map(|v| {
            let l = denom_lcm(v.iter().map(|e| &e.1));
            v.iter()
                .map(|(i, x)| {
                    let y = x * Q::from_integer(l.clone());
                    (*i, y.to_integer())
                })
                .collect()
        })
        .collect()
}

/// Echelon elimination with leading-entry reduction only. Returns `None` on
/// machine-integer overflow.
fn echelon_rank<T: ExactInt>(vectors: Vec<Vec<(usize, T)>>) -> Option<usize> {
    let mut pivots: HashMap<usize, Vec<(usize, T)>> = HashMap::new();
    for mut v in vectors {
        loop {
            let Some((lead, lv)) = v.first().cloned() else { break };
            let Some(p) = pivots.get(&lead) else {
                pivots.insert(lead, v);
                break;
            };
            let pv = p[0].1.clone();
            let g = pv.gcd(&lv);
            let (a, b) = (pv.div_exact(&g), lv.div_exact(&g));
            // v <- a*v - b*p, which kills the leading entry
            let mut out: Vec<(usize, T)> = Vec::with_capacity(v.len() + p.len());
            let (mut i, mut j) = (1, 1);
            let zero_t = || T::mul_sub(&lv, &pv, &pv, &lv);
            let zero = zero_t()?;
            while i < v.len() || j < p.len() {
                let (idx, val) = match (v.get(i), p.get(j)) {
                    (Some(x), Some(y)) if x.0 == y.0 => {
                        i += 1;
                        j += 1;
                        (x.0, T::mul_sub(&a, &x.1, &b, &y.1)?)
                    }
                    (Some(x), Some(y)) if x.0 < y.0 => {
                        i += 1;
                        (x.0, T::mul_sub(&a, &x.1, &zero, &zero)?)
                    }
                    (Some(x), None) => {
                        i += 1;
                        (x.0, T::mul_sub(&a, &x.1, &zero, &zero)?)
                    }
                    (_, Some(y)) => {
                        j += 1;
                        (y.0, T::mul_sub(&zero, &zero, &b, &y.1)?)
                    }
                    (None, None) => unreachable!(),
                };
                if !val.is_zero() {
                    out.push((idx, val));
                }
            }
            if let Some(first) = out.first() {
                let mut g = first.1.clone();
                for e in &out[1..] {
                    if g.is_one() {
                        break;
                    }
                    g = g.gcd(&e.1);
                }
                if !g.is_one() {
                    for e in out.iter_mut() {
                        e.1 = e.1.div_exact(&g);
                    }
                }
            }
            v = out;
        }
    }
    Some(pivots.len())
}

/// Rank of the span of sparse rational vectors, exactly.
pub fn rank_of_vectors(vs: &[Vec<(usize, Q)>]) -> usize {
    let ints = integer_vectors(vs);
    let small: Option<Vec<Vec<(usize, i64)>>> = ints
        .iter()
        .map(|v| v.iter().map(|(i, x)| x.to_i64().filter(|y| y.abs() < (1 << 20)).map(|y| (*i, y))).collect())
        .collect();
    if let Some(small) = small {
        if let Some(r) = echelon_rank(small) {
            return r;
        }
    }
    echelon_rank(ints).expect("big integers do not overflow")
}

/// Reduced row echelon form of a dense matrix; returns the nonzero rows and
/// the pivot columns.
pub fn rref(rows: &[Vec<Q>]) -> (Vec<Vec<Q>>, Vec<usize>) {
    let mut m: Vec<Vec<Q>> = rows.to_vec();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(k) = (r..m.len()).find(|&k| !m[k][c].is_zero()) else { continue };
        m.swap(r, k);
        let inv = Q::one() / &m[r][c];
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for k in 0..m.len() {
            if k != r && !m[k][c].is_zero() {
                let f = m[k][c].clone();
                let (pr, row) = if k < r {
                    let (a, b) = m.split_at_mut(r);
                    (&b[0], &mut a[k])
                } else {
                    let (a, b) = m.split_at_mut(k);
                    (&a[r], &mut b[0])
                };
                for (x, y) in row.iter_mut().zip(pr.iter()) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank_dense(rows: &[Vec<Q>]) -> usize {
    rref(rows).1.len()
}

/// A basis of `{x : A x = 0}` for `A` given by rows over `ncols` unknowns.
pub fn nullspace(rows: &[Vec<Q>], ncols: usize) -> Vec<Vec<Q>> {
    let (r, pivots) = rref(rows);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); ncols];
            v[f] = Q::one();
            for (row, &p) in r.iter().zip(&pivots) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect()
}

/// Solves `A x = b`. Returns a particular solution and a nullspace basis, or
/// `None` when inconsistent.
pub fn solve_affine(rows: &[Vec<Q>], rhs: &[Q], ncols: usize) -> Option<(Vec<Q>, Vec<Vec<Q>>)> {
    let aug: Vec<Vec<Q>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let mut r = r.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let (r, pivots) = rref(&aug);
    if pivots.contains(&ncols) {
        return None;
    }
    let mut x = vec![Q::zero(); ncols];
    for (row, &p) in r.iter().zip(&pivots) {
        x[p] = row[ncols].clone();
    }
    Some((x, nullspace(rows, ncols)))
}

/// Whether two families of vectors span the same subspace.
pub fn same_span(a: &[Vec<Q>], b: &[Vec<Q>]) -> bool {
    rref(a).0 == rref(b).0
}

/// Whether `v` lies in the span of the rows of an RREF basis with the given pivots.
pub fn reduce_by_rref(v: &[Q], basis: &[Vec<Q>], pivots: &[usize]) -> Vec<Q> {
    let mut v = v.to_vec();
    for (row, &p) in basis.iter().zip(pivots) {
        if !v[p].is_zero() {
            let f = v[p].clone();
            for (x, y) in v.iter_mut().zip(row) {
                *x -= &f * y;
            }
        }
    }
    v
}

pub fn is_zero_vec(v: &[Q]) -> bool {
    v.iter().all(|x| x.is_zero())
}
