//! The five chain complexes and their homology.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::finalg::{check_axioms, FiniteAlgebra, Kind};
use crate::freealg::Op;
use crate::linalg::SparseMat;
use crate::perm::Permutation;
use crate::rational::{sign, Q};
use crate::trees::{ProductSymbol, Tree};

use super::coeffs::{Coefficients, Combine, Sparse};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Theory {
    /// Planar binary trees, dialgebras.
    CY,
    /// Permutations (increasing trees), dialgebras.
    CS,
    /// `{1..n}`, dendriform algebras.
    CDend,
    /// Leibniz algebras.
    CL,
    /// Zinbiel algebras.
    CZinb,
}

impl Theory {
    pub const ALL: [Theory; 5] = [Theory::CY, Theory::CS, Theory::CDend, Theory::CL, Theory::CZinb];

    pub fn name(self) -> &'static str {
        match self {
            Theory::CY => "CY",
            Theory::CS => "CS",
            Theory::CDend => "CDend",
            Theory::CL => "CL",
            Theory::CZinb => "CZinb",
        }
    }

    pub fn from_name(s: &str) -> Result<Theory> {
        Theory::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidArgument(format!("unknown theory {s:?}")))
    }

    /// The kind of algebra the complex is built from.
    pub fn kind(self) -> Kind {
        match self {
            Theory::CY | Theory::CS => Kind::Dialgebra,
            Theory::CDend => Kind::Dendriform,
            Theory::CL => Kind::Leibniz,
            Theory::CZinb => Kind::Zinbiel,
        }
    }
}

impl fmt::Display for Theory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum ChainIndex {
    Tree(Tree),
    Perm(Permutation),
    Slot(usize),
    Plain,
}

impl fmt::Display for ChainIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChainIndex::Tree(t) => write!(f, "{t}"),
            ChainIndex::Perm(p) => write!(f, "{p}"),
            ChainIndex::Slot(r) => write!(f, "[{r}]"),
            ChainIndex::Plain => Ok(()),
        }
    }
}

/// An index and a tuple of basis elements of the source algebra.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ChainTerm {
    pub index: ChainIndex,
    pub entries: Vec<usize>,
}

impl ChainTerm {
    pub fn new(index: ChainIndex, entries: Vec<usize>) -> ChainTerm {
        ChainTerm { index, entries }
    }

    pub fn degree(&self) -> usize {
        self.entries.len()
    }

    pub fn display(&self, names: &[String]) -> String {
        let args: Vec<&str> = self.entries.iter().map(|&e| names[e].as_str()).collect();
        match self.index {
            ChainIndex::Plain => format!("({})", args.join(", ")),
            _ => format!("({}; {})", self.index, args.join(", ")),
        }
    }
}

/// Index sets of a theory in degree `n`.
pub fn indices(theory: Theory, n: usize) -> Vec<ChainIndex> {
    match theory {
        Theory::CY => Tree::enumerate(n).into_iter().map(ChainIndex::Tree).collect(),
        Theory::CS => Permutation::all(n).into_iter().map(ChainIndex::Perm).collect(),
        Theory::CDend => (1..=n).map(ChainIndex::Slot).collect(),
        Theory::CL | Theory::CZinb => vec![ChainIndex::Plain],
    }
}

fn symbol_op(s: ProductSymbol) -> Combine {
    Combine::Op(Op::from_symbol(s))
}

/// The inner face `d_i`, `1 <= i <= n-1`, on an index: the new index and the
/// product used on entries `i` and `i+1`.
pub fn index_face(index: &ChainIndex, n: usize, i: usize) -> (ChainIndex, Combine) {
    assert!(i >= 1 && i < n, "inner face {i} out of range for degree {n}");
    match index {
        ChainIndex::Tree(y) => (ChainIndex::Tree(y.face(i).unwrap()), symbol_op(y.product_symbol(i).unwrap())),
        ChainIndex::Perm(s) => (ChainIndex::Perm(s.face(i).unwrap()), symbol_op(s.product_symbol(i).unwrap())),
        &ChainIndex::Slot(r) => {
            let target = if i < r { r - 1 } else { r };
            let op = if i + 1 < r {
                Combine::Star
            } else if i + 1 == r {
                Combine::Op(Op::Succ)
            } else if i == r {
                Combine::Op(Op::Prec)
            } else {
                Combine::Star
            };
            (ChainIndex::Slot(target), op)
        }
        ChainIndex::Plain => panic!("plain chains have no simplicial faces"),
    }
}

/// Tuples of basis elements in one degree.
#[derive(Clone, Debug)]
enum TupleSpace {
    All { k: usize, n: usize },
    Listed { list: Vec<Vec<usize>>, pos: HashMap<Vec<usize>, usize> },
}

impl TupleSpace {
    fn weighted(weights: &[usize], n: usize, w: usize) -> TupleSpace {
        let mut list = Vec::new();
        fn rec(weights: &[usize], n: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == n {
                if left == 0 {
                    out.push(cur.clone());
                }
                return;
            }
            let slots = n - cur.len();
            for (b, &wb) in weights.iter().enumerate() {
                if wb >= 1 && wb <= left && left - wb >= slots - 1 {
                    cur.push(b);
                    rec(weights, n, left - wb, cur, out);
                    cur.pop();
                }
            }
        }
        if n >= 1 {
            rec(weights, n, w, &mut Vec::new(), &mut list);
        }
        let pos = list.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
        TupleSpace::Listed { list, pos }
    }

    fn len(&self) -> usize {
        match self {
            TupleSpace::All { k, n } => k.pow(*n as u32),
            TupleSpace::Listed { list, .. } => list.len(),
        }
    }

    fn get(&self, t: usize) -> Vec<usize> {
        match self {
            TupleSpace::All { k, n } => {
                let mut out = vec![0; *n];
                let mut c = t;
                for slot in out.iter_mut().rev() {
                    *slot = c % k;
                    c /= k;
                }
                out
            }
            TupleSpace::Listed { list, .. } => list[t].clone(),
        }
    }

    fn position(&self, v: &[usize]) -> Option<usize> {
        match self {
            TupleSpace::All { k, n } => {
                if v.len() != *n || v.iter().any(|&e| e >= *k) {
                    return None;
                }
                Some(v.iter().fold(0, |acc, &e| acc * k + e))
            }
            TupleSpace::Listed { pos, .. } => pos.get(v).copied(),
        }
    }
}

#[derive(Debug)]
struct Degree {
    labels: Vec<ChainIndex>,
    label_pos: HashMap<ChainIndex, usize>,
    tuples: TupleSpace,
    d: SparseMat,
    rank: OnceLock<usize>,
}

impl Degree {
    fn dim(&self) -> usize {
        self.labels.len() * self.tuples.len()
    }
}

/// The algebra a complex is built from.
#[derive(Clone, Debug)]
pub enum Source {
    Finite(FiniteAlgebra),
    /// The weight-`weight` piece of the free algebra of `kind` on `dim_v`
    /// generators.
    Free { kind: Kind, dim_v: usize, weight: usize },
}

/// A bounded piece of one of the five complexes, with exact differentials.
#[derive(Debug)]
pub struct ChainComplex {
    theory: Theory,
    coeffs: Arc<Coefficients>,
    weight: Option<usize>,
    degrees: Vec<Degree>,
}

/// Products `t[i-1] ∘ t[i]` placed back into the tuple (`i` is 1-based).
pub(crate) fn contract(coeffs: &Coefficients, t: &[usize], i: usize, c: Combine) -> Vec<(Vec<usize>, Q)> {
    coeffs
        .product(c, t[i - 1], t[i])
        .iter()
        .map(|(m, x)| {
            let mut v = Vec::with_capacity(t.len() - 1);
            v.extend_from_slice(&t[..i - 1]);
            v.push(*m);
            v.extend_from_slice(&t[i + 1..]);
            (v, x.clone())
        })
        .collect()
}

/// The differential of one basis chain, as a linear combination of chains.
pub fn differential_terms(theory: Theory, coeffs: &Coefficients, term: &ChainTerm) -> Vec<(ChainTerm, Q)> {
    let n = term.degree();
    let t = &term.entries;
    let mut out = Vec::new();
    match theory {
        Theory::CY | Theory::CS | Theory::CDend => {
            for i in 1..n {
                let (idx, c) = index_face(&term.index, n, i);
                // d = -Σ (-1)^i d_i
                let s = -sign(i as i64);
                for (v, x) in contract(coeffs, t, i, c) {
                    out.push((ChainTerm::new(idx.clone(), v), &s * x));
                }
            }
        }
        Theory::CL => {
            for j in 2..=n {
                let s = sign(j as i64);
                for i in 1..j {
                    for (m, x) in coeffs.product(Combine::Op(Op::Bracket), t[i - 1], t[j - 1]) {
                        let mut v = t.clone();
                        v[i - 1] = *m;
                        v.remove(j - 1);
                        out.push((ChainTerm::new(ChainIndex::Plain, v), &s * x));
                    }
                }
            }
        }
        Theory::CZinb => {
            if n >= 2 {
                for (v, x) in contract(coeffs, t, 1, Combine::Op(Op::Dot)) {
                    out.push((ChainTerm::new(ChainIndex::Plain, v), x));
                }
            }
            for i in 2..n {
                let s = sign(i as i64 - 1);
                for (v, x) in contract(coeffs, t, i, Combine::Star) {
                    out.push((ChainTerm::new(ChainIndex::Plain, v), &s * x));
                }
            }
        }
    }
    out
}

impl ChainComplex {
    /// Builds degrees `1..=n_max` and checks `d∘d = 0`.
    pub fn build(theory: Theory, source: &Source, n_max: usize) -> Result<ChainComplex> {
        let (coeffs, weight) = match source {
            Source::Finite(a) => {
                let conv = super::coeffs::convert_finite(a, theory.kind()).map_err(|_| {
                    Error::UnsupportedTheoryForSource { theory: theory.name().into(), found: a.kind().to_string() }
                })?;
                if let Some(v) = check_axioms(&conv).into_iter().next() {
                    let b = conv.basis();
                    return Err(Error::AxiomFailure {
                        axiom: v.axiom.to_string(),
                        witness: (b[v.witness.0].clone(), b[v.witness.1].clone(), b[v.witness.2].clone()),
                    });
                }
                (Coefficients::from_finite(&conv), None)
            }
            Source::Free { kind, dim_v, weight } => {
                let c = Coefficients::free(*kind, *dim_v, *weight)?;
                let c = c.convert(theory.kind()).map_err(|_| Error::UnsupportedTheoryForSource {
                    theory: theory.name().into(),
                    found: format!("free {kind}"),
                })?;
                (c, Some(*weight))
            }
        };
        Self::from_coefficients(theory, Arc::new(coeffs), weight, n_max)
    }

    /// Builds from prepared coefficients; `weight` selects a weight piece of
    /// a free source.
    pub fn from_coefficients(
        theory: Theory,
        coeffs: Arc<Coefficients>,
        weight: Option<usize>,
        n_max: usize,
    ) -> Result<ChainComplex> {
        if coeffs.kind() != theory.kind() {
            return Err(Error::UnsupportedTheoryForSource {
                theory: theory.name().into(),
                found: coeffs.kind().to_string(),
            });
        }
        let mut degrees: Vec<Degree> = Vec::new();
        for n in 1..=n_max {
            let labels = indices(theory, n);
            let label_pos = labels.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect();
            let tuples = match (weight, coeffs.weights()) {
                (Some(w), Some(ws)) => TupleSpace::weighted(ws, n, w),
                _ => TupleSpace::All { k: coeffs.dim(), n },
            };
            let mut deg = Degree { labels, label_pos, tuples, d: SparseMat::zero(0, 0), rank: OnceLock::new() };
            let ncols = deg.dim();
            deg.d = if n == 1 {
                SparseMat::zero(0, ncols)
            } else {
                let prev = &degrees[n - 2];
                let mut cols = Vec::with_capacity(ncols);
                for pos in 0..ncols {
                    let term = Self::term_in(&deg, pos);
                    let mut col: HashMap<usize, Q> = HashMap::new();
                    for (t, x) in differential_terms(theory, &coeffs, &term) {
                        let p = Self::position_in(prev, &t).unwrap_or_else(|| {
                            panic!("{} leaves the weight piece", t.display(coeffs.names()))
                        });
                        *col.entry(p).or_insert_with(Q::zero) += x;
                    }
                    cols.push(col.into_iter().filter(|(_, x)| !x.is_zero()).collect());
                }
                SparseMat::from_cols(prev.dim(), cols)
            };
            degrees.push(deg);
        }
        let c = ChainComplex { theory, coeffs, weight, degrees };
        for n in 2..n_max {
            if !c.degrees[n - 2].d.compose(&c.degrees[n - 1].d).is_zero() {
                return Err(Error::MalformedAlgebra(format!("d∘d ≠ 0 from degree {}", n + 1)));
            }
        }
        Ok(c)
    }

    fn term_in(deg: &Degree, pos: usize) -> ChainTerm {
        let t = deg.tuples.len();
        ChainTerm::new(deg.labels[pos / t].clone(), deg.tuples.get(pos % t))
    }

    fn position_in(deg: &Degree, term: &ChainTerm) -> Option<usize> {
        let l = *deg.label_pos.get(&term.index)?;
        Some(l * deg.tuples.len() + deg.tuples.position(&term.entries)?)
    }

    pub fn theory(&self) -> Theory {
        self.theory
    }

    pub fn coeffs(&self) -> &Arc<Coefficients> {
        &self.coeffs
    }

    pub fn weight(&self) -> Option<usize> {
        self.weight
    }

    /// Highest degree built.
    pub fn top(&self) -> usize {
        self.degrees.len()
    }

    /// A weight piece of a free algebra vanishes above its weight.
    pub fn is_bounded(&self) -> bool {
        matches!(self.weight, Some(w) if w <= self.top())
    }

    pub fn dim(&self, n: usize) -> usize {
        if n == 0 || n > self.top() {
            0
        } else {
            self.degrees[n - 1].dim()
        }
    }

    pub fn term(&self, n: usize, pos: usize) -> ChainTerm {
        Self::term_in(&self.degrees[n - 1], pos)
    }

    pub fn terms(&self, n: usize) -> Vec<ChainTerm> {
        (0..self.dim(n)).map(|p| self.term(n, p)).collect()
    }

    pub fn position(&self, term: &ChainTerm) -> Option<usize> {
        let n = term.degree();
        if n == 0 || n > self.top() {
            return None;
        }
        Self::position_in(&self.degrees[n - 1], term)
    }

    /// `d_n : C_n → C_{n-1}`.
    pub fn differential(&self, n: usize) -> &SparseMat {
        &self.degrees[n - 1].d
    }

    pub fn rank(&self, n: usize) -> usize {
        if n <= 1 || n > self.top() {
            return 0;
        }
        *self.degrees[n - 1].rank.get_or_init(|| self.degrees[n - 1].d.rank())
    }

    /// Whether `d_{n-1} d_n = 0` for every stored `n`.
    pub fn d_squared_is_zero(&self) -> bool {
        (3..=self.top()).all(|n| self.differential(n - 1).compose(self.differential(n)).is_zero())
    }

    /// Betti numbers `b_1, b_2, …` for every degree where they are determined:
    /// all built degrees of a bounded weight piece, otherwise all but the top.
    pub fn betti(&self) -> Vec<usize> {
        let last = if self.is_bounded() { self.top() } else { self.top().saturating_sub(1) };
        (1..=last).map(|n| self.dim(n) - self.rank(n) - self.rank(n + 1)).collect()
    }

    /// Converts a linear combination of chains of degree `n` to a sparse vector.
    pub fn to_vector(&self, chain: &[(ChainTerm, Q)]) -> Sparse {
        let mut acc: HashMap<usize, Q> = HashMap::new();
        for (t, x) in chain {
            let p = self.position(t).unwrap_or_else(|| panic!("{} is not in the complex", t.display(self.coeffs.names())));
            *acc.entry(p).or_insert_with(Q::zero) += x;
        }
        let mut v: Sparse = acc.into_iter().filter(|(_, x)| !x.is_zero()).collect();
        v.sort_by_key(|e| e.0);
        v
    }

    /// Matrix of a linear map from degree `n` of `self` to degree `m` of
    /// `target`, given on basis chains.
    pub fn map_matrix(
        &self,
        n: usize,
        target: &ChainComplex,
        m: usize,
        mut f: impl FnMut(&ChainTerm) -> Vec<(ChainTerm, Q)>,
    ) -> SparseMat {
        let cols = (0..self.dim(n)).map(|p| target.to_vector(&f(&self.term(n, p)))).collect();
        SparseMat::from_cols(target.dim(m), cols)
    }

    /// Horizontal and vertical parts of `d_n` for the bicomplex structure:
    /// a face is horizontal when it acts on the left part of the index (the
    /// left subtree of a tree, or `i < r` for the slot `r`).
    pub fn bicomplex_split(&self, n: usize) -> Result<(SparseMat, SparseMat)> {
        if !matches!(self.theory, Theory::CY | Theory::CDend) {
            return Err(Error::InvalidArgument(format!("{} has no bicomplex structure here", self.theory)));
        }
        let deg = &self.degrees[n - 1];
        let rows = self.dim(n - 1);
        let mut h = Vec::with_capacity(deg.dim());
        let mut v = Vec::with_capacity(deg.dim());
        for pos in 0..deg.dim() {
            let term = Self::term_in(deg, pos);
            let p = match &term.index {
                ChainIndex::Tree(y) => y.bidegree().unwrap().0 + 1,
                ChainIndex::Slot(r) => *r,
                _ => unreachable!(),
            };
            let (mut hc, mut vc) = (Vec::new(), Vec::new());
            for i in 1..n {
                let (idx, c) = index_face(&term.index, n, i);
                let s = -sign(i as i64);
                for (e, x) in contract(&self.coeffs, &term.entries, i, c) {
                    let entry = (ChainTerm::new(idx.clone(), e), &s * x);
                    if i < p {
                        hc.push(entry);
                    } else {
                        vc.push(entry);
                    }
                }
            }
            h.push(self.to_vector(&hc));
            v.push(self.to_vector(&vc));
        }
        Ok((SparseMat::from_cols(rows, h), SparseMat::from_cols(rows, v)))
    }
}

/// Builds degrees `1..=max_degree + 1` and returns `b_1..b_{max_degree}`
/// (fewer when a weight piece vanishes earlier).
pub fn betti_numbers(theory: Theory, source: &Source, max_degree: usize) -> Result<Vec<usize>> {
    let c = ChainComplex::build(theory, source, max_degree + 1)?;
    let mut b = c.betti();
    b.truncate(max_degree);
    Ok(b)
}

