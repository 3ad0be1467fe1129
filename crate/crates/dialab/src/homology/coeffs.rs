//! Structure constants in the form the chain complexes consume.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::finalg::{leibnizification, zinbiel_as_dendriform, FiniteAlgebra, Kind};
use crate::freealg::{
    Algebra, DendTerm, FreeDendriform, FreeDialgebra, FreeLeibniz, FreeZinbiel, Op, PointedWord, Sym, Word,
};
use crate::rational::Q;

/// How two adjacent chain entries are multiplied.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Combine {
    Op(Op),
    /// `≺ + ≻` for dendriform, `x·y + y·x` for Zinbiel.
    Star,
}

pub type Sparse = Vec<(usize, Q)>;

/// A basis with sparse multiplication tables. Free sources are truncated at
/// a weight and remember the generator weight of every basis element.
#[derive(Clone, Debug)]
pub struct Coefficients {
    kind: Kind,
    names: Vec<String>,
    weights: Option<Vec<usize>>,
    tables: BTreeMap<Combine, Vec<Sparse>>,
    pointed: Option<Vec<PointedWord>>,
    pointed_index: BTreeMap<PointedWord, usize>,
}

fn dense_to_sparse(v: &[Q]) -> Sparse {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
}

fn add_sparse(a: &Sparse, b: &Sparse) -> Sparse {
    let mut m: BTreeMap<usize, Q> = a.iter().cloned().collect();
    for (i, x) in b {
        *m.entry(*i).or_insert_with(Q::zero) += x;
    }
    m.into_iter().filter(|(_, x)| !x.is_zero()).collect()
}

impl Coefficients {
    pub fn from_finite(a: &FiniteAlgebra) -> Coefficients {
        let k = a.dim();
        let mut tables = BTreeMap::new();
        for (op, t) in a.tables() {
            let flat = (0..k * k).map(|ij| dense_to_sparse(&t[ij / k][ij % k])).collect();
            tables.insert(Combine::Op(*op), flat);
        }
        let mut c = Coefficients {
            kind: a.kind(),
            names: a.basis().to_vec(),
            weights: None,
            tables,
            pointed: None,
            pointed_index: BTreeMap::new(),
        };
        c.add_star();
        c
    }

    /// The free algebra of the given kind on `dim_v` generators, with every
    /// basis element of weight at most `max_weight`.
    pub fn free(kind: Kind, dim_v: usize, max_weight: usize) -> Result<Coefficients> {
        let gens = Sym::generators(dim_v);
        let mut c = match kind {
            Kind::Dialgebra => {
                let basis: Vec<PointedWord> = (1..=max_weight).flat_map(|n| PointedWord::all(&gens, n)).collect();
                let alg = FreeDialgebra { gens: gens.clone(), maxdeg: Some(max_weight) };
                let mut c = Self::from_algebra(kind, &alg, &basis, max_weight);
                c.pointed_index = basis.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
                c.pointed = Some(basis);
                c
            }
            Kind::Dendriform => {
                let basis: Vec<DendTerm> = (1..=max_weight).flat_map(|n| DendTerm::all(&gens, n)).collect();
                let alg = FreeDendriform { gens: gens.clone(), maxdeg: Some(max_weight) };
                Self::from_algebra(kind, &alg, &basis, max_weight)
            }
            Kind::Zinbiel => {
                let basis: Vec<Word> = (1..=max_weight).flat_map(|n| Word::all(&gens, n)).collect();
                let alg = FreeZinbiel { gens: gens.clone(), maxdeg: Some(max_weight) };
                Self::from_algebra(kind, &alg, &basis, max_weight)
            }
            Kind::Leibniz => {
                let basis: Vec<Word> = (1..=max_weight).flat_map(|n| Word::all(&gens, n)).collect();
                let alg = FreeLeibniz { gens: gens.clone(), maxdeg: Some(max_weight) };
                Self::from_algebra(kind, &alg, &basis, max_weight)
            }
            Kind::Associative => {
                return Err(Error::UnsupportedTheoryForSource {
                    theory: "free".into(),
                    found: "associative".into(),
                })
            }
        };
        c.add_star();
        Ok(c)
    }

    fn from_algebra<A: Algebra>(kind: Kind, alg: &A, basis: &[A::Basis], max_weight: usize) -> Coefficients {
        let index: BTreeMap<&A::Basis, usize> = basis.iter().enumerate().map(|(i, b)| (b, i)).collect();
        let weights: Vec<usize> = basis.iter().map(|b| alg.weight(b)).collect();
        let k = basis.len();
        let mut tables = BTreeMap::new();
        for &op in kind.ops() {
            let mut flat = vec![Vec::new(); k * k];
            for i in 0..k {
                for j in 0..k {
                    if weights[i] + weights[j] <= max_weight {
                        flat[i * k + j] =
                            alg.mul_basis(op, &basis[i], &basis[j]).iter().map(|(b, x)| (index[b], x.clone())).collect();
                    }
                }
            }
            tables.insert(Combine::Op(op), flat);
        }
        Coefficients {
            kind,
            names: basis.iter().map(|b| b.to_string()).collect(),
            weights: Some(weights),
            tables,
            pointed: None,
            pointed_index: BTreeMap::new(),
        }
    }

    fn add_star(&mut self) {
        let k = self.dim();
        let star: Option<Vec<Sparse>> = match self.kind {
            Kind::Dendriform => {
                let p = &self.tables[&Combine::Op(Op::Prec)];
                let s = &self.tables[&Combine::Op(Op::Succ)];
                Some((0..k * k).map(|ij| add_sparse(&p[ij], &s[ij])).collect())
            }
            Kind::Zinbiel => {
                let d = &self.tables[&Combine::Op(Op::Dot)];
                Some((0..k * k).map(|ij| add_sparse(&d[ij], &d[(ij % k) * k + ij / k])).collect())
            }
            _ => None,
        };
        if let Some(s) = star {
            self.tables.insert(Combine::Star, s);
        }
    }

    /// The same basis with the structure turned into another kind:
    /// dialgebra to Leibniz (bracket `x⊣y − y⊢x`), Zinbiel to dendriform,
    /// associative to dialgebra.
    pub fn convert(&self, to: Kind) -> Result<Coefficients> {
        if to == self.kind {
            return Ok(self.clone());
        }
        let k = self.dim();
        let mut out = Coefficients {
            kind: to,
            names: self.names.clone(),
            weights: self.weights.clone(),
            tables: BTreeMap::new(),
            pointed: self.pointed.clone(),
            pointed_index: self.pointed_index.clone(),
        };
        let t = |op| &self.tables[&Combine::Op(op)];
        let transpose = |v: &Vec<Sparse>| -> Vec<Sparse> { (0..k * k).map(|ij| v[(ij % k) * k + ij / k].clone()).collect() };
        match (self.kind, to) {
            (Kind::Associative, Kind::Dialgebra) => {
                out.tables.insert(Combine::Op(Op::Left), t(Op::Mult).clone());
                out.tables.insert(Combine::Op(Op::Right), t(Op::Mult).clone());
            }
            (Kind::Dialgebra, Kind::Leibniz) | (Kind::Associative, Kind::Leibniz) => {
                let (l, r) = if self.kind == Kind::Associative { (Op::Mult, Op::Mult) } else { (Op::Left, Op::Right) };
                let rt = transpose(t(r));
                let neg: Vec<Sparse> = rt.iter().map(|v| v.iter().map(|(i, x)| (*i, -x)).collect()).collect();
                let b = (0..k * k).map(|ij| add_sparse(&t(l)[ij], &neg[ij])).collect();
                out.tables.insert(Combine::Op(Op::Bracket), b);
            }
            (Kind::Zinbiel, Kind::Dendriform) => {
                out.tables.insert(Combine::Op(Op::Prec), t(Op::Dot).clone());
                out.tables.insert(Combine::Op(Op::Succ), transpose(t(Op::Dot)));
                out.add_star();
            }
            (from, to) => {
                return Err(Error::UnsupportedTheoryForSource { theory: to.to_string(), found: from.to_string() })
            }
        }
        Ok(out)
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn weights(&self) -> Option<&[usize]> {
        self.weights.as_deref()
    }

    /// Basis of the free dialgebra source, if this is one.
    pub fn pointed_words(&self) -> Option<&[PointedWord]> {
        self.pointed.as_deref()
    }

    /// Basis position of a pointed word of the free dialgebra source.
    pub fn pointed_position(&self, w: &PointedWord) -> Option<usize> {
        self.pointed_index.get(w).copied()
    }

    pub fn product(&self, c: Combine, a: usize, b: usize) -> &Sparse {
        &self.tables[&c][a * self.dim() + b]
    }

    /// Same kind, basis names and multiplication tables.
    pub fn same_structure(&self, other: &Coefficients) -> bool {
        let norm = |t: &Vec<Sparse>| -> Vec<Sparse> {
            t.iter()
                .map(|v| {
                    let mut v: Sparse = v.iter().filter(|(_, x)| !x.is_zero()).cloned().collect();
                    v.sort_by_key(|e| e.0);
                    v
                })
                .collect()
        };
        self.kind == other.kind
            && self.names == other.names
            && self.tables.len() == other.tables.len()
            && self.tables.iter().all(|(c, t)| other.tables.get(c).is_some_and(|u| norm(t) == norm(u)))
    }

    pub fn supports(&self, c: Combine) -> bool {
        self.tables.contains_key(&c)
    }
}

/// Sanity hook: the Leibnizification and Zinbiel-to-dendriform conversions
/// agree with the finite-algebra versions.
pub fn convert_finite(a: &FiniteAlgebra, to: Kind) -> Result<FiniteAlgebra> {
    match (a.kind(), to) {
        (k, t) if k == t => Ok(a.clone()),
        (Kind::Dialgebra, Kind::Leibniz) => leibnizification(a),
        (Kind::Associative, Kind::Leibniz) => leibnizification(&a.as_dialgebra()?),
        (Kind::Associative, Kind::Dialgebra) => a.as_dialgebra(),
        (Kind::Zinbiel, Kind::Dendriform) => zinbiel_as_dendriform(a),
        (from, to) => Err(Error::UnsupportedTheoryForSource { theory: to.to_string(), found: from.to_string() }),
    }
}
