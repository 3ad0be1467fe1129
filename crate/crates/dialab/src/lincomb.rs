//! Finite formal linear combinations with exact rational coefficients.

use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::rational::{fmt_q, Q};

/// A linear combination of basis terms. Zero coefficients are never stored,
/// so structural equality is equality of vectors.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinComb<B: Ord> {
    terms: BTreeMap<B, Q>,
}

impl<B: Ord> Default for LinComb<B> {
    fn default() -> Self {
        LinComb { terms: BTreeMap::new() }
    }
}

impl<B: Ord + Clone> LinComb<B> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(b: B) -> Self {
        Self::term(Q::one(), b)
    }

    pub fn term(c: Q, b: B) -> Self {
        let mut out = Self::zero();
        out.add_term(c, b);
        out
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Q, B)>) -> Self {
        let mut out = Self::zero();
        for (c, b) in it {
            out.add_term(c, b);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, b: &B) -> Q {
        self.terms.get(b).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add_term(&mut self, c: Q, b: B) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(b) {
            btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, c: &Q, other: &Self) {
        if c.is_zero() {
            return;
        }
        for (b, x) in &other.terms {
            self.add_term(c * x, b.clone());
        }
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LinComb {
            terms: self.terms.iter().map(|(b, x)| (b.clone(), x * c)).collect(),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&B, &Q)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &B> {
        self.terms.keys()
    }

    /// Applies a linear map given on basis terms.
    pub fn map_linear<C: Ord + Clone>(&self, mut f: impl FnMut(&B) -> LinComb<C>) -> LinComb<C> {
        let mut out = LinComb::zero();
        for (b, x) in &self.terms {
            out.add_scaled(x, &f(b));
        }
        out
    }

    /// Relabels basis terms; colliding images are summed.
    pub fn map_basis<C: Ord + Clone>(&self, mut f: impl FnMut(&B) -> C) -> LinComb<C> {
        LinComb::from_terms(self.terms.iter().map(|(b, x)| (x.clone(), f(b))))
    }

    /// Bilinear extension of a product given on basis pairs.
    pub fn bilinear<C: Ord + Clone, D: Ord + Clone>(
        &self,
        other: &LinComb<C>,
        mut f: impl FnMut(&B, &C) -> LinComb<D>,
    ) -> LinComb<D> {
        let mut out = LinComb::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_scaled(&(x * y), &f(a, b));
            }
        }
        out
    }

    /// Fallible bilinear extension.
    pub fn try_bilinear<C: Ord + Clone, D: Ord + Clone, E>(
        &self,
        other: &LinComb<C>,
        mut f: impl FnMut(&B, &C) -> Result<LinComb<D>, E>,
    ) -> Result<LinComb<D>, E> {
        let mut out = LinComb::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_scaled(&(x * y), &f(a, b)?);
            }
        }
        Ok(out)
    }
}

impl<B: Ord + Clone> FromIterator<(Q, B)> for LinComb<B> {
    fn from_iter<I: IntoIterator<Item = (Q, B)>>(iter: I) -> Self {
        Self::from_terms(iter)
    }
}

impl<B: Ord + Clone> Add for LinComb<B> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for (b, x) in rhs.terms {
            self.add_term(x, b);
        }
        self
    }
}

impl<B: Ord + Clone> Add for &LinComb<B> {
    type Output = LinComb<B>;
    fn add(self, rhs: Self) -> LinComb<B> {
        self.clone() + rhs.clone()
    }
}

impl<B: Ord + Clone> Sub for LinComb<B> {
    type Output = Self;
    fn sub(mut self, rhs: Self) -> Self {
        for (b, x) in rhs.terms {
            self.add_term(-x, b);
        }
        self
    }
}

impl<B: Ord + Clone> Sub for &LinComb<B> {
    type Output = LinComb<B>;
    fn sub(self, rhs: Self) -> LinComb<B> {
        self.clone() - rhs.clone()
    }
}

impl<B: Ord + Clone> Neg for LinComb<B> {
    type Output = Self;
    fn neg(self) -> Self {
        LinComb {
            terms: self.terms.into_iter().map(|(b, x)| (b, -x)).collect(),
        }
    }
}

impl<B: Ord + Clone> Mul<&Q> for &LinComb<B> {
    type Output = LinComb<B>;
    fn mul(self, rhs: &Q) -> LinComb<B> {
        self.scale(rhs)
    }
}

impl<'a, B: Ord> IntoIterator for &'a LinComb<B> {
    type Item = (&'a B, &'a Q);
    type IntoIter = btree_map::Iter<'a, B, Q>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<B: Ord + fmt::Display> fmt::Display for LinComb<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (b, x)) in self.terms.iter().enumerate() {
            let neg = x < &Q::zero();
            let mag = if neg { -x.clone() } else { x.clone() };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if mag.is_one() {
                write!(f, "{b}")?;
            } else {
                write!(f, "{}*{b}", fmt_q(&mag))?;
            }
        }
        Ok(())
    }
}

impl<B: Ord + fmt::Display> fmt::Debug for LinComb<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
