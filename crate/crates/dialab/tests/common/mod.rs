//! Oracles shared by the integration tests and the acceptance runner.
#![allow(dead_code)]

use dialab::freealg::{dend_mul, DendOp, DendTerm, LabelledMonomial, PointedWord, Side, Sym};
use dialab::rational::q;
use dialab::{LinComb, Q};
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn syms(names: &[&str]) -> Vec<Sym> {
    names.iter().map(|s| Sym::new(s)).collect()
}

/// A monomial as a labelled binary tree over leaf indices, for rewriting.
#[derive(Clone, Debug, PartialEq)]
pub enum Mono {
    Leaf(usize),
    Node(bool, Box<Mono>, Box<Mono>),
}

pub fn node(left_pointer: bool, a: Mono, b: Mono) -> Mono {
    Mono::Node(left_pointer, Box::new(a), Box::new(b))
}

/// One rewriting step with the dimonoid axioms oriented towards right combs
/// whose labels read `⊢ … ⊢ ⊣ … ⊣`.
pub fn rewrite_once(m: &Mono) -> Option<Mono> {
    if let Mono::Node(s, a, b) = m {
        if let Mono::Node(s1, x, y) = a.as_ref() {
            let (x, y, z) = ((**x).clone(), (**y).clone(), (**b).clone());
            return Some(match (*s1, *s) {
                // (x⊣y)⊣z = x⊣(y⊣z)
                (true, true) => node(true, x, node(true, y, z)),
                // (x⊢y)⊣z = x⊢(y⊣z)
                (false, true) => node(false, x, node(true, y, z)),
                // (x⊣y)⊢z = x⊢(y⊢z)
                (true, false) => node(false, x, node(false, y, z)),
                // (x⊢y)⊢z = x⊢(y⊢z)
                (false, false) => node(false, x, node(false, y, z)),
            });
        }
        if *s {
            // x⊣(y⊢z) = x⊣(y⊣z)
            if let Mono::Node(false, y, z) = b.as_ref() {
                return Some(node(true, (**a).clone(), node(true, (**y).clone(), (**z).clone())));
            }
        }
        if let Some(b2) = rewrite_once(b) {
            return Some(Mono::Node(*s, a.clone(), Box::new(b2)));
        }
    }
    None
}

/// Pointer position of the normal form reached by rewriting.
pub fn rewrite_pointer(m: &Mono) -> usize {
    let mut cur = m.clone();
    while let Some(next) = rewrite_once(&cur) {
        cur = next;
    }
    let mut pointer = 0;
    while let Mono::Node(false, _, b) = cur {
        pointer += 1;
        cur = *b;
    }
    pointer
}

pub fn random_mono(rng: &mut ChaCha8Rng, lo: usize, hi: usize) -> Mono {
    if hi - lo == 1 {
        return Mono::Leaf(lo);
    }
    let cut = rng.gen_range(lo + 1..hi);
    node(rng.gen_bool(0.5), random_mono(rng, lo, cut), random_mono(rng, cut, hi))
}

pub fn to_labelled(m: &Mono, letters: &[Sym]) -> LabelledMonomial {
    match m {
        Mono::Leaf(i) => LabelledMonomial::Leaf(letters[*i].clone()),
        Mono::Node(l, a, b) => LabelledMonomial::node(
            if *l { Side::LeftPointer } else { Side::RightPointer },
            to_labelled(a, letters),
            to_labelled(b, letters),
        ),
    }
}

pub type Tensor = LinComb<(PointedWord, DendTerm)>;

pub fn tensor_bracket(u: &Tensor, v: &Tensor) -> Tensor {
    use dialab::ProductSymbol::{LeftPointer as L, RightPointer as R};
    u.bilinear(v, |(x, a), (y, b)| {
        let mut out = LinComb::zero();
        let mut push = |c: i64, d: PointedWord, e: LinComb<DendTerm>| {
            for (term, k) in &e {
                out.add_term(q(c) * k, (d.clone(), term.clone()));
            }
        };
        let (la, lb) = (LinComb::basis(a.clone()), LinComb::basis(b.clone()));
        push(1, x.mul(y, L), dend_mul(&la, &lb, DendOp::Prec).unwrap());
        push(-1, y.mul(x, R), dend_mul(&lb, &la, DendOp::Succ).unwrap());
        push(-1, y.mul(x, L), dend_mul(&lb, &la, DendOp::Prec).unwrap());
        push(1, x.mul(y, R), dend_mul(&la, &lb, DendOp::Succ).unwrap());
        out
    })
}

pub fn random_tensor(rng: &mut ChaCha8Rng, dias: &[PointedWord], dend: &[DendTerm]) -> Tensor {
    let mut out = LinComb::zero();
    for _ in 0..rng.gen_range(1..=3) {
        let c = q(rng.gen_range(-3..=3));
        let d = dias[rng.gen_range(0..dias.len())].clone();
        let e = dend[rng.gen_range(0..dend.len())].clone();
        out.add_term(c, (d, e));
    }
    out
}

/// Composite via explicit powers, independent of the Horner loop.
pub fn compose_by_powers(outer: &[Q], inner: &[Q], n: usize) -> Vec<Q> {
    let mul = |a: &[Q], b: &[Q]| {
        let mut c = vec![Q::zero(); n + 1];
        for i in 0..=n {
            for j in 0..=n - i {
                c[i + j] += &a[i] * &b[j];
            }
        }
        c
    };
    let mut power = vec![Q::zero(); n + 1];
    power[0] = Q::one();
    let mut out = vec![Q::zero(); n + 1];
    for c in outer.iter().take(n + 1) {
        for (o, p) in out.iter_mut().zip(&power) {
            *o += c * p;
        }
        power = mul(&power, inner);
    }
    out
}

