//! The example catalog as named fixtures.
//!
//! Names compose: `assoc-<A>`, `dimonoid-C<n>`, `gset-C<n>`, `diff-upper2`,
//! `matrix<n>-<D>`, `opposite-<D>`, `tensor-square-<A>`, `vectors<n>-<A>`,
//! `leibniz-<D>`, `free-{dias,dend,zinb,leib}-<dimV>-<maxdeg>`,
//! `zinb-as-dend-<dimV>-<maxdeg>`, `abelian-<kind>-<k>` and `field`, where
//! `<A>` is one of `K`, `C<n>`, `upper2`, `M2`, `dual`. A bare `<A>` is the
//! same as `assoc-<A>`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::freealg::{
    Algebra, DendTerm, FreeDendriform, FreeDialgebra, FreeLeibniz, FreeZinbiel, Op, PointedWord, Sym, Word,
};
use crate::rational::{q, Q};

use super::derived::{leibnizification, opposite, zinbiel_as_dendriform};
use super::{FiniteAlgebra, Kind};

pub const DEFAULT_MAX_DIM: usize = 64;

/// Fixtures used throughout the test suites, grouped by kind.
pub const DIALGEBRA_CATALOG: &[&str] = &[
    "field",
    "assoc-C2",
    "assoc-upper2",
    "assoc-dual",
    "dimonoid-C2",
    "dimonoid-C3",
    "gset-C2",
    "diff-upper2",
    "matrix2-K",
    "opposite-gset-C2",
    "opposite-diff-upper2",
    "tensor-square-C2",
    "vectors2-K",
    "vectors2-C2",
    "free-dias-1-3",
    "free-dias-2-2",
];
pub const DENDRIFORM_CATALOG: &[&str] = &["free-dend-1-3", "free-dend-2-2", "zinb-as-dend-1-3", "zinb-as-dend-2-2"];
pub const ZINBIEL_CATALOG: &[&str] = &["free-zinb-1-3", "free-zinb-2-2"];
pub const LEIBNIZ_CATALOG: &[&str] = &["free-leib-1-3", "free-leib-2-3", "leibniz-tensor-square-C2", "abelian-leibniz-1"];

fn unit(k: usize, i: usize) -> Vec<Q> {
    let mut v = vec![Q::zero(); k];
    v[i] = Q::one();
    v
}

fn parse_usize(s: &str, whole: &str) -> Result<usize> {
    s.parse().map_err(|_| Error::UnknownFixture(whole.to_string()))
}

/// Builds a fixture by name with the default dimension cap.
pub fn fixture(name: &str) -> Result<FiniteAlgebra> {
    fixture_capped(name, DEFAULT_MAX_DIM)
}

pub fn fixture_capped(name: &str, cap: usize) -> Result<FiniteAlgebra> {
    let a = build(name, cap)?;
    a.check_dim(cap)?;
    Ok(a)
}

fn build(name: &str, cap: usize) -> Result<FiniteAlgebra> {
    let unknown = || Error::UnknownFixture(name.to_string());
    if name == "field" {
        return assoc_base("K")?.as_dialgebra();
    }
    if let Some(rest) = name.strip_prefix("assoc-") {
        return assoc_base(rest)?.as_dialgebra();
    }
    if let Some(rest) = name.strip_prefix("dimonoid-C") {
        return dimonoid_algebra(parse_usize(rest, name)?);
    }
    if let Some(rest) = name.strip_prefix("gset-C") {
        return gset_algebra(parse_usize(rest, name)?);
    }
    if name == "diff-upper2" {
        let a = assoc_base("upper2")?;
        // d = ad(e12) on the basis e11, e12, e22
        let d = vec![vec![q(0), q(-1), q(0)], vec![q(0), q(0), q(0)], vec![q(0), q(1), q(0)]];
        return diff_algebra(&a, &d);
    }
    if let Some(rest) = name.strip_prefix("opposite-") {
        return opposite(&build(rest, cap)?);
    }
    if let Some(rest) = name.strip_prefix("leibniz-") {
        return leibnizification(&build(rest, cap)?);
    }
    if let Some(rest) = name.strip_prefix("tensor-square-") {
        return tensor_square(&assoc_base(rest)?);
    }
    if let Some(rest) = name.strip_prefix("matrix") {
        let (n, base) = rest.split_once('-').ok_or_else(unknown)?;
        let n = parse_usize(n, name)?;
        let base = build(base, cap)?;
        guard(n * n * base.dim(), cap)?;
        return matrix_dialgebra(n, &base);
    }
    if let Some(rest) = name.strip_prefix("vectors") {
        let (n, base) = rest.split_once('-').ok_or_else(unknown)?;
        return vectors_dialgebra(parse_usize(n, name)?, &assoc_base(base)?);
    }
    if let Some(rest) = name.strip_prefix("zinb-as-dend-") {
        let (d, m) = two_numbers(rest, name)?;
        return zinbiel_as_dendriform(&truncated_free(Kind::Zinbiel, d, m, cap)?);
    }
    if let Some(rest) = name.strip_prefix("abelian-") {
        let (kind, k) = rest.rsplit_once('-').ok_or_else(unknown)?;
        let kind = Kind::from_name(kind).map_err(|_| unknown())?;
        let k = parse_usize(k, name)?;
        guard(k, cap)?;
        let basis = (1..=k).map(|i| format!("e{i}")).collect();
        return FiniteAlgebra::from_fn(kind, basis, |_, _, _| vec![Q::zero(); k]);
    }
    for (prefix, kind) in [
        ("free-dias-", Kind::Dialgebra),
        ("free-dend-", Kind::Dendriform),
        ("free-zinb-", Kind::Zinbiel),
        ("free-leib-", Kind::Leibniz),
    ] {
        if let Some(rest) = name.strip_prefix(prefix) {
            let (d, m) = two_numbers(rest, name)?;
            return truncated_free(kind, d, m, cap);
        }
    }
    assoc_base(name).and_then(|a| a.as_dialgebra()).map_err(|_| unknown())
}

fn two_numbers(s: &str, whole: &str) -> Result<(usize, usize)> {
    let (a, b) = s.split_once('-').ok_or_else(|| Error::UnknownFixture(whole.to_string()))?;
    Ok((parse_usize(a, whole)?, parse_usize(b, whole)?))
}

fn guard(dim: usize, cap: usize) -> Result<()> {
    if dim > cap {
        Err(Error::TooLarge { dim, cap })
    } else {
        Ok(())
    }
}

/// Small associative algebras: `K`, `C<n>` (group algebra), `upper2`
/// (upper-triangular 2×2), `M2`, `dual` (`K[e]/e²`).
pub fn assoc_base(name: &str) -> Result<FiniteAlgebra> {
    let unknown = || Error::UnknownFixture(name.to_string());
    match name {
        "K" => FiniteAlgebra::from_fn(Kind::Associative, vec!["1".into()], |_, _, _| vec![Q::one()]),
        "dual" => FiniteAlgebra::from_fn(Kind::Associative, vec!["1".into(), "e".into()], |_, i, j| match i + j {
            0 => unit(2, 0),
            1 => unit(2, 1),
            _ => vec![Q::zero(); 2],
        }),
        "upper2" | "M2" => {
            let entries: Vec<(usize, usize)> =
                if name == "M2" { vec![(1, 1), (1, 2), (2, 1), (2, 2)] } else { vec![(1, 1), (1, 2), (2, 2)] };
            let k = entries.len();
            let basis = entries.iter().map(|(r, c)| format!("e{r}{c}")).collect();
            FiniteAlgebra::from_fn(Kind::Associative, basis, |_, i, j| {
                let ((a, b), (c, d)) = (entries[i], entries[j]);
                if b == c {
                    unit(k, entries.iter().position(|&e| e == (a, d)).unwrap())
                } else {
                    vec![Q::zero(); k]
                }
            })
        }
        _ => {
            let n = name.strip_prefix('C').ok_or_else(unknown)?.parse::<usize>().map_err(|_| unknown())?;
            if n == 0 {
                return Err(unknown());
            }
            FiniteAlgebra::from_fn(Kind::Associative, cyclic_names(n), |_, i, j| unit(n, (i + j) % n))
        }
    }
}

fn cyclic_names(n: usize) -> Vec<String> {
    (0..n)
        .map(|a| match a {
            0 => "1".to_string(),
            1 => "g".to_string(),
            _ => format!("g{a}"),
        })
        .collect()
}

/// `(m,n)⊣(m′,n′) = (m, nm′n′)`, `(m,n)⊢(m′,n′) = (mnm′, n′)` on `C_n × C_n`.
pub fn dimonoid_algebra(n: usize) -> Result<FiniteAlgebra> {
    let names = cyclic_names(n);
    let k = n * n;
    let basis = (0..k).map(|i| format!("({},{})", names[i / n], names[i % n])).collect();
    FiniteAlgebra::from_fn(Kind::Dialgebra, basis, |op, i, j| {
        let (m, a) = (i / n, i % n);
        let (m2, a2) = (j / n, j % n);
        match op {
            Op::Left => unit(k, m * n + (a + m2 + a2) % n),
            _ => unit(k, ((m + a + m2) % n) * n + a2),
        }
    })
}

/// `(x,g)⊣(y,h) = (x, gh)`, `(x,g)⊢(y,h) = (g·y, gh)` for `C_n` acting on
/// itself by translation.
pub fn gset_algebra(n: usize) -> Result<FiniteAlgebra> {
    let names = cyclic_names(n);
    let k = n * n;
    let basis = (0..k).map(|i| format!("(x{},{})", i / n, names[i % n])).collect();
    FiniteAlgebra::from_fn(Kind::Dialgebra, basis, |op, i, j| {
        let (x, g) = (i / n, i % n);
        let (y, h) = (j / n, j % n);
        match op {
            Op::Left => unit(k, x * n + (g + h) % n),
            _ => unit(k, ((g + y) % n) * n + (g + h) % n),
        }
    })
}

/// `x⊣y = x·dy`, `x⊢y = dx·y` for a square-zero derivation `d`, given by the
/// images `d[i]` of the basis vectors. Both properties are checked first.
pub fn diff_algebra(a: &FiniteAlgebra, d: &[Vec<Q>]) -> Result<FiniteAlgebra> {
    if a.kind() != Kind::Associative {
        return Err(Error::IncompatibleAlgebras("the differential algebra needs an associative input".into()));
    }
    let k = a.dim();
    let apply = |v: &[Q]| -> Vec<Q> {
        let mut out = vec![Q::zero(); k];
        for (i, x) in v.iter().enumerate() {
            for (m, y) in d[i].iter().enumerate() {
                out[m] += x * y;
            }
        }
        out
    };
    for i in 0..k {
        if apply(&d[i]).iter().any(|x| !x.is_zero()) {
            return Err(Error::InvalidArgument("d is not square-zero".into()));
        }
        for j in 0..k {
            let (ei, ej) = (a.unit_vec(i), a.unit_vec(j));
            let lhs = apply(&a.mul_vec(Op::Mult, &ei, &ej));
            let r1 = a.mul_vec(Op::Mult, &d[i], &ej);
            let r2 = a.mul_vec(Op::Mult, &ei, &d[j]);
            if lhs.iter().zip(r1.iter().zip(&r2)).any(|(l, (x, y))| l != &(x + y)) {
                return Err(Error::InvalidArgument("d is not a derivation".into()));
            }
        }
    }
    FiniteAlgebra::from_fn(Kind::Dialgebra, a.basis().to_vec(), |op, i, j| match op {
        Op::Left => a.mul_vec(Op::Mult, &a.unit_vec(i), &d[j]),
        _ => a.mul_vec(Op::Mult, &d[i], &a.unit_vec(j)),
    })
}

/// `M_n(D)` with `(α⊣β)_{ij} = Σ_k α_{ik}⊣β_{kj}`.
pub fn matrix_dialgebra(n: usize, d: &FiniteAlgebra) -> Result<FiniteAlgebra> {
    let d = d.as_dialgebra()?;
    let m = d.dim();
    let k = n * n * m;
    let basis = (0..k).map(|i| format!("E{}{}:{}", i / (n * m) + 1, (i / m) % n + 1, d.basis()[i % m])).collect();
    FiniteAlgebra::from_fn(Kind::Dialgebra, basis, |op, i, j| {
        let (r, c, a) = (i / (n * m), (i / m) % n, i % m);
        let (r2, c2, b) = (j / (n * m), (j / m) % n, j % m);
        let mut out = vec![Q::zero(); k];
        if c == r2 {
            for (t, x) in d.table(op).unwrap()[a][b].iter().enumerate() {
                out[(r * n + c2) * m + t] = x.clone();
            }
        }
        out
    })
}

/// `a⊗b ⊣ a′⊗b′ = a⊗ba′b′`, `a⊗b ⊢ a′⊗b′ = aba′⊗b′`.
pub fn tensor_square(a: &FiniteAlgebra) -> Result<FiniteAlgebra> {
    if a.kind() != Kind::Associative {
        return Err(Error::IncompatibleAlgebras("the tensor square needs an associative input".into()));
    }
    let m = a.dim();
    let k = m * m;
    let basis = (0..k).map(|i| format!("{}⊗{}", a.basis()[i / m], a.basis()[i % m])).collect();
    let mul = |x: &[Q], y: &[Q]| a.mul_vec(Op::Mult, x, y);
    FiniteAlgebra::from_fn(Kind::Dialgebra, basis, |op, i, j| {
        let (p, s) = (i / m, i % m);
        let (p2, s2) = (j / m, j % m);
        let (first, second) = match op {
            Op::Left => (a.unit_vec(p), mul(&mul(&a.unit_vec(s), &a.unit_vec(p2)), &a.unit_vec(s2))),
            _ => (mul(&mul(&a.unit_vec(p), &a.unit_vec(s)), &a.unit_vec(p2)), a.unit_vec(s2)),
        };
        let mut out = vec![Q::zero(); k];
        for (u, x) in first.iter().enumerate() {
            for (v, y) in second.iter().enumerate() {
                out[u * m + v] += x * y;
            }
        }
        out
    })
}

/// `A^n` with `(x⊣y)_i = x_i Σ_j y_j` and `(x⊢y)_i = (Σ_j x_j) y_i`.
pub fn vectors_dialgebra(n: usize, a: &FiniteAlgebra) -> Result<FiniteAlgebra> {
    if a.kind() != Kind::Associative {
        return Err(Error::IncompatibleAlgebras("A^n needs an associative input".into()));
    }
    let m = a.dim();
    let k = n * m;
    let basis = (0..k).map(|i| format!("v{}:{}", i / m + 1, a.basis()[i % m])).collect();
    FiniteAlgebra::from_fn(Kind::Dialgebra, basis, |op, i, j| {
        let (s, x) = (i / m, i % m);
        let (t, y) = (j / m, j % m);
        let slot = if op == Op::Left { s } else { t };
        let mut out = vec![Q::zero(); k];
        for (u, c) in a.table(Op::Mult).unwrap()[x][y].iter().enumerate() {
            out[slot * m + u] = c.clone();
        }
        out
    })
}

fn from_free<A: Algebra>(kind: Kind, alg: &A, basis: Vec<A::Basis>) -> Result<FiniteAlgebra> {
    let index: BTreeMap<A::Basis, usize> = basis.iter().cloned().enumerate().map(|(i, b)| (b, i)).collect();
    let k = basis.len();
    let names = basis.iter().map(|b| b.to_string()).collect();
    FiniteAlgebra::from_fn(kind, names, |op, i, j| {
        let mut out = vec![Q::zero(); k];
        for (b, c) in &alg.mul_basis(op, &basis[i], &basis[j]) {
            out[index[b]] = c.clone();
        }
        out
    })
}

/// The free algebra of the given kind on `dim_v` generators, modulo all
/// terms of degree above `maxdeg`.
pub fn truncated_free(kind: Kind, dim_v: usize, maxdeg: usize, cap: usize) -> Result<FiniteAlgebra> {
    let gens = Sym::generators(dim_v);
    let count: usize = (1..=maxdeg)
        .map(|n| {
            let words = dim_v.pow(n as u32);
            match kind {
                Kind::Dialgebra => words * n,
                Kind::Dendriform => words * crate::trees::catalan(n) as usize,
                _ => words,
            }
        })
        .sum();
    guard(count, cap)?;
    let maxdeg_opt = Some(maxdeg);
    match kind {
        Kind::Dialgebra => {
            let basis = (1..=maxdeg).flat_map(|n| PointedWord::all(&gens, n)).collect();
            from_free(kind, &FreeDialgebra { gens: gens.clone(), maxdeg: maxdeg_opt }, basis)
        }
        Kind::Dendriform => {
            let basis = (1..=maxdeg).flat_map(|n| DendTerm::all(&gens, n)).collect();
            from_free(kind, &FreeDendriform { gens: gens.clone(), maxdeg: maxdeg_opt }, basis)
        }
        Kind::Zinbiel => {
            let basis = (1..=maxdeg).flat_map(|n| Word::all(&gens, n)).collect();
            from_free(kind, &FreeZinbiel { gens: gens.clone(), maxdeg: maxdeg_opt }, basis)
        }
        Kind::Leibniz => {
            let basis = (1..=maxdeg).flat_map(|n| Word::all(&gens, n)).collect();
            from_free(kind, &FreeLeibniz { gens: gens.clone(), maxdeg: maxdeg_opt }, basis)
        }
        Kind::Associative => Err(Error::UnknownFixture("free associative algebras are not fixtures".into())),
    }
}
