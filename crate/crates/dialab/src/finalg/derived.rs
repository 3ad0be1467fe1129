use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::freealg::Op;
use crate::linalg::{is_zero_vec, rank_dense, reduce_by_rref, rref, solve_affine};
use crate::rational::Q;

use super::{FiniteAlgebra, Kind};

/// The bar-units of a dialgebra: `particular + span(directions)`, or empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Halo {
    pub particular: Option<Vec<Q>>,
    pub directions: Vec<Vec<Q>>,
}

impl Halo {
    pub fn is_empty(&self) -> bool {
        self.particular.is_none()
    }

    /// Whether `e` is a bar-unit.
    pub fn contains(&self, e: &[Q]) -> bool {
        let Some(p) = &self.particular else { return false };
        let diff: Vec<Q> = e.iter().zip(p).map(|(a, b)| a - b).collect();
        if is_zero_vec(&diff) {
            return true;
        }
        let mut rows = self.directions.clone();
        let r = rank_dense(&rows);
        rows.push(diff);
        rank_dense(&rows) == r
    }

    pub fn dimension(&self) -> Option<usize> {
        self.particular.as_ref().map(|_| self.directions.len())
    }
}

fn require(d: &FiniteAlgebra, kind: Kind) -> Result<()> {
    if d.kind() != kind {
        return Err(Error::IncompatibleAlgebras(format!("expected a {kind}, got a {}", d.kind())));
    }
    Ok(())
}

/// Solves `x⊣e = x = e⊢x` for all basis `x`.
pub fn bar_units(d: &FiniteAlgebra) -> Result<Halo> {
    require(d, Kind::Dialgebra)?;
    let k = d.dim();
    let left = d.table(Op::Left).unwrap();
    let right = d.table(Op::Right).unwrap();
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for x in 0..k {
        for m in 0..k {
            let target = if x == m { Q::one() } else { Q::zero() };
            rows.push((0..k).map(|j| left[x][j][m].clone()).collect());
            rhs.push(target.clone());
            rows.push((0..k).map(|j| right[j][x][m].clone()).collect());
            rhs.push(target);
        }
    }
    Ok(match solve_affine(&rows, &rhs, k) {
        Some((p, null)) => Halo { particular: Some(p), directions: null },
        None => Halo { particular: None, directions: vec![] },
    })
}

/// `D_As = D / ⟨x⊣y − x⊢y⟩` with its quotient map.
#[derive(Clone, Debug)]
pub struct Associativization {
    pub algebra: FiniteAlgebra,
    /// RREF basis of the ideal.
    pub ideal: Vec<Vec<Q>>,
    pivots: Vec<usize>,
    /// Coordinates of `D` kept as the basis of the quotient.
    pub complement: Vec<usize>,
}

impl Associativization {
    /// Coordinates of the class of `v` in the quotient basis.
    pub fn project(&self, v: &[Q]) -> Vec<Q> {
        let r = reduce_by_rref(v, &self.ideal, &self.pivots);
        self.complement.iter().map(|&c| r[c].clone()).collect()
    }
}

/// Saturates the ideal generated by `x⊣y − x⊢y` and forms the quotient.
/// Works on unchecked input too.
pub fn associativization(d: &FiniteAlgebra) -> Result<Associativization> {
    require(d, Kind::Dialgebra)?;
    let k = d.dim();
    let left = d.table(Op::Left).unwrap();
    let right = d.table(Op::Right).unwrap();
    let mut gens: Vec<Vec<Q>> = Vec::new();
    for i in 0..k {
        for j in 0..k {
            let v: Vec<Q> = left[i][j].iter().zip(&right[i][j]).map(|(a, b)| a - b).collect();
            if !is_zero_vec(&v) {
                gens.push(v);
            }
        }
    }
    let (mut basis, mut pivots) = rref(&gens);
    loop {
        let mut more = basis.clone();
        for v in &basis {
            for b in 0..k {
                let e = d.unit_vec(b);
                for op in [Op::Left, Op::Right] {
                    more.push(d.mul_vec(op, v, &e));
                    more.push(d.mul_vec(op, &e, v));
                }
            }
        }
        let (nb, np) = rref(&more);
        if np.len() == pivots.len() {
            break;
        }
        basis = nb;
        pivots = np;
    }
    let complement: Vec<usize> = (0..k).filter(|c| !pivots.contains(c)).collect();
    let names = complement.iter().map(|&c| d.basis()[c].clone()).collect();
    let project = |v: &[Q]| -> Vec<Q> {
        let r = reduce_by_rref(v, &basis, &pivots);
        complement.iter().map(|&c| r[c].clone()).collect()
    };
    let algebra = FiniteAlgebra::from_fn(Kind::Associative, names, |_, a, b| {
        project(&left[complement[a]][complement[b]])
    })?;
    Ok(Associativization { algebra, ideal: basis, pivots, complement })
}

/// `[x,y] = x⊣y − y⊢x`.
pub fn leibnizification(d: &FiniteAlgebra) -> Result<FiniteAlgebra> {
    let d = d.as_dialgebra()?;
    let left = d.table(Op::Left).unwrap();
    let right = d.table(Op::Right).unwrap();
    FiniteAlgebra::from_fn(Kind::Leibniz, d.basis().to_vec(), |_, i, j| {
        left[i][j].iter().zip(&right[j][i]).map(|(a, b)| a - b).collect()
    })
}

/// `x⊣′y = y⊢x`, `x⊢′y = y⊣x`.
pub fn opposite(d: &FiniteAlgebra) -> Result<FiniteAlgebra> {
    require(d, Kind::Dialgebra)?;
    let left = d.table(Op::Left).unwrap();
    let right = d.table(Op::Right).unwrap();
    FiniteAlgebra::from_fn(Kind::Dialgebra, d.basis().to_vec(), |op, i, j| match op {
        Op::Left => right[j][i].clone(),
        _ => left[j][i].clone(),
    })
}

/// `x≺y = x·y`, `x≻y = y·x`.
pub fn zinbiel_as_dendriform(r: &FiniteAlgebra) -> Result<FiniteAlgebra> {
    require(r, Kind::Zinbiel)?;
    let dot = r.table(Op::Dot).unwrap();
    FiniteAlgebra::from_fn(Kind::Dendriform, r.basis().to_vec(), |op, i, j| match op {
        Op::Prec => dot[i][j].clone(),
        _ => dot[j][i].clone(),
    })
}
