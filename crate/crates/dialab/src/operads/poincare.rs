//! Truncated power series with exact coefficients and the Poincaré series
//! of the binary non-Σ operads.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{fmt_q, q, sign, Q};
use crate::trees::catalan;

pub const MAX_POINCARE_DEGREE: usize = 20;

/// `Σ_{k=0}^{N} c_k x^k`, computed modulo `x^{N+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<Q>,
}

impl Series {
    pub fn new(mut coeffs: Vec<Q>, degree: usize) -> Series {
        coeffs.resize(degree + 1, Q::zero());
        Series { coeffs }
    }

    pub fn zero(degree: usize) -> Series {
        Series::new(Vec::new(), degree)
    }

    pub fn constant(c: Q, degree: usize) -> Series {
        Series::new(vec![c], degree)
    }

    pub fn x(degree: usize) -> Series {
        Series::new(vec![Q::zero(), Q::one()], degree)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Q {
        self.coeffs.get(k).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add(&self, other: &Series) -> Series {
        let n = self.degree().min(other.degree());
        Series::new((0..=n).map(|k| self.coeff(k) + other.coeff(k)).collect(), n)
    }

    pub fn sub(&self, other: &Series) -> Series {
        self.add(&other.scale(&-Q::one()))
    }

    pub fn scale(&self, c: &Q) -> Series {
        Series { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    pub fn mul(&self, other: &Series) -> Series {
        let n = self.degree().min(other.degree());
        let mut out = vec![Q::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n + 1 - i) {
                out[i + j] += a * b;
            }
        }
        Series { coeffs: out }
    }

    /// Multiplicative inverse; needs a nonzero constant term.
    pub fn inverse(&self) -> Result<Series> {
        let c0 = self.coeff(0);
        if c0.is_zero() {
            return Err(Error::InvalidArgument("series without constant term is not invertible".into()));
        }
        let n = self.degree();
        let mut out = vec![Q::zero(); n + 1];
        out[0] = Q::one() / &c0;
        for k in 1..=n {
            let s = (1..=k).fold(Q::zero(), |acc, j| acc + self.coeff(j) * &out[k - j]);
            out[k] = -s / &c0;
        }
        Ok(Series { coeffs: out })
    }

    /// `self(inner(x))`; needs `inner` without constant term.
    pub fn compose(&self, inner: &Series) -> Result<Series> {
        if !inner.coeff(0).is_zero() {
            return Err(Error::InvalidArgument("inner series has a constant term".into()));
        }
        let n = self.degree().min(inner.degree());
        let mut out = Series::zero(n);
        // Horner from the top coefficient down.
        for k in (0..=n).rev() {
            out = out.mul(&Series::new(inner.coeffs[..=n].to_vec(), n)).add(&Series::constant(self.coeff(k), n));
        }
        Ok(out)
    }

    /// Compositional inverse of a series `a_1 x + …` with `a_1 ≠ 0`.
    pub fn reversion(&self) -> Result<Series> {
        if !self.coeff(0).is_zero() || self.coeff(1).is_zero() {
            return Err(Error::InvalidArgument("reversion needs the form a_1 x + … with a_1 ≠ 0".into()));
        }
        let n = self.degree();
        let mut g = Series::new(vec![Q::zero(), Q::one() / self.coeff(1)], n);
        // Fix one more coefficient per pass: g += (x - f(g)) / a_1.
        for _ in 1..n {
            let err = Series::x(n).sub(&self.compose(&g)?);
            g = g.add(&err.scale(&(Q::one() / self.coeff(1))));
        }
        Ok(g)
    }

    /// Square root of a series with constant term 1.
    pub fn sqrt(&self) -> Result<Series> {
        if !self.coeff(0).is_one() {
            return Err(Error::InvalidArgument("square root needs constant term 1".into()));
        }
        let n = self.degree();
        let mut out = vec![Q::zero(); n + 1];
        out[0] = Q::one();
        for k in 1..=n {
            let s = (1..k).fold(Q::zero(), |acc, j| acc + &out[j] * &out[k - j]);
            out[k] = (self.coeff(k) - s) / q(2);
        }
        Ok(Series { coeffs: out })
    }

    /// Divides by `x`; the constant term must vanish. Loses one degree.
    pub fn div_x(&self) -> Result<Series> {
        if !self.coeff(0).is_zero() {
            return Err(Error::InvalidArgument("constant term does not vanish".into()));
        }
        Ok(Series { coeffs: self.coeffs[1..].to_vec() })
    }

    pub fn truncate(&self, degree: usize) -> Series {
        Series::new(self.coeffs[..=degree.min(self.degree())].to_vec(), degree.min(self.degree()))
    }

    /// Whether the series is `x` modulo `x^{N+1}`.
    pub fn is_x(&self) -> bool {
        *self == Series::x(self.degree())
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let coef = match fmt_q(c).as_str() {
                "1" if k > 0 => String::new(),
                "-1" if k > 0 => "-".into(),
                s => s.to_string(),
            };
            parts.push(match k {
                0 => coef,
                1 => format!("{coef}x"),
                _ => format!("{coef}x^{k}"),
            });
        }
        if parts.is_empty() {
            parts.push("0".into());
        }
        write!(f, "{} + O(x^{})", parts.join(" + ").replace("+ -", "- "), self.degree() + 1)
    }
}

/// `Σ_{n=1}^{N} (-1)^n d_n x^n` for the dimensions `d_1, d_2, …`.
pub fn signed_series(dims: &[Q], degree: usize) -> Series {
    let mut c = vec![Q::zero(); degree + 1];
    for (k, d) in dims.iter().enumerate().take(degree) {
        c[k + 1] = sign(k as i64 + 1) * d;
    }
    Series::new(c, degree)
}

/// Dimensions `dim P(n) / n!` of the preset operads.
pub fn preset_dimensions(name: &str, degree: usize) -> Result<Vec<Q>> {
    let f: fn(usize) -> Q = match name {
        "dias" => |n| q(n as i64),
        "dend" => |n| Q::from_integer((catalan(n) as i128).into()),
        "as" => |_| Q::one(),
        _ => return Err(Error::UnknownPreset(name.to_string())),
    };
    Ok((1..=degree).map(f).collect())
}

pub fn preset_dual(name: &str) -> Result<&'static str> {
    match name {
        "dias" => Ok("dend"),
        "dend" => Ok("dias"),
        "as" => Ok("as"),
        _ => Err(Error::UnknownPreset(name.to_string())),
    }
}

/// `-x/(1+x)^2`.
pub fn dias_closed_form(degree: usize) -> Series {
    let one_plus_x = Series::new(vec![Q::one(), Q::one()], degree);
    let inv = one_plus_x.mul(&one_plus_x).inverse().expect("constant term 1");
    Series::x(degree).scale(&-Q::one()).mul(&inv)
}

/// `(-1 - 2x + √(1+4x)) / (2x)`.
pub fn dend_closed_form(degree: usize) -> Series {
    let n = degree + 1;
    let root = Series::new(vec![Q::one(), q(4)], n).sqrt().expect("constant term 1");
    let num = root.sub(&Series::new(vec![Q::one(), q(2)], n));
    num.div_x().expect("numerator vanishes at 0").scale(&(Q::one() / q(2))).truncate(degree)
}

/// `-x/(1+x)`.
pub fn as_closed_form(degree: usize) -> Series {
    let inv = Series::new(vec![Q::one(), Q::one()], degree).inverse().expect("constant term 1");
    Series::x(degree).scale(&-Q::one()).mul(&inv)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoincareReport {
    pub name: String,
    pub degree: usize,
    pub series: Series,
    /// The dual operad's series and `g_dual(g(x))`, for presets.
    pub dual: Option<(String, Series, Series)>,
    /// Whether `g_dual(g(x)) = x` modulo `x^{N+1}`.
    pub inverse_ok: Option<bool>,
    /// Whether the series agrees with its closed form, for presets.
    pub closed_form_ok: Option<bool>,
    /// The compositional inverse of the series.
    pub reversion: Series,
    /// Whether the reversion alternates in sign with nonnegative integer
    /// magnitudes, as the series of a dual operad must.
    pub reversion_admissible: bool,
}

fn check_degree(degree: usize) -> Result<()> {
    if degree == 0 || degree > MAX_POINCARE_DEGREE {
        return Err(Error::InvalidArgument(format!("degree must be in 1..={MAX_POINCARE_DEGREE}, got {degree}")));
    }
    Ok(())
}

fn admissible(s: &Series) -> bool {
    (1..=s.degree()).all(|k| {
        let c = s.coeff(k) * sign(k as i64);
        c.is_integer() && c >= Q::zero()
    })
}

/// Series of a preset, the composite with its dual's series, and the
/// closed-form check.
pub fn poincare_check(name: &str, degree: usize) -> Result<PoincareReport> {
    check_degree(degree)?;
    let series = signed_series(&preset_dimensions(name, degree)?, degree);
    let dual_name = preset_dual(name)?;
    let dual = signed_series(&preset_dimensions(dual_name, degree)?, degree);
    let composite = dual.compose(&series)?;
    let closed = match name {
        "dias" => dias_closed_form(degree),
        "dend" => dend_closed_form(degree),
        _ => as_closed_form(degree),
    };
    let reversion = series.reversion()?;
    Ok(PoincareReport {
        name: name.to_string(),
        degree,
        reversion_admissible: admissible(&reversion),
        reversion,
        inverse_ok: Some(composite.is_x()),
        closed_form_ok: Some(closed == series),
        dual: Some((dual_name.to_string(), dual, composite)),
        series,
    })
}

/// The same report for an arbitrary dimension sequence `d_1, d_2, …`.
pub fn poincare_check_dims(dims: &[Q], degree: usize) -> Result<PoincareReport> {
    check_degree(degree)?;
    if dims.len() < degree {
        return Err(Error::InvalidArgument(format!("need {degree} dimensions, got {}", dims.len())));
    }
    let series = signed_series(dims, degree);
    let reversion = series.reversion()?;
    Ok(PoincareReport {
        name: "custom".into(),
        degree,
        reversion_admissible: admissible(&reversion),
        reversion,
        inverse_ok: None,
        closed_form_ok: None,
        dual: None,
        series,
    })
}
