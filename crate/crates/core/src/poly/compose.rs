//! Coefficient-level constructions: Schur–Szegő composition, Asano
//! contraction and the logarithmic power series.

use super::exact::{ExactPoly, Rational};
use crate::error::{Error, Result};
use num::complex::Complex64;
use num::traits::NumOps;
use num::{One, Zero};

/// Schur–Szegő composition of `p = Σ c_j z^j` with the key polynomial
/// `K(z) = Σ C(d,j) u_j z^j`, given through its weight vector `u` of
/// length `d + 1`: returns `Σ u_j c_j z^j`.
pub fn schur_szego(p: &ExactPoly, u: &[Rational]) -> Result<ExactPoly> {
    let d = u
        .len()
        .checked_sub(1)
        .ok_or_else(|| Error::Invalid("empty weight vector".into()))?;
    if let Some(dp) = p.degree() {
        if dp > d {
            return Err(Error::DegreeMismatch {
                expected: d,
                got: dp,
            });
        }
    }
    Ok(ExactPoly::new(
        p.coeffs().iter().zip(u).map(|(c, w)| c * w).collect(),
    ))
}

/// Asano contraction of a degree-`d` polynomial: `a_d z + a_0`.
pub fn asano_contract(p: &ExactPoly, d: usize) -> Result<ExactPoly> {
    match p.degree() {
        Some(dp) if dp == d => Ok(ExactPoly::new(vec![p.coeff(0), p.coeff(d)])),
        got => Err(Error::DegreeMismatch {
            expected: d,
            got: got.unwrap_or(0),
        }),
    }
}

/// Scalars the log series can be computed over.
pub trait SeriesScalar: Clone + Zero + One + NumOps + PartialEq {
    fn from_count(k: usize) -> Self;
}

impl SeriesScalar for Rational {
    fn from_count(k: usize) -> Self {
        Rational::from_integer(k.into())
    }
}

impl SeriesScalar for Complex64 {
    fn from_count(k: usize) -> Self {
        Complex64::new(k as f64, 0.0)
    }
}

/// First `m` Taylor coefficients `c_1..c_m` of `log p(z)` around 0, for
/// `p` given by ascending coefficients with `a_0 = 1`. Coefficients past
/// the end of `a` are zero, so a truncated prefix of length `m + 1` gives
/// the same answer as the full polynomial.
///
/// Uses `k c_k = k a_k − Σ_{j<k} j c_j a_{k−j}`.
pub fn log_taylor<T: SeriesScalar>(a: &[T], m: usize) -> Result<Vec<T>> {
    if m < 1 {
        return Err(Error::Invalid("log series order must be at least 1".into()));
    }
    match a.first() {
        Some(a0) if a0.is_one() => {}
        _ => {
            return Err(Error::Invalid(
                "log series needs constant coefficient 1".into(),
            ))
        }
    }
    let coeff = |k: usize| a.get(k).cloned().unwrap_or_else(T::zero);
    let mut c: Vec<T> = Vec::with_capacity(m);
    for k in 1..=m {
        let mut acc = T::from_count(k) * coeff(k);
        for j in 1..k {
            acc = acc - T::from_count(j) * c[j - 1].clone() * coeff(k - j);
        }
        c.push(acc / T::from_count(k));
    }
    Ok(c)
}

/// [`log_taylor`] for an exact polynomial.
pub fn log_taylor_exact(p: &ExactPoly, m: usize) -> Result<Vec<Rational>> {
    if p.is_zero() {
        return Err(Error::Invalid("log series of the zero polynomial".into()));
    }
    log_taylor(p.coeffs(), m)
}
