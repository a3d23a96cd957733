//! Simultaneous root finding (Aberth–Ehrlich) in double precision.
//!
//! Exact inputs are first split into square-free factors, so the
//! iteration only ever sees simple roots; roots at zero and rational
//! roots of linear factors are taken exactly.

use super::exact::{horner, rational_to_f64, ExactPoly};
use super::sturm::certify_real_rooted;
use crate::error::{Error, Result};
use num::complex::Complex64;
use num::{Signed, Zero};
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Certified {
    Yes,
    No,
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootOptions {
    /// Bound on the normalised residual of every returned root.
    pub tol: f64,
    pub max_iter: usize,
}

impl Default for RootOptions {
    fn default() -> Self {
        RootOptions {
            tol: 1e-10,
            max_iter: 500,
        }
    }
}

/// Roots with multiplicity, sorted by real then imaginary part.
#[derive(Debug, Clone, PartialEq)]
pub struct RootSet {
    pub roots: Vec<Complex64>,
    /// `|p(z)| / Σ|a_j||z|^j` per root.
    pub residuals: Vec<f64>,
    pub all_real_certified: Certified,
}

impl RootSet {
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().copied().fold(0.0, f64::max)
    }

    /// Smallest root modulus.
    pub fn min_modulus(&self) -> f64 {
        self.roots
            .iter()
            .map(|z| z.norm())
            .fold(f64::INFINITY, f64::min)
    }
}

/// Componentwise backward error of `z` as a root: how much the
/// coefficients must move, relatively, to make `z` exact.
pub fn backward_error(coeffs: &[Complex64], z: Complex64) -> f64 {
    let r = z.norm();
    let scale = coeffs.iter().rev().fold(0.0, |acc, a| acc * r + a.norm());
    if scale == 0.0 {
        return 0.0;
    }
    horner(coeffs, z).norm() / scale
}

fn eval_with_derivative(coeffs: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::zero();
    let mut dp = Complex64::zero();
    for &a in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + a;
    }
    (p, dp)
}

/// Raw Aberth–Ehrlich iteration on a polynomial with nonzero leading
/// coefficient. Returns the approximations and the iteration count.
pub fn aberth(coeffs: &[Complex64], max_iter: usize) -> (Vec<Complex64>, usize) {
    let n = coeffs.len() - 1;
    let lead = coeffs[n];
    let radius = 1.0
        + coeffs[..n]
            .iter()
            .map(|a| (a / lead).norm())
            .fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius, 2.0 * PI * (k as f64 + 0.5) / n as f64))
        .collect();
    let mut done = vec![false; n];
    let settled = 4.0 * f64::EPSILON * (n as f64 + 1.0);
    let mut iterations = 0;
    while iterations < max_iter && done.iter().any(|d| !d) {
        iterations += 1;
        for k in 0..n {
            if done[k] {
                continue;
            }
            let (p, dp) = eval_with_derivative(coeffs, z[k]);
            if p.is_zero() {
                done[k] = true;
                continue;
            }
            let ratio = p / dp;
            let repulsion: Complex64 = (0..n)
                .filter(|&j| j != k)
                .map(|j| (z[k] - z[j]).inv())
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if !step.re.is_finite() || !step.im.is_finite() {
                continue;
            }
            z[k] -= step;
            if step.norm() <= f64::EPSILON * z[k].norm() || backward_error(coeffs, z[k]) <= settled
            {
                done[k] = true;
            }
        }
    }
    (z, iterations)
}

fn sort_roots(pairs: &mut [(Complex64, f64)]) {
    pairs.sort_by(|a, b| a.0.re.total_cmp(&b.0.re).then(a.0.im.total_cmp(&b.0.im)));
}

fn finish(
    coeffs: &[Complex64],
    roots: Vec<Complex64>,
    opts: &RootOptions,
    iterations: usize,
    certified: Certified,
) -> Result<RootSet> {
    let mut pairs: Vec<(Complex64, f64)> = roots
        .into_iter()
        .map(|z| (z, backward_error(coeffs, z)))
        .collect();
    let worst = pairs.iter().map(|p| p.1).fold(0.0, f64::max);
    if worst.is_nan() || worst > opts.tol {
        return Err(Error::NoConvergence {
            iterations,
            worst_residual: worst,
        });
    }
    sort_roots(&mut pairs);
    let (roots, residuals) = pairs.into_iter().unzip();
    Ok(RootSet {
        roots,
        residuals,
        all_real_certified: certified,
    })
}

/// Roots of a polynomial with double-precision complex coefficients
/// (ascending). Real-rootedness is never certified here.
pub fn find_roots_complex(coeffs: &[Complex64], opts: &RootOptions) -> Result<RootSet> {
    let mut c = coeffs.to_vec();
    while c.last().is_some_and(|a| a.is_zero()) {
        c.pop();
    }
    match c.len() {
        0 => return Err(Error::ZeroPolynomial),
        1 => return Err(Error::Invalid("constant polynomial has no roots".into())),
        _ => {}
    }
    let zeros = c.iter().take_while(|a| a.is_zero()).count();
    let (mut roots, iterations) = if c.len() - zeros > 1 {
        aberth(&c[zeros..], opts.max_iter)
    } else {
        (Vec::new(), 0)
    };
    roots.extend(std::iter::repeat_n(Complex64::zero(), zeros));
    finish(&c, roots, opts, iterations, Certified::Unknown)
}

/// Roots of an exact polynomial, with multiplicity, and an exact Sturm
/// verdict on whether they are all real.
pub fn find_roots(p: &ExactPoly, opts: &RootOptions) -> Result<RootSet> {
    match p.degree() {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => return Err(Error::Invalid("constant polynomial has no roots".into())),
        _ => {}
    }
    let mut roots = Vec::new();
    let mut iterations = 0;
    for (i, factor) in p.square_free_decomposition().into_iter().enumerate() {
        let multiplicity = i + 1;
        let mut f = factor;
        let mut found = Vec::new();
        if f.degree().unwrap_or(0) >= 1 && f.coeff(0).is_zero() {
            found.push(Complex64::zero());
            f = f.shift_down(1);
        }
        match f.degree() {
            Some(1) => {
                let r = -(f.coeff(0) / f.coeff(1));
                found.push(Complex64::new(rational_to_f64(&r), 0.0));
            }
            Some(d) if d >= 2 => {
                // divide by the largest coefficient so the f64 image stays finite
                let big = f
                    .coeffs()
                    .iter()
                    .map(|c| c.abs())
                    .max()
                    .expect("nonzero polynomial");
                let scaled = f.scale(&big.recip());
                let (z, it) = aberth(&scaled.to_complex(), opts.max_iter);
                iterations = iterations.max(it);
                found.extend(z);
            }
            _ => {}
        }
        for z in found {
            roots.extend(std::iter::repeat_n(z, multiplicity));
        }
    }
    let certified = if certify_real_rooted(p)?.real_rooted() {
        Certified::Yes
    } else {
        Certified::No
    };
    finish(&p.to_complex(), roots, opts, iterations, certified)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::exact::{int, rat};

    fn close(a: Complex64, re: f64, im: f64) -> bool {
        (a - Complex64::new(re, im)).norm() < 1e-9
    }

    #[test]
    fn difference_of_squares() {
        let r = find_roots(&ExactPoly::from_ints(&[-1, 0, 1]), &RootOptions::default()).unwrap();
        assert!(close(r.roots[0], -1.0, 0.0) && close(r.roots[1], 1.0, 0.0));
        assert_eq!(r.all_real_certified, Certified::Yes);
    }

    #[test]
    fn triangle_edge_cover_polynomial() {
        // z^3 + 3z^2 = z^2 (z + 3)
        let r = find_roots(
            &ExactPoly::from_ints(&[0, 0, 3, 1]),
            &RootOptions::default(),
        )
        .unwrap();
        assert_eq!(r.len(), 3);
        assert!(close(r.roots[0], -3.0, 0.0));
        assert_eq!(r.roots[1], Complex64::zero());
        assert_eq!(r.roots[2], Complex64::zero());
    }

    #[test]
    fn shifted_roots_of_unity() {
        // (1+z)^4 - 1 has roots -1 + i^j
        let p = &ExactPoly::one_plus_z_pow(4) - &ExactPoly::one();
        let r = find_roots(&p, &RootOptions::default()).unwrap();
        for (re, im) in [(0.0, 0.0), (-2.0, 0.0), (-1.0, 1.0), (-1.0, -1.0)] {
            assert!(r.roots.iter().any(|&z| close(z, re, im)), "{re} {im}");
        }
        assert_eq!(r.all_real_certified, Certified::No);
    }

    #[test]
    fn repeated_roots_come_back_with_multiplicity() {
        let p = &ExactPoly::from_ints(&[1, 1]).pow(3) * &ExactPoly::from_ints(&[1, 0, 1]).pow(2);
        let r = find_roots(&p, &RootOptions::default()).unwrap();
        assert_eq!(r.len(), 7);
        assert_eq!(r.roots.iter().filter(|z| close(**z, -1.0, 0.0)).count(), 3);
        assert!(r.max_residual() < 1e-14);
    }

    #[test]
    fn complex_coefficients_and_errors() {
        let c = [
            Complex64::new(0.0, -1.0),
            Complex64::zero(),
            Complex64::new(1.0, 0.0),
        ];
        let r = find_roots_complex(&c, &RootOptions::default()).unwrap();
        // z^2 = i
        let s = std::f64::consts::FRAC_1_SQRT_2;
        assert!(r.roots.iter().any(|&z| close(z, s, s)));
        assert_eq!(r.all_real_certified, Certified::Unknown);
        assert_eq!(
            find_roots(&ExactPoly::zero(), &RootOptions::default()),
            Err(Error::ZeroPolynomial)
        );
        assert!(find_roots(&ExactPoly::one(), &RootOptions::default()).is_err());
    }

    #[test]
    fn non_convergence_is_reported() {
        let p = ExactPoly::new((1..=12).map(|k| rat(k, 13 - k)).collect());
        let opts = RootOptions {
            tol: 1e-10,
            max_iter: 1,
        };
        assert!(matches!(
            find_roots(&p, &opts),
            Err(Error::NoConvergence { .. })
        ));
    }

    #[test]
    fn widely_spread_real_roots() {
        // roots -10^k for k = 0..6
        let p = (0..7).fold(ExactPoly::one(), |acc, k| {
            &acc * &ExactPoly::new(vec![int(10i64.pow(k)), int(1)])
        });
        let r = find_roots(&p, &RootOptions::default()).unwrap();
        for (k, z) in r.roots.iter().rev().enumerate() {
            let want = -(10f64.powi(k as i32));
            assert!((z.re - want).abs() < 1e-9 * want.abs(), "{z} vs {want}");
        }
    }
}
