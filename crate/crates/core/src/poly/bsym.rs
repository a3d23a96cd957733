use super::exact::{ExactPoly, Rational};
use crate::error::{Error, Result};
use num::bigint::BigInt;
use num::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Integer Laurent polynomial in `b`, stored as exponent → coefficient
/// with no zero entries.
#[derive(Clone, Debug, PartialEq, Eq, Default, Hash)]
pub struct Laurent {
    terms: BTreeMap<i64, BigInt>,
}

impl Laurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(coeff: BigInt, exp: i64) -> Self {
        let mut l = Self::zero();
        l.add_term(exp, coeff);
        l
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, i64)>>(terms: I) -> Self {
        let mut l = Self::zero();
        for (e, c) in terms {
            l.add_term(e, BigInt::from(c));
        }
        l
    }

    pub fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<i64, BigInt> {
        &self.terms
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Exact value at a nonzero rational `b`.
    pub fn eval(&self, b: &Rational) -> Result<Rational> {
        if b.is_zero() && self.terms.keys().any(|&e| e < 0) {
            return Err(Error::Invalid("negative power of b = 0".into()));
        }
        let mut total = Rational::zero();
        for (&e, c) in &self.terms {
            let p = if e >= 0 {
                num::pow(b.clone(), e as usize)
            } else {
                num::pow(b.recip(), (-e) as usize)
            };
            total += Rational::from_integer(c.clone()) * p;
        }
        Ok(total)
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (&e, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            if e == 0 || !abs.is_one() {
                write!(f, "{abs}")?;
            }
            match e {
                0 => {}
                1 => f.write_str("b")?,
                _ => write!(f, "b^{e}")?,
            }
        }
        Ok(())
    }
}

/// Polynomial in `λ` whose coefficients are Laurent polynomials in `b`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BSymPoly {
    coeffs: Vec<Laurent>,
}

impl BSymPoly {
    pub fn new(mut coeffs: Vec<Laurent>) -> Self {
        while coeffs.last().is_some_and(Laurent::is_zero) {
            coeffs.pop();
        }
        BSymPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[Laurent] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Substitute a concrete `b`.
    pub fn eval_b(&self, b: &Rational) -> Result<ExactPoly> {
        Ok(ExactPoly::new(
            self.coeffs
                .iter()
                .map(|l| l.eval(b))
                .collect::<Result<Vec<_>>>()?,
        ))
    }

    /// Largest power of `b` appearing anywhere.
    pub fn max_b_exponent(&self) -> Option<i64> {
        self.coeffs.iter().filter_map(Laurent::max_exponent).max()
    }

    /// The polynomial in `λ` formed by the coefficients of `b^exp`.
    pub fn b_slice(&self, exp: i64) -> ExactPoly {
        ExactPoly::from_bigints(self.coeffs.iter().map(|l| l.coeff(exp)).collect())
    }
}

impl fmt::Display for BSymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, l) in self.coeffs.iter().enumerate().rev() {
            if l.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let single_unit = l.terms.len() == 1 && l.coeff(0).is_one();
            match (k, single_unit) {
                (0, _) => write!(f, "{l}")?,
                (_, true) => {}
                _ => write!(f, "({l})")?,
            }
            match k {
                0 => {}
                1 => f.write_str("λ")?,
                _ => write!(f, "λ^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::exact::{int, rat};

    #[test]
    fn laurent_cancels_and_evaluates() {
        let mut l = Laurent::from_terms([(2, 3), (-1, 2)]);
        l.add_term(2, BigInt::from(-3));
        assert_eq!(l, Laurent::from_terms([(-1, 2)]));
        assert_eq!(l.eval(&int(4)).unwrap(), rat(1, 2));
        assert!(l.eval(&int(0)).is_err());
    }

    #[test]
    fn slices_and_substitution() {
        // 1 + 2bλ + λ^2
        let p = BSymPoly::new(vec![
            Laurent::from_terms([(0, 1)]),
            Laurent::from_terms([(1, 2)]),
            Laurent::from_terms([(0, 1)]),
        ]);
        assert_eq!(p.eval_b(&int(3)).unwrap(), ExactPoly::from_ints(&[1, 6, 1]));
        assert_eq!(p.max_b_exponent(), Some(1));
        assert_eq!(p.b_slice(1), ExactPoly::from_ints(&[0, 2]));
        assert_eq!(p.to_string(), "λ^2 + (2b)λ + 1");
    }
}
