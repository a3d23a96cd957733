//! Exact real-root counting with Sturm sequences.

use super::exact::{ExactPoly, Rational};
use crate::error::{Error, Result};
use num::{Signed, Zero};
use serde::Serialize;

/// Sturm sequence of a polynomial. Every member is rescaled by a positive
/// constant, which leaves all sign patterns unchanged.
#[derive(Debug, Clone)]
pub struct SturmSequence {
    chain: Vec<ExactPoly>,
}

fn normalize_positive(p: ExactPoly) -> ExactPoly {
    match p.leading() {
        Some(l) => {
            let s = l.abs().recip();
            p.scale(&s)
        }
        None => p,
    }
}

fn sign(r: &Rational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

fn count_changes(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut changes = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

impl SturmSequence {
    pub fn new(p: &ExactPoly) -> Self {
        let mut chain = vec![normalize_positive(p.clone())];
        if p.degree().unwrap_or(0) == 0 {
            return SturmSequence { chain };
        }
        chain.push(normalize_positive(p.derivative()));
        loop {
            let n = chain.len();
            let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
            if r.is_zero() {
                break;
            }
            chain.push(normalize_positive(-&r));
        }
        SturmSequence { chain }
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    pub fn changes_at(&self, x: &Rational) -> usize {
        count_changes(self.chain.iter().map(|p| sign(&p.eval(x))))
    }

    pub fn changes_at_pos_inf(&self) -> usize {
        count_changes(self.chain.iter().map(|p| p.leading().map_or(0, sign)))
    }

    pub fn changes_at_neg_inf(&self) -> usize {
        count_changes(self.chain.iter().map(|p| {
            let s = p.leading().map_or(0, sign);
            if p.degree().unwrap_or(0) % 2 == 1 {
                -s
            } else {
                s
            }
        }))
    }

    /// Distinct real roots on the whole line.
    pub fn count_real(&self) -> usize {
        self.changes_at_neg_inf() - self.changes_at_pos_inf()
    }
}

/// Distinct real roots in the half-open interval `(a, b]`.
pub fn count_roots_in(p: &ExactPoly, a: &Rational, b: &Rational) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if a >= b {
        return Ok(0);
    }
    let s = SturmSequence::new(&p.square_free_part());
    Ok(s.changes_at(a) - s.changes_at(b))
}

/// Outcome of the exact real-rootedness check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RealRootCertificate {
    pub degree: usize,
    /// No repeated roots.
    pub square_free: bool,
    /// Distinct complex roots (degree of the square-free part).
    pub distinct_roots: usize,
    pub distinct_real: usize,
    pub distinct_negative: usize,
}

impl RealRootCertificate {
    /// Every root real and simple.
    pub fn all_real_simple(&self) -> bool {
        self.square_free && self.distinct_real == self.degree
    }

    /// Every root real, repeats allowed.
    pub fn real_rooted(&self) -> bool {
        self.distinct_real == self.distinct_roots
    }

    /// Every root real and strictly negative, repeats allowed.
    pub fn real_negative(&self) -> bool {
        self.real_rooted() && self.distinct_negative == self.distinct_roots
    }
}

/// Count real roots exactly. Runs on the square-free part so repeated
/// roots are counted once.
pub fn certify_real_rooted(p: &ExactPoly) -> Result<RealRootCertificate> {
    let degree = match p.degree() {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => return Err(Error::Invalid("constant polynomial has no roots".into())),
        Some(d) => d,
    };
    let sf = p.square_free_part();
    let distinct_roots = sf.degree().unwrap_or(0);
    let seq = SturmSequence::new(&sf);
    let distinct_real = seq.count_real();
    let zero = Rational::zero();
    let nonpositive = seq.changes_at_neg_inf() - seq.changes_at(&zero);
    let zero_is_root = sf.coeff(0).is_zero();
    Ok(RealRootCertificate {
        degree,
        square_free: distinct_roots == degree,
        distinct_roots,
        distinct_real,
        distinct_negative: nonpositive - usize::from(zero_is_root),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::exact::{int, rat};

    #[test]
    fn repeated_root_is_not_simple() {
        let c = certify_real_rooted(&ExactPoly::from_ints(&[1, 2, 1])).unwrap();
        assert!(!c.square_free);
        assert!(!c.all_real_simple());
        assert!(c.real_negative());
        assert_eq!(c.distinct_real, 1);
    }

    #[test]
    fn no_real_roots() {
        let c = certify_real_rooted(&ExactPoly::from_ints(&[1, 0, 1])).unwrap();
        assert_eq!(c.distinct_real, 0);
        assert!(!c.real_rooted());
    }

    #[test]
    fn key_polynomial_at_two() {
        // 1/2 + 2z + z^2/2, roots -2 ± √3
        let p = ExactPoly::new(vec![rat(1, 2), int(2), rat(1, 2)]);
        let c = certify_real_rooted(&p).unwrap();
        assert!(c.all_real_simple() && c.real_negative());
    }

    #[test]
    fn zero_root_is_not_negative() {
        // z (z + 1)
        let c = certify_real_rooted(&ExactPoly::from_ints(&[0, 1, 1])).unwrap();
        assert_eq!(c.distinct_real, 2);
        assert_eq!(c.distinct_negative, 1);
        assert!(!c.real_negative());
    }

    #[test]
    fn interval_counts() {
        // (z+1)(z+2)(z-3)
        let p = &(&ExactPoly::from_ints(&[1, 1]) * &ExactPoly::from_ints(&[2, 1]))
            * &ExactPoly::from_ints(&[-3, 1]);
        assert_eq!(count_roots_in(&p, &int(-3), &int(0)).unwrap(), 2);
        assert_eq!(count_roots_in(&p, &int(-2), &int(-1)).unwrap(), 1);
        assert_eq!(count_roots_in(&p, &int(0), &int(10)).unwrap(), 1);
        assert_eq!(count_roots_in(&p, &int(5), &int(1)).unwrap(), 0);
    }

    #[test]
    fn constants_are_rejected() {
        assert!(certify_real_rooted(&ExactPoly::zero()).is_err());
        assert!(certify_real_rooted(&ExactPoly::one()).is_err());
    }
}
