//! Ising partition functions, their line-graph form, key polynomials and
//! the max-cut limit.
//!
//! Cuts never contain loops; parallel edges are counted separately.

use super::{check_cap, chunked, sum_counts, Limits};
use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::poly::{
    binomial, certify_real_rooted, count_roots_in, find_roots, BSymPoly, ExactPoly, Laurent,
    Rational, RootOptions,
};
use num::bigint::BigInt;
use num::{Signed, Zero};
use serde::Serialize;

fn c2(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

fn require_positive(b: &Rational) -> Result<()> {
    if !b.is_positive() {
        return Err(Error::Invalid(format!("b must be positive, got {b}")));
    }
    Ok(())
}

/// Number of vertex sets `U` by size and cut size: `table[|U|][|δ(U)|]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutCounts {
    pub table: Vec<Vec<i64>>,
}

impl CutCounts {
    pub fn max_cut(&self) -> usize {
        self.table
            .iter()
            .filter_map(|row| row.iter().rposition(|&c| c != 0))
            .max()
            .unwrap_or(0)
    }

    fn to_sym(&self) -> BSymPoly {
        BSymPoly::new(
            self.table
                .iter()
                .map(|row| {
                    let mut l = Laurent::zero();
                    for (c, &count) in row.iter().enumerate() {
                        l.add_term(c as i64, BigInt::from(count));
                    }
                    l
                })
                .collect(),
        )
    }
}

pub fn ising_counts(g: &Graph, limits: &Limits) -> Result<CutCounts> {
    let n = g.n();
    check_cap("vertex subsets", n, limits.subset_exponent.min(63))?;
    let edges: Vec<(u64, u64)> = g
        .edge_list()
        .into_iter()
        .filter(|&(u, v)| u != v)
        .map(|(u, v)| (1u64 << u, 1u64 << v))
        .collect();
    let width = edges.len() + 1;
    let parts = chunked(n as u32, |range| {
        let mut t = vec![0i64; (n + 1) * width];
        for u in range {
            let cut = edges
                .iter()
                .filter(|&&(a, b)| (u & a == 0) != (u & b == 0))
                .count();
            t[u.count_ones() as usize * width + cut] += 1;
        }
        t
    });
    let flat = sum_counts(parts);
    Ok(CutCounts {
        table: flat.chunks(width).map(<[i64]>::to_vec).collect(),
    })
}

/// `Z_G(λ, b) = Σ_U λ^{|U|} b^{|δ(U)|}` with `b` symbolic.
pub fn ising_poly_sym(g: &Graph) -> Result<BSymPoly> {
    ising_poly_sym_with(g, &Limits::default())
}

pub fn ising_poly_sym_with(g: &Graph, limits: &Limits) -> Result<BSymPoly> {
    Ok(ising_counts(g, limits)?.to_sym())
}

/// `Z_G(λ, b)` at a concrete rational `b`.
pub fn ising_poly(g: &Graph, b: &Rational) -> Result<ExactPoly> {
    ising_poly_sym(g)?.eval_b(b)
}

/// `Σ λ^{|U|}` over the vertex sets realising the maximum cut.
pub fn maxcut_poly(g: &Graph) -> Result<ExactPoly> {
    maxcut_poly_with(g, &Limits::default())
}

pub fn maxcut_poly_with(g: &Graph, limits: &Limits) -> Result<ExactPoly> {
    let counts = ising_counts(g, limits)?;
    let m = counts.max_cut();
    Ok(ExactPoly::from_bigints(
        counts
            .table
            .iter()
            .map(|row| BigInt::from(row.get(m).copied().unwrap_or(0)))
            .collect(),
    ))
}

/// Ising partition function of the line graph `L(G)`, computed on `G`
/// itself by summing over edge sets `F`: the coefficient of `x^{|F|}`
/// collects `b^{|E(L)| − Σ_v [C(d(v) − d_F(v), 2) + C(d_F(v), 2)]}`.
pub fn ising_line_graph_sym(g: &Graph) -> Result<BSymPoly> {
    ising_line_graph_sym_with(g, &Limits::default())
}

pub fn ising_line_graph_sym_with(g: &Graph, limits: &Limits) -> Result<BSymPoly> {
    if !g.is_simple() {
        return Err(Error::NotSimple {
            what: "line-graph Ising",
        });
    }
    let m = g.num_edges();
    check_cap("edge subsets", m, limits.subset_exponent.min(63))?;
    let edges = g.edge_list();
    let degrees = g.degrees();
    let line_edges: usize = degrees.iter().map(|&d| c2(d)).sum();
    let width = line_edges + 1;
    let parts = chunked(m as u32, |range| {
        let mut t = vec![0i64; (m + 1) * width];
        let mut f = vec![0usize; g.n()];
        for set in range {
            f.iter_mut().for_each(|x| *x = 0);
            let mut bits = set;
            while bits != 0 {
                let (u, v) = edges[bits.trailing_zeros() as usize];
                f[u] += 1;
                f[v] += 1;
                bits &= bits - 1;
            }
            let lost: usize = degrees
                .iter()
                .zip(&f)
                .map(|(&d, &k)| c2(d - k) + c2(k))
                .sum();
            t[set.count_ones() as usize * width + line_edges - lost] += 1;
        }
        t
    });
    let flat = sum_counts(parts);
    Ok(CutCounts {
        table: flat.chunks(width).map(<[i64]>::to_vec).collect(),
    }
    .to_sym())
}

/// `Z_{L(G)}(x, b)` at a concrete `b > 0`.
pub fn ising_line_graph_poly(g: &Graph, b: &Rational) -> Result<ExactPoly> {
    ising_line_graph_poly_with(g, b, &Limits::default())
}

pub fn ising_line_graph_poly_with(g: &Graph, b: &Rational, limits: &Limits) -> Result<ExactPoly> {
    require_positive(b)?;
    ising_line_graph_sym_with(g, limits)?.eval_b(b)
}

/// `K_d(z) = Σ_i C(d,i) b^{−C(d−i,2)−C(i,2)} z^i`.
pub fn key_poly(d: usize, b: &Rational) -> Result<ExactPoly> {
    require_positive(b)?;
    let inv = b.recip();
    Ok(ExactPoly::new(
        (0..=d)
            .map(|i| {
                Rational::from_integer(binomial(d, i)) * num::pow(inv.clone(), c2(d - i) + c2(i))
            })
            .collect(),
    ))
}

/// Exact check of `K_{d+1}(z) = b^{−d} K_d(bz) + z K_d(z/b)`.
pub fn key_recursion_holds(d: usize, b: &Rational) -> Result<bool> {
    let k = key_poly(d, b)?;
    let lhs = key_poly(d + 1, b)?;
    let first = k.scale_argument(b).scale(&num::pow(b.recip(), d));
    let second = &ExactPoly::x() * &k.scale_argument(&b.recip());
    Ok(lhs == &first + &second)
}

/// `κ_{d,b}`: the smallest root modulus of `K_d`.
pub fn kappa(d: usize, b: &Rational) -> Result<f64> {
    if d == 0 {
        return Err(Error::Invalid("kappa needs d >= 1".into()));
    }
    Ok(find_roots(&key_poly(d, b)?, &RootOptions::default())?.min_modulus())
}

/// Root-location facts about one key polynomial.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct KeyPolyReport {
    pub d: usize,
    pub b: String,
    /// Real parts of the roots, largest (closest to zero) first.
    pub roots: Vec<f64>,
    /// Sturm certificate: every root real, simple and negative.
    pub simple_negative: bool,
    /// `K_{d+1}` satisfies the recursion from `K_d`.
    pub recursion_holds: bool,
    /// Smallest `z_{i+1}/z_i` over consecutive roots.
    pub min_root_ratio: Option<f64>,
    /// Every consecutive ratio exceeds `b²`.
    pub ratios_exceed_b_squared: bool,
    pub largest_root_abs: f64,
    /// `|z_0| ≤ b^{−(d−1)}`, decided exactly.
    pub bound_d_minus_1: bool,
    /// `|z_0| < b^{−d}`, decided exactly.
    pub bound_d: bool,
}

pub fn key_poly_report(d: usize, b: &Rational) -> Result<KeyPolyReport> {
    if d == 0 {
        return Err(Error::Invalid("key polynomial report needs d >= 1".into()));
    }
    let k = key_poly(d, b)?;
    let cert = certify_real_rooted(&k)?;
    let rs = find_roots(&k, &RootOptions::default())?;
    let mut roots: Vec<f64> = rs.roots.iter().map(|z| z.re).collect();
    roots.sort_by(|a, b| b.total_cmp(a));
    let ratios: Vec<f64> = roots.windows(2).map(|w| w[1] / w[0]).collect();
    let b2 = crate::poly::rational_to_f64(b).powi(2);
    let min_root_ratio = ratios.iter().copied().reduce(f64::min);
    let zero = Rational::zero();
    // all roots are negative, so the largest root lies in [-B, 0) iff
    // there is a root in (-B, 0] or -B itself is a root
    let within = |bound: Rational, inclusive: bool| -> Result<bool> {
        let inside = count_roots_in(&k, &-bound.clone(), &zero)? > 0;
        Ok(inside || (inclusive && k.eval(&-bound).is_zero()))
    };
    let inv = b.recip();
    Ok(KeyPolyReport {
        d,
        b: b.to_string(),
        simple_negative: cert.all_real_simple() && cert.real_negative(),
        recursion_holds: key_recursion_holds(d, b)?,
        ratios_exceed_b_squared: ratios.iter().all(|&r| r > b2),
        min_root_ratio,
        largest_root_abs: roots.first().map_or(0.0, |r| r.abs()),
        bound_d_minus_1: within(num::pow(inv.clone(), d - 1), true)?,
        bound_d: within(num::pow(inv, d), false)?,
        roots,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{claw_free_a, claw_free_b, complete, cycle, path};
    use crate::poly::{int, rat};

    fn lam(terms: &[&[(i64, i64)]]) -> BSymPoly {
        BSymPoly::new(
            terms
                .iter()
                .map(|t| Laurent::from_terms(t.iter().copied()))
                .collect(),
        )
    }

    #[test]
    fn single_edge() {
        let want = lam(&[&[(0, 1)], &[(1, 2)], &[(0, 1)]]);
        assert_eq!(ising_poly_sym(&complete(2)).unwrap(), want);
        assert_eq!(
            maxcut_poly(&complete(2)).unwrap(),
            ExactPoly::from_ints(&[0, 2])
        );
    }

    #[test]
    fn claw_free_examples() {
        let a = lam(&[
            &[(0, 1)],
            &[(3, 4), (1, 2)],
            &[(6, 1), (4, 11), (2, 3)],
            &[(5, 12), (3, 8)],
            &[(6, 1), (4, 11), (2, 3)],
            &[(3, 4), (1, 2)],
            &[(0, 1)],
        ]);
        assert_eq!(ising_poly_sym(&claw_free_a()).unwrap(), a);
        let b = lam(&[
            &[(0, 1)],
            &[(5, 2), (3, 4)],
            &[(8, 1), (6, 12), (4, 2)],
            &[(7, 16), (5, 4)],
            &[(8, 1), (6, 12), (4, 2)],
            &[(5, 2), (3, 4)],
            &[(0, 1)],
        ]);
        assert_eq!(ising_poly_sym(&claw_free_b()).unwrap(), b);
        let mc = ExactPoly::from_ints(&[0, 0, 1, 0, 1]);
        assert_eq!(maxcut_poly(&claw_free_a()).unwrap(), mc);
        assert_eq!(maxcut_poly(&claw_free_b()).unwrap(), mc);
    }

    #[test]
    fn line_graph_form_matches_direct() {
        assert_eq!(
            ising_line_graph_poly(&path(3), &int(2)).unwrap(),
            ExactPoly::from_ints(&[1, 4, 1])
        );
        for g in [path(5), cycle(5).unwrap(), complete(4)] {
            assert_eq!(
                ising_line_graph_sym(&g).unwrap(),
                ising_poly_sym(&g.line_graph().unwrap()).unwrap()
            );
        }
        assert_eq!(
            ising_line_graph_poly(&cycle(4).unwrap(), &int(1)).unwrap(),
            ExactPoly::one_plus_z_pow(4)
        );
        assert!(ising_line_graph_poly(&path(3), &int(0)).is_err());
    }

    #[test]
    fn key_polynomials() {
        assert_eq!(key_poly(1, &int(7)).unwrap(), ExactPoly::from_ints(&[1, 1]));
        assert_eq!(
            key_poly(2, &int(2)).unwrap(),
            ExactPoly::new(vec![rat(1, 2), int(2), rat(1, 2)])
        );
        for b in [rat(3, 2), int(2), int(5)] {
            for d in 0..=7 {
                assert!(key_recursion_holds(d, &b).unwrap());
            }
        }
        assert!((kappa(1, &int(3)).unwrap() - 1.0).abs() < 1e-12);
        assert!((kappa(2, &int(2)).unwrap() - (2.0 - 3f64.sqrt())).abs() < 1e-12);
    }

    #[test]
    fn stated_bound_fails_at_d2_b3() {
        let r = key_poly_report(2, &int(3)).unwrap();
        assert!(r.simple_negative && r.ratios_exceed_b_squared && r.bound_d_minus_1);
        assert!(!r.bound_d);
        assert!((r.largest_root_abs - 1.0 / (3.0 + 8f64.sqrt())).abs() < 1e-12);
    }
}
