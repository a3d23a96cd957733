//! Truncated-Taylor interpolation of `log p(ξ)` inside a zero-free disk.
//!
//! Low-order coefficients come from enumerating only small subsets, so
//! the order-`m` approximation costs `O(n^m)`. All errors are measured
//! in log space, modulo `2πi`, which is what a multiplicative
//! approximation of `p(ξ)` needs.

use crate::error::{Error, Result};
use crate::graphs::{Graph, Hypergraph};
use crate::partition::{edge_cover_poly_with, ising_line_graph_poly, kappa, Limits};
use crate::poly::{log_taylor, rational_to_f64, Rational};
use num::bigint::BigInt;
use num::complex::Complex64;
use num::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// A complex number in reports: `{"re": …, "im": …}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Cplx {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for Cplx {
    fn from(z: Complex64) -> Self {
        Cplx { re: z.re, im: z.im }
    }
}

impl From<Cplx> for Complex64 {
    fn from(z: Cplx) -> Self {
        Complex64::new(z.re, z.im)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TraceEntry {
    pub order: usize,
    pub approx_log: Cplx,
    pub abs_err: Option<f64>,
    pub tail_bound: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ApproxResult {
    pub xi: Cplx,
    pub m: usize,
    pub approx_log: Cplx,
    pub exact_log: Option<Cplx>,
    pub abs_err: Option<f64>,
    /// Geometric bound on the truncation error, when a zero-free radius
    /// is known.
    pub tail_bound: Option<f64>,
    /// The last series term has `|t_m|^{1/m} ≥ 1`: ξ is probably outside
    /// the disk of convergence.
    pub diverging: bool,
    /// One entry per order `1..=m`.
    pub trace: Vec<TraceEntry>,
}

/// `|a − b|` after reducing the imaginary part of `a − b` to `(−π, π]`.
pub fn log_distance(a: Complex64, b: Complex64) -> f64 {
    let d = a - b;
    let mut im = d.im % (2.0 * PI);
    if im > PI {
        im -= 2.0 * PI;
    } else if im <= -PI {
        im += 2.0 * PI;
    }
    Complex64::new(d.re, im).norm()
}

/// `deg · q^{m+1} / (1 − q)` for `q = |ξ|/ρ < 1`, where `ρ` bounds every
/// root modulus from below; infinite when `q ≥ 1`.
pub fn tail_bound(deg: usize, q: f64, m: usize) -> f64 {
    if q.is_nan() || q >= 1.0 {
        return f64::INFINITY;
    }
    deg as f64 * q.powi(m as i32 + 1) / (1.0 - q)
}

impl ApproxResult {
    /// Fill in errors against a known exact log-value.
    pub fn with_exact(mut self, exact: Complex64) -> Self {
        self.exact_log = Some(exact.into());
        self.abs_err = Some(log_distance(self.approx_log.into(), exact));
        for t in &mut self.trace {
            t.abs_err = Some(log_distance(t.approx_log.into(), exact));
        }
        self
    }

    /// Fill in tail bounds for a polynomial of degree at most `deg` whose
    /// roots all have modulus at least `rho`.
    pub fn with_radius(mut self, deg: usize, rho: f64) -> Self {
        let q = Complex64::from(self.xi).norm() / rho;
        self.tail_bound = Some(tail_bound(deg, q, self.m));
        for t in &mut self.trace {
            t.tail_bound = Some(tail_bound(deg, q, t.order));
        }
        self
    }

    fn shift(mut self, offset: Complex64) -> Self {
        self.approx_log = (Complex64::from(self.approx_log) + offset).into();
        for t in &mut self.trace {
            t.approx_log = (Complex64::from(t.approx_log) + offset).into();
        }
        self
    }
}

/// Approximate `log p(ξ)` by `Σ_{k=1}^m c_k ξ^k`, where `c` are the log
/// series coefficients of `p` and `a = (1, a_1, …, a_m)` its first
/// coefficients.
pub fn taylor_interpolate(a: &[Complex64], xi: Complex64) -> Result<ApproxResult> {
    let m = a.len().saturating_sub(1);
    let c = log_taylor(a, m)?;
    let mut sum = Complex64::zero();
    let mut power = Complex64::new(1.0, 0.0);
    let mut trace = Vec::with_capacity(m);
    let mut last = Complex64::zero();
    for (k, ck) in c.iter().enumerate() {
        power *= xi;
        last = ck * power;
        sum += last;
        trace.push(TraceEntry {
            order: k + 1,
            approx_log: sum.into(),
            abs_err: None,
            tail_bound: None,
        });
    }
    Ok(ApproxResult {
        xi: xi.into(),
        m,
        approx_log: sum.into(),
        exact_log: None,
        abs_err: None,
        tail_bound: None,
        diverging: last.norm().powf(1.0 / m as f64) >= 1.0,
        trace,
    })
}

/// Like [`taylor_interpolate`], but when `complete` says `a` holds the
/// whole polynomial the top order uses the polynomial itself.
fn interpolate_prefix(a: &[Complex64], xi: Complex64, complete: bool) -> Result<ApproxResult> {
    let mut r = taylor_interpolate(a, xi)?;
    if complete {
        let value = a
            .iter()
            .rev()
            .fold(Complex64::zero(), |acc, &c| acc * xi + c);
        let log = value.ln();
        r.approx_log = log.into();
        if let Some(t) = r.trace.last_mut() {
            t.approx_log = log.into();
        }
        r.diverging = false;
    }
    Ok(r)
}

fn budget_check(n: usize, m: usize, budget: u64) -> Result<()> {
    let mut total: u128 = 0;
    let mut c: u128 = 1;
    for k in 0..=m.min(n) {
        total = total.saturating_add(c);
        c = c.saturating_mul((n - k) as u128) / (k as u128 + 1);
    }
    if total > budget as u128 {
        return Err(Error::CapExceeded {
            what: "bounded-size subsets",
            needed: total.min(u64::MAX as u128) as u64,
            cap: budget,
        });
    }
    Ok(())
}

fn c2(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

/// Depth-first walk over edge sets in increasing index order, tracking
/// `lost = Σ_v [C(d − d_F, 2) + C(d_F, 2)]` incrementally.
struct LineWalker {
    edges: Vec<(usize, usize)>,
    degrees: Vec<usize>,
    top: usize,
}

impl LineWalker {
    /// Add edge `i` to a set of size `depth`, count it, and extend it
    /// with later edges. `table[k * width + e]` counts sets of size `k`
    /// with weight `b^e`.
    fn descend(
        &self,
        i: usize,
        depth: usize,
        lost: usize,
        f: &mut [usize],
        width: usize,
        table: &mut [i64],
    ) {
        let (u, v) = self.edges[i];
        let mut lost = lost;
        for w in [u, v] {
            // d_F(w) goes from k to k + 1: lose k more pairs, regain d − k − 1
            lost = lost + f[w] - (self.degrees[w] - f[w] - 1);
            f[w] += 1;
        }
        table[(depth + 1) * width + width - 1 - lost] += 1;
        if depth + 1 < self.top {
            for j in i + 1..self.edges.len() {
                self.descend(j, depth + 1, lost, f, width, table);
            }
        }
        f[u] -= 1;
        f[v] -= 1;
    }
}

/// Coefficients `a_0..a_m` of `Z_{L(G)}(x, b)`, where `a_0 = 1`, from the
/// edge sets of size at most `m`. Orders beyond `|E|` are zero.
pub fn low_order_coeffs_ising_line(
    g: &Graph,
    b: &Rational,
    m: usize,
    limits: &Limits,
) -> Result<Vec<Rational>> {
    if !g.is_simple() {
        return Err(Error::NotSimple {
            what: "line-graph Ising",
        });
    }
    let ne = g.num_edges();
    budget_check(ne, m, limits.approx_budget)?;
    let walker = LineWalker {
        edges: g.edge_list(),
        degrees: g.degrees(),
        top: m.min(ne),
    };
    let line_edges: usize = walker.degrees.iter().map(|&d| c2(d)).sum();
    let width = line_edges + 1;
    let mut table = vec![0i64; (walker.top + 1) * width];
    table[0] = 1;
    if walker.top > 0 {
        let parts: Vec<Vec<i64>> = (0..ne)
            .into_par_iter()
            .map(|i| {
                let mut t = vec![0i64; (walker.top + 1) * width];
                let mut f = vec![0usize; g.n()];
                walker.descend(i, 0, line_edges, &mut f, width, &mut t);
                t
            })
            .collect();
        for p in parts {
            for (a, b) in table.iter_mut().zip(p) {
                *a += b;
            }
        }
    }
    let mut out: Vec<Rational> = table
        .chunks(width)
        .map(|row| {
            row.iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(e, &c)| Rational::from_integer(BigInt::from(c)) * num::pow(b.clone(), e))
                .fold(Rational::zero(), |acc, x| acc + x)
        })
        .collect();
    out.resize(m + 1, Rational::zero());
    Ok(out)
}

/// Number of independent sets of each size `0..=m` (sets containing no
/// edge), enumerated with pruning. Sizes beyond `|V|` are zero.
pub fn low_order_independent_set_counts(
    h: &Hypergraph,
    m: usize,
    limits: &Limits,
) -> Result<Vec<BigInt>> {
    if let Some(k) = h.first_empty_edge() {
        return Err(Error::EmptyEdge(k));
    }
    let n = h.n();
    if n > 64 {
        return Err(Error::CapExceeded {
            what: "vertex bitmask",
            needed: n as u64,
            cap: 64,
        });
    }
    budget_check(n, m, limits.approx_budget)?;
    let masks = h.edge_masks();
    // edges whose largest vertex is v: adding v to a set can only
    // complete these
    let mut closing: Vec<Vec<u64>> = vec![Vec::new(); n];
    for &e in &masks {
        closing[63 - e.leading_zeros() as usize].push(e);
    }
    let top = m.min(n);

    fn walk(
        set: u64,
        depth: usize,
        next: usize,
        top: usize,
        closing: &[Vec<u64>],
        counts: &mut [u64],
    ) {
        counts[depth] += 1;
        if depth == top {
            return;
        }
        for v in next..closing.len() {
            let with = set | (1 << v);
            if closing[v].iter().all(|&e| e & with != e) {
                walk(with, depth + 1, v + 1, top, closing, counts);
            }
        }
    }

    let mut counts = vec![0u64; top + 1];
    counts[0] = 1;
    if top > 0 {
        let parts: Vec<Vec<u64>> = (0..n)
            .into_par_iter()
            .map(|v| {
                let mut c = vec![0u64; top + 1];
                let set = 1u64 << v;
                if closing[v].iter().all(|&e| e & set != e) {
                    walk(set, 1, v + 1, top, &closing, &mut c);
                }
                c
            })
            .collect();
        for p in parts {
            for (a, b) in counts.iter_mut().zip(p) {
                *a += b;
            }
        }
    }
    let mut out: Vec<BigInt> = counts.into_iter().map(BigInt::from).collect();
    out.resize(m + 1, BigInt::zero());
    Ok(out)
}

fn to_complex(a: &[Rational]) -> Vec<Complex64> {
    a.iter()
        .map(|r| Complex64::new(rational_to_f64(r), 0.0))
        .collect()
}

/// Approximate `log E(h, ξ)` as `|E| log ξ + log I(h^T, 1/ξ)`, with the
/// independence polynomial of the dual interpolated from zero to order
/// `m`. Requires `|ξ| > 2^k` (k the largest edge size) unless `force`.
/// When `h` is small enough the exact value is attached.
pub fn edge_cover_approx(
    h: &Hypergraph,
    xi: Complex64,
    m: usize,
    force: bool,
    limits: &Limits,
) -> Result<ApproxResult> {
    if m < 1 {
        return Err(Error::Invalid("order must be at least 1".into()));
    }
    if let Some(&v) = h.isolated_vertices().first() {
        return Err(Error::IsolatedVertex(v));
    }
    let k = h.max_edge_size();
    let threshold = 2f64.powi(k as i32);
    if xi.norm() <= threshold && !force {
        return Err(Error::OutsideGuarantee(format!(
            "|ξ| = {} must exceed 2^{k} = {threshold}",
            xi.norm()
        )));
    }
    let dual = h.dual();
    let counts = low_order_independent_set_counts(&dual, m, limits)?;
    let a: Vec<Complex64> = counts
        .iter()
        .map(|c| Complex64::new(rational_to_f64(&Rational::from_integer(c.clone())), 0.0))
        .collect();
    let w = xi.inv();
    let ne = h.num_edges();
    let r = interpolate_prefix(&a, w, m >= dual.n())?;
    let mut r = r
        .shift(ne as f64 * xi.ln())
        .with_radius(ne, 1.0 / threshold);
    r.xi = xi.into();
    if h.n() as u32 <= limits.ie_vertices {
        let exact = edge_cover_poly_with(h, limits)?.eval_complex(xi).ln();
        r = r.with_exact(exact);
    }
    Ok(r)
}

/// Approximate `log Z_{L(G)}(ξ, b)` from the edge sets of size at most
/// `m`. Requires `|ξ| < κ²_{Δ,b}` unless `force`. When the graph is small
/// enough the exact value is attached.
pub fn ising_line_approx(
    g: &Graph,
    b: &Rational,
    xi: Complex64,
    m: usize,
    force: bool,
    limits: &Limits,
) -> Result<ApproxResult> {
    if m < 1 {
        return Err(Error::Invalid("order must be at least 1".into()));
    }
    let delta = g.max_degree().max(1);
    let radius = kappa(delta, b)?.powi(2);
    if xi.norm() >= radius && !force {
        return Err(Error::OutsideGuarantee(format!(
            "|ξ| = {} must be below κ² = {radius}",
            xi.norm()
        )));
    }
    let a = low_order_coeffs_ising_line(g, b, m, limits)?;
    let ne = g.num_edges();
    let mut r = interpolate_prefix(&to_complex(&a), xi, m >= ne)?.with_radius(ne, radius);
    if ne as u32 <= limits.subset_exponent {
        let exact = ising_line_graph_poly(g, b)?.eval_complex(xi).ln();
        r = r.with_exact(exact);
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{complete, path};
    use crate::poly::int;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn log_one_plus_z() {
        let mut a = vec![c(1.0), c(1.0)];
        a.resize(31, c(0.0));
        let r = taylor_interpolate(&a, c(0.5))
            .unwrap()
            .with_exact(c(1.5f64.ln()));
        assert!(r.abs_err.unwrap() < 1e-9);
        assert!(!r.diverging);
        assert_eq!(r.trace.len(), 30);
    }

    #[test]
    fn divergence_is_flagged() {
        let mut a = vec![c(1.0), c(1.0)];
        a.resize(21, c(0.0));
        let r = taylor_interpolate(&a, c(-2.0)).unwrap();
        assert!(r.diverging);
    }

    #[test]
    fn coefficient_prefixes() {
        let lim = Limits::default();
        assert_eq!(
            low_order_coeffs_ising_line(&path(3), &int(2), 0, &lim).unwrap(),
            vec![int(1)]
        );
        assert_eq!(
            low_order_coeffs_ising_line(&path(3), &int(2), 1, &lim).unwrap(),
            vec![int(1), int(4)]
        );
        let k3 = complete(3).into_hypergraph();
        let counts = low_order_independent_set_counts(&k3, 2, &lim).unwrap();
        assert_eq!(
            counts,
            vec![BigInt::from(1), BigInt::from(3), BigInt::from(0)]
        );
    }

    #[test]
    fn triangle_edge_cover_at_eight() {
        let k3 = complete(3).into_hypergraph();
        let exact = 704f64.ln();
        for m in 1..=3 {
            let r = edge_cover_approx(&k3, c(8.0), m, false, &Limits::default()).unwrap();
            assert!((r.exact_log.unwrap().re - exact).abs() < 1e-12);
            assert!(r.abs_err.unwrap() <= r.tail_bound.unwrap());
            if m == 3 {
                assert!(r.abs_err.unwrap() < 1e-9);
            }
        }
        assert!(matches!(
            edge_cover_approx(&k3, c(4.0), 2, false, &Limits::default()),
            Err(Error::OutsideGuarantee(_))
        ));
        assert!(edge_cover_approx(&k3, c(4.0), 2, true, &Limits::default()).is_ok());
    }

    #[test]
    fn log_distance_wraps() {
        let a = Complex64::new(1.0, PI - 0.1);
        let b = Complex64::new(1.0, -PI + 0.1);
        assert!((log_distance(a, b) - 0.2).abs() < 1e-12);
    }

    #[test]
    fn budget_is_enforced() {
        let lim = Limits {
            approx_budget: 10,
            ..Limits::default()
        };
        assert!(matches!(
            low_order_coeffs_ising_line(&complete(5), &int(2), 3, &lim),
            Err(Error::CapExceeded { .. })
        ));
    }
}
