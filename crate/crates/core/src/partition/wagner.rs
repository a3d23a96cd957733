//! The subgraph counting polynomial
//! `Z_W(H, λ, u; x) = Σ_{F ⊆ E} λ^F Π_v u^(v)_{d_F(v)} x_v^{d_F(v)}`
//! evaluated numerically by enumerating edge subsets.
//!
//! `d_F(v)` counts incidences, so a loop contributes 2.

use super::{check_cap, chunked, Limits};
use crate::error::{Error, Result};
use crate::graphs::{Graph, Hypergraph};
use num::complex::Complex64;
use num::{One, Zero};

#[derive(Debug, Clone, PartialEq)]
pub struct WagnerWeights {
    /// One weight per edge.
    pub lambda: Vec<Complex64>,
    /// Per vertex, `d_H(v) + 1` weights indexed by `d_F(v)`.
    pub u: Vec<Vec<Complex64>>,
    /// One activity per vertex.
    pub x: Vec<Complex64>,
}

impl WagnerWeights {
    /// Weights under which `Z_W` is the edge cover polynomial at `ξ`:
    /// `λ = ξ`, `u^(v) = (0, 1, …, 1)`, `x = 1`.
    pub fn edge_cover(h: &Hypergraph, xi: Complex64) -> Self {
        let one = Complex64::one();
        WagnerWeights {
            lambda: vec![xi; h.num_edges()],
            u: h.degrees()
                .iter()
                .map(|&d| {
                    let mut w = vec![one; d + 1];
                    w[0] = Complex64::zero();
                    w
                })
                .collect(),
            x: vec![one; h.n()],
        }
    }

    /// Weights `λ = 1`, `u^(v)_i = b_v^{−C(d−i,2)−C(i,2)}`, `x = activity`.
    pub fn ising_line(h: &Hypergraph, b: &[f64], activity: &[Complex64]) -> Self {
        WagnerWeights {
            lambda: vec![Complex64::one(); h.num_edges()],
            u: h.degrees()
                .iter()
                .zip(b)
                .map(|(&d, &bv)| {
                    (0..=d)
                        .map(|i| Complex64::new(bv.powi(-((c2(d - i) + c2(i)) as i32)), 0.0))
                        .collect()
                })
                .collect(),
            x: activity.to_vec(),
        }
    }
}

fn c2(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

pub fn wagner_zw_eval(h: &Hypergraph, w: &WagnerWeights) -> Result<Complex64> {
    wagner_zw_eval_with(h, w, &Limits::default())
}

pub fn wagner_zw_eval_with(
    h: &Hypergraph,
    w: &WagnerWeights,
    limits: &Limits,
) -> Result<Complex64> {
    let m = h.num_edges();
    check_cap("edge subsets", m, limits.subset_exponent.min(63))?;
    if w.lambda.len() != m {
        return Err(Error::Invalid(format!(
            "{} edge weights for {m} edges",
            w.lambda.len()
        )));
    }
    if w.x.len() != h.n() || w.u.len() != h.n() {
        return Err(Error::Invalid(
            "vertex weights do not match vertex count".into(),
        ));
    }
    let degrees = h.degrees();
    if let Some(v) = (0..h.n()).find(|&v| w.u[v].len() != degrees[v] + 1) {
        return Err(Error::Invalid(format!(
            "vertex {v} needs {} u-weights, got {}",
            degrees[v] + 1,
            w.u[v].len()
        )));
    }
    // x_v^k for every k up to the degree
    let xpow: Vec<Vec<Complex64>> = (0..h.n())
        .map(|v| {
            let mut p = vec![Complex64::one(); degrees[v] + 1];
            for k in 1..p.len() {
                p[k] = p[k - 1] * w.x[v];
            }
            p
        })
        .collect();
    let edges = h.edges();
    let parts = chunked(m as u32, |range| {
        let mut f = vec![0usize; h.n()];
        let mut acc = Complex64::zero();
        for set in range {
            f.iter_mut().for_each(|x| *x = 0);
            let mut term = Complex64::one();
            let mut bits = set;
            while bits != 0 {
                let e = bits.trailing_zeros() as usize;
                term *= w.lambda[e];
                for &v in &edges[e] {
                    f[v] += 1;
                }
                bits &= bits - 1;
            }
            for v in 0..h.n() {
                term *= w.u[v][f[v]] * xpow[v][f[v]];
            }
            acc += term;
        }
        acc
    });
    Ok(parts.into_iter().fold(Complex64::zero(), |a, b| a + b))
}

/// Value of the multivariate line-graph Ising function, with a flag set
/// when some `b_v < 1` puts the point outside the stability hypotheses.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FEval {
    pub value: Complex64,
    pub outside_hypotheses: bool,
}

/// `Σ_{F⊆E} Π_v b_v^{−C(d(v)−d_F(v),2)−C(d_F(v),2)} λ_v^{d_F(v)}`.
pub fn multivariate_f_eval(g: &Graph, b: &[f64], lambda: &[Complex64]) -> Result<FEval> {
    multivariate_f_eval_with(g, b, lambda, &Limits::default())
}

pub fn multivariate_f_eval_with(
    g: &Graph,
    b: &[f64],
    lambda: &[Complex64],
    limits: &Limits,
) -> Result<FEval> {
    if b.len() != g.n() || lambda.len() != g.n() {
        return Err(Error::Invalid("one b and one λ per vertex required".into()));
    }
    if let Some(bad) = b.iter().find(|x| !(x.is_finite() && **x > 0.0)) {
        return Err(Error::Invalid(format!("b_v must be positive, got {bad}")));
    }
    let h = g.as_hypergraph();
    let value = wagner_zw_eval_with(h, &WagnerWeights::ising_line(h, b, lambda), limits)?;
    Ok(FEval {
        value,
        outside_hypotheses: b.iter().any(|&x| x < 1.0),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{complete, path};
    use crate::partition::{edge_cover_poly, ising_line_graph_poly};
    use crate::poly::int;

    #[test]
    fn single_edge_counts_two_subsets() {
        let h = Hypergraph::new(2, vec![vec![0, 1]]).unwrap();
        let one = Complex64::one();
        let w = WagnerWeights {
            lambda: vec![one],
            u: vec![vec![one; 2]; 2],
            x: vec![one; 2],
        };
        assert_eq!(wagner_zw_eval(&h, &w).unwrap(), Complex64::new(2.0, 0.0));
    }

    #[test]
    fn edge_cover_specialisation() {
        let h = complete(4).into_hypergraph();
        let xi = Complex64::new(-1.5, 0.75);
        let direct = edge_cover_poly(&h).unwrap().eval_complex(xi);
        let zw = wagner_zw_eval(&h, &WagnerWeights::edge_cover(&h, xi)).unwrap();
        assert!((direct - zw).norm() < 1e-10 * direct.norm());
    }

    #[test]
    fn line_graph_specialisation() {
        let g = path(4);
        let z = Complex64::new(0.25, 0.0);
        let b = 2.0;
        let el: usize = g.degrees().iter().map(|&d| c2(d)).sum();
        let f = multivariate_f_eval(&g, &[b; 4], &[z.sqrt(); 4]).unwrap();
        let exact = ising_line_graph_poly(&g, &int(2)).unwrap().eval_complex(z);
        assert!((f.value * b.powi(el as i32) - exact).norm() < 1e-12);
        assert!(!f.outside_hypotheses);
    }

    #[test]
    fn zero_activity_leaves_empty_set() {
        let g = complete(3);
        let f = multivariate_f_eval(&g, &[1.0; 3], &[Complex64::zero(); 3]).unwrap();
        assert_eq!(f.value, Complex64::one());
        let flagged = multivariate_f_eval(&g, &[0.5, 1.0, 1.0], &[Complex64::one(); 3]).unwrap();
        assert!(flagged.outside_hypotheses);
    }

    #[test]
    fn weight_shapes_are_checked() {
        let h = Hypergraph::new(2, vec![vec![0, 1]]).unwrap();
        let one = Complex64::one();
        let w = WagnerWeights {
            lambda: vec![one],
            u: vec![vec![one; 3], vec![one; 2]],
            x: vec![one; 2],
        };
        assert!(wagner_zw_eval(&h, &w).is_err());
    }
}
