//! Edge covers, relaxed edge covers, domination and independence.
//!
//! A loop `{v, v}` covers `v` once. Empty edges can never cover anything
//! and are rejected.

use super::{check_cap, chunked, sum_counts, Limits};
use crate::error::{Error, Result};
use crate::graphs::{Graph, Hypergraph};
use crate::poly::{binomial_row, ExactPoly};
use num::bigint::BigInt;
use num::Zero;

fn reject_empty(h: &Hypergraph) -> Result<()> {
    match h.first_empty_edge() {
        Some(k) => Err(Error::EmptyEdge(k)),
        None => Ok(()),
    }
}

fn mask_width(h: &Hypergraph) -> Result<()> {
    check_cap("vertex bitmask", h.n(), 64)
}

fn from_counts(counts: &[i64]) -> ExactPoly {
    ExactPoly::from_bigints(counts.iter().map(|&c| BigInt::from(c)).collect())
}

/// `Σ_j w_j (1+z)^j`.
fn expand_binomial_powers(weights: &[i64]) -> ExactPoly {
    let mut out = vec![BigInt::zero(); weights.len()];
    for (j, &w) in weights.iter().enumerate() {
        if w == 0 {
            continue;
        }
        for (k, c) in binomial_row(j).into_iter().enumerate() {
            out[k] += c * w;
        }
    }
    ExactPoly::from_bigints(out)
}

/// Edge sets covering every vertex of `free`, counted by size, via
/// `Σ_{T ⊆ free} (-1)^{|T|} (1+z)^{e(T)}` where `e(T)` counts edges
/// avoiding `T`.
fn inclusion_exclusion(h: &Hypergraph, free: &[usize]) -> ExactPoly {
    let mut local = vec![usize::MAX; h.n()];
    for (i, &v) in free.iter().enumerate() {
        local[v] = i;
    }
    let masks: Vec<u64> = h
        .edges()
        .iter()
        .map(|e| {
            e.iter()
                .filter(|&&v| local[v] != usize::MAX)
                .fold(0u64, |m, &v| m | (1 << local[v]))
        })
        .collect();
    let m = masks.len();
    let parts = chunked(free.len() as u32, |range| {
        let mut w = vec![0i64; m + 1];
        for t in range {
            let avoiding = masks.iter().filter(|&&e| e & t == 0).count();
            if t.count_ones() % 2 == 0 {
                w[avoiding] += 1;
            } else {
                w[avoiding] -= 1;
            }
        }
        w
    });
    expand_binomial_powers(&sum_counts(parts))
}

/// Edge cover polynomial `Σ_{F covers V} z^{|F|}`. Isolated vertices make
/// it the zero polynomial.
pub fn edge_cover_poly(h: &Hypergraph) -> Result<ExactPoly> {
    edge_cover_poly_with(h, &Limits::default())
}

pub fn edge_cover_poly_with(h: &Hypergraph, limits: &Limits) -> Result<ExactPoly> {
    reject_empty(h)?;
    check_cap("inclusion-exclusion vertices", h.n(), limits.ie_vertices)?;
    let all: Vec<usize> = (0..h.n()).collect();
    Ok(inclusion_exclusion(h, &all))
}

/// A hypergraph with a relaxed vertex set `S`: only vertices outside `S`
/// need covering. `S` must contain every isolated vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelaxedSpec {
    h: Hypergraph,
    relaxed: Vec<bool>,
}

impl RelaxedSpec {
    pub fn new(h: Hypergraph, s: &[usize]) -> Result<Self> {
        let mut relaxed = vec![false; h.n()];
        for &v in s {
            if v >= h.n() {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: h.n(),
                });
            }
            relaxed[v] = true;
        }
        if let Some(&v) = h.isolated_vertices().iter().find(|&&v| !relaxed[v]) {
            return Err(Error::IsolatedVertex(v));
        }
        Ok(RelaxedSpec { h, relaxed })
    }

    pub fn hypergraph(&self) -> &Hypergraph {
        &self.h
    }

    pub fn relaxed_set(&self) -> Vec<usize> {
        (0..self.h.n()).filter(|&v| self.relaxed[v]).collect()
    }

    /// Vertices that must be covered.
    pub fn free_vertices(&self) -> Vec<usize> {
        (0..self.h.n()).filter(|&v| !self.relaxed[v]).collect()
    }
}

/// `Σ_F z^{|F|}` over edge sets covering every vertex outside `S`.
pub fn relaxed_edge_cover_poly(spec: &RelaxedSpec) -> Result<ExactPoly> {
    relaxed_edge_cover_poly_with(spec, &Limits::default())
}

pub fn relaxed_edge_cover_poly_with(spec: &RelaxedSpec, limits: &Limits) -> Result<ExactPoly> {
    reject_empty(&spec.h)?;
    let free = spec.free_vertices();
    check_cap(
        "inclusion-exclusion vertices",
        free.len(),
        limits.ie_vertices,
    )?;
    Ok(inclusion_exclusion(&spec.h, &free))
}

/// Count edge subsets by size whose union contains `target`.
fn cover_brute(h: &Hypergraph, target: u64, limits: &Limits) -> Result<ExactPoly> {
    reject_empty(h)?;
    mask_width(h)?;
    let m = h.num_edges();
    check_cap("edge subsets", m, limits.subset_exponent)?;
    let masks = h.edge_masks();
    let parts = chunked(m as u32, |range| {
        let mut c = vec![0i64; m + 1];
        for f in range {
            let mut union = 0u64;
            let mut bits = f;
            while bits != 0 {
                union |= masks[bits.trailing_zeros() as usize];
                bits &= bits - 1;
            }
            if union & target == target {
                c[f.count_ones() as usize] += 1;
            }
        }
        c
    });
    Ok(from_counts(&sum_counts(parts)))
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Edge cover polynomial by checking all `2^|E|` edge subsets.
pub fn edge_cover_brute(h: &Hypergraph) -> Result<ExactPoly> {
    mask_width(h)?;
    cover_brute(h, full_mask(h.n()), &Limits::default())
}

pub fn relaxed_edge_cover_brute(spec: &RelaxedSpec) -> Result<ExactPoly> {
    mask_width(&spec.h)?;
    let target = spec.free_vertices().iter().fold(0u64, |m, &v| m | (1 << v));
    cover_brute(&spec.h, target, &Limits::default())
}

/// Domination polynomial: edge covers of the closed-neighbourhood
/// hypergraph.
pub fn domination_poly(g: &Graph) -> Result<ExactPoly> {
    domination_poly_with(g, &Limits::default())
}

pub fn domination_poly_with(g: &Graph, limits: &Limits) -> Result<ExactPoly> {
    edge_cover_poly_with(&g.neighborhood_hypergraph(true)?, limits)
}

/// Total domination polynomial: edge covers of the open-neighbourhood
/// hypergraph. Isolated vertices have no neighbour and are rejected.
pub fn total_domination_poly(g: &Graph) -> Result<ExactPoly> {
    total_domination_poly_with(g, &Limits::default())
}

pub fn total_domination_poly_with(g: &Graph, limits: &Limits) -> Result<ExactPoly> {
    let h = g.neighborhood_hypergraph(false)?;
    if let Some(v) = h.first_empty_edge() {
        return Err(Error::IsolatedVertex(v));
    }
    edge_cover_poly_with(&h, limits)
}

/// Domination (or total domination) polynomial by testing every vertex
/// subset directly.
pub fn domination_brute(g: &Graph, total: bool) -> Result<ExactPoly> {
    let n = g.n();
    check_cap("vertex subsets", n, Limits::default().subset_exponent)?;
    if !g.is_simple() {
        return Err(Error::NotSimple { what: "domination" });
    }
    let watch: Vec<u64> = (0..n)
        .map(|v| {
            let open = g.neighbors(v).iter().fold(0u64, |m, &w| m | (1 << w));
            if total {
                open
            } else {
                open | (1 << v)
            }
        })
        .collect();
    if total {
        if let Some(v) = watch.iter().position(|&w| w == 0) {
            return Err(Error::IsolatedVertex(v));
        }
    }
    let parts = chunked(n as u32, |range| {
        let mut c = vec![0i64; n + 1];
        for s in range {
            if watch.iter().all(|&w| w & s != 0) {
                c[s.count_ones() as usize] += 1;
            }
        }
        c
    });
    Ok(from_counts(&sum_counts(parts)))
}

/// Independence polynomial `Σ_A z^{|A|}` over vertex sets containing no
/// edge, from `I(H,z) = z^{|V|} E(H^T, 1/z)`. Isolated vertices are
/// split off first as factors of `1+z`, so the inclusion–exclusion runs
/// over the `|E|` vertices of the dual.
pub fn independence_poly(h: &Hypergraph) -> Result<ExactPoly> {
    independence_poly_with(h, &Limits::default())
}

pub fn independence_poly_with(h: &Hypergraph, limits: &Limits) -> Result<ExactPoly> {
    reject_empty(h)?;
    let isolated = h.isolated_vertices().len();
    let core = h.without_isolated();
    let cover = edge_cover_poly_with(&core.dual(), limits)?;
    let n = core.n();
    let reversed: Vec<_> = (0..=n).map(|k| cover.coeff(n - k)).collect();
    Ok(&ExactPoly::new(reversed) * &ExactPoly::one_plus_z_pow(isolated))
}

/// Independence polynomial by checking every vertex subset.
pub fn independence_brute(h: &Hypergraph) -> Result<ExactPoly> {
    reject_empty(h)?;
    mask_width(h)?;
    let n = h.n();
    check_cap("vertex subsets", n, Limits::default().subset_exponent)?;
    let masks = h.edge_masks();
    let parts = chunked(n as u32, |range| {
        let mut c = vec![0i64; n + 1];
        for a in range {
            if masks.iter().all(|&e| e & a != e) {
                c[a.count_ones() as usize] += 1;
            }
        }
        c
    });
    Ok(from_counts(&sum_counts(parts)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{complete, cycle, path};

    fn hyper(n: usize, edges: &[&[usize]]) -> Hypergraph {
        Hypergraph::new(n, edges.iter().map(|e| e.to_vec()).collect()).unwrap()
    }

    #[test]
    fn small_edge_covers() {
        let k3 = complete(3).into_hypergraph();
        assert_eq!(
            edge_cover_poly(&k3).unwrap(),
            ExactPoly::from_ints(&[0, 0, 3, 1])
        );
        assert_eq!(
            edge_cover_poly(&path(3).into_hypergraph()).unwrap(),
            ExactPoly::from_ints(&[0, 0, 1])
        );
        let c4 = cycle(4).unwrap().into_hypergraph();
        assert_eq!(
            edge_cover_poly(&c4).unwrap(),
            ExactPoly::from_ints(&[0, 0, 2, 4, 1])
        );
        assert_eq!(
            edge_cover_brute(&c4).unwrap(),
            edge_cover_poly(&c4).unwrap()
        );
    }

    #[test]
    fn loops_cover_once_and_isolated_vertices_kill_covers() {
        let h = hyper(2, &[&[0, 0], &[0, 1]]);
        assert_eq!(
            edge_cover_poly(&h).unwrap(),
            ExactPoly::from_ints(&[0, 1, 1])
        );
        assert_eq!(
            edge_cover_brute(&h).unwrap(),
            ExactPoly::from_ints(&[0, 1, 1])
        );
        let iso = hyper(3, &[&[0, 1]]);
        assert!(edge_cover_poly(&iso).unwrap().is_zero());
        assert_eq!(edge_cover_poly(&hyper(1, &[&[]])), Err(Error::EmptyEdge(0)));
    }

    #[test]
    fn relaxed_covers() {
        let e = hyper(2, &[&[0, 1]]);
        let all = RelaxedSpec::new(e.clone(), &[0, 1]).unwrap();
        assert_eq!(
            relaxed_edge_cover_poly(&all).unwrap(),
            ExactPoly::from_ints(&[1, 1])
        );
        let one = RelaxedSpec::new(e.clone(), &[0]).unwrap();
        assert_eq!(relaxed_edge_cover_poly(&one).unwrap(), ExactPoly::x());
        assert_eq!(relaxed_edge_cover_brute(&one).unwrap(), ExactPoly::x());
        assert_eq!(
            RelaxedSpec::new(hyper(3, &[&[0, 1]]), &[0]),
            Err(Error::IsolatedVertex(2))
        );
    }

    #[test]
    fn domination_examples() {
        let k2 = complete(2);
        assert_eq!(
            domination_poly(&k2).unwrap(),
            ExactPoly::from_ints(&[0, 2, 1])
        );
        assert_eq!(
            total_domination_poly(&k2).unwrap(),
            ExactPoly::from_ints(&[0, 0, 1])
        );
        let p3 = path(3);
        assert_eq!(
            domination_poly(&p3).unwrap(),
            ExactPoly::from_ints(&[0, 1, 3, 1])
        );
        assert_eq!(
            domination_brute(&p3, false).unwrap(),
            ExactPoly::from_ints(&[0, 1, 3, 1])
        );
        let iso = Graph::new(3, &[(0, 1)]).unwrap();
        assert_eq!(total_domination_poly(&iso), Err(Error::IsolatedVertex(2)));
    }

    #[test]
    fn independence_examples() {
        let k3 = complete(3).into_hypergraph();
        assert_eq!(
            independence_poly(&k3).unwrap(),
            ExactPoly::from_ints(&[1, 3])
        );
        assert_eq!(
            independence_brute(&k3).unwrap(),
            ExactPoly::from_ints(&[1, 3])
        );
        let tri = hyper(3, &[&[0, 1, 2]]);
        assert_eq!(
            independence_poly(&tri).unwrap(),
            ExactPoly::from_ints(&[1, 3, 3])
        );
        let with_isolated = hyper(4, &[&[0, 1]]);
        assert_eq!(
            independence_poly(&with_isolated).unwrap(),
            independence_brute(&with_isolated).unwrap()
        );
        let with_loop = hyper(2, &[&[1, 1], &[0, 1]]);
        assert_eq!(
            independence_poly(&with_loop).unwrap(),
            ExactPoly::from_ints(&[1, 1])
        );
    }

    #[test]
    fn caps_are_enforced() {
        let limits = Limits {
            ie_vertices: 3,
            ..Limits::default()
        };
        assert!(matches!(
            edge_cover_poly_with(&path(4).into_hypergraph(), &limits),
            Err(Error::CapExceeded { .. })
        ));
    }
}
