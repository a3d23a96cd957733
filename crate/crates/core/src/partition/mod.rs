//! Partition functions and graph polynomials.
//!
//! Each polynomial has a fast exact algorithm and, where the fast one is
//! not plain enumeration, a brute-force oracle over all subsets. Every
//! enumeration is bounded by [`Limits`]; exceeding a cap is an error,
//! never a silent truncation.
//!
//! Large subset spaces are split into fixed chunks that run in parallel
//! and are reduced in chunk order, so results never depend on the thread
//! count.

mod cover;
mod ising;
mod wagner;

pub use cover::{
    domination_brute, domination_poly, domination_poly_with, edge_cover_brute, edge_cover_poly,
    edge_cover_poly_with, independence_brute, independence_poly, independence_poly_with,
    relaxed_edge_cover_brute, relaxed_edge_cover_poly, relaxed_edge_cover_poly_with,
    total_domination_poly, total_domination_poly_with, RelaxedSpec,
};
pub use ising::{
    ising_counts, ising_line_graph_poly, ising_line_graph_poly_with, ising_line_graph_sym,
    ising_line_graph_sym_with, ising_poly, ising_poly_sym, ising_poly_sym_with, kappa, key_poly,
    key_poly_report, key_recursion_holds, maxcut_poly, maxcut_poly_with, CutCounts, KeyPolyReport,
};
pub use wagner::{
    multivariate_f_eval, multivariate_f_eval_with, wagner_zw_eval, wagner_zw_eval_with, FEval,
    WagnerWeights,
};

use crate::error::{Error, Result};
use rayon::prelude::*;
use std::ops::Range;

/// Enumeration caps. Exponents are base-2 logarithms of subset counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest `n` for plain `2^n` subset enumeration.
    pub subset_exponent: u32,
    /// Largest vertex count for inclusion–exclusion edge covers.
    pub ie_vertices: u32,
    /// Largest number of bounded-size subsets visited by the low-order
    /// coefficient extractors.
    pub approx_budget: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            subset_exponent: 24,
            ie_vertices: 30,
            approx_budget: 100_000_000,
        }
    }
}

pub(crate) fn check_cap(what: &'static str, needed: usize, cap: u32) -> Result<()> {
    if needed > cap as usize {
        return Err(Error::CapExceeded {
            what,
            needed: needed as u64,
            cap: cap as u64,
        });
    }
    Ok(())
}

const CHUNK_BITS: u32 = 14;

/// Run `f` over `0..2^bits` split into fixed-size ranges; results come
/// back in range order.
pub(crate) fn chunked<T, F>(bits: u32, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(Range<u64>) -> T + Sync + Send,
{
    let total = 1u64 << bits;
    if bits <= CHUNK_BITS {
        return vec![f(0..total)];
    }
    let size = 1u64 << CHUNK_BITS;
    (0..total >> CHUNK_BITS)
        .into_par_iter()
        .map(|c| f(c * size..(c + 1) * size))
        .collect()
}

/// Element-wise sum of equal-length count vectors.
pub(crate) fn sum_counts(parts: Vec<Vec<i64>>) -> Vec<i64> {
    let mut it = parts.into_iter();
    let mut acc = it.next().unwrap_or_default();
    for p in it {
        for (a, b) in acc.iter_mut().zip(p) {
            *a += b;
        }
    }
    acc
}
