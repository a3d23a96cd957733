//! Exact graph polynomials, their complex roots, zero-free regions, and
//! Taylor interpolation of their logarithms.
//!
//! ```
//! use zerograph::graphs::path;
//! use zerograph::partition::ising_line_graph_poly;
//! use zerograph::poly::{certify_real_rooted, int};
//!
//! let z = ising_line_graph_poly(&path(6), &int(2)).unwrap();
//! assert!(certify_real_rooted(&z).unwrap().real_negative());
//! ```
//!
//! See the guide in `book/` for a tour of each module.

pub mod acceptance;
pub mod approx;
pub mod error;
pub mod graphs;
pub mod partition;
pub mod poly;
pub mod regions;

pub use error::{Error, Result};
