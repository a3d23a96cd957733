//! Exact polynomials over the rationals, symbolic-`b` polynomials, the
//! coefficient-level compositions, and root finding with exact
//! real-rootedness certificates.

mod bsym;
mod compose;
mod exact;
pub mod json;
mod roots;
mod sturm;

pub use bsym::{BSymPoly, Laurent};
pub use compose::{asano_contract, log_taylor, log_taylor_exact, schur_szego, SeriesScalar};
pub use exact::{
    binomial, binomial_row, int, parse_rational, rat, rational_to_f64, ExactPoly, Rational,
};
pub use roots::{
    aberth, backward_error, find_roots, find_roots_complex, Certified, RootOptions, RootSet,
};
pub use sturm::{certify_real_rooted, count_roots_in, RealRootCertificate, SturmSequence};
