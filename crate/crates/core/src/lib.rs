//! Evaluation kernels for the product of modified Bessel functions
//! P_nu(x) = I_nu(x) K_nu(x), executable bound/inequality checks with
//! tolerance-aware verdicts, independent quadrature oracles, grid-sweep
//! verification, and numerical bracketing of the threshold orders of
//! q_nu(x) = P_nu(x) / (1 + |ln x|).

// negated comparisons double as NaN guards throughout the kernels
#![allow(clippy::neg_cmp_op_on_partial_ord)]
// frozen reference values keep their full generated precision
#![allow(clippy::excessive_precision)]

pub mod bounds;
pub mod error;
pub mod eval;
pub mod explore;
pub mod figure;
pub mod quadrature;
pub(crate) mod search;
pub mod specfun;
pub mod verify;

pub use error::{Error, Result};
pub use eval::{EvalResult, MathConstants};

/// Default smallest sample for open left endpoints (intervals like (0, 1]).
/// Overridable through the BESSELPROD_XMIN environment variable.
pub fn open_endpoint_xmin() -> f64 {
    std::env::var("BESSELPROD_XMIN")
        .ok()
        .and_then(|s| s.parse::<f64>().ok())
        .filter(|v| *v > 0.0 && v.is_finite())
        .unwrap_or(1e-6)
}
