use std::fmt;

/// Errors shared by the numeric kernels and the verification machinery.
#[derive(Clone, Debug, PartialEq)]
pub enum Error {
    /// A parameter lies outside the domain of the requested operation.
    /// The message names the violated constraint.
    Domain(String),
    /// The order is outside the range this library supports.
    UnsupportedOrder { family: &'static str, nu: f64 },
    /// Gamma evaluated at a non-positive integer.
    GammaPole(f64),
    /// An iterative scheme did not converge; carries the best estimate.
    Convergence {
        context: &'static str,
        best: f64,
        abs_err: f64,
    },
    /// The integrand returned a non-finite value inside the region.
    IntegrandNonFinite { at: f64 },
    /// Malformed request (empty grid, bad interval, unknown id, ...).
    Usage(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Domain(msg) => write!(f, "domain error: {msg}"),
            Self::UnsupportedOrder { family, nu } => {
                write!(f, "unsupported order nu = {nu} for {family}")
            }
            Self::GammaPole(x) => write!(f, "gamma pole at non-positive integer x = {x}"),
            Self::Convergence {
                context,
                best,
                abs_err,
            } => write!(
                f,
                "{context} failed to converge (best estimate {best}, error ~{abs_err})"
            ),
            Self::IntegrandNonFinite { at } => {
                write!(f, "integrand returned a non-finite value at t = {at}")
            }
            Self::Usage(msg) => write!(f, "usage error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Self::Domain(msg.into())
    }

    pub fn usage(msg: impl Into<String>) -> Self {
        Self::Usage(msg.into())
    }
}
