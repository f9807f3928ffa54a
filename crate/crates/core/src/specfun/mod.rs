//! Scalar special-function kernels: Gamma, J_nu, I_nu, K_nu, modified Struve
//! L_nu, the overflow-safe product I_mu K_nu, and logarithmic derivatives.

pub mod gamma;
pub(crate) mod ik;
pub(crate) mod jy;
pub(crate) mod struve;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::eval::EvalResult;

pub use gamma::gamma_fn;
pub use jy::landau_c_numeric;

pub(crate) use ik::{cf1_i, i_hat_any, ik_scaled, k_hat_any, ln_besseli_series};
pub(crate) use jy::bessel_j;
pub(crate) use struve::{i_minus_struve_l, struve_l};

/// The four Bessel-type families this library evaluates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BesselFamily {
    /// Bessel function of the first kind.
    J,
    /// Modified Bessel function of the first kind.
    I,
    /// Modified Bessel function of the second kind.
    K,
    /// Modified Struve function of the first kind.
    L,
}

impl fmt::Display for BesselFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::J => write!(f, "J"),
            Self::I => write!(f, "I"),
            Self::K => write!(f, "K"),
            Self::L => write!(f, "L"),
        }
    }
}

impl FromStr for BesselFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "J" | "j" => Ok(Self::J),
            "I" | "i" => Ok(Self::I),
            "K" | "k" => Ok(Self::K),
            "L" | "l" => Ok(Self::L),
            other => Err(Error::usage(format!("unknown Bessel family '{other}'"))),
        }
    }
}

const LN_F64_MAX: f64 = 709.0;

fn pack_ln(m: f64, ln_extra_beyond_value: f64, rel_err: f64) -> EvalResult {
    // m * exp(ln_extra_beyond_value), returned unscaled when representable
    let ln_total = m.abs().ln() + ln_extra_beyond_value;
    if ln_total.abs() < LN_F64_MAX && ln_extra_beyond_value.abs() < LN_F64_MAX {
        let v = m * ln_extra_beyond_value.exp();
        EvalResult::unscaled(v, v.abs() * rel_err)
    } else {
        EvalResult::with_scale(m, m.abs() * rel_err, ln_extra_beyond_value)
    }
}

/// Evaluate one of J, I, K, L at real order `nu` and argument `x >= 0`.
///
/// With `scaled`, I returns e^{-x} I_nu(x) and K returns e^{x} K_nu(x), the
/// scale exponent recording what was removed (plus any additional exponent
/// needed to keep extreme-order values representable). Scaling is not defined
/// for J or L. Supported orders: |nu| <= 60 for K and J; nu > -1 (plus exact
/// negative integers) for I; nu > -1/2 for L.
pub fn bessel(family: BesselFamily, nu: f64, x: f64, scaled: bool) -> Result<EvalResult> {
    if x < 0.0 || !x.is_finite() {
        return Err(Error::domain(format!(
            "bessel({family}) requires x >= 0, got {x}"
        )));
    }
    if scaled && matches!(family, BesselFamily::J | BesselFamily::L) {
        return Err(Error::usage(
            "scaled evaluation is defined for I and K only".to_string(),
        ));
    }
    if x == 0.0 {
        return match family {
            BesselFamily::J | BesselFamily::I if nu == 0.0 => Ok(EvalResult::exact(1.0)),
            BesselFamily::J | BesselFamily::I if nu > 0.0 => Ok(EvalResult::exact(0.0)),
            BesselFamily::J | BesselFamily::I => Err(Error::domain(
                "x = 0 requires nu >= 0 for J and I".to_string(),
            )),
            BesselFamily::K | BesselFamily::L => Err(Error::domain(format!(
                "bessel({family}) requires x > 0"
            ))),
        };
    }
    match family {
        BesselFamily::J => {
            if nu.abs() > ik::MAX_ORDER {
                return Err(Error::UnsupportedOrder {
                    family: "Bessel J",
                    nu,
                });
            }
            let v = bessel_j(nu, x)?;
            Ok(EvalResult::unscaled(v, v.abs() * 2e-13 + 1e-15))
        }
        BesselFamily::I => {
            let (i_hat, rel) = i_hat_any(nu, x)?;
            if scaled {
                Ok(EvalResult::with_scale(
                    i_hat.m,
                    i_hat.m.abs() * rel,
                    x + i_hat.log_extra,
                ))
            } else {
                Ok(pack_ln(i_hat.m, x + i_hat.log_extra, rel))
            }
        }
        BesselFamily::K => {
            let (k_hat, rel) = k_hat_any(nu, x)?;
            if scaled {
                Ok(EvalResult::with_scale(
                    k_hat.m,
                    k_hat.m.abs() * rel,
                    -x + k_hat.log_extra,
                ))
            } else {
                Ok(pack_ln(k_hat.m, -x + k_hat.log_extra, rel))
            }
        }
        BesselFamily::L => {
            let (v, abs_err) = struve_l(nu, x)?;
            Ok(EvalResult::unscaled(v, abs_err + v.abs() * 1e-13))
        }
    }
}

/// K_nu(x) * I_mu(x), formed from the scaled kernels so the exponential
/// factors cancel exactly. The equal-order product P_nu(x) = I_nu K_nu is the
/// call `mu == nu`. Finite and unscaled whenever the true product is
/// representable; wildly mismatched orders can push the product itself out of
/// f64 range, in which case the result comes back scaled and flagged.
pub fn product_ik(nu: f64, mu: f64, x: f64) -> Result<EvalResult> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain(format!(
            "product_ik requires x > 0, got {x}"
        )));
    }
    let (k_hat, k_rel) = k_hat_any(nu, x)?;
    let (i_hat, i_rel) = i_hat_any(mu, x)?;
    let prod = i_hat.mul(&k_hat);
    let rel = i_rel + k_rel + 4.0 * f64::EPSILON;
    Ok(pack_ln(prod.m, prod.log_extra, rel))
}

/// x F'_nu(x) / F_nu(x) for F in {I, K}, computed through ratio continued
/// fractions rather than differencing:
///   x I'/I = nu + x I_{nu+1}/I_nu,   x K'/K = nu - x K_{nu+1}/K_nu .
pub fn log_derivative(family: BesselFamily, nu: f64, x: f64) -> Result<EvalResult> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain(format!(
            "log_derivative requires x > 0, got {x}"
        )));
    }
    match family {
        BesselFamily::I => {
            if nu <= -1.0 {
                return Err(Error::UnsupportedOrder {
                    family: "log-derivative of I",
                    nu,
                });
            }
            let ratio = cf1_i(nu, x)?;
            let v = nu + x * ratio;
            Ok(EvalResult::unscaled(v, v.abs() * 1e-12 + 1e-14))
        }
        BesselFamily::K => {
            // K is even in the order, so the ratio is taken at |nu|.
            let a = nu.abs();
            let ik = ik_scaled(a, x)?;
            let v = a - x * (ik.k1_hat.m / ik.k_hat.m);
            Ok(EvalResult::unscaled(v, v.abs() * 1e-12 + 1e-14))
        }
        _ => Err(Error::usage(
            "log_derivative is defined for I and K only".to_string(),
        )),
    }
}
