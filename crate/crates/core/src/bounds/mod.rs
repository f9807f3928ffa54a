//! Every bound and inequality as an evaluable expression and as a
//! tolerance-aware predicate producing a `BoundRecord` verdict.

pub mod registry;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::eval::{B_LANDAU, C_LANDAU, EULER_GAMMA};
use crate::specfun::gamma::{gamma, ln_gamma};
use crate::specfun::{self, BesselFamily};

pub use registry::{entry, in_domain, registry_table, InequalityId, RegistryEntry, Strictness};

/// Blanket relative allowance for kernel-derived quantities inside verdicts.
const KERNEL_REL: f64 = 2e-11;

/// Outcome of one inequality check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "holds")]
    Holds,
    #[serde(rename = "violated")]
    Violated,
    #[serde(rename = "indeterminate")]
    Indeterminate,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Holds => write!(f, "holds"),
            Self::Violated => write!(f, "violated"),
            Self::Indeterminate => write!(f, "indeterminate"),
        }
    }
}

impl FromStr for Verdict {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "holds" => Ok(Self::Holds),
            "violated" => Ok(Self::Violated),
            "indeterminate" => Ok(Self::Indeterminate),
            other => Err(Error::usage(format!("unknown verdict '{other}'"))),
        }
    }
}

/// One inequality check at one parameter point. The margin is oriented so
/// that a positive margin always means the statement is satisfied; `mu` is
/// None for single-order statements.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundRecord {
    pub id: InequalityId,
    pub nu: f64,
    pub mu: Option<f64>,
    pub x: f64,
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub diagnostic: Option<String>,
}

struct MarginEval {
    lhs: f64,
    rhs: f64,
    margin: f64,
    err: f64,
}

fn product(nu: f64, mu: f64, x: f64) -> Result<(f64, f64)> {
    let p = specfun::product_ik(nu, mu, x)?;
    if p.scaled {
        return Err(Error::domain(format!(
            "product K_{nu} I_{mu} at x = {x} is outside f64 range"
        )));
    }
    Ok((p.value, p.abs_err.max(p.value.abs() * KERNEL_REL)))
}

fn p_equal(nu: f64, x: f64) -> Result<(f64, f64)> {
    product(nu, nu, x)
}

/// Landau-constant upper bounds (U1, U2, U3) on K_nu(x) I_mu(x).
pub fn upper_bound(id: InequalityId, nu: f64, mu: f64, x: f64) -> Result<f64> {
    match id {
        InequalityId::U1 => {
            if !(mu > nu && nu > 0.0) {
                return Err(Error::domain(format!(
                    "U1 requires mu > nu > 0, got nu = {nu}, mu = {mu}"
                )));
            }
            Ok(B_LANDAU / ((mu - nu) * (mu + nu).cbrt()))
        }
        InequalityId::U2 => {
            if !(mu >= nu && nu > 0.0) {
                return Err(Error::domain(format!(
                    "U2 requires mu >= nu > 0, got nu = {nu}, mu = {mu}"
                )));
            }
            if !(x > 0.0) {
                return Err(Error::domain(format!("U2 requires x > 0, got {x}")));
            }
            let c = 2.0 * std::f64::consts::PI.powf(1.5)
                / (3.0f64.sqrt() * gamma(2.0 / 3.0) * gamma(5.0 / 6.0));
            Ok(c * C_LANDAU / (2.0 * x).cbrt())
        }
        InequalityId::U3 => {
            let delta = mu - nu;
            if !(delta > -1.0 / 3.0) {
                return Err(Error::domain(format!(
                    "U3 requires mu - nu > -1/3, got {delta}"
                )));
            }
            if !(mu + nu > -1.0) {
                return Err(Error::domain(format!(
                    "U3 requires mu + nu > -1, got {}",
                    mu + nu
                )));
            }
            if !(x > 0.0) {
                return Err(Error::domain(format!("U3 requires x > 0, got {x}")));
            }
            Ok(gamma(2.0 / 3.0) * gamma((1.0 + 3.0 * delta) / 6.0) * C_LANDAU
                / (2.0f64.powf(2.0 / 3.0) * gamma((5.0 + 3.0 * delta) / 6.0) * (2.0 * x).cbrt()))
        }
        other => Err(Error::usage(format!("{other} is not an upper-bound id"))),
    }
}

/// Lower bounds (L1, L2, L3) on P_nu(x) = I_nu(x) K_nu(x).
pub fn lower_bound(id: InequalityId, nu: f64, x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain(format!("lower bounds require x > 0, got {x}")));
    }
    match id {
        InequalityId::L1 => {
            if !(nu > 0.0) {
                return Err(Error::domain(format!("L1 requires nu > 0, got {nu}")));
            }
            let (d, _) = specfun::i_minus_struve_l(nu, 2.0 * x)?;
            Ok(gamma(nu) / (2.0 * x.powf(nu)) * d)
        }
        InequalityId::L2 => {
            if !(nu > 0.0) {
                return Err(Error::domain(format!("L2 requires nu > 0, got {nu}")));
            }
            Ok(0.5 / nu
                - 2.0 * x * gamma(nu)
                    / (std::f64::consts::PI.sqrt() * (1.0 + 2.0 * nu) * gamma(nu + 0.5)))
        }
        InequalityId::L3 => {
            if !(nu > 1.0) {
                return Err(Error::domain(format!("L3 requires nu > 1, got {nu}")));
            }
            Ok(0.5 / nu - x * x / (4.0 * nu * (nu * nu - 1.0)))
        }
        other => Err(Error::usage(format!("{other} is not a lower-bound id"))),
    }
}

/// f_nu(x) = P_nu(x) + ln x. Increasing in x for nu >= 0; evaluable for
/// nu > -1.
pub fn f_shifted_log(nu: f64, x: f64) -> Result<f64> {
    let (p, _) = p_equal(nu, x)?;
    Ok(p + x.ln())
}

/// P_nu(x) - 1/(2x) - 1/(16 x^2); negative on nu >= 1/2.
pub fn tail_gap(nu: f64, x: f64) -> Result<f64> {
    let (p, _) = p_equal(nu, x)?;
    Ok(p - 0.5 / x - 1.0 / (16.0 * x * x))
}

/// g_nu(x) = 2 x P_nu(x) - 1 - 1/(8x); increasing to 0 for nu >= 1/2.
pub fn g_fn(nu: f64, x: f64) -> Result<f64> {
    let (p, _) = p_equal(nu, x)?;
    Ok(2.0 * x * p - 1.0 - 1.0 / (8.0 * x))
}

/// q_nu(x) = P_nu(x) / (1 + |ln x|).
pub fn q_ratio(nu: f64, x: f64) -> Result<f64> {
    if !(nu > -1.0) {
        return Err(Error::domain(format!("q_nu requires nu > -1, got {nu}")));
    }
    let (p, _) = p_equal(nu, x)?;
    Ok(p / (1.0 + x.ln().abs()))
}

/// ln of the order-normalised product
/// CalP_nu(x) = sqrt(pi) Gamma(nu+1/2) / (2 x^nu) * P_nu(x).
pub fn ln_cal_p(nu: f64, x: f64) -> Result<f64> {
    if !(nu > -0.5) {
        return Err(Error::domain(format!("CalP requires nu > -1/2, got {nu}")));
    }
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain(format!("CalP requires x > 0, got {x}")));
    }
    let p = specfun::product_ik(nu, nu, x)?;
    let ln_p = p.value.ln() + p.scale_exponent;
    Ok(0.5 * std::f64::consts::PI.ln() + ln_gamma(nu + 0.5)
        - std::f64::consts::LN_2
        - nu * x.ln()
        + ln_p)
}

/// CalP_nu(x) itself (always positive).
pub fn cal_p(nu: f64, x: f64) -> Result<f64> {
    Ok(ln_cal_p(nu, x)?.exp())
}

/// Family selector for the Turan determinant.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TuranFamily {
    P,
    I,
    K,
}

impl FromStr for TuranFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "P" | "p" => Ok(Self::P),
            "I" | "i" => Ok(Self::I),
            "K" | "k" => Ok(Self::K),
            other => Err(Error::usage(format!("unknown Turan family '{other}'"))),
        }
    }
}

fn bessel_unscaled(family: BesselFamily, nu: f64, x: f64) -> Result<f64> {
    let r = specfun::bessel(family, nu, x, false)?;
    if r.scaled {
        return Err(Error::domain(format!(
            "{family}_{nu}({x}) is outside f64 range"
        )));
    }
    Ok(r.value)
}

/// F_nu^2(x) - F_{nu-1}(x) F_{nu+1}(x) for F in {P, I, K}.
pub fn turan_delta(family: TuranFamily, nu: f64, x: f64) -> Result<f64> {
    match family {
        TuranFamily::P => {
            let (p0, _) = p_equal(nu, x)?;
            let (pm, _) = p_equal(nu - 1.0, x)?;
            let (pp, _) = p_equal(nu + 1.0, x)?;
            Ok(p0 * p0 - pm * pp)
        }
        TuranFamily::I => {
            let c = bessel_unscaled(BesselFamily::I, nu, x)?;
            let m = bessel_unscaled(BesselFamily::I, nu - 1.0, x)?;
            let p = bessel_unscaled(BesselFamily::I, nu + 1.0, x)?;
            Ok(c * c - m * p)
        }
        TuranFamily::K => {
            let c = bessel_unscaled(BesselFamily::K, nu, x)?;
            let m = bessel_unscaled(BesselFamily::K, nu - 1.0, x)?;
            let p = bessel_unscaled(BesselFamily::K, nu + 1.0, x)?;
            Ok(c * c - m * p)
        }
    }
}

/// The two-sided Turan bracket around turan_delta(P, nu, x):
/// upper P^2/(nu+1) for nu > 0; lower P^2/(1-nu) only when nu > 1.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TuranBracket {
    pub lower: Option<f64>,
    pub upper: f64,
}

pub fn combined_turan_bounds(nu: f64, x: f64) -> Result<TuranBracket> {
    if !(nu > 0.0) {
        return Err(Error::domain(format!(
            "combined Turan bounds require nu > 0, got {nu}"
        )));
    }
    let (p, _) = p_equal(nu, x)?;
    let upper = p * p / (nu + 1.0);
    let lower = if nu > 1.0 {
        Some(p * p / (1.0 - nu))
    } else {
        None
    };
    Ok(TuranBracket { lower, upper })
}

fn eval_margin(id: InequalityId, nu: f64, mu: Option<f64>, x: f64) -> Result<MarginEval> {
    use InequalityId::*;
    match id {
        U1 | U2 | U3 => {
            let m = mu.expect("mu required for U bounds");
            let (p, perr) = product(nu, m, x)?;
            let b = upper_bound(id, nu, m, x)?;
            Ok(MarginEval {
                lhs: p,
                rhs: b,
                margin: b - p,
                err: perr + b.abs() * 1e-13,
            })
        }
        L1 | L2 | L3 => {
            let (p, perr) = p_equal(nu, x)?;
            let (b, berr) = match id {
                L1 => {
                    let (d, derr) = specfun::i_minus_struve_l(nu, 2.0 * x)?;
                    let coef = gamma(nu) / (2.0 * x.powf(nu));
                    (coef * d, coef.abs() * derr + (coef * d).abs() * 1e-13)
                }
                _ => {
                    let b = lower_bound(id, nu, x)?;
                    (b, b.abs() * 1e-13 + (0.5 / nu) * 1e-14)
                }
            };
            Ok(MarginEval {
                lhs: b,
                rhs: p,
                margin: p - b,
                err: perr + berr,
            })
        }
        T1 => {
            let (px, pxe) = p_equal(nu, x)?;
            let (p1, p1e) = p_equal(nu, 1.0)?;
            let fx = px + x.ln();
            let f1 = p1;
            let upper = f1 - fx;
            let (margin, lhs, rhs) = if nu == 0.0 {
                let low = fx - (std::f64::consts::LN_2 - EULER_GAMMA);
                if low < upper {
                    (low, std::f64::consts::LN_2 - EULER_GAMMA, fx)
                } else {
                    (upper, fx, f1)
                }
            } else {
                (upper, fx, f1)
            };
            Ok(MarginEval {
                lhs,
                rhs,
                margin,
                err: pxe + p1e + (fx.abs() + 1.0) * 1e-15,
            })
        }
        T2 => {
            let (p, perr) = p_equal(nu, x)?;
            let lhs = p - 0.5 / x;
            let rhs = 1.0 / (16.0 * x * x);
            Ok(MarginEval {
                lhs,
                rhs,
                margin: rhs - lhs,
                err: perr + (0.5 / x + rhs) * 4.0 * f64::EPSILON,
            })
        }
        T3 => {
            let qx = q_ratio(nu, x)?;
            let q1 = q_ratio(nu, 1.0)?;
            Ok(MarginEval {
                lhs: qx,
                rhs: q1,
                margin: q1 - qx,
                err: (qx.abs() + q1.abs()) * KERNEL_REL,
            })
        }
        TP => {
            let delta = turan_delta(TuranFamily::P, nu, x)?;
            let (p, _) = p_equal(nu, x)?;
            let rhs = p * p / (nu + 0.5);
            Ok(MarginEval {
                lhs: delta,
                rhs,
                margin: rhs - delta,
                err: (p * p) * 4.0 * KERNEL_REL,
            })
        }
        TI => {
            // scaled frame: every term carries e^{2x} > 0, verdict unchanged
            let (ic, _) = specfun::i_hat_any(nu, x)?;
            let (im, _) = specfun::i_hat_any(nu - 1.0, x)?;
            let (ip, _) = specfun::i_hat_any(nu + 1.0, x)?;
            if ic.log_extra != 0.0 || im.log_extra != 0.0 || ip.log_extra != 0.0 {
                return Err(Error::domain(
                    "I Turan check out of plain f64 range".to_string(),
                ));
            }
            let delta = ic.m * ic.m - im.m * ip.m;
            let rhs = ic.m * ic.m / (nu + 1.0);
            let err = ic.m * ic.m * 4.0 * KERNEL_REL;
            Ok(MarginEval {
                lhs: delta,
                rhs,
                margin: delta.min(rhs - delta),
                err,
            })
        }
        TK => {
            // scaled frame: common factor e^{-2x} > 0
            let (kc, _) = specfun::k_hat_any(nu, x)?;
            let (km, _) = specfun::k_hat_any(nu - 1.0, x)?;
            let (kp, _) = specfun::k_hat_any(nu + 1.0, x)?;
            if kc.log_extra != km.log_extra || km.log_extra != kp.log_extra {
                return Err(Error::domain(
                    "K Turan check out of plain f64 range".to_string(),
                ));
            }
            let delta = kc.m * kc.m - km.m * kp.m;
            let right = -delta;
            let margin = if nu.abs() > 1.0 {
                let left = delta - kc.m * kc.m / (1.0 - nu.abs());
                right.min(left)
            } else {
                right
            };
            Ok(MarginEval {
                lhs: delta,
                rhs: 0.0,
                margin,
                err: kc.m * kc.m * 4.0 * KERNEL_REL,
            })
        }
        TC => {
            let delta = turan_delta(TuranFamily::P, nu, x)?;
            let b = combined_turan_bounds(nu, x)?;
            let up = b.upper - delta;
            let margin = match b.lower {
                Some(lo) => up.min(delta - lo),
                None => up,
            };
            Ok(MarginEval {
                lhs: delta,
                rhs: b.upper,
                margin,
                err: b.upper.abs() * (nu + 1.0) * 4.0 * KERNEL_REL,
            })
        }
        LD => {
            let ldi = specfun::log_derivative(BesselFamily::I, nu, x)?.value;
            let ldk = specfun::log_derivative(BesselFamily::K, nu, x)?.value;
            let root = (x * x + nu * nu).sqrt();
            let mut margin = (ldi - nu).min(root - ldi).min(-root - ldk);
            if nu >= 0.5 {
                margin = margin.min(ldk + nu + x);
            }
            Ok(MarginEval {
                lhs: ldi,
                rhs: root,
                margin,
                err: (ldi.abs() + ldk.abs() + root) * KERNEL_REL + 1e-13,
            })
        }
        WR => {
            // I from its series: a route independent of the CF/Wronskian
            // normalisation inside the product kernel.
            let (k0, krel) = specfun::k_hat_any(nu, x)?;
            let ik = crate::specfun::ik::ik_scaled(nu.abs(), x)?;
            let k1 = if nu >= 0.0 {
                ik.k1_hat
            } else {
                specfun::k_hat_any(nu + 1.0, x)?.0
            };
            let (ln_i0, i0rel) = specfun::ln_besseli_series(nu, x)?;
            let (ln_i1, i1rel) = specfun::ln_besseli_series(nu + 1.0, x)?;
            let w = (k0.ln_abs() - x + ln_i1).exp() + (k1.ln_abs() - x + ln_i0).exp();
            let lhs = (w - 1.0 / x).abs();
            let rhs = 1e-10 / x;
            Ok(MarginEval {
                lhs,
                rhs,
                margin: rhs - lhs,
                err: w * (krel + i0rel + i1rel + ik.rel_err),
            })
        }
        LC => {
            let l0 = ln_cal_p(nu, x)?;
            let lm = ln_cal_p(nu - 1.0, x)?;
            let lp = ln_cal_p(nu + 1.0, x)?;
            Ok(MarginEval {
                lhs: 2.0 * l0,
                rhs: lm + lp,
                margin: lm + lp - 2.0 * l0,
                err: (lm.abs() + lp.abs() + 2.0 * l0.abs()) * 1e-13 + 4e-12,
            })
        }
        #[cfg(debug_assertions)]
        XF => {
            let (p, perr) = p_equal(nu, x)?;
            let rhs = 1.0 / (4.0 * x);
            Ok(MarginEval {
                lhs: p,
                rhs,
                margin: rhs - p,
                err: perr,
            })
        }
    }
}

/// Evaluate the inequality `id` at (nu, mu, x) and produce a verdict record.
///
/// Points outside the id's validity domain are a domain error, never a
/// "violated" verdict. Internal evaluation failures (quadrature
/// non-convergence, range exhaustion) surface as an indeterminate record
/// carrying the diagnostic.
pub fn check_inequality(id: InequalityId, nu: f64, mu: Option<f64>, x: f64) -> Result<BoundRecord> {
    if !in_domain(id, nu, mu, x) {
        return Err(Error::domain(format!(
            "({nu}, {}, {x}) outside validity domain of {id}: {}",
            mu.map_or("-".to_string(), |m| m.to_string()),
            entry(id).domain
        )));
    }
    let mu_rec = if id.uses_mu() { mu } else { None };
    match eval_margin(id, nu, mu, x) {
        Ok(ev) => {
            let strict = registry::strictness_at(id, nu, mu, x);
            let verdict = match strict {
                Strictness::Strict => {
                    if ev.margin > ev.err {
                        Verdict::Holds
                    } else if ev.margin < -ev.err {
                        Verdict::Violated
                    } else {
                        Verdict::Indeterminate
                    }
                }
                Strictness::NonStrict => {
                    if ev.margin >= -ev.err {
                        Verdict::Holds
                    } else {
                        Verdict::Violated
                    }
                }
            };
            Ok(BoundRecord {
                id,
                nu,
                mu: mu_rec,
                x,
                lhs: ev.lhs,
                rhs: ev.rhs,
                margin: ev.margin,
                verdict,
                diagnostic: None,
            })
        }
        Err(e) => Ok(BoundRecord {
            id,
            nu,
            mu: mu_rec,
            x,
            lhs: 0.0,
            rhs: 0.0,
            margin: 0.0,
            verdict: Verdict::Indeterminate,
            diagnostic: Some(e.to_string()),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn upper_bound_values() {
        // b_L / (0.5 * cbrt(1.5))
        let u1 = upper_bound(InequalityId::U1, 0.5, 1.0, 1.0).unwrap();
        assert_relative_eq!(u1, 1.179_132_703_887_114_1, max_relative = 1e-12);
        let u2 = upper_bound(InequalityId::U2, 1.0, 1.0, 1.0).unwrap();
        assert_relative_eq!(u2, 2.623_402_953_103_185_8, max_relative = 1e-12);
        // U2 equals U3 at mu = nu (same Gamma identity, different route)
        let u3 = upper_bound(InequalityId::U3, 1.0, 1.0, 1.0).unwrap();
        assert_relative_eq!(u2, u3, max_relative = 1e-13);
        assert!(upper_bound(InequalityId::U1, 1.0, 1.0, 1.0).is_err());
    }

    #[test]
    fn lower_bound_values() {
        // L1 collapses to the closed-form product at nu = 1/2
        let l1 = lower_bound(InequalityId::L1, 0.5, 1.0).unwrap();
        assert_relative_eq!(l1, 0.432_332_358_381_693_65, max_relative = 1e-10);
        let l1 = lower_bound(InequalityId::L1, 2.0, 1.0).unwrap();
        assert_relative_eq!(l1, 0.139_343_829_326_697_96, max_relative = 1e-10);
        // L2 reduces to 1 - x at nu = 1/2
        let l2 = lower_bound(InequalityId::L2, 0.5, 0.3).unwrap();
        assert_relative_eq!(l2, 0.7, max_relative = 1e-13);
        let l3 = lower_bound(InequalityId::L3, 2.0, 1.0).unwrap();
        assert_relative_eq!(l3, 0.208_333_333_333_333_33, max_relative = 1e-14);
        assert!(lower_bound(InequalityId::L3, 1.0, 1.0).is_err());
    }

    #[test]
    fn lower_bounds_sharp_at_small_x() {
        // both L2 and the product itself approach 1/(2 nu) as x -> 0
        for &nu in &[0.5f64, 1.0, 2.0] {
            let target = 0.5 / nu;
            let l2 = lower_bound(InequalityId::L2, nu, 1e-4).unwrap();
            assert!((l2 - target).abs() < 1e-3, "L2({nu}) = {l2}");
            let p = crate::specfun::product_ik(nu, nu, 1e-4).unwrap().value;
            assert!((p - target).abs() < 1e-4, "P_{nu}(1e-4) = {p}");
        }
    }

    #[test]
    fn shifted_log_values() {
        let f = f_shifted_log(0.0, 1.0).unwrap();
        assert!((f - 0.533_045).abs() < 1e-5);
        // small-x limit ln 2 - gamma
        let f0 = f_shifted_log(0.0, 1e-8).unwrap();
        assert!((f0 - (std::f64::consts::LN_2 - EULER_GAMMA)).abs() < 1e-6);
        assert!(f_shifted_log(0.0, 0.5).unwrap() < f_shifted_log(0.0, 1.0).unwrap());
    }

    #[test]
    fn tail_gap_closed_forms() {
        let g = tail_gap(0.5, 1.0).unwrap();
        let expect = -(-2.0f64).exp() / 2.0 - 1.0 / 16.0;
        assert_relative_eq!(g, expect, max_relative = 1e-12);
        let gg = g_fn(0.5, 1.0).unwrap();
        assert_relative_eq!(gg, -(-2.0f64).exp() - 0.125, max_relative = 1e-12);
        // g_nu -> 0 from below as x grows
        assert!(g_fn(1.0, 200.0).unwrap().abs() <= 1e-2);
    }

    #[test]
    fn q_ratio_values() {
        let q = q_ratio(0.5, 1.0).unwrap();
        assert_relative_eq!(q, 0.432_332_358_381_693_65, max_relative = 1e-12);
        // q_0 creeps to 1 only logarithmically
        let q0 = q_ratio(0.0, 1e-6).unwrap();
        assert_relative_eq!(q0, 0.940_328_179_654_994_8, max_relative = 1e-9);
        let q0 = q_ratio(0.0, 4e-13).unwrap();
        assert!(q0 >= 0.97 && q0 < 1.0);
        let q1 = q_ratio(1.0, 1e-6).unwrap();
        assert_relative_eq!(q1, 0.033_748_415_084_330_186, max_relative = 1e-9);
    }

    #[test]
    fn cal_p_values() {
        let c = cal_p(0.5, 1.0).unwrap();
        assert_relative_eq!(c, 0.383_144_576_742_348_28, max_relative = 1e-11);
        assert!(cal_p(-0.5, 1.0).is_err());
        // midpoint log-convexity sample at (nu, x, h) = (1, 1, 0.1)
        let second = ln_cal_p(0.9, 1.0).unwrap() - 2.0 * ln_cal_p(1.0, 1.0).unwrap()
            + ln_cal_p(1.1, 1.0).unwrap();
        assert!((second - 9.890_950_009_98e-3).abs() < 1e-9);
    }

    #[test]
    fn turan_values() {
        let d = turan_delta(TuranFamily::I, 0.0, 1.0).unwrap();
        assert_relative_eq!(d, 1.283_517_993_982_374_8, max_relative = 1e-11);
        assert!(d > 0.0);
        let d = turan_delta(TuranFamily::K, 0.0, 1.0).unwrap();
        assert!(d < 0.0);
        let d = turan_delta(TuranFamily::P, 1.0, 1.0).unwrap();
        assert_relative_eq!(d, -1.854_739_432_207_957e-3, max_relative = 1e-9);
        let b = combined_turan_bounds(1.0, 1.0).unwrap();
        assert_relative_eq!(b.upper, 0.057_858_954_332_923_066, max_relative = 1e-10);
        assert!(d < b.upper);
        assert!(b.lower.is_none());
        let b2 = combined_turan_bounds(2.0, 1.0).unwrap();
        let p2 = 0.220_568_094_236_566_26f64;
        assert_relative_eq!(b2.lower.unwrap(), -p2 * p2, max_relative = 1e-9);
    }

    #[test]
    fn check_records() {
        let r = check_inequality(InequalityId::T2, 0.5, None, 1.0).unwrap();
        assert_eq!(r.verdict, Verdict::Holds);
        assert!((r.margin - 0.130_167_641_618_306_35).abs() < 1e-10);

        assert!(check_inequality(InequalityId::U1, 1.0, Some(1.0), 1.0).is_err());

        let r = check_inequality(InequalityId::TK, -2.0, None, 0.1).unwrap();
        assert_eq!(r.verdict, Verdict::Holds);

        // L1 equality point judged non-strictly
        let r = check_inequality(InequalityId::L1, 0.5, None, 2.0).unwrap();
        assert_eq!(r.verdict, Verdict::Holds);
    }

    #[cfg(debug_assertions)]
    #[test]
    fn forced_violation_fixture() {
        // P ~ 1/(2x) > 1/(4x) at large x: violated there, holds near 0
        let r = check_inequality(InequalityId::XF, 1.0, None, 20.0).unwrap();
        assert_eq!(r.verdict, Verdict::Violated);
        let r = check_inequality(InequalityId::XF, 2.0, None, 0.01).unwrap();
        assert_eq!(r.verdict, Verdict::Holds);
    }

    #[test]
    fn tp_weaker_than_tc_upper() {
        for &(nu, x) in &[(0.75, 0.3), (1.5, 1.0), (3.0, 7.0), (6.0, 20.0)] {
            let tc = check_inequality(InequalityId::TC, nu, None, x).unwrap();
            let tp = check_inequality(InequalityId::TP, nu, None, x).unwrap();
            if tc.verdict == Verdict::Holds {
                assert_eq!(tp.verdict, Verdict::Holds);
            }
        }
    }
}
