//! The two integral representations of the product K_nu I_mu, packaged as
//! oracles that are evaluation paths fully independent of the I/K product
//! kernel normalisation:
//!
//!   int1:  K_nu(x) I_mu(x) = int_0^inf J_{mu+nu}(2x sinh t) e^{(nu-mu) t} dt
//!   int2:  I_nu(x) K_nu(x) = 2 x^nu / (sqrt(pi) Gamma(nu+1/2))
//!                            * int_0^1 t^nu (1-t^2)^{nu-1/2} K_nu(2xt) dt
//!
//! int1 is oscillatory; after the substitution u = 2x sinh t it is summed
//! over the intervals between consecutive zeros of J_{mu+nu} with repeated
//! averaging of the alternating partial sums. int2 is evaluated through
//! t = sin(theta), which absorbs the endpoint singularity.

use crate::error::{Error, Result};
use crate::eval::{EvalResult, EULER_GAMMA};
use crate::quadrature::gk::adaptive_gk;
use crate::quadrature::tanhsinh::tanh_sinh;
use crate::specfun::gamma::{gamma, ln_gamma};
use crate::specfun::{bessel_j, k_hat_any};

/// Largest order the int2 oracle accepts (intermediate powers stay in range).
const INT2_MAX_ORDER: f64 = 12.0;
/// Largest combined order mu + nu the int1 oracle accepts.
const INT1_MAX_ORDER: f64 = 55.0;

const MAX_SEGMENTS: usize = 250;

/// Product oracle from the semi-infinite oscillatory representation.
pub fn oracle_int1(nu: f64, mu: f64, x: f64, rel_tol: f64) -> Result<EvalResult> {
    let delta = mu - nu;
    let q = mu + nu;
    if !(delta > -0.5) {
        return Err(Error::domain(format!(
            "oracle_int1 requires mu - nu > -1/2, got {delta}"
        )));
    }
    if !(q > -1.0) {
        return Err(Error::domain(format!(
            "oracle_int1 requires mu + nu > -1, got {q}"
        )));
    }
    if q > INT1_MAX_ORDER {
        return Err(Error::domain(format!(
            "oracle_int1 supports mu + nu <= {INT1_MAX_ORDER}, got {q}"
        )));
    }
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain(format!("oracle_int1 requires x > 0, got {x}")));
    }
    if !(rel_tol > 0.0) {
        return Err(Error::usage("oracle_int1 requires rel_tol > 0"));
    }

    let four_x2 = 4.0 * x * x;
    let integrand = move |u: f64| -> f64 {
        if u < 1e-250 {
            return 0.0;
        }
        let hyp = (u * u + four_x2).sqrt();
        let weight = (-delta * ((u + hyp) / (2.0 * x)).ln()).exp() / hyp;
        match bessel_j(q, u) {
            Ok(j) => j * weight,
            Err(_) => f64::NAN,
        }
    };

    // march for sign changes of J_q to build the partition
    let j_at = |u: f64| bessel_j(q, u).unwrap_or(f64::NAN);
    let mut zeros: Vec<f64> = Vec::new();
    let mut prev_u = 1e-8;
    let mut prev_sign = j_at(prev_u).signum();
    let mut u = prev_u;
    let step = 1.0;
    while zeros.len() < MAX_SEGMENTS + 1 {
        u += step;
        let s = j_at(u).signum();
        if s.is_nan() {
            return Err(Error::IntegrandNonFinite { at: u });
        }
        if s != prev_sign && s != 0.0 {
            let (mut lo, mut hi) = (prev_u, u);
            for _ in 0..80 {
                let mid = 0.5 * (lo + hi);
                if j_at(mid).signum() == prev_sign {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            zeros.push(0.5 * (lo + hi));
            prev_sign = s;
        }
        prev_u = u;
    }

    // segment integrals between consecutive zeros
    let seg_rel = (rel_tol * 1e-2).max(1e-13);
    let mut partials: Vec<f64> = Vec::new();
    let mut running = 0.0f64;
    let mut seg_err_sum = 0.0f64;
    let mut prev_est = f64::INFINITY;
    let mut stable_hits = 0usize;

    let mut lo = 0.0f64;
    for (k, &hi) in zeros.iter().enumerate() {
        let (v, e) = if k == 0 && q < 0.0 {
            tanh_sinh(&integrand, lo, hi, seg_rel, 1e-300, 12)?
        } else {
            let (v, e, _) = adaptive_gk(&integrand, lo, hi, seg_rel, 1e-300, 60)?;
            (v, e)
        };
        running += v;
        seg_err_sum += e;
        partials.push(running);
        lo = hi;

        if partials.len() >= 6 {
            let est = euler_accelerate(&partials);
            let tol = (rel_tol * est.abs()).max(1e-300);
            if (est - prev_est).abs() <= 0.5 * tol {
                stable_hits += 1;
                if stable_hits >= 2 {
                    let abs_err = (est - prev_est).abs() + seg_err_sum;
                    return Ok(EvalResult::unscaled(est, abs_err));
                }
            } else {
                stable_hits = 0;
            }
            prev_est = est;
        }
    }

    Err(Error::Convergence {
        context: "oracle_int1 zero-partition sum",
        best: euler_accelerate(&partials),
        abs_err: seg_err_sum.max(prev_est.abs() * rel_tol),
    })
}

/// Repeated pairwise averaging of the tail of an alternating sequence of
/// partial sums.
fn euler_accelerate(partials: &[f64]) -> f64 {
    let m = partials.len().min(24);
    let mut row: Vec<f64> = partials[partials.len() - m..].to_vec();
    while row.len() > 1 {
        for i in 0..row.len() - 1 {
            row[i] = 0.5 * (row[i] + row[i + 1]);
        }
        row.pop();
    }
    row[0]
}

/// Product oracle P_nu(x) from the finite-interval K representation.
pub fn oracle_int2(nu: f64, x: f64, rel_tol: f64) -> Result<EvalResult> {
    if !(nu > -0.5) {
        return Err(Error::domain(format!(
            "oracle_int2 requires nu > -1/2, got {nu}"
        )));
    }
    if nu > INT2_MAX_ORDER {
        return Err(Error::domain(format!(
            "oracle_int2 supports nu <= {INT2_MAX_ORDER}, got {nu}"
        )));
    }
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain(format!("oracle_int2 requires x > 0, got {x}")));
    }
    if !(rel_tol > 0.0) {
        return Err(Error::usage("oracle_int2 requires rel_tol > 0"));
    }

    let ln_pref = std::f64::consts::LN_2 + nu * x.ln()
        - 0.5 * std::f64::consts::PI.ln()
        - ln_gamma(nu + 0.5);
    let pref = ln_pref.exp();

    let integrand = move |theta: f64| -> f64 {
        let (s, c) = theta.sin_cos();
        let u = 2.0 * x * s;
        let angular = if nu == 0.0 {
            1.0
        } else {
            s.powf(nu) * c.powf(2.0 * nu)
        };
        if u < 1e-20 {
            // small-argument forms keep intermediates representable
            return if nu == 0.0 {
                -(0.5 * u).ln() - EULER_GAMMA
            } else if nu > 0.0 {
                0.5 * gamma(nu) * x.powf(-nu) * c.powf(2.0 * nu)
            } else {
                0.5 * gamma(-nu) * x.powf(nu) * s.powf(2.0 * nu) * c.powf(2.0 * nu)
            };
        }
        match k_hat_any(nu, u) {
            Ok((k_hat, _)) => {
                let k = k_hat.m * (k_hat.log_extra - u).exp();
                angular * k
            }
            Err(_) => f64::NAN,
        }
    };

    let (v, e) = tanh_sinh(
        &integrand,
        0.0,
        std::f64::consts::FRAC_PI_2,
        rel_tol * 0.5,
        1e-300,
        12,
    )?;
    let value = pref * v;
    Ok(EvalResult::unscaled(
        value,
        pref * e + value.abs() * 1e-13,
    ))
}
