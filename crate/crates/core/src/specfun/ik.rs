//! Scaled modified-Bessel kernels: e^{-x} I_nu(x) and e^{x} K_nu(x).
//!
//! Regimes: Temme's series for K at x <= 2 (Temme, J. Comput. Phys. 19, 1975),
//! Steed's continued fraction for K at x > 2 (Thompson & Barnett, J. Comput.
//! Phys. 64, 1986), the CF1 ratio I_{nu+1}/I_nu by modified Lentz, and the
//! Wronskian K_nu I_{nu+1} + K_{nu+1} I_nu = 1/x for the normalisation of I.
//! Working in the scaled fields keeps the I*K product formable without
//! overflow for large arguments.

use crate::error::{Error, Result};
use crate::specfun::gamma::{gamma, ln_gamma};

const MAX_ITER: usize = 100_000;

/// Largest order the I/K kernels accept.
pub(crate) const MAX_ORDER: f64 = 60.0;

/// `m * exp(log_extra)`. `log_extra` absorbs magnitude beyond the standard
/// e^{±x} scaling, which matters only for large orders at small arguments.
#[derive(Clone, Copy, Debug)]
pub(crate) struct ScaledF64 {
    pub m: f64,
    pub log_extra: f64,
}

impl ScaledF64 {
    pub fn value(&self) -> f64 {
        if self.log_extra == 0.0 {
            self.m
        } else {
            self.m * self.log_extra.exp()
        }
    }

    pub fn ln_abs(&self) -> f64 {
        self.m.abs().ln() + self.log_extra
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self {
            m: self.m * other.m,
            log_extra: self.log_extra + other.log_extra,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let (hi, lo) = if self.log_extra >= other.log_extra {
            (self, other)
        } else {
            (other, self)
        };
        let shift = (lo.log_extra - hi.log_extra).exp();
        Self {
            m: hi.m + lo.m * shift,
            log_extra: hi.log_extra,
        }
    }
}

/// Kernel output at one (nu, x): everything needed by the public surface.
#[derive(Clone, Copy, Debug)]
pub(crate) struct IkScaled {
    /// e^{-x} I_nu(x)
    pub i_hat: ScaledF64,
    /// e^{x} K_nu(x)
    pub k_hat: ScaledF64,
    /// e^{x} K_{nu+1}(x)
    pub k1_hat: ScaledF64,
    /// conservative relative error estimate
    pub rel_err: f64,
}

/// K_u(x) and K_{u+1}(x), unscaled, for |u| <= 0.5 and x <= 2.
fn temme_k(u: f64, x: f64) -> Result<(f64, f64)> {
    debug_assert!(x <= 2.0 && u.abs() <= 0.5);
    let gp = gamma(1.0 + u) - 1.0;
    let gm = gamma(1.0 - u) - 1.0;

    let a = (x / 2.0).ln();
    let b = (u * a).exp();
    let sigma = -a * u;
    let c = if u.abs() < f64::EPSILON {
        1.0
    } else {
        (std::f64::consts::PI * u).sin() / (std::f64::consts::PI * u)
    };
    let d = if sigma.abs() < f64::EPSILON {
        1.0
    } else {
        sigma.sinh() / sigma
    };
    let gamma1 = if u.abs() < 1e-10 {
        -crate::eval::EULER_GAMMA
    } else {
        (0.5 / u) * (gp - gm) * c
    };
    let gamma2 = (2.0 + gp + gm) * c / 2.0;

    let mut p = (gp + 1.0) / (2.0 * b);
    let mut q = (gm + 1.0) * b / 2.0;
    let mut f = (sigma.cosh() * gamma1 - d * a * gamma2) / c;
    let mut h = p;
    let mut coef = 1.0;
    let mut sum = coef * f;
    let mut sum1 = coef * h;

    for k in 1..MAX_ITER {
        let kf = k as f64;
        f = (kf * f + p + q) / (kf * kf - u * u);
        p /= kf - u;
        q /= kf + u;
        h = p - kf * f;
        coef *= x * x / (4.0 * kf);
        sum += coef * f;
        sum1 += coef * h;
        if (coef * f).abs() < sum.abs() * f64::EPSILON {
            return Ok((sum, 2.0 * sum1 / x));
        }
    }
    Err(Error::Convergence {
        context: "Temme K series",
        best: sum,
        abs_err: (coef * f).abs(),
    })
}

/// e^{x} K_u(x) and e^{x} K_{u+1}(x) by Steed's continued fraction, x > 1.
fn cf2_k_scaled(u: f64, x: f64) -> Result<(f64, f64)> {
    debug_assert!(x > 1.0);
    let mut a = u * u - 0.25;
    let mut b = 2.0 * (x + 1.0);
    let mut d = 1.0 / b;
    let mut delta = d;
    let mut f = d;
    let mut prev = 0.0f64;
    let mut cur = 1.0f64;
    let mut q = -a;
    let mut c = -a;
    let mut s = 1.0 + q * delta;

    for k in 2..MAX_ITER {
        let kf = k as f64;
        a -= 2.0 * (kf - 1.0);
        b += 2.0;
        d = 1.0 / (a * d + b);
        delta *= b * d - 1.0;
        f += delta;

        let t = (prev - (b - 2.0) * cur) / a;
        prev = cur;
        cur = t;
        c *= -a / kf;
        q += c * t;
        s += q * delta;

        if (q * delta).abs() < s.abs() * f64::EPSILON / 2.0 {
            let k_hat = (std::f64::consts::PI / (2.0 * x)).sqrt() / s;
            let k1_hat = k_hat * (0.5 + u + x + (u * u - 0.25) * f) / x;
            return Ok((k_hat, k1_hat));
        }
    }
    Err(Error::Convergence {
        context: "K continued fraction (CF2)",
        best: (std::f64::consts::PI / (2.0 * x)).sqrt() / s,
        abs_err: (q * delta).abs(),
    })
}

/// I_{nu+1}(x)/I_nu(x) by the modified Lentz continued fraction.
pub(crate) fn cf1_i(nu: f64, x: f64) -> Result<f64> {
    let tiny = 1.0 / f64::MAX.sqrt();
    let mut c = tiny;
    let mut f = tiny;
    let mut d = 0.0f64;

    for k in 1..MAX_ITER {
        let b = 2.0 * (nu + k as f64) / x;
        c = b + 1.0 / c;
        d += b;
        if c == 0.0 {
            c = tiny;
        }
        if d == 0.0 {
            d = tiny;
        }
        d = 1.0 / d;
        let delta = c * d;
        f *= delta;
        if (delta - 1.0).abs() <= f64::EPSILON {
            return Ok(f);
        }
    }
    Err(Error::Convergence {
        context: "I ratio continued fraction (CF1)",
        best: f,
        abs_err: f.abs() * 1e-10,
    })
}

// power of two so renormalisation is exact
const RENORM_THRESHOLD: f64 = 8.452712498170644e270; // 2^900
const RENORM_LN: f64 = 623.8324625039508; // 900 ln 2

/// Scaled I/K pair at order nu >= 0.
pub(crate) fn ik_scaled(nu: f64, x: f64) -> Result<IkScaled> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain(format!("modified Bessel requires x > 0, got {x}")));
    }
    if !(0.0..=MAX_ORDER).contains(&nu) {
        return Err(Error::UnsupportedOrder {
            family: "modified Bessel I/K kernel",
            nu,
        });
    }

    let n = nu.round() as i64;
    let u = nu - n as f64;

    let (mut kv, mut kv1) = if x <= 2.0 {
        let (ku, ku1) = temme_k(u, x)?;
        let ex = x.exp();
        (ku * ex, ku1 * ex)
    } else {
        cf2_k_scaled(u, x)?
    };

    // Forward recurrence on the order is stable for K.
    let mut log_extra = 0.0f64;
    for k in 1..=n {
        let next = 2.0 * (u + k as f64) / x * kv1 + kv;
        kv = kv1;
        kv1 = next;
        if kv1.abs() > RENORM_THRESHOLD {
            let inv = 1.0 / RENORM_THRESHOLD;
            kv *= inv;
            kv1 *= inv;
            log_extra += RENORM_LN;
        }
    }

    let i_ratio = cf1_i(nu, x)?;
    // Wronskian normalisation: e^{-x} I_nu = (1/x) / (K^_nu f + K^_{nu+1})
    let i_m = 1.0 / (x * (kv * i_ratio + kv1));

    let rel_err = 1e-14 * (1.0 + 0.02 * n as f64);
    Ok(IkScaled {
        i_hat: ScaledF64 {
            m: i_m,
            log_extra: -log_extra,
        },
        k_hat: ScaledF64 {
            m: kv,
            log_extra,
        },
        k1_hat: ScaledF64 {
            m: kv1,
            log_extra,
        },
        rel_err,
    })
}

/// e^{x} K_nu(x) for any real order via K_{-nu} = K_nu.
pub(crate) fn k_hat_any(nu: f64, x: f64) -> Result<(ScaledF64, f64)> {
    let ik = ik_scaled(nu.abs(), x)?;
    Ok((ik.k_hat, ik.rel_err))
}

/// e^{-x} I_nu(x) for nu > -1, plus exact negative integers (I_{-n} = I_n).
pub(crate) fn i_hat_any(nu: f64, x: f64) -> Result<(ScaledF64, f64)> {
    if nu >= 0.0 {
        let ik = ik_scaled(nu, x)?;
        return Ok((ik.i_hat, ik.rel_err));
    }
    if nu == nu.floor() {
        // exact negative integer
        let ik = ik_scaled(-nu, x)?;
        return Ok((ik.i_hat, ik.rel_err));
    }
    if nu > -1.0 {
        // I_{-a} = I_a + (2/pi) sin(a pi) K_a, a in (0, 1)
        let a = -nu;
        let ik = ik_scaled(a, x)?;
        let k_term = ScaledF64 {
            m: ik.k_hat.m * (2.0 / std::f64::consts::PI) * (a * std::f64::consts::PI).sin(),
            log_extra: ik.k_hat.log_extra - 2.0 * x,
        };
        return Ok((ik.i_hat.add(&k_term), ik.rel_err * 4.0));
    }
    Err(Error::UnsupportedOrder {
        family: "modified Bessel I",
        nu,
    })
}

/// ln I_nu(x) by the ascending power series. All terms are positive, so the
/// sum carries no cancellation; used as an evaluation path independent of the
/// continued-fraction/Wronskian route.
pub(crate) fn ln_besseli_series(nu: f64, x: f64) -> Result<(f64, f64)> {
    let nu = if nu < 0.0 && nu == nu.floor() { -nu } else { nu };
    if nu <= -1.0 {
        return Err(Error::UnsupportedOrder {
            family: "modified Bessel I series",
            nu,
        });
    }
    if !(x > 0.0) {
        return Err(Error::domain(format!("I series requires x > 0, got {x}")));
    }
    let ln_t0 = nu * (x / 2.0).ln() - ln_gamma(nu + 1.0);
    let q = x * x / 4.0;
    let mut term = 1.0f64;
    let mut sum = 1.0f64;
    let mut n_terms = 1usize;
    for k in 0..MAX_ITER {
        let kf = k as f64;
        term *= q / ((kf + 1.0) * (kf + nu + 1.0));
        sum += term;
        n_terms += 1;
        if term < sum * f64::EPSILON {
            break;
        }
    }
    let rel = n_terms as f64 * f64::EPSILON;
    Ok((ln_t0 + sum.ln(), rel))
}
