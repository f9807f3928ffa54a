//! Adaptive numerical integration over finite and semi-infinite intervals,
//! plus the two integral-representation oracles for the product I_mu K_nu.

pub(crate) mod gk;
mod oracles;
pub(crate) mod tanhsinh;

use crate::error::{Error, Result};
use crate::eval::EvalResult;

pub use oracles::{oracle_int1, oracle_int2};

/// Integration region.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Region {
    Finite { a: f64, b: f64 },
    SemiInfinite { a: f64 },
}

/// Declarative request for `integrate`.
#[derive(Clone, Copy, Debug)]
pub struct IntegrationSpec {
    pub region: Region,
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_subdivisions: usize,
}

pub const DEFAULT_REL_TOL: f64 = 1e-8;
pub const DEFAULT_MAX_SUBDIVISIONS: usize = 2000;

impl IntegrationSpec {
    pub fn finite(a: f64, b: f64) -> Self {
        Self {
            region: Region::Finite { a, b },
            rel_tol: DEFAULT_REL_TOL,
            abs_tol: 1e-300,
            max_subdivisions: DEFAULT_MAX_SUBDIVISIONS,
        }
    }

    pub fn semi_infinite(a: f64) -> Self {
        Self {
            region: Region::SemiInfinite { a },
            rel_tol: DEFAULT_REL_TOL,
            abs_tol: 1e-300,
            max_subdivisions: DEFAULT_MAX_SUBDIVISIONS,
        }
    }

    pub fn with_rel_tol(mut self, rel_tol: f64) -> Self {
        self.rel_tol = rel_tol;
        self
    }

    pub fn with_abs_tol(mut self, abs_tol: f64) -> Self {
        self.abs_tol = abs_tol;
        self
    }

    pub fn with_max_subdivisions(mut self, n: usize) -> Self {
        self.max_subdivisions = n;
        self
    }

    fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0) || !(self.abs_tol > 0.0) {
            return Err(Error::usage("integration tolerances must be positive"));
        }
        if self.max_subdivisions < 1 {
            return Err(Error::usage("max_subdivisions must be >= 1"));
        }
        if let Region::Finite { a, b } = self.region {
            if !(a < b) {
                return Err(Error::usage(format!(
                    "finite region requires a < b, got [{a}, {b}]"
                )));
            }
        }
        Ok(())
    }
}

/// Integrate `f` over the region in `spec`. Finite intervals use adaptive
/// Gauss-Kronrod with a tanh-sinh fallback for endpoint singularities that
/// starve the bisection; semi-infinite regions map through u = a + t/(1-t)
/// onto (0, 1) and go straight to tanh-sinh.
pub fn integrate(f: impl Fn(f64) -> f64, spec: &IntegrationSpec) -> Result<EvalResult> {
    spec.validate()?;
    match spec.region {
        Region::Finite { a, b } => {
            match gk::adaptive_gk(&f, a, b, spec.rel_tol, spec.abs_tol, spec.max_subdivisions) {
                Ok((v, e, _)) => Ok(EvalResult::unscaled(v, e)),
                Err(Error::Convergence { .. }) => {
                    let (v, e) = tanhsinh::tanh_sinh(&f, a, b, spec.rel_tol, spec.abs_tol, 12)?;
                    Ok(EvalResult::unscaled(v, e))
                }
                Err(e) => Err(e),
            }
        }
        Region::SemiInfinite { a } => {
            let g = |t: f64| {
                let om = 1.0 - t;
                f(a + t / om) / (om * om)
            };
            let (v, e) = tanhsinh::tanh_sinh(&g, 0.0, 1.0, spec.rel_tol, spec.abs_tol, 12)?;
            Ok(EvalResult::unscaled(v, e))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn finite_polynomial() {
        let r = integrate(|t| t * t, &IntegrationSpec::finite(0.0, 1.0).with_rel_tol(1e-12)).unwrap();
        assert_relative_eq!(r.value, 1.0 / 3.0, max_relative = 1e-12);
    }

    #[test]
    fn semi_infinite_exponential() {
        let r = integrate(
            |t| (-t).exp(),
            &IntegrationSpec::semi_infinite(0.0).with_rel_tol(1e-12),
        )
        .unwrap();
        assert_relative_eq!(r.value, 1.0, max_relative = 1e-12);
    }

    #[test]
    fn semi_infinite_sinh_power() {
        // int_0^inf sinh(t)^(-1/3) dt, closed form via Gamma:
        // 2 pi^(3/2) / (sqrt(3) Gamma(2/3) Gamma(5/6)) = 4.20654631597636...
        use crate::specfun::gamma::gamma;
        let closed = 2.0 * std::f64::consts::PI.powf(1.5)
            / (3.0f64.sqrt() * gamma(2.0 / 3.0) * gamma(5.0 / 6.0));
        assert_relative_eq!(closed, 4.206_546_315_976_363, max_relative = 1e-13);
        let r = integrate(
            |t| t.sinh().powf(-1.0 / 3.0),
            &IntegrationSpec::semi_infinite(0.0).with_rel_tol(1e-10),
        )
        .unwrap();
        assert_relative_eq!(r.value, closed, max_relative = 1e-9);
    }

    #[test]
    fn additivity() {
        let f = |t: f64| (t * t - 0.3 * t).cos();
        let spec = |a, b| IntegrationSpec::finite(a, b).with_rel_tol(1e-12);
        let whole = integrate(f, &spec(-1.0, 2.0)).unwrap();
        let left = integrate(f, &spec(-1.0, 0.4)).unwrap();
        let right = integrate(f, &spec(0.4, 2.0)).unwrap();
        let diff = (whole.value - left.value - right.value).abs();
        assert!(diff <= whole.abs_err + left.abs_err + right.abs_err + 1e-13);
    }

    #[test]
    fn usage_and_nan_errors() {
        assert!(integrate(|t| t, &IntegrationSpec::finite(1.0, 0.0)).is_err());
        let mut spec = IntegrationSpec::finite(0.0, 1.0);
        spec.max_subdivisions = 0;
        assert!(integrate(|t| t, &spec).is_err());
        let r = integrate(|_| f64::NAN, &IntegrationSpec::finite(0.0, 1.0));
        assert!(matches!(r, Err(Error::IntegrandNonFinite { .. })));
    }

    #[test]
    fn endpoint_singularity_falls_back() {
        // x^(-0.6) starves bisection at a small budget; fallback must land it
        let spec = IntegrationSpec::finite(0.0, 1.0)
            .with_rel_tol(1e-10)
            .with_max_subdivisions(20);
        let r = integrate(|x: f64| x.powf(-0.6), &spec).unwrap();
        assert_relative_eq!(r.value, 2.5, max_relative = 1e-9);
    }
}
