use serde::{Deserialize, Serialize};

/// A real value together with a conservative absolute-error estimate and an
/// optional exponential scale factor that was removed to keep the mantissa
/// representable. The unscaled value is `value * exp(scale_exponent)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct EvalResult {
    pub value: f64,
    pub abs_err: f64,
    pub scaled: bool,
    pub scale_exponent: f64,
}

impl EvalResult {
    /// A value known to full working precision (4 ulp allowance).
    pub fn exact(value: f64) -> Self {
        Self::unscaled(value, 4.0 * f64::EPSILON * value.abs())
    }

    pub fn unscaled(value: f64, abs_err: f64) -> Self {
        Self {
            value,
            abs_err,
            scaled: false,
            scale_exponent: 0.0,
        }
    }

    pub fn with_scale(value: f64, abs_err: f64, scale_exponent: f64) -> Self {
        Self {
            value,
            abs_err,
            scaled: scale_exponent != 0.0,
            scale_exponent,
        }
    }

    /// The value with the scale factor restored. May overflow to infinity;
    /// that is precisely what the scaled representation avoids.
    pub fn unscaled_value(&self) -> f64 {
        if self.scaled {
            self.value * self.scale_exponent.exp()
        } else {
            self.value
        }
    }

    pub fn rel_err(&self) -> f64 {
        if self.value == 0.0 {
            self.abs_err
        } else {
            self.abs_err / self.value.abs()
        }
    }
}

/// Euler–Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Landau's order-uniform constant: sup over positive orders of
/// nu^(1/3) |J_nu|. Hard-coded decimal; see `MathConstants`.
pub const B_LANDAU: f64 = 0.674_885;

/// Landau's argument-uniform constant: sup over t > 0 of t^(1/3) J_0(t).
/// Hard-coded decimal, reproducible numerically to ten digits (see
/// `specfun::landau_c_numeric`).
pub const C_LANDAU: f64 = 0.785_746_870_4;

/// Named constants used by the bound formulas, with provenance notes.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct MathConstants {
    /// Landau's order-uniform constant b_L (literature decimal).
    pub b_l: f64,
    /// Landau's argument-uniform constant c_L (literature decimal; equals the
    /// numerically recomputed sup of t^(1/3) J_0(t) to better than 1e-9).
    pub c_l: f64,
    /// Euler–Mascheroni constant.
    pub euler_gamma: f64,
    /// ln 2 - gamma, the small-x limit of I_0 K_0 + ln x.
    pub ln2_minus_gamma: f64,
}

impl MathConstants {
    pub fn standard() -> Self {
        Self {
            b_l: B_LANDAU,
            c_l: C_LANDAU,
            euler_gamma: EULER_GAMMA,
            ln2_minus_gamma: std::f64::consts::LN_2 - EULER_GAMMA,
        }
    }
}
