//! Numerical investigation of the two open threshold orders of
//! q_nu(x) = P_nu(x)/(1 + |ln x|) on (0, 1]:
//!
//!   nu_star: smallest order from which the endpoint value q_nu(1) is the
//!            maximum over (0, 1] (criterion: the interior excess
//!            m(nu) = max q_nu - q_nu(1) drops to ~0);
//!   nu_circ: smallest order from which q_nu is increasing on (0, 1]
//!            (criterion: the minimum forward difference s(nu) over the scan
//!            grid stops being negative).
//!
//! Both thresholds are bracketed by bisection from the interval (0.15, 0.25).
//! The criteria are threshold-based, not sign-based: m(nu) >= 0 identically,
//! so a tolerance epsilon is unavoidable and is reported with the bracket.

use serde::Serialize;

use crate::bounds::q_ratio;
use crate::error::{Error, Result};
use crate::search::{bisect_smallest_true, golden_max};

/// Excess tolerance defining nu_star: m(nu) <= EPSILON_M counts as
/// "endpoint is the maximum".
pub const EPSILON_M: f64 = 1e-9;
/// Slope tolerance defining nu_circ: s(nu) >= -EPSILON_S counts as
/// "increasing on the grid".
pub const EPSILON_S: f64 = 1e-10;

/// Number of scan points (half log-spaced, half linear).
const SCAN_POINTS: usize = 1000;

/// Which criterion a bracket was computed under.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum BracketCriterion {
    #[serde(rename = "max_excess")]
    MaxExcess,
    #[serde(rename = "min_slope")]
    MinSlope,
}

/// An interval certified to contain a threshold order, with the criterion
/// value at both endpoints as evidence.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct Bracket {
    pub lo: f64,
    pub hi: f64,
    pub evidence_lo: f64,
    pub evidence_hi: f64,
    pub criterion: BracketCriterion,
}

/// Criterion values at the bracket endpoints.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct BracketEvidence {
    pub at_lo: f64,
    pub at_hi: f64,
}

/// The JSON exploration report.
#[derive(Clone, Debug, Serialize)]
pub struct ExplorationReport {
    pub criterion: BracketCriterion,
    pub bracket: Bracket,
    pub tol: f64,
    pub x_min: f64,
    pub epsilon: f64,
    pub evidence: BracketEvidence,
}

/// Hybrid scan grid on [x_min, x_max]: half the points log-spaced, half
/// linear, merged and sorted. Both endpoints are included.
pub fn scan_grid(x_min: f64, x_max: f64) -> Vec<f64> {
    let half = SCAN_POINTS / 2;
    let mut pts = Vec::with_capacity(SCAN_POINTS);
    for i in 0..half {
        let t = i as f64 / (half - 1) as f64;
        pts.push(x_min * (x_max / x_min).powf(t));
    }
    for i in 0..half {
        let t = i as f64 / (half - 1) as f64;
        pts.push(x_min + (x_max - x_min) * t);
    }
    pts.sort_by(|a, b| a.partial_cmp(b).unwrap());
    pts.dedup();
    pts
}

/// The analytic supremum of q_0 over (0, 1]: attained only in the x -> 0
/// limit, where P_0(x) ~ ln(2/x) - gamma makes the ratio tend to 1.
pub fn q_zero_analytic_sup() -> f64 {
    1.0
}

/// Global maximum of q_nu over [x_min, x_max]: dense hybrid scan followed by
/// golden-section refinement around the best point.
pub fn maximize_q(nu: f64, x_min: f64, x_max: f64) -> Result<(f64, f64)> {
    if !(nu > -1.0) {
        return Err(Error::usage(format!("maximize_q requires nu > -1, got {nu}")));
    }
    if !(0.0 < x_min && x_min < x_max) {
        return Err(Error::usage(format!(
            "maximize_q requires 0 < x_min < x_max, got ({x_min}, {x_max})"
        )));
    }
    let grid = scan_grid(x_min, x_max);
    let mut best_i = 0usize;
    let mut best = f64::NEG_INFINITY;
    let mut vals = Vec::with_capacity(grid.len());
    for (i, &x) in grid.iter().enumerate() {
        let v = q_ratio(nu, x)?;
        vals.push(v);
        if v > best {
            best = v;
            best_i = i;
        }
    }
    let lo = if best_i == 0 { grid[0] } else { grid[best_i - 1] };
    let hi = if best_i + 1 == grid.len() {
        grid[best_i]
    } else {
        grid[best_i + 1]
    };
    if lo == hi {
        return Ok((grid[best_i], best));
    }
    let f = |x: f64| q_ratio(nu, x).unwrap_or(f64::NEG_INFINITY);
    let (x_star, q_star) = golden_max(f, lo, hi, 1e-12 * (hi - lo).max(1.0), 300);
    if q_star >= best {
        Ok((x_star, q_star))
    } else {
        Ok((grid[best_i], best))
    }
}

/// m(nu) = max over [x_min, 1] of q_nu minus the endpoint value q_nu(1).
/// Non-negative by construction (x = 1 is in the scanned interval).
pub fn max_excess(nu: f64, x_min: f64) -> Result<f64> {
    let (_, q_star) = maximize_q(nu, x_min, 1.0)?;
    Ok(q_star - q_ratio(nu, 1.0)?)
}

/// s(nu) = minimum forward difference of q_nu over the scan grid on
/// (x_min, 1].
pub fn min_slope(nu: f64, x_min: f64) -> Result<f64> {
    let grid = scan_grid(x_min, 1.0);
    let mut prev = q_ratio(nu, grid[0])?;
    let mut worst = f64::INFINITY;
    for &x in &grid[1..] {
        let v = q_ratio(nu, x)?;
        worst = worst.min(v - prev);
        prev = v;
    }
    Ok(worst)
}

const BRACKET_LO: f64 = 0.15;
const BRACKET_HI: f64 = 0.25;

fn validate_tol(tol: f64) -> Result<()> {
    if !(tol > 0.0 && tol <= 0.05) {
        return Err(Error::usage(format!(
            "bracket tolerance must lie in (0, 0.05], got {tol}"
        )));
    }
    Ok(())
}

/// Bracket nu_star to width <= tol by bisecting m(nu) <= EPSILON_M on the
/// starting interval (0.15, 0.25). Errors out with a diagnostic if the
/// interval does not straddle the criterion.
pub fn find_nu_star(tol: f64) -> Result<Bracket> {
    validate_tol(tol)?;
    let x_min = crate::open_endpoint_xmin();
    let ev_lo = max_excess(BRACKET_LO, x_min)?;
    let ev_hi = max_excess(BRACKET_HI, x_min)?;
    if !(ev_lo > EPSILON_M) || !(ev_hi <= EPSILON_M) {
        return Err(Error::usage(format!(
            "starting interval does not straddle the max-excess criterion: \
             m({BRACKET_LO}) = {ev_lo:e}, m({BRACKET_HI}) = {ev_hi:e}, epsilon = {EPSILON_M:e}"
        )));
    }
    let pred = |nu: f64| max_excess(nu, x_min).map(|m| m <= EPSILON_M).unwrap_or(false);
    let (lo, hi) = bisect_smallest_true(pred, BRACKET_LO, BRACKET_HI, tol);
    Ok(Bracket {
        lo,
        hi,
        evidence_lo: max_excess(lo, x_min)?,
        evidence_hi: max_excess(hi, x_min)?,
        criterion: BracketCriterion::MaxExcess,
    })
}

/// Bracket nu_circ to width <= tol by bisecting s(nu) >= -EPSILON_S on the
/// starting interval (0.15, 0.25).
pub fn find_nu_circ(tol: f64) -> Result<Bracket> {
    validate_tol(tol)?;
    let x_min = crate::open_endpoint_xmin();
    let ev_lo = min_slope(BRACKET_LO, x_min)?;
    let ev_hi = min_slope(BRACKET_HI, x_min)?;
    if !(ev_lo < -EPSILON_S) || !(ev_hi >= -EPSILON_S) {
        return Err(Error::usage(format!(
            "starting interval does not straddle the min-slope criterion: \
             s({BRACKET_LO}) = {ev_lo:e}, s({BRACKET_HI}) = {ev_hi:e}, epsilon = {EPSILON_S:e}"
        )));
    }
    let pred = |nu: f64| min_slope(nu, x_min).map(|s| s >= -EPSILON_S).unwrap_or(false);
    let (lo, hi) = bisect_smallest_true(pred, BRACKET_LO, BRACKET_HI, tol);
    Ok(Bracket {
        lo,
        hi,
        evidence_lo: min_slope(lo, x_min)?,
        evidence_hi: min_slope(hi, x_min)?,
        criterion: BracketCriterion::MinSlope,
    })
}

/// Run one bracket search and package the JSON report.
pub fn explore_report(criterion: BracketCriterion, tol: f64) -> Result<ExplorationReport> {
    let bracket = match criterion {
        BracketCriterion::MaxExcess => find_nu_star(tol)?,
        BracketCriterion::MinSlope => find_nu_circ(tol)?,
    };
    Ok(ExplorationReport {
        criterion,
        bracket,
        tol,
        x_min: crate::open_endpoint_xmin(),
        epsilon: match criterion {
            BracketCriterion::MaxExcess => EPSILON_M,
            BracketCriterion::MinSlope => EPSILON_S,
        },
        evidence: BracketEvidence {
            at_lo: bracket.evidence_lo,
            at_hi: bracket.evidence_hi,
        },
    })
}

/// Ordering consistency between the two brackets: an increasing q has its
/// maximum at the endpoint, so the min-slope threshold cannot sit below the
/// max-excess one; the nu_circ bracket's upper edge must not undercut the
/// nu_star bracket's lower edge.
pub fn brackets_consistent(star: &Bracket, circ: &Bracket) -> bool {
    circ.hi >= star.lo
}
