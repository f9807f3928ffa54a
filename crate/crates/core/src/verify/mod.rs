//! Grid-sweep verification engine: inequality sweeps, finite-difference
//! monotonicity checks, order-log-convexity checks, and kernel-vs-oracle
//! cross-checks, with JSON and CSV report emission.

pub mod config;
pub mod grid;

use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;

use crate::bounds::{
    self, check_inequality, entry, in_domain, BoundRecord, InequalityId, RegistryEntry, Verdict,
};
use crate::error::{Error, Result};
use crate::quadrature::{oracle_int1, oracle_int2};
use crate::specfun::{self, BesselFamily};

pub use grid::{AxisSpec, GridPoint, Spacing, SweepGrid};

/// Aggregated result of sweeping one inequality over a grid.
#[derive(Clone, Debug, Serialize)]
pub struct SweepReport {
    pub id: InequalityId,
    pub registry: RegistryEntry,
    pub records: Vec<BoundRecord>,
    pub n_holds: usize,
    pub n_violated: usize,
    pub n_indeterminate: usize,
    pub n_skipped_domain: usize,
    pub min_margin: Option<f64>,
    pub argmin: Option<(f64, Option<f64>, f64)>,
    /// Wall-clock seconds; excluded from determinism comparisons.
    #[serde(rename = "wall_time")]
    pub wall_time_s: f64,
}

impl SweepReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }

    /// CSV with the fixed header `id,nu,mu,x,lhs,rhs,margin,verdict`.
    /// Floats print in shortest round-trip form so re-parsing reproduces the
    /// records bit-for-bit.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("id,nu,mu,x,lhs,rhs,margin,verdict\n");
        for r in &self.records {
            let mu = r.mu.map_or(String::new(), |m| m.to_string());
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{}\n",
                r.id, r.nu, mu, r.x, r.lhs, r.rhs, r.margin, r.verdict
            ));
        }
        out
    }

    /// Parse records back from `to_csv` output.
    pub fn parse_csv(text: &str) -> Result<Vec<BoundRecord>> {
        let mut lines = text.lines();
        match lines.next() {
            Some("id,nu,mu,x,lhs,rhs,margin,verdict") => {}
            other => {
                return Err(Error::usage(format!(
                    "bad CSV header: {:?}",
                    other.unwrap_or("")
                )))
            }
        }
        let mut out = Vec::new();
        for (i, line) in lines.enumerate() {
            if line.is_empty() {
                continue;
            }
            let cols: Vec<&str> = line.split(',').collect();
            if cols.len() != 8 {
                return Err(Error::usage(format!("row {}: expected 8 columns", i + 2)));
            }
            let parse = |s: &str, what: &str| -> Result<f64> {
                s.parse::<f64>()
                    .map_err(|_| Error::usage(format!("row {}: bad {what} '{s}'", i + 2)))
            };
            out.push(BoundRecord {
                id: InequalityId::from_str(cols[0])?,
                nu: parse(cols[1], "nu")?,
                mu: if cols[2].is_empty() {
                    None
                } else {
                    Some(parse(cols[2], "mu")?)
                },
                x: parse(cols[3], "x")?,
                lhs: parse(cols[4], "lhs")?,
                rhs: parse(cols[5], "rhs")?,
                margin: parse(cols[6], "margin")?,
                verdict: Verdict::from_str(cols[7])?,
                diagnostic: None,
            });
        }
        Ok(out)
    }

    /// Worst verdict as a process exit code: 0 all hold, 1 any violated,
    /// 2 indeterminate present without violations.
    pub fn exit_code(&self) -> i32 {
        if self.n_violated > 0 {
            1
        } else if self.n_indeterminate > 0 {
            2
        } else {
            0
        }
    }
}

/// Run `id` over every grid point; out-of-domain points count as skipped.
pub fn sweep(id: InequalityId, grid: &SweepGrid) -> Result<SweepReport> {
    let start = Instant::now();
    let points = grid.points()?;
    if points.is_empty() {
        return Err(Error::usage("empty sweep grid"));
    }
    let mut records = Vec::new();
    let mut n_skipped = 0usize;
    for p in &points {
        if !in_domain(id, p.nu, p.mu, p.x) {
            n_skipped += 1;
            continue;
        }
        records.push(check_inequality(id, p.nu, p.mu, p.x)?);
    }
    let mut n_holds = 0;
    let mut n_violated = 0;
    let mut n_indeterminate = 0;
    let mut min_margin: Option<f64> = None;
    let mut argmin = None;
    for r in &records {
        match r.verdict {
            Verdict::Holds => n_holds += 1,
            Verdict::Violated => n_violated += 1,
            Verdict::Indeterminate => n_indeterminate += 1,
        }
        if r.diagnostic.is_none() && min_margin.is_none_or(|m| r.margin < m) {
            min_margin = Some(r.margin);
            argmin = Some((r.nu, r.mu, r.x));
        }
    }
    Ok(SweepReport {
        id,
        registry: entry(id),
        records,
        n_holds,
        n_violated,
        n_indeterminate,
        n_skipped_domain: n_skipped,
        min_margin,
        argmin,
        wall_time_s: start.elapsed().as_secs_f64(),
    })
}

/// Which scalar function a monotonicity check targets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MonotoneTarget {
    /// x -> P_nu(x) + ln x
    FNu,
    /// x -> q_nu(x)
    QNu,
    /// x -> g_nu(x)
    GNu,
    /// x -> x I'_nu(x)/I_nu(x)
    LogDerivI,
    /// order -> P_order(x) at fixed x (passed through the `nu` argument)
    PInOrder,
}

impl FromStr for MonotoneTarget {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "f" | "f_nu" => Ok(Self::FNu),
            "q" | "q_nu" => Ok(Self::QNu),
            "g" | "g_nu" => Ok(Self::GNu),
            "logderiv-i" | "logderiv_i" => Ok(Self::LogDerivI),
            "p-in-order" | "p_in_order" => Ok(Self::PInOrder),
            other => Err(Error::usage(format!("unknown monotone target '{other}'"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Direction {
    #[serde(rename = "increasing")]
    Increasing,
    #[serde(rename = "decreasing")]
    Decreasing,
}

impl FromStr for Direction {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "increasing" | "inc" => Ok(Self::Increasing),
            "decreasing" | "dec" => Ok(Self::Decreasing),
            other => Err(Error::usage(format!("unknown direction '{other}'"))),
        }
    }
}

/// Result of a finite-difference monotonicity check.
#[derive(Clone, Debug, Serialize)]
pub struct MonotoneReport {
    pub nu: f64,
    pub lo: f64,
    pub hi: f64,
    pub n: usize,
    pub direction: Direction,
    pub holds: bool,
    pub n_bad: usize,
    /// The consecutive difference with the least favourable sign.
    pub worst_diff: f64,
    pub worst_at: f64,
}

fn monotone_eval(target: MonotoneTarget, nu: f64, t: f64) -> Result<(f64, f64)> {
    match target {
        MonotoneTarget::FNu => {
            let v = bounds::f_shifted_log(nu, t)?;
            Ok((v, v.abs() * 1e-12 + 1e-15))
        }
        MonotoneTarget::QNu => {
            let v = bounds::q_ratio(nu, t)?;
            Ok((v, v.abs() * 1e-12 + 1e-16))
        }
        MonotoneTarget::GNu => {
            let v = bounds::g_fn(nu, t)?;
            // cancellation of 2xP against 1 dominates the error here
            Ok((v, (1.0 + v.abs()) * 1e-12))
        }
        MonotoneTarget::LogDerivI => {
            let r = specfun::log_derivative(BesselFamily::I, nu, t)?;
            Ok((r.value, r.abs_err))
        }
        MonotoneTarget::PInOrder => {
            // `nu` carries the fixed argument x; `t` walks the order axis
            let p = specfun::product_ik(t, t, nu)?;
            Ok((p.value, p.abs_err))
        }
    }
}

/// Sample the target at `n` points of `(lo, hi)` (log-spaced when lo > 0)
/// and require every consecutive difference to carry the requested sign
/// beyond the summed error estimates plus relative slack.
pub fn check_monotone_fd(
    target: MonotoneTarget,
    nu: f64,
    interval: (f64, f64),
    n: usize,
    direction: Direction,
) -> Result<MonotoneReport> {
    let (lo, hi) = interval;
    if !(lo < hi) {
        return Err(Error::usage(format!(
            "monotone check requires lo < hi, got ({lo}, {hi})"
        )));
    }
    if n < 3 {
        return Err(Error::usage("monotone check requires n >= 3"));
    }
    let axis = if lo > 0.0 {
        AxisSpec::log(lo, hi, n)
    } else {
        AxisSpec::linear(lo, hi, n)
    };
    let ts = axis.expand()?;
    let mut vals = Vec::with_capacity(n);
    for &t in &ts {
        vals.push(monotone_eval(target, nu, t)?);
    }
    let mut n_bad = 0usize;
    let mut worst_diff = f64::INFINITY;
    let mut worst_at = ts[0];
    for i in 0..n - 1 {
        let (v0, e0) = vals[i];
        let (v1, e1) = vals[i + 1];
        let diff = v1 - v0;
        let tol = e0 + e1 + 1e-13 * v0.abs().max(v1.abs());
        let signed = match direction {
            Direction::Increasing => diff,
            Direction::Decreasing => -diff,
        };
        if signed <= -tol {
            n_bad += 1;
        }
        if signed < worst_diff {
            worst_diff = signed;
            worst_at = ts[i];
        }
    }
    Ok(MonotoneReport {
        nu,
        lo,
        hi,
        n,
        direction,
        holds: n_bad == 0,
        n_bad,
        worst_diff,
        worst_at,
    })
}

/// Result of the order-log-convexity check at fixed x.
#[derive(Clone, Debug, Serialize)]
pub struct LogConvexReport {
    pub x: f64,
    pub n: usize,
    pub holds: bool,
    pub min_second_diff: f64,
    /// Margin of the unit-shift consequence CalP_nu^2 < CalP_{nu-1} CalP_{nu+1}
    /// over interior orders with nu - 1 > -1/2 (positive = satisfied).
    pub min_turan_margin: Option<f64>,
}

const LOGCONVEX_TOL: f64 = 1e-10;

/// Second central differences of nu -> ln CalP_nu(x) over a uniform grid must
/// stay above -1e-10; also asserts the unit-shift Turan consequence at
/// interior orders.
pub fn check_logconvex_order(x: f64, nu_grid: &[f64]) -> Result<LogConvexReport> {
    if nu_grid.len() < 3 {
        return Err(Error::usage("log-convexity grid needs at least 3 orders"));
    }
    let step = nu_grid[1] - nu_grid[0];
    if !(step > 0.0) {
        return Err(Error::usage("log-convexity grid must increase"));
    }
    for w in nu_grid.windows(2) {
        if ((w[1] - w[0]) - step).abs() > 1e-9 * step.max(1.0) {
            return Err(Error::usage("log-convexity grid must be uniform"));
        }
    }
    if !(nu_grid[0] > -0.5) {
        return Err(Error::usage("log-convexity grid must stay above -1/2"));
    }

    let ln_vals: Vec<f64> = nu_grid
        .iter()
        .map(|&nu| bounds::ln_cal_p(nu, x))
        .collect::<Result<_>>()?;
    let mut min_second = f64::INFINITY;
    for i in 1..ln_vals.len() - 1 {
        let second = ln_vals[i - 1] - 2.0 * ln_vals[i] + ln_vals[i + 1];
        min_second = min_second.min(second);
    }

    let mut min_turan: Option<f64> = None;
    for &nu in nu_grid {
        if nu - 1.0 > -0.5 {
            let m = bounds::ln_cal_p(nu - 1.0, x)? + bounds::ln_cal_p(nu + 1.0, x)?
                - 2.0 * bounds::ln_cal_p(nu, x)?;
            min_turan = Some(min_turan.map_or(m, |c: f64| c.min(m)));
        }
    }

    Ok(LogConvexReport {
        x,
        n: nu_grid.len(),
        holds: min_second > -LOGCONVEX_TOL && min_turan.is_none_or(|m| m > 0.0),
        min_second_diff: min_second,
        min_turan_margin: min_turan,
    })
}

/// One kernel-vs-oracle comparison.
#[derive(Clone, Debug, Serialize)]
pub struct CrossRecord {
    pub oracle: &'static str,
    pub nu: f64,
    pub mu: Option<f64>,
    pub x: f64,
    pub kernel: f64,
    pub oracle_value: f64,
    pub rel_diff: f64,
    pub pass: bool,
}

/// Aggregate of `crosscheck_oracles`.
#[derive(Clone, Debug, Serialize)]
pub struct CrosscheckReport {
    pub rel_tol: f64,
    pub records: Vec<CrossRecord>,
    pub n_pass: usize,
    pub n_fail: usize,
    pub n_indeterminate: usize,
    pub n_skipped: usize,
    pub max_rel_diff: f64,
}

/// Trusted order-offset floor for the oscillatory oracle.
pub const INT1_MIN_OFFSET: f64 = 0.25;

/// Compare the product kernel against the integral oracles over a grid.
/// Points with `mu` present and mu - nu >= 1/4 additionally run the
/// oscillatory oracle; every in-domain point runs the finite-interval one.
pub fn crosscheck_oracles(grid: &SweepGrid, rel_tol: f64) -> Result<CrosscheckReport> {
    if !(rel_tol > 0.0) {
        return Err(Error::usage("crosscheck requires rel_tol > 0"));
    }
    let mut records = Vec::new();
    let mut n_skipped = 0usize;
    let mut n_indeterminate = 0usize;
    for p in grid.points()? {
        if p.nu > -0.5 && p.nu <= 12.0 {
            let kernel = specfun::product_ik(p.nu, p.nu, p.x)?.value;
            match oracle_int2(p.nu, p.x, (rel_tol * 0.1).max(1e-11)) {
                Ok(o) => {
                    let rel = (o.value - kernel).abs() / kernel.abs().max(f64::MIN_POSITIVE);
                    records.push(CrossRecord {
                        oracle: "int2",
                        nu: p.nu,
                        mu: None,
                        x: p.x,
                        kernel,
                        oracle_value: o.value,
                        rel_diff: rel,
                        pass: rel <= rel_tol,
                    });
                }
                Err(Error::Convergence { .. }) => n_indeterminate += 1,
                Err(e) => return Err(e),
            }
        } else {
            n_skipped += 1;
        }
        if let Some(mu) = p.mu {
            if mu - p.nu >= INT1_MIN_OFFSET && mu + p.nu > -1.0 {
                let kernel = specfun::product_ik(p.nu, mu, p.x)?.value;
                match oracle_int1(p.nu, mu, p.x, (rel_tol * 0.1).max(1e-10)) {
                    Ok(o) => {
                        let rel = (o.value - kernel).abs() / kernel.abs().max(f64::MIN_POSITIVE);
                        records.push(CrossRecord {
                            oracle: "int1",
                            nu: p.nu,
                            mu: Some(mu),
                            x: p.x,
                            kernel,
                            oracle_value: o.value,
                            rel_diff: rel,
                            pass: rel <= rel_tol,
                        });
                    }
                    Err(Error::Convergence { .. }) => n_indeterminate += 1,
                    Err(e) => return Err(e),
                }
            } else {
                n_skipped += 1;
            }
        }
    }
    let n_pass = records.iter().filter(|r| r.pass).count();
    let n_fail = records.len() - n_pass;
    let max_rel_diff = records.iter().map(|r| r.rel_diff).fold(0.0, f64::max);
    Ok(CrosscheckReport {
        rel_tol,
        records,
        n_pass,
        n_fail,
        n_indeterminate,
        n_skipped,
        max_rel_diff,
    })
}
