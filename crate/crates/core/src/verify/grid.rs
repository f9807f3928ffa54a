//! Declarative parameter grids for sweeps.

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub enum Spacing {
    #[serde(rename = "linear")]
    Linear,
    #[serde(rename = "log")]
    Log,
}

/// One axis: an explicit value list or a spaced range.
#[derive(Clone, Debug, Serialize)]
pub enum AxisSpec {
    Values(Vec<f64>),
    Range {
        start: f64,
        stop: f64,
        count: usize,
        spacing: Spacing,
    },
}

impl AxisSpec {
    pub fn values(v: &[f64]) -> Self {
        Self::Values(v.to_vec())
    }

    pub fn linear(start: f64, stop: f64, count: usize) -> Self {
        Self::Range {
            start,
            stop,
            count,
            spacing: Spacing::Linear,
        }
    }

    pub fn log(start: f64, stop: f64, count: usize) -> Self {
        Self::Range {
            start,
            stop,
            count,
            spacing: Spacing::Log,
        }
    }

    pub fn expand(&self) -> Result<Vec<f64>> {
        match self {
            Self::Values(v) => {
                if v.is_empty() {
                    return Err(Error::usage("axis value list is empty"));
                }
                Ok(v.clone())
            }
            Self::Range {
                start,
                stop,
                count,
                spacing,
            } => {
                if *count < 1 {
                    return Err(Error::usage("axis count must be >= 1"));
                }
                if *count > 1 && !(start < stop) {
                    return Err(Error::usage(format!(
                        "axis range requires start < stop, got [{start}, {stop}]"
                    )));
                }
                if matches!(spacing, Spacing::Log) && !(*start > 0.0) {
                    return Err(Error::usage(
                        "log spacing requires positive endpoints".to_string(),
                    ));
                }
                if *count == 1 {
                    return Ok(vec![*start]);
                }
                let n = *count;
                let pts = (0..n)
                    .map(|i| {
                        let t = i as f64 / (n - 1) as f64;
                        match spacing {
                            Spacing::Linear => start + (stop - start) * t,
                            Spacing::Log => start * (stop / start).powf(t),
                        }
                    })
                    .collect();
                Ok(pts)
            }
        }
    }
}

/// Parameter grid over nu (x mu) x x.
#[derive(Clone, Debug, Serialize)]
pub struct SweepGrid {
    pub nu: AxisSpec,
    pub mu: Option<AxisSpec>,
    pub x: AxisSpec,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GridPoint {
    pub nu: f64,
    pub mu: Option<f64>,
    pub x: f64,
}

impl SweepGrid {
    /// All points in deterministic order: nu outermost, then mu, then x.
    pub fn points(&self) -> Result<Vec<GridPoint>> {
        let nus = self.nu.expand()?;
        let mus = match &self.mu {
            Some(axis) => axis.expand()?.into_iter().map(Some).collect(),
            None => vec![None],
        };
        let xs = self.x.expand()?;
        let mut out = Vec::with_capacity(nus.len() * mus.len() * xs.len());
        for &nu in &nus {
            for &mu in &mus {
                for &x in &xs {
                    out.push(GridPoint { nu, mu, x });
                }
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expansion_and_validation() {
        let lin = AxisSpec::linear(0.0, 1.0, 5).expand().unwrap();
        assert_eq!(lin, vec![0.0, 0.25, 0.5, 0.75, 1.0]);
        let lg = AxisSpec::log(1e-2, 1e2, 5).expand().unwrap();
        assert!((lg[2] - 1.0).abs() < 1e-12);
        assert!(AxisSpec::log(-1.0, 1.0, 3).expand().is_err());
        assert!(AxisSpec::linear(1.0, 0.0, 3).expand().is_err());
        assert!(AxisSpec::values(&[]).expand().is_err());
    }

    #[test]
    fn cartesian_order_is_deterministic() {
        let g = SweepGrid {
            nu: AxisSpec::values(&[0.0, 1.0]),
            mu: None,
            x: AxisSpec::values(&[2.0, 3.0]),
        };
        let pts = g.points().unwrap();
        assert_eq!(pts.len(), 4);
        assert_eq!(pts[0].nu, 0.0);
        assert_eq!(pts[1].x, 3.0);
        assert_eq!(pts[3], GridPoint { nu: 1.0, mu: None, x: 3.0 });
    }
}
