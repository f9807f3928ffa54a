//! Command-line front end: evaluate kernels and bounds, sweep inequality
//! checks over grids, reproduce the q_nu family figure, and bracket the open
//! threshold orders.
//!
//! Exit codes: 0 success / all checks hold; 1 at least one violated verdict;
//! 2 indeterminate results present but no violations; 3 usage or domain
//! error.

use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};

use besselprod::bounds::{self, InequalityId};
use besselprod::error::Error;
use besselprod::explore::{self, BracketCriterion};
use besselprod::figure;
use besselprod::specfun::{self, BesselFamily};
use besselprod::verify::{self, AxisSpec, SweepGrid, SweepReport};

#[derive(Parser)]
#[command(
    name = "besselprod",
    version,
    about = "Product of modified Bessel functions: evaluation, bound verification, exploration"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate a function at one point (15 significant digits).
    Eval {
        /// One of: product, bessel-i, bessel-k, bessel-j, struve-l, gamma,
        /// log-gamma, logderiv-i, logderiv-k, f, tail-gap, q, g, cal-p
        function: String,
        #[arg(long, allow_hyphen_values = true)]
        nu: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        x: f64,
        /// Exponentially scaled evaluation (I and K only).
        #[arg(long)]
        scaled: bool,
    },
    /// Evaluate a bound formula (U1, U2, U3, L1, L2, L3) at one point.
    Bound {
        #[arg(long)]
        id: String,
        #[arg(long, allow_hyphen_values = true)]
        nu: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        x: f64,
    },
    /// Sweep one inequality over a grid, or run the whole default suite.
    Verify {
        /// Inequality id (U1..U3, L1..L3, T1..T3, TP, TI, TK, TC, LD, WR, LC).
        #[arg(long, conflicts_with = "suite")]
        id: Option<String>,
        /// Run the default grids for every id.
        #[arg(long)]
        suite: bool,
        #[command(flatten)]
        nu_axis: NuAxis,
        #[command(flatten)]
        mu_axis: MuAxis,
        #[command(flatten)]
        x_axis: XAxis,
        /// Write the report here (format per --format).
        #[arg(long)]
        out: Option<PathBuf>,
        /// csv or json
        #[arg(long, default_value = "csv")]
        format: String,
    },
    /// Emit the q_nu family figure (orders 0, 0.15, 0.2, 0.25, 0.33, 0.5, 1, 2).
    Figure1 {
        #[arg(long)]
        out: PathBuf,
        /// csv or svg
        #[arg(long, default_value = "csv")]
        format: String,
    },
    /// Bracket the open threshold orders of q_nu on (0, 1].
    Explore {
        /// nu-star, nu-circ, or both
        #[arg(long, default_value = "both")]
        target: String,
        #[arg(long, default_value_t = 0.01)]
        tol: f64,
        /// Write the JSON report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct NuAxis {
    #[arg(long, allow_hyphen_values = true)]
    nu: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    nu_min: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    nu_max: Option<f64>,
    #[arg(long)]
    nu_count: Option<usize>,
    #[arg(long)]
    nu_log: bool,
}

#[derive(Args)]
struct MuAxis {
    #[arg(long, allow_hyphen_values = true)]
    mu: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    mu_min: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    mu_max: Option<f64>,
    #[arg(long)]
    mu_count: Option<usize>,
    #[arg(long)]
    mu_log: bool,
}

#[derive(Args)]
struct XAxis {
    #[arg(long, allow_hyphen_values = true)]
    x: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    x_min: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    x_max: Option<f64>,
    #[arg(long)]
    x_count: Option<usize>,
    #[arg(long)]
    x_log: bool,
}

fn axis(
    what: &str,
    value: Option<f64>,
    min: Option<f64>,
    max: Option<f64>,
    count: Option<usize>,
    log: bool,
) -> Result<Option<AxisSpec>, Error> {
    match (value, min, max) {
        (Some(v), None, None) => Ok(Some(AxisSpec::Values(vec![v]))),
        (None, Some(lo), Some(hi)) => {
            let n = count.unwrap_or(50);
            Ok(Some(if log {
                AxisSpec::log(lo, hi, n)
            } else {
                AxisSpec::linear(lo, hi, n)
            }))
        }
        (None, None, None) => Ok(None),
        _ => Err(Error::usage(format!(
            "{what} axis: give either --{what} or --{what}-min/--{what}-max"
        ))),
    }
}

/// 15 significant digits; plain decimal in mid magnitudes, scientific
/// otherwise, so goldens stay diffable.
fn fifteen_sig(v: f64) -> String {
    if v == 0.0 || !v.is_finite() {
        return format!("{v}");
    }
    let mag = v.abs().log10().floor() as i32;
    if (-4..15).contains(&mag) {
        let decimals = (14 - mag).max(0) as usize;
        format!("{v:.decimals$}")
    } else {
        format!("{v:.14e}")
    }
}

fn eval_cmd(
    function: &str,
    nu: Option<f64>,
    mu: Option<f64>,
    x: f64,
    scaled: bool,
) -> Result<String, Error> {
    let need_nu = || nu.ok_or_else(|| Error::usage(format!("{function} requires --nu")));
    let r = match function {
        "product" => {
            let n = need_nu()?;
            specfun::product_ik(n, mu.unwrap_or(n), x)?
        }
        "bessel-i" => specfun::bessel(BesselFamily::I, need_nu()?, x, scaled)?,
        "bessel-k" => specfun::bessel(BesselFamily::K, need_nu()?, x, scaled)?,
        "bessel-j" => specfun::bessel(BesselFamily::J, need_nu()?, x, scaled)?,
        "struve-l" => specfun::bessel(BesselFamily::L, need_nu()?, x, scaled)?,
        "gamma" => specfun::gamma_fn(x, false)?,
        "log-gamma" => specfun::gamma_fn(x, true)?,
        "logderiv-i" => specfun::log_derivative(BesselFamily::I, need_nu()?, x)?,
        "logderiv-k" => specfun::log_derivative(BesselFamily::K, need_nu()?, x)?,
        "f" => besselprod::EvalResult::exact(bounds::f_shifted_log(need_nu()?, x)?),
        "tail-gap" => besselprod::EvalResult::exact(bounds::tail_gap(need_nu()?, x)?),
        "q" => besselprod::EvalResult::exact(bounds::q_ratio(need_nu()?, x)?),
        "g" => besselprod::EvalResult::exact(bounds::g_fn(need_nu()?, x)?),
        "cal-p" => besselprod::EvalResult::exact(bounds::cal_p(need_nu()?, x)?),
        other => return Err(Error::usage(format!("unknown function '{other}'"))),
    };
    if r.scaled {
        Ok(format!(
            "{} (scale_exponent = {})",
            fifteen_sig(r.value),
            fifteen_sig(r.scale_exponent)
        ))
    } else {
        Ok(fifteen_sig(r.value))
    }
}

fn bound_cmd(id: &str, nu: Option<f64>, mu: Option<f64>, x: f64) -> Result<String, Error> {
    let id = InequalityId::from_str(id)?;
    let v = match id {
        InequalityId::U1 | InequalityId::U3 => {
            let n = nu.ok_or_else(|| Error::usage("--nu required"))?;
            let m = mu.ok_or_else(|| Error::usage("--mu required"))?;
            bounds::upper_bound(id, n, m, x)?
        }
        // the U2 value does not depend on the orders
        InequalityId::U2 => bounds::upper_bound(id, nu.unwrap_or(1.0), mu.unwrap_or(1.0), x)?,
        InequalityId::L1 | InequalityId::L2 | InequalityId::L3 => {
            let n = nu.ok_or_else(|| Error::usage("--nu required"))?;
            bounds::lower_bound(id, n, x)?
        }
        other => {
            return Err(Error::usage(format!(
                "'{other}' is not a bound formula; use `verify --id {other}` to check it"
            )))
        }
    };
    Ok(fifteen_sig(v))
}

fn write_or_err(path: &PathBuf, content: &str) -> Result<(), Error> {
    std::fs::write(path, content)
        .map_err(|e| Error::usage(format!("cannot write {}: {e}", path.display())))
}

fn emit_report(rep: &SweepReport, out: Option<&PathBuf>, format: &str) -> Result<(), Error> {
    let body = match format {
        "csv" => rep.to_csv(),
        "json" => rep.to_json(),
        other => return Err(Error::usage(format!("unknown format '{other}'"))),
    };
    match out {
        Some(path) => write_or_err(path, &body),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn summary_line(rep: &SweepReport) -> String {
    format!(
        "{}: {} checked, {} hold, {} violated, {} indeterminate, {} skipped, min margin {}",
        rep.id,
        rep.records.len(),
        rep.n_holds,
        rep.n_violated,
        rep.n_indeterminate,
        rep.n_skipped_domain,
        rep.min_margin.map_or("-".to_string(), |m| format!("{m:.3e}")),
    )
}

fn verify_cmd(
    id: Option<String>,
    suite: bool,
    nu_axis: NuAxis,
    mu_axis: MuAxis,
    x_axis: XAxis,
    out: Option<PathBuf>,
    format: String,
) -> Result<i32, Error> {
    if suite {
        let mut worst = 0i32;
        let mut reports = Vec::new();
        for id in verify::config::default_suite() {
            let rep = verify::sweep(id, &verify::config::default_grid(id))?;
            eprintln!("{}", summary_line(&rep));
            worst = worst.max(rep.exit_code());
            reports.push(rep);
        }
        if let Some(path) = out {
            let body = match format.as_str() {
                "json" => serde_json::to_string_pretty(&reports).expect("reports serialise"),
                "csv" => {
                    let mut all = String::from("id,nu,mu,x,lhs,rhs,margin,verdict\n");
                    for rep in &reports {
                        if let Some((_, rows)) = rep.to_csv().split_once('\n') {
                            all.push_str(rows);
                        }
                    }
                    all
                }
                other => return Err(Error::usage(format!("unknown format '{other}'"))),
            };
            write_or_err(&path, &body)?;
        }
        return Ok(worst);
    }

    let id = InequalityId::from_str(
        &id.ok_or_else(|| Error::usage("verify needs --id or --suite"))?,
    )?;
    let nu = axis("nu", nu_axis.nu, nu_axis.nu_min, nu_axis.nu_max, nu_axis.nu_count, nu_axis.nu_log)?;
    let mu = axis("mu", mu_axis.mu, mu_axis.mu_min, mu_axis.mu_max, mu_axis.mu_count, mu_axis.mu_log)?;
    let x = axis("x", x_axis.x, x_axis.x_min, x_axis.x_max, x_axis.x_count, x_axis.x_log)?;
    let grid = match (nu, x) {
        (None, None) if mu.is_none() => verify::config::default_grid(id),
        (Some(nu), Some(x)) => SweepGrid { nu, mu, x },
        _ => {
            return Err(Error::usage(
                "give both a nu axis and an x axis (or neither, for the default grid)",
            ))
        }
    };
    let rep = verify::sweep(id, &grid)?;
    eprintln!("{}", summary_line(&rep));
    emit_report(&rep, out.as_ref(), &format)?;
    Ok(rep.exit_code())
}

fn figure1_cmd(out: PathBuf, format: String) -> Result<i32, Error> {
    let data = figure::figure1_data(figure::FIGURE_XMIN)?;
    let body = match format.as_str() {
        "csv" => figure::figure1_csv(&data),
        "svg" => figure::figure1_svg(&data),
        other => return Err(Error::usage(format!("unknown format '{other}'"))),
    };
    write_or_err(&out, &body)?;
    Ok(0)
}

fn explore_cmd(target: String, tol: f64, out: Option<PathBuf>) -> Result<i32, Error> {
    let criteria = match target.as_str() {
        "nu-star" => vec![BracketCriterion::MaxExcess],
        "nu-circ" => vec![BracketCriterion::MinSlope],
        "both" => vec![BracketCriterion::MaxExcess, BracketCriterion::MinSlope],
        other => return Err(Error::usage(format!("unknown explore target '{other}'"))),
    };
    let reports: Vec<_> = criteria
        .into_iter()
        .map(|c| explore::explore_report(c, tol))
        .collect::<Result<_, _>>()?;
    let body = serde_json::to_string_pretty(&reports).expect("reports serialise");
    match out {
        Some(path) => write_or_err(&path, &body)?,
        None => println!("{body}"),
    }
    Ok(0)
}

fn dispatch(cli: Cli) -> Result<i32, Error> {
    match cli.cmd {
        Cmd::Eval {
            function,
            nu,
            mu,
            x,
            scaled,
        } => {
            println!("{}", eval_cmd(&function, nu, mu, x, scaled)?);
            Ok(0)
        }
        Cmd::Bound { id, nu, mu, x } => {
            println!("{}", bound_cmd(&id, nu, mu, x)?);
            Ok(0)
        }
        Cmd::Verify {
            id,
            suite,
            nu_axis,
            mu_axis,
            x_axis,
            out,
            format,
        } => verify_cmd(id, suite, nu_axis, mu_axis, x_axis, out, format),
        Cmd::Figure1 { out, format } => figure1_cmd(out, format),
        Cmd::Explore { target, tol, out } => explore_cmd(target, tol, out),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap renders its own usage text; route everything to stderr
            eprint!("{e}");
            return ExitCode::from(3);
        }
    };
    match dispatch(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("besselprod: {e}");
            ExitCode::from(3)
        }
    }
}
