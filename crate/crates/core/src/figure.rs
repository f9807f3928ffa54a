//! Data, CSV and SVG emission for the q_nu family plot: the eight orders
//! {0, 0.15, 0.2, 0.25, 0.33, 0.5, 1, 2} sampled on (x_min, 2.5].
//!
//! q_0 has a limit (value 1) rather than a value at x = 0, so the x-range
//! starts at a positive floor and the limit is carried as an annotation and
//! drawn as a marked point instead of being sampled.

use crate::bounds::q_ratio;
use crate::error::Result;
use crate::explore::q_zero_analytic_sup;

/// Orders plotted, in column order.
pub const FIGURE_ORDERS: [f64; 8] = [0.0, 0.15, 0.2, 0.25, 0.33, 0.5, 1.0, 2.0];

/// Default sampling floor of the figure.
pub const FIGURE_XMIN: f64 = 1e-3;
/// Right edge of the figure.
pub const FIGURE_XMAX: f64 = 2.5;
/// Sample count: 250 log-spaced points on [x_min, 1] (hitting 1 exactly)
/// plus 250 linear points on (1, 2.5].
pub const FIGURE_POINTS: usize = 500;

/// One sampled row: x and the eight q values.
#[derive(Clone, Debug)]
pub struct FigureRow {
    pub x: f64,
    pub q: [f64; 8],
}

/// The full figure: sampled rows plus the annotated x -> 0 limit of the
/// nu = 0 curve (the supremum of q_0 over (0, 1]).
#[derive(Clone, Debug)]
pub struct FigureData {
    pub rows: Vec<FigureRow>,
    /// (x, value) of the annotated limit point.
    pub annotated_limit: (f64, f64),
}

/// Sample the eight curves.
pub fn figure1_data(x_min: f64) -> Result<FigureData> {
    let half = FIGURE_POINTS / 2;
    let mut xs = Vec::with_capacity(FIGURE_POINTS);
    for i in 0..half {
        let t = i as f64 / (half - 1) as f64;
        xs.push(x_min * (1.0 / x_min).powf(t));
    }
    let step = (FIGURE_XMAX - 1.0) / half as f64;
    for i in 1..=half {
        xs.push(1.0 + step * i as f64);
    }
    let mut rows = Vec::with_capacity(xs.len());
    for &x in &xs {
        let mut q = [0.0f64; 8];
        for (j, &nu) in FIGURE_ORDERS.iter().enumerate() {
            q[j] = q_ratio(nu, x)?;
        }
        rows.push(FigureRow { x, q });
    }
    Ok(FigureData {
        rows,
        annotated_limit: (0.0, q_zero_analytic_sup()),
    })
}

/// CSV: header `x,q_nu_0,q_nu_0.15,...` and one row per sample.
pub fn figure1_csv(data: &FigureData) -> String {
    let mut out = String::from("x");
    for nu in FIGURE_ORDERS {
        out.push_str(&format!(",q_nu_{nu}"));
    }
    out.push('\n');
    for row in &data.rows {
        out.push_str(&row.x.to_string());
        for v in row.q {
            out.push(',');
            out.push_str(&v.to_string());
        }
        out.push('\n');
    }
    out
}

const SVG_W: f64 = 800.0;
const SVG_H: f64 = 500.0;
const MARGIN_L: f64 = 60.0;
const MARGIN_R: f64 = 120.0;
const MARGIN_T: f64 = 20.0;
const MARGIN_B: f64 = 45.0;

const COLORS: [&str; 8] = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
];

/// Minimal line chart: axes, legend, one polyline per order, and the
/// annotated limit point of the nu = 0 curve.
pub fn figure1_svg(data: &FigureData) -> String {
    let y_max = 1.05f64;
    let px = |x: f64| MARGIN_L + (x / FIGURE_XMAX) * (SVG_W - MARGIN_L - MARGIN_R);
    let py = |y: f64| SVG_H - MARGIN_B - (y / y_max) * (SVG_H - MARGIN_T - MARGIN_B);

    let mut svg = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {SVG_W} {SVG_H}\" \
         font-family=\"sans-serif\" font-size=\"12\">\n"
    );
    // axes
    svg.push_str(&format!(
        "  <line x1=\"{l}\" y1=\"{b}\" x2=\"{r}\" y2=\"{b}\" stroke=\"black\"/>\n  \
         <line x1=\"{l}\" y1=\"{t}\" x2=\"{l}\" y2=\"{b}\" stroke=\"black\"/>\n",
        l = MARGIN_L,
        r = SVG_W - MARGIN_R,
        t = MARGIN_T,
        b = SVG_H - MARGIN_B,
    ));
    for tick in [0.0f64, 0.5, 1.0, 1.5, 2.0, 2.5] {
        svg.push_str(&format!(
            "  <text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{tick}</text>\n",
            px(tick),
            SVG_H - MARGIN_B + 18.0
        ));
    }
    for tick in [0.0f64, 0.25, 0.5, 0.75, 1.0] {
        svg.push_str(&format!(
            "  <text x=\"{}\" y=\"{}\" text-anchor=\"end\">{tick}</text>\n",
            MARGIN_L - 6.0,
            py(tick) + 4.0
        ));
    }
    svg.push_str(&format!(
        "  <text x=\"{}\" y=\"{}\" text-anchor=\"middle\">x</text>\n",
        px(FIGURE_XMAX / 2.0),
        SVG_H - 8.0
    ));
    svg.push_str(&format!(
        "  <text x=\"14\" y=\"{}\" transform=\"rotate(-90 14 {y})\" text-anchor=\"middle\">q(x)</text>\n",
        py(0.5),
        y = py(0.5)
    ));

    for (j, &nu) in FIGURE_ORDERS.iter().enumerate() {
        let pts: Vec<String> = data
            .rows
            .iter()
            .map(|row| format!("{:.2},{:.2}", px(row.x), py(row.q[j])))
            .collect();
        svg.push_str(&format!(
            "  <polyline fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\" points=\"{}\"/>\n",
            COLORS[j],
            pts.join(" ")
        ));
        svg.push_str(&format!(
            "  <text x=\"{}\" y=\"{}\" fill=\"{}\">nu = {nu}</text>\n",
            SVG_W - MARGIN_R + 10.0,
            MARGIN_T + 16.0 * (j as f64 + 1.0),
            COLORS[j]
        ));
    }

    // annotated x -> 0 limit of the nu = 0 curve
    let (ax, ay) = data.annotated_limit;
    svg.push_str(&format!(
        "  <circle cx=\"{}\" cy=\"{}\" r=\"4\" fill=\"{}\"/>\n  \
         <text x=\"{}\" y=\"{}\">limit {ay}</text>\n",
        px(ax),
        py(ay),
        COLORS[0],
        px(ax) + 8.0,
        py(ay) - 6.0
    ));
    svg.push_str("</svg>\n");
    svg
}
