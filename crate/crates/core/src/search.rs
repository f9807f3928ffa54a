//! Derivative-free 1-D search helpers: golden-section maximisation and
//! threshold bisection over a monotone predicate.

/// Golden-section search for a maximum of `f` on `[lo, hi]`.
/// Returns `(x, f(x))` at the best point found.
pub(crate) fn golden_max(
    f: impl Fn(f64) -> f64,
    mut lo: f64,
    mut hi: f64,
    tol: f64,
    max_iter: usize,
) -> (f64, f64) {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut a = hi - INV_PHI * (hi - lo);
    let mut b = lo + INV_PHI * (hi - lo);
    let mut fa = f(a);
    let mut fb = f(b);
    for _ in 0..max_iter {
        if hi - lo <= tol {
            break;
        }
        if fa < fb {
            lo = a;
            a = b;
            fa = fb;
            b = lo + INV_PHI * (hi - lo);
            fb = f(b);
        } else {
            hi = b;
            b = a;
            fb = fa;
            a = hi - INV_PHI * (hi - lo);
            fa = f(a);
        }
    }
    if fa >= fb {
        (a, fa)
    } else {
        (b, fb)
    }
}

/// Bisection for the smallest point where a monotone predicate flips to true.
/// Requires `pred(lo) == false` and `pred(hi) == true`; returns the final
/// `(lo, hi)` with `hi - lo <= tol` preserving that sign structure.
pub(crate) fn bisect_smallest_true(
    pred: impl Fn(f64) -> bool,
    mut lo: f64,
    mut hi: f64,
    tol: f64,
) -> (f64, f64) {
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if pred(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    (lo, hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_finds_parabola_peak() {
        let (x, fx) = golden_max(|t: f64| -(t - 1.7) * (t - 1.7) + 3.0, 0.0, 4.0, 1e-10, 200);
        // position resolves to ~sqrt(eps) near a flat maximum; value much better
        assert!((x - 1.7).abs() < 1e-6);
        assert!((fx - 3.0).abs() < 1e-12);
    }

    #[test]
    fn bisect_locates_threshold() {
        let (lo, hi) = bisect_smallest_true(|t| t >= 0.37, 0.0, 1.0, 1e-9);
        assert!(lo < 0.37 && 0.37 <= hi + 1e-12);
        assert!(hi - lo <= 1e-9);
    }
}
