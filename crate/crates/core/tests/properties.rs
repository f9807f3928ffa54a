//! Property tests for the structural invariants of the kernels and checks.

use besselprod::bounds::{self, check_inequality, InequalityId, Verdict};
use besselprod::quadrature::{integrate, IntegrationSpec};
use besselprod::specfun::{bessel, product_ik, BesselFamily};
use proptest::prelude::*;

proptest! {
    #[test]
    fn k_is_even_in_the_order(nu in -20.0f64..20.0, x in 1e-3f64..50.0) {
        let plus = bessel(BesselFamily::K, nu, x, true).unwrap();
        let minus = bessel(BesselFamily::K, -nu, x, true).unwrap();
        prop_assert!((plus.value - minus.value).abs() <= plus.value.abs() * 1e-12);
    }

    #[test]
    fn scaled_and_unscaled_agree(nu in 0.0f64..10.0, x in 0.1f64..20.0) {
        for family in [BesselFamily::I, BesselFamily::K] {
            let s = bessel(family, nu, x, true).unwrap();
            let u = bessel(family, nu, x, false).unwrap();
            prop_assert!(s.scaled && !u.scaled);
            prop_assert_eq!(u.scale_exponent, 0.0);
            let rel = (s.unscaled_value() - u.value).abs() / u.value.abs();
            prop_assert!(rel <= 1e-12, "family {:?} rel {}", family, rel);
        }
    }

    #[test]
    fn eval_result_error_invariants(nu in -0.9f64..30.0, x in 1e-3f64..100.0) {
        let r = bessel(BesselFamily::K, nu, x, true).unwrap();
        prop_assert!(r.abs_err >= 0.0 && r.abs_err.is_finite());
        let p = product_ik(nu.abs(), nu.abs(), x).unwrap();
        prop_assert!(p.abs_err >= 0.0 && p.abs_err.is_finite());
        if !p.scaled {
            prop_assert_eq!(p.scale_exponent, 0.0);
        }
    }

    #[test]
    fn wronskian_band(nu in -0.99f64..20.0, x in 1e-3f64..100.0) {
        let r = check_inequality(InequalityId::WR, nu, None, x).unwrap();
        prop_assert_eq!(r.verdict, Verdict::Holds, "W off by {} at ({}, {})", r.lhs, nu, x);
    }

    #[test]
    fn half_integer_product_closed_form(x in 1e-3f64..50.0) {
        let p = product_ik(0.5, 0.5, x).unwrap().value;
        let closed = (1.0 - (-2.0 * x).exp()) / (2.0 * x);
        prop_assert!((p - closed).abs() <= closed * 1e-12);
    }

    #[test]
    fn product_decreases_in_order(nu1 in 0.0f64..10.0, d in 0.01f64..5.0, x in 0.05f64..20.0) {
        let lo = product_ik(nu1, nu1, x).unwrap().value;
        let hi = product_ik(nu1 + d, nu1 + d, x).unwrap().value;
        prop_assert!(hi <= lo * (1.0 + 1e-11));
    }

    #[test]
    fn log_derivative_bounds_hold(nu in -0.99f64..20.0, x in 1e-3f64..100.0) {
        let r = check_inequality(InequalityId::LD, nu, None, x).unwrap();
        prop_assert_eq!(r.verdict, Verdict::Holds, "margin {} at ({}, {})", r.margin, nu, x);
    }

    #[test]
    fn integrate_is_additive(split in 0.1f64..0.9) {
        let f = |t: f64| (3.0 * t).sin() * (-t).exp();
        let spec = |a, b| IntegrationSpec::finite(a, b).with_rel_tol(1e-11);
        let whole = integrate(f, &spec(0.0, 1.0)).unwrap();
        let left = integrate(f, &spec(0.0, split)).unwrap();
        let right = integrate(f, &spec(split, 1.0)).unwrap();
        let diff = (whole.value - left.value - right.value).abs();
        prop_assert!(diff <= whole.abs_err + left.abs_err + right.abs_err + 1e-12);
    }

    #[test]
    fn tp_bound_weaker_than_tc_upper(nu in 0.55f64..8.0, x in 0.05f64..20.0) {
        // rhs of TP exceeds the TC upper rhs, so TP must hold wherever TC does
        let tc = check_inequality(InequalityId::TC, nu, None, x).unwrap();
        let tp = check_inequality(InequalityId::TP, nu, None, x).unwrap();
        if tc.verdict == Verdict::Holds {
            prop_assert_eq!(tp.verdict, Verdict::Holds);
        }
        prop_assert!(tp.margin >= tc.rhs - tc.lhs - 1e-15);
    }

    #[test]
    fn u_bounds_scale_exactly_as_cbrt(x1 in 0.01f64..100.0, x2 in 0.01f64..100.0) {
        let u2a = bounds::upper_bound(InequalityId::U2, 1.0, 1.0, x1).unwrap();
        let u2b = bounds::upper_bound(InequalityId::U2, 1.0, 1.0, x2).unwrap();
        let s1 = u2a * (2.0 * x1).cbrt();
        let s2 = u2b * (2.0 * x2).cbrt();
        prop_assert!((s1 - s2).abs() <= s1.abs() * 1e-14);
        let u3a = bounds::upper_bound(InequalityId::U3, 0.5, 1.5, x1).unwrap();
        let u3b = bounds::upper_bound(InequalityId::U3, 0.5, 1.5, x2).unwrap();
        let s1 = u3a * (2.0 * x1).cbrt();
        let s2 = u3b * (2.0 * x2).cbrt();
        prop_assert!((s1 - s2).abs() <= s1.abs() * 1e-14);
    }

    #[test]
    fn t1_two_sided_band_for_nu_zero(i in 0u32..200) {
        // ln2 - gamma < f_0(x) <= P_0(1) + 1e-5 on (0, 1]
        let x = 1e-4f64 * (1.0f64 / 1e-4).powf(i as f64 / 199.0);
        let f = bounds::f_shifted_log(0.0, x).unwrap();
        prop_assert!(f > 0.115_931_515_658_412_45 - 1e-12);
        prop_assert!(f <= 0.533_045 + 1e-5);
    }
}
