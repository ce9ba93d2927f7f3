use num_complex::Complex64;
use proptest::prelude::*;
use wright_radii::radii::LEMNISCATE_DISK_TARGET;
use wright_radii::*;

const TOL: f64 = 1e-15;

fn params(rho: f64, beta: f64) -> WrightParams {
    WrightParams::new(rho, beta).unwrap()
}

fn disk_point(max_r: f64) -> impl Strategy<Value = Complex64> {
    (0.0..max_r, 0.0..std::f64::consts::TAU).prop_map(|(r, t)| Complex64::from_polar(r, t))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn shift_identity(rho in 0.3..3.0f64, beta in 0.2..3.0f64, z in disk_point(10.0)) {
        let p = params(rho, beta);
        let d = wright_derivative(&p, z, 1, TOL).unwrap();
        let s = wright_eval(&params(rho, beta + rho), z, TOL).unwrap();
        let d2 = wright_derivative(&p, z, 2, TOL).unwrap();
        let s2 = wright_eval(&params(rho, beta + 2.0 * rho), z, TOL).unwrap();
        // rounding scales with the magnitude of the largest term, bounded by W at |z|
        let scale = wright_eval(&params(rho, beta), Complex64::new(z.norm(), 0.0), TOL).unwrap().value.re;
        let slack = 1e-13 * scale.max(1.0);
        prop_assert!((d.value - s.value).norm() <= d.abs_error_bound + s.abs_error_bound + slack);
        prop_assert!((d2.value - s2.value).norm() <= d2.abs_error_bound + s2.abs_error_bound + slack);
    }

    #[test]
    fn recurrence(rho in 0.3..3.0f64, beta in 1.01..4.0f64, z in disk_point(5.0)) {
        let lhs = wright_eval(&params(rho, beta - 1.0), z, TOL).unwrap();
        let a = wright_eval(&params(rho, beta + rho), z, TOL).unwrap();
        let b = wright_eval(&params(rho, beta), z, TOL).unwrap();
        let rhs = rho * z * a.value + (beta - 1.0) * b.value;
        let bound = lhs.abs_error_bound + rho * z.norm() * a.abs_error_bound + (beta - 1.0) * b.abs_error_bound;
        prop_assert!((lhs.value - rhs).norm() <= bound + 1e-12, "{}", (lhs.value - rhs).norm());
    }

    #[test]
    fn conjugate_symmetry(rho in 0.3..3.0f64, beta in 0.2..3.0f64, z in disk_point(10.0)) {
        let p = params(rho, beta);
        let a = wright_eval(&p, z, TOL).unwrap().value;
        let b = wright_eval(&p, z.conj(), TOL).unwrap().value;
        prop_assert!((a.conj() - b).norm() <= 1e-14 * a.norm().max(1.0));
    }

    #[test]
    fn error_bound_is_honest(rho in 0.3..3.0f64, beta in 0.2..3.0f64, z in disk_point(10.0), tol in 1e-14..1e-4f64) {
        let p = params(rho, beta);
        let r = wright_eval(&p, z, tol).unwrap();
        prop_assert!(r.abs_error_bound <= tol);
        // redo the sum independently with 50% more terms
        let n = r.terms_used + r.terms_used / 2 + 1;
        let mut sum = Complex64::new(0.0, 0.0);
        let mut abs_sum = 0.0;
        let mut ln_fact = 0.0;
        let mut zn = Complex64::new(1.0, 0.0);
        for k in 0..n {
            if k > 1 {
                ln_fact += (k as f64).ln();
            }
            let coef = (-ln_fact - log_gamma(rho * k as f64 + beta).unwrap()).exp();
            sum += zn * coef;
            abs_sum += zn.norm() * coef;
            zn *= z;
        }
        prop_assert!((sum - r.value).norm() <= r.abs_error_bound + 1e-14 * abs_sum.max(1.0));
    }

    #[test]
    fn f_and_g_functionals_are_related(rho in 0.3..2.5f64, beta in 0.3..2.5f64, z in disk_point(0.6)) {
        let p = params(rho, beta);
        let wf = starlike_functional(NormalizedKind::F, &p, z, TOL).unwrap().value;
        let wg = starlike_functional(NormalizedKind::G, &p, z, TOL).unwrap().value;
        prop_assert!(((wf - 1.0) - (wg - 1.0) / beta).norm() <= 1e-12);
    }

    #[test]
    fn functionals_are_conjugate_symmetric(rho in 0.3..2.5f64, beta in 0.3..2.5f64, z in disk_point(0.5)) {
        let p = params(rho, beta);
        for kind in NormalizedKind::ALL {
            let a = starlike_functional(kind, &p, z, TOL).unwrap().value;
            let b = starlike_functional(kind, &p, z.conj(), TOL).unwrap().value;
            prop_assert!((a.conj() - b).norm() <= 1e-13);
            let a = convex_functional(kind, &p, z, TOL).unwrap().value;
            let b = convex_functional(kind, &p, z.conj(), TOL).unwrap().value;
            prop_assert!((a.conj() - b).norm() <= 1e-13);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn starlike_g_decreases_on_the_real_axis(rho in 0.3..2.5f64, beta in 0.3..2.5f64) {
        let p = params(rho, beta);
        let lam = positive_zeros(&p, Form::MinusZSquared, 1, 1e-12).unwrap().first();
        let mut prev = f64::INFINITY;
        for i in 1..=100 {
            let r = lam * i as f64 / 101.0;
            let w = starlike_functional(NormalizedKind::G, &p, Complex64::new(r, 0.0), TOL).unwrap().value.re;
            prop_assert!(w < prev, "r = {}", r);
            prev = w;
        }
    }

    #[test]
    fn zero_tables_increase_and_interlace(rho in 0.3..2.5f64, beta in 0.3..2.5f64) {
        let p = params(rho, beta);
        for form in [Form::MinusZSquared, Form::MinusZ] {
            let t = positive_zeros(&p, form, 6, 1e-12).unwrap();
            prop_assert!(t.first() > 0.0);
            prop_assert!(t.zeros.windows(2).all(|w| w[0] < w[1]));
        }
        let lam = positive_zeros(&p, Form::MinusZSquared, 1, 1e-12).unwrap().first();
        let mu = derivative_positive_zeros(NormalizedKind::G, &p, 1, 1e-12).unwrap().first();
        prop_assert!(mu < lam);
        let lam_h = positive_zeros(&p, Form::MinusZ, 1, 1e-12).unwrap().first();
        let mu_h = derivative_positive_zeros(NormalizedKind::H, &p, 1, 1e-12).unwrap().first();
        prop_assert!(mu_h < lam_h);
    }
}

fn kind_strategy() -> impl Strategy<Value = NormalizedKind> {
    prop::sample::select(NormalizedKind::ALL.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn certifier_contract(kind in kind_strategy(), rho in 0.4..2.2f64, beta in 0.4..2.2f64, convex in any::<bool>(), tol in 1e-10..1e-6f64) {
        let q = RadiusQuery::lemniscate(kind, params(rho, beta), convex);
        let r = radius_by_certification(&q, tol).unwrap();
        prop_assert!(r.bracket.0 <= r.radius && r.radius <= r.bracket.1);
        prop_assert!(r.bracket.1 - r.bracket.0 <= tol);
        prop_assert!(!r.reached_domain_bound);
        prop_assert!((r.sup_at_radius - 1.0).abs() < 1e-4, "sup {}", r.sup_at_radius);
        prop_assert!(r.clamped == r.radius.min(1.0));
    }

    #[test]
    fn boundary_sup_increases_with_radius(kind in kind_strategy(), rho in 0.4..2.2f64, beta in 0.4..2.2f64, convex in any::<bool>()) {
        let jp = JanowskiParams::new(1.0, -1.0).unwrap();
        for q in [
            RadiusQuery::janowski(kind, params(rho, beta), convex, jp),
            RadiusQuery::lemniscate(kind, params(rho, beta), convex),
        ] {
            // below the radius the functional is analytic on the closed disk
            let radius = radius_by_certification(&q, 1e-9).unwrap().radius;
            let mut prev = -1.0;
            for i in 1..=10 {
                let s = boundary_sup(&q, radius * i as f64 / 10.0, 1e-6).unwrap().sup;
                prop_assert!(s > prev);
                prev = s;
            }
        }
    }

    #[test]
    fn lemniscate_radius_is_sandwiched(kind in kind_strategy(), rho in 0.4..2.2f64, beta in 0.4..2.2f64, convex in any::<bool>()) {
        // the disk |w - 1| < 1 - (2 - √2) lies in the lemniscate loop, which lies in |w - 1| < 1
        let p = params(rho, beta);
        let q = RadiusQuery::lemniscate(kind, p, convex);
        let cert = radius_by_certification(&q, 1e-9).unwrap().radius;
        let lower = radius_real_axis(&q, LEMNISCATE_DISK_TARGET, 1e-9).unwrap().radius;
        let outer = RadiusQuery::janowski(kind, p, convex, JanowskiParams::new(1.0, 0.0).unwrap());
        let upper = radius_by_certification(&outer, 1e-9).unwrap().radius;
        prop_assert!(lower <= cert + 1e-9, "{} > {}", lower, cert);
        prop_assert!(cert <= upper + 1e-9, "{} > {}", cert, upper);
    }

    #[test]
    fn janowski_certifier_matches_real_axis(kind in kind_strategy(), rho in 0.4..2.2f64, beta in 0.4..2.2f64, convex in any::<bool>(), a in 0.0..1.0f64, b in -1.0..0.0f64) {
        prop_assume!(b < a);
        let jp = JanowskiParams::new(a, b).unwrap();
        let q = RadiusQuery::janowski(kind, params(rho, beta), convex, jp);
        let cert = radius_by_certification(&q, 1e-9).unwrap();
        let axis = radius_real_axis(&q, q.default_real_axis_target(), 1e-9).unwrap();
        prop_assert!((cert.radius - axis.radius).abs() < 1e-5, "{} vs {}", cert.radius, axis.radius);
    }
}
