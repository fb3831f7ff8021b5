use bohr_radius::janowski::{coeff_bound, JanowskiMajorant, JanowskiParams};
use bohr_radius::numerics::{sum_series, NeumaierSum};
use bohr_radius::subord::{denom, SubordParams};
use bohr_radius::{alpha_convex, starlike, subord, typreal, ToleranceConfig};
use proptest::prelude::*;

fn janowski() -> impl Strategy<Value = JanowskiParams> {
    (-1.0f64..0.99, 0.0f64..1.0).prop_filter_map("admissible pair", |(b, t)| {
        let a = b + t * (1.0 - b);
        JanowskiParams::new(a, b).ok()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn certified_sum_matches_longer_reference(p in janowski(), r in 0.01f64..0.9) {
        let cfg = ToleranceConfig::default();
        let (value, terms) = sum_series(JanowskiMajorant::new(p), r, &cfg).unwrap();
        let reference: NeumaierSum = (1..=10 * terms).map(|n| coeff_bound(p, n) * r.powi(n as i32)).collect();
        let reference = reference.value();
        prop_assert!((value - reference).abs() <= 1e-12 * reference.max(1.0), "{value} vs {reference}");
    }

    #[test]
    fn denominator_factors(beta in 0.0f64..5.0, t in 0.0f64..1.0, n in 1usize..50) {
        let gamma = beta * t;
        let p = SubordParams::new(beta, gamma, JanowskiParams::new(1.0, -1.0).unwrap()).unwrap();
        let nf = n as f64;
        let d = denom(&p, n);
        prop_assert!((d - (1.0 + beta * nf + gamma * nf * (nf - 1.0))).abs() <= 1e-12 * d);
        let disc = (beta - gamma).powi(2) - 4.0 * gamma;
        if disc >= 0.0 {
            let mu = 0.5 * (beta - gamma + disc.sqrt());
            let nu = 0.5 * (beta - gamma - disc.sqrt());
            prop_assert!(((1.0 + mu * nf) * (1.0 + nu * nf) - d).abs() <= 1e-10 * d);
        }
    }

    #[test]
    fn zero_damping_is_the_janowski_class(p in janowski()) {
        let cfg = ToleranceConfig::default();
        let st = starlike::bohr_radius_st(p, &cfg).unwrap().radius;
        let sub = subord::bohr_radius_subord(SubordParams::new(0.0, 0.0, p).unwrap(), &cfg).unwrap().radius;
        prop_assert!((st - sub).abs() <= 1e-9, "{st} vs {sub}");
    }

    #[test]
    fn damping_raises_the_radius(p in janowski(), beta in 0.1f64..3.0) {
        let cfg = ToleranceConfig::default();
        let st = starlike::bohr_radius_st(p, &cfg).unwrap().radius;
        let sub = subord::bohr_radius_subord(SubordParams::new(beta, 0.0, p).unwrap(), &cfg).unwrap().radius;
        prop_assert!(sub >= st - 1e-12);
    }

    #[test]
    fn alpha_convex_coefficients_below_koebe(alpha in 0.1f64..2.0, m in 2usize..16) {
        let bound = alpha_convex::ac_coeff_bound(alpha, m).unwrap();
        prop_assert!(bound > 0.0 && bound <= m as f64 + 1e-9, "α={alpha} m={m}: {bound}");
    }

    #[test]
    fn radius_equation_is_increasing(p in janowski(), r1 in 0.01f64..0.9, dr in 1e-3f64..0.09) {
        let cfg = ToleranceConfig::default();
        let problem = starlike::bohr_problem(p);
        let (lo, hi) = (problem.lhs(r1, &cfg).unwrap(), problem.lhs(r1 + dr, &cfg).unwrap());
        prop_assert!(hi > lo);
    }

    #[test]
    fn radius_solves_its_equation(p in janowski()) {
        let cfg = ToleranceConfig::default();
        let res = starlike::bohr_radius_st(p, &cfg).unwrap();
        prop_assert!(res.radius > 0.0 && res.radius <= 1.0);
        if !res.clamped {
            let problem = starlike::bohr_problem(p);
            let l = problem.lhs(res.radius, &cfg).unwrap();
            prop_assert!((l - problem.target()).abs() <= 1e-10);
        }
    }

    #[test]
    fn envelope_minimum_beats_dense_grid(n in 2usize..30) {
        let env = typreal::envelope(n);
        let grid = (1..20_000)
            .map(|i| {
                let t = std::f64::consts::PI * i as f64 / 20_000.0;
                (n as f64 * t).sin() / t.sin()
            })
            .fold(f64::INFINITY, f64::min);
        prop_assert!(env.lower <= grid + 1e-12);
        prop_assert!(grid - env.lower <= 1e-4);
        prop_assert!((typreal::extremal_lt_coeff(env.argmin, n) - env.lower).abs() <= 1e-12);
    }
}
