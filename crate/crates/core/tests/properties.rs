//! Property tests over randomly generated configurations.

#[path = "support/float_oracle.rs"]
mod float_oracle;

use num_traits::{One, Zero};
use proptest::prelude::*;

use ceva_core::ceva::{build_converse_counterexample, cevian_telescoped, theorem1_product, CevaConfig};
use ceva_core::circle::{
    circle_point, second_intersection, theorem2_check, InscribedConfig, LineSpec,
};
use ceva_core::geom::line_through;
use ceva_core::harness::{
    gen_affine_map, gen_ceva_config, gen_inscribed_config, gen_pentagon, GenParams,
};
use ceva_core::rational::{rat, sign_power, to_f64};
use ceva_core::{Point, Rational};

fn params(seed: u64, n_max: usize) -> GenParams {
    GenParams {
        seed,
        n_max,
        ..GenParams::default()
    }
}

fn arb_ceva() -> impl Strategy<Value = CevaConfig> {
    (any::<u64>(), 0u64..1000).prop_map(|(seed, trial)| {
        gen_ceva_config(&params(seed, 8), trial).expect("generation").config
    })
}

fn arb_inscribed() -> impl Strategy<Value = InscribedConfig> {
    (any::<u64>(), 0u64..1000).prop_map(|(seed, trial)| {
        gen_inscribed_config(&params(seed, 7), trial).expect("generation").config
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn product_is_sign_of_n(cfg in arb_ceva()) {
        let report = theorem1_product(&cfg).unwrap();
        prop_assert_eq!(report.factors.len(), cfg.n() * cfg.t());
        prop_assert_eq!(report.product, sign_power(cfg.n()));
    }

    #[test]
    fn cyclic_relabeling_permutes_factors(cfg in arb_ceva(), shift in 1usize..9) {
        let n = cfg.n();
        let shift = shift % n;
        let mut rotated = cfg.vertices().to_vec();
        rotated.rotate_left(shift);
        let relabeled = CevaConfig::new(rotated, cfg.pivot().clone(), cfg.s(), cfg.t()).unwrap();
        let a = theorem1_product(&cfg).unwrap();
        let b = theorem1_product(&relabeled).unwrap();
        prop_assert_eq!(&a.product, &b.product);
        let back = |k: usize| (k - 1 + shift) % n + 1;
        for f in &b.factors {
            let original = a.factors.iter().find(|g| g.i == back(f.i) && g.j == back(f.j)).unwrap();
            prop_assert_eq!(&original.value, &f.value);
        }
    }

    #[test]
    fn reversed_orientation_keeps_product(cfg in arb_ceva()) {
        let mut reversed = cfg.vertices().to_vec();
        reversed.reverse();
        let rev = CevaConfig::new(reversed, cfg.pivot().clone(), cfg.s(), cfg.t()).unwrap();
        prop_assert_eq!(theorem1_product(&rev).unwrap().product, sign_power(cfg.n()));
    }

    #[test]
    fn affine_image_keeps_every_factor(seed in any::<u64>(), trial in 0u64..1000) {
        let p = params(seed, 8);
        let cfg = gen_ceva_config(&p, trial).unwrap().config;
        let map = gen_affine_map(&p, trial).unwrap().config;
        let image = CevaConfig::new(
            cfg.vertices().iter().map(|v| map.apply(v)).collect(),
            map.apply(cfg.pivot()),
            cfg.s(),
            cfg.t(),
        ).unwrap();
        prop_assert_eq!(theorem1_product(&cfg).unwrap(), theorem1_product(&image).unwrap());
    }

    #[test]
    fn telescoping_per_cevian(seed in any::<u64>(), trial in 0u64..1000) {
        let cfg = ceva_core::harness::gen_axis_free_ceva_config(&params(seed, 8), trial).unwrap().config;
        let report = theorem1_product(&cfg).unwrap();
        for i in 1..=cfg.n() {
            let direct: Rational = report.factors.iter().filter(|f| f.i == i).map(|f| f.value.clone()).product();
            prop_assert_eq!(cevian_telescoped(&cfg, i).unwrap(), direct);
        }
    }

    #[test]
    fn float_oracle_agrees(cfg in arb_ceva()) {
        let vertices: Vec<_> = cfg.vertices().iter().map(float_oracle::to_xy).collect();
        let approx = float_oracle::theorem1_product(&vertices, float_oracle::to_xy(cfg.pivot()), cfg.s(), cfg.t());
        prop_assume!(approx.min_clearance > 1e-2);
        let exact = theorem1_product(&cfg).unwrap();
        for (f, x) in exact.factors.iter().zip(&approx.factors) {
            let v = to_f64(&f.value);
            prop_assert!((v - x).abs() <= 1e-9 * v.abs().max(1.0), "factor {v} vs {x}");
        }
        prop_assert!((approx.product - to_f64(&exact.product)).abs() < 1e-9);
    }

    #[test]
    fn counterexample_product_without_concurrency(seed in any::<u64>(), trial in 0u64..1000) {
        let (vertices, pivot) = gen_pentagon(&params(seed, 5), trial).unwrap().config;
        let ce = build_converse_counterexample(&vertices, &pivot, seed).unwrap();
        prop_assert_eq!(ce.product, -Rational::one());
        prop_assert!(!ce.concurrent);
        prop_assert_eq!(ce.seed, seed);
    }

    #[test]
    fn inscribed_squared_identity(cfg in arb_inscribed()) {
        let report = theorem2_check(&cfg).unwrap();
        prop_assert!(report.holds);
        prop_assert_eq!(report.lhs_squared, report.rhs_squared);
    }

    #[test]
    fn inscribed_rotation_keeps_products(cfg in arb_inscribed()) {
        // rotation by the angle with half-angle tangent 1/2 (cos 3/5, sin 4/5)
        // acts on parameters as u -> (u + 1/2) / (1 - u/2)
        let half = rat(1, 2);
        prop_assume!(cfg.params().iter().all(|u| *u != rat(2, 1)));
        let (c, s) = (rat(3, 5), rat(4, 5));
        let rotate = |p: &Point| Point::new(&p.x * &c - &p.y * &s, &p.x * &s + &p.y * &c);
        let moved: Vec<Rational> = cfg
            .params()
            .iter()
            .map(|u| (u + &half) / (Rational::one() - u * &half))
            .collect();
        for (u, w) in cfg.params().iter().zip(&moved) {
            prop_assert_eq!(rotate(&circle_point(u, cfg.radius())), circle_point(w, cfg.radius()));
        }
        // cyclic order is kept, so sorting is a rotation of the labels
        let start = (0..moved.len()).min_by(|&i, &j| moved[i].cmp(&moved[j])).unwrap();
        let mut params_rot = moved;
        params_rot.rotate_left(start);
        let mut specs: Vec<LineSpec> = cfg
            .second_points()
            .iter()
            .map(|m| LineSpec::ThroughPoint(rotate(m)))
            .collect();
        specs.rotate_left(start);
        let image = InscribedConfig::new(cfg.radius().clone(), params_rot, specs, cfg.s(), cfg.t()).unwrap();
        let a = theorem2_check(&cfg).unwrap();
        let b = theorem2_check(&image).unwrap();
        prop_assert_eq!(a.lhs, b.lhs);
        prop_assert_eq!(a.rhs_squared, b.rhs_squared);
    }

    #[test]
    fn second_intersection_is_an_involution(u in -40i64..40, v in -40i64..40, d in 1i64..9, r in 1i64..9) {
        let radius = rat(r, 1);
        let (a, b) = (circle_point(&rat(u, d), &radius), circle_point(&rat(v, d + 1), &radius));
        prop_assume!(a != b);
        let chord = line_through(&a, &b).unwrap();
        prop_assert_eq!(second_intersection(&chord, &a, &radius).unwrap(), b.clone());
        prop_assert_eq!(second_intersection(&chord, &b, &radius).unwrap(), a);
    }
}

#[test]
fn concurrent_inscribed_lines_give_exact_sign() {
    let p = params(11, 7);
    for trial in 0..30 {
        let cfg = ceva_core::harness::gen_concurrent_inscribed_config(&p, trial).unwrap().config;
        let report = ceva_core::circle::application_concurrent_check(&cfg).unwrap();
        assert_eq!(report.lhs, sign_power(cfg.n()), "trial {trial}");
        assert!(report.rhs_squared.is_one(), "trial {trial}");
        assert!(!report.lhs.is_zero());
    }
}
