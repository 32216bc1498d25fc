use std::f64::consts::PI;

use extrans::catalog::{case_constants, TransitionCase};
use extrans::dirichlet::{chi_3_2, l_prime_minus1};
use extrans::qseries::{gauss, int, ComplexF};
use extrans::transition_limits::{
    constant_term_consistency, cusp_limit, path_image, q_path_limit, rational_reconstruct,
    real_axis_limit, remark_table_check, translation_battery, translation_examples_check, CuspRep,
};
use extrans::Error;
use proptest::prelude::*;
use statrs::function::gamma::digamma;
use TransitionCase::*;

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

fn cusp(a: i64, c: u64) -> CuspRep {
    CuspRep::new(a, c).unwrap()
}

#[test]
fn cusp_representatives() {
    assert_eq!("2/5".parse::<CuspRep>().unwrap(), cusp(2, 5));
    assert!(CuspRep::new(2, 4).is_err());
    assert!(CuspRep::new(1, 0).is_err());
    assert_eq!(CuspRep::transition(D6I).unwrap(), cusp(1, 3));
    assert!(CuspRep::transition(D1).is_err());
}

#[test]
fn roots_of_unity_at_transition_cusps() {
    let l = cusp_limit(D6I, cusp(1, 3)).unwrap();
    assert_eq!(l.root_of_unity, Some((-1, 8)));
    assert!((l.q_value - ComplexF::from_polar(1.0, -PI / 4.0)).norm() < 1e-9);
    let l = cusp_limit(D5, cusp(2, 5)).unwrap();
    assert_eq!(l.root_of_unity, Some((-1, 24)));
    assert!((l.q_value - ComplexF::from_polar(1.0, -PI / 12.0)).norm() < 1e-9);
}

#[test]
fn exponential_of_l_derivative_at_degree_six_ii() {
    let lp = l_prime_minus1(&chi_3_2()).unwrap().re;
    let l = cusp_limit(D6II, cusp(1, 2)).unwrap();
    assert!((l.q_value - ComplexF::new((-2.0 * lp).exp(), 0.0)).norm() < 1e-9);
    assert_eq!(l.trivial_part, vec![(chi_3_2(), gauss(int(-2), int(0)))]);
    assert_eq!(l.root_of_unity, None);
}

#[test]
fn cusps_equivalent_to_infinity_are_rejected() {
    assert!(matches!(
        cusp_limit(D5, cusp(1, 5)),
        Err(Error::Precondition(_))
    ));
    assert!(cusp_limit(D5, cusp(1, 1)).is_ok());
}

#[test]
fn remark_table_battery() {
    let report = remark_table_check().unwrap();
    assert!(!report.items.is_empty());
    for item in &report.items {
        assert!(item.exact_ok, "{} {}", item.d, item.r);
        assert!(
            item.relative_error < 1e-9,
            "{} {}: {:e}",
            item.d,
            item.r,
            item.relative_error
        );
    }
    assert!(report.all_pass());
}

#[test]
fn translation_formula() {
    assert_eq!(translation_examples_check().unwrap(), 2);
    let cases = translation_battery(7, 10, 24).unwrap();
    assert_eq!(cases.len(), 10);
    for c in cases {
        assert!(c.r.c() <= 24);
        assert!(c.residual < 1e-10, "{} at {}: {:e}", c.psi, c.r, c.residual);
    }
}

#[test]
fn constant_terms_at_transition_cusps() {
    for d in [D4, D5, D6I, D6II, D8] {
        let (inf, zero) = constant_term_consistency(d, CuspRep::transition(d).unwrap()).unwrap();
        assert!((inf - 1.0).norm() < 1e-12, "{d}");
        assert!(zero.norm() < 1e-12, "{d}");
    }
}

#[test]
fn real_axis_limits_against_digamma_oracle() {
    for (d, n) in [(D1, 6.0), (D2, 4.0), (D3, 3.0), (D4, 2.0)] {
        let (kappa, _, _) = case_constants(d).unwrap();
        let a = 1.0 / n;
        let oracle = -digamma(a) - digamma(1.0 - a) - 2.0 * EULER_GAMMA - (kappa as f64).ln();
        let l = real_axis_limit(d).unwrap();
        assert!(
            (l.log_limit.re - oracle).abs() < 1e-6,
            "{d}: {} vs {oracle}",
            l.log_limit.re
        );
        assert!(l.log_limit.norm() < 1e-6, "{d}");
        assert!((l.q_limit - 1.0).norm() < 1e-6);
    }
    let l8 = real_axis_limit(D8).unwrap();
    assert!((l8.q_limit - ComplexF::new(0.0, 1.0)).norm() < 1e-6);
    assert!(real_axis_limit(D5).is_err());
}

#[test]
fn vertical_paths_reach_the_cusp_limits() {
    for (d, a, c) in [(D6I, 1, 3), (D6II, 1, 2), (D5, 2, 5)] {
        let r = cusp(a, c);
        let path = q_path_limit(d, r, 0.02, 0.03, 6).unwrap();
        let exact = cusp_limit(d, r).unwrap();
        assert!((path.q_limit - exact.q_value).norm() < 1e-3, "{d} {r}");
        assert_eq!(path.samples.len(), 6);
    }
    assert!(q_path_limit(D6I, cusp(1, 3), 0.01, 0.03, 6).is_err());
}

#[test]
fn radial_path_approaches_the_cusp_value() {
    let rows = path_image(D6II, 8, 50, 0.97).unwrap();
    assert_eq!(rows.len(), 50);
    assert_eq!(rows[0].big_q, ComplexF::new(0.0, 0.0));
    let end = rows.last().unwrap();
    assert!((end.s - 0.97).abs() < 1e-15);
    let target = cusp_limit(D6II, cusp(1, 8)).unwrap().q_value;
    assert!(
        (end.big_q - target).norm() < 5e-2,
        "{} vs {target}",
        end.big_q
    );
    assert!(path_image(D6II, 0, 50, 0.97).is_err());
    assert!(path_image(D6II, 8, 50, 1.0).is_err());
}

#[test]
fn rational_reconstruction() {
    assert_eq!(
        rational_reconstruct(-1.0 / 24.0, 360, 1e-12),
        Some((-1, 24))
    );
    assert_eq!(
        rational_reconstruct(7.0 / 60.0 + 1e-13, 360, 1e-9),
        Some((7, 60))
    );
    assert_eq!(rational_reconstruct(2f64.sqrt(), 360, 1e-12), None);
}

fn transition_class(m: u64, res: u64, extra: fn(i64) -> bool) -> impl Strategy<Value = CuspRep> {
    (-12i64..=12, 0u64..4).prop_filter_map("coprime representative", move |(a, k)| {
        let c = m * k + res;
        if c == 0 || !extra(a) {
            return None;
        }
        CuspRep::new(a, c).ok()
    })
}

fn any(_: i64) -> bool {
    true
}

fn plus_minus_two_mod_five(a: i64) -> bool {
    matches!(a.rem_euclid(5), 2 | 3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn trivial_multiplier_vanishes_on_transition_classes(
        r4 in transition_class(4, 2, any),
        r8 in transition_class(8, 4, any),
        r6 in transition_class(6, 3, any),
        r5 in transition_class(5, 5, plus_minus_two_mod_five),
    ) {
        for (d, r) in [(D4, r4), (D8, r8), (D6I, r6), (D5, r5)] {
            let l = cusp_limit(d, r).unwrap();
            prop_assert!(l.trivial_part.is_empty(), "{} {}", d, r);
            prop_assert!(l.root_of_unity.is_some(), "{} {}", d, r);
            let (inf, zero) = constant_term_consistency(d, r).unwrap();
            prop_assert!((inf - 1.0).norm() < 1e-10 && zero.norm() < 1e-10, "{} {}", d, r);
        }
    }

    #[test]
    fn degree_six_ii_multiplier_is_minus_c(r in transition_class(6, 2, any)) {
        let l = cusp_limit(D6II, r).unwrap();
        prop_assert_eq!(l.trivial_part, vec![(chi_3_2(), gauss(int(-(r.c() as i64)), int(0)))]);
    }
}
