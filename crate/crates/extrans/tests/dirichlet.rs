use std::f64::consts::PI;

use extrans::dirichlet::{
    bernoulli, chi_3_2, chi_4_2, chi_5_2, chi_5_3, enumerate_characters, gauss_sum, i_limit,
    l_one_odd, l_prime_minus1, l_prime_minus1_imprimitive, l_value_negative, l_value_positive,
    DirichletCharacter, LimitKind,
};
use extrans::qseries::{gauss, gauss_real, int, rat, ComplexF, GaussRational};
use extrans::Error;
use proptest::prelude::*;

fn exact(v: &extrans::dirichlet::ExactOrNumeric) -> GaussRational {
    v.exact().expect("exact value").clone()
}

/// `ζ(s, a)` by Euler–Maclaurin with `N` direct terms.
fn hurwitz(s: f64, a: f64) -> f64 {
    const N: usize = 30;
    const B: [f64; 6] = [
        1.0 / 6.0,
        -1.0 / 30.0,
        1.0 / 42.0,
        -1.0 / 30.0,
        5.0 / 66.0,
        -691.0 / 2730.0,
    ];
    let mut sum: f64 = (0..N).map(|n| (n as f64 + a).powf(-s)).sum();
    let x = N as f64 + a;
    sum += x.powf(1.0 - s) / (s - 1.0) + 0.5 * x.powf(-s);
    let mut rising = s;
    let mut fact = 2.0;
    for (k, b) in B.iter().enumerate() {
        let j = 2 * k as i32 + 2;
        sum += b / fact * rising * x.powf(-s - j as f64 + 1.0);
        rising *= (s + j as f64 - 1.0) * (s + j as f64);
        fact *= (j + 1) as f64 * (j + 2) as f64;
    }
    sum
}

fn l_chi3(s: f64) -> f64 {
    3f64.powf(-s) * (hurwitz(s, 1.0 / 3.0) - hurwitz(s, 2.0 / 3.0))
}

#[test]
fn character_enumeration() {
    assert_eq!(enumerate_characters(1).unwrap().len(), 1);
    let m3 = enumerate_characters(3).unwrap();
    assert_eq!(m3.len(), 2);
    assert!(m3.contains(&chi_3_2()));
    assert_eq!(chi_3_2().value(2), ComplexF::new(-1.0, 0.0));
    let m5 = enumerate_characters(5).unwrap();
    assert_eq!(m5.len(), 4);
    let with_i: Vec<_> = m5
        .iter()
        .filter(|c| c.value_exact(2) == Some(gauss(int(0), int(1))))
        .collect();
    assert_eq!(with_i, vec![&chi_5_2()]);
    assert_eq!(chi_5_2().mul(&chi_5_2()).mul(&chi_5_2()), chi_5_3());
    assert!(matches!(
        enumerate_characters(241),
        Err(Error::ModulusCap { .. })
    ));
}

#[test]
fn gauss_sums() {
    assert!(
        (gauss_sum(&DirichletCharacter::principal(1)).value - ComplexF::new(1.0, 0.0)).norm()
            < 1e-15
    );
    let g3 = gauss_sum(&chi_3_2());
    assert!((g3.value - ComplexF::new(0.0, 3f64.sqrt())).norm() < 1e-12);
    let e = g3.exact.unwrap();
    assert_eq!((e.coef, e.radicand), (gauss(int(0), int(1)), 3));
    assert!((gauss_sum(&chi_5_2()).value.norm_sqr() - 5.0).abs() < 1e-12);
}

#[test]
fn values_at_negative_integers() {
    let one5 = DirichletCharacter::principal(5);
    let sq = chi_5_2().mul(&chi_5_2());
    assert_eq!(exact(&bernoulli(&one5, 2).value), gauss_real(rat(-2, 3)));
    assert_eq!(exact(&bernoulli(&sq, 2).value), gauss_real(rat(4, 5)));
    assert!(bernoulli(&chi_3_2(), 2).value.is_zero());
    assert_eq!(
        exact(&l_value_negative(-1, &one5).unwrap()),
        gauss_real(rat(1, 3))
    );
    assert_eq!(
        exact(&l_value_negative(-1, &sq).unwrap()),
        gauss_real(rat(-2, 5))
    );
    assert_eq!(
        exact(&l_value_negative(-2, &chi_3_2()).unwrap()),
        gauss_real(rat(-2, 9))
    );
}

#[test]
fn values_at_one() {
    let l = l_one_odd(&chi_5_2()).unwrap();
    let target = ComplexF::new(PI / 5.0, 3.0 * PI / 5.0);
    assert!((gauss_sum(&chi_5_3()).value * l.value - target).norm() < 1e-10);
    assert_eq!(
        l.gauss_conj_times_value_over_pi,
        Some(gauss(rat(1, 5), rat(3, 5)))
    );
    assert!((l.value - l.partial_sum_value).norm() < 1e-8);
    let l3 = l_one_odd(&chi_5_3()).unwrap();
    assert!(
        (gauss_sum(&chi_5_2()).value * l3.value - ComplexF::new(-PI / 5.0, 3.0 * PI / 5.0)).norm()
            < 1e-10
    );
    let leibniz: f64 = (0..200_000)
        .map(|k| if k % 2 == 0 { 1.0 } else { -1.0 } / (2 * k + 1) as f64)
        .sum();
    let l4 = l_one_odd(&chi_4_2()).unwrap().value;
    assert!((l4.re - PI / 4.0).abs() < 1e-12);
    assert!((l4.re - leibniz).abs() < 1e-5);
    assert!(l_one_odd(&DirichletCharacter::principal(5)).is_err());
}

#[test]
fn value_at_three_against_direct_sum() {
    for chi in [chi_3_2(), chi_4_2(), chi_5_2()] {
        let direct: ComplexF = (1..200_000)
            .map(|m| chi.value(m) / (m as f64).powi(3))
            .sum();
        assert!(
            (l_value_positive(3, &chi).unwrap() - direct).norm() < 1e-10,
            "{chi}"
        );
    }
}

#[test]
fn derivative_at_minus_one() {
    let lp = l_prime_minus1(&chi_3_2()).unwrap();
    assert!((lp.re - 0.3230659).abs() < 5e-7);
    assert!(lp.im.abs() < 1e-12);
    let h = 1e-4;
    let numeric = (l_chi3(-1.0 + h) - l_chi3(-1.0 - h)) / (2.0 * h);
    assert!((numeric - lp.re).abs() < 1e-6, "{numeric} vs {}", lp.re);
    let (ex, num, prim) = l_prime_minus1_imprimitive(&chi_3_2().lift(6)).unwrap();
    assert_eq!(prim, chi_3_2());
    assert_eq!(ex, Some(gauss(int(3), int(0))));
    assert!((num - lp * 3.0).norm() < 1e-12);
}

#[test]
fn period_integral_limits() {
    let chi = chi_3_2();
    let one1 = DirichletCharacter::principal(1);
    let base = i_limit(3, &one1, &chi, 1).unwrap();
    assert_eq!(base.kind, LimitKind::Finite);
    assert!((base.value - l_prime_minus1(&chi).unwrap()).norm() < 1e-14);
    let scaled = i_limit(3, &one1, &chi, 3).unwrap().exact_part.unwrap();
    let local = i_limit(3, &DirichletCharacter::principal(3), &chi, 1)
        .unwrap()
        .exact_part
        .unwrap();
    assert_eq!(scaled.lprime.len(), 1);
    assert_eq!(
        scaled.lprime[0].0.clone() * gauss_real(int(2)),
        local.lprime[0].0
    );
    let even = chi_5_2().mul(&chi_5_2());
    assert_eq!(
        i_limit(3, &even, &chi, 1).unwrap().value,
        ComplexF::new(0.0, 0.0)
    );
    assert!(matches!(
        i_limit(3, &one1, &one1, 1),
        Err(Error::Precondition(_))
    ));
}

fn characters() -> impl Strategy<Value = DirichletCharacter> {
    (1u64..=60).prop_flat_map(|m| {
        let all = enumerate_characters(m).unwrap();
        let n = all.len();
        (Just(all), 0..n).prop_map(|(all, i)| all[i].clone())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn bernoulli_parity_vanishing(chi in characters(), m in 1usize..=12) {
        let sign = if m % 2 == 0 { 1 } else { -1 };
        if chi.modulus() > 1 && chi.parity() != sign {
            let b = bernoulli(&chi, m).value;
            if chi.is_gaussian() {
                prop_assert!(b.exact().is_some_and(|v| v.re == int(0) && v.im == int(0)), "{} m={}", chi, m);
            } else {
                let fact: f64 = (1..=m).map(|j| j as f64).product();
                let size = 2.0 * fact * (chi.modulus() as f64 / (2.0 * PI)).powi(m as i32) + 1.0;
                prop_assert!(b.to_complex().norm() < 1e-12 * size, "{} m={}", chi, m);
            }
        }
    }

    #[test]
    fn gauss_sum_modulus_is_conductor(chi in characters()) {
        if chi.is_primitive() {
            prop_assert!((gauss_sum(&chi).value.norm_sqr() - chi.modulus() as f64).abs() < 1e-10);
        }
    }
}

#[test]
fn gauss_sum_modulus_exhaustive() {
    for m in 1..=60 {
        for chi in enumerate_characters(m)
            .unwrap()
            .into_iter()
            .filter(DirichletCharacter::is_primitive)
        {
            assert!(
                (gauss_sum(&chi).value.norm_sqr() - m as f64).abs() < 1e-10,
                "{chi}"
            );
            assert_eq!(chi.conductor(), m);
        }
    }
}
