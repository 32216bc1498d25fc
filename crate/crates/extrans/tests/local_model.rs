use extrans::catalog::{case_constants, TransitionCase};
use extrans::local_model::{
    extremal_series, f7_series, f_reg_series, f_series, g_series, hypergeom_check, mirror_q,
    ode_residual, riccati_residual, u_series, Poly,
};
use extrans::qseries::{int, rat, Rational, Series, Var};
use num_traits::Zero;
use TransitionCase::*;

fn binom(n: i64, k: i64) -> Rational {
    (0..k).fold(int(1), |acc, j| acc * int(n - j) / int(j + 1))
}

fn pochhammer(a: &Rational, m: i64) -> Rational {
    (0..m).fold(int(1), |acc, j| acc * (a + int(j)))
}

#[test]
fn degree_three_coefficients() {
    assert_eq!(
        f_series(D3, 3).unwrap(),
        Series::from_ints(Var::P, 3, &[1, -6, 90, -1680])
    );
    assert_eq!(
        mirror_q(D3, 3).unwrap(),
        Series::from_ints(Var::P, 3, &[0, 1, -6, 63])
    );
}

#[test]
fn degree_five_matches_apery_type_sums() {
    let f = f_series(D5, 12).unwrap();
    assert_eq!(f.truncate(2), Series::from_ints(Var::P, 2, &[1, -3, 19]));
    for n in 0..=12i64 {
        let a = (0..=n).fold(int(0), |acc, k| {
            acc + binom(n, k) * binom(n, k) * binom(n + k, k)
        });
        let sign = if n % 2 == 0 { 1 } else { -1 };
        assert_eq!(f.coeff(n as usize), a * int(sign), "P^{n}");
    }
}

#[test]
fn hypergeometric_cases_against_pochhammer_products() {
    for (d, nd) in [(D1, 6), (D2, 4), (D3, 3), (D4, 2)] {
        let (k, _, _) = case_constants(d).unwrap();
        let f = f_series(d, 30).unwrap();
        let a = rat(1, nd);
        let b = int(1) - &a;
        for m in 0..=30i64 {
            let fact = pochhammer(&int(1), m);
            let expect =
                pochhammer(&a, m) * pochhammer(&b, m) / (&fact * &fact) * int(-k).pow(m as i32);
            assert_eq!(f.coeff(m as usize), expect, "{d} P^{m}");
        }
        assert!(hypergeom_check(d, 30).unwrap());
    }
    assert_eq!(f_series(D1, 1).unwrap().coeff(1), int(-60));
    assert_eq!(f_series(D4, 1).unwrap().coeff(1), int(-4));
}

#[test]
fn degree_eight_is_degree_four_in_minus_p_squared() {
    let f8 = f_series(D8, 30).unwrap();
    let f4 = f_series(D4, 15).unwrap();
    for m in 0..=30usize {
        let expect = if m % 2 == 0 {
            f4.coeff(m / 2) * int(if (m / 2) % 2 == 0 { 1 } else { -1 })
        } else {
            int(0)
        };
        assert_eq!(f8.coeff(m), expect, "P^{m}");
    }
    assert!(hypergeom_check(D8, 30).unwrap());
    let q8 = mirror_q(D8, 20).unwrap();
    assert!((0..=20).step_by(2).all(|k| q8.coeff(k).is_zero()));
}

#[test]
fn ode_residual_vanishes_to_order_thirty() {
    for d in TransitionCase::SUPPORTED {
        assert!(
            ode_residual(d, 30)
                .unwrap()
                .coeffs()
                .iter()
                .all(Zero::is_zero),
            "{d}"
        );
    }
}

#[test]
fn g_is_the_antiderivative_of_f() {
    for d in TransitionCase::SUPPORTED {
        let f = f_series(d, 15).unwrap();
        let g = g_series(d, 15).unwrap();
        assert!(g.coeff(0).is_zero());
        assert_eq!(&g.theta() + &Series::one(Var::P, 15), f, "{d}");
        assert_eq!(mirror_q(d, 15).unwrap().coeff(1), int(1), "{d}");
    }
    let g3 = g_series(D3, 2).unwrap();
    assert_eq!((g3.coeff(1), g3.coeff(2)), (int(-6), int(45)));
}

#[test]
fn second_order_mirror_coefficient() {
    for d in TransitionCase::SUPPORTED {
        let (k, l, m) = case_constants(d).unwrap();
        let g = g_series(d, 2).unwrap();
        assert_eq!(g.coeff(2), rat((2 * k + l) * l + m, 8), "{d}");
    }
}

#[test]
fn extremal_function() {
    assert_eq!(
        extremal_series(D8, 3).unwrap(),
        Series::from_ints(Var::P, 3, &[1, 0, -4])
    );
    for d in TransitionCase::SUPPORTED {
        let (k, _, m) = case_constants(d).unwrap();
        assert_eq!(
            u_series(d, 2).unwrap(),
            Series::from_ints(Var::P, 2, &[1, k, -m]),
            "{d}"
        );
        let f = f_series(d, 20).unwrap();
        let cube = &(&f * &f) * &f;
        assert_eq!(
            extremal_series(d, 20).unwrap(),
            &u_series(d, 20).unwrap() * &cube,
            "{d}"
        );
    }
}

#[test]
fn mirror_map_inverse() {
    for d in TransitionCase::SUPPORTED {
        let q = mirror_q(d, 20).unwrap();
        let p = q.reversion().unwrap();
        assert_eq!(q.compose(&p).unwrap(), Series::variable(Var::P, 20), "{d}");
    }
}

#[test]
fn regular_solution_at_infinity() {
    let r = f_reg_series(D6I, 8).unwrap();
    assert_eq!(r.f_reg.coeff(1), int(1));
    assert_eq!(r.f_reg.coeff(2), rat(1, 4));
    assert_eq!(
        r.v_reg.truncate(1),
        Series::new(Var::Y, 1, vec![int(-1), rat(-1, 4)])
    );
    for d in [D5, D6I, D6II, D8] {
        let r = f_reg_series(d, 10).unwrap();
        assert_eq!(r.v_reg.coeff(0), int(-1), "{d}");
        assert!(
            riccati_residual(d, 10)
                .unwrap()
                .coeffs()
                .iter()
                .all(Zero::is_zero),
            "{d}"
        );
    }
    assert!(f_reg_series(D3, 4).is_err());
}

#[test]
fn two_parameter_case() {
    let data = f7_series(12).unwrap();
    assert_eq!((data.b[0].p.clone(), data.b[0].e2), (Poly(vec![int(1)]), 1));
    assert_eq!(
        (data.b[1].p.clone(), data.b[1].e2),
        (Poly(vec![int(-1), int(2)]), 5)
    );
    let restricted = data.restrict_r0();
    for k in 1..=12 {
        assert_eq!(
            restricted.coeff(k),
            int(if k % 2 == 1 { 1 } else { -1 }),
            "y^{k}"
        );
    }
    for k in 1..=10 {
        assert!(data.ode2_residual(k).is_zero(), "k = {k}");
    }
    for r in [0.0, 0.3, -0.1, 2.0] {
        let b1 = data.b[0].eval_f64(r);
        let b2 = data.b[1].eval_f64(r);
        assert!((b1 - (1.0 + 4.0 * r).powf(-0.5)).abs() < 1e-14);
        assert!((b2 + (1.0 - 2.0 * r) * (1.0 + 4.0 * r).powf(-2.5)).abs() < 1e-14);
    }
}
