use extrans::catalog::TransitionCase;
use extrans::dirichlet::{chi_3_2, DirichletCharacter};
use extrans::modular::{
    canonical_p_of_q, classic_eisenstein, e2_combination_check, eis_constant_term, eis_general,
    eta_quotient, extremal_eisenstein_combo, f5, hauptmodul_eta_spec, hauptmodul_eval,
    hauptmodul_p, identity_suite, six_level_relation, theta3, theta4, ClassicEisenstein,
    EisensteinParams, EtaQuotientSpec,
};
use extrans::qseries::{gauss, gauss_real, int, rat, ComplexF, Rational};
use extrans::Error;
use TransitionCase::*;

fn ints(c: &[i64]) -> Vec<Rational> {
    c.iter().map(|&x| int(x)).collect()
}

/// `Π_δ Π_m (1 − q^{δm})^{r_δ}` by repeated multiplication and division.
fn naive_eta_product(factors: &[(u64, i64)], n: usize) -> Vec<i64> {
    let mut c = vec![0i64; n + 1];
    c[0] = 1;
    for &(d, r) in factors {
        let mut step = d as usize;
        while step <= n {
            for _ in 0..r.abs() {
                if r > 0 {
                    for j in (step..=n).rev() {
                        c[j] -= c[j - step];
                    }
                } else {
                    for j in step..=n {
                        c[j] += c[j - step];
                    }
                }
            }
            step += d as usize;
        }
    }
    c
}

fn lattice_count(n: usize, form: impl Fn(i64, i64) -> i64) -> Vec<i64> {
    let mut c = vec![0i64; n + 1];
    let b = (n as f64).sqrt() as i64 + 2;
    for x in -2 * b..=2 * b {
        for y in -2 * b..=2 * b {
            let v = form(x, y);
            if v >= 0 && (v as usize) <= n {
                c[v as usize] += 1;
            }
        }
    }
    c
}

#[test]
fn classic_eisenstein_coefficients() {
    assert_eq!(
        classic_eisenstein(ClassicEisenstein::E4, 2).series.coeffs(),
        ints(&[1, 240, 2160]).as_slice()
    );
    assert_eq!(
        classic_eisenstein(ClassicEisenstein::E6, 2).series.coeffs(),
        ints(&[1, -504, -16632]).as_slice()
    );
    assert_eq!(
        classic_eisenstein(ClassicEisenstein::E2, 2).coeff(2),
        int(-72)
    );
}

#[test]
fn theta_series_against_lattice_sums() {
    let hex = lattice_count(20, |x, y| x * x + x * y + y * y);
    let sq = lattice_count(20, |x, y| x * x + y * y);
    let t3 = theta3(20);
    let t4 = theta4(20);
    for k in 0..=20 {
        assert_eq!(t3.coeff(k), int(hex[k]), "theta3 q^{k}");
        assert_eq!(t4.coeff(k), int(sq[k]), "theta4 q^{k}");
    }
    assert_eq!(
        t3.series.truncate(4).coeffs(),
        ints(&[1, 6, 0, 6, 6]).as_slice()
    );
    assert_eq!(f5(3).coeff(1), gauss(int(3), int(0)));
}

#[test]
fn eta_quotients_against_naive_products() {
    for d in [D4, D6I, D6II, D8] {
        let spec = hauptmodul_eta_spec(d).unwrap();
        let got = eta_quotient(&spec, 20).unwrap();
        let lead = spec.leading_exponent().unwrap() as usize;
        assert_eq!(lead, 1);
        let body = naive_eta_product(&spec.factors, 20);
        for k in 1..=20 {
            assert_eq!(got.coeff(k), int(spec.sign * body[k - 1]), "{d} q^{k}");
        }
    }
    let p4 = hauptmodul_p(D4, 2).unwrap();
    assert_eq!(p4.series.coeffs(), ints(&[0, -1, 8]).as_slice());
    let p6 = eta_quotient(
        &EtaQuotientSpec::new(-1, &[(1, 3), (6, 9), (2, -3), (3, -9)]),
        3,
    )
    .unwrap();
    assert_eq!(p6.coeff(1), int(-1));
    assert_eq!(
        eta_quotient(&EtaQuotientSpec::new(1, &[(1, 24)]), 3)
            .unwrap()
            .coeff(1),
        int(1)
    );
    assert!(eta_quotient(&EtaQuotientSpec::new(1, &[(1, 1)]), 3).is_err());
}

#[test]
fn hauptmoduln_start_with_minus_q() {
    for d in TransitionCase::SUPPORTED {
        let p = hauptmodul_p(d, 20).unwrap();
        assert_eq!(p.coeff(0), int(0));
        assert_eq!(p.coeff(1), int(-1), "{d}");
        assert!(p.series.is_integral(), "{d}");
    }
    assert_eq!(hauptmodul_p(D1, 2).unwrap().coeff(2), int(312));
    assert!(hauptmodul_p(D7, 2).is_err());
}

#[test]
fn hauptmodul_evaluation_matches_series() {
    let q = ComplexF::new(0.0015, 0.001);
    for d in TransitionCase::SUPPORTED {
        let s = hauptmodul_p(d, 40).unwrap().series;
        let (v, _) = s.eval(q, 0.004, 1e-12).unwrap();
        assert!((hauptmodul_eval(d, q).unwrap() - v).norm() < 1e-11, "{d}");
    }
}

#[test]
fn canonical_coordinate_equals_hauptmodul() {
    for d in TransitionCase::SUPPORTED {
        assert_eq!(
            canonical_p_of_q(d, 20).unwrap().series,
            hauptmodul_p(d, 20).unwrap().series,
            "{d}"
        );
    }
}

#[test]
fn identity_suites_to_order_twenty() {
    for d in TransitionCase::SUPPORTED {
        let rep = identity_suite(d, 20).unwrap();
        assert!(rep.theta && rep.canonical, "{d}");
        let expect_eis = !matches!(d, D1 | D2);
        assert_eq!(rep.eisenstein, expect_eis.then_some(true), "{d}");
    }
    assert!(six_level_relation(20).unwrap());
    assert!(e2_combination_check(20).unwrap());
}

#[test]
fn eisenstein_series_of_weight_three() {
    let p = EisensteinParams::new(3, DirichletCharacter::principal(1), chi_3_2(), 1).unwrap();
    let (c0, c0f) = eis_constant_term(&p).unwrap();
    assert_eq!(c0, Some(gauss_real(rat(-1, 9))));
    assert!((c0f.re + 1.0 / 9.0).abs() < 1e-15);
    let e = eis_general(&p, 4).unwrap();
    assert_eq!(e.coeff(1), gauss_real(int(1)));
    let scaled = e.series.scale(&gauss_real(int(-9)));
    assert_eq!(scaled.coeff(0), gauss_real(int(1)));
    assert_eq!(scaled.coeff(1), gauss_real(int(-9)));
    let combo = extremal_eisenstein_combo(D5).unwrap();
    assert_eq!(combo[0].0, gauss(int(-1), rat(1, 2)));
    assert_eq!(combo[1].0, gauss(int(-1), rat(-1, 2)));
    assert!(matches!(
        EisensteinParams::new(
            3,
            DirichletCharacter::principal(1),
            DirichletCharacter::principal(1),
            1
        ),
        Err(Error::Precondition(_))
    ));
}
