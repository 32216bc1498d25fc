use extrans::catalog::{case_constants, TransitionCase};
use extrans::gw::{
    gw_x_closed, gw_y_closed, gw_y_formulas, ix_coeff, ix_product, ix_table, iy_coeff, pf_verify,
    phi_pullback, pochhammer, ptpt_difference_in_y, regularized_difference,
    regularized_limit_check, CohomClass, RingKind, ZLaurent, E_IDX, H_IDX,
};
use extrans::local_model::{extremal_series, f_series};
use extrans::qseries::{int, rat, Series, Var};
use num_traits::Zero;
use proptest::prelude::*;
use TransitionCase::*;

fn z(k: i64, c: i64) -> CohomClass {
    CohomClass::z_power(RingKind::X, k, int(c))
}

#[test]
fn pochhammer_expansions() {
    let h = CohomClass::h();
    let h2 = h.mul(&h);
    let expect = h2.add(&h.mul(&z(1, 3))).add(&z(2, 2));
    assert_eq!(pochhammer(&h, 2), expect);
    assert_eq!(pochhammer(&h, 0), CohomClass::one(RingKind::X));
    let three_h = h.scale(&int(3));
    let ratio = pochhammer(&three_h, 3).div(&pochhammer(&h, 1)).unwrap();
    let expect = h2.scale(&int(27)).add(&h.mul(&z(1, 27))).add(&z(2, 6));
    assert_eq!(ratio, expect);
}

#[test]
fn first_i_function_coefficient_of_degree_three() {
    let c = ix_coeff(D3, 1, None).unwrap().value;
    assert_eq!(c.coeff(0, -2), int(6));
    assert_eq!(c.coeff(1, -3), int(27 - 24));
    assert_eq!(c.coeff(2, -4), int(27 - 4 * 27 + 10 * 6));
    assert_eq!(c.coeff(3, -5), int(-4 * 27 + 10 * 27 - 20 * 6));
    assert_eq!(
        ix_coeff(D3, 0, None).unwrap().value,
        CohomClass::one(RingKind::X)
    );
}

#[test]
fn second_i_function_coefficient_of_degree_three() {
    let (k, l, m) = case_constants(D3).unwrap();
    let c = ix_coeff(D3, 2, None).unwrap().value;
    assert_eq!(c.coeff(0, -4), rat((2 * k + l) * l + m, 16));
    assert_eq!(c.coeff(0, -4), rat(45, 2));
}

#[test]
fn recursion_agrees_with_product_formula() {
    for d in [D1, D2, D3, D4, D8] {
        let table = ix_table(d, 8).unwrap();
        for (m, t) in table.iter().enumerate() {
            assert_eq!(t, &ix_product(d, m as u64).unwrap(), "{d} m={m}");
        }
    }
}

#[test]
fn z_inverse_part_of_y_coefficients() {
    for d in TransitionCase::SUPPORTED {
        let f = f_series(d, 6).unwrap();
        for m in 1..=6u64 {
            let c = iy_coeff(d, m, 0, None).unwrap().value;
            assert_eq!(
                c.coeff(E_IDX, -1),
                -f.coeff(m as usize) / int(m as i64),
                "{d} m={m}"
            );
            assert!(c.coeff(H_IDX, -1).is_zero());
        }
    }
    assert_eq!(
        iy_coeff(D3, 0, 0, None).unwrap().value,
        CohomClass::one(RingKind::Y)
    );
}

#[test]
fn picard_fuchs_operators_annihilate() {
    for d in TransitionCase::SUPPORTED {
        let rep = pf_verify(d, 10).unwrap();
        assert!(rep.x_checked > 0 && rep.y_checked > 0, "{d}");
    }
    assert!(pf_verify(D3, 1000).is_err());
}

#[test]
fn closed_forms_on_x() {
    let x = gw_x_closed(D3).unwrap();
    assert_eq!(x.pt.coeff(1), int(6));
    assert_eq!(x.h2h2.coeff(1), int(45));
    assert_eq!(gw_x_closed(D5).unwrap().ptpt.coeff(2), int(1));
    for d in TransitionCase::SUPPORTED {
        let (k, l, m) = case_constants(d).unwrap();
        let dd = d.degree();
        let x = gw_x_closed(d).unwrap();
        assert_eq!(x.pt, Series::from_ints(Var::Q, 2, &[0, l]), "{d}");
        assert_eq!(
            x.h2h2,
            Series::from_ints(Var::Q, 2, &[0, dd * (k - 2 * l)]),
            "{d}"
        );
        assert_eq!(x.ptpt.coeff(2), rat(l * l + m, 2 * dd), "{d}");
    }
}

#[test]
fn closed_forms_on_y() {
    let eee = gw_y_closed(D5, 10).unwrap().eee.get(0);
    assert_eq!(eee.truncate(1), Series::from_ints(Var::P, 1, &[5, -10]));
    for d in TransitionCase::SUPPORTED {
        let a = gw_y_closed(d, 10).unwrap();
        let b = gw_y_formulas(d, 10).unwrap();
        for j in 0..=2 {
            assert_eq!(a.pt.get(j), b.pt.get(j), "{d}");
            assert_eq!(a.h2h2.get(j), b.h2h2.get(j), "{d}");
            assert_eq!(a.ptpt.get(j), b.ptpt.get(j), "{d}");
            assert_eq!(a.h2e2.get(j), b.h2e2.get(j), "{d}");
        }
        let expect = extremal_series(d, 10)
            .unwrap()
            .inv()
            .unwrap()
            .scale(&int(d.degree()));
        assert_eq!(a.eee.get(0), expect, "{d}");
    }
}

#[test]
fn differences_between_y_and_x() {
    for d in TransitionCase::SUPPORTED {
        let (k, l, mu) = case_constants(d).unwrap();
        let dd = d.degree();
        let x = gw_x_closed(d).unwrap();
        let y = gw_y_closed(d, 8).unwrap();
        let pt = y.pt.sub(&phi_pullback(&x.pt, 8));
        assert_eq!(pt.terms.len(), 1);
        assert_eq!(pt.get(1), Series::one(Var::P, 8));
        let h2 = y.h2h2.sub(&phi_pullback(&x.h2h2, 8));
        assert_eq!(h2.terms.len(), 1);
        assert_eq!(h2.get(1), Series::from_ints(Var::P, 8, &[dd]));
        let (a, b) = ptpt_difference_in_y(d).unwrap();
        assert_eq!(a, vec![rat(-mu, dd), rat(l, dd), int(0)], "{d}");
        assert_eq!(b, vec![rat(-mu, dd), rat(k, dd), rat(1, dd)], "{d}");
    }
}

#[test]
fn regularized_limits() {
    for d in [D5, D6I, D6II, D8] {
        assert!(regularized_limit_check(d, 10).unwrap(), "{d}");
        assert!(regularized_difference(d, 10).unwrap().coeff(0).is_zero());
    }
    let (a, b) = ptpt_difference_in_y(D3).unwrap();
    assert!(a[0].is_zero() && b[0].is_zero());
    assert!(regularized_limit_check(D3, 10).is_err());
}

fn class_y() -> impl Strategy<Value = CohomClass> {
    prop::collection::vec((-3i64..=3, -4i64..=4), 6).prop_map(|c| {
        let comps = c
            .into_iter()
            .map(|(k, v)| ZLaurent::monomial(k, int(v)))
            .collect();
        CohomClass::from_components(RingKind::Y, comps).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn ring_relations_of_y(a in class_y(), b in class_y()) {
        let e = CohomClass::e();
        let h = CohomClass::big_h();
        let f = CohomClass::f();
        let ab = a.mul(&b);
        prop_assert!(ab.mul(&e).mul(&h).is_zero());
        prop_assert_eq!(ab.mul(&h.pow(3)), ab.mul(&e.pow(3)));
        prop_assert!(ab.mul(&f.pow(3)).is_zero());
        prop_assert_eq!(ab.clone(), b.mul(&a));
        prop_assert_eq!(ab.mul(&e), a.mul(&b.mul(&e)));
    }
}
