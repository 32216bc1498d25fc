use extrans::catalog::{
    case_constants, case_data, euler_defect, hodge_numbers, sing_points,
    tabulated_exponents_at_infinity, transition_point, SingPoint, TransitionCase, TransitionPoint,
};
use extrans::local_model::exponents_at_infinity;
use extrans::qseries::rat;
use TransitionCase::*;

#[test]
fn constants_table() {
    let rows = [
        (D1, (432, 60, 0)),
        (D2, (64, 12, 0)),
        (D3, (27, 6, 0)),
        (D4, (16, 4, 0)),
        (D5, (11, 3, 1)),
        (D6I, (7, 2, 8)),
        (D6II, (10, 3, -9)),
        (D8, (0, 0, 16)),
    ];
    for (d, row) in rows {
        assert_eq!(case_constants(d).unwrap(), row, "{d}");
    }
    assert!(case_constants(D7).is_err());
}

#[test]
fn euler_defect_table_and_hodge_arithmetic() {
    let table = [60, 36, 24, 16, 10, 6, 4, 4, 4];
    let h11 = [1, 1, 1, 1, 1, 2, 3, 2, 1];
    let h21 = [21, 10, 5, 2, 0, 0, 0, 0, 0];
    for (i, d) in TransitionCase::ALL.into_iter().enumerate() {
        assert_eq!(euler_defect(d).unwrap(), table[i], "{d}");
        assert_eq!(hodge_numbers(d), (h11[i], h21[i]), "{d}");
        let by_hand = 2 * (12 - d.degree()) - (2 + 2 * h11[i] - 2 * h21[i]);
        assert_eq!(by_hand, table[i], "{d}");
    }
}

#[test]
fn transition_points() {
    assert_eq!(
        transition_point(D6I).unwrap(),
        TransitionPoint::Cusp { a: 1, c: 3 }
    );
    assert_eq!(
        transition_point(D5).unwrap(),
        TransitionPoint::Cusp { a: 2, c: 5 }
    );
    assert_eq!(
        transition_point(D6II).unwrap(),
        TransitionPoint::Cusp { a: 1, c: 2 }
    );
    assert!(matches!(
        transition_point(D1).unwrap(),
        TransitionPoint::Elliptic(_)
    ));
}

#[test]
fn degree_five_singular_points_are_quadratic_surds() {
    let pts = sing_points(D5).unwrap();
    let finite: Vec<f64> = pts
        .iter()
        .filter_map(|p| match p {
            SingPoint::Finite(x) => Some(x.to_f64()),
            _ => None,
        })
        .collect();
    assert_eq!(finite.len(), 2);
    let root5 = 5f64.sqrt();
    for x in finite {
        assert!(((x - 11.0 / 2.0).abs() - 5.0 * root5 / 2.0).abs() < 1e-12);
        assert!((1.0 + 11.0 * x - x * x).abs() < 1e-9);
    }
}

#[test]
fn singular_points_are_roots_of_the_discriminant() {
    for d in TransitionCase::SUPPORTED {
        let (k, _, m) = case_constants(d).unwrap();
        for p in sing_points(d).unwrap() {
            if let SingPoint::Finite(x) = p {
                let v = x.eval_quadratic(&rat(1, 1), &rat(k, 1), &rat(-m, 1));
                assert!(v.is_zero(), "{d}: {x:?}");
            }
        }
    }
}

#[test]
fn exponents_at_infinity_match_the_table() {
    for d in TransitionCase::SUPPORTED {
        assert_eq!(
            exponents_at_infinity(d).unwrap(),
            tabulated_exponents_at_infinity(d).unwrap(),
            "{d}"
        );
    }
    assert_eq!(
        tabulated_exponents_at_infinity(D1).unwrap(),
        (rat(1, 6), rat(5, 6))
    );
    assert_eq!(
        tabulated_exponents_at_infinity(D5).unwrap(),
        (rat(1, 1), rat(1, 1))
    );
}

#[test]
fn case_data_is_consistent() {
    for d in TransitionCase::SUPPORTED {
        let c = case_data(d).unwrap();
        assert_eq!((c.kappa, c.lambda, c.mu), case_constants(d).unwrap());
        assert_eq!(c.euler_defect, euler_defect(d).unwrap());
    }
    assert_eq!("6II".parse::<TransitionCase>().unwrap(), D6II);
    assert!("9".parse::<TransitionCase>().is_err());
}
