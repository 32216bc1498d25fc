//! Verification batteries behind `verify`.

use extrans::catalog::{case_constants, TransitionCase};
use extrans::dirichlet::chi_3_2;
use extrans::gw::{
    gw_x_closed, gw_y_closed, gw_y_formulas, iy_coeff, pf_verify, phi_pullback,
    ptpt_difference_in_y, regularized_limit_check, E_IDX, PF_CAP,
};
use extrans::local_model::{f_series, hypergeom_check, ode_residual};
use extrans::modular::{e2_combination_check, identity_suite, six_level_relation};
use extrans::qseries::{int, ComplexF, Rational, Series, Var};
use extrans::transition_limits::{
    check_limit, constant_term_consistency, cusp_limit, q_path_limit, real_axis_limit,
    remark_battery, translate_eisenstein, translation_battery, translation_examples_check, CuspRep,
};
use extrans::Result;
use num_traits::Zero;

use crate::args::Suite;
use crate::output::Doc;

/// Seed of the random translation battery.
pub const TRANSLATION_SEED: u64 = 20_240_607;

/// Window of the vertical-path extrapolation.
pub const Q_PATH_WINDOW: (f64, f64, usize) = (0.02, 0.03, 6);

#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub suite: &'static str,
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    pub fn doc(&self) -> Doc {
        Doc::map([
            ("suite", Doc::str(self.suite)),
            ("check", Doc::str(self.name.clone())),
            ("pass", Doc::Bool(self.pass)),
            ("detail", Doc::str(self.detail.clone())),
        ])
    }
}

struct Runner {
    suite: &'static str,
    checks: Vec<Check>,
}

impl Runner {
    fn new(suite: &'static str) -> Self {
        Runner {
            suite,
            checks: Vec::new(),
        }
    }

    fn run(&mut self, name: impl Into<String>, f: impl FnOnce() -> Result<(bool, String)>) {
        let (pass, detail) = f().unwrap_or_else(|e| (false, e.to_string()));
        self.checks.push(Check {
            suite: self.suite,
            name: name.into(),
            pass,
            detail,
        });
    }
}

const SUPPORTED: [TransitionCase; 8] = TransitionCase::SUPPORTED;

fn all_zero(s: &Series<Rational>) -> bool {
    s.coeffs().iter().all(|c| c.is_zero())
}

fn pf(order: usize) -> Vec<Check> {
    let mut r = Runner::new("pf");
    let pf_order = (order as u64).min(PF_CAP);
    for d in SUPPORTED {
        r.run(format!("picard_fuchs d={d}"), || {
            let rep = pf_verify(d, pf_order)?;
            Ok((
                true,
                format!(
                    "order {pf_order}: {} X, {} product, {} Y residuals",
                    rep.x_checked, rep.x_product_checked, rep.y_checked
                ),
            ))
        });
        r.run(format!("mirror_ode d={d}"), || {
            Ok((all_zero(&ode_residual(d, order)?), format!("order {order}")))
        });
        r.run(format!("z_inverse_extraction d={d}"), || {
            let f = f_series(d, 6)?;
            for m in 1..=order.min(6) {
                let got = iy_coeff(d, m as u64, 0, None)?.value.coeff(E_IDX, -1);
                if got != -f.coeff(m) / int(m as i64) {
                    return Ok((false, format!("mismatch at m = {m}")));
                }
            }
            Ok((true, "m ≤ 6".into()))
        });
    }
    for d in [
        TransitionCase::D1,
        TransitionCase::D2,
        TransitionCase::D3,
        TransitionCase::D4,
        TransitionCase::D8,
    ] {
        r.run(format!("hypergeometric d={d}"), || {
            Ok((hypergeom_check(d, order)?, format!("order {order}")))
        });
    }
    r.checks
}

fn modular(order: usize) -> Vec<Check> {
    let mut r = Runner::new("modular");
    for d in SUPPORTED {
        r.run(format!("identity_suite d={d}"), || {
            let rep = identity_suite(d, order)?;
            let pass = rep.theta && rep.canonical && rep.eisenstein != Some(false);
            Ok((
                pass,
                format!(
                    "theta {}, eisenstein {:?}, canonical {}",
                    rep.theta, rep.eisenstein, rep.canonical
                ),
            ))
        });
    }
    r.run("six_level_relation", || {
        Ok((six_level_relation(order)?, format!("order {order}")))
    });
    r.run("e2_combination", || {
        Ok((e2_combination_check(order)?, format!("order {order}")))
    });
    r.checks
}

fn gw(order: usize) -> Vec<Check> {
    let mut r = Runner::new("gw");
    for d in SUPPORTED {
        let (k, l, mu) = case_constants(d).expect("supported case");
        let dd = d.degree();
        r.run(format!("x_closed d={d}"), || {
            let x = gw_x_closed(d)?;
            let pt = Series::from_ints(Var::Q, 2, &[0, l]);
            let h2h2 = Series::from_ints(Var::Q, 2, &[0, dd * (k - 2 * l)]);
            let ptpt = Series::new(
                Var::Q,
                2,
                vec![int(0), int(0), int(l * l + mu) / int(2 * dd)],
            );
            Ok((
                x.pt == pt && x.h2h2 == h2h2 && x.ptpt == ptpt,
                "⟨pt⟩, ⟨h²,h²⟩, ⟨pt,pt⟩".into(),
            ))
        });
        r.run(format!("y_closed d={d}"), || {
            let (a, b) = (gw_y_closed(d, order)?, gw_y_formulas(d, order)?);
            let same = [
                (&a.pt, &b.pt),
                (&a.h2h2, &b.h2h2),
                (&a.ptpt, &b.ptpt),
                (&a.h2e2, &b.h2e2),
                (&a.eee, &b.eee),
            ]
            .iter()
            .all(|(x, y)| (0..=2).all(|j| x.get(j) == y.get(j)));
            Ok((same, format!("five generating functions to order {order}")))
        });
        r.run(format!("xy_differences d={d}"), || {
            let x = gw_x_closed(d)?;
            let y = gw_y_closed(d, order)?;
            let one = |c: i64| Series::from_ints(Var::P, order, &[c]);
            let pt = y.pt.sub(&phi_pullback(&x.pt, order));
            let h2 = y.h2h2.sub(&phi_pullback(&x.h2h2, order));
            let pass = pt.terms.len() == 1
                && pt.get(1) == one(1)
                && h2.terms.len() == 1
                && h2.get(1) == one(dd);
            let (a, b) = ptpt_difference_in_y(d)?;
            let inv = |c: i64| int(c) / int(dd);
            let pass =
                pass && a == vec![inv(-mu), inv(l), int(0)] && b == vec![inv(-mu), inv(k), inv(1)];
            Ok((pass, "⟨pt⟩, ⟨H²,H²⟩ and ⟨pt,pt⟩ differences".into()))
        });
        r.run(format!("regularized_limit d={d}"), || {
            if mu == 0 {
                let (a, b) = ptpt_difference_in_y(d)?;
                return Ok((
                    a[0].is_zero() && b[0].is_zero(),
                    "μ = 0: no regularization needed".into(),
                ));
            }
            Ok((regularized_limit_check(d, order)?, format!("order {order}")))
        });
    }
    r.checks
}

fn translation() -> Vec<Check> {
    let mut r = Runner::new("translation");
    r.run("worked_examples", || {
        Ok((
            translation_examples_check()? == 2,
            "r = 1/2 and r = 1/3".into(),
        ))
    });
    r.run("random_battery", || {
        let cases = translation_battery(TRANSLATION_SEED, 10, 24)?;
        let worst = cases.iter().map(|c| c.residual).fold(0.0, f64::max);
        Ok((worst < 1e-10, format!("10 cases, max residual {worst:e}")))
    });
    r.run("integer_cusp", || {
        let combo = translate_eisenstein(&chi_3_2(), CuspRep::new(0, 1)?)?;
        Ok((
            combo.terms.len() == 1 && combo.terms[0].params.n == 1,
            combo.to_string(),
        ))
    });
    for d in [
        TransitionCase::D4,
        TransitionCase::D5,
        TransitionCase::D6I,
        TransitionCase::D6II,
        TransitionCase::D8,
    ] {
        r.run(format!("constant_terms d={d}"), || {
            let (inf, zero) = constant_term_consistency(d, CuspRep::transition(d)?)?;
            Ok((
                (inf - 1.0).norm() < 1e-12 && zero.norm() < 1e-12,
                format!("Σα·a_i∞ = {inf:.3}, Σα·a_0 = {zero:.3e}"),
            ))
        });
    }
    r.checks
}

fn remark_table(tol: f64) -> Vec<Check> {
    let mut r = Runner::new("remark-table");
    match remark_battery() {
        Ok(items) => {
            for (d, cusp, expected) in items {
                r.run(format!("limit d={d} r={cusp}"), || {
                    let item = check_limit(d, cusp, &expected)?;
                    Ok((
                        item.exact_ok && item.relative_error < tol,
                        format!("relative error {:e}", item.relative_error),
                    ))
                });
            }
        }
        Err(e) => r.run("battery", || Err(e)),
    }
    for (d, a, c, root) in [
        (TransitionCase::D6I, 1, 3, (-1, 8)),
        (TransitionCase::D5, 2, 5, (-1, 24)),
    ] {
        r.run(format!("root_of_unity d={d} r={a}/{c}"), || {
            let l = cusp_limit(d, CuspRep::new(a, c)?)?;
            Ok((
                l.root_of_unity == Some(root),
                format!("{:?}", l.root_of_unity),
            ))
        });
    }
    for d in [
        TransitionCase::D1,
        TransitionCase::D2,
        TransitionCase::D3,
        TransitionCase::D4,
        TransitionCase::D8,
    ] {
        r.run(format!("real_axis d={d}"), || {
            let l = real_axis_limit(d)?;
            let target = if d == TransitionCase::D8 {
                ComplexF::new(0.0, 1.0)
            } else {
                ComplexF::new(1.0, 0.0)
            };
            let err = (l.q_limit - target).norm();
            Ok((err < 1e-6, format!("|Q − target| = {err:e}")))
        });
    }
    let (t0, t1, steps) = Q_PATH_WINDOW;
    for (d, a, c) in [
        (TransitionCase::D6I, 1, 3),
        (TransitionCase::D6II, 1, 2),
        (TransitionCase::D5, 2, 5),
    ] {
        r.run(format!("vertical_path d={d} r={a}/{c}"), || {
            let cusp = CuspRep::new(a, c)?;
            let err = (q_path_limit(d, cusp, t0, t1, steps)?.q_limit
                - cusp_limit(d, cusp)?.q_value)
                .norm();
            Ok((err < 1e-3, format!("|Q_path − Q_cusp| = {err:e}")))
        });
    }
    r.checks
}

/// Runs `suite`; checks are reported in a fixed order.
pub fn run_suite(suite: Suite, order: usize, tol: f64) -> Vec<Check> {
    match suite {
        Suite::Pf => pf(order),
        Suite::Modular => modular(order),
        Suite::Gw => gw(order),
        Suite::Translation => translation(),
        Suite::RemarkTable => remark_table(tol),
        Suite::All => [
            Suite::Pf,
            Suite::Modular,
            Suite::Gw,
            Suite::Translation,
            Suite::RemarkTable,
        ]
        .into_iter()
        .flat_map(|s| run_suite(s, order, tol))
        .collect(),
    }
}
