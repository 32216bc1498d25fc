use std::f64::consts::PI;

use super::combo::CuspRep;
use super::limit::{cusp_limit, lprime_exponential, CuspLimit};
use crate::catalog::TransitionCase;
use crate::dirichlet::{chi_3_2, chi_4_2, chi_5_2, chi_5_3, DirichletCharacter};
use crate::error::{Error, Result};
use crate::qseries::{gauss, int, rat, ComplexF, GaussRational};

/// A closed form `e^{2πi·num/den}·exp(Σ c_ψ·L'(−1, ψ))`.
#[derive(Clone, Debug, PartialEq)]
pub struct ExpectedLimit {
    pub root: (i64, u64),
    pub lprime: Vec<(DirichletCharacter, GaussRational)>,
}

impl ExpectedLimit {
    pub fn value(&self) -> Result<ComplexF> {
        let (n, d) = self.root;
        Ok(ComplexF::from_polar(1.0, 2.0 * PI * n as f64 / d as f64)
            * lprime_exponential(&self.lprime)?)
    }
}

/// One line of the battery.
#[derive(Clone, Debug, PartialEq)]
pub struct RemarkItem {
    pub d: TransitionCase,
    pub r: CuspRep,
    pub expected: ExpectedLimit,
    pub computed: CuspLimit,
    /// The `L'` multipliers agree exactly, and so does the root of unity
    /// when it is known exactly.
    pub exact_ok: bool,
    /// `|Q_computed/Q_expected − 1|`.
    pub relative_error: f64,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RemarkReport {
    pub items: Vec<RemarkItem>,
}

impl RemarkReport {
    pub fn all_pass(&self) -> bool {
        self.items.iter().all(|i| i.pass)
    }
}

fn re(x: i64) -> GaussRational {
    gauss(int(x), int(0))
}

/// The fixed battery of cusps with known limits.
pub fn remark_battery() -> Result<Vec<(TransitionCase, CuspRep, ExpectedLimit)>> {
    use TransitionCase::*;
    let e = |root: (i64, u64), lprime: Vec<(DirichletCharacter, GaussRational)>| ExpectedLimit {
        root,
        lprime,
    };
    let half_c = |c: i64, a: GaussRational| a * gauss(int(c), int(0));
    Ok(vec![
        (
            D3,
            CuspRep::new(1, 7)?,
            e((1, 2), vec![(chi_3_2(), re(-63))]),
        ),
        (D4, CuspRep::new(1, 2)?, e((0, 1), vec![])),
        (
            D4,
            CuspRep::new(1, 5)?,
            e((1, 2), vec![(chi_4_2(), re(-20))]),
        ),
        (D5, CuspRep::new(7, 120)?, e((0, 1), vec![])),
        (D5, CuspRep::new(2, 5)?, e((-1, 24), vec![])),
        (
            D5,
            CuspRep::new(1, 11)?,
            e(
                (1, 2),
                vec![
                    (chi_5_2(), half_c(11, gauss(int(-1), rat(1, 2)))),
                    (chi_5_3(), half_c(11, gauss(int(-1), rat(-1, 2)))),
                ],
            ),
        ),
        (
            D5,
            CuspRep::new(1, 2)?,
            e(
                (0, 1),
                vec![
                    (chi_5_2(), gauss(int(-1), int(-2))),
                    (chi_5_3(), gauss(int(-1), int(2))),
                ],
            ),
        ),
        (
            D6I,
            CuspRep::new(1, 7)?,
            e((1, 2), vec![(chi_3_2(), re(-35))]),
        ),
        (D6I, CuspRep::new(1, 3)?, e((-1, 8), vec![])),
        (
            D6II,
            CuspRep::new(1, 2)?,
            e((0, 1), vec![(chi_3_2(), re(-2))]),
        ),
        (
            D6II,
            CuspRep::new(1, 8)?,
            e((0, 1), vec![(chi_3_2(), re(-8))]),
        ),
    ])
}

fn same_multipliers(
    a: &[(DirichletCharacter, GaussRational)],
    b: &[(DirichletCharacter, GaussRational)],
) -> bool {
    a.len() == b.len()
        && a.iter()
            .all(|(p, c)| b.iter().any(|(q, e)| p == q && c == e))
}

/// Evaluates one expected limit.
pub fn check_limit(d: TransitionCase, r: CuspRep, expected: &ExpectedLimit) -> Result<RemarkItem> {
    let computed = cusp_limit(d, r)?;
    let mut exact_ok = same_multipliers(&computed.trivial_part, &expected.lprime);
    if expected.lprime.is_empty() {
        if let (Some(got), Some(_)) = (computed.root_of_unity, computed.nontrivial_pi_i.as_ref()) {
            exact_ok &= got == expected.root;
        }
    }
    let want = expected.value()?;
    let relative_error = (computed.q_value / want - 1.0).norm();
    let pass = exact_ok && relative_error < super::limit::ROOT_TOL;
    Ok(RemarkItem {
        d,
        r,
        expected: expected.clone(),
        computed,
        exact_ok,
        relative_error,
        pass,
    })
}

/// Runs the battery; fails on the first mismatch.
pub fn remark_table_check() -> Result<RemarkReport> {
    let mut items = Vec::new();
    for (d, r, e) in remark_battery()? {
        let item = check_limit(d, r, &e)?;
        if !item.pass {
            return Err(Error::Verification(format!(
                "limit at d = {d}, r = {r}: exact parts {} and relative error {:e}",
                if item.exact_ok { "agree" } else { "disagree" },
                item.relative_error
            )));
        }
        items.push(item);
    }
    Ok(RemarkReport { items })
}
