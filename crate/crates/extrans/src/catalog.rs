//! Constants of the nine transition cases.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::qseries::{int, rat, Rational};

/// The transition case, indexed by the degree of the del Pezzo threefold.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TransitionCase {
    D1,
    D2,
    D3,
    D4,
    D5,
    D6I,
    D6II,
    D7,
    D8,
}

impl TransitionCase {
    pub const ALL: [TransitionCase; 9] = [
        TransitionCase::D1,
        TransitionCase::D2,
        TransitionCase::D3,
        TransitionCase::D4,
        TransitionCase::D5,
        TransitionCase::D6I,
        TransitionCase::D6II,
        TransitionCase::D7,
        TransitionCase::D8,
    ];

    /// Every case with a single constant row, i.e. all but `D7`.
    pub const SUPPORTED: [TransitionCase; 8] = [
        TransitionCase::D1,
        TransitionCase::D2,
        TransitionCase::D3,
        TransitionCase::D4,
        TransitionCase::D5,
        TransitionCase::D6I,
        TransitionCase::D6II,
        TransitionCase::D8,
    ];

    /// The numeric degree `d` (6 for both degree-six cases).
    pub fn degree(self) -> i64 {
        match self {
            TransitionCase::D1 => 1,
            TransitionCase::D2 => 2,
            TransitionCase::D3 => 3,
            TransitionCase::D4 => 4,
            TransitionCase::D5 => 5,
            TransitionCase::D6I | TransitionCase::D6II => 6,
            TransitionCase::D7 => 7,
            TransitionCase::D8 => 8,
        }
    }

    /// True for the case with two Kähler parameters and only partial support.
    pub fn is_partial(self) -> bool {
        self == TransitionCase::D7
    }

    pub fn label(self) -> &'static str {
        match self {
            TransitionCase::D1 => "1",
            TransitionCase::D2 => "2",
            TransitionCase::D3 => "3",
            TransitionCase::D4 => "4",
            TransitionCase::D5 => "5",
            TransitionCase::D6I => "6I",
            TransitionCase::D6II => "6II",
            TransitionCase::D7 => "7",
            TransitionCase::D8 => "8",
        }
    }
}

impl fmt::Display for TransitionCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for TransitionCase {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches(['d', 'D']);
        Ok(match t {
            "1" => TransitionCase::D1,
            "2" => TransitionCase::D2,
            "3" => TransitionCase::D3,
            "4" => TransitionCase::D4,
            "5" => TransitionCase::D5,
            "6I" | "6i" => TransitionCase::D6I,
            "6II" | "6ii" => TransitionCase::D6II,
            "7" => TransitionCase::D7,
            "8" => TransitionCase::D8,
            _ => return Err(Error::Unsupported(format!("unknown case {s}"))),
        })
    }
}

/// The number `a + b·√disc`.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadSurd {
    pub a: Rational,
    pub b: Rational,
    pub disc: i64,
}

impl QuadSurd {
    pub fn rational(a: Rational) -> Self {
        QuadSurd {
            a,
            b: Rational::zero(),
            disc: 1,
        }
    }

    pub fn to_f64(&self) -> f64 {
        crate::qseries::rat_to_f64(&self.a)
            + crate::qseries::rat_to_f64(&self.b) * (self.disc as f64).sqrt()
    }

    fn mul(&self, o: &QuadSurd) -> QuadSurd {
        let disc = if self.b.is_zero() { o.disc } else { self.disc };
        QuadSurd {
            a: &self.a * &o.a + &self.b * &o.b * int(disc),
            b: &self.a * &o.b + &self.b * &o.a,
            disc,
        }
    }

    /// Exact value of `c0 + c1·x + c2·x²` at this surd.
    pub fn eval_quadratic(&self, c0: &Rational, c1: &Rational, c2: &Rational) -> QuadSurd {
        let sq = self.mul(self);
        QuadSurd {
            a: c0 + c1 * &self.a + c2 * &sq.a,
            b: c1 * &self.b + c2 * &sq.b,
            disc: self.disc,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl fmt::Display for QuadSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else {
            write!(f, "{} + ({})*sqrt({})", self.a, self.b, self.disc)
        }
    }
}

/// A singular point of the Picard–Fuchs equation on the `P`-line.
#[derive(Clone, Debug, PartialEq)]
pub enum SingPoint {
    Zero,
    Infinity,
    Finite(QuadSurd),
}

/// The class of the transition point in the modular curve.
#[derive(Clone, Debug, PartialEq)]
pub enum TransitionPoint {
    /// A cusp with representative `a/c`.
    Cusp { a: i64, c: i64 },
    /// An elliptic point, described by a label such as `ω_6`.
    Elliptic(&'static str),
}

/// All constants attached to a case.
#[derive(Clone, Debug, PartialEq)]
pub struct CaseData {
    pub case: TransitionCase,
    pub degree: i64,
    pub kappa: i64,
    pub lambda: i64,
    pub mu: i64,
    pub base_change_degree: i64,
    pub sing_points: Vec<SingPoint>,
    pub transition_point: TransitionPoint,
    pub hodge: (i64, i64),
    pub euler_defect: i64,
}

/// The row `(κ, λ, μ)` of the Picard–Fuchs coefficients.
pub fn case_constants(d: TransitionCase) -> Result<(i64, i64, i64)> {
    use TransitionCase::*;
    Ok(match d {
        D1 => (432, 60, 0),
        D2 => (64, 12, 0),
        D3 => (27, 6, 0),
        D4 => (16, 4, 0),
        D5 => (11, 3, 1),
        D6I => (7, 2, 8),
        D6II => (10, 3, -9),
        D8 => (0, 0, 16),
        D7 => {
            return Err(Error::Unsupported(
                "case 7 has no single (κ, λ, μ) row".into(),
            ))
        }
    })
}

/// `(h^{1,1}, h^{2,1})` of the del Pezzo threefold `X_d`.
pub fn hodge_numbers(d: TransitionCase) -> (i64, i64) {
    use TransitionCase::*;
    match d {
        D1 => (1, 21),
        D2 => (1, 10),
        D3 => (1, 5),
        D4 => (1, 2),
        D5 => (1, 0),
        D6I => (2, 0),
        D6II => (3, 0),
        D7 => (2, 0),
        D8 => (1, 0),
    }
}

/// Tabulated `2χ(S_d) − χ(X_d)`.
fn euler_defect_table(d: TransitionCase) -> i64 {
    use TransitionCase::*;
    match d {
        D1 => 60,
        D2 => 36,
        D3 => 24,
        D4 => 16,
        D5 => 10,
        D6I => 6,
        D6II | D7 | D8 => 4,
    }
}

/// `2·(12 − d) − (2 + 2h^{1,1} − 2h^{2,1})`, checked against the table.
pub fn euler_defect(d: TransitionCase) -> Result<i64> {
    let (h11, h21) = hodge_numbers(d);
    let chi_s = 12 - d.degree();
    let chi_x = 2 + 2 * h11 - 2 * h21;
    let v = 2 * chi_s - chi_x;
    let t = euler_defect_table(d);
    if v != t {
        return Err(Error::TableMismatch(format!(
            "euler defect of {d}: computed {v}, table {t}"
        )));
    }
    Ok(v)
}

/// Base-change degree `n_d` of the semistable reduction.
pub fn base_change_degree(d: TransitionCase) -> i64 {
    match d {
        TransitionCase::D1 => 6,
        TransitionCase::D2 => 4,
        TransitionCase::D3 => 3,
        _ => 2,
    }
}

/// The transition point, where `P = ∞`.
pub fn transition_point(d: TransitionCase) -> Result<TransitionPoint> {
    use TransitionCase::*;
    Ok(match d {
        D1 => TransitionPoint::Elliptic("ω_6"),
        D2 => TransitionPoint::Elliptic("(1+i)/2"),
        D3 => TransitionPoint::Elliptic("(1+ω_6)/3"),
        D4 => TransitionPoint::Cusp { a: 1, c: 2 },
        D5 => TransitionPoint::Cusp { a: 2, c: 5 },
        D6I => TransitionPoint::Cusp { a: 1, c: 3 },
        D6II => TransitionPoint::Cusp { a: 1, c: 2 },
        D8 => TransitionPoint::Cusp { a: 1, c: 4 },
        D7 => return Err(Error::Unsupported("case 7 transition point".into())),
    })
}

/// Singular points `0, ∞` and the roots of `u = 1 + κP − μP²`.
pub fn sing_points(d: TransitionCase) -> Result<Vec<SingPoint>> {
    let (k, _, m) = case_constants(d)?;
    let mut out = vec![SingPoint::Zero, SingPoint::Infinity];
    if m == 0 {
        if k != 0 {
            out.push(SingPoint::Finite(QuadSurd::rational(rat(-1, k))));
        }
        return Ok(out);
    }
    let disc = k * k + 4 * m;
    let (sq, free) = split_square(disc);
    let two_m = 2 * m;
    if free == 1 {
        for s in [-1, 1] {
            out.push(SingPoint::Finite(QuadSurd::rational(rat(
                k + s * sq,
                two_m,
            ))));
        }
    } else {
        for s in [-1, 1] {
            out.push(SingPoint::Finite(QuadSurd {
                a: rat(k, two_m),
                b: rat(s * sq, two_m),
                disc: free,
            }));
        }
    }
    Ok(out)
}

fn split_square(n: i64) -> (i64, i64) {
    let mut sq = 1;
    let mut free = n;
    let mut p = 2;
    while p * p <= free {
        while free % (p * p) == 0 {
            free /= p * p;
            sq *= p;
        }
        p += 1;
    }
    (sq, free)
}

/// Gathers every constant of a supported case.
pub fn case_data(d: TransitionCase) -> Result<CaseData> {
    let (kappa, lambda, mu) = case_constants(d)?;
    Ok(CaseData {
        case: d,
        degree: d.degree(),
        kappa,
        lambda,
        mu,
        base_change_degree: base_change_degree(d),
        sing_points: sing_points(d)?,
        transition_point: transition_point(d)?,
        hodge: hodge_numbers(d),
        euler_defect: euler_defect(d)?,
    })
}

/// Local exponents at `P = ∞` as listed in the singularity table.
pub fn tabulated_exponents_at_infinity(d: TransitionCase) -> Result<(Rational, Rational)> {
    let (_, _, mu) = case_constants(d)?;
    if mu != 0 {
        return Ok((int(1), int(1)));
    }
    let n = base_change_degree(d);
    Ok((rat(1, n), rat(n - 1, n)))
}
