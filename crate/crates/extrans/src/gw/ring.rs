use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::qseries::{int, Rational};

/// Finite Laurent polynomial in `z` with rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ZLaurent {
    terms: BTreeMap<i64, Rational>,
}

impl ZLaurent {
    pub fn zero() -> Self {
        ZLaurent::default()
    }

    /// `c·z^k`.
    pub fn monomial(k: i64, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        ZLaurent { terms }
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(0, c)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `z^k`.
    pub fn coeff(&self, k: i64) -> Rational {
        self.terms.get(&k).cloned().unwrap_or_else(Rational::zero)
    }

    /// Nonzero terms `(k, c)` of `c·z^k`, increasing in `k`.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &Rational)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    /// The single term when the polynomial is a monomial.
    pub fn as_monomial(&self) -> Option<(i64, &Rational)> {
        (self.terms.len() == 1).then(|| self.terms().next().unwrap())
    }

    fn insert_add(&mut self, k: i64, c: Rational) {
        let e = self.terms.entry(k).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in o.terms() {
            out.insert_add(k, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        ZLaurent {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero();
        for (a, x) in self.terms() {
            for (b, y) in o.terms() {
                out.insert_add(a + b, x * y);
            }
        }
        out
    }

    pub fn shift(&self, k: i64) -> Self {
        ZLaurent {
            terms: self.terms.iter().map(|(e, v)| (e + k, v.clone())).collect(),
        }
    }

    /// Drops terms below `z^{−depth}`.
    pub fn truncate(&self, depth: i64) -> Self {
        ZLaurent {
            terms: self
                .terms
                .range(-depth..)
                .map(|(k, v)| (*k, v.clone()))
                .collect(),
        }
    }
}

impl fmt::Display for ZLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms()
            .rev()
            .map(|(k, c)| match k {
                0 => format!("{c}"),
                1 => format!("({c})z"),
                _ => format!("({c})z^{k}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Which cohomology ring an element lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RingKind {
    /// `Q[h]/(h⁴)` with basis `1, h, h², h³`.
    X,
    /// `Q[E, H]/(EH, E³ − H³, deg > 3)` with basis `1, E, H, E², H², T`.
    Y,
}

impl RingKind {
    pub fn dim(self) -> usize {
        match self {
            RingKind::X => 4,
            RingKind::Y => 6,
        }
    }

    /// Cohomological degree (in units of divisors) of each basis element.
    pub fn degrees(self) -> &'static [i64] {
        match self {
            RingKind::X => &[0, 1, 2, 3],
            RingKind::Y => &[0, 1, 1, 2, 2, 3],
        }
    }

    pub fn basis_names(self) -> &'static [&'static str] {
        match self {
            RingKind::X => &["1", "h", "h^2", "h^3"],
            RingKind::Y => &["1", "E", "H", "E^2", "H^2", "T"],
        }
    }

    /// Product of basis elements `i·j`, as an index, or `None` when zero.
    fn product(self, i: usize, j: usize) -> Option<usize> {
        match self {
            RingKind::X => (i + j <= 3).then_some(i + j),
            RingKind::Y => match (i, j) {
                (0, k) | (k, 0) => Some(k),
                (1, 1) => Some(3),
                (2, 2) => Some(4),
                (1, 3) | (3, 1) | (2, 4) | (4, 2) => Some(5),
                _ => None,
            },
        }
    }
}

/// Cohomology class with `z`-Laurent coefficients on the basis of a
/// [`RingKind`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomClass {
    kind: RingKind,
    comps: Vec<ZLaurent>,
}

/// Element of `H(X_d)`.
pub type CohomClassX = CohomClass;
/// Element of the invariant part of `H(Y_d)`.
pub type CohomClassY = CohomClass;

pub const E_IDX: usize = 1;
pub const H_IDX: usize = 2;

impl CohomClass {
    pub fn zero(kind: RingKind) -> Self {
        CohomClass {
            kind,
            comps: vec![ZLaurent::zero(); kind.dim()],
        }
    }

    pub fn from_components(kind: RingKind, comps: Vec<ZLaurent>) -> Result<Self> {
        if comps.len() != kind.dim() {
            return Err(Error::Precondition(format!(
                "expected {} components, got {}",
                kind.dim(),
                comps.len()
            )));
        }
        Ok(CohomClass { kind, comps })
    }

    /// `c·z^k` times the basis element `idx`.
    pub fn basis(kind: RingKind, idx: usize, k: i64, c: Rational) -> Self {
        let mut out = Self::zero(kind);
        out.comps[idx] = ZLaurent::monomial(k, c);
        out
    }

    pub fn one(kind: RingKind) -> Self {
        Self::basis(kind, 0, 0, int(1))
    }

    /// `c·z^k`.
    pub fn z_power(kind: RingKind, k: i64, c: Rational) -> Self {
        Self::basis(kind, 0, k, c)
    }

    /// The hyperplane class `h` of `X`.
    pub fn h() -> Self {
        Self::basis(RingKind::X, 1, 0, int(1))
    }

    pub fn e() -> Self {
        Self::basis(RingKind::Y, E_IDX, 0, int(1))
    }

    pub fn big_h() -> Self {
        Self::basis(RingKind::Y, H_IDX, 0, int(1))
    }

    /// `F = H − E`.
    pub fn f() -> Self {
        Self::big_h().sub(&Self::e())
    }

    pub fn kind(&self) -> RingKind {
        self.kind
    }

    pub fn component(&self, idx: usize) -> &ZLaurent {
        &self.comps[idx]
    }

    pub fn components(&self) -> &[ZLaurent] {
        &self.comps
    }

    /// Coefficient of `z^k` on basis element `idx`.
    pub fn coeff(&self, idx: usize, k: i64) -> Rational {
        self.comps[idx].coeff(k)
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(ZLaurent::is_zero)
    }

    fn check(&self, o: &Self) {
        assert_eq!(self.kind, o.kind, "cohomology classes from different rings");
    }

    pub fn add(&self, o: &Self) -> Self {
        self.check(o);
        CohomClass {
            kind: self.kind,
            comps: self
                .comps
                .iter()
                .zip(&o.comps)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&int(-1))
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        CohomClass {
            kind: self.kind,
            comps: self.comps.iter().map(|a| a.scale(c)).collect(),
        }
    }

    /// Multiplies by `z^k`.
    pub fn shift(&self, k: i64) -> Self {
        CohomClass {
            kind: self.kind,
            comps: self.comps.iter().map(|a| a.shift(k)).collect(),
        }
    }

    /// `self + c·z`.
    pub fn plus_z(&self, c: &Rational) -> Self {
        self.add(&Self::z_power(self.kind, 1, c.clone()))
    }

    pub fn mul(&self, o: &Self) -> Self {
        self.check(o);
        let mut comps = vec![ZLaurent::zero(); self.kind.dim()];
        for (i, a) in self.comps.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.comps.iter().enumerate() {
                if let Some(k) = self.kind.product(i, j) {
                    if !b.is_zero() {
                        comps[k] = comps[k].add(&a.mul(b));
                    }
                }
            }
        }
        CohomClass {
            kind: self.kind,
            comps,
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(self.kind), |acc, _| acc.mul(self))
    }

    /// Inverse of `c·z^k + N` with `N` nilpotent:
    /// `(c z^k)^{−1} Σ_{j ≤ 3} (−N/(c z^k))^j`.
    pub fn inv(&self) -> Result<Self> {
        let (k, c) = self.comps[0].as_monomial().ok_or_else(|| {
            Error::Precondition("class is not a unit: scalar part is not a monomial in z".into())
        })?;
        let cinv = Self::z_power(self.kind, -k, int(1) / c);
        let mut nil = self.clone();
        nil.comps[0] = ZLaurent::zero();
        let step = nil.mul(&cinv).neg();
        let mut term = Self::one(self.kind);
        let mut acc = Self::one(self.kind);
        for _ in 0..3 {
            term = term.mul(&step);
            acc = acc.add(&term);
        }
        Ok(acc.mul(&cinv))
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul(&o.inv()?))
    }

    /// Drops terms below `z^{−depth}`.
    pub fn truncate(&self, depth: i64) -> Self {
        CohomClass {
            kind: self.kind,
            comps: self.comps.iter().map(|a| a.truncate(depth)).collect(),
        }
    }

    /// `π^*i^*`: sends `h^j` to `F^j`.
    pub fn pullback_to_y(&self) -> Result<Self> {
        if self.kind != RingKind::X {
            return Err(Error::Precondition(
                "pullback is defined on classes of X".into(),
            ));
        }
        let f = Self::f();
        let mut out = Self::zero(RingKind::Y);
        let mut fj = Self::one(RingKind::Y);
        for c in &self.comps {
            let mut coef = Self::zero(RingKind::Y);
            coef.comps[0] = c.clone();
            out = out.add(&coef.mul(&fj));
            fj = fj.mul(&f);
        }
        Ok(out)
    }
}

impl fmt::Display for CohomClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = self.kind.basis_names();
        let parts: Vec<String> = self
            .comps
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                if i == 0 {
                    format!("[{c}]")
                } else {
                    format!("[{c}]{}", names[i])
                }
            })
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// `(D)^{\overline n} = Π_{ν=1}^{n} (D + νz)`.
pub fn pochhammer(d: &CohomClass, n: u64) -> CohomClass {
    (1..=n).fold(CohomClass::one(d.kind()), |acc, nu| {
        acc.mul(&d.plus_z(&int(nu as i64)))
    })
}

/// `1/(D)^{\overline k}` for any integer `k`; for `k < 0` this is the
/// polynomial `Π_{ν=k+1}^{0} (D + νz)`.
pub fn pochhammer_reciprocal(d: &CohomClass, k: i64) -> Result<CohomClass> {
    if k >= 0 {
        pochhammer(d, k as u64).inv()
    } else {
        Ok((k + 1..=0).fold(CohomClass::one(d.kind()), |acc, nu| {
            acc.mul(&d.plus_z(&int(nu)))
        }))
    }
}
