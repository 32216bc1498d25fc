//! Coefficient fields: exact rationals, exact Gaussian rationals, and
//! double-precision complex numbers.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::{Complex, Complex64};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational number with arbitrary-precision numerator and denominator.
pub type Rational = BigRational;

/// Exact element of `Q(i)`.
pub type GaussRational = Complex<BigRational>;

/// Double-precision complex number.
pub type ComplexF = Complex64;

/// A field usable as a series coefficient.
pub trait Coeff:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    /// Embeds a rational number.
    fn from_rational(r: &Rational) -> Self;

    /// Numeric value.
    fn to_complex(&self) -> ComplexF;

    /// Embeds an integer.
    fn from_i64(n: i64) -> Self {
        Self::from_rational(&rat(n, 1))
    }

    /// Magnitude used for tail estimates.
    fn magnitude(&self) -> f64 {
        self.to_complex().norm()
    }
}

impl Coeff for Rational {
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
    fn to_complex(&self) -> ComplexF {
        ComplexF::new(rat_to_f64(self), 0.0)
    }
}

impl Coeff for GaussRational {
    fn from_rational(r: &Rational) -> Self {
        Complex::new(r.clone(), Rational::zero())
    }
    fn to_complex(&self) -> ComplexF {
        ComplexF::new(rat_to_f64(&self.re), rat_to_f64(&self.im))
    }
}

impl Coeff for ComplexF {
    fn from_rational(r: &Rational) -> Self {
        ComplexF::new(rat_to_f64(r), 0.0)
    }
    fn to_complex(&self) -> ComplexF {
        *self
    }
}

/// Builds the reduced fraction `n/d`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Builds an integer rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Builds the Gaussian rational `re + i·im`.
pub fn gauss(re: Rational, im: Rational) -> GaussRational {
    Complex::new(re, im)
}

/// Embeds a rational into `Q(i)`.
pub fn gauss_real(r: Rational) -> GaussRational {
    Complex::new(r, Rational::zero())
}

/// The imaginary unit in `Q(i)`.
pub fn gauss_i() -> GaussRational {
    Complex::new(Rational::zero(), Rational::one())
}

/// Converts a rational to the nearest double, robust for huge numerators.
pub fn rat_to_f64(r: &Rational) -> f64 {
    if let (Some(n), Some(d)) = (r.numer().to_f64(), r.denom().to_f64()) {
        if n.is_finite() && d.is_finite() && d != 0.0 {
            return n / d;
        }
    }
    let nb = r.numer().bits() as i64;
    let db = r.denom().bits() as i64;
    let shift = nb - db - 60;
    let scaled = if shift > 0 {
        Rational::new(r.numer().clone(), r.denom().clone() << (shift as usize))
    } else {
        Rational::new(r.numer().clone() << ((-shift) as usize), r.denom().clone())
    };
    let q = scaled.to_integer().to_f64().unwrap_or(0.0);
    q * 2f64.powi(shift as i32)
}

/// Exact rational approximation helper used when printing small values.
pub fn rat_is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

/// Absolute value of a rational.
pub fn rat_abs(r: &Rational) -> Rational {
    r.abs()
}
