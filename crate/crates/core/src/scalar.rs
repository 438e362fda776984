//! Scalar abstraction over the real and complex fields.
//!
//! Every matrix routine in this crate is generic over [`Scalar`], with exactly
//! two implementors: `f64` and [`Complex64`]. Real symmetric and complex
//! Hermitian inputs therefore share one code path; conjugation is a no-op for
//! `f64`.

use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

pub use num_complex::Complex64;

/// Tag distinguishing the two supported scalar fields.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ScalarField {
    Real,
    Complex,
}

impl ScalarField {
    pub fn as_str(self) -> &'static str {
        match self {
            ScalarField::Real => "real",
            ScalarField::Complex => "complex",
        }
    }
}

impl Display for ScalarField {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Field element of a real or complex matrix.
pub trait Scalar:
    Copy
    + PartialEq
    + Debug
    + Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    /// Which field this scalar lives in.
    const FIELD: ScalarField;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_re(re: f64) -> Self;
    fn from_re_im(re: f64, im: f64) -> Self;
    /// Complex conjugate (identity on the reals).
    fn conj(self) -> Self;
    fn re(self) -> f64;
    fn im(self) -> f64;
    /// Modulus.
    fn abs(self) -> f64;
    /// Squared modulus, without the square root.
    fn abs_sq(self) -> f64;
    fn is_finite(self) -> bool;

    /// Multiply by a real coefficient.
    fn scale(self, factor: f64) -> Self;
}

impl Scalar for f64 {
    const FIELD: ScalarField = ScalarField::Real;

    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_re(re: f64) -> Self {
        re
    }
    fn from_re_im(re: f64, _im: f64) -> Self {
        re
    }
    fn conj(self) -> Self {
        self
    }
    fn re(self) -> f64 {
        self
    }
    fn im(self) -> f64 {
        0.0
    }
    fn abs(self) -> f64 {
        f64::abs(self)
    }
    fn abs_sq(self) -> f64 {
        self * self
    }
    fn is_finite(self) -> bool {
        f64::is_finite(self)
    }
    fn scale(self, factor: f64) -> Self {
        self * factor
    }
}

impl Scalar for Complex64 {
    const FIELD: ScalarField = ScalarField::Complex;

    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn from_re(re: f64) -> Self {
        Complex64::new(re, 0.0)
    }
    fn from_re_im(re: f64, im: f64) -> Self {
        Complex64::new(re, im)
    }
    fn conj(self) -> Self {
        Complex64::conj(&self)
    }
    fn re(self) -> f64 {
        self.re
    }
    fn im(self) -> f64 {
        self.im
    }
    fn abs(self) -> f64 {
        self.norm()
    }
    fn abs_sq(self) -> f64 {
        self.norm_sqr()
    }
    fn is_finite(self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }
    fn scale(self, factor: f64) -> Self {
        Complex64::new(self.re * factor, self.im * factor)
    }
}
