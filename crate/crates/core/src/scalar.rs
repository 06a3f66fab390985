use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

pub type Rat = BigRational;
pub type Cplx = Complex64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ScalarKind {
    Rational,
    Complex,
}

impl ScalarKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ScalarKind::Rational => "rational",
            ScalarKind::Complex => "complex",
        }
    }
}

/// Coefficient ring of tensors and matrices. Implemented for [`Rat`] and [`Cplx`] only.
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Send
    + Sync
    + 'static
{
    const KIND: ScalarKind;
    fn from_rat(r: &Rat) -> Self;
    fn from_i64(v: i64) -> Self;
    /// Absolute value as a float, used for residual norms.
    fn magnitude(&self) -> f64;
}

impl Scalar for Rat {
    const KIND: ScalarKind = ScalarKind::Rational;
    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }
    fn from_i64(v: i64) -> Self {
        Rat::from_integer(BigInt::from(v))
    }
    fn magnitude(&self) -> f64 {
        self.to_f64().map(f64::abs).unwrap_or(f64::INFINITY)
    }
}

impl Scalar for Cplx {
    const KIND: ScalarKind = ScalarKind::Complex;
    fn from_rat(r: &Rat) -> Self {
        Complex64::new(r.to_f64().unwrap_or(f64::NAN), 0.0)
    }
    fn from_i64(v: i64) -> Self {
        Complex64::new(v as f64, 0.0)
    }
    fn magnitude(&self) -> f64 {
        self.norm()
    }
}

/// `p/q` as an exact rational. Panics on `q == 0`.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

pub fn rat_to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}
