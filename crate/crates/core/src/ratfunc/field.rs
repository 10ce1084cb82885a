//! Scalar abstractions shared by every coefficient domain in the crate.

use std::fmt;
use std::ops::{Div, Neg, Sub};

use num::{BigInt, BigRational, One, Zero};

/// Exact arbitrary-precision rational number, the ground coefficient domain.
pub type Rat = BigRational;

/// Shorthand for the rational `n/d`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Shorthand for the rational `n/1`.
pub fn rat_int(n: i64) -> Rat {
    Rat::from(BigInt::from(n))
}

/// Binomial coefficient as an exact rational (integer-valued).
pub fn binomial(n: u32, k: u32) -> Rat {
    if k > n {
        return Rat::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    Rat::from(acc)
}

/// An exact field. Everything is a value type; all operations are pure.
///
/// `Div` is expected to panic on division by zero, as `BigRational` does;
/// fallible division lives on the concrete types that need to report it.
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Div<Output = Self>
{
    fn inv(&self) -> Self {
        Self::one() / self.clone()
    }

    /// Monic GCD of polynomials over this field. The default is the plain
    /// Euclidean algorithm; coefficient domains with structure override it
    /// with a primitive pseudo-remainder sequence, since naive remainders
    /// over a fraction field blow up.
    fn poly_gcd(a: &super::poly::Poly<Self>, b: &super::poly::Poly<Self>) -> super::poly::Poly<Self> {
        let mut a = a.clone();
        let mut b = b.clone();
        while !b.is_zero() {
            // keeping remainders monic tames coefficient growth
            let r = a.divrem(&b).1.monic();
            a = b;
            b = r;
        }
        a.monic()
    }
}

impl Field for Rat {
    fn poly_gcd(a: &super::poly::Poly<Self>, b: &super::poly::Poly<Self>) -> super::poly::Poly<Self> {
        super::gcd::gcd_rat_coeff(a, b)
    }
}

/// Errors raised by exact arithmetic.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ArithError {
    /// Division by the zero element of the field.
    DivisionByZero,
    /// Evaluation at a point where the reduced denominator vanishes.
    Pole,
    /// Series operands of different truncation orders.
    OrderMismatch(usize, usize),
    /// Series reciprocal of a series with zero constant term.
    RecipConstantTerm,
    /// Series composition with an inner series whose constant term is nonzero.
    ComposeConstantTerm,
}

impl fmt::Display for ArithError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArithError::DivisionByZero => write!(f, "division by zero"),
            ArithError::Pole => write!(f, "evaluation at a pole of the rational function"),
            ArithError::OrderMismatch(a, b) => {
                write!(f, "series truncation orders differ: {a} vs {b}")
            }
            ArithError::RecipConstantTerm => {
                write!(f, "series reciprocal requires a nonzero constant term")
            }
            ArithError::ComposeConstantTerm => {
                write!(f, "series composition requires an inner series with zero constant term")
            }
        }
    }
}

impl std::error::Error for ArithError {}
