//! Exact coefficient arithmetic: arbitrary-precision rationals, the number
//! field ℚ(√2, ζ₃), multivariate Laurent polynomials, and truncated power
//! series in `h` with exponential specialization.

pub mod laurent;
pub mod numfield;
pub mod rational;
pub mod series;

pub use laurent::LaurentPoly;
pub use numfield::NumberFieldElement;
pub use rational::Rational;
pub use series::{Substitution, TruncSeries};

use crate::error::Result;

/// Minimal commutative-ring interface used by polynomial and matrix code.
///
/// `zero` and `one` are context-free; rings whose elements carry a context
/// (such as a variable list) must make context-free constants coerce into
/// any context on binary operations.
pub trait Ring: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }
    fn is_zero(&self) -> bool {
        *self == Self::zero()
    }
    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

/// Rings in which every nonzero element is invertible.
pub trait Field: Ring {
    fn inv(&self) -> Result<Self>;

    fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.mul(&rhs.inv()?))
    }
}

/// Coefficient domains that embed into ℚ(√2, ζ₃); used when substituting
/// series for the variables of a Laurent polynomial.
pub trait NfEmbed {
    fn to_nf(&self) -> NumberFieldElement;
}

impl Ring for i64 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
}
