//! Arbitrary-precision rationals, always stored reduced with positive
//! denominator. Serialized as decimal strings `"p/q"`.

use std::fmt;
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::{Field, NfEmbed, Ring};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// `n/d`, reduced. Errors on a zero denominator.
    pub fn new(n: i64, d: i64) -> Result<Self> {
        Self::from_bigints(BigInt::from(n), BigInt::from(d))
    }

    pub fn from_bigints(n: BigInt, d: BigInt) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(BigRational::new(n, d)))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn pow(&self, exp: i32) -> Result<Self> {
        if exp < 0 && Ring::is_zero(self) {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(num::pow::Pow::pow(&self.0, exp)))
    }
}

impl Ring for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn add(&self, rhs: &Self) -> Self {
        Rational(&self.0 + &rhs.0)
    }
    fn neg(&self) -> Self {
        Rational(-&self.0)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Rational(&self.0 * &rhs.0)
    }
    fn sub(&self, rhs: &Self) -> Self {
        Rational(&self.0 - &rhs.0)
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn is_one(&self) -> bool {
        self.0.is_one()
    }
}

impl Field for Rational {
    fn inv(&self) -> Result<Self> {
        if Ring::is_zero(self) {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(self.0.recip()))
    }
}

impl NfEmbed for Rational {
    fn to_nf(&self) -> super::NumberFieldElement {
        super::NumberFieldElement::from_rational(self.clone())
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadParams(format!("cannot parse rational `{s}`"));
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n, d),
            None => (s, "1"),
        };
        let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
        let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
        Self::from_bigints(n, d)
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(|e| D::Error::custom(format!("{e}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn reduced_with_positive_denominator() {
        let x = r(4, -6);
        assert_eq!(x, r(-2, 3));
        assert_eq!(x.to_string(), "-2/3");
        assert!(!Rational::zero().is_negative());
        assert_eq!(Rational::zero().to_string(), "0/1");
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(Rational::new(1, 0), Err(Error::DivisionByZero));
    }

    #[test]
    fn parse_round_trip() {
        for s in ["3/2", "-7/5", "0/1", "12345678901234567890/7"] {
            let x: Rational = s.parse().unwrap();
            assert_eq!(x.to_string(), s);
        }
        assert_eq!("5".parse::<Rational>().unwrap(), r(5, 1));
    }

    #[test]
    fn json_round_trip_is_bit_exact() {
        let x = r(-987654321987654321, 1234567890123);
        let js = serde_json::to_string(&x).unwrap();
        let back: Rational = serde_json::from_str(&js).unwrap();
        assert_eq!(x, back);
    }

    #[test]
    fn inverse() {
        assert_eq!(r(3, 4).inv().unwrap(), r(4, 3));
        assert_eq!(Rational::zero().inv(), Err(Error::DivisionByZero));
    }
}
