//! The number field ℚ(√2, ζ₃) as a 4-dimensional rational algebra on the
//! basis {1, u, v, uv}, where u² = 2 and v² = −1 − v. Thus u realizes √2
//! and v realizes a primitive cube root of unity.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{Field, NfEmbed, Rational, Ring};

#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct NumberFieldElement {
    coords: [Rational; 4],
}

impl NumberFieldElement {
    pub fn new(coords: [Rational; 4]) -> Self {
        NumberFieldElement { coords }
    }

    pub fn zero() -> Self {
        Self::new([
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
        ])
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(r: Rational) -> Self {
        Self::new([r, Rational::zero(), Rational::zero(), Rational::zero()])
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_int(n))
    }

    /// u, the square root of 2.
    pub fn sqrt2() -> Self {
        Self::new([
            Rational::zero(),
            Rational::one(),
            Rational::zero(),
            Rational::zero(),
        ])
    }

    /// v, a primitive cube root of unity.
    pub fn zeta3() -> Self {
        Self::new([
            Rational::zero(),
            Rational::zero(),
            Rational::one(),
            Rational::zero(),
        ])
    }

    /// v² = −1 − v, the other primitive cube root of unity.
    pub fn zeta3_conj() -> Self {
        Self::zeta3().mul(&Self::zeta3())
    }

    pub fn coords(&self) -> &[Rational; 4] {
        &self.coords
    }

    /// The rational part, provided the u, v and uv coordinates vanish.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coords[1..].iter().all(Ring::is_zero) {
            Some(&self.coords[0])
        } else {
            None
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self::new([
            self.coords[0].mul(r),
            self.coords[1].mul(r),
            self.coords[2].mul(r),
            self.coords[3].mul(r),
        ])
    }

    pub fn pow(&self, mut exp: i64) -> Result<Self> {
        let mut base = if exp < 0 {
            exp = -exp;
            self.inv()?
        } else {
            self.clone()
        };
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            exp >>= 1;
        }
        Ok(acc)
    }

    /// Matrix of multiplication by `self` on the basis {1, u, v, uv};
    /// column j holds the coordinates of `self`·e_j.
    fn mul_matrix(&self) -> [[Rational; 4]; 4] {
        let basis = [
            Self::one(),
            Self::sqrt2(),
            Self::zeta3(),
            Self::sqrt2().mul(&Self::zeta3()),
        ];
        let mut m = std::array::from_fn(|_| std::array::from_fn(|_| Rational::zero()));
        let cols: [[Rational; 4]; 4] = std::array::from_fn(|j| self.mul(&basis[j]).coords);
        for (j, col) in cols.iter().enumerate() {
            for i in 0..4 {
                m[i][j] = col[i].clone();
            }
        }
        m
    }
}

impl Ring for NumberFieldElement {
    fn zero() -> Self {
        NumberFieldElement::zero()
    }

    fn one() -> Self {
        NumberFieldElement::one()
    }

    fn add(&self, rhs: &Self) -> Self {
        Self::new(std::array::from_fn(|i| self.coords[i].add(&rhs.coords[i])))
    }

    fn neg(&self) -> Self {
        Self::new(std::array::from_fn(|i| self.coords[i].neg()))
    }

    // Expand (a0 + a1 u + a2 v + a3 uv)(b0 + b1 u + b2 v + b3 uv) using
    // u² = 2, v² = −1 − v, (uv)² = −2 − 2v, u·uv = 2v, v·uv = −u − uv.
    fn mul(&self, rhs: &Self) -> Self {
        let a = &self.coords;
        let b = &rhs.coords;
        let two = Rational::from_int(2);

        let cross23 = a[2].mul(&b[3]).add(&a[3].mul(&b[2]));
        let c0 = a[0]
            .mul(&b[0])
            .add(&two.mul(&a[1].mul(&b[1])))
            .sub(&a[2].mul(&b[2]))
            .sub(&two.mul(&a[3].mul(&b[3])));
        let c1 = a[0].mul(&b[1]).add(&a[1].mul(&b[0])).sub(&cross23);
        let c2 = a[0]
            .mul(&b[2])
            .add(&a[2].mul(&b[0]))
            .add(&two.mul(&a[1].mul(&b[3]).add(&a[3].mul(&b[1]))))
            .sub(&a[2].mul(&b[2]))
            .sub(&two.mul(&a[3].mul(&b[3])));
        let c3 = a[0]
            .mul(&b[3])
            .add(&a[3].mul(&b[0]))
            .add(&a[1].mul(&b[2]))
            .add(&a[2].mul(&b[1]))
            .sub(&cross23);
        Self::new([c0, c1, c2, c3])
    }

    fn is_zero(&self) -> bool {
        self.coords.iter().all(Ring::is_zero)
    }
}

impl Field for NumberFieldElement {
    /// Solves the 4×4 rational system (mult-by-self) · x = 1.
    fn inv(&self) -> Result<Self> {
        if Ring::is_zero(self) {
            return Err(Error::DivisionByZero);
        }
        let m = self.mul_matrix();
        let mut aug: [[Rational; 5]; 4] = std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                if j < 4 {
                    m[i][j].clone()
                } else if i == 0 {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            })
        });
        for col in 0..4 {
            let pivot = (col..4)
                .find(|&r| !Ring::is_zero(&aug[r][col]))
                // ℚ(√2, ζ₃) is a field, so multiplication by a nonzero
                // element is invertible.
                .ok_or(Error::DivisionByZero)?;
            aug.swap(col, pivot);
            let inv = aug[col][col].inv()?;
            for j in col..5 {
                aug[col][j] = aug[col][j].mul(&inv);
            }
            for r in 0..4 {
                if r != col && !Ring::is_zero(&aug[r][col]) {
                    let factor = aug[r][col].clone();
                    for j in col..5 {
                        aug[r][j] = aug[r][j].sub(&factor.mul(&aug[col][j]));
                    }
                }
            }
        }
        Ok(Self::new(std::array::from_fn(|i| aug[i][4].clone())))
    }
}

impl NfEmbed for NumberFieldElement {
    fn to_nf(&self) -> NumberFieldElement {
        self.clone()
    }
}

impl fmt::Display for NumberFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = ["", "*u", "*v", "*u*v"];
        let mut first = true;
        for (c, n) in self.coords.iter().zip(names) {
            if Ring::is_zero(c) {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "{c}{n}")?;
            first = false;
        }
        if first {
            write!(f, "0/1")?;
        }
        Ok(())
    }
}

impl fmt::Debug for NumberFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
