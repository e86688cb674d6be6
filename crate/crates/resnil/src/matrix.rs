//! Dense square matrices over an exact ring, plus inversion and determinants
//! over Laurent polynomial rings via fraction-field elimination.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{Field, LaurentPoly, Ring};

#[derive(Clone, PartialEq)]
pub struct SquareMatrix<T> {
    dim: usize,
    entries: Vec<T>,
}

impl<T: Ring> SquareMatrix<T> {
    pub fn zero(dim: usize) -> Self {
        SquareMatrix {
            dim,
            entries: vec![T::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m.set(i, i, T::one());
        }
        m
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                entries.push(f(i, j));
            }
        }
        SquareMatrix { dim, entries }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::BadParams("matrix is not square".into()));
        }
        Ok(SquareMatrix {
            dim,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.entries[i * self.dim + j] = v;
    }

    pub fn update(&mut self, i: usize, j: usize, f: impl FnOnce(&T) -> T) {
        let v = f(self.get(i, j));
        self.set(i, j, v);
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim, rhs.dim, "matrix dimension mismatch");
        let n = self.dim;
        let mut out = Self::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    out.update(i, j, |acc| acc.add(&a.mul(b)));
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim, rhs.dim, "matrix dimension mismatch");
        Self {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim, rhs.dim, "matrix dimension mismatch");
        Self {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::identity(self.dim);
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.dim)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Ring::is_zero)
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> SquareMatrix<U> {
        SquareMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn try_map<U>(&self, mut f: impl FnMut(&T) -> Result<U>) -> Result<SquareMatrix<U>> {
        let mut entries = Vec::with_capacity(self.entries.len());
        for e in &self.entries {
            entries.push(f(e)?);
        }
        Ok(SquareMatrix {
            dim: self.dim,
            entries,
        })
    }

    pub fn rows(&self) -> Vec<Vec<T>> {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.get(i, j).clone()).collect())
            .collect()
    }
}

impl<T: fmt::Debug> fmt::Debug for SquareMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.dim {
            write!(f, "  ")?;
            for j in 0..self.dim {
                write!(f, "{:?}, ", self.entries[i * self.dim + j])?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixRepr<T> {
    dim: usize,
    entries: Vec<Vec<T>>,
}

impl<T: Ring + Serialize> Serialize for SquareMatrix<T> {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        MatrixRepr {
            dim: self.dim,
            entries: self.rows(),
        }
        .serialize(serializer)
    }
}

impl<'de, T: Ring + Deserialize<'de>> Deserialize<'de> for SquareMatrix<T> {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as DeError;
        let repr = MatrixRepr::<T>::deserialize(deserializer)?;
        if repr.entries.len() != repr.dim || repr.entries.iter().any(|r| r.len() != repr.dim) {
            return Err(D::Error::custom("matrix entries do not match dimension"));
        }
        Ok(SquareMatrix {
            dim: repr.dim,
            entries: repr.entries.into_iter().flatten().collect(),
        })
    }
}

/// A quotient of Laurent polynomials, normalized eagerly: a zero numerator,
/// a monomial denominator (every monomial is a unit of the Laurent ring),
/// or an exact polynomial quotient all collapse the denominator to 1.
#[derive(Clone, Debug)]
struct Frac<C: Field> {
    num: LaurentPoly<C>,
    den: LaurentPoly<C>,
}

impl<C: Field> Frac<C> {
    fn from_poly(p: LaurentPoly<C>) -> Self {
        Frac {
            num: p,
            den: Ring::one(),
        }
        .normalized()
    }

    fn zero() -> Self {
        Self::from_poly(Ring::zero())
    }

    fn normalized(mut self) -> Self {
        if self.num.is_zero() {
            self.den = Ring::one();
            return self;
        }
        if self.den.is_one() {
            return self;
        }
        if let Some(q) = self.num.exact_div(&self.den) {
            self.num = q;
            self.den = Ring::one();
        }
        self
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn add(&self, rhs: &Self) -> Self {
        Frac {
            num: self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            den: self.den.mul(&rhs.den),
        }
        .normalized()
    }

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    fn neg(&self) -> Self {
        Frac {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    fn mul(&self, rhs: &Self) -> Self {
        Frac {
            num: self.num.mul(&rhs.num),
            den: self.den.mul(&rhs.den),
        }
        .normalized()
    }

    fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::NotInvertible);
        }
        Ok(Frac {
            num: self.den.clone(),
            den: self.num.clone(),
        }
        .normalized())
    }

    fn into_laurent(self) -> Result<LaurentPoly<C>> {
        let n = self.normalized();
        if n.den.is_one() {
            Ok(n.num)
        } else {
            n.num.exact_div(&n.den).ok_or(Error::NotLaurent)
        }
    }
}

/// Inverse of a matrix over a Laurent polynomial ring by Gauss–Jordan
/// elimination over the fraction field. Every entry of the result must lie
/// back in the Laurent ring (the generator matrices this is used on have
/// unit-monomial determinants); a non-Laurent entry is reported as a bug.
pub fn laurent_inverse<C: Field>(
    m: &SquareMatrix<LaurentPoly<C>>,
) -> Result<SquareMatrix<LaurentPoly<C>>> {
    let n = m.dim();
    let mut left: Vec<Vec<Frac<C>>> = (0..n)
        .map(|i| (0..n).map(|j| Frac::from_poly(m.get(i, j).clone())).collect())
        .collect();
    let mut right: Vec<Vec<Frac<C>>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        Frac::from_poly(Ring::one())
                    } else {
                        Frac::zero()
                    }
                })
                .collect()
        })
        .collect();

    for col in 0..n {
        // prefer a single-term pivot: its inverse is again a monomial
        let pivot = (col..n)
            .filter(|&r| !left[r][col].is_zero())
            .min_by_key(|&r| {
                let f = &left[r][col];
                f.num.num_terms() + f.den.num_terms()
            })
            .ok_or(Error::NotInvertible)?;
        left.swap(col, pivot);
        right.swap(col, pivot);

        let inv = left[col][col].inv()?;
        for j in 0..n {
            left[col][j] = left[col][j].mul(&inv);
            right[col][j] = right[col][j].mul(&inv);
        }
        for r in 0..n {
            if r == col || left[r][col].is_zero() {
                continue;
            }
            let factor = left[r][col].clone();
            for j in 0..n {
                let l = left[col][j].mul(&factor);
                left[r][j] = left[r][j].sub(&l);
                let rr = right[col][j].mul(&factor);
                right[r][j] = right[r][j].sub(&rr);
            }
        }
    }

    let mut out = SquareMatrix::zero(n);
    for (i, row) in right.into_iter().enumerate() {
        for (j, f) in row.into_iter().enumerate() {
            out.set(i, j, f.into_laurent()?);
        }
    }
    debug_assert!(m.mul(&out).is_identity());
    Ok(out)
}

/// Determinant over a Laurent polynomial ring (product of elimination
/// pivots, with sign). The value of a Laurent matrix determinant is itself
/// Laurent, so the final fraction always simplifies.
pub fn laurent_det<C: Field>(m: &SquareMatrix<LaurentPoly<C>>) -> Result<LaurentPoly<C>> {
    let n = m.dim();
    let mut a: Vec<Vec<Frac<C>>> = (0..n)
        .map(|i| (0..n).map(|j| Frac::from_poly(m.get(i, j).clone())).collect())
        .collect();
    let mut det = Frac::from_poly(Ring::one());
    for col in 0..n {
        let pivot = match (col..n).find(|&r| !a[r][col].is_zero()) {
            Some(p) => p,
            None => return Ok(Ring::zero()),
        };
        if pivot != col {
            a.swap(col, pivot);
            det = det.neg();
        }
        det = det.mul(&a[col][col]);
        let inv = a[col][col].inv()?;
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].mul(&inv);
            for j in col..n {
                let s = a[col][j].mul(&factor);
                a[r][j] = a[r][j].sub(&s);
            }
        }
    }
    det.into_laurent()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Rational;

    type P = LaurentPoly<Rational>;

    #[test]
    fn integer_matrix_product() {
        let a = SquareMatrix::from_rows(vec![vec![1i64, 2], vec![3, 4]]).unwrap();
        let b = SquareMatrix::from_rows(vec![vec![0i64, 1], vec![1, 0]]).unwrap();
        let ab = a.mul(&b);
        assert_eq!(ab, SquareMatrix::from_rows(vec![vec![2, 1], vec![4, 3]]).unwrap());
        assert!(SquareMatrix::<i64>::identity(3).is_identity());
    }

    #[test]
    fn laurent_inverse_of_block() {
        // [[0, 1], [y, 1−y]] has determinant −y, a unit of the Laurent ring.
        let vars = P::vars(&["x", "y"]);
        let y = P::var(&vars, 1);
        let m = SquareMatrix::from_rows(vec![
            vec![P::zero_in(&vars), P::one_in(&vars)],
            vec![y.clone(), P::one_in(&vars).sub(&y)],
        ])
        .unwrap();
        let inv = laurent_inverse(&m).unwrap();
        assert!(m.mul(&inv).is_identity());
        assert!(inv.mul(&m).is_identity());

        let det = laurent_det(&m).unwrap();
        assert_eq!(det, y.neg());
    }

    #[test]
    fn singular_matrix_rejected() {
        let vars = P::vars(&["x", "y"]);
        let x = P::var(&vars, 0);
        let m = SquareMatrix::from_rows(vec![
            vec![x.clone(), x.clone()],
            vec![x.clone(), x.clone()],
        ])
        .unwrap();
        assert!(laurent_inverse(&m).is_err());
        assert!(laurent_det(&m).unwrap().is_zero());
    }
}
