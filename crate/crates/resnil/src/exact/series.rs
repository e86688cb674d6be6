//! Truncated formal power series in `h` over ℚ(√2, ζ₃), exact modulo h^order,
//! with exponential specialization and substitution of series for Laurent
//! variables.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::{LaurentPoly, NfEmbed, NumberFieldElement, Rational, Ring};

/// A power series truncated at h^order: `coeffs[k]` is the coefficient of h^k.
#[derive(Clone, PartialEq)]
pub struct TruncSeries {
    coeffs: Vec<NumberFieldElement>,
}

impl TruncSeries {
    pub fn zero(order: usize) -> Result<Self> {
        if order < 1 {
            return Err(Error::BadOrder);
        }
        Ok(TruncSeries {
            coeffs: vec![NumberFieldElement::zero(); order],
        })
    }

    pub fn constant(c: NumberFieldElement, order: usize) -> Result<Self> {
        let mut s = Self::zero(order)?;
        s.coeffs[0] = c;
        Ok(s)
    }

    pub fn one(order: usize) -> Result<Self> {
        Self::constant(NumberFieldElement::one(), order)
    }

    pub fn from_coeffs(coeffs: Vec<NumberFieldElement>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::BadOrder);
        }
        Ok(TruncSeries { coeffs })
    }

    /// exp(c·h) = Σ_{k<order} c^k h^k / k!
    pub fn exp(c: &NumberFieldElement, order: usize) -> Result<Self> {
        let mut s = Self::one(order)?;
        let mut term = NumberFieldElement::one();
        for k in 1..order {
            term = term.mul(c).scale(&Rational::new(1, k as i64)?);
            s.coeffs[k] = term.clone();
        }
        Ok(s)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, k: usize) -> &NumberFieldElement {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[NumberFieldElement] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Ring::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Ring::is_zero)
    }

    fn check_order(&self, rhs: &Self) {
        assert_eq!(
            self.order(),
            rhs.order(),
            "truncation orders must match for series arithmetic"
        );
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.check_order(rhs);
        TruncSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.check_order(rhs);
        TruncSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        TruncSeries {
            coeffs: self.coeffs.iter().map(Ring::neg).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        self.check_order(rhs);
        let n = self.order();
        let mut coeffs = vec![NumberFieldElement::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if Ring::is_zero(a) {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n - i).enumerate() {
                if Ring::is_zero(b) {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        TruncSeries { coeffs }
    }

    pub fn scale(&self, c: &NumberFieldElement) -> Self {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect(),
        }
    }

    /// Multiplicative inverse; requires an invertible constant term.
    /// Coefficients are solved order by order from a·a⁻¹ = 1.
    pub fn inverse(&self) -> Result<Self> {
        use crate::exact::Field;
        let c0 = self.coeffs[0].inv().map_err(|_| Error::NonInvertibleSeries)?;
        let n = self.order();
        let mut out = vec![NumberFieldElement::zero(); n];
        out[0] = c0.clone();
        for m in 1..n {
            let mut acc = NumberFieldElement::zero();
            for j in 1..=m {
                acc = acc.add(&self.coeffs[j].mul(&out[m - j]));
            }
            out[m] = acc.neg().mul(&c0);
        }
        Ok(TruncSeries { coeffs: out })
    }

    pub fn pow(&self, exp: i64) -> Result<Self> {
        let mut base = if exp < 0 { self.inverse()? } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = Self::one(self.order())?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        Ok(acc)
    }

    /// Re-truncates to a smaller (or equal) order.
    pub fn truncated(&self, order: usize) -> Result<Self> {
        if order < 1 || order > self.order() {
            return Err(Error::BadOrder);
        }
        Ok(TruncSeries {
            coeffs: self.coeffs[..order].to_vec(),
        })
    }
}

impl fmt::Debug for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "[{c}]h^{k}")?;
        }
        write!(f, ")")
    }
}

#[derive(Serialize, Deserialize)]
struct SeriesRepr {
    order: usize,
    coeffs: Vec<NumberFieldElement>,
}

impl Serialize for TruncSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        SeriesRepr {
            order: self.order(),
            coeffs: self.coeffs.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TruncSeries {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = SeriesRepr::deserialize(deserializer)?;
        if repr.order != repr.coeffs.len() || repr.order < 1 {
            return Err(D::Error::custom("series order does not match coefficients"));
        }
        Ok(TruncSeries { coeffs: repr.coeffs })
    }
}

/// A variable-to-series assignment with a power cache, so that substituting
/// into many polynomials over the same variables (e.g. all entries of a
/// matrix) computes each power of each assigned series once.
pub struct Substitution {
    vars: Arc<Vec<String>>,
    series: Vec<TruncSeries>,
    order: usize,
    cache: Vec<HashMap<i32, TruncSeries>>,
}

impl Substitution {
    pub fn new(vars: &Arc<Vec<String>>, series: Vec<TruncSeries>) -> Result<Self> {
        if series.is_empty() || series.len() != vars.len() {
            return Err(Error::BadParams(
                "substitution needs one series per variable".into(),
            ));
        }
        let order = series[0].order();
        for s in &series {
            if s.order() != order {
                return Err(Error::OrderMismatch(order, s.order()));
            }
        }
        let cache = vec![HashMap::new(); series.len()];
        Ok(Substitution {
            vars: vars.clone(),
            series,
            order,
            cache,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    fn power(&mut self, var: usize, exp: i32) -> Result<TruncSeries> {
        if let Some(p) = self.cache[var].get(&exp) {
            return Ok(p.clone());
        }
        let p = if exp == 0 {
            TruncSeries::one(self.order)?
        } else if exp > 0 {
            let prev = self.power(var, exp - 1)?;
            prev.mul(&self.series[var])
        } else {
            let inv = match self.cache[var].get(&-1) {
                Some(i) => i.clone(),
                None => {
                    let i = self
                        .series[var]
                        .inverse()
                        .map_err(|_| Error::NonInvertibleSubstitution(self.vars[var].clone()))?;
                    self.cache[var].insert(-1, i.clone());
                    i
                }
            };
            if exp == -1 {
                inv
            } else {
                let prev = self.power(var, exp + 1)?;
                prev.mul(&inv)
            }
        };
        self.cache[var].insert(exp, p.clone());
        Ok(p)
    }

    /// Image of `p` under the substitution, truncated at the common order.
    pub fn apply<C: Ring + NfEmbed>(&mut self, p: &LaurentPoly<C>) -> Result<TruncSeries> {
        for name in p.var_names().iter() {
            if !self.vars.contains(name) {
                return Err(Error::UnassignedVariable(name.clone()));
            }
        }
        // map polynomial variable positions to substitution slots
        let slots: Vec<usize> = p
            .var_names()
            .iter()
            .map(|n| self.vars.iter().position(|v| v == n).unwrap())
            .collect();
        let mut acc = TruncSeries::zero(self.order)?;
        let terms: Vec<(Vec<i32>, NumberFieldElement)> = p
            .terms()
            .map(|(e, c)| (e.clone(), c.to_nf()))
            .collect();
        for (exps, coeff) in terms {
            let mut term = TruncSeries::constant(coeff, self.order)?;
            for (pos, &e) in exps.iter().enumerate() {
                if e != 0 {
                    term = term.mul(&self.power(slots[pos], e)?);
                }
            }
            acc = acc.add(&term);
        }
        Ok(acc)
    }
}

/// One-shot substitution; see [`Substitution`] for the cached form.
pub fn substitute<C: Ring + NfEmbed>(
    p: &LaurentPoly<C>,
    assign: &[(&str, TruncSeries)],
) -> Result<TruncSeries> {
    let vars = Arc::new(assign.iter().map(|(n, _)| n.to_string()).collect::<Vec<_>>());
    let series = assign.iter().map(|(_, s)| s.clone()).collect();
    Substitution::new(&vars, series)?.apply(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Rational;

    fn nf(n: i64) -> NumberFieldElement {
        NumberFieldElement::from_int(n)
    }

    #[test]
    fn exp_of_one() {
        // 1 + h + h²/2
        let s = TruncSeries::exp(&nf(1), 3).unwrap();
        assert_eq!(s.coeff(0), &nf(1));
        assert_eq!(s.coeff(1), &nf(1));
        assert_eq!(
            s.coeff(2),
            &NumberFieldElement::from_rational(Rational::new(1, 2).unwrap())
        );
    }

    #[test]
    fn exp_of_zero() {
        let s = TruncSeries::exp(&nf(0), 5).unwrap();
        assert!(s.is_one());
    }

    #[test]
    fn exp_of_sqrt2() {
        // 1 + u·h + h², since u²/2 = 1
        let u = NumberFieldElement::sqrt2();
        let s = TruncSeries::exp(&u, 3).unwrap();
        assert_eq!(s.coeff(0), &nf(1));
        assert_eq!(s.coeff(1), &u);
        assert_eq!(s.coeff(2), &nf(1));
    }

    #[test]
    fn exp_law() {
        // exp(a)·exp(b) = exp(a+b) for a, b in {1, u, v}
        let samples = [
            nf(1),
            NumberFieldElement::sqrt2(),
            NumberFieldElement::zeta3(),
        ];
        for a in &samples {
            for b in &samples {
                let lhs = TruncSeries::exp(a, 9)
                    .unwrap()
                    .mul(&TruncSeries::exp(b, 9).unwrap());
                let rhs = TruncSeries::exp(&a.add(b), 9).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn order_must_be_positive() {
        assert_eq!(TruncSeries::exp(&nf(1), 0), Err(Error::BadOrder));
    }

    #[test]
    fn inverse_round_trip() {
        let s = TruncSeries::exp(&NumberFieldElement::zeta3(), 8).unwrap();
        let inv = s.inverse().unwrap();
        assert!(s.mul(&inv).is_one());

        let mut no_const = TruncSeries::zero(4).unwrap();
        no_const = no_const.add(&{
            let mut h = TruncSeries::zero(4).unwrap();
            h.coeffs[1] = nf(1);
            h
        });
        assert_eq!(no_const.inverse(), Err(Error::NonInvertibleSeries));
    }

    #[test]
    fn substitute_basics() {
        let vars = LaurentPoly::<Rational>::vars(&["y"]);
        let y = LaurentPoly::<Rational>::var(&vars, 0);
        let e_h = TruncSeries::exp(&nf(1), 2).unwrap();

        // y ↦ 1 + h
        let img = substitute(&y, &[("y", e_h.clone())]).unwrap();
        assert_eq!(img.coeff(0), &nf(1));
        assert_eq!(img.coeff(1), &nf(1));

        // y − 1 ↦ h
        let ym1 = y.sub(&LaurentPoly::one_in(&vars));
        let img = substitute(&ym1, &[("y", e_h)]).unwrap();
        assert_eq!(img.coeff(0), &nf(0));
        assert_eq!(img.coeff(1), &nf(1));
    }

    #[test]
    fn substitute_krammer_diagonal_entry() {
        // t·q² with q ↦ (−ζ₃)e^h, t ↦ e^{√2 h}:
        //   (−v)² e^{2h} e^{uh} = v² e^{(2+u)h}
        // at order 2 this is (−1−v) + (−1−v)(2+u) h;
        // its cube is e^{(6+3u)h} = 1 + (6+3√2) h.
        let vars = LaurentPoly::<Rational>::vars(&["q", "t"]);
        let q = LaurentPoly::<Rational>::var(&vars, 0);
        let t = LaurentPoly::<Rational>::var(&vars, 1);
        let tq2 = t.mul(&q.pow(2));

        let u = NumberFieldElement::sqrt2();
        let v = NumberFieldElement::zeta3();
        let q_series = TruncSeries::exp(&nf(1), 2).unwrap().scale(&v.neg());
        let t_series = TruncSeries::exp(&u, 2).unwrap();
        let assign = [("q", q_series), ("t", t_series)];

        let img = substitute(&tq2, &assign).unwrap();
        let v2 = v.mul(&v);
        assert_eq!(img.coeff(0), &v2);
        assert_eq!(img.coeff(1), &v2.mul(&nf(2).add(&u)));

        let img3 = substitute(&tq2.pow(3), &assign).unwrap();
        assert_eq!(img3.coeff(0), &nf(1));
        assert_eq!(img3.coeff(1), &nf(6).add(&u.scale(&Rational::from_int(3))));
    }

    #[test]
    fn negative_exponent_requires_invertible_series() {
        let vars = LaurentPoly::<Rational>::vars(&["y"]);
        let y_inv = LaurentPoly::<Rational>::monomial(&vars, &[-1], Rational::one());
        let mut h = TruncSeries::zero(3).unwrap();
        h.coeffs[1] = nf(1);
        assert_eq!(
            substitute(&y_inv, &[("y", h)]),
            Err(Error::NonInvertibleSubstitution("y".into()))
        );
    }

    #[test]
    fn json_round_trip() {
        let s = TruncSeries::exp(&NumberFieldElement::sqrt2(), 4).unwrap();
        let js = serde_json::to_string(&s).unwrap();
        let back: TruncSeries = serde_json::from_str(&js).unwrap();
        assert_eq!(s, back);
    }
}
