//! Sparse multivariate Laurent polynomials over an exact coefficient ring.
//!
//! Terms are keyed by integer exponent vectors (negative exponents allowed)
//! in a `BTreeMap`, so iteration order is lexicographic and serialization is
//! deterministic. No zero coefficient is ever stored.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{Field, Ring};

pub type Exponents = Vec<i32>;

#[derive(Clone)]
pub struct LaurentPoly<C> {
    vars: Arc<Vec<String>>,
    terms: BTreeMap<Exponents, C>,
}

impl<C: Ring> LaurentPoly<C> {
    pub fn vars(n: &[&str]) -> Arc<Vec<String>> {
        Arc::new(n.iter().map(|s| s.to_string()).collect())
    }

    pub fn zero_in(vars: &Arc<Vec<String>>) -> Self {
        LaurentPoly {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant_in(vars: &Arc<Vec<String>>, c: C) -> Self {
        let mut p = Self::zero_in(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; vars.len()], c);
        }
        p
    }

    pub fn one_in(vars: &Arc<Vec<String>>) -> Self {
        Self::constant_in(vars, C::one())
    }

    /// The monomial c·Πᵢ varᵢ^{exps[i]}.
    pub fn monomial(vars: &Arc<Vec<String>>, exps: &[i32], c: C) -> Self {
        assert_eq!(exps.len(), vars.len(), "exponent vector length mismatch");
        let mut p = Self::zero_in(vars);
        if !c.is_zero() {
            p.terms.insert(exps.to_vec(), c);
        }
        p
    }

    /// The variable with the given index, to the first power.
    pub fn var(vars: &Arc<Vec<String>>, idx: usize) -> Self {
        let mut exps = vec![0; vars.len()];
        exps[idx] = 1;
        Self::monomial(vars, &exps, C::one())
    }

    pub fn from_terms<I>(vars: &Arc<Vec<String>>, terms: I) -> Self
    where
        I: IntoIterator<Item = (Exponents, C)>,
    {
        let mut p = Self::zero_in(vars);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn var_names(&self) -> &Arc<Vec<String>> {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &C)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The constant value if every stored exponent vector is zero.
    pub fn as_constant(&self) -> Option<C> {
        match self.terms.len() {
            0 => Some(C::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                if e.iter().all(|&x| x == 0) {
                    Some(c.clone())
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    pub fn coeff(&self, exps: &[i32]) -> C {
        self.terms.get(exps).cloned().unwrap_or_else(C::zero)
    }

    /// Min and max exponent of the given variable over all terms.
    pub fn exponent_range(&self, var_idx: usize) -> Option<(i32, i32)> {
        self.terms
            .keys()
            .map(|e| e[var_idx])
            .fold(None, |acc, x| match acc {
                None => Some((x, x)),
                Some((lo, hi)) => Some((lo.min(x), hi.max(x))),
            })
    }

    fn add_term(&mut self, exps: Exponents, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().add(&c);
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// Reinterprets a constant polynomial in another variable context.
    fn promote(&self, vars: &Arc<Vec<String>>) -> Self {
        let c = self
            .as_constant()
            .expect("cannot mix distinct variable contexts");
        Self::constant_in(vars, c)
    }

    fn unified<'a>(a: &'a Self, b: &'a Self) -> (Self, Self) {
        if a.vars == b.vars {
            (a.clone(), b.clone())
        } else if a.as_constant().is_some() {
            (a.promote(&b.vars), b.clone())
        } else {
            (a.clone(), b.promote(&a.vars))
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero_in(&self.vars);
        }
        let mut out = Self::zero_in(&self.vars);
        for (e, a) in &self.terms {
            out.add_term(e.clone(), a.mul(c));
        }
        out
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one_in(&self.vars);
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    /// Largest term in lexicographic exponent order.
    fn leading(&self) -> Option<(&Exponents, &C)> {
        self.terms.iter().next_back()
    }

    /// Per-variable minimum exponent; the monomial content of the poly.
    fn content_exps(&self) -> Exponents {
        let n = self.vars.len();
        let mut m = vec![i32::MAX; n];
        for e in self.terms.keys() {
            for i in 0..n {
                m[i] = m[i].min(e[i]);
            }
        }
        m
    }

    /// Shift all exponents by `-shift`.
    fn shifted(&self, shift: &[i32]) -> Self {
        let mut out = Self::zero_in(&self.vars);
        for (e, c) in &self.terms {
            let ne = e.iter().zip(shift).map(|(a, b)| a - b).collect();
            out.terms.insert(ne, c.clone());
        }
        out
    }
}

impl<C: Field> LaurentPoly<C> {
    /// Exact division; `None` when `self` is not a multiple of `rhs`.
    ///
    /// Both operands are first stripped of their monomial content (every
    /// monomial is a unit in the Laurent ring), after which ordinary
    /// multivariate leading-term division applies. The per-variable minimum
    /// exponent is additive under multiplication, so an exact quotient of
    /// the stripped parts has no negative exponents and the loop terminates.
    pub fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero_in(&self.vars));
        }
        let (a, b) = Self::unified(self, rhs);
        let ca = a.content_exps();
        let cb = b.content_exps();
        let mut rem = a.shifted(&ca);
        let b0 = b.shifted(&cb);
        let (lead_b, lead_bc) = {
            let (e, c) = b0.leading().unwrap();
            (e.clone(), c.clone())
        };
        let shift: Exponents = ca.iter().zip(&cb).map(|(x, y)| x - y).collect();
        let mut quot = Self::zero_in(&a.vars);
        while !rem.is_zero() {
            let (lead_r, lead_rc) = {
                let (e, c) = rem.leading().unwrap();
                (e.clone(), c.clone())
            };
            let mut qe = Vec::with_capacity(lead_r.len());
            for (x, y) in lead_r.iter().zip(&lead_b) {
                let d = x - y;
                if d < 0 {
                    return None;
                }
                qe.push(d);
            }
            let qc = lead_rc.div(&lead_bc).ok()?;
            let qterm = Self::monomial(&a.vars, &qe, qc);
            rem = rem.sub(&qterm.mul(&b0));
            quot = quot.add(&qterm);
        }
        Some(quot.shifted(&shift.iter().map(|x| -x).collect::<Vec<_>>()))
    }
}

impl<C: Ring> Ring for LaurentPoly<C> {
    fn zero() -> Self {
        LaurentPoly {
            vars: Arc::new(Vec::new()),
            terms: BTreeMap::new(),
        }
    }

    fn one() -> Self {
        Self::constant_in(&Arc::new(Vec::new()), C::one())
    }

    fn add(&self, rhs: &Self) -> Self {
        let (mut a, b) = Self::unified(self, rhs);
        for (e, c) in b.terms {
            a.add_term(e, c);
        }
        a
    }

    fn neg(&self) -> Self {
        let mut out = Self::zero_in(&self.vars);
        for (e, c) in &self.terms {
            out.terms.insert(e.clone(), c.neg());
        }
        out
    }

    fn mul(&self, rhs: &Self) -> Self {
        let (a, b) = Self::unified(self, rhs);
        let mut out = Self::zero_in(&a.vars);
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let e: Exponents = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca.mul(cb));
            }
        }
        out
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<C: Ring> PartialEq for LaurentPoly<C> {
    fn eq(&self, other: &Self) -> bool {
        if self.vars == other.vars {
            return self.terms == other.terms;
        }
        match (self.as_constant(), other.as_constant()) {
            (Some(a), Some(b)) => a == b,
            _ => false,
        }
    }
}

impl<C: Ring + fmt::Display> fmt::Display for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            for (i, &x) in e.iter().enumerate() {
                if x != 0 {
                    write!(f, "*{}^{}", self.vars[i], x)?;
                }
            }
            first = false;
        }
        Ok(())
    }
}

impl<C: Ring> fmt::Debug for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly{:?}{:?}", self.vars, self.terms)
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr<C> {
    exponents: Vec<i32>,
    coeff: C,
}

#[derive(Serialize, Deserialize)]
struct PolyRepr<C> {
    vars: Vec<String>,
    terms: Vec<TermRepr<C>>,
}

impl<C: Ring + Serialize> Serialize for LaurentPoly<C> {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        let repr = PolyRepr {
            vars: (*self.vars).clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| TermRepr {
                    exponents: e.clone(),
                    coeff: c.clone(),
                })
                .collect(),
        };
        repr.serialize(serializer)
    }
}

impl<'de, C: Ring + Deserialize<'de>> Deserialize<'de> for LaurentPoly<C> {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as DeError;
        let repr = PolyRepr::<C>::deserialize(deserializer)?;
        let vars = Arc::new(repr.vars);
        let mut p = LaurentPoly::zero_in(&vars);
        for t in repr.terms {
            if t.exponents.len() != vars.len() {
                return Err(D::Error::custom("exponent vector length mismatch"));
            }
            p.add_term(t.exponents, t.coeff);
        }
        Ok(p)
    }
}

/// Parses a restricted textual form used in tests and the CLI: terms like
/// `3/2 x^2 y^-1` joined by `+`/`-`, coefficients rational.
impl LaurentPoly<super::Rational> {
    pub fn parse(vars: &Arc<Vec<String>>, text: &str) -> Result<Self> {
        let mut out = Self::zero_in(vars);
        let mut rest = text.trim();
        let mut sign = 1i64;
        if let Some(r) = rest.strip_prefix('-') {
            sign = -1;
            rest = r.trim_start();
        }
        while !rest.is_empty() {
            let end = rest
                .find(['+', '-'])
                .filter(|&i| {
                    // don't split inside an exponent like y^-1
                    !rest[..i].ends_with('^')
                })
                .unwrap_or(rest.len());
            let (term, tail) = rest.split_at(end);
            let mut coeff = super::Rational::from_int(sign);
            let mut exps = vec![0i32; vars.len()];
            for tok in term.split_whitespace() {
                let (name, e) = match tok.split_once('^') {
                    Some((n, e)) => (
                        n,
                        e.parse::<i32>()
                            .map_err(|_| Error::BadParams(format!("bad exponent in `{tok}`")))?,
                    ),
                    None => (tok, 1),
                };
                if let Some(idx) = vars.iter().position(|v| v == name) {
                    exps[idx] += e;
                } else {
                    let r: super::Rational = tok.parse()?;
                    coeff = coeff.mul(&r);
                }
            }
            out.add_term(exps, coeff);
            rest = tail;
            if let Some(r) = rest.strip_prefix('+') {
                sign = 1;
                rest = r.trim_start();
            } else if let Some(r) = rest.strip_prefix('-') {
                sign = -1;
                rest = r.trim_start();
            }
        }
        Ok(out)
    }
}
