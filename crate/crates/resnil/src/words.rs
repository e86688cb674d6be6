//! Words over indexed generators with exponents ±1, shared by every group
//! module. Tokens parse as `s1`, `s2^-1`, `tau^3`; an exponent `^k` expands
//! to |k| letters of the appropriate sign.

use std::fmt;

use crate::error::{Error, Result};

/// Generator index (0-based) and sign.
pub type Letter = (usize, i8);

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn empty() -> Self {
        Word::default()
    }

    pub fn new(letters: Vec<Letter>) -> Self {
        debug_assert!(letters.iter().all(|&(_, e)| e == 1 || e == -1));
        Word { letters }
    }

    pub fn generator(idx: usize) -> Self {
        Word {
            letters: vec![(idx, 1)],
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn push(&mut self, idx: usize, sign: i8) {
        debug_assert!(sign == 1 || sign == -1);
        self.letters.push((idx, sign));
    }

    pub fn concat(&self, rhs: &Self) -> Self {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&rhs.letters);
        Word { letters }
    }

    pub fn inverse(&self) -> Self {
        Word {
            letters: self.letters.iter().rev().map(|&(i, e)| (i, -e)).collect(),
        }
    }

    pub fn pow(&self, exp: i64) -> Self {
        let base = if exp < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::empty();
        for _ in 0..exp.unsigned_abs() {
            out = out.concat(&base);
        }
        out
    }

    pub fn conjugate_by(&self, g: &Word) -> Self {
        g.concat(self).concat(&g.inverse())
    }

    /// Sum of exponents (image in the abelianization when all generators
    /// are identified).
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&(_, e)| e as i64).sum()
    }

    /// Removes adjacent inverse pairs until none remain.
    pub fn free_reduced(&self) -> Self {
        let mut stack: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &(i, e) in &self.letters {
            match stack.last() {
                Some(&(j, f)) if j == i && f == -e => {
                    stack.pop();
                }
                _ => stack.push((i, e)),
            }
        }
        Word { letters: stack }
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.letters.iter().map(|&(i, _)| i).max()
    }

    /// Parses whitespace-separated tokens, resolving generator names via
    /// the supplied lookup.
    pub fn parse(text: &str, resolve: impl Fn(&str) -> Option<usize>) -> Result<Self> {
        let mut letters = Vec::new();
        for tok in text.split_whitespace() {
            let (name, exp) = match tok.split_once('^') {
                Some((n, e)) => {
                    let exp: i64 = e
                        .parse()
                        .map_err(|_| Error::BadWord(format!("bad exponent in `{tok}`")))?;
                    (n, exp)
                }
                None => (tok, 1),
            };
            let idx = resolve(name)
                .ok_or_else(|| Error::BadWord(format!("unknown generator `{name}`")))?;
            let sign: i8 = if exp < 0 { -1 } else { 1 };
            for _ in 0..exp.unsigned_abs() {
                letters.push((idx, sign));
            }
        }
        Ok(Word { letters })
    }

    /// Parses `s1 s2^-1 ...` with 1-based generator numbering.
    pub fn parse_sigma(text: &str) -> Result<Self> {
        Word::parse(text, |name| {
            name.strip_prefix('s')
                .and_then(|n| n.parse::<usize>().ok())
                .filter(|&n| n >= 1)
                .map(|n| n - 1)
        })
    }

    /// Renders with a naming function, `name^-1` for inverse letters.
    pub fn display_with(&self, name: impl Fn(usize) -> String) -> String {
        self.letters
            .iter()
            .map(|&(i, e)| {
                if e == 1 {
                    name(i)
                } else {
                    format!("{}^-1", name(i))
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn display_sigma(&self) -> String {
        self.display_with(|i| format!("s{}", i + 1))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{}\"", self.display_sigma())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_sigma_words() {
        let w = Word::parse_sigma("s1 s2^-1 s1^2").unwrap();
        assert_eq!(w.letters(), &[(0, 1), (1, -1), (0, 1), (0, 1)]);
        assert_eq!(w.exponent_sum(), 2);
        assert!(Word::parse_sigma("s0").is_err());
        assert!(Word::parse_sigma("t1").is_err());
    }

    #[test]
    fn free_reduction() {
        let w = Word::parse_sigma("s1 s2 s2^-1 s1").unwrap();
        assert_eq!(w.free_reduced(), Word::parse_sigma("s1 s1").unwrap());
        let v = Word::parse_sigma("s1 s1^-1").unwrap();
        assert!(v.free_reduced().is_empty());
    }

    #[test]
    fn inverse_and_conjugate() {
        let w = Word::parse_sigma("s1 s2").unwrap();
        assert_eq!(w.inverse(), Word::parse_sigma("s2^-1 s1^-1").unwrap());
        let c = Word::generator(2).conjugate_by(&w);
        assert_eq!(c, Word::parse_sigma("s1 s2 s3 s2^-1 s1^-1").unwrap());
        assert_eq!(w.concat(&w.inverse()).free_reduced(), Word::empty());
    }
}
