use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::ser::{Serialize, SerializeSeq, Serializer};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Laurent polynomial in s, t with integer coefficients. Zero coefficients are never stored.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BivariatePoly {
    terms: BTreeMap<(i64, i64), BigInt>,
}

impl BivariatePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, 1)
    }

    pub fn s() -> Self {
        Self::monomial(1, 0, 1)
    }

    pub fn t() -> Self {
        Self::monomial(0, 1, 1)
    }

    pub fn monomial(i: i64, j: i64, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(i, j, c.into());
        p
    }

    /// 1 − c·s^i t^j.
    pub fn one_minus(i: i64, j: i64) -> Self {
        &Self::one() - &Self::monomial(i, j, 1)
    }

    pub fn add_term(&mut self, i: i64, j: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry((i, j)).or_insert_with(BigInt::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn coeff(&self, i: i64, j: i64) -> BigInt {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i64, i64), &BigInt)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Value at s = t = 1.
    pub fn eval_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn all_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    pub fn has_nonnegative_exponents(&self) -> bool {
        self.terms.keys().all(|&(i, j)| i >= 0 && j >= 0)
    }

    /// p(t, s).
    pub fn swap(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(&(i, j), c)| ((j, i), c.clone()))
            .collect();
        BivariatePoly { terms }
    }

    /// p(1/s, 1/t).
    pub fn invert(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(&(i, j), c)| ((-i, -j), c.clone()))
            .collect();
        BivariatePoly { terms }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let terms = self.terms.iter().map(|(&k, v)| (k, v * c)).collect();
        BivariatePoly { terms }
    }

    /// Multiply by s^i t^j.
    pub fn shift(&self, i: i64, j: i64) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(&(a, b), c)| ((a + i, b + j), c.clone()))
            .collect();
        BivariatePoly { terms }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn product<'a>(factors: impl IntoIterator<Item = &'a BivariatePoly>) -> Self {
        factors.into_iter().fold(Self::one(), |acc, f| &acc * f)
    }

    /// Coefficients as sorted (i, j, c) triples.
    pub fn to_triples(&self) -> Vec<(i64, i64, String)> {
        self.terms
            .iter()
            .map(|(&(i, j), c)| (i, j, c.to_string()))
            .collect()
    }
}

impl Add for &BivariatePoly {
    type Output = BivariatePoly;
    fn add(self, rhs: &BivariatePoly) -> BivariatePoly {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }
}

impl Sub for &BivariatePoly {
    type Output = BivariatePoly;
    fn sub(self, rhs: &BivariatePoly) -> BivariatePoly {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, -c.clone());
        }
        out
    }
}

impl Neg for &BivariatePoly {
    type Output = BivariatePoly;
    fn neg(self) -> BivariatePoly {
        let terms = self.terms.iter().map(|(&k, c)| (k, -c.clone())).collect();
        BivariatePoly { terms }
    }
}

impl Mul for &BivariatePoly {
    type Output = BivariatePoly;
    fn mul(self, rhs: &BivariatePoly) -> BivariatePoly {
        let mut out = BivariatePoly::zero();
        for (&(a, b), c) in &self.terms {
            for (&(x, y), d) in &rhs.terms {
                out.add_term(a + x, b + y, c * d);
            }
        }
        out
    }
}

impl Serialize for BivariatePoly {
    /// Sorted list of [i, j, "c"] triples.
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (&(i, j), c) in &self.terms {
            seq.serialize_element(&(i, j, c.to_string()))?;
        }
        seq.end()
    }
}

impl fmt::Display for BivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(i, j), c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let mut parts = Vec::new();
            if !mag.is_one() || (i == 0 && j == 0) {
                parts.push(mag.to_string());
            }
            for (var, e) in [("s", i), ("t", j)] {
                match e {
                    0 => {}
                    1 => parts.push(var.to_string()),
                    _ => parts.push(format!("{var}^{e}")),
                }
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for BivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn laurent_arithmetic() {
        let s = BivariatePoly::s();
        let inv = s.invert();
        assert_eq!(&s * &inv, BivariatePoly::one());
        let p = &BivariatePoly::one_minus(1, 0) * &BivariatePoly::one_minus(0, 1);
        assert_eq!(p.eval_one(), BigInt::zero());
        assert_eq!(p.to_string(), "s*t - s - t + 1");
        assert_eq!((&p - &p).len(), 0);
    }

    #[test]
    fn swap_exchanges_variables() {
        let p = BivariatePoly::monomial(2, -1, 3);
        assert_eq!(p.swap(), BivariatePoly::monomial(-1, 2, 3));
    }
}
