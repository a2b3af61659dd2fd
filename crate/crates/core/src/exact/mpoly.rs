use super::Rational;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::ser::{Serialize, SerializeSeq, Serializer};
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

/// Polynomial with rational coefficients in a fixed number of variables.
/// Exponent vectors are non-negative; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultivariatePoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl MultivariatePoly {
    pub fn zero(nvars: usize) -> Self {
        MultivariatePoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::monomial(vec![0; nvars], c)
    }

    pub fn var(nvars: usize, k: usize) -> Self {
        let mut e = vec![0; nvars];
        e[k] = 1;
        Self::monomial(e, Rational::one())
    }

    pub fn monomial(exps: Vec<u32>, c: Rational) -> Self {
        let mut p = Self::zero(exps.len());
        p.add_term(exps, c);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: Rational) {
        assert_eq!(exps.len(), self.nvars, "exponent length");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Set of (degree in vars[..split], degree in vars[split..]) over all terms.
    pub fn bidegrees(&self, split: usize) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = self
            .terms
            .keys()
            .map(|e| (e[..split].iter().sum(), e[split..].iter().sum()))
            .collect();
        out.sort();
        out.dedup();
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        let terms = self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect();
        MultivariatePoly {
            nvars: self.nvars,
            terms,
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::constant(self.nvars, Rational::one()), |acc, _| {
            &acc * self
        })
    }

    /// Renames variable i to variable perm[i].
    pub fn permute_vars(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.nvars);
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut f = vec![0; self.nvars];
            for (i, &k) in e.iter().enumerate() {
                f[perm[i]] = k;
            }
            out.add_term(f, c.clone());
        }
        out
    }

    /// ∂^β applied to self, for a multi-index β.
    pub fn derivative(&self, beta: &[u32]) -> Self {
        let mut out = Self::zero(self.nvars);
        'terms: for (e, c) in &self.terms {
            let mut f = e.clone();
            let mut mult = BigInt::one();
            for (k, &b) in beta.iter().enumerate() {
                if e[k] < b {
                    continue 'terms;
                }
                for m in 0..b {
                    mult *= BigInt::from(e[k] - m);
                }
                f[k] = e[k] - b;
            }
            out.add_term(f, c * Rational::from_integer(mult));
        }
        out
    }

    /// op(∂) applied to self: each variable of op is replaced by the partial derivative in it.
    pub fn apply_diff_operator(&self, op: &MultivariatePoly) -> Self {
        assert_eq!(op.nvars, self.nvars, "variable count mismatch");
        let mut out = Self::zero(self.nvars);
        for (beta, c) in &op.terms {
            out = &out + &self.derivative(beta).scale(c);
        }
        out
    }

    /// Nonzero scalar c with self = c·other, if one exists.
    pub fn ratio_to(&self, other: &MultivariatePoly) -> Option<Rational> {
        if self.terms.len() != other.terms.len() || other.is_zero() {
            return None;
        }
        let (e0, c0) = other.terms.iter().next()?;
        let r = self.terms.get(e0)? / c0;
        (other.scale(&r) == *self).then_some(r)
    }
}

impl Add for &MultivariatePoly {
    type Output = MultivariatePoly;
    fn add(self, rhs: &MultivariatePoly) -> MultivariatePoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultivariatePoly {
    type Output = MultivariatePoly;
    fn sub(self, rhs: &MultivariatePoly) -> MultivariatePoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &MultivariatePoly {
    type Output = MultivariatePoly;
    fn neg(self) -> MultivariatePoly {
        self.scale(&-Rational::one())
    }
}

impl Mul for &MultivariatePoly {
    type Output = MultivariatePoly;
    fn mul(self, rhs: &MultivariatePoly) -> MultivariatePoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = MultivariatePoly::zero(self.nvars);
        for (a, c) in &self.terms {
            for (b, d) in &rhs.terms {
                let e = a.iter().zip(b).map(|(x, y)| x + y).collect();
                out.add_term(e, c * d);
            }
        }
        out
    }
}

impl Serialize for MultivariatePoly {
    /// Sorted list of [exponents, "numerator", "denominator"] triples.
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            seq.serialize_element(&(e, c.numer().to_string(), c.denom().to_string()))?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::q;

    #[test]
    fn single_derivative() {
        let u1 = MultivariatePoly::var(2, 0);
        let p = u1.pow(2);
        assert_eq!(p.apply_diff_operator(&u1), u1.scale(&q(2)));
    }

    #[test]
    fn mixed_derivative_to_constant() {
        let u1 = MultivariatePoly::var(2, 0);
        let v1 = MultivariatePoly::var(2, 1);
        let p = &u1 * &v1;
        assert_eq!(
            p.apply_diff_operator(&p),
            MultivariatePoly::constant(2, q(1))
        );
    }

    #[test]
    fn constant_operator_is_identity() {
        let p = &MultivariatePoly::var(3, 0).pow(3) + &MultivariatePoly::var(3, 2).scale(&q(5));
        assert_eq!(
            p.apply_diff_operator(&MultivariatePoly::constant(3, q(1))),
            p
        );
    }

    #[test]
    fn ratio_detects_proportionality() {
        let p = &MultivariatePoly::var(2, 0) - &MultivariatePoly::var(2, 1);
        assert_eq!(p.scale(&q(-4)).ratio_to(&p), Some(q(-4)));
        assert_eq!(MultivariatePoly::var(2, 0).ratio_to(&p), None);
    }
}
