//! Characters of Sₙ: Murnaghan–Nakayama values, Kostka numbers, Young permutation characters.

use crate::diagrams::partitions;
use crate::exact::{factorial, Rational};
use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;
use std::collections::HashMap;

pub type Partition = Vec<usize>;

/// Conjugate partition.
pub fn conjugate(lambda: &[usize]) -> Partition {
    let width = lambda.first().copied().unwrap_or(0);
    (0..width)
        .map(|c| lambda.iter().filter(|&&r| r > c).count())
        .collect()
}

/// Cycle type of a permutation, as a partition.
pub fn cycle_type(perm: &[usize]) -> Partition {
    let mut seen = vec![false; perm.len()];
    let mut out = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        out.push(len);
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// A permutation of cycle type ρ: consecutive cycles (0 1 … ρ₁−1)(ρ₁ …)….
pub fn class_representative(rho: &[usize]) -> Vec<usize> {
    let n: usize = rho.iter().sum();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut start = 0;
    for &len in rho {
        for k in 0..len {
            perm[start + k] = start + (k + 1) % len;
        }
        start += len;
    }
    perm
}

/// z_ρ = Π i^{m_i} m_i!, the centralizer order of the class ρ.
pub fn centralizer_order(rho: &[usize]) -> BigInt {
    let mut counts: HashMap<usize, u32> = HashMap::new();
    for &r in rho {
        *counts.entry(r).or_default() += 1;
    }
    counts
        .iter()
        .map(|(&i, &m)| BigInt::from(i).pow(m) * factorial(m))
        .product()
}

pub fn sign_of_class(rho: &[usize]) -> i64 {
    if rho.iter().filter(|&&r| r % 2 == 0).count() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// χ^λ(ρ) by removing rim hooks of lengths ρ₁, ρ₂, … on the β-numbers of λ.
pub fn mn_value(lambda: &[usize], rho: &[usize]) -> i64 {
    fn rec(lambda: &[usize], rho: &[usize], memo: &mut HashMap<(Partition, usize), i64>) -> i64 {
        let Some(&r) = rho.first() else {
            return i64::from(lambda.is_empty());
        };
        let key = (lambda.to_vec(), rho.len());
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        let k = lambda.len();
        let beta: Vec<usize> = lambda
            .iter()
            .enumerate()
            .map(|(i, &l)| l + (k - 1 - i))
            .collect();
        let mut total = 0;
        for (i, &b) in beta.iter().enumerate() {
            if b < r || beta.contains(&(b - r)) {
                continue;
            }
            let between = beta.iter().filter(|&&x| x > b - r && x < b).count();
            let sign = if between % 2 == 0 { 1 } else { -1 };
            let mut nb = beta.clone();
            nb[i] = b - r;
            nb.sort_unstable_by(|a, c| c.cmp(a));
            let mu: Partition = nb
                .iter()
                .enumerate()
                .map(|(j, &x)| x - (k - 1 - j))
                .filter(|&x| x > 0)
                .collect();
            total += sign * rec(&mu, &rho[1..], memo);
        }
        memo.insert(key, total);
        total
    }
    rec(lambda, rho, &mut HashMap::new())
}

/// Number of semistandard tableaux of shape λ and content μ (μ any composition).
pub fn kostka(lambda: &[usize], mu: &[usize]) -> u64 {
    let mut content: Vec<usize> = mu.iter().copied().filter(|&m| m > 0).collect();
    content.sort_unstable_by(|a, b| b.cmp(a));
    fn rec(lambda: &[usize], mu: &[usize]) -> u64 {
        let Some((&m, rest)) = mu.split_last() else {
            return u64::from(lambda.iter().all(|&x| x == 0));
        };
        // Remove a horizontal strip of size m: ν_i ∈ [λ_{i+1}, λ_i].
        fn strips(
            lambda: &[usize],
            i: usize,
            left: usize,
            nu: &mut Vec<usize>,
            rest: &[usize],
            acc: &mut u64,
        ) {
            if i == lambda.len() {
                if left == 0 {
                    *acc += rec(nu, rest);
                }
                return;
            }
            let lower = lambda.get(i + 1).copied().unwrap_or(0);
            for take in 0..=(lambda[i] - lower).min(left) {
                nu.push(lambda[i] - take);
                strips(lambda, i + 1, left - take, nu, rest, acc);
                nu.pop();
            }
        }
        let mut acc = 0;
        strips(lambda, 0, m, &mut Vec::new(), rest, &mut acc);
        acc
    }
    if lambda.iter().sum::<usize>() != content.iter().sum::<usize>() {
        return 0;
    }
    rec(lambda, &content)
}

/// Value at the class ρ of the permutation character of S_n on cosets of the Young subgroup S_μ.
pub fn young_permutation_character(mu: &[usize], rho: &[usize]) -> i64 {
    // Count assignments of the cycles of ρ to the blocks of μ that fill every block exactly.
    fn rec(rho: &[usize], room: &mut Vec<usize>) -> i64 {
        let Some((&c, rest)) = rho.split_first() else {
            return i64::from(room.iter().all(|&r| r == 0));
        };
        let mut total = 0;
        for b in 0..room.len() {
            if room[b] >= c {
                room[b] -= c;
                total += rec(rest, room);
                room[b] += c;
            }
        }
        total
    }
    rec(rho, &mut mu.to_vec())
}

fn ser_bigints<S: serde::Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

#[derive(Clone, Debug, Serialize)]
pub struct CharacterTable {
    pub n: usize,
    /// Conjugacy classes, labelled by cycle type.
    pub classes: Vec<Partition>,
    #[serde(serialize_with = "ser_bigints")]
    pub class_sizes: Vec<BigInt>,
    /// Irreducibles, labelled by partitions in the same order as `classes`.
    pub irreps: Vec<Partition>,
    /// values[λ][ρ].
    pub values: Vec<Vec<i64>>,
}

impl CharacterTable {
    pub fn new(n: usize) -> Self {
        let classes = partitions(n);
        let order = factorial(n as u32);
        let class_sizes = classes
            .iter()
            .map(|r| &order / centralizer_order(r))
            .collect();
        let irreps = classes.clone();
        let values = irreps
            .iter()
            .map(|l| classes.iter().map(|r| mn_value(l, r)).collect())
            .collect();
        CharacterTable {
            n,
            classes,
            class_sizes,
            irreps,
            values,
        }
    }

    pub fn class_index(&self, rho: &[usize]) -> Option<usize> {
        self.classes.iter().position(|r| r == rho)
    }

    pub fn irrep_index(&self, lambda: &[usize]) -> Option<usize> {
        self.irreps.iter().position(|l| l == lambda)
    }

    /// ⟨χ, ψ⟩ = (1/n!) Σ_ρ |C_ρ| χ(ρ) ψ(ρ) for class functions indexed like `classes`.
    pub fn inner(&self, chi: &[Rational], psi: &[Rational]) -> Rational {
        let order = Rational::from_integer(factorial(self.n as u32));
        let mut acc = Rational::zero();
        for k in 0..self.classes.len() {
            acc += Rational::from_integer(self.class_sizes[k].clone()) * &chi[k] * &psi[k];
        }
        acc / order
    }

    pub fn irrep(&self, idx: usize) -> Vec<Rational> {
        self.values[idx]
            .iter()
            .map(|&v| Rational::from_integer(v.into()))
            .collect()
    }

    pub fn sign(&self) -> Vec<Rational> {
        self.classes
            .iter()
            .map(|r| Rational::from_integer(sign_of_class(r).into()))
            .collect()
    }

    /// Multiplicity of every irreducible in a class function.
    pub fn decompose(&self, chi: &[Rational]) -> Vec<Rational> {
        (0..self.irreps.len())
            .map(|i| self.inner(chi, &self.irrep(i)))
            .collect()
    }

    /// The irreducible equal to χ, if χ is irreducible.
    pub fn identify(&self, chi: &[Rational]) -> Option<Partition> {
        (0..self.irreps.len())
            .find(|&i| self.irrep(i) == chi)
            .map(|i| self.irreps[i].clone())
    }

    /// Rows orthonormal and Σ dim² = n!.
    pub fn is_orthonormal(&self) -> bool {
        let k = self.irreps.len();
        let ortho = (0..k).all(|i| {
            (0..k).all(|j| {
                let expected = Rational::from_integer(BigInt::from(i64::from(i == j)));
                self.inner(&self.irrep(i), &self.irrep(j)) == expected
            })
        });
        let id = self.class_index(&vec![1; self.n]).expect("identity class");
        let dims: BigInt = self
            .values
            .iter()
            .map(|row| BigInt::from(row[id] * row[id]))
            .sum();
        ortho && dims == factorial(self.n as u32)
    }

    pub fn young_character(&self, mu: &[usize]) -> Vec<Rational> {
        self.classes
            .iter()
            .map(|r| Rational::from_integer(young_permutation_character(mu, r).into()))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3_table() {
        let t = CharacterTable::new(3);
        assert!(t.is_orthonormal());
        let id = t.class_index(&[1, 1, 1]).unwrap();
        let dims: Vec<i64> = t.values.iter().map(|r| r[id]).collect();
        assert_eq!(dims, vec![1, 2, 1]);
    }

    #[test]
    fn tables_are_orthonormal_up_to_seven() {
        for n in 1..=7 {
            assert!(CharacterTable::new(n).is_orthonormal(), "n = {n}");
        }
    }

    #[test]
    fn kostka_basics() {
        for lambda in partitions(5) {
            assert_eq!(kostka(&lambda, &lambda), 1);
        }
        assert_eq!(kostka(&[2, 1], &[1, 1, 1]), 2);
        assert_eq!(kostka(&[3, 2], &[2, 2, 1]), 2);
        assert_eq!(kostka(&[2, 2], &[3, 1]), 0);
    }

    #[test]
    fn young_characters_decompose_by_kostka() {
        let t = CharacterTable::new(5);
        for mu in partitions(5) {
            let m = t.decompose(&t.young_character(&mu));
            for (i, lambda) in t.irreps.iter().enumerate() {
                assert_eq!(m[i], Rational::from_integer(kostka(lambda, &mu).into()));
            }
        }
    }

    #[test]
    fn conjugate_and_cycles() {
        assert_eq!(conjugate(&[3, 1]), vec![2, 1, 1]);
        assert_eq!(cycle_type(&class_representative(&[3, 2, 1])), vec![3, 2, 1]);
        assert_eq!(centralizer_order(&[2, 2]), BigInt::from(8));
    }
}
