//! Root data of a graded pair, the two-variable partition function ℘, the alternating
//! multiplicity formula, and the direct bifiltration multiplicities it is compared against.

mod module;

pub use module::{signed_permutations, weyl_dimension, Weight, WeightModule, TENSOR_LIMIT};

use crate::exact::{to_i64, BivariatePoly, Matrix, Subspace};
use crate::nilpairs::{Bidegree, NilPair, SemisimplePair};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;
use std::collections::{BTreeMap, HashMap};

/// How ties inside R₊ are broken once α(h₁) + α(h₂) is compared.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PositiveRule {
    /// Key (α(h₁)+α(h₂), α(h₁), coordinate order).
    Standard,
    /// Key (α(h₁)+α(h₂), α(h₂), coordinate order).
    Alternate,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RootClass {
    /// α(h₁) > 0 = α(h₂).
    Plus1,
    /// α(h₁) = 0 < α(h₂).
    Plus2,
    /// α(h₁) > 0 and α(h₂) > 0.
    Bullet,
    /// Positive but outside the closed positive quadrant.
    Rest,
}

#[derive(Clone, Debug, Serialize)]
pub struct Root {
    /// α = ε_i − ε_j, 0-based.
    pub i: usize,
    pub j: usize,
    pub values: Bidegree,
    pub class: RootClass,
}

impl Root {
    pub fn vector(&self, n: usize) -> Vec<i64> {
        let mut v = vec![0; n];
        v[self.i] += 1;
        v[self.j] -= 1;
        v
    }

    pub fn label(&self) -> String {
        format!("e{}-e{}", self.i + 1, self.j + 1)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RootData {
    pub n: usize,
    pub rule: PositiveRule,
    /// Coordinates from the top of the R₊ order down; simple roots are ε_{o_k} − ε_{o_{k+1}}.
    pub order: Vec<usize>,
    pub positive: Vec<Root>,
    /// 2ρ in coordinates.
    pub two_rho: Vec<i64>,
}

impl RootData {
    pub fn of_class(&self, c: RootClass) -> impl Iterator<Item = &Root> {
        self.positive.iter().filter(move |r| r.class == c)
    }

    pub fn ne(&self) -> impl Iterator<Item = &Root> {
        self.positive.iter().filter(|r| r.class != RootClass::Rest)
    }

    pub fn count(&self, c: RootClass) -> usize {
        self.of_class(c).count()
    }

    pub fn labels(&self) -> Vec<String> {
        self.positive.iter().map(Root::label).collect()
    }

    /// Partial sums of γ along the R₊ order; all ≥ 0 iff γ is in the positive root cone.
    fn partial_sums(&self, gamma: &[i64]) -> Vec<i64> {
        let mut acc = 0;
        self.order[..self.n - 1]
            .iter()
            .map(|&k| {
                acc += gamma[k];
                acc
            })
            .collect()
    }

    pub fn in_cone(&self, gamma: &[i64]) -> bool {
        gamma.iter().sum::<i64>() == 0 && self.partial_sums(gamma).iter().all(|&x| x >= 0)
    }

    /// Sum of simple-root coefficients.
    pub fn height(&self, gamma: &[i64]) -> i64 {
        self.partial_sums(gamma).iter().sum()
    }

    /// Dominant with respect to R₊: non-increasing along the order.
    pub fn is_dominant(&self, lambda: &[i64]) -> bool {
        self.order.windows(2).all(|w| lambda[w[0]] >= lambda[w[1]])
    }

    /// The R₊-dominant rearrangement of a weight.
    pub fn dominant_rearrangement(&self, weight: &[i64]) -> Vec<i64> {
        let mut sorted = weight.to_vec();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        let mut out = vec![0; self.n];
        for (k, &idx) in self.order.iter().enumerate() {
            out[idx] = sorted[k];
        }
        out
    }

    /// The gl weight of a partition placed R₊-dominantly, shifted into the root lattice.
    pub fn lattice_highest_weight(&self, lambda: &[usize]) -> Result<Vec<i64>> {
        let total: usize = lambda.iter().sum();
        if !total.is_multiple_of(self.n) {
            return Err(Error::Precondition(format!(
                "|λ| = {total} is not divisible by n = {}",
                self.n
            )));
        }
        let mut padded: Vec<i64> = lambda.iter().map(|&x| x as i64).collect();
        padded.resize(self.n, 0);
        let shift = (total / self.n) as i64;
        let centered: Vec<i64> = padded.iter().map(|x| x - shift).collect();
        Ok(self.dominant_rearrangement(&centered))
    }
}

/// Roots, their quadrant classes and a positive system containing R_ne.
pub fn root_data(h: &SemisimplePair, rule: PositiveRule) -> Result<RootData> {
    if !h.is_regular() {
        return Err(Error::Regularity(
            "semisimple pair has a repeated value pair".into(),
        ));
    }
    if !h.is_integral() {
        return Err(Error::Precondition(
            "semisimple pair has non-integral root values".into(),
        ));
    }
    let n = h.n();
    let vals: Vec<(i64, i64)> = (0..n)
        .map(|i| {
            let a = to_i64(&(&h.h1[i] - &h.h1[0])).expect("integral");
            let b = to_i64(&(&h.h2[i] - &h.h2[0])).expect("integral");
            (a, b)
        })
        .collect();
    let key = |i: usize| {
        let (a, b) = vals[i];
        let second = match rule {
            PositiveRule::Standard => a,
            PositiveRule::Alternate => b,
        };
        (a + b, second, -(i as i64))
    };
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| std::cmp::Reverse(key(x)));
    let rank: Vec<usize> = {
        let mut r = vec![0; n];
        for (k, &i) in order.iter().enumerate() {
            r[i] = k;
        }
        r
    };
    let mut positive = Vec::new();
    for &i in &order {
        for &j in &order {
            if rank[i] >= rank[j] {
                continue;
            }
            let values = (vals[i].0 - vals[j].0, vals[i].1 - vals[j].1);
            let class = match values {
                (a, 0) if a > 0 => RootClass::Plus1,
                (0, b) if b > 0 => RootClass::Plus2,
                (a, b) if a > 0 && b > 0 => RootClass::Bullet,
                (a, b) if a >= 0 && b >= 0 => {
                    unreachable!("regular pair has no zero root value ({a},{b})")
                }
                _ => RootClass::Rest,
            };
            positive.push(Root {
                i,
                j,
                values,
                class,
            });
        }
    }
    if positive
        .iter()
        .any(|r| r.class == RootClass::Rest && r.values.0 >= 0 && r.values.1 >= 0)
    {
        return Err(Error::Internal("R_ne is not contained in R₊".into()));
    }
    // Negative roots in the closed positive quadrant would mean R_ne ⊄ R₊.
    for &i in &order {
        for &j in &order {
            if rank[i] > rank[j] {
                let (a, b) = (vals[i].0 - vals[j].0, vals[i].1 - vals[j].1);
                if a >= 0 && b >= 0 {
                    return Err(Error::Internal(format!(
                        "root e{}-e{} in R_ne is negative",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
    }
    let mut two_rho = vec![0; n];
    for (k, &i) in order.iter().enumerate() {
        two_rho[i] = n as i64 - 1 - 2 * k as i64;
    }
    Ok(RootData {
        n,
        rule,
        order,
        positive,
        two_rho,
    })
}

/// Coefficient of x^k in the expansion of the inverse factor attached to a root class.
fn series_coefficient(class: RootClass, k: i64) -> BivariatePoly {
    match class {
        RootClass::Rest => BivariatePoly::one(),
        RootClass::Plus1 => BivariatePoly::monomial(k, 0, 1),
        RootClass::Plus2 => BivariatePoly::monomial(0, k, 1),
        // (1 − st x)/((1 − s x)(1 − t x)): Σ_{a+b=k} s^a t^b − st Σ_{a+b=k−1} s^a t^b.
        RootClass::Bullet => {
            let mut p = BivariatePoly::zero();
            for a in 0..=k {
                p.add_term(a, k - a, BigInt::one());
            }
            for a in 0..k {
                p.add_term(a + 1, k - a, -BigInt::one());
            }
            p
        }
    }
}

/// ℘(γ) for every γ in the R₊-cone of height ≤ `bound`.
#[derive(Clone, Debug)]
pub struct PartitionTable {
    pub bound: u64,
    pub entries: BTreeMap<Vec<i64>, BivariatePoly>,
}

impl PartitionTable {
    pub fn get(&self, rd: &RootData, gamma: &[i64]) -> Result<BivariatePoly> {
        if !rd.in_cone(gamma) {
            return Ok(BivariatePoly::zero());
        }
        let h = rd.height(gamma) as u64;
        if h > self.bound {
            return Err(Error::Bound {
                needed: h,
                have: self.bound,
            });
        }
        Ok(self
            .entries
            .get(gamma)
            .cloned()
            .unwrap_or_else(BivariatePoly::zero))
    }

    /// Entries with a negative coefficient.
    pub fn negative_entries(&self) -> Vec<(Vec<i64>, BivariatePoly)> {
        self.entries
            .iter()
            .filter(|(_, p)| !p.all_nonnegative())
            .map(|(k, p)| (k.clone(), p.clone()))
            .collect()
    }
}

/// Expands 1/𝔓_e over the monoid generated by R₊, truncated at height `bound`.
pub fn partition_function(rd: &RootData, bound: u64) -> PartitionTable {
    let n = rd.n;
    let mut table: BTreeMap<Vec<i64>, BivariatePoly> = BTreeMap::new();
    table.insert(vec![0; n], BivariatePoly::one());
    for root in &rd.positive {
        let beta = root.vector(n);
        let mut next: BTreeMap<Vec<i64>, BivariatePoly> = BTreeMap::new();
        for (gamma, p) in &table {
            let mut k = 0i64;
            loop {
                let g: Vec<i64> = gamma.iter().zip(&beta).map(|(x, y)| x + k * y).collect();
                if rd.height(&g) as u64 > bound {
                    break;
                }
                let term = p * &series_coefficient(root.class, k);
                let slot = next.entry(g).or_insert_with(BivariatePoly::zero);
                *slot = &*slot + &term;
                k += 1;
            }
        }
        next.retain(|_, p| !p.is_zero());
        table = next;
    }
    PartitionTable {
        bound,
        entries: table,
    }
}

/// Number of ways to write γ as a non-negative integer combination of `roots`.
pub fn count_decompositions(rd: &RootData, roots: &[Vec<i64>], gamma: &[i64]) -> BigInt {
    fn rec(
        rd: &RootData,
        roots: &[Vec<i64>],
        k: usize,
        gamma: &[i64],
        memo: &mut HashMap<(usize, Vec<i64>), BigInt>,
    ) -> BigInt {
        if gamma.iter().all(|&x| x == 0) {
            return BigInt::one();
        }
        if k == roots.len() || !rd.in_cone(gamma) {
            return BigInt::zero();
        }
        if let Some(v) = memo.get(&(k, gamma.to_vec())) {
            return v.clone();
        }
        let mut total = BigInt::zero();
        let mut g = gamma.to_vec();
        loop {
            if !rd.in_cone(&g) && g.iter().any(|&x| x != 0) {
                break;
            }
            total += rec(rd, roots, k + 1, &g, memo);
            if g.iter().all(|&x| x == 0) {
                break;
            }
            for (x, y) in g.iter_mut().zip(&roots[k]) {
                *x -= y;
            }
        }
        memo.insert((k, gamma.to_vec()), total.clone());
        total
    }
    rec(rd, roots, 0, gamma, &mut HashMap::new())
}

/// Classical Kostant partition function over R₊.
pub fn classical_partition(rd: &RootData, gamma: &[i64]) -> BigInt {
    let roots: Vec<Vec<i64>> = rd.positive.iter().map(|r| r.vector(rd.n)).collect();
    count_decompositions(rd, &roots, gamma)
}

/// Membership in the semigroup Q_ne generated by R_ne.
pub fn in_q_ne(rd: &RootData, gamma: &[i64]) -> bool {
    let roots: Vec<Vec<i64>> = rd.ne().map(|r| r.vector(rd.n)).collect();
    !count_decompositions(rd, &roots, gamma).is_zero()
}

/// w(λ+ρ) − μ − ρ for every permutation w, with its sign.
fn weyl_terms(rd: &RootData, lambda: &[i64], mu: &[i64]) -> Vec<(Vec<i64>, i64)> {
    let n = rd.n;
    let v: Vec<i64> = lambda
        .iter()
        .zip(&rd.two_rho)
        .map(|(l, r)| 2 * l + r)
        .collect();
    signed_permutations(n)
        .into_iter()
        .map(|(w, sign)| {
            let mut wv = vec![0; n];
            for i in 0..n {
                wv[w[i]] = v[i];
            }
            let gamma: Vec<i64> = (0..n)
                .map(|i| (wv[i] - 2 * mu[i] - rd.two_rho[i]) / 2)
                .collect();
            (gamma, sign)
        })
        .collect()
}

/// Largest height among the in-cone arguments of ℘ the formula will query.
pub fn required_height(rd: &RootData, lambda: &[i64], mus: &[Vec<i64>]) -> u64 {
    mus.iter()
        .flat_map(|mu| weyl_terms(rd, lambda, mu))
        .filter(|(g, _)| rd.in_cone(g))
        .map(|(g, _)| rd.height(&g) as u64)
        .max()
        .unwrap_or(0)
}

fn check_weight(rd: &RootData, w: &[i64], what: &str) -> Result<()> {
    if w.len() != rd.n || w.iter().sum::<i64>() != 0 {
        return Err(Error::Precondition(format!(
            "{what} {w:?} is not a root-lattice vector of length {}",
            rd.n
        )));
    }
    Ok(())
}

/// Σ_w ε(w) ℘(w(λ+ρ) − μ − ρ).
pub fn multiplicity_formula(
    rd: &RootData,
    table: &PartitionTable,
    lambda: &[i64],
    mu: &[i64],
) -> Result<BivariatePoly> {
    check_weight(rd, lambda, "λ")?;
    check_weight(rd, mu, "μ")?;
    if !rd.is_dominant(lambda) {
        return Err(Error::Precondition(format!(
            "λ = {lambda:?} is not dominant for R₊"
        )));
    }
    let mut out = BivariatePoly::zero();
    for (gamma, sign) in weyl_terms(rd, lambda, mu) {
        let p = table.get(rd, &gamma)?;
        out = if sign > 0 { &out + &p } else { &out - &p };
    }
    Ok(out)
}

/// Σ_w ε(w) K(w(λ+ρ) − μ − ρ) with the classical partition function.
pub fn classical_multiplicity(rd: &RootData, lambda: &[i64], mu: &[i64]) -> BigInt {
    weyl_terms(rd, lambda, mu)
        .into_iter()
        .map(|(g, sign)| classical_partition(rd, &g) * sign)
        .sum()
}

/// Which subspaces F_{i,j}V the bigrading of a weight space is taken against.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FiltrationKind {
    /// F_{i,j} = Ker x₁^{i+1}x₂^j ∩ Ker x₁^i x₂^{j+1}.
    Mixed,
    /// F_{i,j} = Ker x₁^{i+1} ∩ Ker x₂^{j+1}.
    Separate,
}

/// Poincaré polynomial of gr V(μ) for the chosen bifiltration.
pub fn direct_multiplicity(
    pair: &NilPair,
    v: &WeightModule,
    mu: &[i64],
    kind: FiltrationKind,
) -> Result<BivariatePoly> {
    if v.n() != pair.n {
        return Err(Error::Precondition(
            "module and pair live over different n".into(),
        ));
    }
    let x1 = v.rep(&pair.e1);
    let x2 = v.rep(&pair.e2);
    Ok(bifiltration_poly(&x1, &x2, &v.weight_space(mu), kind))
}

fn nilpotency_order(x: &Matrix) -> usize {
    let mut k = 0;
    let mut p = Matrix::identity(x.rows());
    while !p.is_zero() {
        p = p.mul(x);
        k += 1;
    }
    k
}

fn powers(x: &Matrix, k: usize) -> Vec<Matrix> {
    let mut p = vec![Matrix::identity(x.rows())];
    for _ in 0..=k {
        let next = p.last().expect("nonempty").mul(x);
        p.push(next);
    }
    p
}

/// Σ s^i t^j dim F_{i,j}E / (F_{i−1,j}E + F_{i,j−1}E) for the induced bifiltration on E.
pub fn bifiltration_poly(
    x1: &Matrix,
    x2: &Matrix,
    e: &Subspace,
    kind: FiltrationKind,
) -> BivariatePoly {
    let (k1, k2) = (nilpotency_order(x1), nilpotency_order(x2));
    let dim = x1.rows();
    let (p1, p2) = (powers(x1, k1), powers(x2, k2));
    let mut f: BTreeMap<(usize, usize), Subspace> = BTreeMap::new();
    for i in 0..=k1 {
        for j in 0..=k2 {
            let (a, b) = match kind {
                FiltrationKind::Mixed => (p1[i + 1].mul(&p2[j]), p1[i].mul(&p2[j + 1])),
                FiltrationKind::Separate => (p1[i + 1].clone(), p2[j + 1].clone()),
            };
            f.insert(
                (i, j),
                e.kernel_of(|v| {
                    let mut out = a.mul_vec(v);
                    out.extend(b.mul_vec(v));
                    out
                }),
            );
        }
    }
    let zero = Subspace::zero(dim);
    let mut out = BivariatePoly::zero();
    for i in 0..=k1 {
        for j in 0..=k2 {
            let below_i = if i > 0 { &f[&(i - 1, j)] } else { &zero };
            let below_j = if j > 0 { &f[&(i, j - 1)] } else { &zero };
            let d = f[&(i, j)].dim() - below_i.sum(below_j).dim();
            if d > 0 {
                out.add_term(i as i64, j as i64, BigInt::from(d));
            }
        }
    }
    out
}

fn as_string<S: serde::Serializer>(x: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

#[derive(Clone, Debug, Serialize)]
pub struct Thm210Entry {
    pub mu: Vec<i64>,
    pub dominant: bool,
    pub dim_weight_space: usize,
    pub p_direct: BivariatePoly,
    pub p_formula: BivariatePoly,
    pub equal: bool,
    /// P_direct(1,1), P_formula(1,1) and the classical Kostant value.
    #[serde(serialize_with = "as_string")]
    pub direct_at_one: BigInt,
    #[serde(serialize_with = "as_string")]
    pub formula_at_one: BigInt,
    #[serde(serialize_with = "as_string")]
    pub classical: BigInt,
}

#[derive(Clone, Debug, Serialize)]
pub struct Thm210Report {
    pub n: usize,
    pub lambda: Vec<usize>,
    pub lambda_weight: Vec<i64>,
    /// λ ∈ Q_ne, the hypothesis of the formula.
    pub admissible: bool,
    pub rule: PositiveRule,
    pub filtration: FiltrationKind,
    pub positive_system: Vec<String>,
    pub height_bound: u64,
    pub negative_partition_values: usize,
    pub entries: Vec<Thm210Entry>,
    pub all_equal: bool,
    pub dominant_equal: bool,
    /// P_direct(1,1) = dim V(μ) = classical Kostant value at every μ.
    pub classical_ok: bool,
}

/// Direct bifiltration multiplicities against the alternating formula at every weight of V_λ.
pub fn thm210_crosscheck(
    pair: &NilPair,
    h: &SemisimplePair,
    lambda: &[usize],
    rule: PositiveRule,
    kind: FiltrationKind,
) -> Result<Thm210Report> {
    let rd = root_data(h, rule)?;
    let v = WeightModule::realize(pair.n, lambda)?;
    let lam = rd.lattice_highest_weight(lambda)?;
    let mus: Vec<Vec<i64>> = v
        .weights()
        .into_iter()
        .map(|(w, _)| v.lattice_weight(&w).expect("root lattice"))
        .collect();
    let bound = required_height(&rd, &lam, &mus);
    let table = partition_function(&rd, bound);
    let x1 = v.rep(&pair.e1);
    let x2 = v.rep(&pair.e2);
    let mut entries = Vec::new();
    for mu in &mus {
        let p_direct = bifiltration_poly(&x1, &x2, &v.weight_space(mu), kind);
        let p_formula = multiplicity_formula(&rd, &table, &lam, mu)?;
        let classical = classical_multiplicity(&rd, &lam, mu);
        entries.push(Thm210Entry {
            mu: mu.clone(),
            dominant: rd.is_dominant(mu),
            dim_weight_space: v.multiplicity(mu),
            equal: p_direct == p_formula,
            direct_at_one: p_direct.eval_one(),
            formula_at_one: p_formula.eval_one(),
            classical,
            p_direct,
            p_formula,
        });
    }
    let all_equal = entries.iter().all(|e| e.equal);
    let dominant_equal = entries.iter().filter(|e| e.dominant).all(|e| e.equal);
    let classical_ok = entries
        .iter()
        .all(|e| e.direct_at_one == e.classical && e.classical == BigInt::from(e.dim_weight_space));
    Ok(Thm210Report {
        n: pair.n,
        lambda: v.lambda().to_vec(),
        admissible: in_q_ne(&rd, &lam),
        lambda_weight: lam,
        rule,
        filtration: kind,
        positive_system: rd.labels(),
        height_bound: bound,
        negative_partition_values: table.negative_entries().len(),
        entries,
        all_equal,
        dominant_equal,
        classical_ok,
    })
}

/// Partitions of N with at most n parts and N ≡ 0 mod n, for N ≤ max_size.
pub fn root_lattice_partitions(n: usize, max_size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for total in (n..=max_size).step_by(n.max(1)) {
        for p in crate::diagrams::partitions(total) {
            if p.len() <= n {
                out.push(p);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::parse;
    use crate::nilpairs::build_pair;

    fn pair(spec: &str) -> (NilPair, SemisimplePair) {
        build_pair(&parse(spec).unwrap()).unwrap()
    }

    #[test]
    fn hook_root_data() {
        let (_, h) = pair("2,1");
        let rd = root_data(&h, PositiveRule::Standard).unwrap();
        let ne: Vec<String> = rd.ne().map(Root::label).collect();
        assert_eq!(ne.len(), 2);
        assert!(ne.contains(&"e2-e1".to_string()) && ne.contains(&"e3-e1".to_string()));
        assert_eq!(rd.positive.len(), 3);
        assert_eq!(rd.count(RootClass::Bullet), 0);
        assert!(rd
            .positive
            .iter()
            .any(|r| r.label() == "e2-e3" || r.label() == "e3-e2"));
    }

    #[test]
    fn row_pair_has_only_plus1() {
        let (_, h) = pair("4");
        let rd = root_data(&h, PositiveRule::Standard).unwrap();
        assert_eq!(rd.count(RootClass::Plus1), 6);
        assert_eq!(rd.positive.len(), 6);
    }

    #[test]
    fn sl2_partition_function_is_s_power() {
        let (_, h) = pair("2");
        let rd = root_data(&h, PositiveRule::Standard).unwrap();
        let t = partition_function(&rd, 5);
        let alpha = rd.positive[0].vector(2);
        for k in 0..=5i64 {
            let g: Vec<i64> = alpha.iter().map(|x| k * x).collect();
            assert_eq!(t.get(&rd, &g).unwrap(), BivariatePoly::monomial(k, 0, 1));
        }
        assert!(matches!(
            t.get(&rd, &[6, -6].map(|x| x * alpha[0].signum())),
            Err(Error::Bound { .. })
        ));
    }

    #[test]
    fn hook_partition_value() {
        let (_, h) = pair("2,1");
        let rd = root_data(&h, PositiveRule::Standard).unwrap();
        let t = partition_function(&rd, 4);
        // ε₂ − ε₁ = (ε₂ − ε₃) + (ε₃ − ε₁) has height 2, so R₊ \ R_ne contributes t.
        assert_eq!(
            t.get(&rd, &[-1, 1, 0]).unwrap(),
            &BivariatePoly::s() + &BivariatePoly::t()
        );
        assert_eq!(t.get(&rd, &[-1, 0, 1]).unwrap(), BivariatePoly::t());
        assert_eq!(t.get(&rd, &[0, 1, -1]).unwrap(), BivariatePoly::one());
        assert_eq!(t.get(&rd, &[0, 0, 0]).unwrap(), BivariatePoly::one());
    }

    #[test]
    fn table_specializes_to_kostant() {
        let (_, h) = pair("2,2");
        let rd = root_data(&h, PositiveRule::Standard).unwrap();
        let t = partition_function(&rd, 5);
        for (g, p) in &t.entries {
            assert_eq!(p.eval_one(), classical_partition(&rd, g), "{g:?}");
        }
        // R_• is non-empty here, yet cancellation keeps every coefficient non-negative.
        assert_eq!(rd.count(RootClass::Bullet), 1);
        assert!(t.negative_entries().is_empty());
        assert_eq!(
            t.get(&rd, &[-1, 0, 0, 1]).unwrap().to_string(),
            "s*t + s + t^2 + t"
        );
    }

    #[test]
    fn sl2_adjoint_crosscheck() {
        let (p, h) = pair("2");
        let r = thm210_crosscheck(
            &p,
            &h,
            &[2],
            PositiveRule::Standard,
            FiltrationKind::Separate,
        )
        .unwrap();
        assert!(r.all_equal && r.classical_ok, "{r:?}");
        let zero = r.entries.iter().find(|e| e.mu == vec![0, 0]).unwrap();
        assert_eq!(zero.p_direct, BivariatePoly::s());
    }

    #[test]
    fn highest_weight_has_polynomial_one() {
        let (p, h) = pair("2,1");
        let r = thm210_crosscheck(
            &p,
            &h,
            &[2, 1],
            PositiveRule::Standard,
            FiltrationKind::Separate,
        )
        .unwrap();
        let top = r.entries.iter().find(|e| e.mu == r.lambda_weight).unwrap();
        assert_eq!(top.p_direct, BivariatePoly::one());
        assert_eq!(top.p_formula, BivariatePoly::one());
        assert!(r.classical_ok);
        let zero = r.entries.iter().find(|e| e.mu == vec![0, 0, 0]).unwrap();
        assert_eq!(zero.p_direct, &BivariatePoly::s() + &BivariatePoly::t());
    }

    #[test]
    fn mixed_kernels_overcount() {
        let (p, _) = pair("2,1");
        let v = WeightModule::realize(3, &[2, 1]).unwrap();
        let mixed = direct_multiplicity(&p, &v, &[0, 0, 0], FiltrationKind::Mixed).unwrap();
        assert_eq!(mixed.eval_one(), BigInt::from(4));
        let separate = direct_multiplicity(&p, &v, &[0, 0, 0], FiltrationKind::Separate).unwrap();
        assert_eq!(separate.eval_one(), BigInt::from(2));
    }

    #[test]
    fn square_formula_goes_negative_at_zero_weight() {
        let (p, h) = pair("2,2");
        let r = thm210_crosscheck(
            &p,
            &h,
            &[2, 2],
            PositiveRule::Standard,
            FiltrationKind::Separate,
        )
        .unwrap();
        assert!(r.admissible && r.classical_ok);
        let zero = r.entries.iter().find(|e| e.mu == vec![0, 0, 0, 0]).unwrap();
        assert!(zero.dominant && !zero.equal);
        assert!(!zero.p_formula.all_nonnegative());
    }
}
