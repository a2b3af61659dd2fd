//! Simple gl_n-modules realized inside (ℚⁿ)^{⊗N} as the lowering closure of a
//! product of column antisymmetrizers.

use crate::exact::{q, Matrix, Rational, Subspace};
use crate::{Error, Result};
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::{BTreeMap, HashMap, VecDeque};

/// Largest tensor power n^N the realization will build.
pub const TENSOR_LIMIT: usize = 1 << 16;

pub type Weight = Vec<i64>;

/// Tensor words grouped by weight (letter counts).
#[derive(Clone, Debug)]
struct TensorIndex {
    n: usize,
    degree: usize,
    /// weight → words of that weight, ascending.
    words: BTreeMap<Weight, Vec<usize>>,
    /// word → (weight, position within its weight block).
    place: HashMap<usize, (Weight, usize)>,
}

impl TensorIndex {
    fn new(n: usize, degree: usize) -> Self {
        let total = n.pow(degree as u32);
        let mut words: BTreeMap<Weight, Vec<usize>> = BTreeMap::new();
        for w in 0..total {
            words
                .entry(Self::weight_of(n, degree, w))
                .or_default()
                .push(w);
        }
        let mut place = HashMap::with_capacity(total);
        for (wt, ws) in &words {
            for (k, &w) in ws.iter().enumerate() {
                place.insert(w, (wt.clone(), k));
            }
        }
        TensorIndex {
            n,
            degree,
            words,
            place,
        }
    }

    fn letters(n: usize, degree: usize, mut w: usize) -> Vec<usize> {
        let mut out = vec![0; degree];
        for k in (0..degree).rev() {
            out[k] = w % n;
            w /= n;
        }
        out
    }

    fn word(n: usize, letters: &[usize]) -> usize {
        letters.iter().fold(0, |acc, &l| acc * n + l)
    }

    fn weight_of(n: usize, degree: usize, w: usize) -> Weight {
        let mut wt = vec![0i64; n];
        for l in Self::letters(n, degree, w) {
            wt[l] += 1;
        }
        wt
    }

    fn block_len(&self, wt: &Weight) -> usize {
        self.words.get(wt).map_or(0, Vec::len)
    }

    /// X acting as a derivation on a vector supported on the words of weight `wt`.
    fn apply(&self, x: &Matrix, wt: &Weight, v: &[Rational]) -> BTreeMap<Weight, Vec<Rational>> {
        let mut out: BTreeMap<Weight, Vec<Rational>> = BTreeMap::new();
        let words = &self.words[wt];
        for (k, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let letters = Self::letters(self.n, self.degree, words[k]);
            for pos in 0..self.degree {
                let b = letters[pos];
                for a in 0..self.n {
                    let xab = x.get(a, b);
                    if xab.is_zero() {
                        continue;
                    }
                    let mut nl = letters.clone();
                    nl[pos] = a;
                    let (twt, tk) = &self.place[&Self::word(self.n, &nl)];
                    let len = self.block_len(twt);
                    let slot = out
                        .entry(twt.clone())
                        .or_insert_with(|| vec![Rational::zero(); len]);
                    slot[*tk] += c * xab;
                }
            }
        }
        out.retain(|_, v| v.iter().any(|c| !c.is_zero()));
        out
    }
}

/// Weyl dimension formula for gl_n with highest weight λ (weakly decreasing).
pub fn weyl_dimension(lambda: &[i64]) -> BigRational {
    let n = lambda.len();
    let mut d = Rational::one();
    for i in 0..n {
        for j in i + 1..n {
            d *= q(lambda[i] - lambda[j] + (j - i) as i64) / q((j - i) as i64);
        }
    }
    d
}

/// A simple module with its weight spaces; the basis is ordered by weight and
/// then by echelon order within each weight space.
#[derive(Clone, Debug)]
pub struct WeightModule {
    n: usize,
    lambda: Vec<usize>,
    tensor: TensorIndex,
    spaces: BTreeMap<Weight, Subspace>,
    offsets: BTreeMap<Weight, usize>,
    dim: usize,
}

impl WeightModule {
    /// The module of highest weight λ (a partition with at most n parts).
    pub fn realize(n: usize, lambda: &[usize]) -> Result<Self> {
        if n == 0 {
            return Err(Error::Precondition("n must be positive".into()));
        }
        let mut lambda: Vec<usize> = lambda.iter().copied().filter(|&x| x > 0).collect();
        if lambda.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Precondition(format!(
                "{lambda:?} is not a partition"
            )));
        }
        if lambda.len() > n {
            return Err(Error::Precondition(format!(
                "{lambda:?} has more than {n} parts"
            )));
        }
        let degree: usize = lambda.iter().sum();
        match n.checked_pow(degree as u32) {
            Some(size) if size <= TENSOR_LIMIT => {}
            _ => {
                return Err(Error::Resource(format!(
                    "tensor power {n}^{degree} exceeds {TENSOR_LIMIT}"
                )))
            }
        }
        let tensor = TensorIndex::new(n, degree);
        lambda.resize(n, 0);

        let hw_weight: Weight = lambda.iter().map(|&x| x as i64).collect();
        let hw = highest_weight_vector(&tensor, &lambda);
        let mut spaces: BTreeMap<Weight, Subspace> = BTreeMap::new();
        spaces.insert(
            hw_weight.clone(),
            Subspace::from_vectors(hw.len(), vec![hw.clone()]),
        );
        let mut queue = VecDeque::from([(hw_weight, hw)]);
        let lowering: Vec<Matrix> = (0..n.saturating_sub(1))
            .map(|i| Matrix::unit(n, i + 1, i))
            .collect();
        while let Some((wt, v)) = queue.pop_front() {
            for f in &lowering {
                for (twt, tv) in tensor.apply(f, &wt, &v) {
                    let space = spaces
                        .entry(twt.clone())
                        .or_insert_with(|| Subspace::zero(tensor.block_len(&twt)));
                    if !space.contains(&tv) {
                        let mut basis = space.basis().to_vec();
                        basis.push(tv.clone());
                        *space = Subspace::from_vectors(space.ambient_dim(), basis);
                        queue.push_back((twt, tv));
                    }
                }
            }
        }
        let mut offsets = BTreeMap::new();
        let mut dim = 0;
        for (wt, s) in &spaces {
            offsets.insert(wt.clone(), dim);
            dim += s.dim();
        }
        let expected = weyl_dimension(&lambda.iter().map(|&x| x as i64).collect::<Vec<_>>());
        if q(dim as i64) != expected {
            return Err(Error::Internal(format!(
                "realized dimension {dim} but Weyl dimension is {expected}"
            )));
        }
        Ok(WeightModule {
            n,
            lambda,
            tensor,
            spaces,
            offsets,
            dim,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Highest weight, padded to n entries.
    pub fn lambda(&self) -> &[usize] {
        &self.lambda
    }

    pub fn degree(&self) -> usize {
        self.tensor.degree
    }

    /// gl weight (letter counts) for a root-lattice vector or a gl weight.
    pub fn gl_weight(&self, mu: &[i64]) -> Option<Weight> {
        if mu.len() != self.n {
            return None;
        }
        let s: i64 = mu.iter().sum();
        let deg = self.degree() as i64;
        if s == deg {
            Some(mu.to_vec())
        } else if s == 0 && deg % self.n as i64 == 0 {
            let shift = deg / self.n as i64;
            Some(mu.iter().map(|x| x + shift).collect())
        } else {
            None
        }
    }

    /// Root-lattice form ν − (N/n)(1,…,1), when N is divisible by n.
    pub fn lattice_weight(&self, gl: &[i64]) -> Option<Weight> {
        let deg = self.degree() as i64;
        (deg % self.n as i64 == 0).then(|| gl.iter().map(|x| x - deg / self.n as i64).collect())
    }

    /// (gl weight, multiplicity) in basis order.
    pub fn weights(&self) -> Vec<(Weight, usize)> {
        self.spaces
            .iter()
            .map(|(w, s)| (w.clone(), s.dim()))
            .collect()
    }

    pub fn multiplicity(&self, mu: &[i64]) -> usize {
        self.gl_weight(mu)
            .and_then(|w| self.spaces.get(&w))
            .map_or(0, Subspace::dim)
    }

    /// The weight space V(μ) as a coordinate subspace of the module.
    pub fn weight_space(&self, mu: &[i64]) -> Subspace {
        match self
            .gl_weight(mu)
            .and_then(|w| self.offsets.get(&w).map(|&o| (o, self.spaces[&w].dim())))
        {
            Some((o, d)) => Subspace::coordinate(self.dim, o..o + d),
            None => Subspace::zero(self.dim),
        }
    }

    /// Matrix of x ∈ gl_n acting on the module basis.
    pub fn rep(&self, x: &Matrix) -> Matrix {
        assert_eq!(x.rows(), self.n, "operator size differs from n");
        let mut m = Matrix::zeros(self.dim, self.dim);
        for (wt, space) in &self.spaces {
            let off = self.offsets[wt];
            for (k, b) in space.basis().iter().enumerate() {
                for (twt, tv) in self.tensor.apply(x, wt, b) {
                    let coords = self
                        .spaces
                        .get(&twt)
                        .and_then(|s| s.coords(&tv))
                        .expect("module is stable under gl_n");
                    let toff = self.offsets[&twt];
                    for (r, c) in coords.into_iter().enumerate() {
                        if !c.is_zero() {
                            m.set(toff + r, off + k, c);
                        }
                    }
                }
            }
        }
        m
    }
}

/// ⊗ over columns of λ of the alternating sums e_{σ(0)} ⊗ … ⊗ e_{σ(c−1)}.
fn highest_weight_vector(tensor: &TensorIndex, lambda: &[usize]) -> Vec<Rational> {
    let n = tensor.n;
    let width = lambda.first().copied().unwrap_or(0);
    let columns: Vec<usize> = (0..width)
        .map(|j| lambda.iter().filter(|&&r| r > j).count())
        .collect();
    // Terms as (letters, sign), built column by column.
    let mut terms: Vec<(Vec<usize>, i64)> = vec![(Vec::new(), 1)];
    for &c in &columns {
        let perms = signed_permutations(c);
        let mut next = Vec::with_capacity(terms.len() * perms.len());
        for (letters, sign) in &terms {
            for (p, s) in &perms {
                let mut l = letters.clone();
                l.extend(p.iter().copied());
                next.push((l, sign * s));
            }
        }
        terms = next;
    }
    let wt: Weight = lambda.iter().map(|&x| x as i64).collect();
    let len = tensor.block_len(&wt);
    let mut v = vec![Rational::zero(); len];
    for (letters, sign) in terms {
        let (w, k) = &tensor.place[&TensorIndex::word(n, &letters)];
        debug_assert_eq!(w, &wt);
        v[*k] += q(sign);
    }
    v
}

/// All permutations of 0..k with their signs, in lexicographic order.
pub fn signed_permutations(k: usize) -> Vec<(Vec<usize>, i64)> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = Vec::with_capacity(k);
    let mut used = vec![false; k];
    fn rec(k: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<(Vec<usize>, i64)>) {
        if cur.len() == k {
            let inversions = (0..k)
                .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
                .filter(|&(i, j)| cur[i] > cur[j])
                .count();
            out.push((cur.clone(), if inversions % 2 == 0 { 1 } else { -1 }));
            return;
        }
        for x in 0..k {
            if !used[x] {
                used[x] = true;
                cur.push(x);
                rec(k, cur, used, out);
                cur.pop();
                used[x] = false;
            }
        }
    }
    rec(k, &mut cur, &mut used, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions_match_weyl() {
        for (n, lam, d) in [
            (3, vec![1, 1, 1], 1),
            (3, vec![2, 1], 8),
            (3, vec![3], 10),
            (2, vec![2], 3),
            (4, vec![2, 1, 1], 15),
        ] {
            let v = WeightModule::realize(n, &lam).unwrap();
            assert_eq!(v.dim(), d, "{n} {lam:?}");
        }
    }

    #[test]
    fn rep_is_a_homomorphism() {
        let v = WeightModule::realize(3, &[2, 1]).unwrap();
        let a = Matrix::unit(3, 0, 1);
        let b = Matrix::unit(3, 1, 2);
        let lhs = v.rep(&a.commutator(&b));
        let rhs = v.rep(&a).commutator(&v.rep(&b));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn adjoint_zero_weight_has_multiplicity_two() {
        let v = WeightModule::realize(3, &[2, 1]).unwrap();
        assert_eq!(v.multiplicity(&[0, 0, 0]), 2);
        assert_eq!(v.weight_space(&[1, 1, 1]).dim(), 2);
        assert_eq!(v.multiplicity(&[1, 0, -1]), 1);
    }

    #[test]
    fn permutation_signs() {
        let p = signed_permutations(3);
        assert_eq!(p.len(), 6);
        assert_eq!(p.iter().map(|x| x.1).sum::<i64>(), 0);
    }
}
