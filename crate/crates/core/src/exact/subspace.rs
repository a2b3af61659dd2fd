use super::matrix::rref_in_place;
use super::{Matrix, Rational};
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("ambient dimension mismatch: {0} vs {1}")]
pub struct DimensionError(pub usize, pub usize);

/// Linear subspace of ℚ^ambient held in reduced row echelon form.
///
/// Equal subspaces have identical representations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self::coordinate(ambient, 0..ambient)
    }

    /// Span of the standard basis vectors with the given indices.
    pub fn coordinate(ambient: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let vecs = indices
            .into_iter()
            .map(|i| {
                let mut v = vec![Rational::zero(); ambient];
                v[i] = super::one();
                v
            })
            .collect();
        Self::from_vectors(ambient, vecs)
    }

    pub fn from_vectors(ambient: usize, mut vecs: Vec<Vec<Rational>>) -> Self {
        assert!(
            vecs.iter().all(|v| v.len() == ambient),
            "vector length != ambient"
        );
        let pivots = rref_in_place(&mut vecs, ambient);
        Subspace {
            ambient,
            basis: vecs,
            pivots,
        }
    }

    pub fn from_matrices(n: usize, mats: &[Matrix]) -> Self {
        Self::from_vectors(n * n, mats.iter().map(|m| m.flat().to_vec()).collect())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Basis vectors reshaped as n×n matrices.
    pub fn basis_matrices(&self, n: usize) -> Vec<Matrix> {
        assert_eq!(self.ambient, n * n);
        self.basis.iter().map(|v| Matrix::from_flat(n, v)).collect()
    }

    /// Coefficients of `v` in the echelon basis, or `None` when `v` is outside.
    pub fn coords(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(v.len(), self.ambient);
        let c: Vec<Rational> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut r = v.to_vec();
        for (b, coef) in self.basis.iter().zip(&c) {
            if coef.is_zero() {
                continue;
            }
            for (x, y) in r.iter_mut().zip(b) {
                if !y.is_zero() {
                    *x -= coef * y;
                }
            }
        }
        r.iter().all(Zero::is_zero).then_some(c)
    }

    /// v minus its echelon-coordinate reconstruction; zero iff v lies in the span.
    pub fn residual(&self, v: &[Rational]) -> Vec<Rational> {
        let mut r = v.to_vec();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            let coef = v[p].clone();
            if coef.is_zero() {
                continue;
            }
            for (x, y) in r.iter_mut().zip(b) {
                if !y.is_zero() {
                    *x -= &coef * y;
                }
            }
        }
        r
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.coords(v).is_some()
    }

    pub fn contains_space(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient mismatch");
        let mut vecs = self.basis.clone();
        vecs.extend(other.basis.iter().cloned());
        Subspace::from_vectors(self.ambient, vecs)
    }

    pub fn checked_intersect(&self, other: &Subspace) -> Result<Subspace, DimensionError> {
        if self.ambient != other.ambient {
            return Err(DimensionError(self.ambient, other.ambient));
        }
        // x ∈ b iff its residual against b's echelon basis vanishes.
        let (small, big) = if self.dim() <= other.dim() {
            (self, other)
        } else {
            (other, self)
        };
        Ok(small.kernel_of(|v| big.residual(v)))
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        self.checked_intersect(other).expect("ambient mismatch")
    }

    /// Orthogonal complement under the standard dot product.
    pub fn annihilator(&self) -> Subspace {
        if self.basis.is_empty() {
            return Subspace::full(self.ambient);
        }
        Matrix::from_rows(self.basis.clone()).kernel()
    }

    /// Image of the subspace under a linear map.
    pub fn map(&self, target_dim: usize, f: impl Fn(&[Rational]) -> Vec<Rational>) -> Subspace {
        Subspace::from_vectors(target_dim, self.basis.iter().map(|b| f(b)).collect())
    }

    /// {x ∈ self : f(x) = 0}.
    pub fn kernel_of(&self, f: impl Fn(&[Rational]) -> Vec<Rational>) -> Subspace {
        if self.basis.is_empty() {
            return self.clone();
        }
        let images: Vec<Vec<Rational>> = self.basis.iter().map(|b| f(b)).collect();
        let m = images[0].len();
        let cols = Matrix::from_fn(m, images.len(), |i, j| images[j][i].clone());
        let ker = cols.kernel();
        let vecs = ker.basis.iter().map(|c| self.combine(c)).collect();
        Subspace::from_vectors(self.ambient, vecs)
    }

    /// Rank of f restricted to this subspace.
    pub fn rank_of(&self, f: impl Fn(&[Rational]) -> Vec<Rational>) -> usize {
        if self.basis.is_empty() {
            return 0;
        }
        let images: Vec<Vec<Rational>> = self.basis.iter().map(|b| f(b)).collect();
        let m = images[0].len();
        Subspace::from_vectors(m, images).dim()
    }

    /// Σ c_k · basis_k.
    pub fn combine(&self, c: &[Rational]) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.ambient];
        for (coef, b) in c.iter().zip(&self.basis) {
            if coef.is_zero() {
                continue;
            }
            for (x, y) in v.iter_mut().zip(b) {
                if !y.is_zero() {
                    *x += coef * y;
                }
            }
        }
        v
    }

    /// Vectors from this space's echelon basis, scanned forward or in reverse,
    /// that extend `sub` to a basis of `self`.
    pub fn complement_of(&self, sub: &Subspace, reverse: bool) -> Vec<Vec<Rational>> {
        assert!(self.contains_space(sub), "complement_of: not a subspace");
        let mut acc = sub.clone();
        let mut out = Vec::new();
        let order: Vec<usize> = if reverse {
            (0..self.dim()).rev().collect()
        } else {
            (0..self.dim()).collect()
        };
        for k in order {
            if acc.dim() == self.dim() {
                break;
            }
            let v = &self.basis[k];
            if !acc.contains(v) {
                acc = acc.sum(&Subspace::from_vectors(self.ambient, vec![v.clone()]));
                out.push(v.clone());
            }
        }
        out
    }

    /// Restriction to a set of coordinates (projection).
    pub fn project(&self, coords: &[usize]) -> Subspace {
        let vecs = self
            .basis
            .iter()
            .map(|b| {
                let mut v = vec![Rational::zero(); self.ambient];
                for &c in coords {
                    v[c] = b[c].clone();
                }
                v
            })
            .collect();
        Subspace::from_vectors(self.ambient, vecs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::q;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| q(x)).collect()
    }

    #[test]
    fn intersect_is_idempotent() {
        let a = Subspace::from_vectors(4, vec![v(&[1, 2, 0, 1]), v(&[0, 1, 1, 0])]);
        assert_eq!(a.intersect(&a), a);
    }

    #[test]
    fn complementary_coordinate_planes_meet_in_zero() {
        let a = Subspace::coordinate(4, [0, 1]);
        let b = Subspace::coordinate(4, [2, 3]);
        assert_eq!(a.intersect(&b).dim(), 0);
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let a = Subspace::full(3);
        let b = Subspace::full(4);
        assert_eq!(a.checked_intersect(&b), Err(DimensionError(3, 4)));
    }

    #[test]
    fn two_hyperplanes_in_four_space() {
        let a = Subspace::from_vectors(
            4,
            vec![v(&[1, 0, 0, 1]), v(&[0, 1, 0, 0]), v(&[0, 0, 1, 0])],
        );
        let b = Subspace::from_vectors(
            4,
            vec![v(&[1, 0, 0, 0]), v(&[0, 1, 1, 0]), v(&[0, 0, 0, 1])],
        );
        let i = a.intersect(&b);
        assert!(i.dim() >= 2);
        assert_eq!(i.dim() + a.sum(&b).dim(), a.dim() + b.dim());
    }

    #[test]
    fn coords_reconstruct_vector() {
        let a = Subspace::from_vectors(3, vec![v(&[1, 1, 0]), v(&[0, 2, 1])]);
        let x = v(&[2, 4, 1]);
        let c = a.coords(&x).expect("inside");
        assert_eq!(a.combine(&c), x);
        assert!(a.coords(&v(&[0, 0, 1])).is_none());
    }

    #[test]
    fn complement_extends_to_full_space() {
        let a = Subspace::full(3);
        let sub = Subspace::from_vectors(3, vec![v(&[1, 1, 1])]);
        for rev in [false, true] {
            let c = a.complement_of(&sub, rev);
            assert_eq!(c.len(), 2);
            let mut all = sub.basis().to_vec();
            all.extend(c);
            assert_eq!(Subspace::from_vectors(3, all).dim(), 3);
        }
    }
}
