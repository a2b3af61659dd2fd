use super::{Rational, Subspace};
use num_traits::{One, Zero};
use serde::Serialize;
use std::fmt;

/// Dense matrix of exact rationals, row-major.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    #[serde(serialize_with = "serialize_entries")]
    data: Vec<Rational>,
}

fn serialize_entries<S: serde::Serializer>(data: &[Rational], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(data.iter().map(super::fmt_rational))
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Rational::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| super::q(x)).collect())
                .collect(),
        )
    }

    /// Square matrix from a row-major vector of length n².
    pub fn from_flat(n: usize, v: &[Rational]) -> Self {
        assert_eq!(v.len(), n * n);
        Matrix {
            rows: n,
            cols: n,
            data: v.to_vec(),
        }
    }

    pub fn diagonal(d: &[Rational]) -> Self {
        let n = d.len();
        let mut m = Matrix::zeros(n, n);
        for (i, x) in d.iter().enumerate() {
            m.data[i * n + i] = x.clone();
        }
        m
    }

    /// The matrix unit E_ij of size n.
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        m.data[i * n + j] = Rational::one();
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Rational) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn flat(&self) -> &[Rational] {
        &self.data
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    pub fn diag(&self) -> Vec<Rational> {
        (0..self.rows.min(self.cols))
            .map(|i| self.get(i, i).clone())
            .collect()
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = Rational::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += a * b;
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a - b)
            .collect();
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn scale(&self, c: &Rational) -> Matrix {
        let data = self.data.iter().map(|a| a * c).collect();
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols)).fold(Rational::zero(), |acc, i| acc + self.get(i, i))
    }

    /// [self, other] = self·other − other·self.
    pub fn commutator(&self, other: &Matrix) -> Matrix {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn pow(&self, k: u32) -> Matrix {
        assert!(self.is_square());
        let mut out = Matrix::identity(self.rows);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Nilpotent iff self^n = 0.
    pub fn is_nilpotent(&self) -> bool {
        self.is_square() && self.pow(self.rows as u32).is_zero()
    }

    pub fn rank(&self) -> usize {
        let mut rows: Vec<Vec<Rational>> = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        rref_in_place(&mut rows, self.cols).len()
    }

    /// Reduced row echelon form together with its pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut rows: Vec<Vec<Rational>> = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        let pivots = rref_in_place(&mut rows, self.cols);
        rows.resize(self.rows, vec![Rational::zero(); self.cols]);
        let m = if self.rows == 0 {
            Matrix::zeros(0, self.cols)
        } else {
            Matrix::from_rows(rows)
        };
        (m, pivots)
    }

    /// Exact null space {v : self·v = 0}.
    pub fn kernel(&self) -> Subspace {
        let mut rows: Vec<Vec<Rational>> = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        let pivots = rref_in_place(&mut rows, self.cols);
        let mut is_pivot = vec![None; self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            is_pivot[c] = Some(r);
        }
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free].is_some() {
                continue;
            }
            let mut v = vec![Rational::zero(); self.cols];
            v[free] = Rational::one();
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = -rows[r][free].clone();
            }
            basis.push(v);
        }
        Subspace::from_vectors(self.cols, basis)
    }

    /// Determinant by fraction-tracking elimination.
    pub fn det(&self) -> Rational {
        assert!(self.is_square());
        let n = self.rows;
        let mut a: Vec<Vec<Rational>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut det = Rational::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
                return Rational::zero();
            };
            if p != col {
                a.swap(p, col);
                det = -det;
            }
            let piv = a[col][col].clone();
            det *= &piv;
            for r in col + 1..n {
                if a[r][col].is_zero() {
                    continue;
                }
                let f = &a[r][col] / &piv;
                // r > col, so the pivot row lies in `top`.
                let (top, bottom) = a.split_at_mut(r);
                for (x, y) in bottom[0][col..].iter_mut().zip(&top[col][col..]) {
                    *x -= &f * y;
                }
            }
        }
        det
    }

    /// Stacks matrices with equal column counts vertically.
    pub fn vstack(parts: &[&Matrix]) -> Matrix {
        let cols = parts.first().map_or(0, |m| m.cols);
        assert!(parts.iter().all(|m| m.cols == cols));
        let data = parts.iter().flat_map(|m| m.data.iter().cloned()).collect();
        Matrix {
            rows: parts.iter().map(|m| m.rows).sum(),
            cols,
            data,
        }
    }

    /// Block-diagonal sum.
    pub fn block_diag(parts: &[&Matrix]) -> Matrix {
        let r: usize = parts.iter().map(|m| m.rows).sum();
        let c: usize = parts.iter().map(|m| m.cols).sum();
        let mut out = Matrix::zeros(r, c);
        let (mut r0, mut c0) = (0, 0);
        for m in parts {
            for i in 0..m.rows {
                for j in 0..m.cols {
                    out.set(r0 + i, c0 + j, m.get(i, j).clone());
                }
            }
            r0 += m.rows;
            c0 += m.cols;
        }
        out
    }

    /// Matrix of the linear map X ↦ [self, X] on row-major n² coordinates.
    pub fn ad_matrix(&self) -> Matrix {
        let n = self.rows;
        let mut out = Matrix::zeros(n * n, n * n);
        // [A, E_kl] = Σ_i A_ik E_il − Σ_j A_lj E_kj
        for k in 0..n {
            for l in 0..n {
                let col = k * n + l;
                for i in 0..n {
                    let a = self.get(i, k);
                    if !a.is_zero() {
                        out.data[(i * n + l) * n * n + col] += a;
                    }
                }
                for j in 0..n {
                    let a = self.get(l, j);
                    if !a.is_zero() {
                        out.data[(k * n + j) * n * n + col] -= a;
                    }
                }
            }
        }
        out
    }
}

/// In-place Gauss–Jordan elimination; drops zero rows and returns pivot columns.
pub(crate) fn rref_in_place(rows: &mut Vec<Vec<Rational>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        if !inv.is_one() {
            for x in rows[r][c..].iter_mut() {
                if !x.is_zero() {
                    *x *= &inv;
                }
            }
        }
        let (head, tail) = rows.split_at_mut(r);
        let (pivot_row, below) = tail.split_first_mut().expect("pivot row exists");
        for other in head.iter_mut().chain(below.iter_mut()) {
            if other[c].is_zero() {
                continue;
            }
            let f = other[c].clone();
            for (x, y) in other[c..].iter_mut().zip(&pivot_row[c..]) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(super::fmt_rational).collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::q;

    #[test]
    fn kernel_of_zero_identity_and_jordan_block() {
        assert_eq!(Matrix::zeros(3, 3).kernel().dim(), 3);
        assert_eq!(Matrix::identity(3).kernel().dim(), 0);
        let j3 = Matrix::from_i64(&[vec![0, 1, 0], vec![0, 0, 1], vec![0, 0, 0]]);
        assert_eq!(j3.kernel().dim(), 1);
        assert_eq!(j3.rank(), 2);
    }

    #[test]
    fn ad_matrix_agrees_with_commutator() {
        let a = Matrix::from_i64(&[vec![1, 2, 0], vec![0, -1, 3], vec![4, 0, 2]]);
        let x = Matrix::from_i64(&[vec![0, 1, 5], vec![2, 0, 0], vec![1, 1, -3]]);
        let direct = a.commutator(&x);
        let via = a.ad_matrix().mul_vec(x.flat());
        assert_eq!(direct.flat(), via.as_slice());
    }

    #[test]
    fn determinant_matches_small_cases() {
        let m = Matrix::from_i64(&[vec![2, 1], vec![7, 4]]);
        assert_eq!(m.det(), q(1));
        let s = Matrix::from_i64(&[vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 3]]);
        assert_eq!(s.det(), q(-3));
    }
}
