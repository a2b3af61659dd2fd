use super::SemisimplePair;
use crate::exact::{Matrix, Rational, Subspace};
use crate::{Error, Result};
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;
use std::collections::BTreeMap;

pub type Bidegree = (i64, i64);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Ambient {
    Gl,
    Sl,
}

/// Trace-zero matrices in row-major n² coordinates.
pub fn trace_zero(n: usize) -> Subspace {
    Subspace::from_matrices(n, &[Matrix::identity(n)]).annihilator()
}

/// [A, X] for X given by its row-major coordinates.
pub fn bracket(a: &Matrix, x: &[Rational]) -> Vec<Rational> {
    let n = a.rows();
    let xm = Matrix::from_flat(n, x);
    a.commutator(&xm).flat().to_vec()
}

/// (ad h₁, ad h₂)-bidegrees of the matrix units E_ij = (h₁ᵢ − h₁ⱼ, h₂ᵢ − h₂ⱼ).
#[derive(Clone, Debug)]
pub struct Grading {
    n: usize,
    degrees: Vec<Bidegree>,
    blocks: BTreeMap<Bidegree, Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiGradedDecomposition {
    pub ambient: String,
    pub components: BTreeMap<Bidegree, Subspace>,
}

impl BiGradedDecomposition {
    pub fn dims(&self) -> BTreeMap<Bidegree, usize> {
        self.components
            .iter()
            .filter(|(_, s)| s.dim() > 0)
            .map(|(&k, s)| (k, s.dim()))
            .collect()
    }

    pub fn dim(&self, d: Bidegree) -> usize {
        self.components.get(&d).map_or(0, Subspace::dim)
    }

    pub fn total_dim(&self) -> usize {
        self.components.values().map(Subspace::dim).sum()
    }

    /// Bidegrees repeated by dimension, sorted.
    pub fn multiset(&self) -> Vec<Bidegree> {
        self.dims()
            .into_iter()
            .flat_map(|(k, d)| std::iter::repeat_n(k, d))
            .collect()
    }
}

impl Serialize for BiGradedDecomposition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<(i64, i64, usize)> = self
            .dims()
            .into_iter()
            .map(|((p, q), d)| (p, q, d))
            .collect();
        #[derive(Serialize)]
        struct Out<'a> {
            ambient: &'a str,
            dims: Vec<(i64, i64, usize)>,
        }
        Out {
            ambient: &self.ambient,
            dims: rows,
        }
        .serialize(s)
    }
}

impl Grading {
    pub fn new(h: &SemisimplePair) -> Result<Self> {
        if !h.is_integral() {
            return Err(Error::Precondition(
                "grading pair has non-integral root values".into(),
            ));
        }
        let n = h.n();
        let int = |x: Rational| x.to_integer().to_i64().expect("small degree");
        let mut degrees = Vec::with_capacity(n * n);
        let mut blocks: BTreeMap<Bidegree, Vec<usize>> = BTreeMap::new();
        for i in 0..n {
            for j in 0..n {
                let d = (int(&h.h1[i] - &h.h1[j]), int(&h.h2[i] - &h.h2[j]));
                blocks.entry(d).or_default().push(i * n + j);
                degrees.push(d);
            }
        }
        Ok(Grading { n, degrees, blocks })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree_of(&self, i: usize, j: usize) -> Bidegree {
        self.degrees[i * self.n + j]
    }

    /// Bidegrees carrying at least one matrix unit.
    pub fn support(&self) -> impl Iterator<Item = Bidegree> + '_ {
        self.blocks.keys().copied()
    }

    /// Box containing the support: (min p, max p, min q, max q).
    pub fn bounds(&self) -> (i64, i64, i64, i64) {
        let ps = self.blocks.keys().map(|k| k.0);
        let qs = self.blocks.keys().map(|k| k.1);
        (
            ps.clone().min().unwrap_or(0),
            ps.max().unwrap_or(0),
            qs.clone().min().unwrap_or(0),
            qs.max().unwrap_or(0),
        )
    }

    pub fn coords(&self, d: Bidegree) -> &[usize] {
        self.blocks.get(&d).map_or(&[], Vec::as_slice)
    }

    /// g_{p,q}; in sl the (0,0) block is cut down to trace zero.
    pub fn block(&self, d: Bidegree, ambient: Ambient) -> Subspace {
        let s = Subspace::coordinate(self.n * self.n, self.coords(d).iter().copied());
        if ambient == Ambient::Sl && d == (0, 0) {
            s.intersect(&trace_zero(self.n))
        } else {
            s
        }
    }

    pub fn block_dim(&self, d: Bidegree, ambient: Ambient) -> usize {
        let k = self.coords(d).len();
        if ambient == Ambient::Sl && d == (0, 0) && k > 0 {
            k - 1
        } else {
            k
        }
    }

    /// Sum of the blocks whose bidegree satisfies `pred`.
    pub fn region(&self, pred: impl Fn(Bidegree) -> bool, ambient: Ambient) -> Subspace {
        let mut s = Subspace::zero(self.n * self.n);
        for &d in self.blocks.keys() {
            if pred(d) {
                s = s.sum(&self.block(d, ambient));
            }
        }
        s
    }

    /// Generating polynomial Σ dim g_{p,q} s^p t^q.
    pub fn dims(&self, ambient: Ambient) -> BTreeMap<Bidegree, usize> {
        self.blocks
            .keys()
            .map(|&d| (d, self.block_dim(d, ambient)))
            .filter(|&(_, k)| k > 0)
            .collect()
    }

    /// Bidegree of a homogeneous vector, if it is homogeneous and nonzero.
    pub fn degree_of_vector(&self, v: &[Rational]) -> Option<Bidegree> {
        let mut deg = None;
        for (k, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            match deg {
                None => deg = Some(self.degrees[k]),
                Some(d) if d != self.degrees[k] => return None,
                _ => {}
            }
        }
        deg
    }

    /// Projection onto the coordinates of bidegree d.
    pub fn component(&self, v: &[Rational], d: Bidegree) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); v.len()];
        for &k in self.coords(d) {
            out[k] = v[k].clone();
        }
        out
    }

    /// Splits an (ad h₁, ad h₂)-stable space into its bihomogeneous pieces.
    pub fn bigrade(&self, space: &Subspace, label: &str) -> Result<BiGradedDecomposition> {
        let mut components = BTreeMap::new();
        let mut total = 0;
        for (&d, coords) in &self.blocks {
            let piece = space.project(coords);
            if !space.contains_space(&piece) {
                return Err(Error::Stability(format!(
                    "{label} is not stable under the grading (component {d:?})"
                )));
            }
            total += piece.dim();
            if piece.dim() > 0 {
                components.insert(d, piece);
            }
        }
        if total != space.dim() {
            return Err(Error::Internal("bigraded pieces do not add up".into()));
        }
        Ok(BiGradedDecomposition {
            ambient: label.to_string(),
            components,
        })
    }

    /// Ker(ad x) ∩ g_{p,q}.
    pub fn block_kernel(&self, d: Bidegree, ambient: Ambient, xs: &[&Matrix]) -> Subspace {
        self.block(d, ambient)
            .kernel_of(|v| xs.iter().flat_map(|x| bracket(x, v)).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::parse;
    use crate::nilpairs::{build_pair, centralizer};

    #[test]
    fn hook_gl_dims() {
        let (_, h) = build_pair(&parse("2,1").unwrap()).unwrap();
        let g = Grading::new(&h).unwrap();
        let dims = g.dims(Ambient::Gl);
        assert_eq!(dims[&(0, 0)], 3);
        for d in [(1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1)] {
            assert_eq!(dims[&d], 1, "{d:?}");
        }
        assert_eq!(dims.values().sum::<usize>(), 9);
    }

    #[test]
    fn hook_centralizer_grading() {
        let (p, h) = build_pair(&parse("2,1").unwrap()).unwrap();
        let g = Grading::new(&h).unwrap();
        let dec = g.bigrade(&centralizer(&p, Ambient::Sl), "z").unwrap();
        assert_eq!(dec.multiset(), vec![(0, 1), (1, 0)]);
    }

    #[test]
    fn zero_grading_is_one_block() {
        let h = SemisimplePair::new(vec![Rational::zero(); 3], vec![Rational::zero(); 3]).unwrap();
        let g = Grading::new(&h).unwrap();
        let dec = g.bigrade(&Subspace::full(9), "gl").unwrap();
        assert_eq!(
            dec.dims().into_iter().collect::<Vec<_>>(),
            vec![((0, 0), 9)]
        );
    }

    #[test]
    fn unstable_space_is_rejected() {
        let (_, h) = build_pair(&parse("2,1").unwrap()).unwrap();
        let g = Grading::new(&h).unwrap();
        let v: Vec<Rational> = (0..9)
            .map(|k| {
                if k == 1 || k == 3 {
                    crate::exact::q(1)
                } else {
                    Rational::zero()
                }
            })
            .collect();
        let s = Subspace::from_vectors(9, vec![v]);
        assert!(matches!(g.bigrade(&s, "x"), Err(Error::Stability(_))));
    }
}
