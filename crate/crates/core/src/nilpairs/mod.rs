//! Commuting nilpotent pairs e = (e₁, e₂) in gl_n, their grading pairs, centralizers
//! and classification.

mod checks;
mod grading;
mod limits;

pub use checks::{
    centralizer_surjectivity_check, claim58_check, kernel_product_check, killing_pairing_check,
    monomial_basis_check, parabolic_checks, positive_quadrant_support, weak_lefschetz_report,
    BidegreeCheck, Claim58Report, LefschetzEntry, LefschetzReport, ParabolicReport,
};
pub use grading::{bracket, trace_zero, Ambient, BiGradedDecomposition, Bidegree, Grading};
pub use limits::{grassmann_limit, limit_space, module_limit_check, ModuleLimitReport};

use crate::diagrams::{self, Cell, Diagram};
use crate::exact::{fmt_rational, q, Matrix, Rational, Subspace};
use crate::{Error, Result};
use num_traits::Zero;
use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Provenance {
    /// Basis vectors labelled by `boxes`, in this order.
    Diagram {
        spec: String,
        boxes: Vec<Cell>,
    },
    DirectSum {
        parts: Vec<String>,
        boxes: Vec<Cell>,
    },
    Custom,
}

impl Provenance {
    pub fn boxes(&self) -> Option<&[Cell]> {
        match self {
            Provenance::Diagram { boxes, .. } | Provenance::DirectSum { boxes, .. } => Some(boxes),
            Provenance::Custom => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NilPair {
    pub n: usize,
    pub e1: Matrix,
    pub e2: Matrix,
    pub provenance: Provenance,
}

/// Diagonal pair (h₁, h₂), stored as the two diagonals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemisimplePair {
    pub h1: Vec<Rational>,
    pub h2: Vec<Rational>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PairClass {
    Principal,
    Distinguished,
    NilPair,
    Invalid,
}

impl PairClass {
    pub fn label(self) -> &'static str {
        match self {
            PairClass::Principal => "principal",
            PairClass::Distinguished => "distinguished",
            PairClass::NilPair => "nil_pair",
            PairClass::Invalid => "invalid",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Classification {
    pub class: PairClass,
    pub reason: String,
    pub n: usize,
    pub rank: usize,
    pub dim_centralizer_sl: Option<usize>,
    pub nil_centralizer: Option<bool>,
    pub h_regular: Option<bool>,
    pub h_integral: Option<bool>,
}

fn entry_list(m: &Matrix) -> Vec<(usize, usize, String)> {
    let mut out = Vec::new();
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            let x = m.get(i, j);
            if !x.is_zero() {
                out.push((i, j, fmt_rational(x)));
            }
        }
    }
    out
}

#[derive(Serialize)]
struct PairJson<'a> {
    n: usize,
    e1: Vec<(usize, usize, String)>,
    e2: Vec<(usize, usize, String)>,
    h1: Option<Vec<String>>,
    h2: Option<Vec<String>>,
    provenance: &'a Provenance,
}

impl NilPair {
    pub fn new(e1: Matrix, e2: Matrix) -> Result<Self> {
        if !e1.is_square() || e1.rows() != e2.rows() || e1.cols() != e2.cols() {
            return Err(Error::Precondition(
                "e1, e2 must be square of equal size".into(),
            ));
        }
        Ok(NilPair {
            n: e1.rows(),
            e1,
            e2,
            provenance: Provenance::Custom,
        })
    }

    pub fn commutes(&self) -> bool {
        self.e1.commutator(&self.e2).is_zero()
    }

    pub fn is_nilpotent(&self) -> bool {
        self.e1.is_nilpotent() && self.e2.is_nilpotent()
    }

    /// The swapped pair (e₂, e₁) with box coordinates transposed.
    pub fn swapped(&self) -> NilPair {
        let provenance = match &self.provenance {
            Provenance::Diagram { spec, boxes } => Provenance::Diagram {
                spec: format!("transpose({spec})"),
                boxes: boxes.iter().map(|&(p, q)| (q, p)).collect(),
            },
            Provenance::DirectSum { parts, boxes } => Provenance::DirectSum {
                parts: parts.iter().map(|s| format!("transpose({s})")).collect(),
                boxes: boxes.iter().map(|&(p, q)| (q, p)).collect(),
            },
            Provenance::Custom => Provenance::Custom,
        };
        NilPair {
            n: self.n,
            e1: self.e2.clone(),
            e2: self.e1.clone(),
            provenance,
        }
    }

    pub fn to_json(&self, h: Option<&SemisimplePair>) -> serde_json::Value {
        let diag = |v: &[Rational]| v.iter().map(fmt_rational).collect::<Vec<_>>();
        let j = PairJson {
            n: self.n,
            e1: entry_list(&self.e1),
            e2: entry_list(&self.e2),
            h1: h.map(|h| diag(&h.h1)),
            h2: h.map(|h| diag(&h.h2)),
            provenance: &self.provenance,
        };
        serde_json::to_value(j).expect("pair serializes")
    }
}

impl SemisimplePair {
    pub fn new(h1: Vec<Rational>, h2: Vec<Rational>) -> Result<Self> {
        if h1.len() != h2.len() {
            return Err(Error::Precondition("h1, h2 length mismatch".into()));
        }
        Ok(SemisimplePair { h1, h2 })
    }

    pub fn from_cells(cells: &[Cell]) -> Self {
        SemisimplePair {
            h1: cells.iter().map(|c| q(c.0)).collect(),
            h2: cells.iter().map(|c| q(c.1)).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.h1.len()
    }

    pub fn h1_matrix(&self) -> Matrix {
        Matrix::diagonal(&self.h1)
    }

    pub fn h2_matrix(&self) -> Matrix {
        Matrix::diagonal(&self.h2)
    }

    /// κᵢ = Tr(hᵢ)/n; hᵢ − κᵢ·1 is the sl_n representative.
    pub fn trace_shift(&self) -> (Rational, Rational) {
        let n = Rational::from_integer(self.n().into());
        let s1: Rational = self.h1.iter().sum();
        let s2: Rational = self.h2.iter().sum();
        (s1 / &n, s2 / n)
    }

    /// Joint centralizer is the diagonal Cartan: all value pairs distinct.
    pub fn is_regular(&self) -> bool {
        let mut seen = std::collections::BTreeSet::new();
        self.h1.iter().zip(&self.h2).all(|pair| seen.insert(pair))
    }

    /// Every root value α(hᵢ) is an integer.
    pub fn is_integral(&self) -> bool {
        let ok = |v: &[Rational]| v.iter().all(|x| (x - &v[0]).is_integer());
        self.n() == 0 || (ok(&self.h1) && ok(&self.h2))
    }

    /// [hᵢ, eⱼ] = δᵢⱼ·eⱼ for diagonal hᵢ.
    pub fn is_associated_to(&self, pair: &NilPair) -> bool {
        if self.n() != pair.n {
            return false;
        }
        let check = |h: &[Rational], e: &Matrix, target: i64| {
            (0..pair.n)
                .all(|r| (0..pair.n).all(|c| e.get(r, c).is_zero() || &h[r] - &h[c] == q(target)))
        };
        check(&self.h1, &pair.e1, 1)
            && check(&self.h2, &pair.e1, 0)
            && check(&self.h1, &pair.e2, 0)
            && check(&self.h2, &pair.e2, 1)
    }
}

pub(crate) fn pair_from_cells(cells: &[Cell], provenance: Provenance) -> (NilPair, SemisimplePair) {
    let n = cells.len();
    let index: BTreeMap<Cell, usize> = cells.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let mut e1 = Matrix::zeros(n, n);
    let mut e2 = Matrix::zeros(n, n);
    for (col, &(p, qq)) in cells.iter().enumerate() {
        if let Some(&row) = index.get(&(p + 1, qq)) {
            e1.set(row, col, q(1));
        }
        if let Some(&row) = index.get(&(p, qq + 1)) {
            e2.set(row, col, q(1));
        }
    }
    let h = SemisimplePair::from_cells(cells);
    (
        NilPair {
            n,
            e1,
            e2,
            provenance,
        },
        h,
    )
}

/// e_λ and its box-coordinate grading pair.
pub fn build_pair(d: &Diagram) -> Result<(NilPair, SemisimplePair)> {
    let class = d.classify();
    if !class.is_pm_skew() {
        return Err(Error::Shape(format!(
            "{} is {class}, not a ±skew shape",
            d.to_spec()
        )));
    }
    let provenance = Provenance::Diagram {
        spec: d.to_spec(),
        boxes: d.boxes().to_vec(),
    };
    let (pair, h) = pair_from_cells(d.boxes(), provenance);
    if !pair.commutes() {
        return Err(Error::Internal(format!(
            "e1, e2 do not commute for {}",
            d.to_spec()
        )));
    }
    Ok((pair, h))
}

/// Block sum of ±skew pairs; blocks are placed diagonally apart so that
/// the box labels stay distinct and no arrows connect different blocks.
pub fn direct_sum(parts: &[Diagram]) -> Result<(NilPair, SemisimplePair)> {
    if parts.is_empty() {
        return Err(Error::Parse("empty direct sum".into()));
    }
    let mut cells = Vec::new();
    let (mut dp, mut dq) = (0, 0);
    for d in parts {
        let class = d.classify();
        if !class.is_pm_skew() {
            return Err(Error::Shape(format!("summand {} is {class}", d.to_spec())));
        }
        cells.extend(d.boxes().iter().map(|&(p, qq)| (p + dp, qq + dq)));
        dp += d.width() + 1;
        dq += d.height() + 1;
    }
    let provenance = Provenance::DirectSum {
        parts: parts.iter().map(Diagram::to_spec).collect(),
        boxes: cells.clone(),
    };
    Ok(pair_from_cells(&cells, provenance))
}

/// Parses `D` or `D₁ + D₂ + …` in diagram syntax.
pub fn parse_pair(spec: &str) -> Result<(NilPair, SemisimplePair)> {
    let parts: Vec<Diagram> = spec
        .split('+')
        .map(diagrams::parse)
        .collect::<Result<_>>()?;
    if parts.len() == 1 {
        build_pair(&parts[0])
    } else {
        direct_sum(&parts)
    }
}

/// Simultaneous centralizer of a family of matrices.
pub fn centralizer_of(mats: &[&Matrix], n: usize, ambient: Ambient) -> Subspace {
    let ads: Vec<Matrix> = mats.iter().map(|m| m.ad_matrix()).collect();
    let stacked = Matrix::vstack(&ads.iter().collect::<Vec<_>>());
    let z = if mats.is_empty() {
        Subspace::full(n * n)
    } else {
        stacked.kernel()
    };
    match ambient {
        Ambient::Gl => z,
        Ambient::Sl => z.intersect(&trace_zero(n)),
    }
}

pub fn centralizer(pair: &NilPair, ambient: Ambient) -> Subspace {
    centralizer_of(&[&pair.e1, &pair.e2], pair.n, ambient)
}

/// Associative (non-unital) closure of a set of matrices.
pub fn associative_closure(n: usize, gens: &[Matrix]) -> Subspace {
    let mut span = Subspace::from_matrices(n, gens);
    loop {
        let basis = span.basis_matrices(n);
        let mut vecs: Vec<Vec<Rational>> = span.basis().to_vec();
        for a in &basis {
            for g in gens {
                vecs.push(a.mul(g).flat().to_vec());
            }
        }
        let next = Subspace::from_vectors(n * n, vecs);
        if next.dim() == span.dim() {
            return span;
        }
        span = next;
    }
}

/// Every element of the algebra generated by z_sl(e) is nilpotent.
/// In characteristic 0 this holds iff every element of the closure is traceless.
pub fn centralizer_is_nil(pair: &NilPair) -> bool {
    let z = centralizer(pair, Ambient::Sl).basis_matrices(pair.n);
    associative_closure(pair.n, &z)
        .basis_matrices(pair.n)
        .iter()
        .all(|m| m.trace().is_zero())
}

pub fn centralizer_is_abelian(pair: &NilPair) -> bool {
    let z = centralizer(pair, Ambient::Gl).basis_matrices(pair.n);
    z.iter()
        .enumerate()
        .all(|(i, a)| z[i + 1..].iter().all(|b| a.commutator(b).is_zero()))
}

pub fn classify(pair: &NilPair, h: Option<&SemisimplePair>) -> Classification {
    let rank = pair.n.saturating_sub(1);
    let mut out = Classification {
        class: PairClass::Invalid,
        reason: String::new(),
        n: pair.n,
        rank,
        dim_centralizer_sl: None,
        nil_centralizer: None,
        h_regular: None,
        h_integral: None,
    };
    if !pair.commutes() {
        out.reason = "[e1,e2] != 0".into();
        return out;
    }
    if !pair.is_nilpotent() {
        out.reason = "e1 or e2 is not nilpotent".into();
        return out;
    }
    let Some(h) = h else {
        out.reason = "no grading pair supplied".into();
        return out;
    };
    if !h.is_associated_to(pair) {
        out.reason = "supplied (h1,h2) violates [hi,ej] = δij ej".into();
        return out;
    }
    let dim = centralizer(pair, Ambient::Sl).dim();
    out.dim_centralizer_sl = Some(dim);
    out.h_regular = Some(h.is_regular());
    out.h_integral = Some(h.is_integral());
    if dim == rank && h.is_integral() {
        out.class = PairClass::Principal;
        out.reason = "dim z_sl(e) = rank".into();
        return out;
    }
    let nil = centralizer_is_nil(pair);
    out.nil_centralizer = Some(nil);
    if nil && h.is_regular() {
        out.class = PairClass::Distinguished;
        out.reason = "z(e) consists of nilpotents and h is regular".into();
    } else {
        out.class = PairClass::NilPair;
        out.reason = if nil {
            "grading pair is not regular".into()
        } else {
            "z(e) contains a non-nilpotent element".into()
        };
    }
    out
}

/// Bi-exponents: bidegrees of a bihomogeneous basis of z_sl(e), sorted.
pub fn biexponents(pair: &NilPair, h: &SemisimplePair) -> Result<Vec<Bidegree>> {
    let c = classify(pair, Some(h));
    if c.class != PairClass::Principal {
        return Err(Error::Classification(format!(
            "pair is {}: {}",
            c.class.label(),
            c.reason
        )));
    }
    raw_biexponents(pair, h)
}

/// Bigraded support of z_sl(e) with multiplicity, without any class requirement.
pub fn raw_biexponents(pair: &NilPair, h: &SemisimplePair) -> Result<Vec<Bidegree>> {
    let g = Grading::new(h)?;
    let z = centralizer(pair, Ambient::Sl);
    let dec = g.bigrade(&z, "centralizer")?;
    Ok(dec.multiset())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::parse;

    #[test]
    fn single_row_is_jordan_block() {
        let (p, h) = build_pair(&parse("3").unwrap()).unwrap();
        assert_eq!(
            p.e1,
            Matrix::from_i64(&[vec![0, 0, 0], vec![1, 0, 0], vec![0, 1, 0]])
        );
        assert!(p.e2.is_zero());
        assert_eq!(h.h1, vec![q(0), q(1), q(2)]);
    }

    #[test]
    fn hook_pair() {
        let (p, h) = build_pair(&parse("2,1").unwrap()).unwrap();
        assert_eq!(p.e1, Matrix::unit(3, 1, 0));
        assert_eq!(p.e2, Matrix::unit(3, 2, 0));
        assert_eq!(h.h2, vec![q(0), q(0), q(1)]);
        assert_eq!(centralizer(&p, Ambient::Sl).dim(), 2);
        assert_eq!(centralizer(&p, Ambient::Gl).dim(), 3);
        assert_eq!(classify(&p, Some(&h)).class, PairClass::Principal);
        assert_eq!(biexponents(&p, &h).unwrap(), vec![(0, 1), (1, 0)]);
    }

    #[test]
    fn disconnected_is_rejected() {
        let d = parse("(0,0);(2,0)").unwrap();
        assert!(matches!(build_pair(&d), Err(Error::Shape(_))));
    }

    #[test]
    fn strict_skew_is_distinguished() {
        let (p, h) = build_pair(&parse("3,2/1").unwrap()).unwrap();
        let c = classify(&p, Some(&h));
        assert_eq!(c.class, PairClass::Distinguished);
        assert!(c.dim_centralizer_sl.unwrap() > 3);
    }

    #[test]
    fn two_hooks_are_not_distinguished() {
        let (p, h) = parse_pair("2,1 + 2,1").unwrap();
        assert_eq!(p.n, 6);
        assert_eq!(classify(&p, Some(&h)).class, PairClass::NilPair);
    }

    #[test]
    fn missing_grading_is_invalid() {
        let (p, _) = build_pair(&parse("2,1").unwrap()).unwrap();
        assert_eq!(classify(&p, None).class, PairClass::Invalid);
        let bad = NilPair::new(Matrix::unit(2, 0, 1), Matrix::unit(2, 1, 0)).unwrap();
        assert_eq!(classify(&bad, None).class, PairClass::Invalid);
    }
}
