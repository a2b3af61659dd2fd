//! The Koszul complex g_{p−1,q−1} → g_{p,q−1} ⊕ g_{p−1,q} → g_{p,q} of a graded pair,
//! its cohomology H_{p,q}, generating-function identities and the partial slices.

use crate::diagrams::{Diagram, ShapeClass};
use crate::exact::{BivariatePoly, Matrix, Rational, Subspace};
use crate::nilpairs::{
    bracket, build_pair, centralizer, centralizer_of, classify, Ambient, BiGradedDecomposition,
    Bidegree, Grading, NilPair, PairClass, SemisimplePair,
};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;
use std::collections::BTreeMap;

const SL: Ambient = Ambient::Sl;

/// Which bidegrees count as the nw and se quadrants of H.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Convention {
    /// nw: p < 0 ≤ q; se: q < 0 ≤ p.
    Literal,
    /// nw: p ≤ 0 < q; se: q ≤ 0 < p. The axes p = 0 and q = 0 carry cohomology in general.
    HalfOpen,
}

impl Convention {
    pub fn in_nw(self, (p, q): Bidegree) -> bool {
        match self {
            Convention::Literal => p < 0 && q >= 0,
            Convention::HalfOpen => p <= 0 && q > 0,
        }
    }

    pub fn in_se(self, (p, q): Bidegree) -> bool {
        self.in_nw((q, p))
    }

    pub fn contains(self, quadrant: Quadrant, d: Bidegree) -> bool {
        match quadrant {
            Quadrant::Nw => self.in_nw(d),
            Quadrant::Se => self.in_se(d),
        }
    }
}

fn require_principal(pair: &NilPair, h: &SemisimplePair) -> Result<Grading> {
    let c = classify(pair, Some(h));
    if c.class != PairClass::Principal {
        return Err(Error::Classification(format!(
            "pair is {}: {}",
            c.class.label(),
            c.reason
        )));
    }
    Grading::new(h)
}

fn concat(a: Vec<Rational>, b: Vec<Rational>) -> Vec<Rational> {
    let mut v = a;
    v.extend(b);
    v
}

fn split(v: &[Rational], m: usize) -> (&[Rational], &[Rational]) {
    v.split_at(m)
}

fn sub_vec(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct H1Entry {
    pub dim: usize,
    /// Representing cocycles (y, z) ∈ g_{p,q−1} ⊕ g_{p−1,q}, concatenated row-major.
    #[serde(skip)]
    pub cocycles: Subspace,
}

#[derive(Clone, Debug)]
pub struct H1Table {
    pub entries: BTreeMap<Bidegree, H1Entry>,
}

impl H1Table {
    pub fn dim(&self, d: Bidegree) -> usize {
        self.entries.get(&d).map_or(0, |e| e.dim)
    }

    pub fn total(&self) -> usize {
        self.entries.values().map(|e| e.dim).sum()
    }

    pub fn dims(&self) -> Vec<(i64, i64, usize)> {
        self.entries
            .iter()
            .filter(|(_, e)| e.dim > 0)
            .map(|(&(p, q), e)| (p, q, e.dim))
            .collect()
    }

    /// Bidegrees with p·q ≥ 0 carrying cohomology.
    pub fn support_violations(&self) -> Vec<Bidegree> {
        self.dims()
            .into_iter()
            .filter(|&(p, q, _)| p * q >= 0)
            .map(|(p, q, _)| (p, q))
            .collect()
    }

    pub fn poly(&self) -> BivariatePoly {
        let mut out = BivariatePoly::zero();
        for (p, q, d) in self.dims() {
            out.add_term(p, q, BigInt::from(d));
        }
        out
    }
}

/// Bidegrees where some term of the complex can be nonzero.
fn complex_range(g: &Grading) -> Vec<Bidegree> {
    let (p0, p1, q0, q1) = g.bounds();
    let mut out = Vec::new();
    for p in p0..=p1 + 1 {
        for q in q0..=q1 + 1 {
            out.push((p, q));
        }
    }
    out
}

pub fn h1(pair: &NilPair, h: &SemisimplePair) -> Result<H1Table> {
    let g = require_principal(pair, h)?;
    h1_graded(pair, &g)
}

fn h1_graded(pair: &NilPair, g: &Grading) -> Result<H1Table> {
    let n2 = pair.n * pair.n;
    let mut entries = BTreeMap::new();
    for (p, q) in complex_range(g) {
        let a = g.block((p, q - 1), SL);
        let b = g.block((p - 1, q), SL);
        if a.is_zero() && b.is_zero() {
            continue;
        }
        let middle = Subspace::from_vectors(
            2 * n2,
            a.basis()
                .iter()
                .map(|v| concat(v.clone(), vec![Rational::zero(); n2]))
                .chain(
                    b.basis()
                        .iter()
                        .map(|v| concat(vec![Rational::zero(); n2], v.clone())),
                )
                .collect(),
        );
        // ∂''(y, z) = [e₂, y] − [e₁, z]
        let ker = middle.kernel_of(|v| {
            let (y, z) = split(v, n2);
            sub_vec(&bracket(&pair.e2, y), &bracket(&pair.e1, z))
        });
        // ∂'(x) = ([e₁, x], [e₂, x])
        let im = g.block((p - 1, q - 1), SL).map(2 * n2, |x| {
            concat(bracket(&pair.e1, x), bracket(&pair.e2, x))
        });
        if !ker.contains_space(&im) {
            return Err(Error::Internal(format!("∂''∂' != 0 at {:?}", (p, q))));
        }
        let reps = ker.complement_of(&im, false);
        let dim = ker.dim() - im.dim();
        entries.insert(
            (p, q),
            H1Entry {
                dim,
                cocycles: Subspace::from_vectors(2 * n2, reps),
            },
        );
    }
    Ok(H1Table { entries })
}

fn z_block(g: &Grading, d: Bidegree, e: &Matrix) -> Subspace {
    g.block_kernel(d, SL, &[e])
}

/// dim Coker(ad e₁ : z_{p−1,q−1}(e₂) → z_{p,q−1}(e₂)).
pub fn coker_nw(pair: &NilPair, g: &Grading, p: i64, q: i64) -> usize {
    let tgt = z_block(g, (p, q - 1), &pair.e2);
    let src = z_block(g, (p - 1, q - 1), &pair.e2);
    tgt.dim() - src.rank_of(|v| bracket(&pair.e1, v))
}

/// dim Coker(ad e₂ : z_{p−1,q−1}(e₁) → z_{p−1,q}(e₁)).
pub fn coker_se(pair: &NilPair, g: &Grading, p: i64, q: i64) -> usize {
    let tgt = z_block(g, (p - 1, q), &pair.e1);
    let src = z_block(g, (p - 1, q - 1), &pair.e1);
    tgt.dim() - src.rank_of(|v| bracket(&pair.e2, v))
}

#[derive(Clone, Debug, Serialize)]
pub struct CokerReport {
    pub holds: bool,
    /// (p, q, dim H_{p,q}, cokernel dimension) where they differ.
    pub failures: Vec<(i64, i64, usize, usize)>,
}

/// H_{p,q} against the nw cokernel on the nw quadrant and the se cokernel on the se quadrant.
pub fn verify_coker_formulas(
    pair: &NilPair,
    h: &SemisimplePair,
    convention: Convention,
) -> Result<CokerReport> {
    let g = require_principal(pair, h)?;
    let table = h1_graded(pair, &g)?;
    let mut failures = Vec::new();
    for (p, q) in complex_range(&g) {
        let expected = if convention.in_nw((p, q)) {
            coker_nw(pair, &g, p, q)
        } else if convention.in_se((p, q)) {
            coker_se(pair, &g, p, q)
        } else {
            continue;
        };
        let got = table.dim((p, q));
        if got != expected {
            failures.push((p, q, got, expected));
        }
    }
    Ok(CokerReport {
        holds: failures.is_empty(),
        failures,
    })
}

/// Σ dim(space_{p,q}) s^p t^q.
fn dims_poly(dims: &BTreeMap<Bidegree, usize>) -> BivariatePoly {
    let mut out = BivariatePoly::zero();
    for (&(p, q), &d) in dims {
        out.add_term(p, q, BigInt::from(d));
    }
    out
}

/// (α(h₁), α(h₂)) for every root α = εᵢ − εⱼ, i ≠ j.
fn root_values(g: &Grading) -> Vec<Bidegree> {
    let n = g.n();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                out.push(g.degree_of(i, j));
            }
        }
    }
    out
}

/// A product of factors (1 − s^i t^j) over another such product.
#[derive(Clone, Debug, Default, Serialize)]
pub struct FactorRatio {
    pub numerator: Vec<Bidegree>,
    pub denominator: Vec<Bidegree>,
}

impl FactorRatio {
    fn push(&mut self, num: &[Bidegree], den: &[Bidegree]) {
        self.numerator.extend_from_slice(num);
        self.denominator.extend_from_slice(den);
    }

    fn polys(&self) -> (BivariatePoly, BivariatePoly) {
        let prod = |fs: &[Bidegree]| {
            fs.iter().fold(BivariatePoly::one(), |acc, &(i, j)| {
                &acc * &BivariatePoly::one_minus(i, j)
            })
        };
        (prod(&self.numerator), prod(&self.denominator))
    }

    fn zero_denominator(&self) -> bool {
        self.denominator.contains(&(0, 0))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityCheck {
    pub holds: bool,
    /// Why the identity cannot even be evaluated, when that is the case.
    pub ill_defined: Option<String>,
}

/// lhs = rhs as rational functions, tested as lhs.num·rhs.den = rhs.num·lhs.den.
fn compare_ratios(lhs: &FactorRatio, rhs: &FactorRatio) -> IdentityCheck {
    for (side, r) in [("left", lhs), ("right", rhs)] {
        if r.zero_denominator() {
            return IdentityCheck {
                holds: false,
                ill_defined: Some(format!(
                    "{side} side has the factor 1 − s^0 t^0 = 0 in a denominator"
                )),
            };
        }
    }
    let (ln, ld) = lhs.polys();
    let (rn, rd) = rhs.polys();
    IdentityCheck {
        holds: &ln * &rd == &rn * &ld,
        ill_defined: None,
    }
}

/// The root factor ((1 − s^{a+1}t^{b+1})(1 − s^a t^b)) / ((1 − s^{a+1}t^b)(1 − s^a t^{b+1})).
fn root_factor(a: i64, b: i64) -> ([Bidegree; 2], [Bidegree; 2]) {
    ([(a + 1, b + 1), (a, b)], [(a + 1, b), (a, b + 1)])
}

fn exponent_side(exps: &[Bidegree], den_power: usize) -> FactorRatio {
    let mut r = FactorRatio::default();
    for &(p, q) in exps {
        r.numerator.push((p + 1, q + 1));
    }
    r.denominator.extend(std::iter::repeat_n((1, 1), den_power));
    r
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityReport {
    pub g_poly: BivariatePoly,
    pub z_poly: BivariatePoly,
    pub h_poly: BivariatePoly,
    pub lemma63: bool,
    pub d1: usize,
    pub d2: usize,
    pub prop613: bool,
    pub prop614: IdentityCheck,
    /// Same left side; roots on the axes a = 0 or b = 0 use the telescoped factors
    /// (1 − s t^{b+1})/(1 − s t^b) and (1 − s^{a+1} t)/(1 − s^a t).
    pub prop614_axis_corrected: IdentityCheck,
    /// Over R_nw and the nw classes with the quadrant p < 0 ≤ q.
    pub prop614nw: IdentityCheck,
    /// Same identity with the quadrant p ≤ 0 < q.
    pub prop614nw_half_open: IdentityCheck,
    pub classical_specialization: Option<bool>,
}

pub fn generating_identities(pair: &NilPair, h: &SemisimplePair) -> Result<IdentityReport> {
    let g = require_principal(pair, h)?;
    let table = h1_graded(pair, &g)?;
    let z_dec = g.bigrade(&centralizer(pair, SL), "centralizer")?;
    let g_poly = dims_poly(&g.dims(SL));
    let z_poly = dims_poly(&z_dec.dims());
    let h_poly = table.poly();

    let st = BivariatePoly::monomial(1, 1, 1);
    let sm1 = &BivariatePoly::s() - &BivariatePoly::one();
    let tm1 = &BivariatePoly::t() - &BivariatePoly::one();
    let rhs63 = &(&(&st * &z_poly) + &z_poly.invert()) - &(&(&sm1 * &tm1) * &g_poly);
    let lemma63 = rhs63 == h_poly;

    let roots = root_values(&g);
    let d1 = roots.iter().filter(|&&(a, b)| b == 0 && a > 0).count();
    let d2 = roots.iter().filter(|&&(a, b)| a == 0 && b > 0).count();
    let exps = z_dec.multiset();
    let sum_p: i64 = exps.iter().map(|e| e.0).sum();
    let sum_q: i64 = exps.iter().map(|e| e.1).sum();
    let prop613 = sum_p == d1 as i64 && sum_q == d2 as i64;

    let r = exps.len();
    let ne: Vec<Bidegree> = roots
        .iter()
        .copied()
        .filter(|&(a, b)| a >= 0 && b >= 0 && (a, b) != (0, 0))
        .collect();
    let mut stated = FactorRatio::default();
    let mut corrected = FactorRatio::default();
    for &(a, b) in &ne {
        let (num, den) = root_factor(a, b);
        stated.push(&num, &den);
        if a == 0 {
            corrected.push(&[(1, b + 1)], &[(1, b)]);
        } else if b == 0 {
            corrected.push(&[(a + 1, 1)], &[(a, 1)]);
        } else {
            corrected.push(&num, &den);
        }
    }
    let lhs = exponent_side(&exps, r);
    let prop614 = compare_ratios(&lhs, &stated);
    let prop614_axis_corrected = compare_ratios(&lhs, &corrected);

    let nw_identity = |conv: Convention| {
        let nw_exps = quadrant_exponents(&table, Quadrant::Nw, conv);
        let mut nw_rhs = FactorRatio::default();
        for &ab in roots.iter().filter(|&&ab| conv.in_nw(ab)) {
            let (num, den) = root_factor(ab.0, ab.1);
            nw_rhs.push(&num, &den);
        }
        compare_ratios(&exponent_side(&nw_exps, nw_exps.len()), &nw_rhs)
    };
    let prop614nw = nw_identity(Convention::Literal);
    let prop614nw_half_open = nw_identity(Convention::HalfOpen);

    // (e, 0): t = 1 of the corrected form against Π(1 − t^{m+1})/(1 − t) = Π(1 − t^{ht+1})/(1 − t^{ht}).
    let classical_specialization = (pair.e2.is_zero()).then(|| {
        let (ln, ld) = lhs.polys();
        let (rn, rd) = corrected.polys();
        let at_t1 = |p: &BivariatePoly| {
            let mut out = BivariatePoly::zero();
            for (&(i, _), c) in p.terms() {
                out.add_term(0, i, c.clone());
            }
            out
        };
        let mut cl = FactorRatio::default();
        for &(m, _) in &exps {
            cl.push(&[(0, m + 1)], &[(0, 1)]);
        }
        let mut cr = FactorRatio::default();
        for &(a, _) in &ne {
            cr.push(&[(0, a + 1)], &[(0, a)]);
        }
        let (cln, cld) = cl.polys();
        let (crn, crd) = cr.polys();
        // Only the (1 − st)^r denominators vanish at s = t = 1; compare the reduced classical forms
        // and check that the specialization of the corrected identity is consistent with them.
        let corrected_ok = &at_t1(&ln) * &at_t1(&rd) == &at_t1(&rn) * &at_t1(&ld);
        corrected_ok && &cln * &crd == &crn * &cld
    });

    Ok(IdentityReport {
        g_poly,
        z_poly,
        h_poly,
        lemma63,
        d1,
        d2,
        prop613,
        prop614,
        prop614_axis_corrected,
        prop614nw,
        prop614nw_half_open,
        classical_specialization,
    })
}

fn quadrant_exponents(table: &H1Table, quadrant: Quadrant, conv: Convention) -> Vec<Bidegree> {
    let mut out = Vec::new();
    for (p, q, d) in table.dims() {
        if conv.contains(quadrant, (p, q)) {
            out.extend(std::iter::repeat_n((p, q), d));
        }
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct HigherExponents {
    pub convention: Convention,
    pub nw: Vec<Bidegree>,
    pub se: Vec<Bidegree>,
    /// dim H_{p,q} = dim H_{1−p,1−q} on every bidegree.
    pub duality_shifted: bool,
    /// dim H_{p,q} = dim H_{−p,−q} on every bidegree.
    pub duality_negated: bool,
    /// Coker(z_{p−1,q−1}(e₂) → z_{p,q−1}(e₂)) against Coker(z_{−p,−q}(e₁) → z_{−p,−q+1}(e₁)).
    pub coker_pairing: bool,
}

pub fn higher_biexponents(
    pair: &NilPair,
    h: &SemisimplePair,
    convention: Convention,
) -> Result<HigherExponents> {
    let g = require_principal(pair, h)?;
    let table = h1_graded(pair, &g)?;
    let nw = quadrant_exponents(&table, Quadrant::Nw, convention);
    let se = quadrant_exponents(&table, Quadrant::Se, convention);
    let dims = table.dims();
    let duality_shifted = dims.iter().all(|&(p, q, d)| table.dim((1 - p, 1 - q)) == d);
    let duality_negated = dims.iter().all(|&(p, q, d)| table.dim((-p, -q)) == d);
    let coker_pairing = complex_range(&g).into_iter().all(|(p, q)| {
        let left = coker_nw(pair, &g, p, q);
        let t = z_block(&g, (-p, -q + 1), &pair.e1);
        let s = z_block(&g, (-p, -q), &pair.e1);
        left == t.dim() - s.rank_of(|v| bracket(&pair.e2, v))
    });
    Ok(HigherExponents {
        convention,
        nw,
        se,
        duality_shifted,
        duality_negated,
        coker_pairing,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Quadrant {
    Nw,
    Se,
}

#[derive(Clone, Debug, Serialize)]
pub struct SliceElement {
    /// Cohomological bidegree (p, q) of the class it represents.
    pub h_degree: Bidegree,
    /// Bidegree of the matrix itself.
    pub degree: Bidegree,
    #[serde(skip)]
    pub matrix: Matrix,
}

#[derive(Clone, Debug, Serialize)]
pub struct SliceBasis {
    pub quadrant: Quadrant,
    pub convention: Convention,
    pub rule: &'static str,
    pub elements: Vec<SliceElement>,
}

/// S_{p,q} ⊂ z_{p,q−1}(e₂) complementary to ad e₁ z_{p−1,q−1}(e₂) (nw), or
/// S_{p,q} ⊂ z_{p−1,q}(e₁) complementary to ad e₂ z_{p−1,q−1}(e₁) (se).
/// (p, q) ranges over the quadrant picked by `convention`.
pub fn slice(
    pair: &NilPair,
    h: &SemisimplePair,
    quadrant: Quadrant,
    convention: Convention,
    reverse: bool,
) -> Result<SliceBasis> {
    let g = require_principal(pair, h)?;
    slice_graded(pair, &g, quadrant, convention, reverse)
}

fn slice_graded(
    pair: &NilPair,
    g: &Grading,
    quadrant: Quadrant,
    convention: Convention,
    reverse: bool,
) -> Result<SliceBasis> {
    let n = pair.n;
    let mut elements = Vec::new();
    for (p, q) in complex_range(g) {
        let (tdeg, acting, kernel_of) = match quadrant {
            Quadrant::Nw => ((p, q - 1), &pair.e1, &pair.e2),
            Quadrant::Se => ((p - 1, q), &pair.e2, &pair.e1),
        };
        if !convention.contains(quadrant, (p, q)) {
            continue;
        }
        let target = z_block(g, tdeg, kernel_of);
        if target.is_zero() {
            continue;
        }
        let image = z_block(g, (p - 1, q - 1), kernel_of).map(n * n, |v| bracket(acting, v));
        if !target.contains_space(&image) {
            return Err(Error::Internal(format!(
                "image leaves the centralizer block at {tdeg:?}"
            )));
        }
        for v in target.complement_of(&image, reverse) {
            elements.push(SliceElement {
                h_degree: (p, q),
                degree: tdeg,
                matrix: Matrix::from_flat(n, &v),
            });
        }
    }
    let rule = if reverse {
        "reverse echelon complement"
    } else {
        "echelon complement"
    };
    Ok(SliceBasis {
        quadrant,
        convention,
        rule,
        elements,
    })
}

/// (x₁, x₂) for the slice point e + s.
fn slice_point(pair: &NilPair, quadrant: Quadrant, s: &Matrix) -> (Matrix, Matrix) {
    match quadrant {
        Quadrant::Nw => (pair.e1.add(s), pair.e2.clone()),
        Quadrant::Se => (pair.e1.clone(), pair.e2.add(s)),
    }
}

/// Each basis element, all pairwise sums, and the full sum.
pub fn slice_samples(basis: &SliceBasis) -> Vec<Matrix> {
    let m = &basis.elements;
    let mut out: Vec<Matrix> = m.iter().map(|e| e.matrix.clone()).collect();
    for i in 0..m.len() {
        for j in i + 1..m.len() {
            out.push(m[i].matrix.add(&m[j].matrix));
        }
    }
    if m.len() > 2 {
        out.push(
            m.iter()
                .skip(1)
                .fold(m[0].matrix.clone(), |acc, e| acc.add(&e.matrix)),
        );
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct SamplePointReport {
    pub commuting: bool,
    pub dim_centralizer: usize,
    pub regular: bool,
    /// Symbols σ(z(x) ∩ g_{≤p,q}) ⊂ g_{p,q} lie in z_{p,q}(e) and have its dimension, for all (p,q).
    pub graded_dims_match: bool,
    /// z(x) ∩ g_{p≤0, q≤0} = 0.
    pub avoids_nonpositive: bool,
    /// z(x) ∩ (g_{p≤0} + g_{q≤0}) = 0; fails already at x = e when z(e) meets an axis.
    pub avoids_union: bool,
}

fn check_point(
    pair: &NilPair,
    g: &Grading,
    z_e: &BiGradedDecomposition,
    x: (Matrix, Matrix),
) -> SamplePointReport {
    let n = pair.n;
    let commuting = x.0.commutator(&x.1).is_zero();
    let zx = centralizer_of(&[&x.0, &x.1], n, SL);
    // zx ⊂ sl, so intersecting with gl regions is the same as with sl regions.
    let mut graded_dims_match = true;
    for d in g.support() {
        let f = zx.intersect(&g.region(|k| k.0 <= d.0 && k.1 <= d.1, Ambient::Gl));
        let symbols = f.map(n * n, |v| g.component(v, d));
        let target = z_e
            .components
            .get(&d)
            .cloned()
            .unwrap_or_else(|| Subspace::zero(n * n));
        if symbols != target {
            graded_dims_match = false;
            break;
        }
    }
    let avoids_nonpositive = zx
        .intersect(&g.region(|d| d.0 <= 0 && d.1 <= 0, Ambient::Gl))
        .is_zero();
    let avoids_union = zx
        .intersect(&g.region(|d| d.0 <= 0 || d.1 <= 0, Ambient::Gl))
        .is_zero();
    SamplePointReport {
        commuting,
        dim_centralizer: zx.dim(),
        regular: zx.dim() == n - 1,
        graded_dims_match,
        avoids_nonpositive,
        avoids_union,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RecipeCheck {
    pub count: usize,
    /// The matrices as built, before removing their scalar part.
    /// Every class degree (a+1, b) lies in the se quadrant p ≥ 0 > q.
    pub literal_se: bool,
    /// Every class degree lies in the se quadrant p > 0 ≥ q.
    pub half_open_se: bool,
    pub traceless: bool,
    pub in_centralizer: bool,
    pub complements_images: bool,
}

impl RecipeCheck {
    pub fn valid(&self) -> bool {
        self.in_centralizer && self.complements_images
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SliceReport {
    pub quadrant: Quadrant,
    pub convention: Convention,
    pub count: usize,
    pub count_reverse: usize,
    pub reverse_dims_agree: bool,
    pub samples: usize,
    pub all_commuting: bool,
    pub all_regular: bool,
    pub graded_dims_match: bool,
    pub avoids_nonpositive: bool,
    pub points: Vec<SamplePointReport>,
}

impl SliceReport {
    /// Count n − 1, choice-independent degrees, and every sampled point a regular commuting pair.
    pub fn passes(&self, rank: usize) -> bool {
        self.count == rank && self.reverse_dims_agree && self.all_commuting && self.all_regular
    }
}

fn degree_counts(b: &SliceBasis) -> BTreeMap<Bidegree, usize> {
    let mut m = BTreeMap::new();
    for e in &b.elements {
        *m.entry(e.h_degree).or_insert(0) += 1;
    }
    m
}

fn report_for(
    pair: &NilPair,
    g: &Grading,
    quadrant: Quadrant,
    convention: Convention,
) -> Result<SliceReport> {
    let fwd = slice_graded(pair, g, quadrant, convention, false)?;
    let rev = slice_graded(pair, g, quadrant, convention, true)?;
    let z_e = g.bigrade(&centralizer(pair, SL), "centralizer")?;
    let mut points: Vec<SamplePointReport> = Vec::new();
    for basis in [&fwd, &rev] {
        for s in slice_samples(basis) {
            points.push(check_point(pair, g, &z_e, slice_point(pair, quadrant, &s)));
        }
    }
    Ok(SliceReport {
        quadrant,
        convention,
        count: fwd.elements.len(),
        count_reverse: rev.elements.len(),
        reverse_dims_agree: degree_counts(&fwd) == degree_counts(&rev),
        samples: points.len(),
        all_commuting: points.iter().all(|p| p.commuting),
        all_regular: points.iter().all(|p| p.regular),
        graded_dims_match: points.iter().all(|p| p.graded_dims_match),
        avoids_nonpositive: points.iter().all(|p| p.avoids_nonpositive),
        points,
    })
}

/// Both quadrants, forward and reverse complements, and the sampled slice points.
pub fn slice_reports(
    pair: &NilPair,
    h: &SemisimplePair,
    convention: Convention,
) -> Result<(SliceReport, SliceReport)> {
    let g = require_principal(pair, h)?;
    Ok((
        report_for(pair, &g, Quadrant::Nw, convention)?,
        report_for(pair, &g, Quadrant::Se, convention)?,
    ))
}

/// Which box of the top row the recipe leaves out.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RecipeExclusion {
    /// (0, q_top), the top box of the first column.
    TopLeft,
    /// The right end of the top row; its matrix is the identity on that row.
    TopRight,
}

/// The explicit f_ν(p,q) matrices for a Young diagram, each with its bidegree.
pub fn young_se_recipe(d: &Diagram, exclusion: RecipeExclusion) -> Result<Vec<(Bidegree, Matrix)>> {
    if d.classify() != ShapeClass::Young {
        return Err(Error::Precondition(format!(
            "{} is not a Young diagram",
            d.to_spec()
        )));
    }
    let n = d.len();
    let cells = d.boxes();
    let qmax = |p: i64| {
        cells
            .iter()
            .filter(|c| c.0 == p)
            .map(|c| c.1)
            .max()
            .expect("column")
    };
    let pmax = |q: i64| {
        cells
            .iter()
            .filter(|c| c.1 == q)
            .map(|c| c.0)
            .max()
            .expect("row")
    };
    let q_top = qmax(0);
    let skip = match exclusion {
        RecipeExclusion::TopLeft => (0, q_top),
        RecipeExclusion::TopRight => (pmax(q_top), q_top),
    };
    let mut out = Vec::new();
    for &(p, q) in cells {
        if (p, q) == skip {
            continue;
        }
        let top = qmax(p);
        let right = pmax(q);
        let shift = (right - p, q - top);
        let mut m = Matrix::zeros(n, n);
        for i in 0..=p {
            let (Some(col), Some(row)) = (d.index_of((i, top)), d.index_of((right - p + i, q)))
            else {
                return Err(Error::Internal("recipe box outside the diagram".into()));
            };
            m.set(row, col, crate::exact::q(1));
        }
        out.push((shift, m));
    }
    Ok(out)
}

/// Whether the recipe matrices form a valid se complement system.
pub fn check_young_se_recipe(d: &Diagram, exclusion: RecipeExclusion) -> Result<RecipeCheck> {
    let recipe = young_se_recipe(d, exclusion)?;
    let (pair, h) = build_pair(d)?;
    let g = Grading::new(&h)?;
    let n = pair.n;
    let traceless = recipe.iter().all(|(_, m)| m.trace().is_zero());
    let in_centralizer = recipe.iter().all(|(_, m)| pair.e1.commutator(m).is_zero());
    // gl modulo scalars is sl: compare the traceless parts.
    let nq = crate::exact::q(n as i64);
    let mut by_degree: BTreeMap<Bidegree, Vec<Matrix>> = BTreeMap::new();
    for (deg, m) in &recipe {
        let scalar = Matrix::identity(n).scale(&(m.trace() / &nq));
        by_degree.entry(*deg).or_default().push(m.sub(&scalar));
    }
    let mut complements_images = true;
    // Matrix degree (a, b) represents the se class in H_{a+1, b}.
    let literal_se = by_degree
        .keys()
        .all(|&(a, b)| Convention::Literal.in_se((a + 1, b)));
    let half_open_se = by_degree
        .keys()
        .all(|&(a, b)| Convention::HalfOpen.in_se((a + 1, b)));
    for (&(a, b), mats) in &by_degree {
        let target = z_block(&g, (a, b), &pair.e1);
        let image = z_block(&g, (a, b - 1), &pair.e1).map(n * n, |v| bracket(&pair.e2, v));
        let span = Subspace::from_matrices(n, mats);
        let ok = span.dim() == mats.len()
            && span.intersect(&image).is_zero()
            && span.sum(&image) == target;
        complements_images &= ok;
    }
    Ok(RecipeCheck {
        count: recipe.len(),
        literal_se,
        half_open_se,
        traceless,
        in_centralizer,
        complements_images,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::parse;

    fn pair(spec: &str) -> (NilPair, SemisimplePair) {
        build_pair(&parse(spec).unwrap()).unwrap()
    }

    #[test]
    fn hook_cohomology_sits_on_the_axes_too() {
        let (p, h) = pair("2,1");
        let t = h1(&p, &h).unwrap();
        assert_eq!(t.dims(), vec![(-1, 2, 1), (0, 1, 1), (1, 0, 1), (2, -1, 1)]);
        assert_eq!(t.total(), 4);
        assert_eq!(t.support_violations(), vec![(0, 1), (1, 0)]);
        for conv in [Convention::Literal, Convention::HalfOpen] {
            assert!(verify_coker_formulas(&p, &h, conv).unwrap().holds);
        }
        let lit = higher_biexponents(&p, &h, Convention::Literal).unwrap();
        assert_eq!(lit.nw, vec![(-1, 2)]);
        let half = higher_biexponents(&p, &h, Convention::HalfOpen).unwrap();
        assert_eq!(half.nw, vec![(-1, 2), (0, 1)]);
        assert_eq!(half.se, vec![(1, 0), (2, -1)]);
        assert!(half.duality_shifted && !half.duality_negated && half.coker_pairing);
    }

    #[test]
    fn hook_identities() {
        let (p, h) = pair("2,1");
        let r = generating_identities(&p, &h).unwrap();
        assert_eq!(r.z_poly, &BivariatePoly::s() + &BivariatePoly::t());
        assert!(r.lemma63);
        assert_eq!(r.d1, 1);
        assert!(r.prop613);
        assert!(!r.prop614.holds);
        assert!(r.prop614_axis_corrected.holds);
        assert!(r.prop614nw.ill_defined.is_some());
    }

    #[test]
    fn single_row_total_is_twice_rank() {
        let (p, h) = pair("3");
        let t = h1(&p, &h).unwrap();
        assert_eq!(t.total(), 4);
        assert!(
            verify_coker_formulas(&p, &h, Convention::Literal)
                .unwrap()
                .holds
        );
        let r = generating_identities(&p, &h).unwrap();
        assert_eq!(r.classical_specialization, Some(true));
    }

    #[test]
    fn hook_slices() {
        let (p, h) = pair("2,1");
        let (nw, se) = slice_reports(&p, &h, Convention::HalfOpen).unwrap();
        assert!(nw.passes(2), "{nw:?}");
        assert!(se.passes(2), "{se:?}");
        let (nw, _) = slice_reports(&p, &h, Convention::Literal).unwrap();
        assert_eq!(nw.count, 1);
    }

    #[test]
    fn hook_recipe_is_valid_off_the_literal_quadrant() {
        let r = check_young_se_recipe(&parse("2,1").unwrap(), RecipeExclusion::TopLeft).unwrap();
        assert_eq!(r.count, 2);
        assert!(r.valid() && r.half_open_se && !r.literal_se, "{r:?}");
    }
}
