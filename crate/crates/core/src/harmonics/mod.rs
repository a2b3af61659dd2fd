//! Alternants in ℚ[u₁..uₙ, v₁..vₙ], the double Vandermonde Δ_e of a Young diagram,
//! its harmonicity and W×W-span, and the induced-character statement about W¹, W².
//!
//! Variables u_i have index i, variables v_i have index n + i. A permutation w of {0..n−1}
//! acts diagonally by u_i ↦ u_{w(i)}, v_i ↦ v_{w(i)}.

pub mod symmetric;

use crate::diagrams::Diagram;
use crate::exact::{factorial, fmt_rational, MultivariatePoly, Rational};
use crate::multiplicity::{root_data, signed_permutations, PositiveRule, RootClass, RootData};
use crate::nilpairs::{build_pair, SemisimplePair};
use crate::{Error, Result};
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};
use symmetric::{class_representative, conjugate, kostka, CharacterTable, Partition};

fn ser_rationals<S: Serializer>(v: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(fmt_rational))
}

fn ser_opt_rational<S: Serializer>(
    r: &Option<Rational>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match r {
        Some(r) => s.serialize_some(&fmt_rational(r)),
        None => s.serialize_none(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Alternant {
    pub n: usize,
    pub bidegree: (u32, u32),
    pub poly: MultivariatePoly,
}

/// Variable map for (w₁ on u, w₂ on v).
fn action(w1: &[usize], w2: &[usize]) -> Vec<usize> {
    let n = w1.len();
    w1.iter()
        .copied()
        .chain(w2.iter().map(|&j| n + j))
        .collect()
}

pub fn act(p: &MultivariatePoly, w1: &[usize], w2: &[usize]) -> MultivariatePoly {
    p.permute_vars(&action(w1, w2))
}

fn linear_form(x: &[Rational], offset: usize, nvars: usize) -> MultivariatePoly {
    let mut p = MultivariatePoly::zero(nvars);
    for (i, c) in x.iter().enumerate() {
        let mut e = vec![0; nvars];
        e[offset + i] = 1;
        p.add_term(e, c.clone());
    }
    p
}

/// Σ_w ε(w) ⟨w(x₁),u⟩^{d₁}⟨w(x₂),v⟩^{d₂} / (d₁! d₂!).
pub fn alternant(x1: &[Rational], x2: &[Rational], d1: u32, d2: u32) -> Alternant {
    let n = x1.len();
    assert_eq!(x2.len(), n, "x₁ and x₂ have different lengths");
    let nv = 2 * n;
    let base = &linear_form(x1, 0, nv).pow(d1) * &linear_form(x2, n, nv).pow(d2);
    let norm = Rational::from_integer(factorial(d1) * factorial(d2));
    let mut poly = MultivariatePoly::zero(nv);
    for (w, sign) in signed_permutations(n) {
        let t = act(&base, &w, &w);
        poly = if sign > 0 { &poly + &t } else { &poly - &t };
    }
    Alternant {
        n,
        bidegree: (d1, d2),
        poly: poly.scale(&(Rational::one() / norm)),
    }
}

/// det(u_i^{a_j} v_i^{b_j}) over the boxes (a_j, b_j).
pub fn box_determinant(d: &Diagram) -> MultivariatePoly {
    let boxes = d.boxes();
    let n = boxes.len();
    let mut poly = MultivariatePoly::zero(2 * n);
    for (w, sign) in signed_permutations(n) {
        let mut e = vec![0u32; 2 * n];
        for (j, &(a, b)) in boxes.iter().enumerate() {
            e[w[j]] = a as u32;
            e[n + w[j]] = b as u32;
        }
        poly.add_term(e, Rational::from_integer(sign.into()));
    }
    poly
}

fn young_pair(d: &Diagram) -> Result<(SemisimplePair, RootData)> {
    if !d.is_young() {
        return Err(Error::Precondition(format!(
            "{} is not a Young diagram",
            d.to_spec()
        )));
    }
    let (_, h) = build_pair(d)?;
    let rd = root_data(&h, PositiveRule::Standard)?;
    Ok((h, rd))
}

/// (𝐝₁, 𝐝₂) = (#R₊¹, #R₊²).
pub fn top_bidegree(rd: &RootData) -> (u32, u32) {
    (
        rd.count(RootClass::Plus1) as u32,
        rd.count(RootClass::Plus2) as u32,
    )
}

#[derive(Clone, Debug, Serialize)]
pub struct DeltaE {
    pub diagram: String,
    pub alternant: Alternant,
    pub determinant: MultivariatePoly,
    /// c with alternant = c · determinant.
    #[serde(serialize_with = "ser_opt_rational")]
    pub ratio: Option<Rational>,
    /// (Σ a_j, Σ b_j) over the boxes.
    pub box_sums: (u32, u32),
}

impl DeltaE {
    pub fn proportional(&self) -> bool {
        self.ratio.is_some()
    }
}

/// Δ_e = Δ_h(𝐝₁, 𝐝₂) together with the box determinant it is compared against.
pub fn delta_e(d: &Diagram) -> Result<DeltaE> {
    let (h, rd) = young_pair(d)?;
    let (d1, d2) = top_bidegree(&rd);
    let alt = alternant(&h.h1, &h.h2, d1, d2);
    let det = box_determinant(d);
    let ratio = alt.poly.ratio_to(&det);
    let box_sums = d
        .boxes()
        .iter()
        .fold((0, 0), |(a, b), &(p, q)| (a + p as u32, b + q as u32));
    Ok(DeltaE {
        diagram: d.to_spec(),
        alternant: alt,
        determinant: det,
        ratio,
        box_sums,
    })
}

/// w·p = ε(w)p for the adjacent transpositions w.
pub fn is_diagonally_skew(p: &MultivariatePoly, n: usize) -> bool {
    (0..n.saturating_sub(1)).all(|i| {
        let mut w: Vec<usize> = (0..n).collect();
        w.swap(i, i + 1);
        act(p, &w, &w) == -p
    })
}

/// Killed by every Σ_i ∂_{u_i}^a ∂_{v_i}^b with 1 ≤ a + b ≤ deg p.
pub fn is_harmonic(p: &MultivariatePoly, n: usize) -> bool {
    let deg = p.total_degree().unwrap_or(0);
    for total in 1..=deg {
        for a in 0..=total {
            let b = total - a;
            let mut acc = MultivariatePoly::zero(2 * n);
            for i in 0..n {
                let mut beta = vec![0u32; 2 * n];
                beta[i] = a;
                beta[n + i] = b;
                acc = &acc + &p.derivative(&beta);
            }
            if !acc.is_zero() {
                return false;
            }
        }
    }
    true
}

/// Linear span of polynomials, kept fully reduced: each basis element has coefficient 1 at
/// its pivot monomial and no other basis element involves that monomial.
#[derive(Clone, Debug, Default)]
pub struct PolySpan {
    basis: Vec<(Vec<u32>, MultivariatePoly)>,
}

impl PolySpan {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn reduce(&self, p: &MultivariatePoly) -> MultivariatePoly {
        let mut r = p.clone();
        for (m, b) in &self.basis {
            let c = r.coeff(m);
            if !c.is_zero() {
                r = &r - &b.scale(&c);
            }
        }
        r
    }

    /// Adds p; returns false if it was already in the span.
    pub fn insert(&mut self, p: &MultivariatePoly) -> bool {
        let r = self.reduce(p);
        let Some((pivot, lead)) = r.terms().last().map(|(e, c)| (e.clone(), c.clone())) else {
            return false;
        };
        let r = r.scale(&(Rational::one() / lead));
        for (_, b) in &mut self.basis {
            let c = b.coeff(&pivot);
            if !c.is_zero() {
                *b = &*b - &r.scale(&c);
            }
        }
        self.basis.push((pivot, r));
        true
    }

    pub fn contains(&self, p: &MultivariatePoly) -> bool {
        self.reduce(p).is_zero()
    }

    pub fn elements(&self) -> impl Iterator<Item = &MultivariatePoly> {
        self.basis.iter().map(|(_, b)| b)
    }

    /// Trace of a linear map preserving the span.
    pub fn trace(&self, f: impl Fn(&MultivariatePoly) -> MultivariatePoly) -> Rational {
        self.basis.iter().map(|(m, b)| f(b).coeff(m)).sum()
    }
}

/// Span of the Sₙ-translates of p under the given one-sided or diagonal action.
fn orbit_span(p: &MultivariatePoly, n: usize, side: Side) -> PolySpan {
    let mut span = PolySpan::default();
    let id: Vec<usize> = (0..n).collect();
    for (w, _) in signed_permutations(n) {
        let t = match side {
            Side::U => act(p, &w, &id),
            Side::V => act(p, &id, &w),
        };
        span.insert(&t);
    }
    span
}

#[derive(Clone, Copy)]
enum Side {
    U,
    V,
}

/// Π over `class` roots of (x_i − x_j) in the u (offset 0) or v (offset n) variables.
fn root_product(rd: &RootData, class: RootClass, offset: usize) -> MultivariatePoly {
    let n = rd.n;
    let mut p = MultivariatePoly::constant(2 * n, Rational::one());
    for r in rd.of_class(class) {
        let mut f = MultivariatePoly::var(2 * n, offset + r.i);
        f = &f - &MultivariatePoly::var(2 * n, offset + r.j);
        p = &p * &f;
    }
    p
}

#[derive(Clone, Debug, Serialize)]
pub struct WxwReport {
    pub diagram: String,
    pub dim: usize,
    pub dim_e1: usize,
    pub dim_e2: usize,
    /// Characters on the classes of `classes`.
    pub classes: Vec<Partition>,
    #[serde(serialize_with = "ser_rationals")]
    pub chi_e1: Vec<Rational>,
    #[serde(serialize_with = "ser_rationals")]
    pub chi_e2: Vec<Rational>,
    pub e1_label: Option<Partition>,
    pub e2_label: Option<Partition>,
    /// Span character at (ρ, σ) equals χ_{E₁}(ρ)·χ_{E₂}(σ) for all class pairs.
    pub product_character: bool,
    /// χ_{E₂} = χ_{E₁}·ε.
    pub e2_is_e1_twisted: bool,
    /// Dimension of the diagonal sign-isotypic part of the span.
    pub sign_isotypic_dim: usize,
    /// Δ_e lies in that sign line.
    pub generator_is_skew: bool,
}

impl WxwReport {
    pub fn passes(&self) -> bool {
        self.dim == self.dim_e1 * self.dim_e2
            && self.product_character
            && self.e2_is_e1_twisted
            && self.sign_isotypic_dim == 1
            && self.generator_is_skew
    }
}

/// The W×W-span of Δ_e against E₁ = ℚ[W]π₁ and E₂ = ℚ[W]π₂.
pub fn wxw_span(d: &Diagram) -> Result<WxwReport> {
    let (_, rd) = young_pair(d)?;
    let n = rd.n;
    let delta = delta_e(d)?.alternant.poly;
    let table = CharacterTable::new(n);
    let id: Vec<usize> = (0..n).collect();

    let mut span = PolySpan::default();
    let v_side = orbit_span(&delta, n, Side::V);
    for b in v_side.elements() {
        for (w, _) in signed_permutations(n) {
            span.insert(&act(b, &w, &id));
        }
    }
    let e1 = orbit_span(&root_product(&rd, RootClass::Plus1, 0), n, Side::U);
    let e2 = orbit_span(&root_product(&rd, RootClass::Plus2, n), n, Side::V);

    let reps: Vec<Vec<usize>> = table
        .classes
        .iter()
        .map(|r| class_representative(r))
        .collect();
    let chi_e1: Vec<Rational> = reps.iter().map(|w| e1.trace(|p| act(p, w, &id))).collect();
    let chi_e2: Vec<Rational> = reps.iter().map(|w| e2.trace(|p| act(p, &id, w))).collect();
    let mut product_character = true;
    for (a, wa) in reps.iter().enumerate() {
        for (b, wb) in reps.iter().enumerate() {
            if span.trace(|p| act(p, wa, wb)) != &chi_e1[a] * &chi_e2[b] {
                product_character = false;
            }
        }
    }
    let sign = table.sign();
    let twisted: Vec<Rational> = chi_e1.iter().zip(&sign).map(|(x, s)| x * s).collect();
    let diagonal: Vec<Rational> = reps.iter().map(|w| span.trace(|p| act(p, w, w))).collect();
    let sign_mult = table.inner(&diagonal, &sign);
    Ok(WxwReport {
        diagram: d.to_spec(),
        dim: span.dim(),
        dim_e1: e1.dim(),
        dim_e2: e2.dim(),
        classes: table.classes.clone(),
        e1_label: table.identify(&chi_e1),
        e2_label: table.identify(&chi_e2),
        e2_is_e1_twisted: twisted == chi_e2,
        sign_isotypic_dim: crate::exact::to_i64(&sign_mult).map_or(usize::MAX, |x| x as usize),
        generator_is_skew: is_diagonally_skew(&delta, n),
        chi_e1,
        chi_e2,
        product_character,
    })
}

/// Sizes of the blocks of coordinates on which `values` is constant.
fn level_blocks(values: &[Rational]) -> Partition {
    let mut sorted = values.to_vec();
    sorted.sort();
    let mut blocks: Partition = Vec::new();
    let mut prev: Option<&Rational> = None;
    for v in &sorted {
        if prev == Some(v) {
            *blocks.last_mut().expect("nonempty") += 1;
        } else {
            blocks.push(1);
        }
        prev = Some(v);
    }
    blocks.sort_unstable_by(|a, b| b.cmp(a));
    blocks
}

#[derive(Clone, Debug, Serialize)]
pub struct CommonConstituents {
    /// λ with its multiplicities in the two induced modules, for every λ occurring in both.
    pub common: Vec<(Partition, u64, u64)>,
    pub unique: bool,
    pub multiplicity_one: bool,
    /// Character inner products agree with the Kostka-number multiplicities.
    pub kostka_agrees: bool,
}

impl CommonConstituents {
    pub fn holds(&self) -> bool {
        self.unique && self.multiplicity_one && self.kostka_agrees
    }

    pub fn constituent(&self) -> Option<&Partition> {
        if self.unique {
            self.common.first().map(|c| &c.0)
        } else {
            None
        }
    }
}

/// Common constituents of Ind_{S_a}^{Sₙ} 1 and Ind_{S_b}^{Sₙ} ε for Young subgroups S_a, S_b.
pub fn common_constituents(
    table: &CharacterTable,
    trivial_from: &[usize],
    sign_from: &[usize],
) -> CommonConstituents {
    let ind_one = table.young_character(trivial_from);
    let sign = table.sign();
    let ind_eps: Vec<Rational> = table
        .young_character(sign_from)
        .iter()
        .zip(&sign)
        .map(|(x, s)| x * s)
        .collect();
    let m1 = table.decompose(&ind_one);
    let m2 = table.decompose(&ind_eps);
    let mut kostka_agrees = true;
    let mut common = Vec::new();
    for (i, lambda) in table.irreps.iter().enumerate() {
        let k1 = kostka(lambda, trivial_from);
        let k2 = kostka(&conjugate(lambda), sign_from);
        if m1[i] != Rational::from_integer(k1.into()) || m2[i] != Rational::from_integer(k2.into())
        {
            kostka_agrees = false;
        }
        if k1 > 0 && k2 > 0 {
            common.push((lambda.clone(), k1, k2));
        }
    }
    CommonConstituents {
        unique: common.len() == 1,
        multiplicity_one: common.iter().all(|c| c.1 == 1 && c.2 == 1),
        kostka_agrees,
        common,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Cor416Report {
    pub diagram: String,
    /// Block sizes of W¹ (Weyl group of R¹, roots vanishing on h₂) and of W².
    pub w1_blocks: Partition,
    pub w2_blocks: Partition,
    /// Ind_{W²} 1 against Ind_{W¹} ε.
    pub stated: CommonConstituents,
    /// Ind_{W¹} 1 against Ind_{W²} ε.
    pub swapped: CommonConstituents,
}

pub fn corollary416(d: &Diagram) -> Result<Cor416Report> {
    let (h, rd) = young_pair(d)?;
    let table = CharacterTable::new(rd.n);
    let w1_blocks = level_blocks(&h.h2);
    let w2_blocks = level_blocks(&h.h1);
    Ok(Cor416Report {
        diagram: d.to_spec(),
        stated: common_constituents(&table, &w2_blocks, &w1_blocks),
        swapped: common_constituents(&table, &w1_blocks, &w2_blocks),
        w1_blocks,
        w2_blocks,
    })
}

/// Whether x = (x₁, x₂) lies in 𝔠°: x₁ vanishes on R², is nonzero on R¹, and x₂ the other way.
pub fn in_c_circ(h: &SemisimplePair, x1: &[Rational], x2: &[Rational]) -> bool {
    let n = h.h1.len();
    if x1.len() != n || x2.len() != n {
        return false;
    }
    for i in 0..n {
        for j in i + 1..n {
            let in_r1 = h.h2[i] == h.h2[j];
            let in_r2 = h.h1[i] == h.h1[j];
            let ok1 = if in_r2 {
                x1[i] == x1[j]
            } else if in_r1 {
                x1[i] != x1[j]
            } else {
                true
            };
            let ok2 = if in_r1 {
                x2[i] == x2[j]
            } else if in_r2 {
                x2[i] != x2[j]
            } else {
                true
            };
            if !(ok1 && ok2) {
                return false;
            }
        }
    }
    true
}

/// h, 2h, and a point built from other injective functions of the box coordinates.
pub fn default_samples(d: &Diagram) -> Vec<(Vec<Rational>, Vec<Rational>)> {
    let int = |x: i64| Rational::from_integer(x.into());
    let h1: Vec<i64> = d.boxes().iter().map(|b| b.0).collect();
    let h2: Vec<i64> = d.boxes().iter().map(|b| b.1).collect();
    let f = |p: i64| if p % 2 == 0 { p + 1 } else { -(p + 1) };
    let g = |q: i64| q * q + 1;
    vec![
        (
            h1.iter().map(|&x| int(x)).collect(),
            h2.iter().map(|&x| int(x)).collect(),
        ),
        (
            h1.iter().map(|&x| int(2 * x)).collect(),
            h2.iter().map(|&x| int(2 * x)).collect(),
        ),
        (
            h1.iter().map(|&x| int(f(x))).collect(),
            h2.iter().map(|&x| int(g(x))).collect(),
        ),
    ]
}

#[derive(Clone, Debug, Serialize)]
pub struct Lemma43Sample {
    #[serde(serialize_with = "ser_rationals")]
    pub x1: Vec<Rational>,
    #[serde(serialize_with = "ser_rationals")]
    pub x2: Vec<Rational>,
    /// Bidegrees below (𝐝₁, 𝐝₂) that were checked, and those where Δ_x did not vanish.
    pub checked: Vec<(u32, u32)>,
    pub nonvanishing: Vec<(u32, u32)>,
    /// Δ_x(𝐝₁, 𝐝₂) = c · Δ_e.
    #[serde(serialize_with = "ser_opt_rational")]
    pub ratio: Option<Rational>,
}

impl Lemma43Sample {
    pub fn holds(&self) -> bool {
        self.nonvanishing.is_empty() && self.ratio.as_ref().is_some_and(|r| !r.is_zero())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Lemma43Report {
    pub diagram: String,
    pub top: (u32, u32),
    pub samples: Vec<Lemma43Sample>,
}

impl Lemma43Report {
    pub fn holds(&self) -> bool {
        self.samples.iter().all(Lemma43Sample::holds)
    }
}

/// Vanishing below the top bidegree and proportionality at it, for each sample point of 𝔠°.
///
/// Scanned: d₁ < 𝐝₁ with d₂ ≤ 𝐝₂ + 1, and d₂ < 𝐝₂ with d₁ ≤ 𝐝₁ + 1.
pub fn lemma43_scan(
    d: &Diagram,
    samples: &[(Vec<Rational>, Vec<Rational>)],
) -> Result<Lemma43Report> {
    let (h, rd) = young_pair(d)?;
    let (t1, t2) = top_bidegree(&rd);
    let delta = alternant(&h.h1, &h.h2, t1, t2).poly;
    let mut out = Vec::new();
    for (x1, x2) in samples {
        if !in_c_circ(&h, x1, x2) {
            return Err(Error::Precondition(format!(
                "sample ({}, {}) is not in c°",
                x1.iter().map(fmt_rational).collect::<Vec<_>>().join(","),
                x2.iter().map(fmt_rational).collect::<Vec<_>>().join(",")
            )));
        }
        let mut checked = Vec::new();
        for d1 in 0..=t1 + 1 {
            for d2 in 0..=t2 + 1 {
                if d1 < t1 || d2 < t2 {
                    checked.push((d1, d2));
                }
            }
        }
        let nonvanishing = checked
            .iter()
            .copied()
            .filter(|&(a, b)| !alternant(x1, x2, a, b).poly.is_zero())
            .collect();
        let ratio = alternant(x1, x2, t1, t2).poly.ratio_to(&delta);
        out.push(Lemma43Sample {
            x1: x1.clone(),
            x2: x2.clone(),
            checked,
            nonvanishing,
            ratio,
        });
    }
    Ok(Lemma43Report {
        diagram: d.to_spec(),
        top: (t1, t2),
        samples: out,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct HarmonicsReport {
    pub diagram: String,
    pub top: (u32, u32),
    pub box_sums: (u32, u32),
    pub nonzero: bool,
    pub skew: bool,
    pub bidegree_ok: bool,
    pub harmonic: bool,
    /// Δ_e equals the box determinant.
    pub determinant_equal: bool,
    #[serde(serialize_with = "ser_opt_rational")]
    pub determinant_ratio: Option<Rational>,
    pub wxw: WxwReport,
    pub lemma43: Lemma43Report,
}

impl HarmonicsReport {
    pub fn passes(&self) -> bool {
        self.nonzero
            && self.skew
            && self.bidegree_ok
            && self.harmonic
            && self.determinant_equal
            && self.wxw.passes()
            && self.lemma43.holds()
    }
}

/// Every Δ_e check for one Young diagram.
pub fn harmonics_report(d: &Diagram) -> Result<HarmonicsReport> {
    let de = delta_e(d)?;
    let n = de.alternant.n;
    let p = &de.alternant.poly;
    let top = de.alternant.bidegree;
    Ok(HarmonicsReport {
        diagram: d.to_spec(),
        top,
        box_sums: de.box_sums,
        nonzero: !p.is_zero(),
        skew: is_diagonally_skew(p, n),
        bidegree_ok: p.bidegrees(n) == vec![top] && de.box_sums == top,
        harmonic: is_harmonic(p, n),
        determinant_equal: de.ratio.as_ref().is_some_and(|r| r.is_one()),
        determinant_ratio: de.ratio.clone(),
        wxw: wxw_span(d)?,
        lemma43: lemma43_scan(d, &default_samples(d))?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::parse;
    use crate::exact::q;

    #[test]
    fn sl2_alternant() {
        let a = alternant(&[q(0), q(1)], &[q(0), q(0)], 1, 0);
        let expected = &MultivariatePoly::var(4, 1) - &MultivariatePoly::var(4, 0);
        assert_eq!(a.poly, expected);
        assert!(alternant(&[q(0), q(1)], &[q(0), q(0)], 0, 0).poly.is_zero());
    }

    #[test]
    fn hook_delta() {
        let d = parse("2,1").unwrap();
        let de = delta_e(&d).unwrap();
        assert_eq!(de.alternant.bidegree, (1, 1));
        assert!(de.proportional());
        assert!(is_harmonic(&de.alternant.poly, 3));
        assert!(is_diagonally_skew(&de.alternant.poly, 3));
        let (h, _) = young_pair(&d).unwrap();
        assert!(alternant(&h.h1, &h.h2, 0, 1).poly.is_zero());
    }

    #[test]
    fn invariants_are_not_harmonic() {
        let mut p = MultivariatePoly::zero(6);
        for i in 0..3 {
            p = &p + &MultivariatePoly::var(6, i);
        }
        assert!(!is_harmonic(&p, 3));
    }

    #[test]
    fn hook_span_is_standard_squared() {
        let w = wxw_span(&parse("2,1").unwrap()).unwrap();
        assert_eq!((w.dim, w.dim_e1, w.dim_e2), (4, 2, 2));
        assert_eq!(w.e1_label, Some(vec![2, 1]));
        assert!(w.passes(), "{w:?}");
    }

    #[test]
    fn row_span() {
        let w = wxw_span(&parse("3").unwrap()).unwrap();
        assert_eq!(w.dim, 1);
        assert_eq!(w.e1_label, Some(vec![1, 1, 1]));
        assert_eq!(w.e2_label, Some(vec![3]));
        assert!(w.passes());
    }

    #[test]
    fn hook_corollary() {
        let r = corollary416(&parse("2,1").unwrap()).unwrap();
        assert!(r.stated.holds());
        assert_eq!(r.stated.constituent(), Some(&vec![2, 1]));
    }

    #[test]
    fn scaled_sample_ratio() {
        let d = parse("2,2").unwrap();
        let r = lemma43_scan(&d, &default_samples(&d)).unwrap();
        assert!(r.holds(), "{r:?}");
        assert_eq!(r.samples[0].ratio, Some(q(1)));
        assert_eq!(r.samples[1].ratio, Some(q(16)));
    }

    #[test]
    fn rejects_points_outside_c_circ() {
        let d = parse("2,1").unwrap();
        let bad = vec![(vec![q(0), q(0), q(0)], vec![q(0), q(0), q(1)])];
        assert!(matches!(
            lemma43_scan(&d, &bad),
            Err(Error::Precondition(_))
        ));
    }
}
