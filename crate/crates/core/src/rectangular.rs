//! Rectangular pairs: an 𝔰𝔩₂⊕𝔰𝔩₂ inside a classical 𝔤(V) acting on
//! V = ⊕ R(nᵢ−1)⊗R(mᵢ−1), decided by Clebsch–Gordan arithmetic.
//!
//! Also the explicit non-rectangular pair in 𝔰𝔬(4n+2) and the orthogonal
//! form attached to a centrally symmetric diagram.

use crate::diagrams::{Cell, Diagram};
use crate::error::{Error, Result};
use crate::exact::{q, Matrix, Rational, Subspace};
use crate::nilpairs::{
    associative_closure, biexponents, build_pair, centralizer_of, classify, direct_sum,
    pair_from_cells, Ambient, Bidegree, Grading, NilPair, PairClass, Provenance, SemisimplePair,
};
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

/// R(a) ⊗ R(b) as a module over 𝔰𝔩₂ ⊕ 𝔰𝔩₂.
pub type Summand = (usize, usize);

// ---------------------------------------------------------------------------
// One 𝔰𝔩₂

/// Weights of R(a): a, a−2, …, −a.
pub fn weights(a: usize) -> Vec<i64> {
    let a = a as i64;
    (0..=a).map(|k| a - 2 * k).collect()
}

/// Highest weights of the irreducibles making up a weight multiset.
/// Panics if the multiset is not the character of a module.
pub fn decompose_weights(ws: &[i64]) -> Vec<usize> {
    let mut count: BTreeMap<i64, i64> = BTreeMap::new();
    for &w in ws {
        *count.entry(w).or_default() += 1;
    }
    let mut out = Vec::new();
    loop {
        count.retain(|_, c| *c != 0);
        let Some((&top, _)) = count.iter().next_back() else {
            break;
        };
        assert!(top >= 0, "weight multiset is not a character");
        for w in weights(top as usize) {
            *count.entry(w).or_default() -= 1;
        }
        out.push(top as usize);
    }
    out
}

/// R(a) ⊗ R(b) = ⊕_{k ≤ min(a,b)} R(a+b−2k).
pub fn clebsch_gordan(a: usize, b: usize) -> Vec<usize> {
    (0..=a.min(b)).map(|k| a + b - 2 * k).collect()
}

/// S²R(a) = ⊕ R(2a−4k).
pub fn sym2(a: usize) -> Vec<usize> {
    (0..=a / 2).map(|k| 2 * a - 4 * k).collect()
}

/// Λ²R(a) = ⊕ R(2a−2−4k).
pub fn alt2(a: usize) -> Vec<usize> {
    if a == 0 {
        return Vec::new();
    }
    (0..=(a - 1) / 2).map(|k| 2 * a - 2 - 4 * k).collect()
}

// ---------------------------------------------------------------------------
// Pairs of 𝔰𝔩₂'s

fn sorted(mut v: Vec<Summand>) -> Vec<Summand> {
    v.sort_unstable_by(|x, y| y.cmp(x));
    v
}

fn cross(xs: &[usize], ys: &[usize]) -> Vec<Summand> {
    xs.iter()
        .flat_map(|&x| ys.iter().map(move |&y| (x, y)))
        .collect()
}

pub fn pair_weights(s: Summand) -> Vec<(i64, i64)> {
    let ys = weights(s.1);
    weights(s.0)
        .into_iter()
        .flat_map(|x| ys.iter().map(move |&y| (x, y)))
        .collect()
}

/// Oracle: peel off R(x)⊗R(y) at a weight that is maximal in x, then in y.
pub fn decompose_pair_weights(ws: &[(i64, i64)]) -> Vec<Summand> {
    let mut count: BTreeMap<(i64, i64), i64> = BTreeMap::new();
    for &w in ws {
        *count.entry(w).or_default() += 1;
    }
    let mut out = Vec::new();
    loop {
        count.retain(|_, c| *c != 0);
        let Some((&(x, y), _)) = count.iter().next_back() else {
            break;
        };
        assert!(x >= 0 && y >= 0, "weight multiset is not a character");
        let s = (x as usize, y as usize);
        for w in pair_weights(s) {
            *count.entry(w).or_default() -= 1;
        }
        out.push(s);
    }
    sorted(out)
}

pub fn tensor(x: Summand, y: Summand) -> Vec<Summand> {
    cross(&clebsch_gordan(x.0, y.0), &clebsch_gordan(x.1, y.1))
}

/// S²(A⊗B) = S²A⊗S²B ⊕ Λ²A⊗Λ²B.
pub fn sym2_pair(s: Summand) -> Vec<Summand> {
    let mut out = cross(&sym2(s.0), &sym2(s.1));
    out.extend(cross(&alt2(s.0), &alt2(s.1)));
    out
}

/// Λ²(A⊗B) = S²A⊗Λ²B ⊕ Λ²A⊗S²B.
pub fn alt2_pair(s: Summand) -> Vec<Summand> {
    let mut out = cross(&sym2(s.0), &alt2(s.1));
    out.extend(cross(&alt2(s.0), &sym2(s.1)));
    out
}

fn square_of_sum(parts: &[Summand], diag: fn(Summand) -> Vec<Summand>) -> Vec<Summand> {
    let mut out = Vec::new();
    for (i, &x) in parts.iter().enumerate() {
        out.extend(diag(x));
        for &y in &parts[i + 1..] {
            out.extend(tensor(x, y));
        }
    }
    sorted(out)
}

// ---------------------------------------------------------------------------
// Embeddings

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Algebra {
    Sl,
    Sp,
    So,
}

impl Algebra {
    pub const ALL: [Algebra; 3] = [Algebra::Sl, Algebra::Sp, Algebra::So];

    pub fn label(self) -> &'static str {
        match self {
            Algebra::Sl => "sl",
            Algebra::Sp => "sp",
            Algebra::So => "so",
        }
    }

    pub fn rank(self, dim_v: usize) -> usize {
        match self {
            Algebra::Sl => dim_v.saturating_sub(1),
            Algebra::Sp | Algebra::So => dim_v / 2,
        }
    }

    pub fn dim(self, dim_v: usize) -> usize {
        match self {
            Algebra::Sl => (dim_v * dim_v).saturating_sub(1),
            Algebra::Sp => dim_v * (dim_v + 1) / 2,
            Algebra::So => dim_v * dim_v.saturating_sub(1) / 2,
        }
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// 𝔤(V) with V|_𝔰 = ⊕ R(nᵢ−1)⊗R(mᵢ−1); `j` holds the (nᵢ, mᵢ), sorted descending.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct EmbeddingSpec {
    pub algebra: Algebra,
    pub j: Vec<(usize, usize)>,
}

impl EmbeddingSpec {
    pub fn new(algebra: Algebra, j: Vec<(usize, usize)>) -> Result<Self> {
        if j.is_empty() {
            return Err(Error::Parse("J must have at least one block".into()));
        }
        if j.iter().any(|&(n, m)| n == 0 || m == 0) {
            return Err(Error::Parse("block sizes must be positive".into()));
        }
        let mut j = j;
        j.sort_unstable_by(|x, y| y.cmp(x));
        Ok(EmbeddingSpec { algebra, j })
    }

    pub fn dim_v(&self) -> usize {
        self.j.iter().map(|&(n, m)| n * m).sum()
    }

    pub fn rank(&self) -> usize {
        self.algebra.rank(self.dim_v())
    }

    /// Summands of V as labels (n−1, m−1).
    pub fn v_summands(&self) -> Vec<Summand> {
        self.j.iter().map(|&(n, m)| (n - 1, m - 1)).collect()
    }

    /// Jordan types of e₁ and e₂ on V.
    pub fn orbit_data(&self) -> (Vec<usize>, Vec<usize>) {
        let mut p1: Vec<usize> = self
            .j
            .iter()
            .flat_map(|&(n, m)| std::iter::repeat_n(n, m))
            .collect();
        let mut p2: Vec<usize> = self
            .j
            .iter()
            .flat_map(|&(n, m)| std::iter::repeat_n(m, n))
            .collect();
        p1.sort_unstable_by(|a, b| b.cmp(a));
        p2.sort_unstable_by(|a, b| b.cmp(a));
        (p1, p2)
    }

    pub fn to_spec(&self) -> String {
        let blocks: Vec<String> = self.j.iter().map(|(n, m)| format!("{n}x{m}")).collect();
        format!("{}:{}", self.algebra, blocks.join(","))
    }
}

impl FromStr for EmbeddingSpec {
    type Err = Error;

    /// `so:3x1,1x3`.
    fn from_str(s: &str) -> Result<Self> {
        let (alg, rest) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected TYPE:NxM,... in {s:?}")))?;
        let algebra = match alg.trim() {
            "sl" => Algebra::Sl,
            "sp" => Algebra::Sp,
            "so" => Algebra::So,
            other => return Err(Error::Parse(format!("unknown algebra type {other:?}"))),
        };
        let mut j = Vec::new();
        for block in rest.split(',') {
            let (n, m) = block
                .trim()
                .split_once('x')
                .ok_or_else(|| Error::Parse(format!("block {block:?} is not NxM")))?;
            let parse = |t: &str| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad block size {t:?}")))
            };
            j.push((parse(n)?, parse(m)?));
        }
        EmbeddingSpec::new(algebra, j)
    }
}

impl fmt::Display for EmbeddingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_spec())
    }
}

/// Multiset of summands R(aᵢ)⊗R(bᵢ), sorted descending.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SL2PairDecomp {
    pub summands: Vec<Summand>,
}

impl SL2PairDecomp {
    pub fn dim(&self) -> usize {
        self.summands.iter().map(|&(a, b)| (a + 1) * (b + 1)).sum()
    }

    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }
}

/// An irreducible R(a)⊗R(b) carries a symmetric form iff a ≡ b mod 2.
fn is_orthogonal_type(s: Summand) -> bool {
    s.0 % 2 == s.1 % 2
}

/// V admits an invariant form of the right symmetry iff every irreducible of
/// the opposite type occurs with even multiplicity.
pub fn check_form(spec: &EmbeddingSpec) -> Result<()> {
    let want_orthogonal = match spec.algebra {
        Algebra::Sl => return Ok(()),
        Algebra::So => true,
        Algebra::Sp => false,
    };
    if spec.algebra == Algebra::Sp && spec.dim_v() % 2 == 1 {
        return Err(Error::Form(format!(
            "{spec}: dim V = {} is odd",
            spec.dim_v()
        )));
    }
    let mut mult: BTreeMap<Summand, usize> = BTreeMap::new();
    for s in spec.v_summands() {
        *mult.entry(s).or_default() += 1;
    }
    for (s, m) in mult {
        if is_orthogonal_type(s) != want_orthogonal && m % 2 == 1 {
            return Err(Error::Form(format!(
                "{spec}: R({})⊗R({}) has multiplicity {m}, but it carries the wrong kind of form",
                s.0, s.1
            )));
        }
    }
    Ok(())
}

/// 𝔤(V) restricted to 𝔰𝔩₂⊕𝔰𝔩₂: V⊗V ⊖ 1 for sl, S²V for sp, Λ²V for so.
pub fn decompose_g(spec: &EmbeddingSpec) -> Result<SL2PairDecomp> {
    check_form(spec)?;
    let parts = spec.v_summands();
    let summands = match spec.algebra {
        Algebra::Sl => {
            let mut all: Vec<Summand> = parts
                .iter()
                .flat_map(|&x| parts.iter().flat_map(move |&y| tensor(x, y)))
                .collect();
            let trivial = all
                .iter()
                .position(|&s| s == (0, 0))
                .ok_or_else(|| Error::Internal("V⊗V has no invariant".into()))?;
            all.remove(trivial);
            sorted(all)
        }
        Algebra::Sp => square_of_sum(&parts, sym2_pair),
        Algebra::So => square_of_sum(&parts, alt2_pair),
    };
    let out = SL2PairDecomp { summands };
    let expected = spec.algebra.dim(spec.dim_v());
    if out.dim() != expected {
        return Err(Error::Internal(format!(
            "{spec}: summands have dim {} ≠ dim g = {expected}",
            out.dim()
        )));
    }
    Ok(out)
}

/// Independent decomposition of 𝔤(V) from the weights of V.
pub fn decompose_g_by_weights(spec: &EmbeddingSpec) -> SL2PairDecomp {
    let v: Vec<(i64, i64)> = spec
        .v_summands()
        .into_iter()
        .flat_map(pair_weights)
        .collect();
    let mut ws = Vec::new();
    for (i, a) in v.iter().enumerate() {
        for (k, b) in v.iter().enumerate() {
            let keep = match spec.algebra {
                Algebra::Sl => true,
                Algebra::Sp => i <= k,
                Algebra::So => i < k,
            };
            if keep {
                match spec.algebra {
                    Algebra::Sl => ws.push((a.0 - b.0, a.1 - b.1)),
                    _ => ws.push((a.0 + b.0, a.1 + b.1)),
                }
            }
        }
    }
    if spec.algebra == Algebra::Sl {
        let zero = ws
            .iter()
            .position(|&w| w == (0, 0))
            .expect("V⊗V* has weight 0");
        ws.remove(zero);
    }
    SL2PairDecomp {
        summands: decompose_pair_weights(&ws),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RectangularVerdict {
    pub spec: String,
    pub dim_v: usize,
    pub rank: usize,
    pub summands: Vec<Summand>,
    pub accepted: bool,
    /// (a/2, b/2) over the summands R(a)⊗R(b), sorted; present iff accepted.
    pub biexponents: Option<Vec<Bidegree>>,
}

/// The pair is principal iff 𝔤(V) has exactly rank 𝔤 irreducible summands.
pub fn is_rectangular_pnpair(spec: &EmbeddingSpec) -> Result<RectangularVerdict> {
    let dec = decompose_g(spec)?;
    let rank = spec.rank();
    let accepted = dec.len() == rank;
    let biexponents = if accepted {
        if let Some(&(a, b)) = dec
            .summands
            .iter()
            .find(|&&(a, b)| a % 2 == 1 || b % 2 == 1)
        {
            return Err(Error::Evenness(format!(
                "{spec}: summand count equals the rank but R({a})⊗R({b}) has an odd label"
            )));
        }
        let mut be: Vec<Bidegree> = dec
            .summands
            .iter()
            .map(|&(a, b)| ((a / 2) as i64, (b / 2) as i64))
            .collect();
        be.sort_unstable();
        Some(be)
    } else {
        None
    };
    Ok(RectangularVerdict {
        spec: spec.to_spec(),
        dim_v: spec.dim_v(),
        rank,
        summands: dec.summands,
        accepted,
        biexponents,
    })
}

/// Membership in the classical list of rectangular principal pairs.
pub fn thm85_predicted(spec: &EmbeddingSpec) -> bool {
    let odd = |k: usize| k % 2 == 1;
    match (spec.algebra, spec.j.as_slice()) {
        (Algebra::Sl, [_]) => true,
        (Algebra::Sp, [(n, m)]) => n % 2 != m % 2,
        (Algebra::So, [(n, m)]) => n % 2 == m % 2,
        // J is sorted descending, so (1,1) is last and (n,1) precedes (1,m) unless n = 1.
        (Algebra::So, [(n, m), (1, 1)]) => odd(*n) && odd(*m),
        (Algebra::So, [(n, 1), (1, m)]) => odd(*n) && odd(*m),
        _ => false,
    }
}

/// All J with at most `max_blocks` blocks and Σ nᵢmᵢ ≤ bound.
pub fn enumerate_j(bound: usize, max_blocks: usize) -> Vec<Vec<(usize, usize)>> {
    let blocks: Vec<(usize, usize)> = (1..=bound)
        .flat_map(|n| (1..=bound / n).map(move |m| (n, m)))
        .collect();
    let mut out = Vec::new();
    fn rec(
        blocks: &[(usize, usize)],
        start: usize,
        left: usize,
        slots: usize,
        cur: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        if slots == 0 {
            return;
        }
        for (i, &(n, m)) in blocks.iter().enumerate().skip(start) {
            if n * m <= left {
                cur.push((n, m));
                rec(blocks, i, left - n * m, slots - 1, cur, out);
                cur.pop();
            }
        }
    }
    rec(&blocks, 0, bound, max_blocks, &mut Vec::new(), &mut out);
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct TypeReport {
    pub algebra: Algebra,
    pub enumerated: usize,
    pub form_invalid: usize,
    pub accepted: Vec<String>,
    /// Accepted but not on the list, or on the list but rejected.
    pub mismatches: Vec<String>,
    /// Specs where Clebsch–Gordan and the weight oracle disagree.
    pub oracle_mismatches: Vec<String>,
    pub evenness_errors: Vec<String>,
    /// Distinct accepted J with the same pair of Jordan types.
    pub orbit_collisions: Vec<(String, String)>,
}

impl TypeReport {
    pub fn holds(&self) -> bool {
        self.mismatches.is_empty()
            && self.oracle_mismatches.is_empty()
            && self.evenness_errors.is_empty()
            && self.orbit_collisions.is_empty()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SlCrossCheck {
    pub spec: String,
    pub diagram: String,
    pub accepted: bool,
    pub module_class: PairClass,
    pub module_biexponents: Option<Vec<Bidegree>>,
    pub rectangular_biexponents: Option<Vec<Bidegree>>,
    /// Boxes of the rectangle minus (0,0); only for single rectangles.
    pub box_biexponents: Option<Vec<Bidegree>>,
    pub agrees: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Thm85Report {
    pub bound: usize,
    pub max_blocks: usize,
    pub types: Vec<TypeReport>,
    pub crosscheck_bound: usize,
    pub sl_crosscheck: Vec<SlCrossCheck>,
}

impl Thm85Report {
    pub fn holds(&self) -> bool {
        self.types.iter().all(TypeReport::holds) && self.sl_crosscheck.iter().all(|c| c.agrees)
    }
}

/// Rectangle with m rows of length n (e₁ has m Jordan blocks of size n).
pub fn rectangle(n: usize, m: usize) -> Diagram {
    Diagram::young(&vec![n; m]).expect("positive sides")
}

/// sl(V) for J against the module path: block sum of the rectangles.
pub fn sl_crosscheck(spec: &EmbeddingSpec) -> Result<SlCrossCheck> {
    if spec.algebra != Algebra::Sl {
        return Err(Error::Precondition(
            "the module cross-check is for sl only".into(),
        ));
    }
    let verdict = is_rectangular_pnpair(spec)?;
    let parts: Vec<Diagram> = spec.j.iter().map(|&(n, m)| rectangle(n, m)).collect();
    let (pair, h) = if parts.len() == 1 {
        build_pair(&parts[0])?
    } else {
        direct_sum(&parts)?
    };
    let c = classify(&pair, Some(&h));
    let module_biexponents = if c.class == PairClass::Principal {
        Some(biexponents(&pair, &h)?)
    } else {
        None
    };
    let box_biexponents = (parts.len() == 1).then(|| {
        let mut b: Vec<Bidegree> = parts[0]
            .boxes()
            .iter()
            .copied()
            .filter(|&c| c != (0, 0))
            .collect();
        b.sort_unstable();
        b
    });
    let agrees = verdict.accepted == (c.class == PairClass::Principal)
        && module_biexponents == verdict.biexponents
        && (box_biexponents.is_none() || box_biexponents == verdict.biexponents);
    let diagram = parts
        .iter()
        .map(Diagram::to_spec)
        .collect::<Vec<_>>()
        .join(" + ");
    Ok(SlCrossCheck {
        spec: spec.to_spec(),
        diagram,
        accepted: verdict.accepted,
        module_class: c.class,
        module_biexponents,
        rectangular_biexponents: verdict.biexponents,
        box_biexponents,
        agrees,
    })
}

fn type_report(algebra: Algebra, js: &[Vec<(usize, usize)>]) -> TypeReport {
    let mut rep = TypeReport {
        algebra,
        enumerated: 0,
        form_invalid: 0,
        accepted: Vec::new(),
        mismatches: Vec::new(),
        oracle_mismatches: Vec::new(),
        evenness_errors: Vec::new(),
        orbit_collisions: Vec::new(),
    };
    let mut seen: BTreeMap<(Vec<usize>, Vec<usize>), String> = BTreeMap::new();
    for j in js {
        let spec = EmbeddingSpec::new(algebra, j.clone()).expect("enumerated blocks are positive");
        rep.enumerated += 1;
        match decompose_g(&spec) {
            Err(Error::Form(_)) => {
                rep.form_invalid += 1;
                continue;
            }
            Err(e) => {
                rep.oracle_mismatches.push(format!("{spec}: {e}"));
                continue;
            }
            Ok(dec) => {
                if dec != decompose_g_by_weights(&spec) {
                    rep.oracle_mismatches.push(spec.to_spec());
                }
            }
        }
        let accepted = match is_rectangular_pnpair(&spec) {
            Ok(v) => v.accepted,
            Err(e) => {
                rep.evenness_errors.push(format!("{spec}: {e}"));
                continue;
            }
        };
        if accepted != thm85_predicted(&spec) {
            rep.mismatches
                .push(format!("{spec} (accepted = {accepted})"));
        }
        if accepted {
            rep.accepted.push(spec.to_spec());
            if let Some(prev) = seen.insert(spec.orbit_data(), spec.to_spec()) {
                rep.orbit_collisions.push((prev, spec.to_spec()));
            }
        }
    }
    rep
}

/// Enumerates J with at most three blocks and Σ nᵢmᵢ ≤ `bound` for all three
/// types and compares acceptance with the classical list. Every single sl
/// rectangle is also run through the module path, and so is every sl spec
/// with several blocks and dim V ≤ `crosscheck_bound`.
pub fn classify_thm85(bound: usize, crosscheck_bound: usize) -> Result<Thm85Report> {
    const MAX_BLOCKS: usize = 3;
    let js = enumerate_j(bound, MAX_BLOCKS);
    let types: Vec<TypeReport> = Algebra::ALL
        .par_iter()
        .map(|&a| type_report(a, &js))
        .collect();
    let sl_specs: Vec<EmbeddingSpec> = js
        .iter()
        .filter(|j| {
            j.len() == 1 || j.iter().map(|&(n, m)| n * m).sum::<usize>() <= crosscheck_bound
        })
        .map(|j| EmbeddingSpec::new(Algebra::Sl, j.clone()).expect("positive blocks"))
        .collect();
    let sl_crosscheck = sl_specs
        .par_iter()
        .map(sl_crosscheck)
        .collect::<Result<Vec<_>>>()?;
    Ok(Thm85Report {
        bound,
        max_blocks: MAX_BLOCKS,
        types,
        crosscheck_bound,
        sl_crosscheck,
    })
}

// ---------------------------------------------------------------------------
// Forms and explicit constructions

/// X preserves the bilinear form B: XᵀB + BX = 0.
pub fn is_skew_for(x: &Matrix, form: &Matrix) -> bool {
    x.transpose().mul(form).add(&form.mul(x)).is_zero()
}

/// 𝔤(B) = {X : XᵀB + BX = 0} in row-major n² coordinates.
pub fn form_algebra(form: &Matrix) -> Subspace {
    let n = form.rows();
    let mut eqs = Matrix::zeros(n * n, n * n);
    for col in 0..n * n {
        let x = Matrix::from_flat(n, &unit_vec(n * n, col));
        let image = x.transpose().mul(form).add(&form.mul(&x));
        for (row, v) in image.flat().iter().enumerate() {
            eqs.set(row, col, v.clone());
        }
    }
    eqs.kernel()
}

fn unit_vec(len: usize, k: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); len];
    v[k] = Rational::one();
    v
}

/// Jordan type of a nilpotent matrix, from the ranks of its powers.
pub fn jordan_type(x: &Matrix) -> Vec<usize> {
    let n = x.rows();
    let mut ranks = vec![n];
    let mut p = Matrix::identity(n);
    while *ranks.last().expect("nonempty") > 0 {
        p = p.mul(x);
        let r = p.rank();
        if r == *ranks.last().expect("nonempty") {
            break; // not nilpotent; stop at the stable rank
        }
        ranks.push(r);
    }
    // Blocks of size ≥ k: r_{k−1} − r_k.
    let at_least: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
    let mut out = Vec::new();
    for k in 0..at_least.len() {
        let exactly = at_least[k] - at_least.get(k + 1).copied().unwrap_or(0);
        out.extend(std::iter::repeat_n(k + 1, exactly));
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// Diagonal (h₁, h₂) in 𝔤(B) with [hᵢ, eⱼ] = δᵢⱼ eⱼ, for eⱼ with at most one
/// nonzero entry per column. Returns a solution and the dimension of the
/// solution set (0 when unique).
pub fn solve_diagonal_pair(pair: &NilPair, form: &Matrix) -> Option<(SemisimplePair, usize)> {
    let n = pair.n;
    let solve = |targets: [i64; 2]| -> Option<(Vec<Rational>, usize)> {
        // Unknowns d₀..d_{n−1}, t; each row says (coeffs)·d − rhs·t = 0.
        let mut rows: Vec<Vec<Rational>> = Vec::new();
        for (e, target) in [(&pair.e1, targets[0]), (&pair.e2, targets[1])] {
            for r in 0..n {
                for c in 0..n {
                    if !e.get(r, c).is_zero() {
                        let mut row = vec![Rational::zero(); n + 1];
                        row[r] += q(1);
                        row[c] -= q(1);
                        row[n] = q(-target);
                        rows.push(row);
                    }
                }
            }
        }
        // Diagonal D lies in 𝔤(B) iff d_r + d_c = 0 wherever B_{rc} ≠ 0.
        for r in 0..n {
            for c in 0..n {
                if !form.get(r, c).is_zero() {
                    let mut row = vec![Rational::zero(); n + 1];
                    row[r] += q(1);
                    row[c] += q(1);
                    rows.push(row);
                }
            }
        }
        let kernel = Matrix::from_rows(rows).kernel();
        let v = kernel.basis().iter().find(|v| !v[n].is_zero())?;
        let scale = v[n].clone();
        Some((
            v[..n].iter().map(|x| x / &scale).collect(),
            kernel.dim() - 1,
        ))
    };
    let (h1, f1) = solve([1, 0])?;
    let (h2, f2) = solve([0, 1])?;
    Some((SemisimplePair { h1, h2 }, f1.max(f2)))
}

#[derive(Clone, Debug, Serialize)]
pub struct SoPairReport {
    pub n: usize,
    pub dim_v: usize,
    pub rank: usize,
    pub form: Matrix,
    pub e1: Matrix,
    pub e2: Matrix,
    pub x: Matrix,
    pub skew_e1: bool,
    pub skew_e2: bool,
    pub skew_x: bool,
    pub commutes: bool,
    pub nilpotent: bool,
    pub dim_centralizer: usize,
    pub basis_in_centralizer: bool,
    pub basis_rank: usize,
    pub basis_spans: bool,
    pub jordan_e1: Vec<usize>,
    pub jordan_e2: Vec<usize>,
    pub jordan_expected: bool,
    pub h1: Option<Vec<String>>,
    pub h2: Option<Vec<String>>,
    /// Dimension of the affine family of diagonal solutions (0 = unique).
    pub h_freedom: Option<usize>,
    pub biexponents: Option<Vec<Bidegree>>,
}

impl SoPairReport {
    pub fn holds(&self) -> bool {
        self.skew_e1
            && self.skew_e2
            && self.skew_x
            && self.commutes
            && self.nilpotent
            && self.dim_centralizer == self.rank
            && self.basis_in_centralizer
            && self.basis_spans
            && self.jordan_expected
    }
}

/// The non-rectangular pair in 𝔰𝔬(4n+2) on v₁…v_{4n+2} with the form
/// x₁x_{4n+2} + ⋯ + x_{2n+1}x_{2n+2}.
pub fn so_nonrectangular_pair(n: usize) -> Result<SoPairReport> {
    if n == 0 {
        return Err(Error::Precondition("n must be at least 1".into()));
    }
    let dim = 4 * n + 2;
    // Basis vectors are 1-based in the formulas below; v(j) is the 0-based index.
    let v = |j: usize| j - 1;
    let form = Matrix::from_fn(dim, dim, |r, c| if r + c == dim - 1 { q(1) } else { q(0) });
    let mut e1 = Matrix::zeros(dim, dim);
    let mut e2 = Matrix::zeros(dim, dim);
    let mut x = Matrix::zeros(dim, dim);
    for j in 1..=dim {
        if j >= 2 * n + 3 {
            e1.set(v(j - 1), v(j), q(1));
            let sign = if j % 2 == 0 { 1 } else { -1 };
            e2.set(v(j - 2 * n - 2), v(j), q(sign));
        } else if (2..=2 * n + 1).contains(&j) {
            e1.set(v(j - 1), v(j), q(-1));
        }
    }
    x.set(v(2 * n + 2), v(4 * n + 2), q(1));
    x.set(v(1), v(2 * n + 1), q(-1));

    let pair = NilPair {
        n: dim,
        e1: e1.clone(),
        e2: e2.clone(),
        provenance: Provenance::Custom,
    };
    let so = form_algebra(&form);
    let z = centralizer_of(&[&e1, &e2], dim, Ambient::Gl).intersect(&so);

    let mut basis: Vec<Matrix> = (0..n).map(|k| e1.pow(2 * k as u32 + 1)).collect();
    basis.extend((0..n).map(|k| e1.pow(2 * k as u32).mul(&e2)));
    basis.push(x.clone());
    let basis_in_centralizer = basis.iter().all(|b| z.contains(b.flat()));
    let basis_rank = Subspace::from_matrices(dim, &basis).dim();

    let jordan_e1 = jordan_type(&e1);
    let jordan_e2 = jordan_type(&e2);
    let mut expected_e2 = vec![2; 2 * n];
    expected_e2.extend([1, 1]);
    let jordan_expected = jordan_e1 == vec![2 * n + 1; 2] && jordan_e2 == expected_e2;

    let solved = solve_diagonal_pair(&pair, &form);
    let biexponents = match &solved {
        Some((h, _)) if h.is_integral() => {
            let dec = Grading::new(h)?.bigrade(&z, "z_so(e)")?;
            Some(dec.multiset())
        }
        _ => None,
    };
    let show = |v: &[Rational]| v.iter().map(crate::exact::fmt_rational).collect::<Vec<_>>();
    Ok(SoPairReport {
        n,
        dim_v: dim,
        rank: 2 * n + 1,
        skew_e1: is_skew_for(&e1, &form),
        skew_e2: is_skew_for(&e2, &form),
        skew_x: is_skew_for(&x, &form),
        commutes: pair.commutes(),
        nilpotent: pair.is_nilpotent(),
        dim_centralizer: z.dim(),
        basis_in_centralizer,
        basis_rank,
        basis_spans: basis_in_centralizer && basis_rank == z.dim() && basis.len() == z.dim(),
        jordan_e1,
        jordan_e2,
        jordan_expected,
        h1: solved.as_ref().map(|(h, _)| show(&h.h1)),
        h2: solved.as_ref().map(|(h, _)| show(&h.h2)),
        h_freedom: solved.as_ref().map(|(_, f)| *f),
        biexponents,
        form,
        e1,
        e2,
        x,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct CentralSoReport {
    pub diagram: String,
    /// Boxes recentred so that the diagram is symmetric about (0,0), in basis order.
    pub boxes: Vec<Cell>,
    pub form: Matrix,
    pub form_symmetric: bool,
    pub form_nondegenerate: bool,
    pub skew_e1: bool,
    pub skew_e2: bool,
    pub commutes: bool,
    pub dim_centralizer_so: Option<usize>,
    pub rank: usize,
    /// Every element of z_so(e) is nilpotent; only meaningful for a commuting pair.
    pub distinguished: Option<bool>,
    pub principal: Option<bool>,
}

/// e_λ on a centrally symmetric diagram together with the orthogonal form
/// ω(v_{p,q}, v_{−p,−q}) = (−1)^{p+q}.
pub fn centrally_symmetric_so(d: &Diagram) -> Result<CentralSoReport> {
    let (w, h) = (d.width() - 1, d.height() - 1);
    if w % 2 != 0 || h % 2 != 0 {
        return Err(Error::Symmetry(format!(
            "{}: centre ({w}/2, {h}/2) is not a lattice point",
            d.to_spec()
        )));
    }
    let (cp, cq) = (w / 2, h / 2);
    let cells: Vec<Cell> = d.boxes().iter().map(|&(p, qq)| (p - cp, qq - cq)).collect();
    let set: BTreeSet<Cell> = cells.iter().copied().collect();
    if let Some(&(p, qq)) = cells.iter().find(|&&(p, qq)| !set.contains(&(-p, -qq))) {
        return Err(Error::Symmetry(format!(
            "{}: box ({p},{qq}) has no partner at ({},{})",
            d.to_spec(),
            -p,
            -qq
        )));
    }
    let index: BTreeMap<Cell, usize> = cells.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let dim = cells.len();
    let mut form = Matrix::zeros(dim, dim);
    for (i, &(p, qq)) in cells.iter().enumerate() {
        let k = index[&(-p, -qq)];
        form.set(i, k, q(if (p + qq).rem_euclid(2) == 0 { 1 } else { -1 }));
    }
    let provenance = Provenance::Diagram {
        spec: d.to_spec(),
        boxes: cells.clone(),
    };
    let (pair, _) = pair_from_cells(&cells, provenance);
    let commutes = pair.commutes();
    let rank = dim / 2;
    let (dim_centralizer_so, distinguished, principal) = if commutes {
        let z =
            centralizer_of(&[&pair.e1, &pair.e2], dim, Ambient::Gl).intersect(&form_algebra(&form));
        // z_so(e) is a Lie algebra: by Engel it consists of nilpotents iff
        // the associative algebra it generates is nil, i.e. all traces vanish.
        let mats = z.basis_matrices(dim);
        let nil = associative_closure(dim, &mats)
            .basis_matrices(dim)
            .iter()
            .all(|m| m.trace().is_zero());
        (Some(z.dim()), Some(nil), Some(z.dim() == rank))
    } else {
        (None, None, None)
    };
    Ok(CentralSoReport {
        diagram: d.to_spec(),
        boxes: cells,
        form_symmetric: form.transpose() == form,
        form_nondegenerate: !form.det().is_zero(),
        skew_e1: is_skew_for(&pair.e1, &form),
        skew_e2: is_skew_for(&pair.e2, &form),
        form,
        commutes,
        dim_centralizer_so,
        rank,
        distinguished,
        principal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::parse;

    fn spec(s: &str) -> EmbeddingSpec {
        s.parse().unwrap()
    }

    #[test]
    fn plethysms_match_weight_oracle() {
        for a in 0..=8 {
            for b in 0..=8 {
                let ws: Vec<i64> = weights(a)
                    .iter()
                    .flat_map(|&x| weights(b).into_iter().map(move |y| x + y))
                    .collect();
                assert_eq!(decompose_weights(&ws), clebsch_gordan(a, b));
            }
            let w = weights(a);
            let s2: Vec<i64> = (0..w.len())
                .flat_map(|i| (i..w.len()).map(move |k| (i, k)))
                .map(|(i, k)| w[i] + w[k])
                .collect();
            let a2: Vec<i64> = (0..w.len())
                .flat_map(|i| (i + 1..w.len()).map(move |k| (i, k)))
                .map(|(i, k)| w[i] + w[k])
                .collect();
            assert_eq!(decompose_weights(&s2), sym2(a), "S²R({a})");
            assert_eq!(decompose_weights(&a2), alt2(a), "Λ²R({a})");
        }
        assert_eq!(clebsch_gordan(1, 1), vec![2, 0]);
        assert_eq!(alt2(2), vec![2]);
        assert_eq!(sym2(1), vec![2]);
    }

    #[test]
    fn decompositions_of_examples() {
        let sl4 = decompose_g(&spec("sl:2x2")).unwrap();
        assert_eq!(sl4.summands, vec![(2, 2), (2, 0), (0, 2)]);
        assert_eq!(decompose_g(&spec("so:3x1,1x3")).unwrap().len(), 3);
        for n in 1..=6 {
            let principal =
                decompose_g(&EmbeddingSpec::new(Algebra::Sl, vec![(n, 1)]).unwrap()).unwrap();
            let expected: Vec<Summand> = (1..n).rev().map(|k| (2 * k, 0)).collect();
            assert_eq!(principal.summands, expected);
        }
    }

    #[test]
    fn dimension_bookkeeping_and_oracle() {
        for j in enumerate_j(12, 3) {
            for a in Algebra::ALL {
                let s = EmbeddingSpec::new(a, j.clone()).unwrap();
                if let Ok(dec) = decompose_g(&s) {
                    assert_eq!(dec.dim(), a.dim(s.dim_v()));
                    assert_eq!(dec, decompose_g_by_weights(&s), "{s}");
                }
            }
        }
    }

    #[test]
    fn verdicts() {
        let v = is_rectangular_pnpair(&spec("sl:2x2")).unwrap();
        assert!(v.accepted);
        assert_eq!(v.biexponents.unwrap(), vec![(0, 1), (1, 0), (1, 1)]);
        assert!(is_rectangular_pnpair(&spec("sp:2x1")).unwrap().accepted);
        // Same parity, one block: on the list for so, and the count agrees.
        assert!(is_rectangular_pnpair(&spec("so:2x2")).unwrap().accepted);
        assert!(!is_rectangular_pnpair(&spec("so:2x1,2x1")).unwrap().accepted);
        assert!(matches!(decompose_g(&spec("so:2x1")), Err(Error::Form(_))));
        assert!(matches!(decompose_g(&spec("sp:3x1")), Err(Error::Form(_))));
    }

    #[test]
    fn classification_to_twelve() {
        let r = classify_thm85(12, 6).unwrap();
        for t in &r.types {
            assert!(t.holds(), "{:?}", t);
        }
        let sl = &r.types[0];
        assert!(sl.accepted.iter().all(|s| !s.contains(',')));
        assert!(
            r.sl_crosscheck.iter().all(|c| c.agrees),
            "{:?}",
            r.sl_crosscheck
        );
    }

    #[test]
    fn so_pair_small_cases() {
        for n in 1..=2 {
            let r = so_nonrectangular_pair(n).unwrap();
            assert!(r.holds(), "{r:?}");
            assert_eq!(r.dim_centralizer, 2 * n + 1);
        }
    }

    #[test]
    fn jordan_types() {
        let d = parse("3,3").unwrap();
        let (p, _) = build_pair(&d).unwrap();
        assert_eq!(jordan_type(&p.e1), vec![3, 3]);
        assert_eq!(jordan_type(&p.e2), vec![2, 2, 2]);
    }

    #[test]
    fn central_symmetry() {
        let row = centrally_symmetric_so(&parse("3").unwrap()).unwrap();
        assert!(row.form_nondegenerate && row.skew_e1 && row.skew_e2);
        assert_eq!(row.principal, Some(true));
        let square = centrally_symmetric_so(&parse("3,3,3").unwrap()).unwrap();
        assert!(square.skew_e1 && square.skew_e2 && square.commutes);
        assert_eq!(square.distinguished, Some(true));
        let plus = Diagram::new([(0, -1), (-1, 0), (0, 0), (1, 0), (0, 1)]).unwrap();
        let r = centrally_symmetric_so(&plus).unwrap();
        assert!(r.form_symmetric && r.form_nondegenerate && r.skew_e1 && r.skew_e2);
        assert!(matches!(
            centrally_symmetric_so(&parse("2,1").unwrap()),
            Err(Error::Symmetry(_))
        ));
        assert!(matches!(
            centrally_symmetric_so(&parse("3,1,1").unwrap()),
            Err(Error::Symmetry(_))
        ));
    }
}
