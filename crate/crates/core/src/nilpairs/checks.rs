//! Structural checks on a graded pair: monomial and in/out-subset bases of the
//! centralizer, weak Lefschetz, parabolic data, trace pairing.

use super::grading::{bracket, Ambient, Bidegree, Grading};
use super::{build_pair, centralizer, NilPair, SemisimplePair};
use crate::diagrams::{Diagram, ShapeClass};
use crate::exact::{q, Matrix, Subspace};
use crate::{Error, Result};
use serde::Serialize;

/// Outcome of a check quantified over bidegrees.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct BidegreeCheck {
    pub holds: bool,
    pub checked: usize,
    pub failures: Vec<Bidegree>,
}

impl BidegreeCheck {
    fn from_results(results: impl IntoIterator<Item = (Bidegree, bool)>) -> Self {
        let mut out = BidegreeCheck::default();
        for (d, ok) in results {
            out.checked += 1;
            if !ok {
                out.failures.push(d);
            }
        }
        out.holds = out.failures.is_empty();
        out
    }
}

/// span{e₁^p e₂^q : (p,q) ∈ d, (p,q) ≠ (0,0)} = z_sl(e_d).
pub fn monomial_basis_check(d: &Diagram) -> Result<bool> {
    if d.classify() != ShapeClass::Young {
        return Err(Error::Precondition(format!(
            "{} is not a Young diagram",
            d.to_spec()
        )));
    }
    let (pair, _) = build_pair(d)?;
    let mons: Vec<Matrix> = d
        .boxes()
        .iter()
        .filter(|&&c| c != (0, 0))
        .map(|&(p, qq)| pair.e1.pow(p as u32).mul(&pair.e2.pow(qq as u32)))
        .collect();
    let span = Subspace::from_matrices(pair.n, &mons);
    Ok(span.dim() == mons.len() && span == centralizer(&pair, Ambient::Sl))
}

#[derive(Clone, Debug, Serialize)]
pub struct Claim58Report {
    pub shift: Bidegree,
    pub pairs: usize,
    pub dim_centralizer: usize,
    pub independent: bool,
    pub spans: bool,
}

impl Claim58Report {
    pub fn holds(&self) -> bool {
        self.independent && self.spans
    }
}

/// The maps f_ν from the (ν_in, ν_out) pairs at shift (p,q) form a basis of z_{p,q}(e_d) in gl.
pub fn claim58_check(d: &Diagram, p: i64, qq: i64) -> Result<Claim58Report> {
    let pairs = d.subset_pairs(p, qq)?;
    let (pair, h) = build_pair(d)?;
    let n = pair.n;
    let mats: Vec<Matrix> = pairs
        .iter()
        .map(|sp| {
            let mut m = Matrix::zeros(n, n);
            for (&a, &b) in sp.nu_in.iter().zip(&sp.nu_out) {
                let (Some(col), Some(row)) = (d.index_of(a), d.index_of(b)) else {
                    unreachable!("subset boxes lie in the diagram");
                };
                m.set(row, col, q(1));
            }
            m
        })
        .collect();
    let span = Subspace::from_matrices(n, &mats);
    let g = Grading::new(&h)?;
    let z = g.block_kernel((p, qq), Ambient::Gl, &[&pair.e1, &pair.e2]);
    Ok(Claim58Report {
        shift: (p, qq),
        pairs: mats.len(),
        dim_centralizer: z.dim(),
        independent: span.dim() == mats.len(),
        spans: span == z,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct LefschetzEntry {
    pub p: i64,
    pub q: i64,
    pub operator: &'static str,
    pub expected: &'static str,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct LefschetzReport {
    pub all_pass: bool,
    pub entries: Vec<LefschetzEntry>,
}

/// ad e₁ : g_{p,q} → g_{p+1,q} injective for p < 0, surjective for p ≥ 0; likewise e₂ in q.
pub fn weak_lefschetz_report(pair: &NilPair, h: &SemisimplePair) -> Result<LefschetzReport> {
    let g = Grading::new(h)?;
    let mut entries = Vec::new();
    for d in g.support().collect::<Vec<_>>() {
        let src_dim = g.block_dim(d, Ambient::Sl);
        if src_dim == 0 {
            continue;
        }
        let src = g.block(d, Ambient::Sl);
        for (name, e, coord, step) in [("e1", &pair.e1, d.0, (1, 0)), ("e2", &pair.e2, d.1, (0, 1))]
        {
            let target = (d.0 + step.0, d.1 + step.1);
            let rank = src.rank_of(|v| bracket(e, v));
            let (expected, holds) = if coord < 0 {
                ("injective", rank == src_dim)
            } else {
                ("surjective", rank == g.block_dim(target, Ambient::Sl))
            };
            entries.push(LefschetzEntry {
                p: d.0,
                q: d.1,
                operator: name,
                expected,
                holds,
            });
        }
    }
    Ok(LefschetzReport {
        all_pass: entries.iter().all(|e| e.holds),
        entries,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ParabolicReport {
    pub e1_orbit_tangent: bool,
    pub e2_orbit_tangent: bool,
    pub e1_degree: bool,
    pub e2_degree: bool,
    pub centers_meet_trivially: bool,
    pub levis_generate: bool,
}

impl ParabolicReport {
    pub fn all_pass(&self) -> bool {
        self.e1_orbit_tangent
            && self.e2_orbit_tangent
            && self.e1_degree
            && self.e2_degree
            && self.centers_meet_trivially
            && self.levis_generate
    }
}

fn center(space: &Subspace, n: usize) -> Subspace {
    let basis = space.basis_matrices(n);
    space.kernel_of(|v| basis.iter().flat_map(|b| bracket(b, v)).collect())
}

fn lie_closure(gens: &Subspace, n: usize) -> Subspace {
    let g = gens.basis_matrices(n);
    let mut span = gens.clone();
    loop {
        let mut vecs = span.basis().to_vec();
        for x in &g {
            for v in span.basis() {
                vecs.push(bracket(x, v));
            }
        }
        let next = Subspace::from_vectors(n * n, vecs);
        if next.dim() == span.dim() {
            return span;
        }
        span = next;
    }
}

/// Levi subalgebras g¹ = g_{*,0}, g² = g_{0,*} and the tangent form of the open-orbit statements.
pub fn parabolic_checks(pair: &NilPair, h: &SemisimplePair) -> Result<ParabolicReport> {
    let g = Grading::new(h)?;
    let n = pair.n;
    let sl = Ambient::Sl;
    let g1 = g.region(|d| d.1 == 0, sl);
    let g2 = g.region(|d| d.0 == 0, sl);
    let tangent = |e: &Matrix, levi: &Subspace, target: Subspace| {
        levi.map(n * n, |v| bracket(e, v)) == target
    };
    let e1_orbit_tangent = tangent(&pair.e1, &g2, g.region(|d| d.0 == 1, sl));
    let e2_orbit_tangent = tangent(&pair.e2, &g1, g.region(|d| d.1 == 1, sl));
    let e1_degree = g.block((1, 0), sl).contains(pair.e1.flat());
    let e2_degree = g.block((0, 1), sl).contains(pair.e2.flat());
    let centers_meet_trivially = center(&g1, n).intersect(&center(&g2, n)).is_zero();
    let levis_generate = lie_closure(&g1.sum(&g2), n) == super::trace_zero(n);
    Ok(ParabolicReport {
        e1_orbit_tangent,
        e2_orbit_tangent,
        e1_degree,
        e2_degree,
        centers_meet_trivially,
        levis_generate,
    })
}

/// dim g_{p,q} = dim g_{−p,−q} and the trace form pairs them perfectly (sl).
pub fn killing_pairing_check(h: &SemisimplePair) -> Result<BidegreeCheck> {
    let g = Grading::new(h)?;
    let n = h.n();
    let degs: Vec<Bidegree> = g.dims(Ambient::Sl).into_keys().collect();
    Ok(BidegreeCheck::from_results(degs.into_iter().map(|d| {
        let a = g.block(d, Ambient::Sl).basis_matrices(n);
        let b = g.block((-d.0, -d.1), Ambient::Sl).basis_matrices(n);
        if a.len() != b.len() {
            return (d, false);
        }
        let form = Matrix::from_fn(a.len(), b.len(), |i, j| a[i].mul(&b[j]).trace());
        (d, form.rank() == a.len())
    })))
}

/// Ker(ad e₁·ad e₂) ∩ g_{p,q} = z_{p,q}(e₁) + z_{p,q}(e₂) for p, q ≥ 0.
pub fn kernel_product_check(pair: &NilPair, h: &SemisimplePair) -> Result<BidegreeCheck> {
    let g = Grading::new(h)?;
    let degs: Vec<Bidegree> = g.support().filter(|d| d.0 >= 0 && d.1 >= 0).collect();
    Ok(BidegreeCheck::from_results(degs.into_iter().map(|d| {
        let block = g.block(d, Ambient::Sl);
        let lhs = block.kernel_of(|v| bracket(&pair.e1, &bracket(&pair.e2, v)));
        let rhs = g
            .block_kernel(d, Ambient::Sl, &[&pair.e1])
            .sum(&g.block_kernel(d, Ambient::Sl, &[&pair.e2]));
        (d, lhs == rhs)
    })))
}

/// ad e₁ : z_{p,q}(e₂) → z_{p+1,q}(e₂) and ad e₂ : z_{p,q}(e₁) → z_{p,q+1}(e₁) onto, p, q ≥ 0.
pub fn centralizer_surjectivity_check(pair: &NilPair, h: &SemisimplePair) -> Result<BidegreeCheck> {
    let g = Grading::new(h)?;
    let (_, pmax, _, qmax) = g.bounds();
    let mut results = Vec::new();
    for p in 0..=pmax {
        for qq in 0..=qmax {
            let d = (p, qq);
            let src2 = g.block_kernel(d, Ambient::Sl, &[&pair.e2]);
            let tgt2 = g.block_kernel((p + 1, qq), Ambient::Sl, &[&pair.e2]);
            let ok1 = src2.map(src2.ambient_dim(), |v| bracket(&pair.e1, v)) == tgt2;
            let src1 = g.block_kernel(d, Ambient::Sl, &[&pair.e1]);
            let tgt1 = g.block_kernel((p, qq + 1), Ambient::Sl, &[&pair.e1]);
            let ok2 = src1.map(src1.ambient_dim(), |v| bracket(&pair.e2, v)) == tgt1;
            results.push((d, ok1 && ok2));
        }
    }
    Ok(BidegreeCheck::from_results(results))
}

/// Every z_gl,(p,q) component lies in p, q ≥ 0, and the sl part avoids (0,0).
pub fn positive_quadrant_support(pair: &NilPair, h: &SemisimplePair) -> Result<bool> {
    let g = Grading::new(h)?;
    let dec = g.bigrade(&centralizer(pair, Ambient::Sl), "centralizer")?;
    Ok(dec
        .dims()
        .keys()
        .all(|&(p, qq)| p >= 0 && qq >= 0 && (p, qq) != (0, 0)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::parse;

    #[test]
    fn monomials_span_centralizer() {
        assert!(monomial_basis_check(&parse("2,1").unwrap()).unwrap());
        assert!(monomial_basis_check(&parse("3,2").unwrap()).unwrap());
        assert!(matches!(
            monomial_basis_check(&parse("3,2/1").unwrap()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn box_claim_examples() {
        let r = claim58_check(&parse("2,1").unwrap(), 1, 0).unwrap();
        assert!(r.holds());
        assert_eq!(r.pairs, 1);
        let r = claim58_check(&parse("3").unwrap(), 0, 1).unwrap();
        assert!(r.holds());
        assert_eq!(r.pairs, 0);
    }

    #[test]
    fn lefschetz_and_parabolics_for_hook() {
        let (p, h) = build_pair(&parse("2,1").unwrap()).unwrap();
        assert!(weak_lefschetz_report(&p, &h).unwrap().all_pass);
        assert!(parabolic_checks(&p, &h).unwrap().all_pass());
        assert!(killing_pairing_check(&h).unwrap().holds);
        assert!(kernel_product_check(&p, &h).unwrap().holds);
        assert!(centralizer_surjectivity_check(&p, &h).unwrap().holds);
    }

    #[test]
    fn single_row_generation_is_trivial() {
        let (p, h) = build_pair(&parse("4").unwrap()).unwrap();
        let r = parabolic_checks(&p, &h).unwrap();
        assert!(r.levis_generate);
        assert!(weak_lefschetz_report(&p, &h).unwrap().all_pass);
    }
}
