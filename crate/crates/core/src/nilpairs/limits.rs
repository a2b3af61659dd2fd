use super::{centralizer, Ambient, NilPair};
use crate::exact::{Matrix, Rational, Subspace};
use crate::multiplicity::WeightModule;
use crate::{Error, Result};
use num_traits::Zero;
use serde::Serialize;

fn is_zero_vec(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// ⊕_{p,q≥0} x₁^p x₂^q (F_{p,q}E) for commuting nilpotent operators x₁, x₂ on the ambient space,
/// where F_{p,q}E = {v ∈ E : x₁^{p+1}x₂^q v = 0 = x₁^p x₂^{q+1} v}.
pub fn limit_space(x1: &Matrix, x2: &Matrix, e: &Subspace) -> Result<Subspace> {
    let amb = e.ambient_dim();
    if x1.rows() != amb || x2.rows() != amb {
        return Err(Error::Precondition(
            "operator size differs from ambient dimension".into(),
        ));
    }
    if e.is_zero() {
        return Ok(e.clone());
    }
    // table[k][p][q] = x₁^p x₂^q b_k, cut at the first all-zero power in each direction.
    let mut table: Vec<Vec<Vec<Vec<Rational>>>> = Vec::new();
    let mut pmax = 0;
    let mut qmax = 0;
    for b in e.basis() {
        let mut col = vec![b.clone()];
        while !is_zero_vec(col.last().expect("nonempty")) {
            let next = x2.mul_vec(col.last().expect("nonempty"));
            col.push(next);
        }
        let mut rows = vec![col];
        while rows
            .last()
            .expect("nonempty")
            .iter()
            .any(|v| !is_zero_vec(v))
        {
            let next: Vec<Vec<Rational>> = rows
                .last()
                .expect("nonempty")
                .iter()
                .map(|v| x1.mul_vec(v))
                .collect();
            rows.push(next);
        }
        pmax = pmax.max(rows.len());
        qmax = qmax.max(rows[0].len());
        table.push(rows);
    }
    let zero = vec![Rational::zero(); amb];
    let at = |k: usize, p: usize, q: usize| -> &Vec<Rational> {
        table[k].get(p).and_then(|r| r.get(q)).unwrap_or(&zero)
    };
    let dim = e.dim();
    let mut images = Vec::new();
    let mut total = 0;
    for p in 0..pmax {
        for q in 0..qmax {
            // Coefficient vectors c with Σ c_k x₁^{p+1}x₂^q b_k = 0 = Σ c_k x₁^p x₂^{q+1} b_k.
            let cond = Matrix::from_fn(2 * amb, dim, |i, k| {
                if i < amb {
                    at(k, p + 1, q)[i].clone()
                } else {
                    at(k, p, q + 1)[i - amb].clone()
                }
            });
            let f = cond.kernel();
            let img: Vec<Vec<Rational>> = f
                .basis()
                .iter()
                .map(|c| {
                    let mut v = vec![Rational::zero(); amb];
                    for (k, ck) in c.iter().enumerate() {
                        if ck.is_zero() {
                            continue;
                        }
                        for (x, y) in v.iter_mut().zip(at(k, p, q)) {
                            *x += ck * y;
                        }
                    }
                    v
                })
                .collect();
            let s = Subspace::from_vectors(amb, img);
            total += s.dim();
            images.push(s);
        }
    }
    let sum = images.iter().fold(Subspace::zero(amb), |acc, s| acc.sum(s));
    if sum.dim() != total {
        return Err(Error::Hypothesis(format!(
            "Σ x₁^p x₂^q F_(p,q)E is not direct: {} summed dimensions, span {}",
            total,
            sum.dim()
        )));
    }
    Ok(sum)
}

/// lim_{t→∞} exp(tN)E in the Grassmannian of dim E subspaces, for nilpotent N.
///
/// Each basis vector traces a polynomial curve in t. The curves are reduced until their leading
/// coefficients are independent; the leading coefficients then span the limit.
pub fn grassmann_limit(n: &Matrix, e: &Subspace) -> Result<Subspace> {
    let amb = e.ambient_dim();
    if n.rows() != amb || !n.is_square() {
        return Err(Error::Precondition(
            "operator size differs from ambient dimension".into(),
        ));
    }
    if !n.is_nilpotent() {
        return Err(Error::Precondition("operator is not nilpotent".into()));
    }
    // curves[k][j] = N^j b_k / j!, trimmed so the last entry is nonzero.
    let mut curves: Vec<Vec<Vec<Rational>>> = e
        .basis()
        .iter()
        .map(|b| {
            let mut c = vec![b.clone()];
            loop {
                let j = c.len();
                let next: Vec<Rational> = n
                    .mul_vec(c.last().expect("nonempty"))
                    .into_iter()
                    .map(|x| x / Rational::from_integer(j.into()))
                    .collect();
                if is_zero_vec(&next) {
                    break;
                }
                c.push(next);
            }
            c
        })
        .collect();
    loop {
        let leads = Matrix::from_fn(amb, curves.len(), |i, k| {
            curves[k].last().expect("nonempty")[i].clone()
        });
        let rel = leads.kernel();
        let Some(a) = rel.basis().first().cloned() else {
            let vs = curves
                .iter()
                .map(|c| c.last().expect("nonempty").clone())
                .collect();
            return Ok(Subspace::from_vectors(amb, vs));
        };
        let top = (0..curves.len())
            .filter(|&k| !a[k].is_zero())
            .max_by_key(|&k| curves[k].len())
            .expect("nonzero relation");
        let d = curves[top].len();
        let mut next = vec![vec![Rational::zero(); amb]; d];
        for (k, ak) in a.iter().enumerate() {
            if ak.is_zero() {
                continue;
            }
            let shift = d - curves[k].len();
            for (j, v) in curves[k].iter().enumerate() {
                for (x, y) in next[j + shift].iter_mut().zip(v) {
                    *x += ak * y;
                }
            }
        }
        // The relation kills the top coefficient, so the degree drops; exp(tN) is invertible,
        // so the curve never vanishes.
        while next.last().is_some_and(|v| is_zero_vec(v)) {
            next.pop();
        }
        if next.is_empty() {
            return Err(Error::Internal("limit curve vanished".into()));
        }
        curves[top] = next;
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ModuleLimitReport {
    pub mu: Vec<i64>,
    pub dim_weight_space: usize,
    pub dim_limit: usize,
    /// Dimension of Σ x₁^p x₂^q F_(p,q)E, or None when that sum is not direct.
    pub dim_bifiltration_sum: Option<usize>,
    /// Whether the bifiltration sum equals the true limit.
    pub bifiltration_matches: bool,
    pub dim_invariants: usize,
    pub contained: bool,
    pub strict: bool,
}

/// Compares lim_e V(μ) with V^{z(e)} inside a realized module.
pub fn module_limit_check(
    pair: &NilPair,
    v: &WeightModule,
    mu: &[i64],
) -> Result<ModuleLimitReport> {
    if v.n() != pair.n {
        return Err(Error::Precondition(
            "module and pair live over different n".into(),
        ));
    }
    let x1 = v.rep(&pair.e1);
    let x2 = v.rep(&pair.e2);
    let weight = v.weight_space(mu);
    let lim = grassmann_limit(&x1.add(&x2), &weight)?;
    let bif = match limit_space(&x1, &x2, &weight) {
        Ok(s) => Some(s),
        Err(Error::Hypothesis(_)) => None,
        Err(err) => return Err(err),
    };
    let z = centralizer(pair, Ambient::Sl).basis_matrices(pair.n);
    let ops: Vec<Matrix> = z.iter().map(|m| v.rep(m)).collect();
    let invariants = if ops.is_empty() {
        Subspace::full(v.dim())
    } else {
        Matrix::vstack(&ops.iter().collect::<Vec<_>>()).kernel()
    };
    let contained = invariants.contains_space(&lim);
    Ok(ModuleLimitReport {
        mu: mu.to_vec(),
        dim_weight_space: weight.dim(),
        dim_limit: lim.dim(),
        dim_bifiltration_sum: bif.as_ref().map(Subspace::dim),
        bifiltration_matches: bif.as_ref() == Some(&lim),
        dim_invariants: invariants.dim(),
        contained,
        strict: contained && lim.dim() < invariants.dim(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::parse;
    use crate::exact::q;
    use crate::nilpairs::{build_pair, Grading};

    #[test]
    fn cartan_limit_is_centralizer() {
        for spec in ["2,1", "2,2", "3,1"] {
            let (p, h) = build_pair(&parse(spec).unwrap()).unwrap();
            let g = Grading::new(&h).unwrap();
            let cartan = g.block((0, 0), Ambient::Gl);
            let lim = limit_space(&p.e1.ad_matrix(), &p.e2.ad_matrix(), &cartan).unwrap();
            assert_eq!(lim, centralizer(&p, Ambient::Gl), "{spec}");
        }
    }

    #[test]
    fn centralizer_is_its_own_limit() {
        let (p, _) = build_pair(&parse("3,1").unwrap()).unwrap();
        let z = centralizer(&p, Ambient::Gl);
        let lim = limit_space(&p.e1.ad_matrix(), &p.e2.ad_matrix(), &z).unwrap();
        assert_eq!(lim, z);
    }

    #[test]
    fn grassmann_limit_agrees_on_cartan() {
        for spec in ["2,1", "2,2", "3,1", "3,2,1"] {
            let (p, h) = build_pair(&parse(spec).unwrap()).unwrap();
            let g = Grading::new(&h).unwrap();
            let cartan = g.block((0, 0), Ambient::Gl);
            let n = p.e1.ad_matrix().add(&p.e2.ad_matrix());
            let lim = grassmann_limit(&n, &cartan).unwrap();
            assert_eq!(lim.dim(), cartan.dim());
            assert_eq!(lim, centralizer(&p, Ambient::Gl), "{spec}");
        }
    }

    #[test]
    fn grassmann_limit_of_line() {
        // N e0 = e1, N e1 = e2: the line through e0 + e2 tends to the line through e2.
        let n = Matrix::from_i64(&[vec![0, 0, 0], vec![1, 0, 0], vec![0, 1, 0]]);
        let e = Subspace::from_vectors(3, vec![vec![q(1), q(0), q(1)]]);
        let lim = grassmann_limit(&n, &e).unwrap();
        assert_eq!(lim, Subspace::from_vectors(3, vec![vec![q(0), q(0), q(1)]]));
        // span(e0, e1) tends to span(e1, e2): the leading terms e1 and e2 stay independent.
        let e = Subspace::from_vectors(3, vec![vec![q(1), q(0), q(0)], vec![q(0), q(1), q(0)]]);
        let lim = grassmann_limit(&n, &e).unwrap();
        assert_eq!(
            lim,
            Subspace::from_vectors(3, vec![vec![q(0), q(1), q(0)], vec![q(0), q(0), q(1)]])
        );
    }

    #[test]
    fn bifiltration_overcounts_in_cubic_hook() {
        let (p, _) = build_pair(&parse("2,1").unwrap()).unwrap();
        let v = WeightModule::realize(3, &[3]).unwrap();
        let r = module_limit_check(&p, &v, &[0, 0, 0]).unwrap();
        assert_eq!(r.dim_weight_space, 1);
        assert_eq!(r.dim_limit, 1);
        assert_eq!(r.dim_bifiltration_sum, Some(2));
        assert!(!r.bifiltration_matches);
        assert!(r.contained && r.strict);
    }
}
