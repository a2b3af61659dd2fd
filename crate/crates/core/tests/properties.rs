use nilpair::diagrams::{parse, Diagram};
use nilpair::exact::{q, Matrix, Subspace};
use nilpair::nilpairs::{build_pair, centralizer, grassmann_limit, Ambient};
use nilpair::rectangular::{clebsch_gordan, decompose_weights, weights};
use proptest::prelude::*;

fn partition() -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(1usize..=4, 1..=4).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    })
}

fn spec(p: &[usize]) -> String {
    p.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, ..ProptestConfig::default() })]

    #[test]
    fn young_pairs_commute_with_rank_sized_centralizer(p in partition()) {
        let d: Diagram = parse(&spec(&p)).unwrap();
        let (pair, _) = build_pair(&d).unwrap();
        prop_assert!(pair.e1.commutator(&pair.e2).is_zero());
        prop_assert_eq!(centralizer(&pair, Ambient::Sl).dim(), pair.n - 1);
    }

    #[test]
    fn clebsch_gordan_matches_weights(a in 0usize..8, b in 0usize..8) {
        let mut ws = Vec::new();
        for x in weights(a) {
            for y in weights(b) {
                ws.push(x + y);
            }
        }
        let mut got = clebsch_gordan(a, b);
        let mut want = decompose_weights(&ws);
        got.sort_unstable();
        want.sort_unstable();
        prop_assert_eq!(got, want);
    }

    #[test]
    fn grassmann_limit_keeps_dimension(
        rows in prop::collection::vec(prop::collection::vec(-2i64..=2, 5), 1..=3),
    ) {
        // Single nilpotent Jordan block of size 5.
        let n = Matrix::from_fn(5, 5, |i, j| if i == j + 1 { q(1) } else { q(0) });
        let vecs = rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect();
        let e = Subspace::from_vectors(5, vecs);
        let lim = grassmann_limit(&n, &e).unwrap();
        prop_assert_eq!(lim.dim(), e.dim());
        // The limit is stable under the flow, so it is its own limit.
        prop_assert_eq!(grassmann_limit(&n, &lim).unwrap(), lim);
    }
}
