mod common;

use fivecycle::families::{gen_cube, gen_k33, gen_k4, gen_petersen};
use fivecycle::matching::{
    enumerate_min_weight_matchings, enumerate_perfect_matchings, fractional_objective_value,
    min_weight_perfect_matching, MatchingError,
};
use fivecycle::{CubicGraph, EdgeId, PerfectMatching, WeightVector};
use num_rational::Ratio;
use proptest::prelude::*;

fn ids(m: &PerfectMatching) -> Vec<usize> {
    m.edges().iter().map(|e| e.0).collect()
}

/// Optimum and the lexicographically smallest optimal matching, by brute
/// force.
fn brute_optimum(g: &CubicGraph, w: &[i64]) -> (i64, Vec<usize>) {
    common::brute_matchings(g)
        .into_iter()
        .map(|m| (m.iter().map(|&e| w[e]).sum::<i64>(), m))
        .min()
        .unwrap()
}

#[test]
fn uniform_weights() {
    let k4 = gen_k4();
    assert_eq!(min_weight_perfect_matching(&k4, &WeightVector::uniform(6, 4)).unwrap().1, 8);
    let p = gen_petersen();
    let (m, opt) = min_weight_perfect_matching(&p, &WeightVector::uniform(15, 4)).unwrap();
    assert_eq!(opt, 20);
    assert_eq!(m.edges().len(), 5);
    assert_eq!(fractional_objective_value(&p, &WeightVector::uniform(15, 4)), Ratio::from_integer(20));
}

#[test]
fn a_free_spoke_is_used() {
    let p = gen_petersen();
    let spoke = EdgeId(1);
    assert_eq!(p.ends(spoke), (0, 5));
    let mut w = WeightVector::uniform(15, 4);
    w.add(spoke, -4);
    let (m, opt) = min_weight_perfect_matching(&p, &w).unwrap();
    assert_eq!(opt, 16);
    assert!(m.contains(spoke));
    assert_eq!(fractional_objective_value(&p, &w), Ratio::new(56, 3));
}

#[test]
fn matching_counts() {
    assert_eq!(enumerate_perfect_matchings(&gen_k4(), 100).unwrap().len(), 3);
    assert_eq!(enumerate_perfect_matchings(&gen_petersen(), 100).unwrap().len(), 6);
    assert_eq!(enumerate_perfect_matchings(&gen_k33(), 100).unwrap().len(), 6);
    assert_eq!(enumerate_perfect_matchings(&gen_cube(), 100).unwrap().len(), 9);
    assert!(matches!(enumerate_perfect_matchings(&gen_cube(), 4), Err(MatchingError::CapExceeded { cap: 4 })));
}

#[test]
fn bad_inputs() {
    assert!(matches!(
        min_weight_perfect_matching(&gen_k4(), &WeightVector::zeros(5)),
        Err(MatchingError::WrongLength { got: 5, expected: 6 })
    ));
    assert!(PerfectMatching::new(&gen_k4(), vec![EdgeId(0), EdgeId(1)]).is_err());
}

#[test]
fn census_counts_match_brute_force() {
    for (id, g) in common::census(12) {
        let ours: Vec<Vec<usize>> = {
            let mut v: Vec<_> = enumerate_perfect_matchings(&g, 1 << 20).unwrap().iter().map(ids).collect();
            v.sort();
            v
        };
        assert_eq!(ours, common::brute_matchings(&g), "{id}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn blossom_matches_brute_force(half in 1usize..7, seed in any::<u64>(), ws in prop::collection::vec(0i64..12, 18)) {
        let g = common::random_multigraph(2 * half, seed);
        let w: Vec<i64> = ws[..g.edge_count()].to_vec();
        let wv = WeightVector::from_vec(w.clone()).unwrap();
        let (m, opt) = min_weight_perfect_matching(&g, &wv).unwrap();
        let (bopt, bmin) = brute_optimum(&g, &w);
        prop_assert_eq!(opt, bopt);
        prop_assert_eq!(m.weight(&wv), opt);
        prop_assert_eq!(ids(&m), bmin);
        prop_assert!(Ratio::from_integer(opt) <= fractional_objective_value(&g, &wv));

        let optimal = enumerate_min_weight_matchings(&g, &wv, opt, 1 << 16).unwrap();
        let expected = common::brute_matchings(&g).into_iter().filter(|m| m.iter().map(|&e| w[e]).sum::<i64>() == opt).count();
        prop_assert_eq!(optimal.len(), expected);
        prop_assert!(optimal.iter().all(|x| x.weight(&wv) == opt));
    }
}
