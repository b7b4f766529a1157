mod common;

use fivecycle::coloring::{even_two_factor_from_coloring, is_colorable, three_edge_color, ColoringError, EdgeColoring};
use fivecycle::families::{gen_chain_family, gen_cube, gen_flower, gen_k33, gen_k4, gen_petersen, gen_theta};
use fivecycle::{CubicGraph, EdgeId, TwoFactor};
use proptest::prelude::*;

/// Colourable iff some perfect matching leaves only even circuits.
fn brute_colorable(g: &CubicGraph) -> bool {
    common::brute_matchings(g).into_iter().any(|m| {
        let mask: Vec<bool> = (0..g.edge_count()).map(|e| !m.contains(&e)).collect();
        TwoFactor::from_edge_mask(g, &mask).unwrap().stats().odd == 0
    })
}

fn assert_coloring(g: &CubicGraph, c: &EdgeColoring) {
    c.check(g).unwrap();
    for colour in 0..3 {
        assert_eq!(c.class(colour).len(), g.n() / 2);
    }
    let f = even_two_factor_from_coloring(g, c).unwrap();
    assert_eq!(f.stats().odd, 0);
}

#[test]
fn named_examples() {
    assert!(three_edge_color(&gen_petersen()).is_none());
    assert!(!is_colorable(&gen_chain_family(1)));
    assert!(!is_colorable(&gen_flower(5).unwrap()));
    for g in [gen_k4(), gen_k33(), gen_cube(), gen_theta()] {
        let c = three_edge_color(&g).unwrap();
        assert_coloring(&g, &c);
    }
    assert_eq!(three_edge_color(&gen_k4()).unwrap().class(1).len(), 2);
    let q3 = gen_cube();
    let f = even_two_factor_from_coloring(&q3, &three_edge_color(&q3).unwrap()).unwrap();
    assert!(f.circuits().iter().all(|c| c.len() % 2 == 0));
}

#[test]
fn improper_colourings_are_rejected() {
    let g = gen_k4();
    assert_eq!(EdgeColoring::new(vec![0; 6]).check(&g), Err(ColoringError::ImproperColoring(0)));
    assert_eq!(EdgeColoring::new(vec![0; 5]).check(&g), Err(ColoringError::WrongLength { got: 5, expected: 6 }));
    let c = three_edge_color(&g).unwrap();
    assert!(c.permuted([2, 0, 1]).is_proper(&g));
    assert_eq!(c.permuted([1, 2, 0]).color(EdgeId(0)), (c.color(EdgeId(0)) + 1) % 3);
}

#[test]
fn census_matches_brute_force() {
    for n in [4, 6, 8, 10, 12, 14] {
        for (line, g) in common::load(&format!("cubic{n}.g6")) {
            let c = three_edge_color(&g);
            assert_eq!(c.is_some(), brute_colorable(&g), "cubic{n}:{line}");
            if let Some(c) = c {
                assert_coloring(&g, &c);
            }
        }
    }
}

#[test]
fn snark_files_are_uncolourable() {
    for (id, g) in common::snarks() {
        assert!(!is_colorable(&g), "{id}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_multigraphs_match_brute_force(half in 1usize..8, seed in any::<u64>()) {
        let g = common::random_multigraph(2 * half, seed);
        let c = three_edge_color(&g);
        prop_assert_eq!(c.is_some(), brute_colorable(&g));
        if let Some(c) = c {
            prop_assert!(c.is_proper(&g));
        }
    }
}
