mod common;

use std::collections::BTreeMap;

use fivecycle::families::{gen_cube, gen_k33, gen_k4, gen_petersen, gen_prism, gen_theta};
use fivecycle::graph::{enumerate_circuits_up_to, girth};
use fivecycle::io::{parse_cubicmg, parse_graph, parse_graph6, parse_graphs, serialize_graph, to_cubicmg, to_graph6};
use fivecycle::{CubicGraph, GraphError};
use proptest::prelude::*;

fn sorted_edges(g: &CubicGraph) -> Vec<(usize, usize)> {
    let mut e: Vec<(usize, usize)> = g.edge_list().into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
    e.sort_unstable();
    e
}

fn length_profile(circuits: impl IntoIterator<Item = usize>) -> BTreeMap<usize, usize> {
    let mut m = BTreeMap::new();
    for l in circuits {
        *m.entry(l).or_insert(0) += 1;
    }
    m
}

#[test]
fn parses_k4_graph6() {
    let g = parse_graph("C~").unwrap();
    assert_eq!((g.n(), g.edge_count()), (4, 6));
    assert_eq!(sorted_edges(&g), sorted_edges(&gen_k4()));
    assert_eq!(parse_graph(">>graph6<<C~\n").unwrap().n(), 4);
}

#[test]
fn parses_petersen_edge_list() {
    let mut text = String::from("cubicmg 10 15\n");
    for i in 0..5 {
        text += &format!("{i} {}\n{i} {}\n", (i + 1) % 5, i + 5);
    }
    text += "5 7\n7 9\n9 6\n6 8\n8 5\n";
    let g = parse_graph(&text).unwrap();
    assert_eq!((g.n(), g.edge_count()), (10, 15));
    assert_eq!(g, gen_petersen());
}

#[test]
fn path_is_not_cubic() {
    let err = parse_cubicmg("cubicmg 3 2\n0 1\n1 2\n").unwrap_err();
    assert!(matches!(err, GraphError::NotCubic { .. }), "{err:?}");
    assert!(matches!(parse_cubicmg("cubicmg 2 3\n0 0\n0 1\n1 1\n"), Err(GraphError::LoopEdge(_))));
    assert!(parse_graph6("").is_err());
}

#[test]
fn bad_records_do_not_stop_a_file() {
    let recs = parse_graphs("C~\n\n# comment\nBg\nC~\n");
    assert_eq!(recs.len(), 3);
    assert!(recs[0].result.is_ok() && recs[1].result.is_err() && recs[2].result.is_ok());
    assert_eq!(recs.iter().map(|r| r.line).collect::<Vec<_>>(), [1, 4, 5]);
}

#[test]
fn girth_examples() {
    assert_eq!(girth(&gen_k4()), 3);
    assert_eq!(girth(&gen_petersen()), 5);
    assert_eq!(girth(&gen_theta()), 2);
    assert_eq!(girth(&gen_k33()), 4);
    assert_eq!(girth(&gen_cube()), 4);
}

#[test]
fn circuit_examples() {
    let p = enumerate_circuits_up_to(&gen_petersen(), 5);
    assert_eq!(p.len(), 12);
    assert!(p.iter().all(|c| c.len() == 5));
    let k = enumerate_circuits_up_to(&gen_k33(), 5);
    assert_eq!(k.len(), 9);
    assert!(k.iter().all(|c| c.len() == 4));
    assert!(enumerate_circuits_up_to(&gen_k4(), 2).is_empty());
    assert_eq!(enumerate_circuits_up_to(&gen_theta(), 2).len(), 3);
}

#[test]
fn circuits_match_subset_enumeration() {
    for g in [gen_petersen(), gen_k33(), gen_k4(), gen_prism(), gen_cube(), gen_theta()] {
        let brute = common::brute_circuits(&g);
        let max = brute.iter().map(Vec::len).max().unwrap();
        let ours = enumerate_circuits_up_to(&g, max.min(9));
        let expected: Vec<usize> = brute.iter().map(Vec::len).filter(|&l| l <= 9).collect();
        assert_eq!(length_profile(ours.iter().map(|c| c.len())), length_profile(expected), "n={}", g.n());
        assert!(ours.iter().all(|c| c.is_valid_in(&g)));
    }
}

#[test]
fn serialization_examples() {
    let k4 = gen_k4();
    let back = parse_graph(&serialize_graph(&k4)).unwrap();
    assert_eq!(sorted_edges(&back), sorted_edges(&k4));
    assert_eq!(serialize_graph(&gen_theta()), "cubicmg 2 3\n0 1\n0 1\n0 1\n");
    // networkx writes the same string
    assert_eq!(to_graph6(&gen_petersen()).unwrap(), "IheA@GUAo");
    assert_eq!(serialize_graph(&gen_petersen()), "IheA@GUAo\n");
}

#[test]
fn census_files_parse() {
    // counts of connected cubic graphs on 4..16 vertices
    for (n, count) in [(4, 1), (6, 2), (8, 5), (10, 19), (12, 85), (14, 509), (16, 4060)] {
        let graphs = common::load(&format!("cubic{n}.g6"));
        assert_eq!(graphs.len(), count, "n={n}");
        assert!(graphs.iter().all(|(_, g)| g.n() == n && g.is_simple() && g.is_connected()));
    }
}

proptest! {
    #[test]
    fn cubicmg_round_trip(half in 1usize..8, seed in any::<u64>()) {
        let g = common::random_multigraph(2 * half, seed);
        let back = parse_cubicmg(&to_cubicmg(&g)).unwrap();
        // edge ids follow line order, so the graphs are identical
        prop_assert_eq!(back, g);
    }

    #[test]
    fn graph6_round_trip(half in 2usize..8, seed in any::<u64>()) {
        let g = common::random_multigraph(2 * half, seed);
        match to_graph6(&g) {
            Some(s) => {
                let back = parse_graph6(&s).unwrap();
                prop_assert_eq!(sorted_edges(&back), sorted_edges(&g));
            }
            None => prop_assert!(!g.is_simple()),
        }
    }

    #[test]
    fn girth_is_shortest_circuit(half in 1usize..6, seed in any::<u64>()) {
        let g = common::random_multigraph(2 * half, seed);
        let brute = common::brute_circuits(&g);
        prop_assert_eq!(girth(&g), brute.iter().map(Vec::len).min().unwrap());
        let ours = enumerate_circuits_up_to(&g, 9);
        prop_assert!(ours.iter().all(|c| c.is_valid_in(&g)));
        let expected: Vec<usize> = brute.iter().map(Vec::len).filter(|&l| l <= 9).collect();
        prop_assert_eq!(length_profile(ours.iter().map(|c| c.len())), length_profile(expected));
    }
}
