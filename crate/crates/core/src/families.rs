//! Named graphs and the extremal families.

use thiserror::Error;

use crate::connectivity::bonds_of_size;
use crate::graph::CubicGraph;
use crate::patterns::{pattern_graph, PatternKind};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("parameter {0} out of range")]
    BadParameter(usize),
    #[error("number of copies must be even, got {0}")]
    OddCopies(usize),
    #[error("no arrangement without a 2-edge-cut was found")]
    ConstructionFailed,
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
}

/// Outer cycle `i, i+1`, spokes `i, i+5`, inner pentagram.
pub fn gen_petersen() -> CubicGraph {
    let mut e = Vec::new();
    for i in 0..5 {
        e.push((i, (i + 1) % 5));
        e.push((i, i + 5));
    }
    e.extend([(5, 7), (7, 9), (9, 6), (6, 8), (8, 5)]);
    CubicGraph::new(10, e).expect("Petersen graph")
}

pub fn gen_k4() -> CubicGraph {
    CubicGraph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).expect("K4")
}

pub fn gen_k33() -> CubicGraph {
    CubicGraph::new(6, (0..3).flat_map(|a| (3..6).map(move |b| (a, b)))).expect("K3,3")
}

pub fn gen_prism() -> CubicGraph {
    CubicGraph::new(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]).expect("prism")
}

pub fn gen_cube() -> CubicGraph {
    let e = (0..8usize).flat_map(|v| (0..3).map(move |b| (v, v ^ (1 << b)))).filter(|&(u, v)| u < v);
    CubicGraph::new(8, e).expect("cube")
}

/// Two vertices joined by three parallel edges.
pub fn gen_theta() -> CubicGraph {
    CubicGraph::new(2, [(0, 1), (0, 1), (0, 1)]).expect("theta")
}

/// Flower snark `J_k` (`k` odd, at least 3): centres `a_i` joined to `b_i`,
/// `c_i`, `d_i`; the `b_i` form a `k`-cycle and the `c_i`, `d_i` a single
/// `2k`-cycle.
pub fn gen_flower(k: usize) -> Result<CubicGraph, FamilyError> {
    if k < 3 || k.is_multiple_of(2) {
        return Err(FamilyError::BadParameter(k));
    }
    let (a, b, c, d) = (|i: usize| 4 * i, |i: usize| 4 * i + 1, |i: usize| 4 * i + 2, |i: usize| 4 * i + 3);
    let mut e = Vec::new();
    for i in 0..k {
        let j = (i + 1) % k;
        e.extend([(a(i), b(i)), (a(i), c(i)), (a(i), d(i)), (b(i), b(j))]);
        if j == 0 {
            e.extend([(c(i), d(0)), (d(i), c(0))]);
        } else {
            e.extend([(c(i), c(j)), (d(i), d(j))]);
        }
    }
    Ok(CubicGraph::new(4 * k, e).expect("flower snark is cubic"))
}

/// Appends a copy of `kind` at `offset` and returns its degree-2 vertices.
fn add_block(edges: &mut Vec<(usize, usize)>, kind: PatternKind, offset: usize) -> Vec<usize> {
    let p = pattern_graph(kind);
    edges.extend(p.edges.iter().map(|&(u, v)| (u + offset, v + offset)));
    p.degree_two_vertices().into_iter().map(|v| v + offset).collect()
}

/// Two hub vertices joined by three chains of `k` copies of `P1` each;
/// `30k + 2` vertices.
pub fn gen_chain_family(k: usize) -> CubicGraph {
    assert!(k >= 1, "chain length must be positive");
    let mut edges = Vec::new();
    let (u, v) = (0, 1);
    let mut next = 2;
    for _ in 0..3 {
        let mut prev = u;
        for _ in 0..k {
            let ends = add_block(&mut edges, PatternKind::P1, next);
            next += 10;
            edges.push((prev, ends[0]));
            prev = ends[1];
        }
        edges.push((prev, v));
    }
    CubicGraph::new(next, edges).expect("chain family is cubic")
}

/// `copies` copies of `P3` on a ring: each copy sends one edge to each ring
/// neighbour and its third edge to the opposite copy. The roles of the
/// three attachment vertices are rotated until no 2-edge-cut remains.
pub fn gen_p3_ring(copies: usize) -> Result<CubicGraph, FamilyError> {
    if copies < 2 || copies % 2 == 1 {
        return Err(FamilyError::OddCopies(copies));
    }
    for rotation in 0..3 {
        let mut edges = Vec::new();
        let mut ends = Vec::new();
        for i in 0..copies {
            let mut d = add_block(&mut edges, PatternKind::P3, 9 * i);
            // alternate copies get rotated roles
            if i % 2 == 1 {
                d.rotate_left(rotation);
            }
            ends.push(d);
        }
        for i in 0..copies {
            let j = (i + 1) % copies;
            edges.push((ends[i][1], ends[j][0]));
        }
        for i in 0..copies / 2 {
            edges.push((ends[i][2], ends[i + copies / 2][2]));
        }
        let g = CubicGraph::new(9 * copies, edges).expect("ring is cubic");
        if g.is_connected() && bonds_of_size(&g, 1).is_empty() && bonds_of_size(&g, 2).is_empty() {
            return Ok(g);
        }
    }
    Err(FamilyError::ConstructionFailed)
}

/// Builds a graph from a family name and parameter, as used on the command
/// line: `petersen`, `k4`, `k33`, `prism`, `cube`, `theta`, `chain <k>`,
/// `p3ring <copies>`, `flower <k>`.
pub fn generate(family: &str, param: Option<usize>) -> Result<CubicGraph, FamilyError> {
    match (family, param) {
        ("petersen", _) => Ok(gen_petersen()),
        ("k4", _) => Ok(gen_k4()),
        ("k33", _) => Ok(gen_k33()),
        ("prism", _) => Ok(gen_prism()),
        ("cube", _) => Ok(gen_cube()),
        ("theta", _) => Ok(gen_theta()),
        ("chain", Some(k)) if k >= 1 => Ok(gen_chain_family(k)),
        ("chain", p) => Err(FamilyError::BadParameter(p.unwrap_or(0))),
        ("p3ring", Some(c)) => gen_p3_ring(c),
        ("p3ring", None) => Err(FamilyError::BadParameter(0)),
        ("flower", Some(k)) => gen_flower(k),
        ("flower", None) => Err(FamilyError::BadParameter(0)),
        (other, _) => Err(FamilyError::UnknownFamily(other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connectivity::is_bridgeless;
    use crate::graph::girth;

    #[test]
    fn chain_sizes() {
        for k in 1..=3 {
            let g = gen_chain_family(k);
            assert_eq!(g.n(), 30 * k + 2);
            assert!(is_bridgeless(&g));
            assert_eq!(girth(&g), 5);
        }
    }

    #[test]
    fn ring_sizes() {
        assert_eq!(gen_p3_ring(2).unwrap().n(), 18);
        assert_eq!(gen_p3_ring(4).unwrap().n(), 36);
        assert_eq!(gen_p3_ring(3), Err(FamilyError::OddCopies(3)));
    }

    #[test]
    fn named_graphs() {
        assert_eq!(girth(&gen_cube()), 4);
        assert_eq!(girth(&gen_prism()), 3);
        assert_eq!(girth(&gen_k33()), 4);
        assert_eq!(girth(&gen_theta()), 2);
        assert!(generate("nope", None).is_err());
        assert_eq!(girth(&gen_flower(5).unwrap()), 5);
        assert!(gen_flower(4).is_err());
    }
}
