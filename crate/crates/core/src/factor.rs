//! 2-factors as circuit decompositions with length statistics and the
//! potential `I = Σ (7 − |C|_o) / 2`.

use std::collections::BTreeMap;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Circuit, CubicGraph, EdgeId};
use crate::matching::PerfectMatching;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum FactorError {
    #[error("vertex {vertex} has {degree} factor edges, expected 2")]
    NotTwoRegular { vertex: usize, degree: usize },
    #[error("edge {0} does not belong to the graph")]
    UnknownEdge(EdgeId),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorStats {
    pub n: usize,
    pub circuits: usize,
    /// Number of odd circuits.
    pub odd: usize,
    pub count3: usize,
    pub count5: usize,
    /// Circuit length -> multiplicity.
    pub lengths: BTreeMap<usize, usize>,
    pub invariant_i: Ratio<i64>,
}

/// `|C|_o`: the length for odd circuits, length + 7 for even ones.
pub fn odd_weighted_length(len: usize) -> i64 {
    if len % 2 == 1 {
        len as i64
    } else {
        len as i64 + 7
    }
}

/// `Σ (7 − |C|_o) / 2` over circuit lengths.
pub fn invariant_i<I: IntoIterator<Item = usize>>(lengths: I) -> Ratio<i64> {
    lengths
        .into_iter()
        .map(|l| Ratio::new(7 - odd_weighted_length(l), 2))
        .fold(Ratio::from_integer(0), |a, b| a + b)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoFactor {
    circuits: Vec<Circuit>,
    stats: FactorStats,
}

impl TwoFactor {
    /// Decomposes the edges marked in `mask` into circuits.
    pub fn from_edge_mask(g: &CubicGraph, mask: &[bool]) -> Result<Self, FactorError> {
        assert_eq!(mask.len(), g.edge_count());
        for v in 0..g.n() {
            let degree = g.incident(v).iter().filter(|e| mask[e.0]).count();
            if degree != 2 {
                return Err(FactorError::NotTwoRegular { vertex: v, degree });
            }
        }
        let mut seen = vec![false; g.n()];
        let mut circuits = Vec::new();
        for s in 0..g.n() {
            if seen[s] {
                continue;
            }
            let mut vertices = vec![s];
            let mut edges = Vec::new();
            seen[s] = true;
            let mut cur = s;
            let mut prev: Option<EdgeId> = None;
            loop {
                let e = g
                    .incident(cur)
                    .into_iter()
                    .find(|&e| mask[e.0] && Some(e) != prev)
                    .expect("two factor edges at every vertex");
                edges.push(e);
                let next = g.other_end(e, cur);
                if next == s {
                    break;
                }
                seen[next] = true;
                vertices.push(next);
                prev = Some(e);
                cur = next;
            }
            circuits.push(Circuit { vertices, edges }.canonicalize());
        }
        circuits.sort_by(|a, b| a.vertices[0].cmp(&b.vertices[0]));
        let stats = compute_stats(g.n(), &circuits);
        Ok(TwoFactor { circuits, stats })
    }

    pub fn from_edges(g: &CubicGraph, edges: &[EdgeId]) -> Result<Self, FactorError> {
        let mut mask = vec![false; g.edge_count()];
        for &e in edges {
            if e.0 >= g.edge_count() {
                return Err(FactorError::UnknownEdge(e));
            }
            mask[e.0] = true;
        }
        Self::from_edge_mask(g, &mask)
    }

    /// The 2-factor `E(g) ∖ m`.
    pub fn complement_of(g: &CubicGraph, m: &PerfectMatching) -> Result<Self, FactorError> {
        let mut mask = vec![true; g.edge_count()];
        for &e in m.edges() {
            if e.0 >= g.edge_count() {
                return Err(FactorError::UnknownEdge(e));
            }
            mask[e.0] = false;
        }
        Self::from_edge_mask(g, &mask)
    }

    pub fn circuits(&self) -> &[Circuit] {
        &self.circuits
    }

    pub fn stats(&self) -> &FactorStats {
        &self.stats
    }

    pub fn edge_mask(&self, edge_count: usize) -> Vec<bool> {
        let mut mask = vec![false; edge_count];
        for c in &self.circuits {
            for e in &c.edges {
                mask[e.0] = true;
            }
        }
        mask
    }

    /// Sorted factor edges.
    pub fn edges(&self) -> Vec<EdgeId> {
        let mut es: Vec<EdgeId> = self.circuits.iter().flat_map(|c| c.edges.iter().copied()).collect();
        es.sort_unstable();
        es
    }

    /// The complementary perfect matching.
    pub fn matching(&self, g: &CubicGraph) -> PerfectMatching {
        let mask = self.edge_mask(g.edge_count());
        let es: Vec<EdgeId> = g.edge_ids().filter(|e| !mask[e.0]).collect();
        PerfectMatching::new(g, es).expect("complement of a 2-factor is a perfect matching")
    }

    /// Re-derives the decomposition from scratch and compares.
    pub fn is_valid_in(&self, g: &CubicGraph) -> bool {
        self.circuits.iter().all(|c| c.is_valid_in(g))
            && match TwoFactor::from_edges(g, &self.edges()) {
                Ok(f) => f == *self,
                Err(_) => false,
            }
    }
}

fn compute_stats(n: usize, circuits: &[Circuit]) -> FactorStats {
    let mut lengths = BTreeMap::new();
    for c in circuits {
        *lengths.entry(c.len()).or_insert(0) += 1;
    }
    FactorStats {
        n,
        circuits: circuits.len(),
        odd: circuits.iter().filter(|c| c.is_odd()).count(),
        count3: lengths.get(&3).copied().unwrap_or(0),
        count5: lengths.get(&5).copied().unwrap_or(0),
        invariant_i: invariant_i(circuits.iter().map(Circuit::len)),
        lengths,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_factor() {
        let g = CubicGraph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        // matching {01, 23}
        let f = TwoFactor::from_edges(&g, &[EdgeId(1), EdgeId(2), EdgeId(3), EdgeId(4)]).unwrap();
        assert_eq!(f.circuits().len(), 1);
        assert_eq!(f.circuits()[0].vertices, vec![0, 2, 1, 3]);
        assert_eq!(f.stats().invariant_i, Ratio::from_integer(-2));
        assert_eq!(f.matching(&g).edges(), &[EdgeId(0), EdgeId(5)]);
    }

    #[test]
    fn rejects_non_factor() {
        let g = CubicGraph::new(2, [(0, 1), (0, 1), (0, 1)]).unwrap();
        assert_eq!(
            TwoFactor::from_edges(&g, &[EdgeId(0)]),
            Err(FactorError::NotTwoRegular { vertex: 0, degree: 1 })
        );
        let f = TwoFactor::from_edges(&g, &[EdgeId(2), EdgeId(0)]).unwrap();
        assert_eq!(f.circuits()[0].edges, vec![EdgeId(0), EdgeId(2)]);
        assert_eq!(f.stats().lengths.get(&2), Some(&1));
    }

    #[test]
    fn invariant_values() {
        assert_eq!(invariant_i([5, 5]), Ratio::from_integer(2));
        assert_eq!(invariant_i([3]), Ratio::from_integer(2));
        assert_eq!(invariant_i([9]), Ratio::from_integer(-1));
        assert_eq!(invariant_i([2]), Ratio::new(-2, 2));
    }
}
