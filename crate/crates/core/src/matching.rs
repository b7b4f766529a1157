//! Perfect matchings: exact minimum weight, enumeration, and the derived
//! feasibility questions used by pattern classification.

use std::ops::ControlFlow;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::blossom::max_weight_matching;
use crate::graph::{Circuit, CubicGraph, EdgeId};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum MatchingError {
    #[error("graph has no perfect matching")]
    NoPerfectMatching,
    #[error("more than {cap} perfect matchings")]
    CapExceeded { cap: usize },
    #[error("edge set is not a perfect matching (vertex {0})")]
    NotPerfect(usize),
    #[error("negative weight {weight} on {edge}")]
    NegativeWeight { edge: EdgeId, weight: i64 },
    #[error("weight vector has {got} entries for {expected} edges")]
    WrongLength { got: usize, expected: usize },
}

/// Sorted edge ids covering every vertex exactly once.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PerfectMatching {
    edges: Vec<EdgeId>,
}

impl PerfectMatching {
    pub fn new(g: &CubicGraph, mut edges: Vec<EdgeId>) -> Result<Self, MatchingError> {
        edges.sort_unstable();
        let mut cover = vec![0u8; g.n()];
        for &e in &edges {
            let (u, v) = g.ends(e);
            cover[u] += 1;
            cover[v] += 1;
        }
        if let Some(v) = cover.iter().position(|&c| c != 1) {
            return Err(MatchingError::NotPerfect(v));
        }
        Ok(PerfectMatching { edges })
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    pub fn weight(&self, w: &WeightVector) -> i64 {
        self.edges.iter().map(|&e| w.get(e)).sum()
    }
}

/// Nonnegative integer edge weights in quarter units.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightVector(Vec<i64>);

impl WeightVector {
    pub fn zeros(edge_count: usize) -> Self {
        WeightVector(vec![0; edge_count])
    }

    pub fn uniform(edge_count: usize, w: i64) -> Self {
        assert!(w >= 0);
        WeightVector(vec![w; edge_count])
    }

    pub fn from_vec(ws: Vec<i64>) -> Result<Self, MatchingError> {
        if let Some(i) = ws.iter().position(|&w| w < 0) {
            return Err(MatchingError::NegativeWeight { edge: EdgeId(i), weight: ws[i] });
        }
        Ok(WeightVector(ws))
    }

    pub fn get(&self, e: EdgeId) -> i64 {
        self.0[e.0]
    }

    pub fn add(&mut self, e: EdgeId, delta: i64) {
        self.0[e.0] += delta;
        assert!(self.0[e.0] >= 0, "weights stay nonnegative");
    }

    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }
}

/// Minimum total weight over perfect matchings of `(n, edges)`, where the
/// edges may be parallel. Returns indices into `edges`.
pub(crate) fn min_perfect_matching_general(
    n: usize,
    edges: &[(usize, usize, i64)],
) -> Option<(Vec<usize>, i64)> {
    if n % 2 == 1 {
        return None;
    }
    if n == 0 {
        return Some((Vec::new(), 0));
    }
    // collapse parallel edges to the cheapest (lowest index on ties)
    let mut best: std::collections::BTreeMap<(usize, usize), usize> = Default::default();
    for (i, &(u, v, w)) in edges.iter().enumerate() {
        let key = (u.min(v), u.max(v));
        match best.get(&key) {
            Some(&j) if edges[j].2 <= w => {}
            _ => {
                best.insert(key, i);
            }
        }
    }
    let reps: Vec<usize> = best.values().copied().collect();
    let maxw = reps.iter().map(|&i| edges[i].2).max().unwrap_or(0);
    let simple: Vec<(usize, usize, i64)> = reps
        .iter()
        .map(|&i| {
            let (u, v, w) = edges[i];
            (u, v, 2 * (maxw - w) + 2)
        })
        .collect();
    let mate = max_weight_matching(n, &simple, true);
    if mate.iter().any(Option::is_none) {
        return None;
    }
    let mut chosen = Vec::with_capacity(n / 2);
    let mut total = 0;
    for (k, &(u, v, _)) in simple.iter().enumerate() {
        if mate[u] == Some(v) {
            chosen.push(reps[k]);
            total += edges[reps[k]].2;
        }
    }
    chosen.sort_unstable();
    Some((chosen, total))
}

/// A minimum-weight perfect matching and its weight. Among optimal
/// matchings the one with the lexicographically smallest sorted edge-id
/// list is returned.
pub fn min_weight_perfect_matching(
    g: &CubicGraph,
    w: &WeightVector,
) -> Result<(PerfectMatching, i64), MatchingError> {
    if w.len() != g.edge_count() {
        return Err(MatchingError::WrongLength { got: w.len(), expected: g.edge_count() });
    }
    let all: Vec<(usize, usize, i64)> = g.edges().map(|(e, u, v)| (u, v, w.get(e))).collect();
    let (first, opt) = min_perfect_matching_general(g.n(), &all).ok_or(MatchingError::NoPerfectMatching)?;
    let mut current: Vec<bool> = vec![false; g.edge_count()];
    for i in first {
        current[i] = true;
    }
    let mut fixed = Vec::new();
    let mut covered = vec![false; g.n()];
    let mut fixed_weight = 0;
    for (e, u, v) in g.edges() {
        if covered[u] || covered[v] {
            continue;
        }
        if !current[e.0] {
            // is there an optimum using the fixed edges and e?
            let mut blocked = covered.clone();
            blocked[u] = true;
            blocked[v] = true;
            let Some((rest, rest_w)) = sub_instance_min(g, w, &blocked) else {
                continue;
            };
            if fixed_weight + w.get(e) + rest_w != opt {
                continue;
            }
            current.fill(false);
            for &f in &fixed {
                current[f] = true;
            }
            current[e.0] = true;
            for f in rest {
                current[f] = true;
            }
        }
        fixed.push(e.0);
        fixed_weight += w.get(e);
        covered[u] = true;
        covered[v] = true;
    }
    debug_assert_eq!(fixed_weight, opt);
    let m = PerfectMatching::new(g, fixed.into_iter().map(EdgeId).collect())?;
    Ok((m, opt))
}

/// Minimum perfect matching of the subgraph induced by unblocked vertices,
/// with results as edge ids of `g`.
pub(crate) fn sub_instance_min(g: &CubicGraph, w: &WeightVector, blocked: &[bool]) -> Option<(Vec<usize>, i64)> {
    let mut index = vec![usize::MAX; g.n()];
    let mut k = 0;
    for v in 0..g.n() {
        if !blocked[v] {
            index[v] = k;
            k += 1;
        }
    }
    let mut ids = Vec::new();
    let mut sub = Vec::new();
    for (e, u, v) in g.edges() {
        if !blocked[u] && !blocked[v] {
            ids.push(e.0);
            sub.push((index[u], index[v], w.get(e)));
        }
    }
    let (chosen, total) = min_perfect_matching_general(k, &sub)?;
    Some((chosen.into_iter().map(|i| ids[i]).collect(), total))
}

pub fn has_perfect_matching_avoiding(g: &CubicGraph, blocked: &[bool]) -> bool {
    sub_instance_min(g, &WeightVector::zeros(g.edge_count()), blocked).is_some()
}

/// Visits every perfect matching as a sorted edge list, in lexicographic
/// order of the branching (smallest uncovered vertex, incident edges by id).
pub fn for_each_perfect_matching<F>(g: &CubicGraph, mut visit: F)
where
    F: FnMut(&[EdgeId]) -> ControlFlow<()>,
{
    let mut covered = vec![false; g.n()];
    let mut chosen = Vec::with_capacity(g.n() / 2);
    let _ = pm_rec(g, 0, &mut covered, &mut chosen, &mut visit);
}

fn pm_rec<F>(g: &CubicGraph, from: usize, covered: &mut [bool], chosen: &mut Vec<EdgeId>, visit: &mut F) -> ControlFlow<()>
where
    F: FnMut(&[EdgeId]) -> ControlFlow<()>,
{
    let Some(v) = (from..g.n()).find(|&v| !covered[v]) else {
        let mut sorted = chosen.clone();
        sorted.sort_unstable();
        return visit(&sorted);
    };
    covered[v] = true;
    for e in g.incident(v) {
        let u = g.other_end(e, v);
        if covered[u] {
            continue;
        }
        covered[u] = true;
        chosen.push(e);
        let flow = pm_rec(g, v + 1, covered, chosen, visit);
        chosen.pop();
        covered[u] = false;
        flow?;
    }
    covered[v] = false;
    ControlFlow::Continue(())
}

/// All perfect matchings, or `CapExceeded` when there are more than `cap`.
pub fn enumerate_perfect_matchings(g: &CubicGraph, cap: usize) -> Result<Vec<PerfectMatching>, MatchingError> {
    let mut out = Vec::new();
    let mut exceeded = false;
    for_each_perfect_matching(g, |es| {
        if out.len() == cap {
            exceeded = true;
            return ControlFlow::Break(());
        }
        out.push(PerfectMatching { edges: es.to_vec() });
        ControlFlow::Continue(())
    });
    if exceeded {
        Err(MatchingError::CapExceeded { cap })
    } else {
        Ok(out)
    }
}

/// `f` at the point with every coordinate 1/3, in quarter units.
pub fn fractional_objective_value(g: &CubicGraph, w: &WeightVector) -> Ratio<i64> {
    debug_assert_eq!(w.len(), g.edge_count());
    Ratio::new(w.total(), 3)
}

/// Whether some 2-factor of `g` contains the circuit `c`: the edges leaving
/// `c` are forced into the matching, and what remains must have a perfect
/// matching.
pub fn circuit_in_some_two_factor(g: &CubicGraph, c: &Circuit) -> bool {
    let mut blocked = vec![false; g.n()];
    let mut on_c = vec![false; g.n()];
    for &v in &c.vertices {
        on_c[v] = true;
        blocked[v] = true;
    }
    for &v in &c.vertices {
        for e in g.incident(v) {
            if c.contains_edge(e) {
                continue;
            }
            let x = g.other_end(e, v);
            if on_c[x] {
                // a chord would be a second non-circuit edge at x unless it is x's forced edge
                continue;
            }
            if blocked[x] {
                return false;
            }
            blocked[x] = true;
        }
    }
    has_perfect_matching_avoiding(g, &blocked)
}

/// Optimal matchings under `w`, enumerated by branch and bound, stopping
/// with `CapExceeded` after `cap` of them.
pub fn enumerate_min_weight_matchings(
    g: &CubicGraph,
    w: &WeightVector,
    opt: i64,
    cap: usize,
) -> Result<Vec<PerfectMatching>, MatchingError> {
    let min_inc: Vec<i64> = (0..g.n()).map(|v| g.incident(v).iter().map(|&e| w.get(e)).min().unwrap()).collect();
    let mut covered = vec![false; g.n()];
    let mut chosen = Vec::new();
    let mut out = Vec::new();
    let remaining: i64 = min_inc.iter().sum();
    let st = bb_rec(g, w, opt, cap, &min_inc, &mut covered, &mut chosen, 0, remaining, &mut out);
    match st {
        ControlFlow::Break(()) => Err(MatchingError::CapExceeded { cap }),
        ControlFlow::Continue(()) => Ok(out),
    }
}

#[allow(clippy::too_many_arguments)]
fn bb_rec(
    g: &CubicGraph,
    w: &WeightVector,
    opt: i64,
    cap: usize,
    min_inc: &[i64],
    covered: &mut [bool],
    chosen: &mut Vec<EdgeId>,
    weight: i64,
    remaining_min: i64,
    out: &mut Vec<PerfectMatching>,
) -> ControlFlow<()> {
    // every uncovered vertex pays at least half its cheapest edge
    if 2 * weight + remaining_min > 2 * opt {
        return ControlFlow::Continue(());
    }
    let Some(v) = (0..g.n()).find(|&v| !covered[v]) else {
        if weight == opt {
            if out.len() == cap {
                return ControlFlow::Break(());
            }
            let mut es = chosen.clone();
            es.sort_unstable();
            out.push(PerfectMatching { edges: es });
        }
        return ControlFlow::Continue(());
    };
    covered[v] = true;
    for e in g.incident(v) {
        let u = g.other_end(e, v);
        if covered[u] {
            continue;
        }
        covered[u] = true;
        chosen.push(e);
        let flow = bb_rec(g, w, opt, cap, min_inc, covered, chosen, weight + w.get(e), remaining_min - min_inc[u] - min_inc[v], out);
        chosen.pop();
        covered[u] = false;
        if flow.is_break() {
            covered[v] = false;
            return flow;
        }
    }
    covered[v] = false;
    ControlFlow::Continue(())
}
