//! Reductions that remove short circuits and small cuts with a colourable
//! side while never decreasing the minimum number of 5-circuits, recorded so
//! that any 2-factor of the reduced graph lifts back to the original graph.
//!
//! Every lift step either lengthens circuits by an even amount or adds new
//! even circuits, so a lifted factor has the same number of odd circuits,
//! no more 5-circuits, and no triangles unless the factor it started from
//! had them.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::{three_edge_color, EdgeColoring};
use crate::connectivity::{attachment, bonds_of_size, bridges, components_masked, cut_closure};
use crate::factor::TwoFactor;
use crate::graph::{enumerate_circuits_up_to, girth, Circuit, CubicGraph, EdgeId, GraphEditor, Node};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ReductionError {
    #[error("no reducible circuit of length at most 4")]
    NoShortCircuit,
    #[error("no small cut separates a colourable side")]
    NoColorableCut,
    #[error("graph has a bridge ({0})")]
    HasBridge(EdgeId),
    #[error("reduction step produced a bridge")]
    BridgeCreated,
    #[error("3-cut reduction needs a triangle-free graph")]
    HasTriangle,
    #[error("factor is not a 2-factor of the reduced graph")]
    InvalidFactor,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum StepKind {
    TwoCycle,
    Triangle,
    FourCycleDisjoint,
    FourCycleOne,
    FourCycleBoth,
    TwoCut,
    ThreeCut,
}

/// Local data needed to undo a step. Vertex and edge ids refer to the graph
/// before the step unless named `new_*`, which refer to the graph after.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum StepDetail {
    TwoCycle {
        u: usize,
        v: usize,
        parallel: [EdgeId; 2],
        /// Third edges at `u` and `v`.
        outer: [EdgeId; 2],
        new_edge: EdgeId,
    },
    Triangle {
        vertices: [usize; 3],
        /// `sides[i]` joins `vertices[i]` and `vertices[(i + 1) % 3]`.
        sides: [EdgeId; 3],
        /// Third edge at `vertices[i]`.
        outer: [EdgeId; 3],
        /// `new_edges[i]` replaces `outer[i]`.
        new_edges: [EdgeId; 3],
    },
    FourCycle(FourCycleData),
    TwoCut(CutData),
    ThreeCut(CutData),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FourCycleData {
    pub cycle: [usize; 4],
    /// `cycle_edges[i]` joins `cycle[i]` and `cycle[(i + 1) % 4]`.
    pub cycle_edges: [EdgeId; 4],
    /// Third edge at `cycle[i]`.
    pub spokes: [EdgeId; 4],
    /// Third edges of the shared neighbours (`w1 = w3` first, then
    /// `w2 = w4`), when those coincide.
    pub hub_outer: Vec<EdgeId>,
    /// Pairs of cycle positions whose outside neighbours were joined.
    pub pairs: Vec<[usize; 2]>,
    pub new_edges: Vec<EdgeId>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutData {
    pub cut: Vec<EdgeId>,
    /// Removed colourable side.
    pub side: Vec<usize>,
    /// Closure of the removed side.
    pub closure: CubicGraph,
    /// Closure edge -> edge before the step.
    pub closure_edge_origin: Vec<Option<EdgeId>>,
    /// Closure edges standing in for the cut edges (one for a 2-cut).
    pub virtual_edges: Vec<EdgeId>,
    pub coloring: EdgeColoring,
    /// The edge `v2w2`, or the three edges at the new vertex `y2`, in cut
    /// order.
    pub new_edges: Vec<EdgeId>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionStep {
    pub kind: StepKind,
    pub before: CubicGraph,
    pub after: CubicGraph,
    /// Edge after -> edge before.
    pub edge_origin: Vec<Option<EdgeId>>,
    /// Vertex after -> vertex before.
    pub vertex_origin: Vec<Option<usize>>,
    pub detail: StepDetail,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Terminal {
    Generic,
    Petersen,
    Colorable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionTrace {
    pub original: CubicGraph,
    pub reduced: CubicGraph,
    pub steps: Vec<ReductionStep>,
    pub terminal: Terminal,
}

fn finish_step(
    g: &CubicGraph,
    kind: StepKind,
    ed: GraphEditor<'_>,
    detail: impl FnOnce(&[usize], &[EdgeId]) -> StepDetail,
) -> Result<ReductionStep, ReductionError> {
    let out = ed.finish().map_err(|_| ReductionError::BridgeCreated)?;
    if !bridges(&out.graph).is_empty() {
        return Err(ReductionError::BridgeCreated);
    }
    let detail = detail(&out.new_vertex_ids, &out.new_edge_ids);
    Ok(ReductionStep {
        kind,
        before: g.clone(),
        after: out.graph,
        edge_origin: out.edge_origin,
        vertex_origin: out.vertex_origin,
        detail,
    })
}

fn third_edge(g: &CubicGraph, v: usize, used: &[EdgeId]) -> EdgeId {
    g.incident(v).into_iter().find(|e| !used.contains(e)).expect("cubic vertex")
}

fn two_cycle_step(g: &CubicGraph, c: &Circuit) -> Option<Result<ReductionStep, ReductionError>> {
    let (u, v) = (c.vertices[0], c.vertices[1]);
    let parallel = [c.edges[0], c.edges[1]];
    let a = third_edge(g, u, &parallel);
    let b = third_edge(g, v, &parallel);
    let (u2, v2) = (g.other_end(a, u), g.other_end(b, v));
    if u2 == v || u2 == v2 {
        return None;
    }
    let mut ed = GraphEditor::new(g);
    ed.remove_vertex(u);
    ed.remove_vertex(v);
    ed.add_edge(Node::Old(u2), Node::Old(v2));
    Some(finish_step(g, StepKind::TwoCycle, ed, |_, ne| StepDetail::TwoCycle {
        u,
        v,
        parallel,
        outer: [a, b],
        new_edge: ne[0],
    }))
}

fn triangle_step(g: &CubicGraph, c: &Circuit) -> Option<Result<ReductionStep, ReductionError>> {
    let vs = [c.vertices[0], c.vertices[1], c.vertices[2]];
    let sides = [c.edges[0], c.edges[1], c.edges[2]];
    let outer = vs.map(|v| third_edge(g, v, &sides));
    if outer.iter().zip(vs).any(|(&e, v)| vs.contains(&g.other_end(e, v))) {
        return None;
    }
    let mut ed = GraphEditor::new(g);
    for v in vs {
        ed.remove_vertex(v);
    }
    let t = ed.add_vertex();
    for (i, &e) in outer.iter().enumerate() {
        ed.add_edge(t, Node::Old(g.other_end(e, vs[i])));
    }
    Some(finish_step(g, StepKind::Triangle, ed, |_, ne| StepDetail::Triangle {
        vertices: vs,
        sides,
        outer,
        new_edges: [ne[0], ne[1], ne[2]],
    }))
}

fn four_cycle_step(g: &CubicGraph, c: &Circuit) -> Option<Result<ReductionStep, ReductionError>> {
    let mut cycle = [c.vertices[0], c.vertices[1], c.vertices[2], c.vertices[3]];
    let mut cycle_edges = [c.edges[0], c.edges[1], c.edges[2], c.edges[3]];
    let spoke_at = |cycle: &[usize; 4], ce: &[EdgeId; 4]| cycle.map(|v| third_edge(g, v, ce));
    let mut spokes = spoke_at(&cycle, &cycle_edges);
    let mut w: Vec<usize> = (0..4).map(|i| g.other_end(spokes[i], cycle[i])).collect();
    if w.iter().any(|x| cycle.contains(x)) {
        return None;
    }
    if w[1] == w[3] && w[0] != w[2] {
        cycle.rotate_left(1);
        cycle_edges.rotate_left(1);
        spokes = spoke_at(&cycle, &cycle_edges);
        w = (0..4).map(|i| g.other_end(spokes[i], cycle[i])).collect();
    }
    let mut ed = GraphEditor::new(g);
    for v in cycle {
        ed.remove_vertex(v);
    }
    let kind;
    let hub_outer;
    let pairs;
    if w[0] == w[2] && w[1] == w[3] {
        let (a, b) = (w[0], w[1]);
        let a_out = third_edge(g, a, &[spokes[0], spokes[2]]);
        let b_out = third_edge(g, b, &[spokes[1], spokes[3]]);
        let (a2, b2) = (g.other_end(a_out, a), g.other_end(b_out, b));
        if a2 == b || a2 == b2 {
            return None;
        }
        ed.remove_vertex(a);
        ed.remove_vertex(b);
        ed.add_edge(Node::Old(a2), Node::Old(b2));
        hub_outer = vec![a_out, b_out];
        pairs = vec![[0, 2], [1, 3]];
        kind = StepKind::FourCycleBoth;
    } else if w[0] == w[2] {
        let a = w[0];
        let a_out = third_edge(g, a, &[spokes[0], spokes[2]]);
        let a2 = g.other_end(a_out, a);
        ed.remove_vertex(a);
        let t = ed.add_vertex();
        ed.add_edge(t, Node::Old(w[1]));
        ed.add_edge(t, Node::Old(w[3]));
        ed.add_edge(t, Node::Old(a2));
        hub_outer = vec![a_out];
        pairs = vec![[1, 3]];
        kind = StepKind::FourCycleOne;
    } else {
        for choice in [[[0, 1], [2, 3]], [[0, 3], [1, 2]]] {
            let mut trial = ed.clone();
            for [p, q] in choice {
                trial.add_edge(Node::Old(w[p]), Node::Old(w[q]));
            }
            let data = |ne: &[EdgeId]| FourCycleData {
                cycle,
                cycle_edges,
                spokes,
                hub_outer: Vec::new(),
                pairs: choice.to_vec(),
                new_edges: ne.to_vec(),
            };
            match finish_step(g, StepKind::FourCycleDisjoint, trial, |_, ne| StepDetail::FourCycle(data(ne))) {
                Ok(step) => return Some(Ok(step)),
                Err(ReductionError::BridgeCreated) => continue,
                Err(e) => return Some(Err(e)),
            }
        }
        return Some(Err(ReductionError::BridgeCreated));
    }
    Some(finish_step(g, kind, ed, |_, ne| {
        StepDetail::FourCycle(FourCycleData { cycle, cycle_edges, spokes, hub_outer, pairs, new_edges: ne.to_vec() })
    }))
}

/// Removes one circuit of length 2, 3 or 4 (shortest first).
pub fn reduce_girth_step(g: &CubicGraph) -> Result<ReductionStep, ReductionError> {
    if let Some(&b) = bridges(g).first() {
        return Err(ReductionError::HasBridge(b));
    }
    let circuits = enumerate_circuits_up_to(g, 4);
    for c in &circuits {
        let attempt = match c.len() {
            2 => two_cycle_step(g, c),
            3 => triangle_step(g, c),
            _ => four_cycle_step(g, c),
        };
        if let Some(r) = attempt {
            return r;
        }
    }
    Err(ReductionError::NoShortCircuit)
}

/// Detaches the smallest colourable side of a 2-cut (`k = 2`) or of a
/// non-trivial 3-cut (`k = 3`).
pub fn reduce_cut_step(g: &CubicGraph, k: usize) -> Result<ReductionStep, ReductionError> {
    assert!(k == 2 || k == 3, "only 2- and 3-cuts are reduced");
    if let Some(&b) = bridges(g).first() {
        return Err(ReductionError::HasBridge(b));
    }
    if k == 3 && girth(g) < 4 {
        return Err(ReductionError::HasTriangle);
    }
    // (side size, cut, side, closure, colouring of the closure)
    type Candidate = (usize, Vec<EdgeId>, Vec<bool>, crate::connectivity::CutSide, EdgeColoring);
    let mut best: Option<Candidate> = None;
    for cut in bonds_of_size(g, k) {
        let mut removed = vec![false; g.edge_count()];
        for e in &cut {
            removed[e.0] = true;
        }
        let (label, _) = components_masked(g, &removed);
        for side_label in 0..2 {
            let side: Vec<bool> = label.iter().map(|&l| l == side_label).collect();
            let size = side.iter().filter(|&&s| s).count();
            if (k == 3 && (size == 1 || g.n() - size == 1)) || best.as_ref().is_some_and(|b| b.0 <= size) {
                continue;
            }
            let closure = cut_closure(g, &cut, &side).map_err(|_| ReductionError::BridgeCreated)?;
            if let Some(col) = three_edge_color(&closure.graph) {
                best = Some((size, cut.clone(), side, closure, col));
            }
        }
    }
    let Some((_, cut, side, closure, coloring)) = best else {
        return Err(ReductionError::NoColorableCut);
    };
    let mut ed = GraphEditor::new(g);
    ed.keep_only(&side.iter().map(|&s| !s).collect::<Vec<_>>());
    let other: Vec<bool> = side.iter().map(|&s| !s).collect();
    let outer: Vec<usize> = cut.iter().map(|&e| attachment(g, e, &other)).collect();
    let kind = if k == 2 {
        // on a minimal colourable side the two cut ends are non-adjacent:
        // otherwise their other two edges cut off a smaller colourable side
        debug_assert!({
            let inner: Vec<usize> = cut.iter().map(|&e| attachment(g, e, &side)).collect();
            side.iter().filter(|&&s| s).count() <= 2 || !g.has_edge(inner[0], inner[1])
        });
        ed.add_edge(Node::Old(outer[0]), Node::Old(outer[1]));
        StepKind::TwoCut
    } else {
        let y = ed.add_vertex();
        for &x in &outer {
            ed.add_edge(y, Node::Old(x));
        }
        StepKind::ThreeCut
    };
    let side_vertices: Vec<usize> = (0..g.n()).filter(|&v| side[v]).collect();
    finish_step(g, kind, ed, |_, ne| {
        let data = CutData {
            cut: cut.clone(),
            side: side_vertices,
            closure: closure.graph.clone(),
            closure_edge_origin: closure.edge_origin.clone(),
            virtual_edges: closure.virtual_edges.clone(),
            coloring,
            new_edges: ne.to_vec(),
        };
        if k == 2 {
            StepDetail::TwoCut(data)
        } else {
            StepDetail::ThreeCut(data)
        }
    })
}

fn is_petersen(g: &CubicGraph) -> bool {
    // the only cubic graph of girth 5 on 10 vertices
    g.n() == 10 && girth(g) == 5
}

/// Applies reductions until none applies: short circuits first, then
/// 2-cuts, then non-trivial 3-cuts.
pub fn full_reduce(g: &CubicGraph) -> Result<ReductionTrace, ReductionError> {
    if let Some(&b) = bridges(g).first() {
        return Err(ReductionError::HasBridge(b));
    }
    let mut steps: Vec<ReductionStep> = Vec::new();
    let mut cur = g.clone();
    loop {
        let next = match reduce_girth_step(&cur) {
            Ok(s) => Some(s),
            Err(ReductionError::NoShortCircuit) => None,
            Err(e) => return Err(e),
        };
        let next = match next {
            Some(s) => Some(s),
            None => match reduce_cut_step(&cur, 2) {
                Ok(s) => Some(s),
                Err(ReductionError::NoColorableCut) => None,
                Err(e) => return Err(e),
            },
        };
        let next = match next {
            Some(s) => Some(s),
            None if girth(&cur) >= 4 => match reduce_cut_step(&cur, 3) {
                Ok(s) => Some(s),
                Err(ReductionError::NoColorableCut) => None,
                Err(e) => return Err(e),
            },
            None => None,
        };
        match next {
            Some(step) => {
                debug_assert!(step.after.n() < cur.n());
                cur = step.after.clone();
                steps.push(step);
            }
            None => break,
        }
    }
    let terminal = if is_petersen(&cur) {
        Terminal::Petersen
    } else if three_edge_color(&cur).is_some() {
        Terminal::Colorable
    } else {
        Terminal::Generic
    };
    Ok(ReductionTrace { original: g.clone(), reduced: cur, steps, terminal })
}

/// Conditions a generic reduced graph must meet: girth at least 5 and
/// both sides of every 2-cut and non-trivial 3-cut uncolourable.
pub fn reduced_violations(g: &CubicGraph) -> Vec<String> {
    let mut out = Vec::new();
    let gi = girth(g);
    if gi < 5 {
        out.push(format!("girth {gi}"));
    }
    for k in [2, 3] {
        for cut in bonds_of_size(g, k) {
            let mut removed = vec![false; g.edge_count()];
            for e in &cut {
                removed[e.0] = true;
            }
            let (label, _) = components_masked(g, &removed);
            for l in 0..2 {
                let side: Vec<bool> = label.iter().map(|&x| x == l).collect();
                if side.iter().filter(|&&s| s).count() == 1 {
                    continue;
                }
                let closure = cut_closure(g, &cut, &side).expect("closure is cubic");
                if three_edge_color(&closure.graph).is_some() {
                    out.push(format!("{k}-cut {cut:?} has a colourable side"));
                }
            }
        }
    }
    out
}

impl ReductionStep {
    /// Lifts a 2-factor edge mask of `after` to one of `before`.
    pub fn lift_mask(&self, post: &[bool]) -> Vec<bool> {
        let g = &self.before;
        let mut pre = vec![false; g.edge_count()];
        for (p, origin) in self.edge_origin.iter().enumerate() {
            if let Some(o) = origin {
                pre[o.0] = post[p];
            }
        }
        let mut set = |es: &[EdgeId]| {
            for e in es {
                pre[e.0] = true;
            }
        };
        match &self.detail {
            StepDetail::TwoCycle { parallel, outer, new_edge, .. } => {
                if post[new_edge.0] {
                    set(&[outer[0], parallel[0], outer[1]]);
                } else {
                    set(parallel);
                }
            }
            StepDetail::Triangle { sides, outer, new_edges, .. } => {
                // the factor uses two edges at the contracted vertex; the
                // third triangle vertex is threaded between them
                let z = (0..3).find(|&i| !post[new_edges[i].0]).expect("one unused edge");
                let (x, y) = ((z + 1) % 3, (z + 2) % 3);
                // sides[y] joins y and z, sides[z] joins z and x
                set(&[outer[x], outer[y], sides[y], sides[z]]);
            }
            StepDetail::FourCycle(d) => lift_four_cycle(self.kind, d, post, &mut set),
            StepDetail::TwoCut(d) => {
                let col = &d.coloring;
                let alpha = col.color(d.virtual_edges[0]);
                if post[d.new_edges[0].0] {
                    let beta = (alpha + 1) % 3;
                    set(&d.cut);
                    for (i, o) in d.closure_edge_origin.iter().enumerate() {
                        let c = col.color(EdgeId(i));
                        if let Some(o) = o {
                            if c == alpha || c == beta {
                                set(&[*o]);
                            }
                        }
                    }
                } else {
                    for (i, o) in d.closure_edge_origin.iter().enumerate() {
                        if let Some(o) = o {
                            if col.color(EdgeId(i)) != alpha {
                                set(&[*o]);
                            }
                        }
                    }
                }
            }
            StepDetail::ThreeCut(d) => {
                let col = &d.coloring;
                let used: Vec<usize> = (0..3).filter(|&i| post[d.new_edges[i].0]).collect();
                debug_assert_eq!(used.len(), 2);
                let colors: Vec<u8> = used.iter().map(|&i| col.color(d.virtual_edges[i])).collect();
                for &i in &used {
                    set(&[d.cut[i]]);
                }
                for (i, o) in d.closure_edge_origin.iter().enumerate() {
                    if let Some(o) = o {
                        if colors.contains(&col.color(EdgeId(i))) {
                            set(&[*o]);
                        }
                    }
                }
            }
        }
        pre
    }
}

fn lift_four_cycle(kind: StepKind, d: &FourCycleData, post: &[bool], set: &mut impl FnMut(&[EdgeId])) {
    let ce = &d.cycle_edges;
    let sp = &d.spokes;
    // cycle edge joining positions p and q (adjacent)
    let between = |p: usize, q: usize| -> EdgeId {
        if (p + 1) % 4 == q {
            ce[p]
        } else {
            ce[q]
        }
    };
    // all cycle edges except the one joining p and q: a path through C
    let long_way = |p: usize, q: usize| -> Vec<EdgeId> {
        let skip = between(p, q);
        ce.iter().copied().filter(|&e| e != skip).collect()
    };
    match kind {
        StepKind::FourCycleBoth => {
            if post[d.new_edges[0].0] {
                set(&[d.hub_outer[0], sp[0], ce[0], ce[1], ce[2], sp[3], d.hub_outer[1]]);
            } else {
                set(&[sp[0], ce[0], sp[1], sp[3], ce[2], sp[2]]);
            }
        }
        StepKind::FourCycleOne => {
            // new edges go to w2, w4 and the outside neighbour of w1 = w3
            let used: Vec<bool> = d.new_edges.iter().map(|e| post[e.0]).collect();
            match (used[0], used[1], used[2]) {
                (true, true, false) => set(&[sp[1], sp[3], ce[0], sp[0], sp[2], ce[2]]),
                (true, false, true) => set(&[sp[1], d.hub_outer[0], ce[1], ce[2], ce[3], sp[0]]),
                (false, true, true) => set(&[sp[3], d.hub_outer[0], ce[2], ce[1], ce[0], sp[0]]),
                other => unreachable!("two of three hub edges in a 2-factor, got {other:?}"),
            }
        }
        _ => {
            let [p, q] = d.pairs[0];
            let [r, s] = d.pairs[1];
            match (post[d.new_edges[0].0], post[d.new_edges[1].0]) {
                (true, true) => set(&[sp[p], sp[q], between(p, q), sp[r], sp[s], between(r, s)]),
                (true, false) => {
                    set(&[sp[p], sp[q]]);
                    set(&long_way(p, q));
                }
                (false, true) => {
                    set(&[sp[r], sp[s]]);
                    set(&long_way(r, s));
                }
                (false, false) => set(ce),
            }
        }
    }
}

/// Lifts a 2-factor of `trace.reduced` to `trace.original`.
pub fn lift_two_factor(trace: &ReductionTrace, f: &TwoFactor) -> Result<TwoFactor, ReductionError> {
    if !f.is_valid_in(&trace.reduced) {
        return Err(ReductionError::InvalidFactor);
    }
    let mut mask = f.edge_mask(trace.reduced.edge_count());
    for step in trace.steps.iter().rev() {
        mask = step.lift_mask(&mask);
    }
    TwoFactor::from_edge_mask(&trace.original, &mask).map_err(|_| ReductionError::InvalidFactor)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matching::enumerate_perfect_matchings;

    fn petersen() -> CubicGraph {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
        }
        e.extend([(5, 7), (7, 9), (9, 6), (6, 8), (8, 5)]);
        CubicGraph::new(10, e).unwrap()
    }

    fn k4() -> CubicGraph {
        CubicGraph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    fn all_lifts_safe(trace: &ReductionTrace) {
        for m in enumerate_perfect_matchings(&trace.reduced, 100_000).unwrap() {
            let f = TwoFactor::complement_of(&trace.reduced, &m).unwrap();
            let lifted = lift_two_factor(trace, &f).unwrap();
            assert!(lifted.stats().count5 <= f.stats().count5);
            assert_eq!(lifted.stats().count3, 0);
            assert_eq!(lifted.stats().odd, f.stats().odd);
        }
    }

    #[test]
    fn k4_contracts_to_theta() {
        let step = reduce_girth_step(&k4()).unwrap();
        assert_eq!(step.kind, StepKind::Triangle);
        assert_eq!(step.after.n(), 2);
        assert_eq!(girth(&step.after), 2);
    }

    #[test]
    fn petersen_is_already_reduced() {
        assert_eq!(reduce_girth_step(&petersen()).unwrap_err(), ReductionError::NoShortCircuit);
        let t = full_reduce(&petersen()).unwrap();
        assert!(t.steps.is_empty());
        assert_eq!(t.terminal, Terminal::Petersen);
    }

    #[test]
    fn digon_step() {
        // Petersen with edge 0-1 replaced by 0-a, a=b, b-1
        let mut e: Vec<(usize, usize)> = petersen().edge_list()[1..].to_vec();
        e.extend([(0, 10), (10, 11), (10, 11), (11, 1)]);
        let g = CubicGraph::new(12, e).unwrap();
        let step = reduce_girth_step(&g).unwrap();
        assert_eq!(step.kind, StepKind::TwoCycle);
        assert_eq!(step.after.n(), 10);
        let t = full_reduce(&g).unwrap();
        assert_eq!(t.terminal, Terminal::Petersen);
        all_lifts_safe(&t);
    }

    #[test]
    fn triangle_lift_adds_two() {
        // truncate vertex 0 of the Petersen graph
        let p = petersen();
        let mut e = Vec::new();
        let nb = p.neighbors(0);
        for (_, u, v) in p.edges() {
            if u != 0 && v != 0 {
                e.push((u, v));
            }
        }
        e.extend([(0, nb[0]), (10, nb[1]), (11, nb[2]), (0, 10), (10, 11), (11, 0)]);
        let g = CubicGraph::new(12, e).unwrap();
        let t = full_reduce(&g).unwrap();
        assert_eq!(t.steps.len(), 1);
        assert_eq!(t.steps[0].kind, StepKind::Triangle);
        for m in enumerate_perfect_matchings(&t.reduced, 100).unwrap() {
            let f = TwoFactor::complement_of(&t.reduced, &m).unwrap();
            let lifted = lift_two_factor(&t, &f).unwrap();
            let mut before: Vec<usize> = f.circuits().iter().map(Circuit::len).collect();
            let mut after: Vec<usize> = lifted.circuits().iter().map(Circuit::len).collect();
            before.sort_unstable();
            after.sort_unstable();
            assert_eq!(before.iter().sum::<usize>() + 2, after.iter().sum::<usize>());
        }
    }

    #[test]
    fn invalid_factor_is_rejected() {
        let t = full_reduce(&petersen()).unwrap();
        let theta = CubicGraph::new(2, [(0, 1), (0, 1), (0, 1)]).unwrap();
        let f = TwoFactor::from_edges(&theta, &[EdgeId(0), EdgeId(1)]).unwrap();
        assert_eq!(lift_two_factor(&t, &f), Err(ReductionError::InvalidFactor));
    }
}
