//! Bridges, small bonds, the edge sets `E2`/`E3`, cyclic edge connectivity
//! and the closures used to split a graph along a 2- or 3-edge-cut.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{girth, CubicGraph, EdgeId, GraphEditor, GraphError, Node};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ConnectivityError {
    #[error("graph has a bridge ({0})")]
    HasBridge(EdgeId),
    #[error("cyclic edge connectivity is not defined for {n} vertices")]
    NotDefined { n: usize },
    #[error("graph is disconnected")]
    Disconnected,
}

/// A minimal edge-cut (bond).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeCut {
    /// Sorted edge ids.
    pub edges: Vec<EdgeId>,
    /// Vertices of the smaller side, sorted.
    pub side_small: Vec<usize>,
    /// A 3-cut around a single vertex.
    pub trivial: bool,
    /// No two cut edges share a vertex.
    pub independent: bool,
}

impl EdgeCut {
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Indicator of the smaller side.
    pub fn side_mask(&self, n: usize) -> Vec<bool> {
        let mut mask = vec![false; n];
        for &v in &self.side_small {
            mask[v] = true;
        }
        mask
    }
}

/// Component label of every vertex once the masked edges are removed,
/// together with the number of components.
pub(crate) fn components_masked(g: &CubicGraph, removed: &[bool]) -> (Vec<usize>, usize) {
    let n = g.n();
    let mut label = vec![usize::MAX; n];
    let mut count = 0;
    let mut stack = Vec::new();
    for s in 0..n {
        if label[s] != usize::MAX {
            continue;
        }
        label[s] = count;
        stack.push(s);
        while let Some(u) = stack.pop() {
            for e in g.incident(u) {
                if removed[e.0] {
                    continue;
                }
                let v = g.other_end(e, u);
                if label[v] == usize::MAX {
                    label[v] = count;
                    stack.push(v);
                }
            }
        }
        count += 1;
    }
    (label, count)
}

pub(crate) fn connected_masked(g: &CubicGraph, removed: &[bool]) -> bool {
    if g.n() == 0 {
        return true;
    }
    let mut seen = vec![false; g.n()];
    let mut stack = vec![0];
    seen[0] = true;
    let mut count = 1;
    while let Some(u) = stack.pop() {
        for e in g.incident(u) {
            if removed[e.0] {
                continue;
            }
            let v = g.other_end(e, u);
            if !seen[v] {
                seen[v] = true;
                count += 1;
                stack.push(v);
            }
        }
    }
    count == g.n()
}

/// Bridges of `g` minus the masked edges, in increasing id order.
pub(crate) fn bridges_masked(g: &CubicGraph, removed: &[bool]) -> Vec<EdgeId> {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut timer = 0;
    let mut out = Vec::new();
    let mut stack: Vec<(usize, Option<EdgeId>, usize)> = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        stack.push((root, None, 0));
        while let Some(top) = stack.last_mut() {
            let (u, pe, idx) = *top;
            if idx < 3 {
                top.2 += 1;
                let e = g.incident(u)[idx];
                if removed[e.0] || Some(e) == pe {
                    continue;
                }
                let v = g.other_end(e, u);
                if disc[v] == usize::MAX {
                    disc[v] = timer;
                    low[v] = timer;
                    timer += 1;
                    stack.push((v, Some(e), 0));
                } else {
                    low[u] = low[u].min(disc[v]);
                }
            } else {
                stack.pop();
                if let Some(pe) = pe {
                    let p = g.other_end(pe, u);
                    low[p] = low[p].min(low[u]);
                    if low[u] > disc[p] {
                        out.push(pe);
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}

pub fn bridges(g: &CubicGraph) -> Vec<EdgeId> {
    bridges_masked(g, &vec![false; g.edge_count()])
}

pub fn is_bridgeless(g: &CubicGraph) -> bool {
    bridges(g).is_empty()
}

/// All bonds with exactly `k` edges, each as a sorted edge list, in
/// lexicographic order. Assumes `g` is connected.
pub(crate) fn bonds_of_size(g: &CubicGraph, k: usize) -> Vec<Vec<EdgeId>> {
    assert!(k >= 1);
    let mut removed = vec![false; g.edge_count()];
    let mut chosen = Vec::with_capacity(k);
    let mut out = Vec::new();
    bond_search(g, k, 0, &mut chosen, &mut removed, &mut out);
    out.sort();
    out
}

fn bond_search(
    g: &CubicGraph,
    k: usize,
    start: usize,
    chosen: &mut Vec<EdgeId>,
    removed: &mut [bool],
    out: &mut Vec<Vec<EdgeId>>,
) {
    if chosen.len() + 1 == k {
        for b in bridges_masked(g, removed) {
            if chosen.last().is_some_and(|&l| b <= l) {
                continue;
            }
            let mut cut = chosen.clone();
            cut.push(b);
            if is_bond(g, &cut) {
                out.push(cut);
            }
        }
        return;
    }
    for e in start..g.edge_count() {
        removed[e] = true;
        if connected_masked(g, removed) {
            chosen.push(EdgeId(e));
            bond_search(g, k, e + 1, chosen, removed, out);
            chosen.pop();
        }
        removed[e] = false;
    }
}

/// Two components after removal, each edge joining them.
pub(crate) fn is_bond(g: &CubicGraph, cut: &[EdgeId]) -> bool {
    let mut removed = vec![false; g.edge_count()];
    for e in cut {
        removed[e.0] = true;
    }
    let (label, count) = components_masked(g, &removed);
    count == 2
        && cut.iter().all(|&e| {
            let (u, v) = g.ends(e);
            label[u] != label[v]
        })
}

fn describe_bond(g: &CubicGraph, cut: Vec<EdgeId>) -> EdgeCut {
    let mut removed = vec![false; g.edge_count()];
    for e in &cut {
        removed[e.0] = true;
    }
    let (label, _) = components_masked(g, &removed);
    let side0: Vec<usize> = (0..g.n()).filter(|&v| label[v] == 0).collect();
    let side1: Vec<usize> = (0..g.n()).filter(|&v| label[v] != 0).collect();
    // side1 never contains vertex 0, so on a tie the side without vertex 0 is kept
    let side_small = if side0.len() < side1.len() { side0 } else { side1 };
    let mut touched = BTreeSet::new();
    let independent = cut.iter().all(|&e| {
        let (u, v) = g.ends(e);
        touched.insert(u) && touched.insert(v)
    });
    EdgeCut { trivial: cut.len() == 3 && side_small.len() == 1, independent, side_small, edges: cut }
}

/// Every bond of size `2..=k`, ordered by size and then edge ids.
pub fn small_cuts(g: &CubicGraph, k: usize) -> Result<Vec<EdgeCut>, ConnectivityError> {
    if let Some(&b) = bridges(g).first() {
        return Err(ConnectivityError::HasBridge(b));
    }
    if !g.is_connected() {
        return Err(ConnectivityError::Disconnected);
    }
    let mut out = Vec::new();
    for size in 2..=k {
        for cut in bonds_of_size(g, size) {
            out.push(describe_bond(g, cut));
        }
    }
    Ok(out)
}

/// `E2`: edges lying in a 2-edge-cut. `E3`: edges lying in an independent
/// bond of size at most 3.
pub fn edges_in_small_cuts(
    g: &CubicGraph,
) -> Result<(BTreeSet<EdgeId>, BTreeSet<EdgeId>), ConnectivityError> {
    let cuts = small_cuts(g, 3)?;
    let mut e2 = BTreeSet::new();
    let mut e3 = BTreeSet::new();
    for c in &cuts {
        if c.size() == 2 {
            e2.extend(c.edges.iter().copied());
        }
        if c.independent {
            e3.extend(c.edges.iter().copied());
        }
    }
    Ok((e2, e3))
}

/// Whether some bond of size `k` has a circuit on both sides.
fn has_cyclic_bond(g: &CubicGraph, k: usize) -> bool {
    // a connected side with a bond of size k is a tree iff it has k - 2 vertices
    bonds_of_size(g, k).into_iter().any(|cut| {
        let c = describe_bond(g, cut);
        let small = c.side_small.len();
        small + 2 > k && g.n() - small + 2 > k
    })
}

/// Minimum size of an edge-cut separating two circuits.
pub fn cyclic_edge_connectivity(g: &CubicGraph) -> Result<usize, ConnectivityError> {
    if g.n() < 8 {
        return Err(ConnectivityError::NotDefined { n: g.n() });
    }
    if !g.is_connected() {
        return Err(ConnectivityError::Disconnected);
    }
    let gi = girth(g);
    for k in 1..gi {
        if has_cyclic_bond(g, k) {
            return Ok(k);
        }
    }
    Ok(gi)
}

/// Bridgeless, no 2-edge-cut and every 3-edge-cut trivial.
pub fn is_cyclically_4_edge_connected(g: &CubicGraph) -> bool {
    if !g.is_connected() || !is_bridgeless(g) {
        return false;
    }
    (2..=3).all(|k| !has_cyclic_bond(g, k))
}

/// One side of a 2- or 3-edge-cut closed up into a cubic graph: for a 2-cut
/// the two attachment vertices are joined by a new edge, for a 3-cut a new
/// vertex is joined to the three attachments.
#[derive(Clone, Debug)]
pub struct CutSide {
    pub graph: CubicGraph,
    /// Side vertex -> vertex of the split graph (`None` for the hub).
    pub vertex_origin: Vec<Option<usize>>,
    /// Side edge -> edge of the split graph (`None` for virtual edges).
    pub edge_origin: Vec<Option<EdgeId>>,
    /// Split-graph vertex -> side vertex.
    pub vertex_image: Vec<Option<usize>>,
    /// Split-graph edge -> side edge.
    pub edge_image: Vec<Option<EdgeId>>,
    /// Virtual edges; for a 3-cut `virtual_edges[i]` replaces `cut[i]`.
    pub virtual_edges: Vec<EdgeId>,
    /// Hub vertex of a 3-cut closure.
    pub hub: Option<usize>,
}

/// Endpoint of `e` inside `side`.
pub(crate) fn attachment(g: &CubicGraph, e: EdgeId, side: &[bool]) -> usize {
    let (u, v) = g.ends(e);
    if side[u] {
        u
    } else {
        v
    }
}

/// Closes the `side` of a 2- or 3-bond `cut`.
pub fn cut_closure(g: &CubicGraph, cut: &[EdgeId], side: &[bool]) -> Result<CutSide, GraphError> {
    let mut ed = GraphEditor::new(g);
    ed.keep_only(side);
    let attach: Vec<usize> = cut.iter().map(|&e| attachment(g, e, side)).collect();
    let hub = match cut.len() {
        2 => {
            ed.add_edge(Node::Old(attach[0]), Node::Old(attach[1]));
            None
        }
        3 => {
            let y = ed.add_vertex();
            for &a in &attach {
                ed.add_edge(y, Node::Old(a));
            }
            Some(())
        }
        k => panic!("closure of a {k}-cut"),
    };
    let out = ed.finish()?;
    Ok(CutSide {
        hub: hub.map(|_| out.new_vertex_ids[0]),
        graph: out.graph,
        vertex_origin: out.vertex_origin,
        edge_origin: out.edge_origin,
        vertex_image: out.vertex_image,
        edge_image: out.edge_image,
        virtual_edges: out.new_edge_ids,
    })
}
