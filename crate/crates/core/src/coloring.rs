//! Exact 3-edge-colouring.
//!
//! Graphs are split recursively along 2-edge-cuts and non-trivial 3-edge-cuts
//! (a cubic graph is colourable iff both closures are), and the pieces are
//! coloured by backtracking with most-constrained-edge ordering.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::connectivity::{bonds_of_size, bridges, components_masked, cut_closure, CutSide};
use crate::factor::TwoFactor;
use crate::graph::{CubicGraph, EdgeId};

/// Pieces at most this large go straight to backtracking.
const DIRECT_LIMIT: usize = 14;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ColoringError {
    #[error("colouring is not proper at vertex {0}")]
    ImproperColoring(usize),
    #[error("colouring has {got} entries for {expected} edges")]
    WrongLength { got: usize, expected: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeColoring {
    colors: Vec<u8>,
}

impl EdgeColoring {
    pub fn new(colors: Vec<u8>) -> Self {
        EdgeColoring { colors }
    }

    pub fn color(&self, e: EdgeId) -> u8 {
        self.colors[e.0]
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.colors
    }

    /// Edges of colour `c`.
    pub fn class(&self, c: u8) -> Vec<EdgeId> {
        (0..self.colors.len()).filter(|&i| self.colors[i] == c).map(EdgeId).collect()
    }

    pub fn check(&self, g: &CubicGraph) -> Result<(), ColoringError> {
        if self.colors.len() != g.edge_count() {
            return Err(ColoringError::WrongLength { got: self.colors.len(), expected: g.edge_count() });
        }
        for v in 0..g.n() {
            let mut seen = 0u8;
            for e in g.incident(v) {
                let c = self.colors[e.0];
                if c > 2 || seen & (1 << c) != 0 {
                    return Err(ColoringError::ImproperColoring(v));
                }
                seen |= 1 << c;
            }
        }
        Ok(())
    }

    pub fn is_proper(&self, g: &CubicGraph) -> bool {
        self.check(g).is_ok()
    }

    /// Applies a permutation of the colours.
    pub fn permuted(&self, perm: [u8; 3]) -> EdgeColoring {
        EdgeColoring { colors: self.colors.iter().map(|&c| perm[c as usize]).collect() }
    }
}

/// A proper 3-edge-colouring, or `None` when the graph is not colourable.
pub fn three_edge_color(g: &CubicGraph) -> Option<EdgeColoring> {
    color_rec(g).map(EdgeColoring::new)
}

pub fn is_colorable(g: &CubicGraph) -> bool {
    three_edge_color(g).is_some()
}

/// The union of colour classes 1 and 2.
pub fn even_two_factor_from_coloring(g: &CubicGraph, c: &EdgeColoring) -> Result<TwoFactor, ColoringError> {
    c.check(g)?;
    let mask: Vec<bool> = c.as_slice().iter().map(|&x| x != 0).collect();
    Ok(TwoFactor::from_edge_mask(g, &mask).expect("two colour classes form a 2-factor"))
}

fn color_rec(g: &CubicGraph) -> Option<Vec<u8>> {
    if !bridges(g).is_empty() {
        return None;
    }
    let (label, comps) = components_masked(g, &vec![false; g.edge_count()]);
    if comps > 1 {
        return color_components(g, &label, comps);
    }
    if g.n() <= DIRECT_LIMIT {
        return backtrack(g);
    }
    for k in [2, 3] {
        if let Some((cut, side)) = best_split(g, k) {
            return color_split(g, &cut, &side);
        }
    }
    backtrack(g)
}

fn color_components(g: &CubicGraph, label: &[usize], comps: usize) -> Option<Vec<u8>> {
    let mut colors = vec![0u8; g.edge_count()];
    for c in 0..comps {
        let side: Vec<bool> = label.iter().map(|&l| l == c).collect();
        let piece = cut_closure_none(g, &side);
        let pc = color_rec(&piece.graph)?;
        for (i, &orig) in piece.edge_origin.iter().enumerate() {
            colors[orig.expect("no virtual edges").0] = pc[i];
        }
    }
    Some(colors)
}

fn cut_closure_none(g: &CubicGraph, side: &[bool]) -> CutSide {
    let mut ed = crate::graph::GraphEditor::new(g);
    ed.keep_only(side);
    let out = ed.finish().expect("a component of a cubic graph is cubic");
    CutSide {
        graph: out.graph,
        vertex_origin: out.vertex_origin,
        edge_origin: out.edge_origin,
        vertex_image: out.vertex_image,
        edge_image: out.edge_image,
        virtual_edges: Vec::new(),
        hub: None,
    }
}

/// A `k`-bond with non-trivial sides, preferring the most balanced one.
fn best_split(g: &CubicGraph, k: usize) -> Option<(Vec<EdgeId>, Vec<bool>)> {
    let mut best: Option<(usize, Vec<EdgeId>, Vec<bool>)> = None;
    for cut in bonds_of_size(g, k) {
        let mut removed = vec![false; g.edge_count()];
        for e in &cut {
            removed[e.0] = true;
        }
        let (label, _) = components_masked(g, &removed);
        let side: Vec<bool> = label.iter().map(|&l| l == 0).collect();
        let a = side.iter().filter(|&&s| s).count();
        let small = a.min(g.n() - a);
        if k == 3 && small == 1 {
            continue;
        }
        if best.as_ref().is_none_or(|b| small > b.0) {
            best = Some((small, cut, side));
        }
    }
    best.map(|(_, c, s)| (c, s))
}

/// Colours both closures of the cut and glues them.
fn color_split(g: &CubicGraph, cut: &[EdgeId], side: &[bool]) -> Option<Vec<u8>> {
    let other: Vec<bool> = side.iter().map(|&s| !s).collect();
    let a = cut_closure(g, cut, side).expect("closure is cubic");
    let b = cut_closure(g, cut, &other).expect("closure is cubic");
    let (first, second) = if a.graph.n() <= b.graph.n() { (&a, &b) } else { (&b, &a) };
    let c1 = color_rec(&first.graph)?;
    let c2 = color_rec(&second.graph)?;
    // permute the second colouring so the virtual edges agree
    let mut perm = [0, 1, 2];
    if cut.len() == 2 {
        perm.swap(c2[second.virtual_edges[0].0] as usize, c1[first.virtual_edges[0].0] as usize);
    } else {
        for (v1, v2) in first.virtual_edges.iter().zip(&second.virtual_edges) {
            perm[c2[v2.0] as usize] = c1[v1.0];
        }
    }
    let mut colors = vec![u8::MAX; g.edge_count()];
    for (i, orig) in first.edge_origin.iter().enumerate() {
        if let Some(o) = orig {
            colors[o.0] = c1[i];
        }
    }
    for (i, orig) in second.edge_origin.iter().enumerate() {
        if let Some(o) = orig {
            colors[o.0] = perm[c2[i] as usize];
        }
    }
    for (j, &e) in cut.iter().enumerate() {
        let v = if cut.len() == 2 { first.virtual_edges[0] } else { first.virtual_edges[j] };
        colors[e.0] = c1[v.0];
    }
    debug_assert!(EdgeColoring::new(colors.clone()).is_proper(g));
    Some(colors)
}

/// Plain backtracking; the colours at vertex 0 are fixed to 0, 1, 2.
pub(crate) fn backtrack(g: &CubicGraph) -> Option<Vec<u8>> {
    let m = g.edge_count();
    let mut colors = vec![u8::MAX; m];
    let mut used = vec![0u8; g.n()];
    if g.n() == 0 {
        return Some(colors);
    }
    for (c, e) in g.incident(0).into_iter().enumerate() {
        if !assign(g, &mut colors, &mut used, e, c as u8) {
            return None;
        }
    }
    if search(g, &mut colors, &mut used) {
        Some(colors)
    } else {
        None
    }
}

fn assign(g: &CubicGraph, colors: &mut [u8], used: &mut [u8], e: EdgeId, c: u8) -> bool {
    let (u, v) = g.ends(e);
    let bit = 1 << c;
    if used[u] & bit != 0 || used[v] & bit != 0 {
        return false;
    }
    colors[e.0] = c;
    used[u] |= bit;
    used[v] |= bit;
    true
}

fn unassign(g: &CubicGraph, colors: &mut [u8], used: &mut [u8], e: EdgeId) {
    let (u, v) = g.ends(e);
    let bit = 1 << colors[e.0];
    used[u] &= !bit;
    used[v] &= !bit;
    colors[e.0] = u8::MAX;
}

fn search(g: &CubicGraph, colors: &mut [u8], used: &mut [u8]) -> bool {
    let mut pick: Option<(EdgeId, u8)> = None;
    let mut best = 4;
    for (e, u, v) in g.edges() {
        if colors[e.0] != u8::MAX {
            continue;
        }
        let free = !(used[u] | used[v]) & 7;
        let k = free.count_ones();
        if k == 0 {
            return false;
        }
        if k < best {
            best = k;
            pick = Some((e, free));
            if k == 1 {
                break;
            }
        }
    }
    let Some((e, free)) = pick else {
        return true;
    };
    for c in 0..3u8 {
        if free & (1 << c) == 0 {
            continue;
        }
        assign(g, colors, used, e, c);
        if search(g, colors, used) {
            return true;
        }
        unassign(g, colors, used, e);
    }
    false
}
