//! Cubic multigraphs with stable edge ids, circuits and girth.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Identifier of an edge. Ids are dense, `0..edge_count()`, and never change
/// for a given graph value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeId(pub usize);

impl EdgeId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("vertex {vertex} has degree {degree}, expected 3")]
    NotCubic { vertex: usize, degree: usize },
    #[error("self-loop at vertex {0}")]
    LoopEdge(usize),
    #[error("endpoint {endpoint} out of range for {n} vertices")]
    VertexOutOfRange { endpoint: usize, n: usize },
}

/// A cubic multigraph. Parallel edges are allowed, loops are not.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawGraph", into = "RawGraph")]
pub struct CubicGraph {
    n: usize,
    ends: Vec<[usize; 2]>,
    incidence: Vec<[EdgeId; 3]>,
}

#[derive(Serialize, Deserialize)]
struct RawGraph {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl TryFrom<RawGraph> for CubicGraph {
    type Error = GraphError;
    fn try_from(raw: RawGraph) -> Result<Self, GraphError> {
        CubicGraph::new(raw.n, raw.edges.iter().map(|e| (e[0], e[1])))
    }
}

impl From<CubicGraph> for RawGraph {
    fn from(g: CubicGraph) -> Self {
        RawGraph { n: g.n, edges: g.ends }
    }
}

impl CubicGraph {
    /// Builds a graph whose `i`-th edge gets id `i`.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        let mut ends = Vec::new();
        let mut inc: Vec<Vec<EdgeId>> = vec![Vec::with_capacity(3); n];
        for (i, (u, v)) in edges.into_iter().enumerate() {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { endpoint: x, n });
                }
            }
            if u == v {
                return Err(GraphError::LoopEdge(u));
            }
            ends.push([u, v]);
            inc[u].push(EdgeId(i));
            inc[v].push(EdgeId(i));
        }
        let mut incidence = Vec::with_capacity(n);
        for (vertex, list) in inc.iter().enumerate() {
            if list.len() != 3 {
                return Err(GraphError::NotCubic { vertex, degree: list.len() });
            }
            incidence.push([list[0], list[1], list[2]]);
        }
        Ok(CubicGraph { n, ends, incidence })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.ends.len()
    }

    pub fn ends(&self, e: EdgeId) -> (usize, usize) {
        let [u, v] = self.ends[e.0];
        (u, v)
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        (0..self.ends.len()).map(EdgeId)
    }

    /// `(id, u, v)` for every edge, in id order.
    pub fn edges(&self) -> impl Iterator<Item = (EdgeId, usize, usize)> + '_ {
        self.ends.iter().enumerate().map(|(i, &[u, v])| (EdgeId(i), u, v))
    }

    /// The three edges at `v`, in increasing id order.
    pub fn incident(&self, v: usize) -> [EdgeId; 3] {
        self.incidence[v]
    }

    pub fn other_end(&self, e: EdgeId, v: usize) -> usize {
        let [a, b] = self.ends[e.0];
        if a == v {
            b
        } else {
            debug_assert_eq!(b, v, "{e} is not incident to {v}");
            a
        }
    }

    pub fn neighbors(&self, v: usize) -> [usize; 3] {
        self.incidence[v].map(|e| self.other_end(e, v))
    }

    pub fn edges_between(&self, u: usize, v: usize) -> Vec<EdgeId> {
        self.incidence[u]
            .iter()
            .copied()
            .filter(|&e| self.other_end(e, u) == v)
            .collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.incidence[u].iter().any(|&e| self.other_end(e, u) == v)
    }

    pub fn is_simple(&self) -> bool {
        (0..self.n).all(|v| {
            let [a, b, c] = self.neighbors(v);
            a != b && b != c && a != c
        })
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.reachable_from(0, &[]).iter().all(|&r| r)
    }

    /// Vertices reachable from `start` when the edges in `removed` are ignored.
    pub fn reachable_from(&self, start: usize, removed: &[EdgeId]) -> Vec<bool> {
        let mut seen = vec![false; self.n];
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(u) = stack.pop() {
            for e in self.incidence[u] {
                if removed.contains(&e) {
                    continue;
                }
                let v = self.other_end(e, u);
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen
    }

    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        self.ends.iter().map(|&[u, v]| (u, v)).collect()
    }

    /// Same graph with vertex `v` renamed to `perm[v]`; edge ids are kept.
    pub fn relabeled(&self, perm: &[usize]) -> CubicGraph {
        CubicGraph::new(self.n, self.ends.iter().map(|&[u, v]| (perm[u], perm[v])))
            .expect("relabeling preserves cubicity")
    }
}

/// A circuit, stored so that `edges[i]` joins `vertices[i]` and
/// `vertices[(i + 1) % len]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Circuit {
    pub vertices: Vec<usize>,
    pub edges: Vec<EdgeId>,
}

impl Circuit {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_odd(&self) -> bool {
        self.len() % 2 == 1
    }

    pub fn contains_edge(&self, e: EdgeId) -> bool {
        self.edges.contains(&e)
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }

    /// Starts at the smallest vertex and walks towards its smaller
    /// neighbour on the circuit.
    pub(crate) fn canonicalize(mut self) -> Circuit {
        let len = self.vertices.len();
        let start = (0..len).min_by_key(|&i| self.vertices[i]).unwrap_or(0);
        self.vertices.rotate_left(start);
        self.edges.rotate_left(start);
        let flip = if len > 2 {
            self.vertices[1] > self.vertices[len - 1]
        } else {
            len == 2 && self.edges[0] > self.edges[1]
        };
        if flip {
            self.vertices[1..].reverse();
            self.edges.reverse();
        }
        self
    }

    /// Checks that the stored sequences really form a circuit of `g`.
    pub fn is_valid_in(&self, g: &CubicGraph) -> bool {
        let len = self.vertices.len();
        if len < 2 || self.edges.len() != len {
            return false;
        }
        let mut vs = self.vertices.clone();
        vs.sort_unstable();
        vs.dedup();
        let mut es = self.edges.clone();
        es.sort_unstable();
        es.dedup();
        if vs.len() != len || es.len() != len {
            return false;
        }
        (0..len).all(|i| {
            let e = self.edges[i];
            e.0 < g.edge_count() && {
                let (a, b) = g.ends(e);
                let (x, y) = (self.vertices[i], self.vertices[(i + 1) % len]);
                (a, b) == (x, y) || (a, b) == (y, x)
            }
        })
    }
}

/// Length of a shortest circuit. Parallel edges give 2.
pub fn girth(g: &CubicGraph) -> usize {
    let n = g.n();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent: Vec<Option<EdgeId>> = vec![None; n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        dist.fill(usize::MAX);
        parent.fill(None);
        queue.clear();
        dist[s] = 0;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            if best != usize::MAX && 2 * dist[u] + 1 >= best {
                break;
            }
            for e in g.incident(u) {
                if parent[u] == Some(e) {
                    continue;
                }
                let v = g.other_end(e, u);
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    parent[v] = Some(e);
                    queue.push_back(v);
                } else {
                    best = best.min(dist[u] + dist[v] + 1);
                }
            }
        }
    }
    best
}

/// Every circuit of length at most `max_len`, each once, in canonical form,
/// sorted by length, then vertex sequence, then edge sequence.
pub fn enumerate_circuits_up_to(g: &CubicGraph, max_len: usize) -> Vec<Circuit> {
    assert!(max_len <= 9, "circuit enumeration is capped at length 9");
    let mut out = Vec::new();
    if max_len < 2 {
        return out;
    }
    let mut on_path = vec![false; g.n()];
    let mut verts = Vec::with_capacity(max_len);
    let mut edges = Vec::with_capacity(max_len);
    for s in 0..g.n() {
        verts.push(s);
        on_path[s] = true;
        extend_path(g, s, max_len, &mut verts, &mut edges, &mut on_path, &mut out);
        on_path[s] = false;
        verts.pop();
    }
    out.sort_by(|a, b| {
        (a.len(), &a.vertices, &a.edges).cmp(&(b.len(), &b.vertices, &b.edges))
    });
    out
}

fn extend_path(
    g: &CubicGraph,
    s: usize,
    max_len: usize,
    verts: &mut Vec<usize>,
    edges: &mut Vec<EdgeId>,
    on_path: &mut [bool],
    out: &mut Vec<Circuit>,
) {
    let u = *verts.last().unwrap();
    for e in g.incident(u) {
        if edges.last() == Some(&e) {
            continue;
        }
        let v = g.other_end(e, u);
        if v == s {
            // each circuit is met twice from s; keep the traversal whose
            // first edge has the smaller id
            if !edges.is_empty() && edges[0] < e {
                let mut es = edges.clone();
                es.push(e);
                out.push(Circuit { vertices: verts.clone(), edges: es }.canonicalize());
            }
        } else if v > s && !on_path[v] && edges.len() + 2 <= max_len {
            on_path[v] = true;
            verts.push(v);
            edges.push(e);
            extend_path(g, s, max_len, verts, edges, on_path, out);
            edges.pop();
            verts.pop();
            on_path[v] = false;
        }
    }
}

/// Incremental construction of a derived graph. Kept vertices and edges
/// come first in their old order, followed by the new ones.
#[derive(Clone, Debug)]
pub(crate) struct GraphEditor<'a> {
    base: &'a CubicGraph,
    keep_vertex: Vec<bool>,
    keep_edge: Vec<bool>,
    new_vertices: usize,
    new_edges: Vec<(Node, Node)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Node {
    Old(usize),
    New(usize),
}

#[derive(Clone, Debug)]
pub(crate) struct Edited {
    pub graph: CubicGraph,
    /// New vertex -> old vertex, `None` for minted vertices.
    pub vertex_origin: Vec<Option<usize>>,
    /// New edge -> old edge, `None` for minted edges.
    pub edge_origin: Vec<Option<EdgeId>>,
    /// Old vertex -> new vertex.
    pub vertex_image: Vec<Option<usize>>,
    /// Old edge -> new edge.
    pub edge_image: Vec<Option<EdgeId>>,
    /// Ids of minted vertices, in creation order.
    pub new_vertex_ids: Vec<usize>,
    /// Ids of minted edges, in creation order.
    pub new_edge_ids: Vec<EdgeId>,
}

impl<'a> GraphEditor<'a> {
    pub fn new(base: &'a CubicGraph) -> Self {
        GraphEditor {
            base,
            keep_vertex: vec![true; base.n()],
            keep_edge: vec![true; base.edge_count()],
            new_vertices: 0,
            new_edges: Vec::new(),
        }
    }

    pub fn remove_vertex(&mut self, v: usize) {
        self.keep_vertex[v] = false;
        for e in self.base.incident(v) {
            self.keep_edge[e.0] = false;
        }
    }

    /// Drops every vertex outside `side`, with its edges.
    pub fn keep_only(&mut self, side: &[bool]) {
        for (v, _) in side.iter().enumerate().filter(|(_, &keep)| !keep) {
            self.remove_vertex(v);
        }
    }

    pub fn add_vertex(&mut self) -> Node {
        self.new_vertices += 1;
        Node::New(self.new_vertices - 1)
    }

    pub fn add_edge(&mut self, a: Node, b: Node) {
        self.new_edges.push((a, b));
    }

    pub fn finish(self) -> Result<Edited, GraphError> {
        let mut vertex_image = vec![None; self.base.n()];
        let mut vertex_origin = Vec::new();
        for (v, image) in vertex_image.iter_mut().enumerate() {
            if self.keep_vertex[v] {
                *image = Some(vertex_origin.len());
                vertex_origin.push(Some(v));
            }
        }
        let first_new = vertex_origin.len();
        let new_vertex_ids: Vec<usize> = (first_new..first_new + self.new_vertices).collect();
        vertex_origin.extend(std::iter::repeat_n(None, self.new_vertices));
        let resolve = |x: Node| -> usize {
            match x {
                Node::Old(v) => vertex_image[v].expect("edge attached to a removed vertex"),
                Node::New(i) => first_new + i,
            }
        };
        let mut list = Vec::new();
        let mut edge_origin = Vec::new();
        let mut edge_image = vec![None; self.base.edge_count()];
        for (e, u, v) in self.base.edges() {
            if self.keep_edge[e.0] {
                debug_assert!(self.keep_vertex[u] && self.keep_vertex[v]);
                edge_image[e.0] = Some(EdgeId(list.len()));
                list.push((resolve(Node::Old(u)), resolve(Node::Old(v))));
                edge_origin.push(Some(e));
            }
        }
        let mut new_edge_ids = Vec::new();
        for &(a, b) in &self.new_edges {
            new_edge_ids.push(EdgeId(list.len()));
            list.push((resolve(a), resolve(b)));
            edge_origin.push(None);
        }
        let graph = CubicGraph::new(vertex_origin.len(), list)?;
        Ok(Edited { graph, vertex_origin, edge_origin, vertex_image, edge_image, new_vertex_ids, new_edge_ids })
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub(crate) fn petersen() -> CubicGraph {
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

    fn theta() -> CubicGraph {
        CubicGraph::new(2, [(0, 1), (0, 1), (0, 1)]).unwrap()
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(
            CubicGraph::new(3, [(0, 1), (1, 2)]).unwrap_err(),
            GraphError::NotCubic { vertex: 0, degree: 1 }
        );
        assert_eq!(CubicGraph::new(2, [(0, 0)]).unwrap_err(), GraphError::LoopEdge(0));
        assert!(matches!(
            CubicGraph::new(2, [(0, 5)]),
            Err(GraphError::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn girths() {
        assert_eq!(girth(&k4()), 3);
        assert_eq!(girth(&petersen()), 5);
        assert_eq!(girth(&theta()), 2);
    }

    #[test]
    fn petersen_five_circuits() {
        let g = petersen();
        let cs = enumerate_circuits_up_to(&g, 5);
        assert_eq!(cs.len(), 12);
        for c in &cs {
            assert_eq!(c.len(), 5);
            assert!(c.is_valid_in(&g));
        }
        for v in 0..10 {
            assert_eq!(cs.iter().filter(|c| c.contains_vertex(v)).count(), 6);
        }
    }

    #[test]
    fn theta_has_three_digons() {
        let cs = enumerate_circuits_up_to(&theta(), 9);
        assert_eq!(cs.len(), 3);
        assert!(cs.iter().all(|c| c.len() == 2 && c.vertices == vec![0, 1]));
        assert!(enumerate_circuits_up_to(&k4(), 2).is_empty());
        // K4: four triangles and three 4-circuits
        assert_eq!(enumerate_circuits_up_to(&k4(), 9).len(), 7);
    }

    #[test]
    fn canonical_form() {
        let g = petersen();
        for c in enumerate_circuits_up_to(&g, 9) {
            assert_eq!(c.vertices[0], *c.vertices.iter().min().unwrap());
            assert!(c.vertices[1] < *c.vertices.last().unwrap());
        }
    }

    #[test]
    fn editor_compacts_ids() {
        let g = k4();
        let mut ed = GraphEditor::new(&g);
        // contract the triangle 1,2,3 into a single new vertex
        for v in 1..4 {
            ed.remove_vertex(v);
        }
        ed.remove_vertex(0);
        let a = ed.add_vertex();
        let b = ed.add_vertex();
        for _ in 0..3 {
            ed.add_edge(a, b);
        }
        let out = ed.finish().unwrap();
        assert_eq!(out.graph, theta());
        assert_eq!(out.vertex_origin, vec![None, None]);
        assert_eq!(out.new_edge_ids, vec![EdgeId(0), EdgeId(1), EdgeId(2)]);
    }
}
