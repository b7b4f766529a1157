//! The Petersen-like patterns `P1` (Petersen minus an edge), `P2` (Petersen
//! with an edge subdivided twice) and `P3` (Petersen minus a vertex): their
//! occurrences in a host, classification into the families used by the
//! objectives, and the choice of boundary edges `e_S` / `E_S`.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Circuit, CubicGraph, EdgeId};
use crate::matching::circuit_in_some_two_factor;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PatternKind {
    P1,
    P2,
    P3,
}

impl PatternKind {
    pub const ALL: [PatternKind; 3] = [PatternKind::P1, PatternKind::P2, PatternKind::P3];
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ClassTag {
    P1Class,
    P2Class,
    P3a,
    P3b1,
    P3b2,
    Unclassified,
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum PatternError {
    #[error("occurrences {first:?} and {second:?} overlap")]
    OverlapViolation { first: (PatternKind, usize), second: (PatternKind, usize) },
    #[error("P3 occurrence on {vertices:?} matches neither boundary configuration")]
    UnclassifiableP3b { vertices: Vec<usize> },
}

/// A small graph with vertices of degree 2 and 3.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternGraph {
    pub kind: PatternKind,
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl PatternGraph {
    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    pub fn degree_two_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.degree(v) == 2).collect()
    }

    /// Degrees in decreasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    fn neighbors(&self, v: usize) -> Vec<(usize, usize)> {
        self.edges
            .iter()
            .enumerate()
            .filter_map(|(i, &(a, b))| {
                if a == v {
                    Some((b, i))
                } else if b == v {
                    Some((a, i))
                } else {
                    None
                }
            })
            .collect()
    }
}

fn petersen_edges() -> Vec<(usize, usize)> {
    let mut e = Vec::new();
    for i in 0..5 {
        e.push((i, (i + 1) % 5));
        e.push((i, i + 5));
    }
    e.extend([(5, 7), (7, 9), (9, 6), (6, 8), (8, 5)]);
    e
}

pub fn pattern_graph(kind: PatternKind) -> PatternGraph {
    let pet = petersen_edges();
    match kind {
        PatternKind::P1 => PatternGraph { kind, n: 10, edges: pet[1..].to_vec() },
        PatternKind::P2 => {
            let mut edges = pet[1..].to_vec();
            edges.extend([(0, 10), (10, 11), (11, 1)]);
            PatternGraph { kind, n: 12, edges }
        }
        PatternKind::P3 => PatternGraph {
            kind,
            n: 9,
            edges: pet
                .iter()
                .filter(|&&(a, b)| a != 0 && b != 0)
                .map(|&(a, b)| (a - 1, b - 1))
                .collect(),
        },
    }
}

/// An embedded copy of a pattern. Identity is the host edge set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternOccurrence {
    pub kind: PatternKind,
    /// Pattern vertex -> host vertex.
    pub vertex_map: Vec<usize>,
    /// Sorted host vertices of the image.
    pub vertices: Vec<usize>,
    /// Sorted host edges of the image.
    pub edge_set: Vec<EdgeId>,
    /// Sorted host edges outside the image at its degree-2 vertices.
    pub boundary: Vec<EdgeId>,
    pub class_tag: ClassTag,
    pub e_s: Option<EdgeId>,
    /// Admissible boundary pair; empty unless the tag is `P3a`.
    pub e_set: Vec<EdgeId>,
}

impl PatternOccurrence {
    pub fn contains_vertex(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn contains_edge(&self, e: EdgeId) -> bool {
        self.edge_set.binary_search(&e).is_ok()
    }

    pub fn shared_vertices(&self, other: &PatternOccurrence) -> Vec<usize> {
        self.vertices.iter().copied().filter(|&v| other.contains_vertex(v)).collect()
    }

    pub fn shared_edges(&self, other: &PatternOccurrence) -> Vec<EdgeId> {
        self.edge_set.iter().copied().filter(|&e| other.contains_edge(e)).collect()
    }

    pub fn is_subgraph_of(&self, other: &PatternOccurrence) -> bool {
        self.edge_set.iter().all(|&e| other.contains_edge(e))
    }

    /// Host images of the pattern's degree-2 vertices.
    pub fn attachment_vertices(&self) -> Vec<usize> {
        pattern_graph(self.kind).degree_two_vertices().into_iter().map(|v| self.vertex_map[v]).collect()
    }

    /// For each boundary edge, its end outside the image (the end at the
    /// image if both ends lie in it).
    pub fn external_neighbors(&self, g: &CubicGraph) -> Vec<usize> {
        self.boundary
            .iter()
            .map(|&e| {
                let (u, v) = g.ends(e);
                if self.contains_vertex(u) && !self.contains_vertex(v) {
                    v
                } else {
                    u
                }
            })
            .collect()
    }
}

/// `c` shares at least two edges with `s`.
pub fn goes_through(c: &Circuit, s: &PatternOccurrence) -> bool {
    c.edges.iter().filter(|&&e| s.contains_edge(e)).count() >= 2
}

/// `c` shares a vertex with `s`.
pub fn intersects(c: &Circuit, s: &PatternOccurrence) -> bool {
    c.vertices.iter().any(|&v| s.contains_vertex(v))
}

struct Plan {
    order: Vec<usize>,
    /// For position `i > 0`: (parent vertex, pattern edge to it).
    parent: Vec<(usize, usize)>,
    /// For position `i`: earlier neighbours other than the parent.
    back: Vec<Vec<(usize, usize)>>,
}

fn plan(p: &PatternGraph) -> Plan {
    let start = p.degree_two_vertices()[0];
    let mut order = vec![start];
    let mut pos = vec![usize::MAX; p.n];
    pos[start] = 0;
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        for (u, _) in p.neighbors(v) {
            if pos[u] == usize::MAX {
                pos[u] = order.len();
                order.push(u);
            }
        }
        i += 1;
    }
    let mut parent = vec![(usize::MAX, usize::MAX)];
    let mut back = vec![Vec::new()];
    for (idx, &v) in order.iter().enumerate().skip(1) {
        let mut earlier: Vec<(usize, usize)> = p.neighbors(v).into_iter().filter(|&(u, _)| pos[u] < idx).collect();
        earlier.sort_by_key(|&(u, _)| pos[u]);
        parent.push(earlier[0]);
        back.push(earlier[1..].to_vec());
    }
    Plan { order, parent, back }
}

struct Search<'a> {
    g: &'a CubicGraph,
    plan: Plan,
    map: Vec<usize>,
    edge_img: Vec<EdgeId>,
    used_vertex: Vec<bool>,
    used_edge: Vec<bool>,
    found: BTreeMap<Vec<EdgeId>, Vec<usize>>,
}

impl Search<'_> {
    fn extend(&mut self, idx: usize) {
        if idx == self.plan.order.len() {
            let mut es = self.edge_img.clone();
            es.sort_unstable();
            self.found.entry(es).or_insert_with(|| self.map.clone());
            return;
        }
        let pv = self.plan.order[idx];
        let (parent, pe) = self.plan.parent[idx];
        let hp = self.map[parent];
        for e in self.g.incident(hp) {
            if self.used_edge[e.0] {
                continue;
            }
            let hv = self.g.other_end(e, hp);
            if self.used_vertex[hv] {
                continue;
            }
            self.map[pv] = hv;
            self.used_vertex[hv] = true;
            self.used_edge[e.0] = true;
            self.edge_img[pe] = e;
            self.close_back(idx, 0);
            self.used_edge[e.0] = false;
            self.used_vertex[hv] = false;
            self.map[pv] = usize::MAX;
        }
    }

    fn close_back(&mut self, idx: usize, bi: usize) {
        if bi == self.plan.back[idx].len() {
            self.extend(idx + 1);
            return;
        }
        let hv = self.map[self.plan.order[idx]];
        let (q, pe) = self.plan.back[idx][bi];
        let hq = self.map[q];
        for f in self.g.incident(hv) {
            if self.used_edge[f.0] || self.g.other_end(f, hv) != hq {
                continue;
            }
            self.used_edge[f.0] = true;
            self.edge_img[pe] = f;
            self.close_back(idx, bi + 1);
            self.used_edge[f.0] = false;
        }
    }
}

/// Every occurrence of `kind` in `g`, one per host edge set, sorted by edge
/// set.
pub fn find_occurrences(g: &CubicGraph, kind: PatternKind) -> Vec<PatternOccurrence> {
    let p = pattern_graph(kind);
    if g.n() < p.n {
        return Vec::new();
    }
    let mut s = Search {
        g,
        plan: plan(&p),
        map: vec![usize::MAX; p.n],
        edge_img: vec![EdgeId(usize::MAX); p.edges.len()],
        used_vertex: vec![false; g.n()],
        used_edge: vec![false; g.edge_count()],
        found: BTreeMap::new(),
    };
    let anchor = s.plan.order[0];
    for h in 0..g.n() {
        s.map[anchor] = h;
        s.used_vertex[h] = true;
        s.extend(1);
        s.used_vertex[h] = false;
    }
    s.found
        .into_iter()
        .map(|(edge_set, vertex_map)| {
            let mut vertices = vertex_map.clone();
            vertices.sort_unstable();
            let mut boundary = BTreeSet::new();
            for &v in &vertices {
                for e in g.incident(v) {
                    if edge_set.binary_search(&e).is_err() {
                        boundary.insert(e);
                    }
                }
            }
            PatternOccurrence {
                kind,
                vertex_map,
                vertices,
                edge_set,
                boundary: boundary.into_iter().collect(),
                class_tag: ClassTag::Unclassified,
                e_s: None,
                e_set: Vec::new(),
            }
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CensusMode {
    /// `𝒫₁` excludes copies of `P1` extending to `P2`.
    Oddness,
    /// All copies of `P1`, no `P2` family.
    FiveCycle,
}

/// Raw occurrence lists per kind.
#[derive(Clone, Debug, Default)]
pub struct RawOccurrences {
    pub p1: Vec<PatternOccurrence>,
    pub p2: Vec<PatternOccurrence>,
    pub p3: Vec<PatternOccurrence>,
}

impl RawOccurrences {
    pub fn find(g: &CubicGraph, mode: CensusMode) -> Self {
        RawOccurrences {
            p1: find_occurrences(g, PatternKind::P1),
            p2: match mode {
                CensusMode::Oddness => find_occurrences(g, PatternKind::P2),
                CensusMode::FiveCycle => Vec::new(),
            },
            p3: find_occurrences(g, PatternKind::P3),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Overlap {
    pub first: (PatternKind, usize),
    pub second: (PatternKind, usize),
    pub shared_vertices: Vec<usize>,
    pub shared_edges: Vec<EdgeId>,
}

/// The classified families.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub mode: CensusMode,
    pub p1: Vec<PatternOccurrence>,
    pub p2: Vec<PatternOccurrence>,
    pub p3: Vec<PatternOccurrence>,
    /// Pairs of members sharing a vertex.
    pub overlaps: Vec<Overlap>,
    /// The only overlap is two copies of `P2` meeting in two vertices and
    /// one edge on 22 vertices.
    pub exception22: bool,
}

impl Classification {
    pub fn members(&self) -> impl Iterator<Item = &PatternOccurrence> {
        self.p1.iter().chain(&self.p2).chain(&self.p3)
    }

    pub fn count_tag(&self, tag: ClassTag) -> usize {
        self.p3.iter().filter(|o| o.class_tag == tag).count()
    }

    pub fn p3a(&self) -> usize {
        self.count_tag(ClassTag::P3a)
    }

    pub fn p3b(&self) -> usize {
        self.count_tag(ClassTag::P3b1) + self.count_tag(ClassTag::P3b2)
    }

    fn list(&self, kind: PatternKind) -> &[PatternOccurrence] {
        match kind {
            PatternKind::P1 => &self.p1,
            PatternKind::P2 => &self.p2,
            PatternKind::P3 => &self.p3,
        }
    }

    fn list_mut(&mut self, kind: PatternKind) -> &mut Vec<PatternOccurrence> {
        match kind {
            PatternKind::P1 => &mut self.p1,
            PatternKind::P2 => &mut self.p2,
            PatternKind::P3 => &mut self.p3,
        }
    }
}

/// Builds the families and records overlaps without judging them.
pub fn classify_unchecked(g: &CubicGraph, raw: &RawOccurrences, mode: CensusMode) -> Classification {
    let mut p2: Vec<PatternOccurrence> = raw.p2.clone();
    let mut p1: Vec<PatternOccurrence> = match mode {
        CensusMode::Oddness => raw.p1.iter().filter(|o| !raw.p2.iter().any(|s| o.is_subgraph_of(s))).cloned().collect(),
        CensusMode::FiveCycle => raw.p1.clone(),
    };
    let mut p3: Vec<PatternOccurrence> =
        raw.p3.iter().filter(|o| !raw.p1.iter().any(|s| o.is_subgraph_of(s))).cloned().collect();
    for o in &mut p1 {
        o.class_tag = ClassTag::P1Class;
    }
    for o in &mut p2 {
        o.class_tag = ClassTag::P2Class;
    }
    for o in &mut p3 {
        o.class_tag = ClassTag::Unclassified;
    }
    let mut cls = Classification { mode, p1, p2, p3, overlaps: Vec::new(), exception22: false };
    let tagged: Vec<(PatternKind, usize)> = PatternKind::ALL
        .iter()
        .flat_map(|&k| (0..cls.list(k).len()).map(move |i| (k, i)))
        .collect();
    for (a, &x) in tagged.iter().enumerate() {
        for &y in &tagged[a + 1..] {
            let ox = &cls.list(x.0)[x.1];
            let oy = &cls.list(y.0)[y.1];
            let shared_vertices = ox.shared_vertices(oy);
            if !shared_vertices.is_empty() {
                let shared_edges = ox.shared_edges(oy);
                cls.overlaps.push(Overlap { first: x, second: y, shared_vertices, shared_edges });
            }
        }
    }
    cls.exception22 = g.n() == 22
        && !cls.overlaps.is_empty()
        && cls.overlaps.iter().all(|o| {
            o.first.0 == PatternKind::P2
                && o.second.0 == PatternKind::P2
                && o.shared_vertices.len() == 2
                && o.shared_edges.len() == 1
        });
    cls
}

/// As [`classify_unchecked`], failing on any overlap other than the
/// 22-vertex exception.
pub fn classify_occurrences(
    g: &CubicGraph,
    raw: &RawOccurrences,
    mode: CensusMode,
) -> Result<Classification, PatternError> {
    let cls = classify_unchecked(g, raw, mode);
    if !cls.exception22 {
        if let Some(o) = cls.overlaps.first() {
            return Err(PatternError::OverlapViolation { first: o.first, second: o.second });
        }
    }
    Ok(cls)
}

/// Chooses `e_S` (copies of `P1`, `P2`) or `E_S` and the `P3` subclass.
///
/// `circuits` must contain every circuit of length 7 and 9 through `occ`;
/// `others` are the remaining members of the classified family (`occ`
/// itself is skipped if present); `matcher` decides whether a circuit lies
/// in some 2-factor of `g`.
pub fn select_boundary_edges(
    g: &CubicGraph,
    occ: &PatternOccurrence,
    circuits: &[Circuit],
    others: &[PatternOccurrence],
    matcher: &dyn Fn(&CubicGraph, &Circuit) -> bool,
) -> Result<PatternOccurrence, PatternError> {
    let mut out = occ.clone();
    match occ.kind {
        PatternKind::P1 | PatternKind::P2 => {
            out.e_s = occ.boundary.first().copied();
            out.e_set.clear();
            if out.class_tag == ClassTag::Unclassified {
                out.class_tag = if occ.kind == PatternKind::P1 { ClassTag::P1Class } else { ClassTag::P2Class };
            }
            Ok(out)
        }
        PatternKind::P3 => {
            out.e_s = None;
            let b = &occ.boundary;
            for i in 0..b.len() {
                for j in i + 1..b.len() {
                    let (e, f) = (b[i], b[j]);
                    let with_pair = |c: &&Circuit| c.contains_edge(e) && c.contains_edge(f) && goes_through(c, occ);
                    let cond1 = !circuits.iter().filter(|c| c.len() == 7).filter(with_pair).any(|c| matcher(g, c));
                    let cond2 = !circuits.iter().filter(|c| c.len() == 9).filter(with_pair).any(|c| {
                        others.iter().any(|s| s.edge_set != occ.edge_set && goes_through(c, s))
                    });
                    if cond1 && cond2 {
                        out.e_set = vec![e, f];
                        out.class_tag = ClassTag::P3a;
                        return Ok(out);
                    }
                }
            }
            out.e_set.clear();
            out.class_tag = p3b_configuration(g, occ)
                .ok_or_else(|| PatternError::UnclassifiableP3b { vertices: occ.vertices.clone() })?;
            Ok(out)
        }
    }
}

/// Which of the two configurations the outside neighbours form: one vertex
/// adjacent to all three, or a distinct common neighbour for each pair.
fn p3b_configuration(g: &CubicGraph, occ: &PatternOccurrence) -> Option<ClassTag> {
    let w = occ.external_neighbors(g);
    if w.len() != 3 {
        return None;
    }
    let excluded = |x: usize| occ.contains_vertex(x) || w.contains(&x);
    let common = |a: usize, b: usize| -> Vec<usize> {
        let nb: BTreeSet<usize> = g.neighbors(a).into_iter().collect();
        let mut out: Vec<usize> = g.neighbors(b).into_iter().filter(|x| nb.contains(x) && !excluded(*x)).collect();
        out.sort_unstable();
        out.dedup();
        out
    };
    let c01 = common(w[0], w[1]);
    let c02 = common(w[0], w[2]);
    let c12 = common(w[1], w[2]);
    if c01.iter().any(|x| c02.contains(x) && c12.contains(x)) {
        return Some(ClassTag::P3b1);
    }
    for &x in &c01 {
        for &y in &c02 {
            for &z in &c12 {
                if x != y && y != z && x != z {
                    return Some(ClassTag::P3b2);
                }
            }
        }
    }
    None
}

/// Runs boundary selection on every member. With `strict`, an
/// unclassifiable copy of `P3` is an error; otherwise it is tagged
/// `Unclassified`.
pub fn equip(g: &CubicGraph, cls: &Classification, circuits: &[Circuit], strict: bool) -> Result<Classification, PatternError> {
    let all: Vec<PatternOccurrence> = cls.members().cloned().collect();
    let matcher = |g: &CubicGraph, c: &Circuit| circuit_in_some_two_factor(g, c);
    let mut out = cls.clone();
    for kind in PatternKind::ALL {
        let list = cls.list(kind).to_vec();
        let mut equipped = Vec::with_capacity(list.len());
        for occ in &list {
            let relevant: Vec<Circuit> = circuits
                .iter()
                .filter(|c| (c.len() == 7 || c.len() == 9) && goes_through(c, occ))
                .cloned()
                .collect();
            match select_boundary_edges(g, occ, &relevant, &all, &matcher) {
                Ok(o) => equipped.push(o),
                Err(e) if strict => return Err(e),
                Err(_) => {
                    let mut o = occ.clone();
                    o.class_tag = ClassTag::Unclassified;
                    o.e_set.clear();
                    equipped.push(o);
                }
            }
        }
        *out.list_mut(kind) = equipped;
    }
    Ok(out)
}

/// Structural checks on copies of `P3` in configuration `P3b2`: every
/// outside neighbour lies in at most one 5-circuit and in no member of the
/// family. Returns a description of each failure.
pub fn p3b2_neighbour_violations(g: &CubicGraph, cls: &Classification, five_circuits: &[Circuit]) -> Vec<String> {
    let mut out = Vec::new();
    for (i, occ) in cls.p3.iter().enumerate() {
        if occ.class_tag != ClassTag::P3b2 {
            continue;
        }
        for w in occ.external_neighbors(g) {
            let k = five_circuits.iter().filter(|c| c.len() == 5 && c.contains_vertex(w)).count();
            if k > 1 {
                out.push(format!("P3 #{i}: neighbour {w} lies in {k} 5-circuits"));
            }
            if cls.members().any(|s| s.contains_vertex(w)) {
                out.push(format!("P3 #{i}: neighbour {w} lies in a family member"));
            }
        }
    }
    out
}
