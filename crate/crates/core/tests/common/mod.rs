#![allow(dead_code)]

use fivecycle::connectivity::is_bridgeless;
use fivecycle::io::parse_graphs;
use fivecycle::CubicGraph;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn data_path(name: &str) -> String {
    format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

/// Every graph in a data file, with its 1-based line number.
pub fn load(name: &str) -> Vec<(usize, CubicGraph)> {
    let text = std::fs::read_to_string(data_path(name)).unwrap_or_else(|e| panic!("{name}: {e}"));
    parse_graphs(&text).into_iter().map(|r| (r.line, r.result.expect("corpus graphs are cubic"))).collect()
}

/// Connected bridgeless cubic graphs from the census files up to `max_n`.
pub fn census(max_n: usize) -> Vec<(String, CubicGraph)> {
    let mut out = Vec::new();
    for n in (4..=max_n).step_by(2) {
        for (line, g) in load(&format!("cubic{n}.g6")) {
            if is_bridgeless(&g) {
                out.push((format!("cubic{n}:{line}"), g));
            }
        }
    }
    out
}

pub fn snarks() -> Vec<(String, CubicGraph)> {
    let mut out = Vec::new();
    for f in ["snarks18.g6", "snarks20.g6", "snarks_g5_22.g6"] {
        for (line, g) in load(f) {
            out.push((format!("{f}:{line}"), g));
        }
    }
    out
}

/// A random connected bridgeless cubic multigraph on `n` vertices (no
/// loops), by rejection from the pairing model.
pub fn random_multigraph(n: usize, seed: u64) -> CubicGraph {
    assert!(n.is_multiple_of(2) && n >= 2);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let mut points: Vec<usize> = (0..3 * n).map(|i| i / 3).collect();
        points.shuffle(&mut rng);
        let pairs: Vec<(usize, usize)> = points.chunks(2).map(|c| (c[0], c[1])).collect();
        if pairs.iter().any(|&(u, v)| u == v) {
            continue;
        }
        let g = CubicGraph::new(n, pairs).expect("pairing model gives a cubic multigraph");
        if g.is_connected() && is_bridgeless(&g) {
            return g;
        }
    }
}

/// Removes vertex `v` (three distinct neighbours) and wires `ports[i]` of a
/// gadget to its `i`-th neighbour.
pub fn replace_vertex(g: &CubicGraph, v: usize, gadget: &[(usize, usize)], gadget_n: usize, ports: [usize; 3]) -> CubicGraph {
    let nb = g.neighbors(v);
    let shift = |x: usize| if x > v { x - 1 } else { x };
    let base = g.n() - 1;
    let mut e: Vec<(usize, usize)> =
        g.edge_list().into_iter().filter(|&(a, b)| a != v && b != v).map(|(a, b)| (shift(a), shift(b))).collect();
    e.extend(gadget.iter().map(|&(a, b)| (a + base, b + base)));
    for i in 0..3 {
        e.push((shift(nb[i]), ports[i] + base));
    }
    CubicGraph::new(base + gadget_n, e).expect("vertex replacement keeps the graph cubic")
}

/// Removes edge `(x, y)` and wires `x` to `ports[0]`, `y` to `ports[1]`.
pub fn replace_edge(g: &CubicGraph, x: usize, y: usize, gadget: &[(usize, usize)], gadget_n: usize, ports: [usize; 2]) -> CubicGraph {
    let mut e = g.edge_list();
    let i = e.iter().position(|&(a, b)| (a, b) == (x, y) || (a, b) == (y, x)).expect("edge present");
    e.remove(i);
    let base = g.n();
    e.extend(gadget.iter().map(|&(a, b)| (a + base, b + base)));
    e.extend([(x, ports[0] + base), (y, ports[1] + base)]);
    CubicGraph::new(base + gadget_n, e).expect("edge replacement keeps the graph cubic")
}

/// Subdivides edges `(x1, y1)` and `(x2, y2)` twice each and joins the new
/// vertices into a 4-circuit.
pub fn cross_link(g: &CubicGraph, (x1, y1): (usize, usize), (x2, y2): (usize, usize)) -> CubicGraph {
    let mut e = g.edge_list();
    for (x, y) in [(x1, y1), (x2, y2)] {
        let i = e.iter().position(|&(a, b)| (a, b) == (x, y) || (a, b) == (y, x)).expect("edge present");
        e.remove(i);
    }
    let (a, b, c, d) = (g.n(), g.n() + 1, g.n() + 2, g.n() + 3);
    e.extend([(x1, a), (a, b), (b, y1), (x2, c), (c, d), (d, y2), (a, c), (b, d)]);
    CubicGraph::new(g.n() + 4, e).expect("cross-link keeps the graph cubic")
}

/// Reduction fixtures built on the Petersen graph, one per step kind.
pub fn reduction_fixtures() -> Vec<(&'static str, CubicGraph)> {
    use fivecycle::families::gen_petersen;
    let p = gen_petersen();
    // K3,3 minus a vertex: degree-2 ports 0, 1, 2
    let k23 = [(0, 3), (0, 4), (1, 3), (1, 4), (2, 3), (2, 4)];
    // K3,3 minus an edge: the 4-circuit 0-1-2-3 with 4 on 0, 2 and 5 on 1, 3
    let k33e = [(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 2), (5, 1), (5, 3)];
    // the dodecahedron GP(10, 2), colourable with girth 5
    let dodeca: Vec<(usize, usize)> =
        (0..10usize).flat_map(|i| [(i, (i + 1) % 10), (i, i + 10), (i + 10, (i + 2) % 10 + 10)]).collect();
    let dodeca_e: Vec<(usize, usize)> = dodeca.iter().copied().filter(|&e| e != (0, 1)).collect();
    // minus vertex 0, relabelled 1..20 -> 0..19
    let dodeca_v: Vec<(usize, usize)> =
        dodeca.iter().filter(|&&(a, b)| a != 0 && b != 0).map(|&(a, b)| (a - 1, b - 1)).collect();
    let mut digon = p.edge_list();
    // subdivide 0-1 twice and double the middle edge
    digon.retain(|&e| e != (0, 1));
    digon.extend([(0, 10), (10, 11), (10, 11), (11, 1)]);
    let mut triangle = p.edge_list();
    triangle.retain(|&(a, b)| a != 0 && b != 0);
    let triangle: Vec<(usize, usize)> = triangle.into_iter().map(|(a, b)| (a - 1, b - 1)).collect();
    let triangle = [triangle, vec![(0, 9), (9, 10), (10, 11), (11, 9), (3, 10), (4, 11)]].concat();
    vec![
        ("digon", CubicGraph::new(12, digon).unwrap()),
        ("triangle", CubicGraph::new(12, triangle).unwrap()),
        ("four-disjoint", cross_link(&p, (0, 1), (7, 9))),
        ("four-one", replace_vertex(&p, 0, &k23, 5, [0, 1, 2])),
        ("four-both", replace_edge(&p, 0, 1, &k33e, 6, [4, 5])),
        ("two-cut", replace_edge(&p, 0, 1, &dodeca_e, 20, [0, 1])),
        ("three-cut", replace_vertex(&p, 0, &dodeca_v, 19, [0, 8, 9])),
    ]
}

/// Two copies of `P2` sharing the middle edge of their subdivided paths:
/// two copies of `P1` whose degree-2 ends meet the adjacent vertices `u`
/// and `v`. 22 vertices.
pub fn exception22() -> CubicGraph {
    use fivecycle::patterns::{pattern_graph, PatternKind};
    let p1 = pattern_graph(PatternKind::P1);
    let ends = p1.degree_two_vertices();
    let (u, v) = (20, 21);
    let mut e = Vec::new();
    for off in [0, 10] {
        e.extend(p1.edges.iter().map(|&(a, b)| (a + off, b + off)));
        e.extend([(ends[0] + off, u), (ends[1] + off, v)]);
    }
    e.push((u, v));
    CubicGraph::new(22, e).unwrap()
}

/// Number of components after deleting the edges in `removed`, by
/// union-find.
pub fn components_without(g: &CubicGraph, removed: &[usize]) -> usize {
    let mut parent: Vec<usize> = (0..g.n()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    let mut comps = g.n();
    for (e, u, v) in g.edges() {
        if removed.contains(&e.0) {
            continue;
        }
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a != b {
            parent[a] = b;
            comps -= 1;
        }
    }
    comps
}

/// Every circuit as a sorted edge-id set, by testing all edge subsets.
pub fn brute_circuits(g: &CubicGraph) -> Vec<Vec<usize>> {
    let m = g.edge_count();
    assert!(m <= 20, "subset enumeration is for small graphs");
    let mut out = Vec::new();
    for mask in 1u32..(1 << m) {
        let set: Vec<usize> = (0..m).filter(|&e| mask >> e & 1 == 1).collect();
        let mut deg = vec![0; g.n()];
        for &e in &set {
            let (u, v) = g.ends(fivecycle::EdgeId(e));
            deg[u] += 1;
            deg[v] += 1;
        }
        if deg.iter().any(|&d| d != 0 && d != 2) {
            continue;
        }
        // connected: the used vertices form one component of the subgraph
        let used = deg.iter().filter(|&&d| d == 2).count();
        let others: Vec<usize> = (0..m).filter(|e| !set.contains(e)).collect();
        if components_without(g, &others) == g.n() - used + 1 {
            out.push(set);
        }
    }
    out
}

/// Every perfect matching as a sorted edge-id list, by recursion on the
/// lowest uncovered vertex.
pub fn brute_matchings(g: &CubicGraph) -> Vec<Vec<usize>> {
    fn rec(g: &CubicGraph, covered: &mut Vec<bool>, chosen: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let Some(v) = covered.iter().position(|&c| !c) else {
            let mut m = chosen.clone();
            m.sort_unstable();
            out.push(m);
            return;
        };
        for e in g.incident(v) {
            let u = g.other_end(e, v);
            if u == v || covered[u] || chosen.contains(&e.0) {
                continue;
            }
            covered[v] = true;
            covered[u] = true;
            chosen.push(e.0);
            rec(g, covered, chosen, out);
            chosen.pop();
            covered[v] = false;
            covered[u] = false;
        }
    }
    let mut out = Vec::new();
    rec(g, &mut vec![false; g.n()], &mut Vec::new(), &mut out);
    out.sort();
    out.dedup();
    out
}
