//! The two pipelines: few 5-circuits (`solve_5cyc`) and few odd circuits
//! (`solve_oddness`), each returning a 2-factor of the input graph together
//! with a checkable [`Certificate`].
//!
//! Weights are integers in quarter-units: a circuit boundary edge costs 1,
//! `e_S` of a copy of `P1` costs 4 (8 in the oddness objective), and so on.

use std::collections::BTreeSet;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::{even_two_factor_from_coloring, three_edge_color};
use crate::connectivity::{bridges, cyclic_edge_connectivity};
use crate::factor::TwoFactor;
use crate::graph::{enumerate_circuits_up_to, girth, Circuit, CubicGraph, EdgeId};
use crate::matching::{
    enumerate_min_weight_matchings, enumerate_perfect_matchings, fractional_objective_value,
    min_weight_perfect_matching, sub_instance_min, MatchingError, PerfectMatching, WeightVector,
};
use crate::patterns::{
    classify_occurrences, classify_unchecked, equip, goes_through, intersects, CensusMode, Classification,
    PatternOccurrence, RawOccurrences,
};
use crate::reductions::{full_reduce, lift_two_factor, ReductionError, ReductionTrace, Terminal};

pub const CERTIFICATE_SCHEMA: u32 = 1;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum SolveError {
    #[error("graph has a bridge ({0})")]
    HasBridge(EdgeId),
    #[error("graph is disconnected")]
    Disconnected,
    #[error(transparent)]
    Reduction(#[from] ReductionError),
    #[error(transparent)]
    Matching(#[from] MatchingError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Theorem {
    /// At most `2(n - 2)/15` 5-circuits, no triangles.
    #[serde(rename = "T2-fivecirc")]
    T2FiveCirc,
    /// At most `6n/35` odd circuits on the reduced graph.
    #[serde(rename = "T1-oddness")]
    T1Oddness,
    /// At most `n/10` 5-circuits for cyclically 4-edge-connected graphs of
    /// girth 5.
    #[serde(rename = "T4-nontrivial")]
    T4Nontrivial,
}

/// Family sizes on the reduced graph. `p1` counts all copies of `P1` in the
/// 5-circuit pipeline; the `P3` split is only computed by the oddness
/// pipeline.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternCensus {
    pub c5: usize,
    pub p1: usize,
    pub p2: usize,
    pub p3a: Option<usize>,
    pub p3b: Option<usize>,
    pub p3: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub schema: u32,
    pub theorem: Theorem,
    pub graph_id: String,
    pub n: usize,
    /// Vertices of the graph the bound is claimed for.
    pub bound_n: usize,
    pub bound_value: Ratio<i64>,
    /// 5-circuits (five-circuit theorems) or odd circuits (oddness) of the
    /// returned factor.
    pub achieved: usize,
    pub pattern_census: PatternCensus,
    /// Optimal objective on the reduced graph, quarter-units.
    pub matching_weight: i64,
    /// Objective at the uniform point `1/3`, quarter-units.
    pub fractional_bound: Ratio<i64>,
    pub trace_ref: Option<String>,
    pub reduced_n: usize,
    pub reduction_steps: usize,
    pub terminal: Path,
    /// Statistics of the factor on the reduced graph.
    pub reduced_odd: usize,
    pub reduced_count5: usize,
    pub invariant_i: Ratio<i64>,
    /// Pre-floor accounting bound on the reduced graph, when the generic
    /// path ran.
    pub accounting_bound: Option<Ratio<i64>>,
    /// The input is the Petersen graph, which the theorems exclude.
    pub exceptional: bool,
    /// The tie-break among optimal matchings hit its cap.
    pub best_effort: bool,
    /// Two family members share a vertex (the 22-vertex exception or an
    /// unexpected overlap).
    pub overlap: bool,
    /// Some copy of `P3` fit neither configuration.
    pub unclassified_p3: bool,
    /// The optimal matching broke the floor bound and an exhaustive search
    /// replaced it.
    pub fallback: bool,
}

/// How the factor was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Path {
    Petersen,
    Colorable,
    ReducedPetersen,
    ReducedColorable,
    Generic,
}

#[derive(Clone, Debug)]
pub struct SolveOptions {
    pub graph_id: String,
    /// Cap on optimal matchings examined by the `P2` tie-break.
    pub p2_cap: usize,
    /// Cap on matchings enumerated when the optimum misses the floor bound.
    pub fallback_cap: usize,
    /// Issue the `n/10` certificate when its preconditions hold.
    pub prefer_t4: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { graph_id: String::new(), p2_cap: 10_000, fallback_cap: 2_000_000, prefer_t4: true }
    }
}

fn is_petersen(g: &CubicGraph) -> bool {
    g.n() == 10 && girth(g) == 5
}

fn check_input(g: &CubicGraph) -> Result<(), SolveError> {
    if let Some(&b) = bridges(g).first() {
        return Err(SolveError::HasBridge(b));
    }
    if !g.is_connected() {
        return Err(SolveError::Disconnected);
    }
    Ok(())
}

pub fn complement_two_factor(g: &CubicGraph, m: &PerfectMatching) -> TwoFactor {
    TwoFactor::complement_of(g, m).expect("complement of a perfect matching is a 2-factor")
}

pub fn floor_ratio(r: Ratio<i64>) -> i64 {
    r.floor().to_integer()
}

pub fn bound_5cyc(n: usize) -> Ratio<i64> {
    Ratio::new(2 * (n as i64 - 2), 15)
}

pub fn bound_t4(n: usize) -> Ratio<i64> {
    Ratio::new(n as i64, 10)
}

pub fn bound_oddness(n: usize) -> Ratio<i64> {
    Ratio::new(6 * n as i64, 35)
}

/// Boundary of a circuit: edges with exactly one end on it.
fn circuit_boundary(g: &CubicGraph, c: &Circuit) -> Vec<EdgeId> {
    let on: BTreeSet<usize> = c.vertices.iter().copied().collect();
    let mut out: Vec<EdgeId> = g
        .edges()
        .filter(|&(_, u, v)| on.contains(&u) != on.contains(&v))
        .map(|(e, _, _)| e)
        .collect();
    out.sort_unstable();
    out
}

/// 5-circuits meeting no member of the family (the 5-circuit objective).
pub fn free_five_circuits_5cyc(five: &[Circuit], members: &[PatternOccurrence]) -> Vec<Circuit> {
    five.iter().filter(|c| !members.iter().any(|s| intersects(c, s))).cloned().collect()
}

/// 5-circuits going through no member of the family (the oddness objective).
pub fn free_five_circuits_oddness(five: &[Circuit], members: &[PatternOccurrence]) -> Vec<Circuit> {
    five.iter().filter(|c| !members.iter().any(|s| goes_through(c, s))).cloned().collect()
}

/// `w_e` = circuits of `c5` with `e` on their boundary, plus 4 when `e` is
/// `e_S` of a copy of `P1`.
pub fn build_weights_5cyc(g: &CubicGraph, p1_all: &[PatternOccurrence], c5: &[Circuit]) -> WeightVector {
    let mut w = WeightVector::zeros(g.edge_count());
    for c in c5 {
        for e in circuit_boundary(g, c) {
            w.add(e, 1);
        }
    }
    for s in p1_all {
        let e = s.e_s.or_else(|| s.boundary.first().copied()).expect("P1 copy has a boundary");
        w.add(e, 4);
    }
    w
}

/// Circuit boundaries weigh 1; `e_S` weighs 8 for `P1` and 4 for `P2`;
/// each edge of `E_S` weighs 4 for `P3a`.
pub fn build_weights_oddness(g: &CubicGraph, cls: &Classification, c5: &[Circuit]) -> WeightVector {
    let mut w = WeightVector::zeros(g.edge_count());
    for c in c5 {
        for e in circuit_boundary(g, c) {
            w.add(e, 1);
        }
    }
    for s in &cls.p1 {
        if let Some(e) = s.e_s {
            w.add(e, 8);
        }
    }
    for s in &cls.p2 {
        if let Some(e) = s.e_s {
            w.add(e, 4);
        }
    }
    for s in &cls.p3 {
        for &e in &s.e_set {
            w.add(e, 4);
        }
    }
    w
}

/// Pairs `(S, C)` with `S` a copy of `P2` and `C` a circuit of the factor
/// going through `S`.
pub fn p2_pair_count(g: &CubicGraph, m: &PerfectMatching, p2: &[PatternOccurrence]) -> usize {
    let f = complement_two_factor(g, m);
    p2.iter().map(|s| f.circuits().iter().filter(|c| goes_through(c, s)).count()).sum()
}

/// Among optimal matchings, one with the fewest `P2` through-pairs. The
/// flag is set when the optimal matchings outnumber `cap` and only a local
/// search around the copies of `P2` was done.
pub fn p2_tiebreak(
    g: &CubicGraph,
    w: &WeightVector,
    p2: &[PatternOccurrence],
    cap: usize,
) -> Result<(PerfectMatching, bool), SolveError> {
    let (base, opt) = min_weight_perfect_matching(g, w)?;
    if p2.is_empty() {
        return Ok((base, false));
    }
    let score = |m: &PerfectMatching| p2_pair_count(g, m, p2);
    match enumerate_min_weight_matchings(g, w, opt, cap) {
        Ok(all) => {
            // enumeration order is not lexicographic; ties go to the
            // smallest edge list
            let best = all.into_iter().min_by(|a, b| score(a).cmp(&score(b)).then(a.edges().cmp(b.edges())));
            Ok((best.unwrap_or(base), false))
        }
        Err(MatchingError::CapExceeded { .. }) => {
            let mut best = (score(&base), base);
            let mut near: BTreeSet<EdgeId> = BTreeSet::new();
            for s in p2 {
                for &v in &s.vertices {
                    near.extend(g.incident(v));
                }
            }
            for e in near {
                if let Some(m) = optimal_with_edge(g, w, e, opt) {
                    let sc = score(&m);
                    if sc < best.0 {
                        best = (sc, m);
                    }
                }
            }
            Ok((best.1, true))
        }
        Err(e) => Err(e.into()),
    }
}

/// An optimal matching forced to contain `e`, if one exists.
fn optimal_with_edge(g: &CubicGraph, w: &WeightVector, e: EdgeId, opt: i64) -> Option<PerfectMatching> {
    let (u, v) = g.ends(e);
    let mut blocked = vec![false; g.n()];
    blocked[u] = true;
    blocked[v] = true;
    let (rest, rw) = sub_instance_min(g, w, &blocked)?;
    if rw + w.get(e) != opt {
        return None;
    }
    let mut edges: Vec<EdgeId> = rest.into_iter().map(EdgeId).collect();
    edges.push(e);
    PerfectMatching::new(g, edges).ok()
}

fn empty_certificate(theorem: Theorem, g: &CubicGraph, opts: &SolveOptions, path: Path) -> Certificate {
    Certificate {
        schema: CERTIFICATE_SCHEMA,
        theorem,
        graph_id: opts.graph_id.clone(),
        n: g.n(),
        bound_n: g.n(),
        bound_value: Ratio::from_integer(0),
        achieved: 0,
        pattern_census: PatternCensus::default(),
        matching_weight: 0,
        fractional_bound: Ratio::from_integer(0),
        trace_ref: None,
        reduced_n: g.n(),
        reduction_steps: 0,
        terminal: path,
        reduced_odd: 0,
        reduced_count5: 0,
        invariant_i: Ratio::from_integer(0),
        accounting_bound: None,
        exceptional: false,
        best_effort: false,
        overlap: false,
        unclassified_p3: false,
        fallback: false,
    }
}

fn fill_stats(cert: &mut Certificate, reduced: &TwoFactor, lifted: &TwoFactor) {
    cert.reduced_odd = reduced.stats().odd;
    cert.reduced_count5 = reduced.stats().count5;
    cert.invariant_i = reduced.stats().invariant_i;
    cert.achieved = match cert.theorem {
        Theorem::T1Oddness => lifted.stats().odd,
        _ => lifted.stats().count5,
    };
}

/// Best factor of a reduced Petersen graph after lifting: fewest odd
/// circuits or 5-circuits, depending on `key`.
fn best_petersen_lift(
    trace: &ReductionTrace,
    key: impl Fn(&TwoFactor) -> (usize, usize),
) -> Result<(TwoFactor, TwoFactor), SolveError> {
    let mut best: Option<((usize, usize), TwoFactor, TwoFactor)> = None;
    for m in enumerate_perfect_matchings(&trace.reduced, 16)? {
        let f = complement_two_factor(&trace.reduced, &m);
        let lifted = lift_two_factor(trace, &f)?;
        let k = key(&lifted);
        if best.as_ref().is_none_or(|b| k < b.0) {
            best = Some((k, f, lifted));
        }
    }
    let (_, f, l) = best.expect("Petersen graph has perfect matchings");
    Ok((f, l))
}

fn colorable_factor(g: &CubicGraph) -> Option<TwoFactor> {
    three_edge_color(g).map(|c| even_two_factor_from_coloring(g, &c).expect("proper colouring"))
}

fn t4_applies(g: &CubicGraph) -> bool {
    girth(g) == 5 && !is_petersen(g) && cyclic_edge_connectivity(g).is_ok_and(|k| k >= 4)
}

/// A triangle-free 2-factor with at most `2(n - 2)/15` 5-circuits.
pub fn solve_5cyc(g: &CubicGraph, opts: &SolveOptions) -> Result<(TwoFactor, Certificate), SolveError> {
    check_input(g)?;
    let theorem = if opts.prefer_t4 && t4_applies(g) { Theorem::T4Nontrivial } else { Theorem::T2FiveCirc };
    let bound = |n: usize| match theorem {
        Theorem::T4Nontrivial => bound_t4(n),
        _ => bound_5cyc(n),
    };
    if is_petersen(g) {
        let m = enumerate_perfect_matchings(g, 16)?.remove(0);
        let f = complement_two_factor(g, &m);
        let mut cert = empty_certificate(theorem, g, opts, Path::Petersen);
        cert.bound_value = bound(g.n());
        cert.exceptional = true;
        fill_stats(&mut cert, &f, &f);
        return Ok((f, cert));
    }
    if let Some(f) = colorable_factor(g) {
        let mut cert = empty_certificate(theorem, g, opts, Path::Colorable);
        cert.bound_value = bound(g.n());
        fill_stats(&mut cert, &f, &f);
        return Ok((f, cert));
    }
    let trace = full_reduce(g)?;
    let mut cert = empty_certificate(theorem, g, opts, Path::Generic);
    cert.bound_value = bound(g.n());
    cert.reduced_n = trace.reduced.n();
    cert.reduction_steps = trace.steps.len();
    let (reduced, lifted) = match trace.terminal {
        Terminal::Petersen => {
            cert.terminal = Path::ReducedPetersen;
            best_petersen_lift(&trace, |f| (f.stats().count5, f.stats().odd))?
        }
        Terminal::Colorable => {
            cert.terminal = Path::ReducedColorable;
            let f = colorable_factor(&trace.reduced).expect("terminal is colourable");
            let l = lift_two_factor(&trace, &f)?;
            (f, l)
        }
        Terminal::Generic => {
            let r = &trace.reduced;
            let raw = RawOccurrences::find(r, CensusMode::FiveCycle);
            let cls = classify_occurrences(r, &raw, CensusMode::FiveCycle).unwrap_or_else(|_| {
                cert.overlap = true;
                classify_unchecked(r, &raw, CensusMode::FiveCycle)
            });
            let five: Vec<Circuit> = enumerate_circuits_up_to(r, 5).into_iter().filter(|c| c.len() == 5).collect();
            let members: Vec<PatternOccurrence> = cls.members().cloned().collect();
            let c5 = free_five_circuits_5cyc(&five, &members);
            let w = build_weights_5cyc(r, &cls.p1, &c5);
            let (m, opt) = min_weight_perfect_matching(r, &w)?;
            cert.pattern_census =
                PatternCensus { c5: c5.len(), p1: cls.p1.len(), p2: 0, p3a: None, p3b: None, p3: cls.p3.len() };
            cert.matching_weight = opt;
            cert.fractional_bound = fractional_objective_value(r, &w);
            cert.accounting_bound = Some(
                Ratio::new(c5.len() as i64, 6) + Ratio::new(4 * cls.p1.len() as i64, 3)
                    + Ratio::from_integer(cls.p3.len() as i64),
            );
            let mut f = complement_two_factor(r, &m);
            let limit = floor_ratio(bound(g.n()));
            if f.stats().count5 as i64 > limit {
                if let Some(better) = fewest_five_circuits(r, opts.fallback_cap) {
                    f = better;
                    cert.fallback = true;
                }
            }
            let l = lift_two_factor(&trace, &f)?;
            (f, l)
        }
    };
    fill_stats(&mut cert, &reduced, &lifted);
    Ok((lifted, cert))
}

/// A factor with the fewest 5-circuits over all perfect matchings, or
/// `None` past the cap.
fn fewest_five_circuits(g: &CubicGraph, cap: usize) -> Option<TwoFactor> {
    let all = enumerate_perfect_matchings(g, cap).ok()?;
    all.iter().map(|m| complement_two_factor(g, m)).min_by_key(|f| f.stats().count5)
}

/// A 2-factor with few odd circuits; the bound `6n/35` is certified on the
/// reduced graph.
pub fn solve_oddness(g: &CubicGraph, opts: &SolveOptions) -> Result<(TwoFactor, Certificate), SolveError> {
    check_input(g)?;
    let theorem = Theorem::T1Oddness;
    if is_petersen(g) {
        let m = enumerate_perfect_matchings(g, 16)?.remove(0);
        let f = complement_two_factor(g, &m);
        let mut cert = empty_certificate(theorem, g, opts, Path::Petersen);
        cert.bound_value = bound_oddness(g.n());
        cert.exceptional = true;
        fill_stats(&mut cert, &f, &f);
        return Ok((f, cert));
    }
    if let Some(f) = colorable_factor(g) {
        let mut cert = empty_certificate(theorem, g, opts, Path::Colorable);
        cert.bound_value = bound_oddness(g.n());
        fill_stats(&mut cert, &f, &f);
        return Ok((f, cert));
    }
    let trace = full_reduce(g)?;
    let mut cert = empty_certificate(theorem, g, opts, Path::Generic);
    cert.reduced_n = trace.reduced.n();
    cert.reduction_steps = trace.steps.len();
    cert.bound_n = trace.reduced.n();
    let (reduced, lifted) = match trace.terminal {
        Terminal::Petersen => {
            // the reduced graph is excluded, so the bound is stated for the
            // input, which has at least 12 vertices
            cert.terminal = Path::ReducedPetersen;
            cert.bound_n = g.n();
            best_petersen_lift(&trace, |f| (f.stats().odd, f.stats().count5))?
        }
        Terminal::Colorable => {
            cert.terminal = Path::ReducedColorable;
            let f = colorable_factor(&trace.reduced).expect("terminal is colourable");
            let l = lift_two_factor(&trace, &f)?;
            (f, l)
        }
        Terminal::Generic => {
            let r = &trace.reduced;
            let raw = RawOccurrences::find(r, CensusMode::Oddness);
            let cls = classify_occurrences(r, &raw, CensusMode::Oddness).unwrap_or_else(|_| {
                cert.overlap = true;
                classify_unchecked(r, &raw, CensusMode::Oddness)
            });
            cert.overlap |= cls.exception22;
            let circuits = enumerate_circuits_up_to(r, 9);
            let cls = equip(r, &cls, &circuits, false).expect("non-strict equip does not fail");
            cert.unclassified_p3 = cls.p3.iter().any(|s| s.class_tag == crate::patterns::ClassTag::Unclassified);
            let five: Vec<Circuit> = circuits.iter().filter(|c| c.len() == 5).cloned().collect();
            let members: Vec<PatternOccurrence> = cls.members().cloned().collect();
            let c5 = free_five_circuits_oddness(&five, &members);
            let w = build_weights_oddness(r, &cls, &c5);
            let (m, best_effort) = p2_tiebreak(r, &w, &cls.p2, opts.p2_cap)?;
            cert.best_effort = best_effort;
            cert.pattern_census = PatternCensus {
                c5: c5.len(),
                p1: cls.p1.len(),
                p2: cls.p2.len(),
                p3a: Some(cls.p3a()),
                p3b: Some(cls.p3b()),
                p3: cls.p3.len(),
            };
            cert.matching_weight = m.weight(&w);
            cert.fractional_bound = fractional_objective_value(r, &w);
            let f = complement_two_factor(r, &m);
            let l = lift_two_factor(&trace, &f)?;
            (f, l)
        }
    };
    cert.bound_value = bound_oddness(cert.bound_n);
    fill_stats(&mut cert, &reduced, &lifted);
    Ok((lifted, cert))
}

/// Re-checks a certificate against the graph and factor. Returns the list of
/// failed checks; empty means the certificate holds.
pub fn verify_certificate(g: &CubicGraph, f: &TwoFactor, c: &Certificate) -> Vec<String> {
    let mut bad = Vec::new();
    if !f.is_valid_in(g) {
        bad.push("factor is not a 2-factor of the graph".into());
        return bad;
    }
    let st = f.stats();
    if c.schema != CERTIFICATE_SCHEMA {
        bad.push(format!("schema {} != {}", c.schema, CERTIFICATE_SCHEMA));
    }
    if c.n != g.n() {
        bad.push(format!("n {} != {}", c.n, g.n()));
    }
    let identity = Ratio::new(7 * st.odd as i64 - g.n() as i64, 2);
    if st.invariant_i != identity {
        bad.push(format!("I(M) {} != 7k/2 - n/2 = {}", st.invariant_i, identity));
    }
    let claimed = match c.theorem {
        Theorem::T1Oddness => st.odd,
        _ => st.count5,
    };
    if claimed != c.achieved {
        bad.push(format!("achieved {} but the factor has {}", c.achieved, claimed));
    }
    if !st.odd.is_multiple_of(2) {
        bad.push(format!("odd circuit count {} is odd", st.odd));
    }
    let expected_bound = match c.theorem {
        Theorem::T2FiveCirc => bound_5cyc(c.bound_n),
        Theorem::T4Nontrivial => bound_t4(c.bound_n),
        Theorem::T1Oddness => bound_oddness(c.bound_n),
    };
    if c.bound_value != expected_bound {
        bad.push(format!("bound {} != {}", c.bound_value, expected_bound));
    }
    if c.theorem != Theorem::T1Oddness && c.bound_n != g.n() {
        bad.push("five-circuit bound must refer to the input".into());
    }
    if c.theorem == Theorem::T4Nontrivial && !t4_applies(g) {
        bad.push("n/10 bound claimed outside its preconditions".into());
    }
    if c.exceptional != is_petersen(g) {
        bad.push("exceptional flag disagrees with the graph".into());
    }
    if !c.exceptional {
        let achieved = match c.theorem {
            Theorem::T1Oddness => c.reduced_odd,
            _ => c.achieved,
        };
        if achieved as i64 > floor_ratio(c.bound_value) {
            bad.push(format!("achieved {} exceeds floor({})", achieved, c.bound_value));
        }
        if c.theorem != Theorem::T1Oddness && st.count3 != 0 {
            bad.push(format!("factor has {} triangles", st.count3));
        }
    }
    if c.reduced_odd != st.odd {
        bad.push(format!("odd count {} changed to {} by lifting", c.reduced_odd, st.odd));
    }
    if st.count5 > c.reduced_count5 {
        bad.push("lifting created 5-circuits".into());
    }
    if Ratio::from_integer(c.matching_weight) > c.fractional_bound {
        bad.push(format!("matching weight {} exceeds fractional bound {}", c.matching_weight, c.fractional_bound));
    }
    if let Some(acc) = c.accounting_bound {
        if Ratio::from_integer(c.reduced_count5 as i64) > acc {
            bad.push(format!("5-circuits {} exceed accounting bound {}", c.reduced_count5, acc));
        }
    }
    if c.terminal == Path::Generic {
        let lhs = Ratio::from_integer(c.reduced_n as i64);
        let rhs = census_vertex_bound(&c.pattern_census, c.theorem);
        if lhs < rhs {
            bad.push(format!("vertex count {} below census bound {}", lhs, rhs));
        }
    }
    bad
}

/// Vertices accounted for by the census: `5/3 |C5| + 10 |P1| + 10 |P2| +
/// 9 |P3a| + 10 |P3b|` (oddness) or `5/3 |C5| + 10 |P1| + 9 |P3|`.
///
/// A copy of `P3` that has no admissible pair but fits neither `P3b`
/// configuration brings no extra outside vertices, so it is charged 9. The
/// 3-join of two Petersen graphs has two such copies on 18 vertices.
pub fn census_vertex_bound(c: &PatternCensus, theorem: Theorem) -> Ratio<i64> {
    let base = Ratio::new(5 * c.c5 as i64, 3) + Ratio::from_integer(10 * c.p1 as i64 + 10 * c.p2 as i64);
    match (theorem, c.p3a, c.p3b) {
        (Theorem::T1Oddness, Some(a), Some(b)) => {
            let rest = c.p3 - a - b;
            base + Ratio::from_integer(9 * a as i64 + 10 * b as i64 + 9 * rest as i64)
        }
        _ => base + Ratio::from_integer(9 * c.p3 as i64),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::petersen;

    fn k33() -> CubicGraph {
        CubicGraph::new(6, [(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]).unwrap()
    }

    #[test]
    fn petersen_is_exceptional() {
        let (f, c) = solve_5cyc(&petersen(), &SolveOptions::default()).unwrap();
        assert!(c.exceptional);
        assert_eq!(c.achieved, 2);
        assert_eq!(f.stats().count5, 2);
        assert!(verify_certificate(&petersen(), &f, &c).is_empty());
        let (f, c) = solve_oddness(&petersen(), &SolveOptions::default()).unwrap();
        assert_eq!(f.stats().odd, 2);
        assert!(c.exceptional);
    }

    #[test]
    fn colourable_takes_the_even_factor() {
        let (f, c) = solve_5cyc(&k33(), &SolveOptions::default()).unwrap();
        assert_eq!(c.terminal, Path::Colorable);
        assert_eq!(c.achieved, 0);
        assert_eq!(floor_ratio(c.bound_value), 0);
        assert!(verify_certificate(&k33(), &f, &c).is_empty());
        let (f, c) = solve_oddness(&k33(), &SolveOptions::default()).unwrap();
        assert_eq!(f.stats().odd, 0);
        assert!(verify_certificate(&k33(), &f, &c).is_empty());
    }

    #[test]
    fn isolated_five_circuit_weights() {
        // with no family members only the circuit's boundary is weighted
        let g = petersen();
        let c = enumerate_circuits_up_to(&g, 5).into_iter().find(|c| c.len() == 5).unwrap();
        let w = build_weights_5cyc(&g, &[], std::slice::from_ref(&c));
        let ones: Vec<EdgeId> = g.edge_ids().filter(|&e| w.get(e) == 1).collect();
        assert_eq!(ones, circuit_boundary(&g, &c));
        assert_eq!(ones.len(), 5);
        assert_eq!(w.total(), 5);
    }

    #[test]
    fn tampered_certificate_is_flagged() {
        let (f, mut c) = solve_5cyc(&k33(), &SolveOptions::default()).unwrap();
        c.achieved = 3;
        assert!(!verify_certificate(&k33(), &f, &c).is_empty());
    }

    #[test]
    fn bridges_are_rejected() {
        // two copies of K4 with a subdivided edge, joined at the subdivision
        // vertices
        let mut e = Vec::new();
        for off in [0, 5] {
            e.extend([(off, off + 2), (off, off + 3), (off + 1, off + 2), (off + 1, off + 3), (off + 2, off + 3)]);
            e.extend([(off, off + 4), (off + 1, off + 4)]);
        }
        e.push((4, 9));
        let g = CubicGraph::new(10, e).unwrap();
        assert!(matches!(solve_5cyc(&g, &SolveOptions::default()), Err(SolveError::HasBridge(_))));
    }
}
