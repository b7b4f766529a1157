//! Runs the pipelines over many graphs in parallel and collects one row per
//! graph, in input order.

use std::time::Instant;

use num_rational::Ratio;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::is_colorable;
use crate::connectivity::{bonds_of_size, cyclic_edge_connectivity, is_bridgeless};
use crate::families::{generate, FamilyError};
use crate::graph::{girth, CubicGraph};
use crate::io::{parse_graphs, GraphRecord};
use crate::oracle::{oracle_exact, OracleResult};
use crate::reductions::{reduce_cut_step, ReductionError};
use crate::solver::{floor_ratio, solve_5cyc, solve_oddness, verify_certificate, PatternCensus, SolveOptions};

pub const REPORT_SCHEMA: u32 = 1;

#[derive(Debug, Error)]
pub enum BatchError {
    #[error("cannot read input: {0}")]
    Io(#[from] std::io::Error),
    #[error("bad generator expression {0:?}")]
    BadGenerator(String),
    #[error(transparent)]
    Family(#[from] FamilyError),
}

#[derive(Clone, Debug)]
pub struct BatchConfig {
    pub five: bool,
    pub odd: bool,
    pub oracle: bool,
    pub oracle_cap: usize,
    /// Record wall-clock times (makes reports non-reproducible).
    pub timings: bool,
}

impl Default for BatchConfig {
    fn default() -> Self {
        BatchConfig { five: true, odd: true, oracle: false, oracle_cap: crate::oracle::DEFAULT_CAP, timings: false }
    }
}

/// One input graph.
#[derive(Clone, Debug)]
pub struct BatchInput {
    pub graph_id: String,
    pub graph: Result<CubicGraph, String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BatchRow {
    pub graph_id: String,
    pub n: usize,
    /// Reason the row was skipped (not cubic, bridged, disconnected).
    pub skipped: Option<String>,
    pub colorable: Option<bool>,
    pub cyclic_connectivity: Option<usize>,
    pub census: Option<PatternCensus>,
    pub achieved5: Option<usize>,
    pub bound5: Option<i64>,
    pub k_odd: Option<usize>,
    pub k_reduced: Option<usize>,
    pub bound_odd: Option<i64>,
    pub exceptional: bool,
    pub oracle: Option<OracleResult>,
    pub oracle_error: Option<String>,
    /// 3-edge-connected, girth 5, and no 3-edge-cut with a colourable side.
    pub n9_conditions: Option<bool>,
    pub n9_holds: Option<bool>,
    pub violations: Vec<String>,
    pub millis: Option<u128>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BatchSummary {
    pub rows: usize,
    pub skipped: usize,
    pub colorable: usize,
    pub with_violations: usize,
    pub max_achieved5_ratio: Option<Ratio<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BatchReport {
    pub schema: u32,
    pub rows: Vec<BatchRow>,
    pub summary: BatchSummary,
}

impl BatchReport {
    pub fn has_violations(&self) -> bool {
        self.summary.with_violations > 0
    }
}

pub fn inputs_from_records(records: Vec<GraphRecord>) -> Vec<BatchInput> {
    records
        .into_iter()
        .map(|r| BatchInput { graph_id: format!("line{}", r.line), graph: r.result.map_err(|e| e.to_string()) })
        .collect()
}

pub fn inputs_from_file(path: &std::path::Path) -> Result<Vec<BatchInput>, BatchError> {
    let text = std::fs::read_to_string(path)?;
    Ok(inputs_from_records(parse_graphs(&text)))
}

/// Parses `family:a..b`, `family:a` or `family`, e.g. `chain:1..3`.
/// `p3ring` and `flower` ranges step by 2.
pub fn inputs_from_generator(expr: &str) -> Result<Vec<BatchInput>, BatchError> {
    let bad = || BatchError::BadGenerator(expr.to_string());
    let (family, range) = match expr.split_once(':') {
        Some((f, r)) => (f, Some(r)),
        None => (expr, None),
    };
    let params: Vec<Option<usize>> = match range {
        None => vec![None],
        Some(r) => {
            let (lo, hi) = match r.split_once("..") {
                Some((a, b)) => (a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?),
                None => {
                    let x: usize = r.parse().map_err(|_| bad())?;
                    (x, x)
                }
            };
            let step = if family == "p3ring" || family == "flower" { 2 } else { 1 };
            (lo..=hi).step_by(step).map(Some).collect()
        }
    };
    params
        .into_iter()
        .map(|p| {
            let g = generate(family, p)?;
            let id = match p {
                Some(p) => format!("{family}:{p}"),
                None => family.to_string(),
            };
            Ok(BatchInput { graph_id: id, graph: Ok(g) })
        })
        .collect()
}

fn n9_conditions(g: &CubicGraph) -> bool {
    if girth(g) != 5 || !bonds_of_size(g, 2).is_empty() {
        return false;
    }
    // every non-trivial 3-cut must have two uncolourable sides
    matches!(reduce_cut_step(g, 3), Err(ReductionError::NoColorableCut))
}

fn run_row(input: &BatchInput, cfg: &BatchConfig) -> BatchRow {
    let start = Instant::now();
    let mut row = BatchRow { graph_id: input.graph_id.clone(), ..Default::default() };
    let g = match &input.graph {
        Ok(g) => g,
        Err(e) => {
            row.skipped = Some(e.clone());
            return row;
        }
    };
    row.n = g.n();
    if !g.is_connected() {
        row.skipped = Some("disconnected".into());
        return row;
    }
    if !is_bridgeless(g) {
        row.skipped = Some("has a bridge".into());
        return row;
    }
    row.colorable = Some(is_colorable(g));
    row.cyclic_connectivity = cyclic_edge_connectivity(g).ok();
    let opts = SolveOptions { graph_id: input.graph_id.clone(), ..Default::default() };
    if cfg.five {
        match solve_5cyc(g, &opts) {
            Ok((f, c)) => {
                for v in verify_certificate(g, &f, &c) {
                    row.violations.push(format!("five: {v}"));
                }
                row.achieved5 = Some(c.achieved);
                row.bound5 = Some(floor_ratio(crate::solver::bound_5cyc(g.n())));
                row.exceptional = c.exceptional;
                row.census = Some(c.pattern_census.clone());
                let cond = n9_conditions(g);
                row.n9_conditions = Some(cond);
                if cond {
                    row.n9_holds = Some(9 * c.achieved <= g.n());
                }
            }
            Err(e) => row.violations.push(format!("five: {e}")),
        }
    }
    if cfg.odd {
        match solve_oddness(g, &opts) {
            Ok((f, c)) => {
                for v in verify_certificate(g, &f, &c) {
                    row.violations.push(format!("odd: {v}"));
                }
                row.k_odd = Some(c.achieved);
                row.k_reduced = Some(c.reduced_odd);
                row.bound_odd = Some(floor_ratio(c.bound_value));
                row.exceptional = c.exceptional;
                if row.census.is_none() {
                    row.census = Some(c.pattern_census.clone());
                }
            }
            Err(e) => row.violations.push(format!("odd: {e}")),
        }
    }
    if cfg.oracle {
        match oracle_exact(g, cfg.oracle_cap) {
            Ok(o) => {
                if let Some(a) = row.achieved5 {
                    if o.omega5 > a {
                        row.violations.push(format!("oracle: omega5 {} above achieved {}", o.omega5, a));
                    }
                    if let (Some(b), false) = (row.bound5, row.exceptional) {
                        if o.omega5_triangle_free.is_none_or(|x| x as i64 > b) {
                            row.violations.push("oracle: no triangle-free factor within the bound".into());
                        }
                    }
                }
                if let Some(k) = row.k_odd {
                    if o.omega > k {
                        row.violations.push(format!("oracle: omega {} above achieved {}", o.omega, k));
                    }
                }
                row.oracle = Some(o);
            }
            Err(e) => row.oracle_error = Some(e.to_string()),
        }
    }
    if cfg.timings {
        row.millis = Some(start.elapsed().as_millis());
    }
    row
}

/// Processes every input; rows come back in input order.
pub fn batch_run(inputs: &[BatchInput], cfg: &BatchConfig) -> BatchReport {
    let rows: Vec<BatchRow> = inputs.par_iter().map(|i| run_row(i, cfg)).collect();
    let mut summary = BatchSummary { rows: rows.len(), ..Default::default() };
    for r in &rows {
        summary.skipped += r.skipped.is_some() as usize;
        summary.colorable += (r.colorable == Some(true)) as usize;
        summary.with_violations += !r.violations.is_empty() as usize;
        if let (Some(a), false) = (r.achieved5, r.exceptional) {
            if a > 0 {
                let ratio = Ratio::new(a as i64, r.n as i64);
                summary.max_achieved5_ratio = Some(summary.max_achieved5_ratio.map_or(ratio, |m| m.max(ratio)));
            }
        }
    }
    BatchReport { schema: REPORT_SCHEMA, rows, summary }
}
