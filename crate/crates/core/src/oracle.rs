//! Exact 5-cyclicity and oddness by enumerating every perfect matching.

use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::factor::TwoFactor;
use crate::graph::{CubicGraph, EdgeId};
use crate::matching::for_each_perfect_matching;

pub const DEFAULT_CAP: usize = 5_000_000;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("more than {cap} perfect matchings")]
    CapExceeded { cap: usize },
    #[error("graph has no perfect matching")]
    NoPerfectMatching,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleResult {
    /// Fewest 5-circuits over all 2-factors.
    pub omega5: usize,
    /// Fewest odd circuits over all 2-factors.
    pub omega: usize,
    /// Fewest 5-circuits over triangle-free 2-factors, if any exists.
    pub omega5_triangle_free: Option<usize>,
    pub matchings: usize,
}

pub fn oracle_exact(g: &CubicGraph, cap: usize) -> Result<OracleResult, OracleError> {
    let mut best: Option<OracleResult> = None;
    let mut count = 0usize;
    let mut mask = vec![true; g.edge_count()];
    for_each_perfect_matching(g, |m: &[EdgeId]| {
        count += 1;
        if count > cap {
            return ControlFlow::Break(());
        }
        mask.fill(true);
        for e in m {
            mask[e.0] = false;
        }
        let f = TwoFactor::from_edge_mask(g, &mask).expect("complement of a perfect matching");
        let s = f.stats();
        let tf = (s.count3 == 0).then_some(s.count5);
        let b = best.get_or_insert(OracleResult { omega5: s.count5, omega: s.odd, omega5_triangle_free: tf, matchings: 0 });
        b.omega5 = b.omega5.min(s.count5);
        b.omega = b.omega.min(s.odd);
        b.omega5_triangle_free = match (b.omega5_triangle_free, tf) {
            (Some(a), Some(c)) => Some(a.min(c)),
            (a, c) => a.or(c),
        };
        ControlFlow::Continue(())
    });
    if count > cap {
        return Err(OracleError::CapExceeded { cap });
    }
    let mut r = best.ok_or(OracleError::NoPerfectMatching)?;
    r.matchings = count;
    Ok(r)
}
