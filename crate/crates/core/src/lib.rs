//! Two-factors of bridgeless cubic graphs with few 5-circuits and few odd
//! circuits.
//!
//! The pipeline reduces a cubic graph to a girth-5 core whose small edge-cuts
//! all separate uncolourable sides, detects the Petersen-like subgraphs
//! `P1`, `P2`, `P3` in the core, minimises a linear objective over the perfect
//! matching polytope with an exact weighted blossom algorithm, and lifts the
//! complementary 2-factor back to the input graph. Every run issues a
//! [`solver::Certificate`] that can be re-checked with
//! [`solver::verify_certificate`].
//!
//! ```
//! use fivecycle::families::gen_chain_family;
//! use fivecycle::solver::{solve_5cyc, SolveOptions};
//!
//! let g = gen_chain_family(1);
//! let (factor, cert) = solve_5cyc(&g, &SolveOptions::default()).unwrap();
//! assert_eq!(factor.stats().count5, 4);
//! assert_eq!(cert.achieved, 4);
//! ```

pub mod coloring;
pub mod connectivity;
pub mod factor;
pub mod graph;
pub mod io;
pub mod matching;
pub mod patterns;
pub mod reductions;
pub mod solver;

pub mod batch;
pub mod families;
pub mod oracle;

mod blossom;

pub use factor::TwoFactor;
pub use graph::{Circuit, CubicGraph, EdgeId, GraphError};
pub use matching::{PerfectMatching, WeightVector};
