//! Global hypothesis testing on networks: one community versus a small
//! planted community.
//!
//! The crate provides four tests for the global null "the network has a
//! single community" against alternatives with a small dense subset of
//! nodes:
//!
//! - **SgnQ** — the signed-quadrilateral statistic, a degree-robust
//!   polynomial-time test with a parameter-free N(0,1) null limit;
//! - **chi2** — the classical degree-based chi-square test, included
//!   mainly to demonstrate that degree matching makes it powerless;
//! - **signed scan** — the exponential-time scan over vertex subsets,
//!   statistically near-optimal, with an exhaustive evaluator, an
//!   oracle evaluator at a known subset, and a Bennett-type threshold;
//! - **EST** — the economic scan test over subsets of a bounded size.
//!
//! Model-side support covers degree-corrected block models (DCBM),
//! Sinkhorn calibration to the canonical parameterization, the exactly
//! degree-matched two-block alternative, Bernoulli sampling with seeded
//! replicate streams, and closed-form spectral diagnostics. The
//! [`experiments`] module adds Monte-Carlo power estimation, empirical
//! threshold calibration, and the phase-diagram classifier.
//!
//! Runnable entry points live in `examples/` (one per capability) and in
//! the `netcomm` binary, a thin CLI over [`cli`].

pub mod cli;
pub mod experiments;
pub mod graph;
pub mod model;
pub mod rng;
pub mod stats;

pub use graph::Graph;
pub use model::{DcbmParams, TwoBlockSpec};
pub use stats::TestOutcome;
