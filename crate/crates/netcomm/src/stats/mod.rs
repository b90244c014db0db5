//! Test statistics: SgnQ, degree chi-square, signed scan, EST.

pub mod chi2;
pub mod est;
pub mod normal;
pub mod scan;
pub mod sgnq;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error)]
pub enum StatsError {
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("subset enumeration needs {required} evaluations, budget is {budget}")]
    BudgetExceeded { required: u128, budget: u128 },
    #[error("no coprime (v, e) with v <= {v_cap} fits in ({lo}, {hi})")]
    NoFeasiblePair { lo: f64, hi: f64, v_cap: usize },
    #[error("parameter out of range: {0}")]
    BadParameter(String),
    #[error(transparent)]
    Normal(#[from] normal::NormalError),
}

/// Result of one test run, in the shape the CLI serializes.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TestOutcome {
    pub test: String,
    pub statistic: f64,
    pub standardized: Option<f64>,
    pub p_value: Option<f64>,
    pub reject: bool,
    pub level: f64,
    /// Auxiliary scalars (e.g. eta_norm_sq, gamma_hat, tau_hat); BTreeMap
    /// keeps serialization order deterministic.
    pub diagnostics: BTreeMap<String, f64>,
}

/// Empirical degree profile: eta = (1'A1)^(-1/2) A1.
///
/// Subtracting its outer product from A removes the rank-one "degree"
/// component, which is what makes the signed statistics robust to
/// degree heterogeneity.
#[derive(Debug, Clone)]
pub struct DegreeProfile {
    /// eta itself, length n.
    pub values: Vec<f64>,
    /// ||eta||^2.
    pub norm_sq: f64,
    /// 1'A1 = twice the edge count.
    pub total: f64,
}

/// Computes the degree profile; errors on an empty graph (the
/// normalization divides by the total edge weight).
pub fn degree_profile(g: &Graph) -> Result<DegreeProfile, StatsError> {
    let m = g.edge_count();
    if m == 0 {
        return Err(StatsError::DegenerateInput(
            "degree profile undefined on a graph with no edges".into(),
        ));
    }
    let total = 2.0 * m as f64;
    let scale = total.sqrt().recip();
    let values: Vec<f64> = (0..g.node_count())
        .map(|i| g.degree(i) as f64 * scale)
        .collect();
    let norm_sq = values.iter().map(|v| v * v).sum();
    Ok(DegreeProfile {
        values,
        norm_sq,
        total,
    })
}
