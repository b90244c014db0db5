//! Degree-based chi-square test.
//!
//! With y_i the node degrees and alpha-hat = 1'A1 / (n(n-1)), the
//! statistic is
//!
//! ```text
//! X = sum_i (y_i - n alpha-hat)^2 / ((n-1) alpha-hat (1 - alpha-hat))
//! ```
//!
//! standardized as (X - n)/sqrt(2n). Against degree-matched alternatives
//! this test is powerless, which is the reason it is included here as a
//! baseline.

use std::collections::BTreeMap;

use crate::graph::Graph;
use crate::stats::{StatsError, TestOutcome, normal};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Sidedness {
    /// Reject when (X-n)/sqrt(2n) > z_kappa.
    #[default]
    OneSided,
    /// Reject when |(X-n)/sqrt(2n)| > z_{kappa/2}.
    TwoSided,
}

pub fn chi2_test(g: &Graph, level: f64, sidedness: Sidedness) -> Result<TestOutcome, StatsError> {
    let n = g.node_count();
    if n < 2 {
        return Err(StatsError::DegenerateInput(format!(
            "chi-square needs at least 2 nodes, graph has {n}"
        )));
    }
    let nf = n as f64;
    let total = 2.0 * g.edge_count() as f64;
    let alpha_hat = total / (nf * (nf - 1.0));
    if alpha_hat <= 0.0 || alpha_hat >= 1.0 {
        return Err(StatsError::DegenerateInput(format!(
            "alpha-hat = {alpha_hat}: degree variance proxy vanishes"
        )));
    }
    let denom = (nf - 1.0) * alpha_hat * (1.0 - alpha_hat);
    let statistic: f64 = g
        .degrees()
        .iter()
        .map(|&y| {
            let d = y as f64 - nf * alpha_hat;
            d * d / denom
        })
        .sum();
    let standardized = (statistic - nf) / (2.0 * nf).sqrt();
    let (p_value, reject) = match sidedness {
        Sidedness::OneSided => {
            let p = normal::upper_tail(standardized);
            (p, standardized > normal::upper_critical(level)?)
        }
        Sidedness::TwoSided => {
            let p = 2.0 * normal::upper_tail(standardized.abs());
            (
                p.min(1.0),
                standardized.abs() > normal::upper_critical(level / 2.0)?,
            )
        }
    };
    let mut diagnostics = BTreeMap::new();
    diagnostics.insert("alpha_hat".to_string(), alpha_hat);
    Ok(TestOutcome {
        test: "chi2".to_string(),
        statistic,
        standardized: Some(standardized),
        p_value: Some(p_value),
        reject,
        level,
        diagnostics,
    })
}
