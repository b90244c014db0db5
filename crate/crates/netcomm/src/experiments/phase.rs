//! Phase-diagram classification in the (beta, gamma) plane, where the
//! small community has size N = n^(1-beta) and the node-wise
//! signal-to-noise ratio is (a-c)/sqrt(c) = n^(-gamma).
//!
//! The plane splits into four regions:
//! - beta + 2 gamma > 1: detection is statistically impossible;
//! - gamma > 0 and beta + gamma > 1/2 (minus the region above):
//!   statistically possible but computationally infeasible;
//! - beta + gamma < 1/2: the SgnQ test has full power;
//! - the rest (moderate node-wise signal): open, with the economic
//!   scan test as the conjectured frontier.

use serde::Serialize;

/// Tolerance for calling a defining inequality an equality.
pub const BOUNDARY_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PhasePoint {
    pub beta: f64,
    pub gamma: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RegionLabel {
    Impossible,
    CompInfeasible,
    SgnqPowerful,
    OpenModerate,
    Boundary,
}

impl RegionLabel {
    pub fn as_str(&self) -> &'static str {
        match self {
            RegionLabel::Impossible => "impossible",
            RegionLabel::CompInfeasible => "comp_infeasible",
            RegionLabel::SgnqPowerful => "sgnq_powerful",
            RegionLabel::OpenModerate => "open_moderate",
            RegionLabel::Boundary => "boundary",
        }
    }
}

/// Classifies a point; `Boundary` is returned exactly when a defining
/// inequality holds with equality (within [`BOUNDARY_TOL`]) and
/// crossing it would change the label.
pub fn classify(p: PhasePoint) -> RegionLabel {
    let PhasePoint { beta, gamma } = p;
    let imp = beta + 2.0 * gamma - 1.0;
    if imp.abs() <= BOUNDARY_TOL {
        return RegionLabel::Boundary;
    }
    if imp > 0.0 {
        return RegionLabel::Impossible;
    }
    let half = beta + gamma - 0.5;
    if gamma > BOUNDARY_TOL && half.abs() <= BOUNDARY_TOL {
        // Fence between CompInfeasible and SgnqPowerful.
        return RegionLabel::Boundary;
    }
    if gamma.abs() <= BOUNDARY_TOL && half > 0.0 {
        // Fence between CompInfeasible and OpenModerate.
        return RegionLabel::Boundary;
    }
    if gamma > 0.0 && half > 0.0 {
        return RegionLabel::CompInfeasible;
    }
    if half.abs() <= BOUNDARY_TOL {
        return RegionLabel::Boundary;
    }
    if half < 0.0 {
        return RegionLabel::SgnqPowerful;
    }
    RegionLabel::OpenModerate
}

/// Uniform grid classification over an open rectangle; rows are in
/// row-major (beta outer, gamma inner) order.
pub fn classify_grid(
    beta_range: (f64, f64),
    gamma_range: (f64, f64),
    steps: usize,
) -> Vec<(PhasePoint, RegionLabel)> {
    assert!(steps >= 2);
    let mut out = Vec::with_capacity(steps * steps);
    for i in 0..steps {
        let beta = beta_range.0 + (beta_range.1 - beta_range.0) * i as f64 / (steps - 1) as f64;
        for j in 0..steps {
            let gamma =
                gamma_range.0 + (gamma_range.1 - gamma_range.0) * j as f64 / (steps - 1) as f64;
            let p = PhasePoint { beta, gamma };
            out.push((p, classify(p)));
        }
    }
    out
}
