//! Degree-corrected block models: parameterization, the degree-matched
//! two-block alternative, and Bernoulli sampling.
//!
//! A DCBM is (theta, memberships, P): node i and node j are connected
//! independently with probability theta_i theta_j P(k, l) where k, l
//! are their community labels. Community-constant theta gives an SBM;
//! K = 1 gives a rank-one null Omega = alpha theta theta'.

pub mod sinkhorn;
pub mod spectral;

use nalgebra::DMatrix;
use rand::RngExt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::rng::{Stream, replicate_rng};

/// Dense materialization guard for n x n matrices.
pub const DEFAULT_DENSE_CAP: usize = 5000;

#[derive(Debug, Error)]
pub enum ModelError {
    #[error("invalid parameter: {0}")]
    BadParameter(String),
    #[error("infeasible alternative: {detail} (a may not exceed c(n-N)/N under degree matching)")]
    InfeasibleAlternative { detail: String },
    #[error("probability out of range at ({i},{j}): {value}")]
    ProbabilityOutOfRange { i: usize, j: usize, value: f64 },
    #[error("sinkhorn scaling did not converge in {iterations} sweeps; last residual {residual}")]
    SinkhornDiverged { iterations: usize, residual: f64 },
    #[error("dense materialization of n={n} exceeds cap {cap}")]
    DenseCapExceeded { n: usize, cap: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// DCBM parameters. Immutable once validated.
#[derive(Debug, Clone)]
pub struct DcbmParams {
    theta: Vec<f64>,
    memberships: Vec<usize>,
    p: DMatrix<f64>,
    k: usize,
}

impl DcbmParams {
    pub fn new(
        theta: Vec<f64>,
        memberships: Vec<usize>,
        p: DMatrix<f64>,
    ) -> Result<Self, ModelError> {
        let n = theta.len();
        if n == 0 || memberships.len() != n {
            return Err(ModelError::BadParameter(format!(
                "theta has length {n}, memberships has length {}",
                memberships.len()
            )));
        }
        if !p.is_square() || p.nrows() == 0 {
            return Err(ModelError::BadParameter("P must be square".into()));
        }
        let k = p.nrows();
        if theta.iter().any(|&t| !t.is_finite() || t <= 0.0) {
            return Err(ModelError::BadParameter(
                "theta entries must be positive and finite".into(),
            ));
        }
        if memberships.iter().any(|&l| l >= k) {
            return Err(ModelError::BadParameter(format!(
                "membership label out of range 0..{k}"
            )));
        }
        for r in 0..k {
            if !p[(r, r)].is_finite() || p[(r, r)] <= 0.0 {
                return Err(ModelError::BadParameter(format!(
                    "P({r},{r}) must be positive"
                )));
            }
            for c in 0..k {
                if p[(r, c)] < 0.0 {
                    return Err(ModelError::BadParameter(format!(
                        "P({r},{c}) must be nonnegative"
                    )));
                }
                if (p[(r, c)] - p[(c, r)]).abs() > 1e-12 * (1.0 + p[(r, c)].abs()) {
                    return Err(ModelError::BadParameter("P must be symmetric".into()));
                }
            }
        }
        Ok(DcbmParams {
            theta,
            memberships,
            p,
            k,
        })
    }

    /// Rank-one null with Omega = alpha * theta theta' (K = 1).
    pub fn null_model(theta: Vec<f64>, alpha: f64) -> Result<Self, ModelError> {
        let n = theta.len();
        Self::new(theta, vec![0; n], DMatrix::from_element(1, 1, alpha))
    }

    pub fn node_count(&self) -> usize {
        self.theta.len()
    }

    pub fn community_count(&self) -> usize {
        self.k
    }

    pub fn theta(&self) -> &[f64] {
        &self.theta
    }

    pub fn memberships(&self) -> &[usize] {
        &self.memberships
    }

    pub fn connectivity(&self) -> &DMatrix<f64> {
        &self.p
    }

    /// Community node fractions h.
    pub fn community_fractions(&self) -> Vec<f64> {
        let mut h = vec![0.0; self.k];
        for &l in &self.memberships {
            h[l] += 1.0;
        }
        let n = self.node_count() as f64;
        h.iter_mut().for_each(|x| *x /= n);
        h
    }

    /// The Bernoulli probability for the pair (i, j).
    #[inline]
    pub fn omega_entry(&self, i: usize, j: usize) -> f64 {
        self.theta[i] * self.theta[j] * self.p[(self.memberships[i], self.memberships[j])]
    }

    /// Dense Omega = Theta Pi P Pi' Theta, entries validated to the unit interval.
    pub fn omega(&self) -> Result<DMatrix<f64>, ModelError> {
        self.omega_capped(DEFAULT_DENSE_CAP)
    }

    pub fn omega_capped(&self, cap: usize) -> Result<DMatrix<f64>, ModelError> {
        let n = self.node_count();
        if n > cap {
            return Err(ModelError::DenseCapExceeded { n, cap });
        }
        let mut m = DMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let v = self.omega_entry(i, j);
                if !(0.0..=1.0).contains(&v) {
                    return Err(ModelError::ProbabilityOutOfRange { i, j, value: v });
                }
                m[(i, j)] = v;
            }
        }
        Ok(m)
    }

    /// Samples the upper triangle independently: A(i,j) ~ Bernoulli of
    /// the Omega entry. Errors if any entry leaves the unit interval.
    pub fn sample(&self, seed: u64) -> Result<Graph, ModelError> {
        self.sample_replicate(seed, 0)
    }

    /// Replicate `index` of a seeded run (independent stream).
    pub fn sample_replicate(&self, seed: u64, index: u64) -> Result<Graph, ModelError> {
        self.sample_impl(seed, index, false)
    }

    /// As [`Self::sample_replicate`], but probabilities above 1 are
    /// clamped instead of rejected. Heavy-tailed degree profiles (e.g.
    /// Pareto theta with Omega = theta theta') can push a few pair
    /// probabilities past 1; clamping keeps the null sampler usable.
    pub fn sample_replicate_clamped(&self, seed: u64, index: u64) -> Result<Graph, ModelError> {
        self.sample_impl(seed, index, true)
    }

    fn sample_impl(&self, seed: u64, index: u64, clamp: bool) -> Result<Graph, ModelError> {
        let n = self.node_count();
        let mut rng = replicate_rng(seed, Stream::Sample, index);
        let mut edges = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                let mut p = self.omega_entry(i, j);
                if !(0.0..=1.0).contains(&p) {
                    if clamp && p > 1.0 {
                        p = 1.0;
                    } else {
                        return Err(ModelError::ProbabilityOutOfRange { i, j, value: p });
                    }
                }
                if rng.random::<f64>() < p {
                    edges.push((i, j));
                }
            }
        }
        Ok(Graph::from_edges(n, &edges)?)
    }
}

/// Degree parameter profile for model construction.
#[derive(Debug, Clone, PartialEq, Default)]
pub enum ThetaProfile {
    /// theta = 1 (SBM).
    #[default]
    Ones,
    /// i.i.d. Pareto draws; the default (shape 4, scale 0.375) has mean
    /// one half.
    Pareto { shape: f64, scale: f64 },
    /// Explicit positive vector.
    Explicit(Vec<f64>),
}

pub const PARETO_SHAPE: f64 = 4.0;
pub const PARETO_SCALE: f64 = 0.375;

impl ThetaProfile {
    pub fn pareto_default() -> Self {
        ThetaProfile::Pareto {
            shape: PARETO_SHAPE,
            scale: PARETO_SCALE,
        }
    }

    /// Draws the length-n profile; `Ones` and `Explicit` ignore the seed.
    pub fn materialize(&self, n: usize, seed: u64) -> Result<Vec<f64>, ModelError> {
        match self {
            ThetaProfile::Ones => Ok(vec![1.0; n]),
            ThetaProfile::Pareto { shape, scale } => {
                if !(shape.is_finite() && *shape > 0.0 && scale.is_finite() && *scale > 0.0) {
                    return Err(ModelError::BadParameter(
                        "pareto shape and scale must be positive".into(),
                    ));
                }
                let mut rng = replicate_rng(seed, Stream::ThetaProfile, 0);
                Ok((0..n)
                    .map(|_| {
                        // Inverse CDF: scale * u^(-1/shape), u in (0,1).
                        let u: f64 = 1.0 - rng.random::<f64>();
                        scale * u.powf(-1.0 / shape)
                    })
                    .collect())
            }
            ThetaProfile::Explicit(v) => {
                if v.len() != n {
                    return Err(ModelError::BadParameter(format!(
                        "explicit theta has length {}, expected {n}",
                        v.len()
                    )));
                }
                if v.iter().any(|&t| !t.is_finite() || t <= 0.0) {
                    return Err(ModelError::BadParameter(
                        "explicit theta must be positive".into(),
                    ));
                }
                Ok(v.clone())
            }
        }
    }
}

/// Cross-block probability making the two-block model degree-matched:
/// b = (c(n-N) - aN)/(n-2N).
pub fn two_block_b(n: usize, n_small: usize, a: f64, c: f64) -> Result<f64, ModelError> {
    check_split(n, n_small)?;
    let (nf, nn) = (n as f64, n_small as f64);
    let b = (c * (nf - nn) - a * nn) / (nf - 2.0 * nn);
    if b < 0.0 {
        return Err(ModelError::InfeasibleAlternative {
            detail: format!("b = {b} < 0 for (n={n}, N={n_small}, a={a}, c={c})"),
        });
    }
    Ok(b)
}

/// Background and cross probabilities (c, b) so the two-block model is
/// degree-matched to an Erdos-Renyi null with edge probability alpha:
/// c = (a N^2 + alpha n^2 - 2 alpha n N)/(n-N)^2, then b as usual.
pub fn two_block_from_alpha(
    n: usize,
    n_small: usize,
    a: f64,
    alpha: f64,
) -> Result<(f64, f64), ModelError> {
    check_split(n, n_small)?;
    let (nf, nn) = (n as f64, n_small as f64);
    let c = (a * nn * nn + alpha * nf * nf - 2.0 * alpha * nf * nn) / ((nf - nn) * (nf - nn));
    if !(0.0..=1.0).contains(&c) {
        return Err(ModelError::InfeasibleAlternative {
            detail: format!("c = {c} outside [0,1]"),
        });
    }
    let b = (nf * c - (a + c) * nn) / (nf - 2.0 * nn);
    if b < 0.0 {
        return Err(ModelError::InfeasibleAlternative {
            detail: format!("b = {b} < 0"),
        });
    }
    Ok((c, b))
}

fn check_split(n: usize, n_small: usize) -> Result<(), ModelError> {
    if n_small < 1 || 2 * n_small >= n {
        return Err(ModelError::BadParameter(format!(
            "need 1 <= N < n/2, got N={n_small}, n={n}"
        )));
    }
    Ok(())
}

/// The calibrated two-community alternative: a small community of size
/// N with within-probability a, background c, and the degree-matching
/// cross probability b. Community 1 (labels: nodes 0..N) is the small
/// one.
#[derive(Debug, Clone)]
pub struct TwoBlockSpec {
    pub n: usize,
    pub n_small: usize,
    pub a: f64,
    pub c: f64,
    b: f64,
    pub theta_profile: ThetaProfile,
}

impl TwoBlockSpec {
    pub fn new(n: usize, n_small: usize, a: f64, c: f64) -> Result<Self, ModelError> {
        for (name, v) in [("a", a), ("c", c)] {
            if !(0.0..=1.0).contains(&v) {
                return Err(ModelError::BadParameter(format!(
                    "{name} = {v} not in [0,1]"
                )));
            }
        }
        let b = two_block_b(n, n_small, a, c)?;
        if b > 1.0 {
            return Err(ModelError::InfeasibleAlternative {
                detail: format!("b = {b} > 1"),
            });
        }
        Ok(TwoBlockSpec {
            n,
            n_small,
            a,
            c,
            b,
            theta_profile: ThetaProfile::Ones,
        })
    }

    /// Builds the two-block spec from the matched null density alpha instead of c.
    pub fn from_alpha(n: usize, n_small: usize, a: f64, alpha: f64) -> Result<Self, ModelError> {
        if !(0.0..=1.0).contains(&a) {
            return Err(ModelError::BadParameter(format!("a = {a} not in [0,1]")));
        }
        let (c, _) = two_block_from_alpha(n, n_small, a, alpha)?;
        Self::new(n, n_small, a, c)
    }

    pub fn with_theta(mut self, profile: ThetaProfile) -> Self {
        self.theta_profile = profile;
        self
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    /// Erdos-Renyi density with the same expected degrees:
    /// alpha = a N/n + b (1 - N/n).
    pub fn matched_null_alpha(&self) -> f64 {
        let eps = self.n_small as f64 / self.n as f64;
        self.a * eps + self.b * (1.0 - eps)
    }

    /// Largest within-probability with b >= 0 at this (n, N, c):
    /// a_max = c (n - N)/N.
    pub fn a_max(n: usize, n_small: usize, c: f64) -> f64 {
        c * (n - n_small) as f64 / n_small as f64
    }

    /// Connectivity matrix in label order (0 = background, 1 = small).
    pub fn connectivity(&self) -> DMatrix<f64> {
        DMatrix::from_row_slice(2, 2, &[self.c, self.b, self.b, self.a])
    }

    /// Materializes DCBM parameters. Nodes 0..N carry label 1.
    pub fn to_params(&self, seed: u64) -> Result<DcbmParams, ModelError> {
        let theta = self.theta_profile.materialize(self.n, seed)?;
        let memberships: Vec<usize> = (0..self.n).map(|i| usize::from(i < self.n_small)).collect();
        DcbmParams::new(theta, memberships, self.connectivity())
    }

    /// Variant with b replaced by a fixed cross probability (used for
    /// the unmatched comparison experiments).
    pub fn to_params_with_cross(&self, cross: f64, seed: u64) -> Result<DcbmParams, ModelError> {
        if !(0.0..=1.0).contains(&cross) {
            return Err(ModelError::BadParameter(format!(
                "cross probability {cross} not in [0,1]"
            )));
        }
        let theta = self.theta_profile.materialize(self.n, seed)?;
        let memberships: Vec<usize> = (0..self.n).map(|i| usize::from(i < self.n_small)).collect();
        let p = DMatrix::from_row_slice(2, 2, &[self.c, cross, cross, self.a]);
        DcbmParams::new(theta, memberships, p)
    }
}

/// Samples directly from an explicit probability matrix (only the upper
/// triangle is read). Unlike [`DcbmParams::sample`], this places no
/// structural demands on the matrix beyond entries in the unit interval.
pub fn sample_from_omega(omega: &DMatrix<f64>, seed: u64, index: u64) -> Result<Graph, ModelError> {
    if !omega.is_square() {
        return Err(ModelError::BadParameter("omega must be square".into()));
    }
    let n = omega.nrows();
    let mut rng = replicate_rng(seed, Stream::Sample, index);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let p = omega[(i, j)];
            if !(0.0..=1.0).contains(&p) {
                return Err(ModelError::ProbabilityOutOfRange { i, j, value: p });
            }
            if rng.random::<f64>() < p {
                edges.push((i, j));
            }
        }
    }
    Ok(Graph::from_edges(n, &edges)?)
}

/// Random community labels: label 1 with probability epsilon per node.
pub fn sample_random_membership(
    n: usize,
    epsilon: f64,
    seed: u64,
) -> Result<Vec<usize>, ModelError> {
    if !(0.0..=1.0).contains(&epsilon) {
        return Err(ModelError::BadParameter(format!(
            "epsilon = {epsilon} not in [0,1]"
        )));
    }
    let mut rng = replicate_rng(seed, Stream::Membership, 0);
    Ok((0..n)
        .map(|_| usize::from(rng.random::<f64>() < epsilon))
        .collect())
}

/// Erdos-Renyi sampler (the K = 1, theta = 1 null).
pub fn erdos_renyi(n: usize, alpha: f64, seed: u64, index: u64) -> Result<Graph, ModelError> {
    DcbmParams::null_model(vec![1.0; n], alpha)?.sample_replicate(seed, index)
}

/// JSON model-specification file: n, N, a, c, theta, seed.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ModelSpecFile {
    pub n: usize,
    #[serde(rename = "N")]
    pub n_small: usize,
    pub a: f64,
    pub c: f64,
    #[serde(default = "default_theta_field")]
    pub theta: ThetaField,
    #[serde(default)]
    pub seed: u64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ThetaField {
    Named(String),
    Inline(Vec<f64>),
}

fn default_theta_field() -> ThetaField {
    ThetaField::Named("ones".to_string())
}

impl ModelSpecFile {
    pub fn parse(text: &str) -> Result<Self, ModelError> {
        serde_json::from_str(text).map_err(|e| ModelError::BadParameter(format!("model spec: {e}")))
    }

    pub fn to_spec(&self) -> Result<TwoBlockSpec, ModelError> {
        let profile = match &self.theta {
            ThetaField::Named(s) => match s.as_str() {
                "ones" => ThetaProfile::Ones,
                "pareto" => ThetaProfile::pareto_default(),
                other => {
                    return Err(ModelError::BadParameter(format!(
                        "unknown theta profile {other:?} (expected \"ones\", \"pareto\", or an array)"
                    )));
                }
            },
            ThetaField::Inline(v) => ThetaProfile::Explicit(v.clone()),
        };
        Ok(TwoBlockSpec::new(self.n, self.n_small, self.a, self.c)?.with_theta(profile))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn b_formula_hand_case() {
        let b = two_block_b(100, 10, 0.5, 0.1).unwrap();
        assert!((b - 0.05).abs() < 1e-15);
    }

    #[test]
    fn b_equals_c_when_a_equals_c() {
        let b = two_block_b(60, 9, 0.25, 0.25).unwrap();
        assert!((b - 0.25).abs() < 1e-15);
    }

    #[test]
    fn b_boundary_zero() {
        let b = two_block_b(100, 10, 0.9, 0.1).unwrap();
        assert!(b.abs() < 1e-15);
    }

    #[test]
    fn b_negative_is_infeasible() {
        assert!(matches!(
            two_block_b(100, 10, 0.95, 0.1),
            Err(ModelError::InfeasibleAlternative { .. })
        ));
    }

    #[test]
    fn from_alpha_hand_case() {
        let (c, b) = two_block_from_alpha(30, 4, 0.5, 0.2).unwrap();
        assert!((c - 140.0 / 676.0).abs() < 1e-12, "c = {c}");
        assert!((b - 2.0 / 13.0).abs() < 1e-12, "b = {b}");
    }

    #[test]
    fn from_alpha_identity_when_a_is_alpha() {
        let (c, b) = two_block_from_alpha(50, 5, 0.2, 0.2).unwrap();
        assert!((c - 0.2).abs() < 1e-12);
        assert!((b - 0.2).abs() < 1e-12);
    }

    #[test]
    fn from_alpha_boundary_a_max() {
        // a_max = alpha n / N gives b = 0.
        let (_, b) = two_block_from_alpha(30, 4, 0.2 * 30.0 / 4.0, 0.2).unwrap();
        assert!(b.abs() < 1e-12, "b = {b}");
    }

    #[test]
    fn matched_alpha_hand_case() {
        let spec = TwoBlockSpec::new(100, 10, 0.5, 0.1).unwrap();
        assert!((spec.matched_null_alpha() - 0.095).abs() < 1e-15);
        // Row sum of the alternative equals alpha * n.
        let row = spec.a * 10.0 + spec.b() * 90.0;
        assert!((row - 9.5).abs() < 1e-12);
    }

    #[test]
    fn omega_block_structure() {
        let spec = TwoBlockSpec::new(100, 10, 0.5, 0.1).unwrap();
        let params = spec.to_params(0).unwrap();
        let omega = params.omega().unwrap();
        assert!((omega[(0, 1)] - 0.5).abs() < 1e-15); // within small
        assert!((omega[(0, 99)] - 0.05).abs() < 1e-15); // cross
        assert!((omega[(50, 99)] - 0.1).abs() < 1e-15); // background
    }

    #[test]
    fn constant_null_omega() {
        let params = DcbmParams::null_model(vec![1.0; 8], 0.2).unwrap();
        let omega = params.omega().unwrap();
        assert!(omega.iter().all(|&v| (v - 0.2).abs() < 1e-15));
    }

    #[test]
    fn omega_rejects_out_of_range_entries() {
        // theta_max^2 * P > 1.
        let params = DcbmParams::null_model(vec![2.0, 2.0, 1.0], 0.5).unwrap();
        assert!(matches!(
            params.omega(),
            Err(ModelError::ProbabilityOutOfRange { .. })
        ));
        assert!(params.sample(1).is_err());
    }

    #[test]
    fn sampling_extremes() {
        let zeros = DMatrix::zeros(20, 20);
        let g = sample_from_omega(&zeros, 3, 0).unwrap();
        assert_eq!(g.edge_count(), 0);
        let ones = DMatrix::from_element(12, 12, 1.0);
        let g = sample_from_omega(&ones, 3, 0).unwrap();
        assert_eq!(g.edge_count(), 12 * 11 / 2);
        let full = DcbmParams::null_model(vec![1.0; 12], 1.0).unwrap();
        assert_eq!(full.sample(3).unwrap().edge_count(), 12 * 11 / 2);
    }

    #[test]
    fn sampling_deterministic_by_seed() {
        let spec = TwoBlockSpec::new(40, 5, 0.6, 0.2).unwrap();
        let params = spec.to_params(9).unwrap();
        let g1 = params.sample_replicate(9, 4).unwrap();
        let g2 = params.sample_replicate(9, 4).unwrap();
        assert_eq!(g1.edges(), g2.edges());
        let g3 = params.sample_replicate(9, 5).unwrap();
        assert_ne!(g1.edges(), g3.edges());
    }

    #[test]
    fn sampling_matches_density_monte_carlo() {
        let params = DcbmParams::null_model(vec![1.0; 200], 0.3).unwrap();
        let reps = 60;
        let mut total_edges = 0usize;
        for r in 0..reps {
            total_edges += params.sample_replicate(77, r).unwrap().edge_count();
        }
        let pairs = (200 * 199 / 2) as f64 * reps as f64;
        let density = total_edges as f64 / pairs;
        let se = (0.3 * 0.7 / pairs).sqrt();
        assert!(
            (density - 0.3).abs() < 3.0 * se,
            "density {density} vs 0.3 +- {se}"
        );
    }

    #[test]
    fn random_membership_extremes_and_concentration() {
        assert!(
            sample_random_membership(100, 0.0, 1)
                .unwrap()
                .iter()
                .all(|&l| l == 0)
        );
        assert!(
            sample_random_membership(100, 1.0, 1)
                .unwrap()
                .iter()
                .all(|&l| l == 1)
        );
        let n = 10_000;
        let eps = 0.1;
        let count = sample_random_membership(n, eps, 5)
            .unwrap()
            .iter()
            .sum::<usize>() as f64;
        let sd = (n as f64 * eps * (1.0 - eps)).sqrt();
        assert!((count - n as f64 * eps).abs() < 3.0 * sd);
    }

    #[test]
    fn pareto_profile_has_expected_scale() {
        let theta = ThetaProfile::pareto_default()
            .materialize(20_000, 11)
            .unwrap();
        assert!(theta.iter().all(|&t| t >= PARETO_SCALE));
        let mean = theta.iter().sum::<f64>() / theta.len() as f64;
        // Mean = shape*scale/(shape-1) = 0.5; sd of the sample mean is
        // about 0.29/sqrt(n).
        assert!((mean - 0.5).abs() < 0.01, "mean = {mean}");
    }

    #[test]
    fn spec_file_round_trip() {
        let text = r#"{"n": 100, "N": 10, "a": 0.5, "c": 0.1, "theta": "ones", "seed": 7}"#;
        let file = ModelSpecFile::parse(text).unwrap();
        let spec = file.to_spec().unwrap();
        assert_eq!(spec.n, 100);
        assert!((spec.b() - 0.05).abs() < 1e-15);

        let inline = r#"{"n": 3, "N": 1, "a": 0.5, "c": 0.1, "theta": [0.5, 1.0, 1.5]}"#;
        let file = ModelSpecFile::parse(inline).unwrap();
        assert!(matches!(file.theta, ThetaField::Inline(_)));
    }
}
