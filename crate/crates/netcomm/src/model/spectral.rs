//! Spectral diagnostics: the centered probability matrix, its nonzero
//! eigenvalue in the two-block case, and community balance vectors.
//!
//! The signal strength of the signed-quadrilateral test is carried by
//!
//! ```text
//! Omega~ = Omega - (1' Omega 1)^{-1} (Omega 1)(Omega 1)'
//! ```
//!
//! which has rank K-1. For K = 2 its single nonzero eigenvalue has the
//! closed form
//!
//! ```text
//! lambda~ = ||theta||^2 (ac - b^2)(d0^2 g1 + d1^2 g0)
//!           / (a d1^2 + 2 b d0 d1 + c d0^2)
//! ```
//!
//! in terms of the balance vectors d (theta mass fractions) and g
//! (theta energy fractions). In the SBM case lambda~ equals the second
//! eigenvalue of Omega exactly.

use nalgebra::DMatrix;
use serde::Serialize;

use crate::model::{DcbmParams, ModelError, ThetaProfile, TwoBlockSpec};

/// Centered probability matrix; errors when the total mass 1'Omega 1
/// is not positive.
pub fn tilde_omega(omega: &DMatrix<f64>) -> Result<DMatrix<f64>, ModelError> {
    let n = omega.nrows();
    let row_sums: Vec<f64> = (0..n).map(|i| omega.row(i).sum()).collect();
    let total: f64 = row_sums.iter().sum();
    if total <= 0.0 {
        return Err(ModelError::BadParameter(
            "omega has no mass; centering undefined".into(),
        ));
    }
    let mut out = omega.clone();
    for i in 0..n {
        for j in 0..n {
            out[(i, j)] -= row_sums[i] * row_sums[j] / total;
        }
    }
    Ok(out)
}

/// Balance vectors (d, g) in label order:
/// d_k = sum_{i in C_k} theta_i / ||theta||_1,
/// g_k = sum_{i in C_k} theta_i^2 / ||theta||^2.
pub fn balance_vectors(params: &DcbmParams) -> (Vec<f64>, Vec<f64>) {
    let k = params.community_count();
    let mut d = vec![0.0; k];
    let mut g = vec![0.0; k];
    for (&t, &l) in params.theta().iter().zip(params.memberships()) {
        d[l] += t;
        g[l] += t * t;
    }
    let mass: f64 = d.iter().sum();
    let energy: f64 = g.iter().sum();
    d.iter_mut().for_each(|x| *x /= mass);
    g.iter_mut().for_each(|x| *x /= energy);
    (d, g)
}

/// Closed-form nonzero eigenvalue of the centered matrix for canonical
/// two-block parameters.
pub fn tilde_lambda_two_block(params: &DcbmParams) -> Result<f64, ModelError> {
    if params.community_count() != 2 {
        return Err(ModelError::BadParameter(format!(
            "closed form needs K = 2, got K = {}",
            params.community_count()
        )));
    }
    let p = params.connectivity();
    let (c, b, a) = (p[(0, 0)], p[(0, 1)], p[(1, 1)]);
    let (d, g) = balance_vectors(params);
    let energy: f64 = params.theta().iter().map(|t| t * t).sum();
    let numer = (a * c - b * b) * (d[0] * d[0] * g[1] + d[1] * d[1] * g[0]);
    let denom = a * d[1] * d[1] + 2.0 * b * d[0] * d[1] + c * d[0] * d[0];
    Ok(energy * numer / denom)
}

/// The two nonzero eigenvalues of Omega for a two-block DCBM, via the
/// 2x2 reduction diag(sqrt m) P diag(sqrt m) with m_k the per-community
/// theta energy. Returned as (largest, other).
pub fn two_block_nonzero_eigenvalues(params: &DcbmParams) -> Result<(f64, f64), ModelError> {
    if params.community_count() != 2 {
        return Err(ModelError::BadParameter(format!(
            "two-block reduction needs K = 2, got K = {}",
            params.community_count()
        )));
    }
    let mut m = [0.0f64; 2];
    for (&t, &l) in params.theta().iter().zip(params.memberships()) {
        m[l] += t * t;
    }
    let p = params.connectivity();
    let b00 = p[(0, 0)] * m[0];
    let b11 = p[(1, 1)] * m[1];
    let b01 = p[(0, 1)] * (m[0] * m[1]).sqrt();
    let tr = b00 + b11;
    let det = b00 * b11 - b01 * b01;
    let disc = (tr * tr - 4.0 * det).max(0.0).sqrt();
    Ok(((tr + disc) / 2.0, (tr - disc) / 2.0))
}

/// Exact eigenvalues of the degree-matched SBM alternative:
/// lambda1 = ((n-N)^2 c - a N^2)/(n-2N), lambda2 = (a-c)N(n-N)/(n-2N).
pub fn sbm_eigenvalues(spec: &TwoBlockSpec) -> Result<(f64, f64), ModelError> {
    if spec.theta_profile != ThetaProfile::Ones {
        return Err(ModelError::BadParameter(
            "closed-form SBM eigenvalues need theta = 1".into(),
        ));
    }
    let (n, nn) = (spec.n as f64, spec.n_small as f64);
    let lambda1 = ((n - nn) * (n - nn) * spec.c - spec.a * nn * nn) / (n - 2.0 * nn);
    let lambda2 = (spec.a - spec.c) * nn * (n - nn) / (n - 2.0 * nn);
    Ok((lambda1, lambda2))
}

/// Headline diagnostics for a two-block model.
#[derive(Debug, Clone, Serialize)]
pub struct SpectralSummary {
    pub b: f64,
    pub alpha: f64,
    pub lambda1: f64,
    pub tilde_lambda: f64,
    pub d: Vec<f64>,
    pub g: Vec<f64>,
}

/// Computes the summary for a spec (theta drawn with `seed` when the
/// profile is random).
pub fn describe(spec: &TwoBlockSpec, seed: u64) -> Result<SpectralSummary, ModelError> {
    let params = spec.to_params(seed)?;
    let (d, g) = balance_vectors(&params);
    let (lambda1, _) = two_block_nonzero_eigenvalues(&params)?;
    Ok(SpectralSummary {
        b: spec.b(),
        alpha: spec.matched_null_alpha(),
        lambda1,
        tilde_lambda: tilde_lambda_two_block(&params)?,
        d,
        g,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::DcbmParams;

    #[test]
    fn rank_one_null_centers_to_zero() {
        let params = DcbmParams::null_model(vec![0.5, 1.0, 1.5, 2.0], 0.05).unwrap();
        let omega = params.omega().unwrap();
        let t = tilde_omega(&omega).unwrap();
        assert!(t.abs().max() < 1e-14);
    }

    #[test]
    fn two_block_centered_matrix_is_rank_one() {
        let spec = TwoBlockSpec::new(100, 10, 0.5, 0.1).unwrap();
        let omega = spec.to_params(0).unwrap().omega().unwrap();
        let t = tilde_omega(&omega).unwrap();
        let svd = t.svd(false, false);
        let mut sv: Vec<f64> = svd.singular_values.iter().copied().collect();
        sv.sort_by(|x, y| y.partial_cmp(x).unwrap());
        assert!(sv[1] <= 1e-10 * sv[0], "second singular value {}", sv[1]);
    }

    #[test]
    fn hand_case_tilde_lambda_and_sbm_eigenvalues() {
        let spec = TwoBlockSpec::new(100, 10, 0.5, 0.1).unwrap();
        let params = spec.to_params(0).unwrap();
        let tl = tilde_lambda_two_block(&params).unwrap();
        assert!((tl - 4.5).abs() < 1e-12, "tilde lambda = {tl}");
        let (l1, l2) = sbm_eigenvalues(&spec).unwrap();
        assert!((l1 - 9.5).abs() < 1e-12);
        assert!((l2 - 4.5).abs() < 1e-12);
        let (e1, e2) = two_block_nonzero_eigenvalues(&params).unwrap();
        assert!((e1 - 9.5).abs() < 1e-10);
        assert!((e2 - 4.5).abs() < 1e-10);
    }

    #[test]
    fn degenerate_null_has_zero_signal() {
        let spec = TwoBlockSpec::new(80, 10, 0.2, 0.2).unwrap();
        let params = spec.to_params(0).unwrap();
        assert!(tilde_lambda_two_block(&params).unwrap().abs() < 1e-13);
        let (_, l2) = sbm_eigenvalues(&spec).unwrap();
        assert!(l2.abs() < 1e-13);
    }

    #[test]
    fn trace_identity_via_centered_connectivity() {
        // trace of the centered matrix = ||theta||^2 * diag(P~)' g with
        // P~ = P - (d'Pd)^{-1} P d d' P, for canonical parameters.
        let spec = TwoBlockSpec::new(120, 14, 0.4, 0.15).unwrap();
        let params = spec.to_params(0).unwrap();
        let (d, g) = balance_vectors(&params);
        let p = params.connectivity();
        let pd = [
            p[(0, 0)] * d[0] + p[(0, 1)] * d[1],
            p[(1, 0)] * d[0] + p[(1, 1)] * d[1],
        ];
        let dpd = d[0] * pd[0] + d[1] * pd[1];
        let tilde_diag = [
            p[(0, 0)] - pd[0] * pd[0] / dpd,
            p[(1, 1)] - pd[1] * pd[1] / dpd,
        ];
        let energy: f64 = params.theta().iter().map(|t| t * t).sum();
        let via_identity = energy * (tilde_diag[0] * g[0] + tilde_diag[1] * g[1]);

        let trace = tilde_omega(&params.omega().unwrap()).unwrap().trace();
        assert!(
            (via_identity - trace).abs() <= 1e-10 * (1.0 + trace.abs()),
            "identity {via_identity} vs trace {trace}"
        );
    }

    #[test]
    fn sbm_eigenvalues_match_dense_eigensolver() {
        let spec = TwoBlockSpec::new(90, 9, 0.45, 0.12).unwrap();
        let (l1, l2) = sbm_eigenvalues(&spec).unwrap();
        let omega = spec.to_params(0).unwrap().omega().unwrap();
        let eigen = nalgebra::SymmetricEigen::new(omega);
        let mut ev: Vec<f64> = eigen.eigenvalues.iter().copied().collect();
        ev.sort_by(|a, b| b.abs().partial_cmp(&a.abs()).unwrap());
        assert!((ev[0] - l1).abs() <= 1e-8 * l1.abs(), "{} vs {l1}", ev[0]);
        assert!((ev[1] - l2).abs() <= 1e-8 * l1.abs(), "{} vs {l2}", ev[1]);
    }

    #[test]
    fn tilde_lambda_equals_trace_of_centered_matrix() {
        let spec = TwoBlockSpec::new(90, 12, 0.45, 0.12)
            .unwrap()
            .with_theta(ThetaProfile::pareto_default());
        let params = spec.to_params(3).unwrap();
        let omega = params.omega().unwrap();
        let t = tilde_omega(&omega).unwrap();
        let tl = tilde_lambda_two_block(&params).unwrap();
        assert!(
            (tl - t.trace()).abs() <= 1e-10 * (1.0 + tl.abs()),
            "closed form {tl} vs trace {}",
            t.trace()
        );
    }

    #[test]
    fn balance_vectors_uniform_theta() {
        let spec = TwoBlockSpec::new(50, 5, 0.4, 0.1).unwrap();
        let params = spec.to_params(0).unwrap();
        let (d, g) = balance_vectors(&params);
        assert!((d[0] - 0.9).abs() < 1e-14 && (d[1] - 0.1).abs() < 1e-14);
        assert!((g[0] - 0.9).abs() < 1e-14 && (g[1] - 0.1).abs() < 1e-14);
        assert!((d.iter().sum::<f64>() - 1.0).abs() < 1e-14);
        assert!((g.iter().sum::<f64>() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn balance_vectors_k1() {
        let params = DcbmParams::null_model(vec![0.7, 1.1, 2.3], 0.1).unwrap();
        let (d, g) = balance_vectors(&params);
        assert_eq!(d.len(), 1);
        assert!((d[0] - 1.0).abs() < 1e-14);
        assert!((g[0] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn centering_rejects_zero_mass() {
        let omega = DMatrix::zeros(4, 4);
        assert!(tilde_omega(&omega).is_err());
    }
}
