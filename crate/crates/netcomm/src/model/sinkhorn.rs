//! Sinkhorn scaling and the canonical DCBM parameterization.
//!
//! For a K x K matrix P with positive diagonal and nonnegative
//! off-diagonal entries and a positive weight vector h, there is a
//! unique positive diagonal D with D P D h = 1. Scaling the two-block
//! connectivity this way is precisely what makes the null and
//! alternative expected degrees match, so the whole degree-matching
//! construction reduces to this routine.
//!
//! `canonicalize` rewrites arbitrary DCBM parameters into the unique
//! equivalent triple with ||theta||_1 = n and P h proportional to 1,
//! leaving Omega unchanged: scale P against the community fractions,
//! fold the scaling into theta community-wise, then renormalize theta
//! mass to n and compensate in P.

use nalgebra::DMatrix;

use crate::model::{DcbmParams, ModelError};

pub const DEFAULT_TOL: f64 = 1e-12;
pub const DEFAULT_MAX_ITER: usize = 10_000;

/// Outcome of a converged scaling run.
#[derive(Debug, Clone)]
pub struct SinkhornScaling {
    /// Diagonal entries of D.
    pub d: Vec<f64>,
    /// Final max-norm residual ||D P D h - 1||_inf.
    pub residual: f64,
    /// Sweeps performed.
    pub iterations: usize,
}

/// Finds the positive diagonal D with D P D h = 1 by alternating
/// coordinate updates d_k <- d_k / sqrt((D P D h)_k).
pub fn sinkhorn_scale(
    p: &DMatrix<f64>,
    h: &[f64],
    tol: f64,
    max_iter: usize,
) -> Result<SinkhornScaling, ModelError> {
    let k = p.nrows();
    if !p.is_square() || k == 0 {
        return Err(ModelError::BadParameter("P must be square".into()));
    }
    if h.len() != k {
        return Err(ModelError::BadParameter(format!(
            "h has length {}, expected {k}",
            h.len()
        )));
    }
    if h.iter().any(|&x| !x.is_finite() || x <= 0.0) {
        return Err(ModelError::BadParameter(
            "h must be strictly positive".into(),
        ));
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
        }
    }
    if !tol.is_finite() || tol <= 0.0 || max_iter == 0 {
        return Err(ModelError::BadParameter(
            "tol must be positive and max_iter nonzero".into(),
        ));
    }

    let mut d = vec![1.0f64; k];
    let row_apply = |d: &[f64], r: usize| -> f64 {
        let mut acc = 0.0;
        for c in 0..k {
            acc += p[(r, c)] * d[c] * h[c];
        }
        d[r] * acc
    };
    let residual_of = |d: &[f64]| -> f64 {
        (0..k)
            .map(|r| (row_apply(d, r) - 1.0).abs())
            .fold(0.0, f64::max)
    };

    let mut residual = residual_of(&d);
    for sweep in 1..=max_iter {
        for r in 0..k {
            let f = row_apply(&d, r);
            if f > 0.0 {
                d[r] /= f.sqrt();
            }
        }
        residual = residual_of(&d);
        if residual <= tol {
            return Ok(SinkhornScaling {
                d,
                residual,
                iterations: sweep,
            });
        }
    }
    Err(ModelError::SinkhornDiverged {
        iterations: max_iter,
        residual,
    })
}

/// Canonicalized parameters together with the scaling diagnostics.
#[derive(Debug, Clone)]
pub struct Canonicalized {
    pub params: DcbmParams,
    pub scaling: SinkhornScaling,
}

/// Rewrites params into the unique equivalent form with
/// ||theta||_1 = n and P h proportional to 1 (same Omega).
pub fn canonicalize(params: &DcbmParams) -> Result<Canonicalized, ModelError> {
    canonicalize_with(params, DEFAULT_TOL, DEFAULT_MAX_ITER)
}

pub fn canonicalize_with(
    params: &DcbmParams,
    tol: f64,
    max_iter: usize,
) -> Result<Canonicalized, ModelError> {
    let h = params.community_fractions();
    let scaling = sinkhorn_scale(params.connectivity(), &h, tol, max_iter)?;
    let k = params.community_count();
    let n = params.node_count();

    // P* = D P D, theta*_i = theta_i / d_{label(i)}.
    let mut p_star = params.connectivity().clone();
    for r in 0..k {
        for c in 0..k {
            p_star[(r, c)] *= scaling.d[r] * scaling.d[c];
        }
    }
    let theta_star: Vec<f64> = params
        .theta()
        .iter()
        .zip(params.memberships())
        .map(|(&t, &l)| t / scaling.d[l])
        .collect();

    // Renormalize theta mass to n; compensate inside P.
    let mass: f64 = theta_star.iter().sum();
    let ratio = mass / n as f64;
    let theta_bar: Vec<f64> = theta_star.iter().map(|&t| t / ratio).collect();
    let p_bar = p_star * (ratio * ratio);

    let params = DcbmParams::new(theta_bar, params.memberships().to_vec(), p_bar)?;
    Ok(Canonicalized { params, scaling })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{ThetaProfile, TwoBlockSpec};
    use crate::rng::{Stream, replicate_rng};
    use rand::RngExt;

    fn residual_of(p: &DMatrix<f64>, d: &[f64], h: &[f64]) -> f64 {
        let k = h.len();
        (0..k)
            .map(|r| {
                let mut acc = 0.0;
                for c in 0..k {
                    acc += p[(r, c)] * d[c] * h[c];
                }
                (d[r] * acc - 1.0).abs()
            })
            .fold(0.0, f64::max)
    }

    #[test]
    fn uniform_matrix_fixed_point() {
        let p = DMatrix::from_element(2, 2, 1.0);
        let s = sinkhorn_scale(&p, &[0.5, 0.5], 1e-12, 1000).unwrap();
        assert!((s.d[0] - 1.0).abs() < 1e-10);
        assert!((s.d[1] - 1.0).abs() < 1e-10);
    }

    #[test]
    fn diagonal_matrix_hand_solution() {
        // d1^2 * 2 * 0.5 = 1 and d2^2 * 0.5 * 0.5 = 1.
        let p = DMatrix::from_row_slice(2, 2, &[2.0, 0.0, 0.0, 0.5]);
        let s = sinkhorn_scale(&p, &[0.5, 0.5], 1e-12, 1000).unwrap();
        assert!((s.d[0] - 1.0).abs() < 1e-10, "d = {:?}", s.d);
        assert!((s.d[1] - 2.0).abs() < 1e-10, "d = {:?}", s.d);
    }

    #[test]
    fn random_positive_definite_residual() {
        let mut rng = replicate_rng(21, Stream::Sample, 0);
        for _ in 0..20 {
            let x: f64 = 0.2 + rng.random::<f64>();
            let y: f64 = 0.2 + rng.random::<f64>();
            let z: f64 = rng.random::<f64>() * (x * y).sqrt() * 0.9;
            let p = DMatrix::from_row_slice(2, 2, &[x, z, z, y]);
            let s = sinkhorn_scale(&p, &[0.3, 0.7], 1e-10, 10_000).unwrap();
            assert!(s.residual <= 1e-10);
            assert!(residual_of(&p, &s.d, &[0.3, 0.7]) <= 1e-10);
        }
    }

    #[test]
    fn residual_nonincreasing_across_sweeps() {
        // Re-run the sweep loop manually and track the residual.
        let p = DMatrix::from_row_slice(2, 2, &[0.9, 0.2, 0.2, 0.4]);
        let h = [0.25, 0.75];
        let mut d = vec![1.0f64; 2];
        let mut last = residual_of(&p, &d, &h);
        for _ in 0..60 {
            for r in 0..2 {
                let mut acc = 0.0;
                for c in 0..2 {
                    acc += p[(r, c)] * d[c] * h[c];
                }
                let f = d[r] * acc;
                d[r] /= f.sqrt();
            }
            let res = residual_of(&p, &d, &h);
            assert!(res <= last + 1e-15, "residual rose: {last} -> {res}");
            last = res;
        }
    }

    #[test]
    fn rejects_nonpositive_diagonal() {
        let p = DMatrix::from_row_slice(2, 2, &[0.0, 0.1, 0.1, 0.5]);
        assert!(sinkhorn_scale(&p, &[0.5, 0.5], 1e-10, 100).is_err());
    }

    #[test]
    fn canonicalize_k1_rescales_mass() {
        // K = 1: theta* = n theta/||theta||_1, P* = alpha (||theta||_1/n)^2.
        let theta = vec![0.5, 1.5, 2.0, 4.0];
        let alpha = 0.01;
        let params = DcbmParams::null_model(theta.clone(), alpha).unwrap();
        let canon = canonicalize(&params).unwrap();
        let mass: f64 = theta.iter().sum();
        let n = 4.0;
        for (got, want) in canon
            .params
            .theta()
            .iter()
            .zip(theta.iter().map(|t| n * t / mass))
        {
            assert!((got - want).abs() < 1e-12);
        }
        let want_p = alpha * (mass / n) * (mass / n);
        assert!((canon.params.connectivity()[(0, 0)] - want_p).abs() < 1e-14);
    }

    #[test]
    fn canonicalize_preserves_omega_and_is_idempotent() {
        let spec = TwoBlockSpec::new(60, 8, 0.7, 0.2)
            .unwrap()
            .with_theta(ThetaProfile::pareto_default());
        let params = spec.to_params(5).unwrap();
        let canon = canonicalize(&params).unwrap();

        let before = params.omega().unwrap();
        let after = canon.params.omega().unwrap();
        let max_diff = (&before - &after).abs().max();
        assert!(max_diff <= 1e-10, "omega changed by {max_diff}");

        let sum: f64 = canon.params.theta().iter().sum();
        assert!((sum - 60.0).abs() <= 1e-12 * 60.0);

        let again = canonicalize(&canon.params).unwrap();
        let drift = (&after - &again.params.omega().unwrap()).abs().max();
        assert!(drift <= 1e-10);
        for (x, y) in canon.params.theta().iter().zip(again.params.theta()) {
            assert!((x - y).abs() <= 1e-9);
        }
    }

    #[test]
    fn canonical_two_block_is_already_canonical() {
        let spec = TwoBlockSpec::new(100, 10, 0.5, 0.1).unwrap();
        let params = spec.to_params(0).unwrap();
        let canon = canonicalize(&params).unwrap();
        for (x, y) in params.theta().iter().zip(canon.params.theta()) {
            assert!((x - y).abs() <= 1e-10);
        }
        let dp = (params.connectivity() - canon.params.connectivity())
            .abs()
            .max();
        assert!(dp <= 1e-10, "connectivity drifted by {dp}");
    }

    #[test]
    fn canonicalize_scaled_form_recovers_same_omega() {
        // Start from the (sqrt(a), sqrt(c)) theta form with unit P
        // diagonal and check Omega equality after canonicalization.
        let (n, nn, a, c) = (40usize, 6usize, 0.6f64, 0.15f64);
        let spec = TwoBlockSpec::new(n, nn, a, c).unwrap();
        let b = spec.b();
        let bt = b / (a * c).sqrt();
        let p = DMatrix::from_row_slice(2, 2, &[1.0, bt, bt, 1.0]);
        let theta: Vec<f64> = (0..n)
            .map(|i| if i < nn { a.sqrt() } else { c.sqrt() })
            .collect();
        let memberships: Vec<usize> = (0..n).map(|i| usize::from(i < nn)).collect();
        let scaled = DcbmParams::new(theta, memberships, p).unwrap();

        let canon = canonicalize(&scaled).unwrap();
        let reference = spec.to_params(0).unwrap().omega().unwrap();
        let diff = (&reference - &canon.params.omega().unwrap()).abs().max();
        assert!(diff <= 1e-10, "omega mismatch {diff}");
    }
}
