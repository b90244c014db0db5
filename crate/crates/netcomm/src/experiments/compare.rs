//! The three sweep experiments: chi-square vs SgnQ power curves
//! (matched and unmatched cross probability), oracle scan vs SgnQ with
//! empirically calibrated scan threshold, and the null-distribution
//! check of the standardized SgnQ statistic.

use rayon::prelude::*;
use serde::Serialize;

use crate::experiments::{
    ExperimentError, PowerRow, PowerTable, empirical_quantile, linspace, markers,
};
use crate::graph::Graph;
use crate::model::{DcbmParams, ModelError, ThetaProfile, TwoBlockSpec, erdos_renyi};
use crate::rng::{Stream, derive_seed};
use crate::stats::chi2::{Sidedness, chi2_test};
use crate::stats::scan::{exhaustive_scan, quadratic_form};
use crate::stats::sgnq::sgnq_test;
use crate::stats::{StatsError, normal};

/// Whether the cross probability is the degree-matching b or stays at
/// the background value c.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MatchMode {
    Matched,
    Unmatched,
}

#[derive(Debug, Clone, Serialize)]
pub struct Chi2VsSgnqConfig {
    pub n: usize,
    pub n_small: usize,
    pub c: f64,
    pub mode: MatchMode,
    pub reps: usize,
    pub level: f64,
    pub grid_points: usize,
    pub seed: u64,
}

impl Chi2VsSgnqConfig {
    pub fn new(n: usize, n_small: usize, c: f64, mode: MatchMode) -> Self {
        Chi2VsSgnqConfig {
            n,
            n_small,
            c,
            mode,
            reps: 50,
            level: 0.05,
            grid_points: 20,
            seed: 0,
        }
    }
}

/// Counts rejections of both tests over shared replicates.
fn dual_power(
    params: &DcbmParams,
    seed: u64,
    point: usize,
    reps: usize,
    level: f64,
) -> Result<(PowerRowPair, usize), ExperimentError> {
    let base = derive_seed(seed, Stream::Power, point as u64);
    let outcomes: Vec<(Option<bool>, Option<bool>)> = (0..reps as u64)
        .into_par_iter()
        .map(|r| -> Result<_, ExperimentError> {
            let g = params.sample_replicate(base, r)?;
            let sgnq = soften(sgnq_test(&g, level).map(|o| o.reject))?;
            let chi2 = soften(chi2_test(&g, level, Sidedness::OneSided).map(|o| o.reject))?;
            Ok((sgnq, chi2))
        })
        .collect::<Result<_, _>>()?;
    let (sgnq, chi2) = (
        summarize(outcomes.iter().map(|o| o.0)),
        summarize(outcomes.iter().map(|o| o.1)),
    );
    let degenerate = outcomes.iter().filter(|o| o.0.is_none()).count();
    if 2 * degenerate > reps {
        return Err(ExperimentError::TooManyDegenerate { degenerate, reps });
    }
    Ok((PowerRowPair { sgnq, chi2 }, degenerate))
}

struct PowerRowPair {
    sgnq: (f64, f64),
    chi2: (f64, f64),
}

fn soften(r: Result<bool, StatsError>) -> Result<Option<bool>, ExperimentError> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(StatsError::DegenerateInput(_)) => Ok(None),
        Err(e) => Err(ExperimentError::Stats(e)),
    }
}

fn summarize(outcomes: impl Iterator<Item = Option<bool>>) -> (f64, f64) {
    let mut rejects = 0usize;
    let mut valid = 0usize;
    for r in outcomes.flatten() {
        valid += 1;
        if r {
            rejects += 1;
        }
    }
    if valid == 0 {
        return (f64::NAN, f64::NAN);
    }
    let p = rejects as f64 / valid as f64;
    (p, (p * (1.0 - p) / valid as f64).sqrt())
}

/// Power of SgnQ and chi-square along the grid a in [c, c(n-N)/N].
pub fn chi2_vs_sgnq(cfg: &Chi2VsSgnqConfig) -> Result<PowerTable, ExperimentError> {
    if cfg.grid_points < 2 || cfg.reps == 0 {
        return Err(ExperimentError::BadConfig(
            "need at least 2 grid points and 1 replicate".into(),
        ));
    }
    // The sweep spans the whole degree-matching-feasible range
    // [c, c(n-N)/N]; points past the Bernoulli bound a <= 1 are kept
    // and flagged rather than re-gridded away.
    let a_max = TwoBlockSpec::a_max(cfg.n, cfg.n_small, cfg.c);
    let grid = linspace(cfg.c, a_max, cfg.grid_points);
    let mut rows = Vec::with_capacity(grid.len());
    for (idx, &a) in grid.iter().enumerate() {
        let spec = match TwoBlockSpec::new(cfg.n, cfg.n_small, a, cfg.c) {
            Ok(s) => s,
            Err(e) => {
                rows.push(PowerRow::infeasible(a, e.to_string()));
                continue;
            }
        };
        let (cross, alpha) = match cfg.mode {
            MatchMode::Matched => (spec.b(), spec.matched_null_alpha()),
            MatchMode::Unmatched => {
                let eps = cfg.n_small as f64 / cfg.n as f64;
                (cfg.c, a * eps + cfg.c * (1.0 - eps))
            }
        };
        let params = match cfg.mode {
            MatchMode::Matched => spec.to_params(cfg.seed)?,
            MatchMode::Unmatched => spec.to_params_with_cross(cfg.c, cfg.seed)?,
        };
        let (pair, _) = dual_power(&params, cfg.seed, idx, cfg.reps, cfg.level)?;
        rows.push(PowerRow {
            a,
            b: Some(cross),
            c: Some(cfg.c),
            alpha: Some(alpha),
            power_sgnq: Some(pair.sgnq.0),
            se_sgnq: Some(pair.sgnq.1),
            power_chi2: Some(pair.chi2.0),
            se_chi2: Some(pair.chi2.1),
            power_scan: None,
            se_scan: None,
            note: String::new(),
        });
    }
    // Markers count as present only when a feasible model attains them.
    let feasible_end = a_max.min(1.0);
    let (a_stat_marker, a_comp_marker) = markers::fixed_c(cfg.n, cfg.n_small, cfg.c, feasible_end);
    Ok(PowerTable {
        rows,
        a_stat_marker,
        a_comp_marker,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanVsSgnqConfig {
    pub n: usize,
    pub n_small: usize,
    pub alpha: f64,
    pub m_cal: usize,
    pub m_pow: usize,
    pub level: f64,
    pub grid_points: usize,
    pub seed: u64,
    pub scan_budget: u128,
}

impl ScanVsSgnqConfig {
    pub fn new(n: usize, n_small: usize, alpha: f64) -> Self {
        ScanVsSgnqConfig {
            n,
            n_small,
            alpha,
            m_cal: 75,
            m_pow: 200,
            level: 0.05,
            grid_points: 20,
            seed: 0,
            scan_budget: 100_000_000,
        }
    }
}

/// The scan comparison protocol: calibrate the exhaustive-scan
/// threshold on nulls, evaluate the oracle scan at the true planted set
/// against it, and sweep a from alpha to alpha n / N. The oracle value
/// never exceeds the full scan, so the reported scan power is a lower
/// bound on the real (intractable) scan test's power.
pub fn scan_vs_sgnq(cfg: &ScanVsSgnqConfig) -> Result<PowerTable, ExperimentError> {
    if cfg.grid_points < 2 || cfg.m_cal == 0 || cfg.m_pow == 0 {
        return Err(ExperimentError::BadConfig(
            "need at least 2 grid points and positive replicate counts".into(),
        ));
    }
    // Step 1: empirical 1-kappa quantile of the full scan under the null.
    let cal_seed = derive_seed(cfg.seed, Stream::Calibration, 0);
    let draws: Vec<f64> = (0..cfg.m_cal as u64)
        .into_par_iter()
        .map(|r| -> Result<f64, ExperimentError> {
            let g = erdos_renyi(cfg.n, cfg.alpha, cal_seed, r)?;
            Ok(exhaustive_scan(&g, cfg.n_small, cfg.scan_budget)?.value)
        })
        .collect::<Result<_, _>>()?;
    let tau = empirical_quantile(&draws, cfg.level);

    // Step 2: per grid point, SgnQ power and oracle-scan power.
    let a_max = cfg.alpha * cfg.n as f64 / cfg.n_small as f64;
    let grid = linspace(cfg.alpha, a_max, cfg.grid_points);
    let planted: Vec<usize> = (0..cfg.n_small).collect();
    let mut rows = Vec::with_capacity(grid.len());
    let (nf, nn) = (cfg.n as f64, cfg.n_small as f64);
    let marker_grid: Vec<(f64, f64)> = grid
        .iter()
        .map(|&a| {
            let c = (a * nn * nn + cfg.alpha * nf * nf - 2.0 * cfg.alpha * nf * nn)
                / ((nf - nn) * (nf - nn));
            (a, c)
        })
        .collect();
    for (idx, &a) in grid.iter().enumerate() {
        let spec = match TwoBlockSpec::from_alpha(cfg.n, cfg.n_small, a, cfg.alpha) {
            Ok(s) => s,
            Err(e) => {
                rows.push(PowerRow::infeasible(a, e.to_string()));
                continue;
            }
        };
        let params = spec.to_params(cfg.seed)?;
        let base = derive_seed(cfg.seed, Stream::Power, idx as u64);
        let outcomes: Vec<(Option<bool>, bool)> = (0..cfg.m_pow as u64)
            .into_par_iter()
            .map(|r| -> Result<_, ExperimentError> {
                let g = params.sample_replicate(base, r)?;
                let sgnq = soften(sgnq_test(&g, cfg.level).map(|o| o.reject))?;
                let oracle = quadratic_form(&g, &planted)? > tau;
                Ok((sgnq, oracle))
            })
            .collect::<Result<_, _>>()?;
        let sgnq = summarize(outcomes.iter().map(|o| o.0));
        let scan = summarize(outcomes.iter().map(|o| Some(o.1)));
        rows.push(PowerRow {
            a,
            b: Some(spec.b()),
            c: Some(spec.c),
            alpha: Some(cfg.alpha),
            power_sgnq: Some(sgnq.0),
            se_sgnq: Some(sgnq.1),
            power_chi2: None,
            se_chi2: None,
            power_scan: Some(scan.0),
            se_scan: Some(scan.1),
            note: String::new(),
        });
    }
    let (a_stat_marker, a_comp_marker) = markers::on_grid(cfg.n, cfg.n_small, &marker_grid);
    Ok(PowerTable {
        rows,
        a_stat_marker,
        a_comp_marker,
    })
}

/// Null model family for the SgnQ calibration check.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum NullThetaMode {
    /// Omega = alpha everywhere (Erdos-Renyi).
    Constant { alpha: f64 },
    /// Omega = theta theta' with i.i.d. Pareto theta, redrawn per
    /// replicate; pair probabilities above 1 are clamped.
    Pareto,
}

#[derive(Debug, Clone, Serialize)]
pub struct NullCheckConfig {
    pub mode: NullThetaMode,
    pub n: usize,
    pub reps: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct NullCheckSummary {
    pub mean: f64,
    /// Sample variance; absent with fewer than two valid replicates.
    pub variance: Option<f64>,
    /// Kolmogorov-Smirnov distance of the psi sample to N(0,1).
    pub ks_distance: f64,
    pub valid: usize,
    pub degenerate: usize,
    pub psi: Vec<f64>,
}

/// Draws `reps` null networks and summarizes the standardized SgnQ
/// values against the standard normal.
pub fn null_calibration(cfg: &NullCheckConfig) -> Result<NullCheckSummary, ExperimentError> {
    if cfg.reps == 0 {
        return Err(ExperimentError::BadConfig("reps must be positive".into()));
    }
    let draws: Vec<Option<f64>> = (0..cfg.reps as u64)
        .into_par_iter()
        .map(|r| -> Result<Option<f64>, ExperimentError> {
            let g = sample_null(cfg, r)?;
            match sgnq_test(&g, 0.05) {
                Ok(o) => Ok(o.standardized),
                Err(StatsError::DegenerateInput(_)) => Ok(None),
                Err(e) => Err(ExperimentError::Stats(e)),
            }
        })
        .collect::<Result<_, _>>()?;
    let psi: Vec<f64> = draws.iter().flatten().copied().collect();
    let degenerate = draws.len() - psi.len();
    if psi.is_empty() || 2 * degenerate > cfg.reps {
        return Err(ExperimentError::TooManyDegenerate {
            degenerate,
            reps: cfg.reps,
        });
    }
    let mean = psi.iter().sum::<f64>() / psi.len() as f64;
    let variance = (psi.len() >= 2)
        .then(|| psi.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / (psi.len() - 1) as f64);
    Ok(NullCheckSummary {
        mean,
        variance,
        ks_distance: ks_to_standard_normal(&psi),
        valid: psi.len(),
        degenerate,
        psi,
    })
}

fn sample_null(cfg: &NullCheckConfig, replicate: u64) -> Result<Graph, ModelError> {
    match cfg.mode {
        NullThetaMode::Constant { alpha } => erdos_renyi(cfg.n, alpha, cfg.seed, replicate),
        NullThetaMode::Pareto => {
            let theta_seed = derive_seed(cfg.seed, Stream::ThetaProfile, replicate);
            let theta = ThetaProfile::pareto_default().materialize(cfg.n, theta_seed)?;
            let params = DcbmParams::null_model(theta, 1.0)?;
            params.sample_replicate_clamped(cfg.seed, replicate)
        }
    }
}

/// sup_x |F_n(x) - Phi(x)| over the sample points.
pub fn ks_to_standard_normal(sample: &[f64]) -> f64 {
    let mut xs = sample.to_vec();
    xs.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let n = xs.len() as f64;
    let mut d: f64 = 0.0;
    for (i, &x) in xs.iter().enumerate() {
        let phi = normal::cdf(x);
        let hi = (i as f64 + 1.0) / n - phi;
        let lo = phi - i as f64 / n;
        d = d.max(hi.abs()).max(lo.abs());
    }
    d
}
