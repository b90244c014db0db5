//! Monte-Carlo power estimation, empirical threshold calibration, and
//! figure-style comparison sweeps.
//!
//! Every routine here is a pure function of (configuration, seed):
//! replicate r draws from an independent derived stream, results are
//! folded in replicate order, and parallel execution is bit-identical
//! to serial execution.

pub mod compare;
pub mod phase;

use rayon::prelude::*;
use thiserror::Error;

use crate::graph::Graph;
use crate::model::ModelError;
use crate::stats::StatsError;

#[derive(Debug, Error)]
pub enum ExperimentError {
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Stats(#[from] StatsError),
    #[error("{degenerate} of {reps} replicates were degenerate; aborting")]
    TooManyDegenerate { degenerate: usize, reps: usize },
    #[error("invalid experiment configuration: {0}")]
    BadConfig(String),
}

/// Monte-Carlo rejection rate with its binomial standard error.
#[derive(Debug, Clone, Copy)]
pub struct PowerEstimate {
    pub power: f64,
    pub stderr: f64,
    /// Replicates whose statistic was undefined (skipped).
    pub degenerate: usize,
    pub reps: usize,
}

/// Estimates the rejection probability of `test` over graphs drawn by
/// `sampler`. The sampler receives the replicate index and must derive
/// its own stream from it. Replicates where the test reports a
/// degenerate input are excluded; if they are the majority the run
/// aborts.
pub fn estimate_power<S, T>(
    sampler: S,
    test: T,
    reps: usize,
) -> Result<PowerEstimate, ExperimentError>
where
    S: Fn(u64) -> Result<Graph, ModelError> + Sync,
    T: Fn(&Graph) -> Result<bool, StatsError> + Sync,
{
    if reps == 0 {
        return Err(ExperimentError::BadConfig("reps must be positive".into()));
    }
    let outcomes: Vec<Result<Option<bool>, ExperimentError>> = (0..reps as u64)
        .into_par_iter()
        .map(|r| {
            let g = sampler(r)?;
            match test(&g) {
                Ok(reject) => Ok(Some(reject)),
                Err(StatsError::DegenerateInput(_)) => Ok(None),
                Err(e) => Err(ExperimentError::Stats(e)),
            }
        })
        .collect();

    let mut rejects = 0usize;
    let mut valid = 0usize;
    let mut degenerate = 0usize;
    for o in outcomes {
        match o? {
            Some(true) => {
                rejects += 1;
                valid += 1;
            }
            Some(false) => valid += 1,
            None => degenerate += 1,
        }
    }
    if 2 * degenerate > reps {
        return Err(ExperimentError::TooManyDegenerate { degenerate, reps });
    }
    let power = rejects as f64 / valid as f64;
    let stderr = (power * (1.0 - power) / valid as f64).sqrt();
    Ok(PowerEstimate {
        power,
        stderr,
        degenerate,
        reps,
    })
}

/// Empirical 1-kappa quantile of null statistic draws: the
/// ceil((1-kappa) m)-th order statistic (the conservative, higher
/// convention).
pub fn empirical_quantile(draws: &[f64], kappa: f64) -> f64 {
    assert!(!draws.is_empty(), "need at least one draw");
    let m = draws.len();
    let mut sorted = draws.to_vec();
    sorted.sort_by(|x, y| x.partial_cmp(y).unwrap());
    let rank = ((1.0 - kappa) * m as f64).ceil() as usize;
    sorted[rank.clamp(1, m) - 1]
}

/// Draws the null statistic `m_cal` times (replicate-indexed) and
/// returns the empirical threshold.
pub fn calibrate_empirical_threshold<F>(
    null_stat: F,
    kappa: f64,
    m_cal: usize,
) -> Result<f64, ExperimentError>
where
    F: Fn(u64) -> Result<f64, ExperimentError> + Sync,
{
    if m_cal == 0 {
        return Err(ExperimentError::BadConfig("m_cal must be positive".into()));
    }
    let draws: Vec<f64> = (0..m_cal as u64)
        .into_par_iter()
        .map(&null_stat)
        .collect::<Result<_, _>>()?;
    Ok(empirical_quantile(&draws, kappa))
}

/// One grid point of a power table. Optional fields are empty for
/// tests the experiment did not run or for infeasible grid points.
#[derive(Debug, Clone, serde::Serialize)]
pub struct PowerRow {
    pub a: f64,
    pub b: Option<f64>,
    pub c: Option<f64>,
    pub alpha: Option<f64>,
    pub power_sgnq: Option<f64>,
    pub se_sgnq: Option<f64>,
    pub power_chi2: Option<f64>,
    pub se_chi2: Option<f64>,
    pub power_scan: Option<f64>,
    pub se_scan: Option<f64>,
    pub note: String,
}

impl PowerRow {
    fn infeasible(a: f64, detail: String) -> Self {
        PowerRow {
            a,
            b: None,
            c: None,
            alpha: None,
            power_sgnq: None,
            se_sgnq: None,
            power_chi2: None,
            se_chi2: None,
            power_scan: None,
            se_scan: None,
            note: format!("infeasible: {detail}"),
        }
    }

    pub fn feasible(&self) -> bool {
        self.note.is_empty()
    }
}

/// A power sweep with the two theoretical threshold markers.
#[derive(Debug, Clone, serde::Serialize)]
pub struct PowerTable {
    pub rows: Vec<PowerRow>,
    pub a_stat_marker: Option<f64>,
    pub a_comp_marker: Option<f64>,
}

fn fmt_opt(v: Option<f64>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

impl PowerTable {
    /// Renders the table as CSV ('.' decimal, '\n' line endings, header
    /// always present). `meta` lines are echoed as leading '#' comments.
    pub fn to_csv(&self, meta: &[(String, String)]) -> String {
        let mut out = String::new();
        for (k, v) in meta {
            out.push_str(&format!("# {k}={v}\n"));
        }
        out.push_str(
            "a,b,c,alpha,power_sgnq,se_sgnq,power_chi2,se_chi2,power_scan,se_scan,a_stat_marker,a_comp_marker,note\n",
        );
        let stat = fmt_opt(self.a_stat_marker);
        let comp = fmt_opt(self.a_comp_marker);
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
                r.a,
                fmt_opt(r.b),
                fmt_opt(r.c),
                fmt_opt(r.alpha),
                fmt_opt(r.power_sgnq),
                fmt_opt(r.se_sgnq),
                fmt_opt(r.power_chi2),
                fmt_opt(r.se_chi2),
                fmt_opt(r.power_scan),
                fmt_opt(r.se_scan),
                stat,
                comp,
                r.note
            ));
        }
        out
    }
}

/// Evenly spaced inclusive grid.
pub fn linspace(lo: f64, hi: f64, points: usize) -> Vec<f64> {
    assert!(points >= 2 && hi >= lo);
    (0..points)
        .map(|i| lo + (hi - lo) * i as f64 / (points - 1) as f64)
        .collect()
}

/// Threshold-marker predicates from the scan comparison protocol.
///
/// The statistical marker is the first a with
/// (1/2) sqrt(N) (a-c)/sqrt(c(1-c)) > 1, the computational marker the
/// first a with N(a-c)/sqrt(nc) > 1.
pub mod markers {
    /// c held fixed: solve each inequality for a in closed form, or
    /// report absence if the root exceeds the feasible sweep end.
    pub fn fixed_c(n: usize, n_small: usize, c: f64, a_end: f64) -> (Option<f64>, Option<f64>) {
        let nn = n_small as f64;
        let a_stat = c + 2.0 * (c * (1.0 - c) / nn).sqrt();
        let a_comp = c + (n as f64 * c).sqrt() / nn;
        (
            (a_stat <= a_end).then_some(a_stat),
            (a_comp <= a_end).then_some(a_comp),
        )
    }

    /// General sweep: the first grid value satisfying each predicate,
    /// where c may vary with a (the fixed-alpha protocol).
    pub fn on_grid(
        n: usize,
        n_small: usize,
        grid: &[(f64, f64)], // (a, c) pairs
    ) -> (Option<f64>, Option<f64>) {
        let nn = n_small as f64;
        let mut stat = None;
        let mut comp = None;
        for &(a, c) in grid {
            if c <= 0.0 {
                continue;
            }
            if stat.is_none() && 0.5 * nn.sqrt() * (a - c) / (c * (1.0 - c)).sqrt() > 1.0 {
                stat = Some(a);
            }
            if comp.is_none() && nn * (a - c) / (n as f64 * c).sqrt() > 1.0 {
                comp = Some(a);
            }
        }
        (stat, comp)
    }
}
