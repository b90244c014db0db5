//! Signed scan statistic over vertex subsets.
//!
//! For a subset S the centered quadratic form is
//!
//! ```text
//! phi(S) = 1_S' (A - eta eta') 1_S = 2 edges(S) - (sum_{i in S} eta_i)^2
//! ```
//!
//! (the outer-product diagonal stays in, hence the closed form). The
//! exhaustive scan maximizes phi over all subsets of a given size, which
//! is exponential in general; [`exhaustive_scan`] enforces an evaluation
//! budget and uses a bitmask kernel for n <= 64. The oracle form
//! [`quadratic_form`] evaluates phi at a known subset and lower-bounds
//! the exhaustive value.
//!
//! The theory-side rejection threshold is Bennett-type:
//!
//! ```text
//! tau = C* gamma N^2 h^{-1}( C* N log(n e / N) / (gamma N^2) )
//! ```
//!
//! with h(u) = (1+u)log(1+u) - u and gamma the observed edge density.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::graph::Graph;
use crate::stats::{StatsError, TestOutcome, degree_profile};

/// Default cap on the number of subsets the exhaustive scan will visit.
pub const DEFAULT_SCAN_BUDGET: u128 = 10_000_000;

/// Default constant in front of the Bennett threshold.
pub const DEFAULT_CSTAR: f64 = 2.0;

/// Bennett's concentration function h(u) = (1+u)log(1+u) - u.
pub fn bennett_h(u: f64) -> f64 {
    assert!(u >= 0.0, "bennett_h needs u >= 0, got {u}");
    (1.0 + u) * (1.0 + u).ln() - u
}

/// Inverse of [`bennett_h`] on [0, inf), by bisection.
pub fn bennett_h_inv(y: f64) -> f64 {
    assert!(y >= 0.0, "bennett_h_inv needs y >= 0, got {y}");
    if y == 0.0 {
        return 0.0;
    }
    let mut hi = 1.0f64;
    while bennett_h(hi) < y {
        hi *= 2.0;
    }
    let mut lo = 0.0f64;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if bennett_h(mid) < y {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= 1e-13 * (1.0 + hi) {
            break;
        }
    }
    0.5 * (lo + hi)
}

/// Observed edge density: edges / C(n,2).
pub fn edge_density(g: &Graph) -> f64 {
    let n = g.node_count() as f64;
    if n < 2.0 {
        return 0.0;
    }
    g.edge_count() as f64 / (n * (n - 1.0) / 2.0)
}

/// Bennett-type scan threshold for subsets of size `n_small`.
pub fn bennett_threshold(g: &Graph, n_small: usize, c_star: f64) -> Result<f64, StatsError> {
    if g.edge_count() == 0 {
        return Err(StatsError::DegenerateInput(
            "scan threshold undefined on an empty graph".into(),
        ));
    }
    if n_small < 1 || n_small > g.node_count() {
        return Err(StatsError::BadParameter(format!(
            "subset size {n_small} out of range 1..={}",
            g.node_count()
        )));
    }
    let gamma = edge_density(g);
    let n = g.node_count() as f64;
    let nn = n_small as f64;
    let arg = c_star * nn * (n * std::f64::consts::E / nn).ln() / (gamma * nn * nn);
    Ok(c_star * gamma * nn * nn * bennett_h_inv(arg))
}

/// phi at a known subset (the "oracle" scan). Duplicate indices are not
/// allowed; an empty subset scores 0.
pub fn quadratic_form(g: &Graph, subset: &[usize]) -> Result<f64, StatsError> {
    if subset.is_empty() {
        return Ok(0.0);
    }
    let profile = degree_profile(g)?;
    let mut seen = vec![false; g.node_count()];
    let mut edges = 0usize;
    let mut eta_sum = 0.0f64;
    for &v in subset {
        if v >= g.node_count() {
            return Err(StatsError::BadParameter(format!(
                "subset node {v} out of range"
            )));
        }
        if seen[v] {
            return Err(StatsError::BadParameter(format!("subset repeats node {v}")));
        }
        for &u in g.neighbors(v) {
            if seen[u as usize] {
                edges += 1;
            }
        }
        seen[v] = true;
        eta_sum += profile.values[v];
    }
    Ok(2.0 * edges as f64 - eta_sum * eta_sum)
}

/// Result of the exhaustive scan: the maximum of phi over subsets of
/// the requested size and the lexicographically smallest maximizer.
#[derive(Debug, Clone)]
pub struct ScanMaximum {
    pub value: f64,
    pub subset: Vec<usize>,
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    acc
}

/// Maximizes phi over all subsets of exactly `n_small` nodes.
pub fn exhaustive_scan(g: &Graph, n_small: usize, budget: u128) -> Result<ScanMaximum, StatsError> {
    let n = g.node_count();
    if n_small == 0 {
        return Ok(ScanMaximum {
            value: 0.0,
            subset: Vec::new(),
        });
    }
    if n_small > n {
        return Err(StatsError::BadParameter(format!(
            "subset size {n_small} exceeds node count {n}"
        )));
    }
    let required = binomial(n, n_small);
    if required > budget {
        return Err(StatsError::BudgetExceeded { required, budget });
    }
    let eta = degree_profile(g)?.values;

    let best = if let Some(rows) = g.bitmask_rows() {
        // One task per choice of smallest subset element; inside a task
        // the recursion walks subsets in lexicographic order, so strict
        // improvement keeps the lexicographically smallest maximizer.
        (0..=(n - n_small))
            .into_par_iter()
            .map(|first| {
                let mut best = ScanMaximum {
                    value: f64::NEG_INFINITY,
                    subset: Vec::new(),
                };
                let mut chosen = Vec::with_capacity(n_small);
                chosen.push(first);
                scan_rec_bits(
                    &rows,
                    &eta,
                    n,
                    n_small,
                    first + 1,
                    1u64 << first,
                    0,
                    eta[first],
                    &mut chosen,
                    &mut best,
                );
                best
            })
            .reduce(
                || ScanMaximum {
                    value: f64::NEG_INFINITY,
                    subset: Vec::new(),
                },
                better_of,
            )
    } else {
        let mut best = ScanMaximum {
            value: f64::NEG_INFINITY,
            subset: Vec::new(),
        };
        let mut in_set = vec![false; n];
        let mut chosen = Vec::with_capacity(n_small);
        scan_rec_general(
            g,
            &eta,
            n_small,
            0,
            0,
            0.0,
            &mut in_set,
            &mut chosen,
            &mut best,
        );
        best
    };
    Ok(best)
}

fn better_of(a: ScanMaximum, b: ScanMaximum) -> ScanMaximum {
    if b.value > a.value
        || (b.value == a.value
            && !b.subset.is_empty()
            && (a.subset.is_empty() || b.subset < a.subset))
    {
        b
    } else {
        a
    }
}

#[allow(clippy::too_many_arguments)]
fn scan_rec_bits(
    rows: &[u64],
    eta: &[f64],
    n: usize,
    n_small: usize,
    next: usize,
    mask: u64,
    edges: u32,
    eta_sum: f64,
    chosen: &mut Vec<usize>,
    best: &mut ScanMaximum,
) {
    if chosen.len() == n_small {
        let value = 2.0 * edges as f64 - eta_sum * eta_sum;
        if value > best.value {
            best.value = value;
            best.subset = chosen.clone();
        }
        return;
    }
    let remaining = n_small - chosen.len();
    for v in next..=(n - remaining) {
        let gained = (rows[v] & mask).count_ones();
        chosen.push(v);
        scan_rec_bits(
            rows,
            eta,
            n,
            n_small,
            v + 1,
            mask | (1u64 << v),
            edges + gained,
            eta_sum + eta[v],
            chosen,
            best,
        );
        chosen.pop();
    }
}

#[allow(clippy::too_many_arguments)]
fn scan_rec_general(
    g: &Graph,
    eta: &[f64],
    n_small: usize,
    next: usize,
    edges: u32,
    eta_sum: f64,
    in_set: &mut Vec<bool>,
    chosen: &mut Vec<usize>,
    best: &mut ScanMaximum,
) {
    if chosen.len() == n_small {
        let value = 2.0 * edges as f64 - eta_sum * eta_sum;
        if value > best.value {
            best.value = value;
            best.subset = chosen.clone();
        }
        return;
    }
    let n = g.node_count();
    let remaining = n_small - chosen.len();
    for v in next..=(n - remaining) {
        let gained = g
            .neighbors(v)
            .iter()
            .filter(|&&u| in_set[u as usize])
            .count() as u32;
        in_set[v] = true;
        chosen.push(v);
        scan_rec_general(
            g,
            eta,
            n_small,
            v + 1,
            edges + gained,
            eta_sum + eta[v],
            in_set,
            chosen,
            best,
        );
        chosen.pop();
        in_set[v] = false;
    }
}

/// Exhaustive scan wrapped as a test: rejects when the maximum exceeds
/// the Bennett threshold. Returns the outcome and the maximizer.
pub fn scan_test(
    g: &Graph,
    n_small: usize,
    c_star: f64,
    budget: u128,
    level: f64,
) -> Result<(TestOutcome, Vec<usize>), StatsError> {
    let max = exhaustive_scan(g, n_small, budget)?;
    let tau = bennett_threshold(g, n_small, c_star)?;
    let mut diagnostics = BTreeMap::new();
    diagnostics.insert("gamma_hat".to_string(), edge_density(g));
    diagnostics.insert("tau_hat".to_string(), tau);
    diagnostics.insert("subset_size".to_string(), n_small as f64);
    Ok((
        TestOutcome {
            test: "scan".to_string(),
            statistic: max.value,
            standardized: None,
            p_value: None,
            reject: max.value > tau,
            level,
            diagnostics,
        },
        max.subset,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{self, Graph};
    use crate::rng::{Stream, replicate_rng};
    use rand::RngExt;

    #[test]
    fn bennett_h_known_values() {
        assert_eq!(bennett_h(0.0), 0.0);
        let e1 = std::f64::consts::E - 1.0;
        assert!((bennett_h(e1) - 1.0).abs() < 1e-14);
        assert!((bennett_h(1.0) - (2.0 * 2f64.ln() - 1.0)).abs() < 1e-14);
        assert!((bennett_h_inv(1.0) - e1).abs() < 1e-10);
    }

    #[test]
    fn bennett_round_trip() {
        for i in 0..=100 {
            let u = i as f64;
            let back = bennett_h_inv(bennett_h(u));
            assert!((back - u).abs() <= 1e-10 * (1.0 + u), "u={u} back={back}");
        }
    }

    #[test]
    fn bennett_h_strictly_increasing() {
        let mut prev = -1.0;
        for i in 0..1000 {
            let v = bennett_h(i as f64 * 0.1);
            assert!(v > prev || (i == 0 && v == 0.0));
            prev = v;
        }
    }

    #[test]
    fn k4_pairs_tie_at_minus_one() {
        let g = graph::complete(4);
        let max = exhaustive_scan(&g, 2, DEFAULT_SCAN_BUDGET).unwrap();
        assert!((max.value + 1.0).abs() < 1e-12, "value = {}", max.value);
        assert_eq!(max.subset, vec![0, 1], "lexicographically first pair");
        assert!((quadratic_form(&g, &[0, 1]).unwrap() + 1.0).abs() < 1e-12);
    }

    #[test]
    fn empty_subset_scores_zero() {
        let g = graph::complete(4);
        assert_eq!(quadratic_form(&g, &[]).unwrap(), 0.0);
        let max = exhaustive_scan(&g, 0, DEFAULT_SCAN_BUDGET).unwrap();
        assert_eq!(max.value, 0.0);
    }

    #[test]
    fn oracle_never_exceeds_exhaustive() {
        let mut rng = replicate_rng(3, Stream::Sample, 0);
        let n = 12;
        let mut edges = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                if rng.random::<f64>() < 0.3 {
                    edges.push((i, j));
                }
            }
        }
        let g = Graph::from_edges(n, &edges).unwrap();
        let max = exhaustive_scan(&g, 4, DEFAULT_SCAN_BUDGET).unwrap();
        for s in [[0usize, 1, 2, 3], [2, 5, 7, 11], [8, 9, 10, 11]] {
            let v = quadratic_form(&g, &s).unwrap();
            assert!(v <= max.value + 1e-12);
        }
        assert!((quadratic_form(&g, &max.subset).unwrap() - max.value).abs() < 1e-12);
    }

    #[test]
    fn budget_enforced() {
        let g = graph::complete(40);
        let err = exhaustive_scan(&g, 20, 1000).unwrap_err();
        assert!(matches!(err, StatsError::BudgetExceeded { .. }));
    }

    #[test]
    fn planted_clique_recovered() {
        // K5 planted in sparse noise. The background must be large
        // enough that the plant does not dominate the degree profile:
        // the (sum eta)^2 penalty discounts subsets that carry most of
        // the graph's degree mass, so in a tiny graph (say n = 20) the
        // maximizer often prefers low-profile noise pockets instead.
        let mut hits = 0;
        let reps = 12;
        for rep in 0..reps {
            let mut rng = replicate_rng(42, Stream::Sample, rep);
            let n = 40;
            let mut edges = Vec::new();
            for i in 0..5usize {
                for j in (i + 1)..5 {
                    edges.push((i, j));
                }
            }
            for i in 0..n {
                for j in (i + 1)..n {
                    if (i >= 5 || j >= 5) && rng.random::<f64>() < 0.05 {
                        edges.push((i, j));
                    }
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            let max = exhaustive_scan(&g, 5, DEFAULT_SCAN_BUDGET).unwrap();
            if max.subset == vec![0, 1, 2, 3, 4] {
                hits += 1;
            }
        }
        assert!(hits >= reps - 1, "plant recovered only {hits}/{reps} times");
    }

    #[test]
    fn threshold_formula_matches_direct_evaluation() {
        // gamma = 0.2 by construction: 99 edges on n=100 would not be
        // 0.2, so instead check against the formula pieces directly.
        let g = graph::cycle(100);
        let tau = bennett_threshold(&g, 10, 1.0).unwrap();
        let gamma = edge_density(&g);
        let arg = 10.0 * (10.0 * std::f64::consts::E).ln() / (gamma * 100.0);
        let want = gamma * 100.0 * bennett_h_inv(arg);
        assert!((tau - want).abs() <= 1e-10 * want.abs());
    }

    #[test]
    fn threshold_well_defined_at_full_subset() {
        let g = graph::complete(12);
        let tau = bennett_threshold(&g, 12, 1.0).unwrap();
        assert!(tau.is_finite() && tau >= 0.0);
    }

    #[test]
    fn threshold_monotone_in_density() {
        // Denser graphs of the same size raise the threshold.
        let sparse = graph::cycle(30);
        let denser = graph::complete(30);
        let a = bennett_threshold(&sparse, 5, 2.0).unwrap();
        let b = bennett_threshold(&denser, 5, 2.0).unwrap();
        assert!(b > a);
    }

    #[test]
    fn scan_value_invariant_under_relabeling() {
        let g = graph::path(9);
        let perm: Vec<usize> = (0..9).map(|i| (i * 4 + 2) % 9).collect();
        let h = graph::relabel(&g, &perm);
        let a = exhaustive_scan(&g, 3, DEFAULT_SCAN_BUDGET).unwrap();
        let b = exhaustive_scan(&h, 3, DEFAULT_SCAN_BUDGET).unwrap();
        assert_eq!(a.value, b.value);
    }

    #[test]
    fn general_path_agrees_with_bitmask_path() {
        // Same 30-node graph evaluated with and without the bitmask
        // kernel (forced by a 70-node padded copy sharing the subgraph).
        let mut rng = replicate_rng(8, Stream::Sample, 1);
        let mut edges = Vec::new();
        for i in 0..30usize {
            for j in (i + 1)..30 {
                if rng.random::<f64>() < 0.2 {
                    edges.push((i, j));
                }
            }
        }
        let g = Graph::from_edges(30, &edges).unwrap();
        let padded = Graph::from_edges(70, &edges).unwrap();
        let a = exhaustive_scan(&g, 3, DEFAULT_SCAN_BUDGET).unwrap();
        // Padded isolated nodes have eta = 0; subsets using them score
        // 2*edges(S) of the used part only, so the maximum agrees as
        // long as the best subset is inside the first 30 nodes.
        let b = exhaustive_scan(&padded, 3, DEFAULT_SCAN_BUDGET).unwrap();
        assert!((a.value - b.value).abs() < 1e-12);
        assert_eq!(a.subset, b.subset);
    }
}
