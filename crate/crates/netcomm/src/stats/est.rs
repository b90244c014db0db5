//! Economic scan test: densest small subgraph by exhaustive search
//! with branch-and-bound pruning.
//!
//! The statistic is the maximum number of edges induced by any subset
//! of at most `v` nodes (edges counted once per unordered pair), and
//! the test rejects when that maximum reaches `e`. Keeping `v` bounded
//! (here <= 8) keeps the search polynomial in n.

use std::collections::BTreeMap;

use crate::graph::Graph;
use crate::stats::{StatsError, TestOutcome};

/// Largest admissible subset size for [`max_edges_subgraph`].
pub const MAX_SUBSET_SIZE: usize = 8;

/// Maximum edge count among induced subgraphs on at most `v` nodes.
pub fn max_edges_subgraph(g: &Graph, v: usize) -> Result<usize, StatsError> {
    if !(1..=MAX_SUBSET_SIZE).contains(&v) {
        return Err(StatsError::BadParameter(format!(
            "subset size {v} out of range 1..={MAX_SUBSET_SIZE}"
        )));
    }
    let n = g.node_count();
    let v = v.min(n);
    if v < 2 || g.edge_count() == 0 {
        return Ok(0);
    }
    // Candidates in degree-descending order; ties by index for
    // determinism. Isolated nodes can never help.
    let mut order: Vec<usize> = (0..n).filter(|&i| g.degree(i) > 0).collect();
    order.sort_by_key(|&i| (std::cmp::Reverse(g.degree(i)), i));
    let degs: Vec<usize> = order.iter().map(|&i| g.degree(i)).collect();

    let mut in_set = vec![false; n];
    let mut best = 0usize;
    branch(g, &order, &degs, v, 0, 0, 0, &mut in_set, &mut best);
    Ok(best)
}

#[allow(clippy::too_many_arguments)]
fn branch(
    g: &Graph,
    order: &[usize],
    degs: &[usize],
    v: usize,
    idx: usize,
    size: usize,
    edges: usize,
    in_set: &mut Vec<bool>,
    best: &mut usize,
) {
    if edges > *best {
        *best = edges;
    }
    if size == v || idx == order.len() {
        return;
    }
    let slots = v - size;
    // Upper bound on what the remaining slots can add: all edges among
    // the new nodes plus each new node's degree capped by the final
    // subset size.
    let mut bound = edges + slots * (slots - 1) / 2;
    for d in degs.iter().skip(idx).take(slots) {
        bound += (*d).min(size + slots - 1);
    }
    if bound <= *best {
        return;
    }
    // Take order[idx].
    let node = order[idx];
    let gained = g
        .neighbors(node)
        .iter()
        .filter(|&&u| in_set[u as usize])
        .count();
    in_set[node] = true;
    branch(
        g,
        order,
        degs,
        v,
        idx + 1,
        size + 1,
        edges + gained,
        in_set,
        best,
    );
    in_set[node] = false;
    // Skip order[idx].
    branch(g, order, degs, v, idx + 1, size, edges, in_set, best);
}

/// EST decision: reject iff the max edge count reaches `e`.
pub fn est_test(g: &Graph, v: usize, e: usize, level: f64) -> Result<TestOutcome, StatsError> {
    if e < 1 {
        return Err(StatsError::BadParameter(
            "edge threshold e must be positive".into(),
        ));
    }
    let stat = max_edges_subgraph(g, v)?;
    let mut diagnostics = BTreeMap::new();
    diagnostics.insert("v".to_string(), v as f64);
    diagnostics.insert("e".to_string(), e as f64);
    Ok(TestOutcome {
        test: "est".to_string(),
        statistic: stat as f64,
        standardized: None,
        p_value: None,
        reject: stat >= e,
        level,
        diagnostics,
    })
}

/// Picks the smallest coprime pair (v, e) whose ratio lies strictly
/// inside (omega/(1-beta), delta); this is the fraction of minimal
/// denominator, found by Stern-Brocot descent.
pub fn choose_ve(
    omega: f64,
    delta: f64,
    beta: f64,
    v_cap: usize,
) -> Result<(usize, usize), StatsError> {
    if !(0.0 < omega && omega < delta && delta < 1.0 && (0.0..1.0).contains(&beta)) {
        return Err(StatsError::BadParameter(format!(
            "need 0 < omega < delta < 1 and beta in [0,1); got omega={omega}, delta={delta}, beta={beta}"
        )));
    }
    let lo = omega / (1.0 - beta);
    let hi = delta;
    if lo >= hi {
        return Err(StatsError::NoFeasiblePair { lo, hi, v_cap });
    }
    // Stern-Brocot: mediants descend to the minimal-denominator
    // fraction in the open interval; numerators only grow, so v_cap
    // gives a clean stopping rule.
    let (mut a, mut b) = (0u64, 1u64);
    let (mut c, mut d) = (1u64, 0u64);
    loop {
        let p = a + c;
        let q = b + d;
        if p as usize > v_cap {
            return Err(StatsError::NoFeasiblePair { lo, hi, v_cap });
        }
        let x = p as f64 / q as f64;
        if x <= lo {
            (a, b) = (p, q);
        } else if x >= hi {
            (c, d) = (p, q);
        } else {
            return Ok((p as usize, q as usize));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{self, Graph};

    #[test]
    fn triangle_in_k4() {
        assert_eq!(max_edges_subgraph(&graph::complete(4), 3).unwrap(), 3);
    }

    #[test]
    fn empty_graph_scores_zero() {
        let g = Graph::from_edges(6, &[]).unwrap();
        assert_eq!(max_edges_subgraph(&g, 4).unwrap(), 0);
    }

    #[test]
    fn path_p4_three_nodes() {
        assert_eq!(max_edges_subgraph(&graph::path(4), 3).unwrap(), 2);
    }

    #[test]
    fn v_out_of_range_rejected() {
        let g = graph::complete(4);
        assert!(max_edges_subgraph(&g, 0).is_err());
        assert!(max_edges_subgraph(&g, 9).is_err());
    }

    #[test]
    fn monotone_in_v_and_bounded() {
        let g = Graph::from_edges(
            10,
            &[
                (0, 1),
                (1, 2),
                (2, 0),
                (2, 3),
                (3, 4),
                (4, 5),
                (5, 6),
                (6, 2),
                (7, 8),
            ],
        )
        .unwrap();
        let mut prev = 0;
        for v in 1..=8 {
            let cur = max_edges_subgraph(&g, v).unwrap();
            assert!(cur >= prev, "not monotone at v={v}");
            assert!(cur <= v * (v - 1) / 2);
            prev = cur;
        }
    }

    fn next_combination(subset: &mut [usize], n: usize) -> bool {
        let k = subset.len();
        let mut i = k;
        while i > 0 {
            i -= 1;
            if subset[i] != i + n - k {
                subset[i] += 1;
                for j in (i + 1)..k {
                    subset[j] = subset[j - 1] + 1;
                }
                return true;
            }
        }
        false
    }

    #[test]
    fn matches_plain_enumeration_on_random_graph() {
        use crate::rng::{Stream, replicate_rng};
        use rand::RngExt;
        let mut rng = replicate_rng(17, Stream::Sample, 0);
        let n = 14;
        let mut edges = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                if rng.random::<f64>() < 0.35 {
                    edges.push((i, j));
                }
            }
        }
        let g = Graph::from_edges(n, &edges).unwrap();
        for v in 2..=5usize {
            let mut want = 0usize;
            let mut subset: Vec<usize> = (0..v).collect();
            loop {
                let mut cnt = 0;
                for (ai, &a) in subset.iter().enumerate() {
                    for &b in subset.iter().skip(ai + 1) {
                        if g.has_edge(a, b) {
                            cnt += 1;
                        }
                    }
                }
                want = want.max(cnt);
                if !next_combination(&mut subset, n) {
                    break;
                }
            }
            assert_eq!(max_edges_subgraph(&g, v).unwrap(), want, "v={v}");
        }
    }

    #[test]
    fn est_test_k4_rejects_at_triangle() {
        let out = est_test(&graph::complete(4), 3, 3, 0.05).unwrap();
        assert!(out.reject);
        let out = est_test(&graph::path(4), 3, 3, 0.05).unwrap();
        assert!(!out.reject);
    }

    #[test]
    fn choose_ve_spec_interval() {
        // (0.6, 0.8) -> 2/3
        assert_eq!(choose_ve(0.3, 0.8, 0.5, 8).unwrap(), (2, 3));
    }

    #[test]
    fn choose_ve_infeasible_interval() {
        // omega/(1-beta) = 0.9 >= delta = 0.5
        assert!(matches!(
            choose_ve(0.45, 0.5, 0.5, 8),
            Err(StatsError::NoFeasiblePair { .. })
        ));
    }

    #[test]
    fn choose_ve_respects_cap() {
        // A very narrow interval forces large numerators.
        let err = choose_ve(0.500001, 0.500002, 0.0, 8).unwrap_err();
        assert!(matches!(err, StatsError::NoFeasiblePair { .. }));
    }

    #[test]
    fn est_invariant_under_relabeling() {
        let g = graph::path(7);
        let perm = [6usize, 4, 2, 0, 1, 3, 5];
        let h = graph::relabel(&g, &perm);
        assert_eq!(
            max_edges_subgraph(&g, 4).unwrap(),
            max_edges_subgraph(&h, 4).unwrap()
        );
    }
}
