//! Run all four tests on a small network given as edge-list text.
//!
//! ```bash
//! cargo run --example run_tests_on_graph
//! ```

use netcomm::graph::{Graph, IdMode};
use netcomm::stats::chi2::{Sidedness, chi2_test};
use netcomm::stats::est::est_test;
use netcomm::stats::scan::{DEFAULT_CSTAR, DEFAULT_SCAN_BUDGET, scan_test};
use netcomm::stats::sgnq::sgnq_test;

fn main() {
    // Two tight 5-cliques bridged by one edge, plus sparse chaff.
    let text = "\
n=16
0 1\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4
5 6\n5 7\n5 8\n5 9\n6 7\n6 8\n6 9\n7 8\n7 9\n8 9
4 5
10 11\n12 13\n14 15\n10 14\n11 13
";
    let g = Graph::from_edge_list(text, IdMode::Auto).expect("valid edge list");
    println!("graph: {} nodes, {} edges", g.node_count(), g.edge_count());

    let level = 0.05;
    let sgnq = sgnq_test(&g, level).unwrap();
    println!(
        "sgnq:  psi = {:+.4}  p = {:.4}  reject = {}",
        sgnq.standardized.unwrap(),
        sgnq.p_value.unwrap(),
        sgnq.reject
    );

    let chi2 = chi2_test(&g, level, Sidedness::OneSided).unwrap();
    println!(
        "chi2:  X = {:.4}  standardized = {:+.4}  reject = {}",
        chi2.statistic,
        chi2.standardized.unwrap(),
        chi2.reject
    );

    let (scan, maximizer) = scan_test(&g, 5, DEFAULT_CSTAR, DEFAULT_SCAN_BUDGET, level).unwrap();
    println!(
        "scan:  phi = {:.4}  tau = {:.4}  reject = {}  maximizer = {:?}",
        scan.statistic, scan.diagnostics["tau_hat"], scan.reject, maximizer
    );

    let est = est_test(&g, 4, 5, level).unwrap();
    println!(
        "est:   max edges on ≤4 nodes = {}  threshold = 5  reject = {}",
        est.statistic, est.reject
    );
}
