//! The economic scan test: choose the (v, e) pair for a parameter
//! regime, then test sampled networks with it.
//!
//! ```bash
//! cargo run --example economic_scan
//! ```

use netcomm::model::{TwoBlockSpec, erdos_renyi};
use netcomm::stats::est::{choose_ve, est_test, max_edges_subgraph};

fn main() {
    // Exponent regime: N = n^(1-beta), a = n^-omega, c = n^-delta.
    let (omega, delta, beta) = (0.3, 0.8, 0.5);
    let (v, e) = choose_ve(omega, delta, beta, 8).unwrap();
    println!(
        "regime (omega={omega}, delta={delta}, beta={beta}) -> scan v={v} nodes, reject at {e} edges"
    );

    // A null draw and a degree-matched planted draw at a concrete
    // scale: same expected degrees, very different densest subgraphs.
    let n = 200;
    let alpha = 0.03;
    let null = erdos_renyi(n, alpha, 3, 0).unwrap();
    let alt = TwoBlockSpec::from_alpha(n, 8, 0.7, alpha)
        .unwrap()
        .to_params(3)
        .unwrap()
        .sample_replicate(3, 1)
        .unwrap();

    for (label, g) in [("null", &null), ("planted", &alt)] {
        let stat = max_edges_subgraph(g, 4).unwrap();
        let outcome = est_test(g, 4, 6, 0.05).unwrap();
        println!(
            "{label}: mean degree {:.1}; densest 4-subgraph has {stat} edges; est(v=4, e=6) rejects: {}",
            g.mean_degree(),
            outcome.reject
        );
    }
}
