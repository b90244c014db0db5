//! Timing harness for the fast quadrilateral kernel on sparse graphs.
//! The cost is dominated by the wedge pass, so doubling n at fixed mean
//! degree should roughly quadruple the time.
//!
//! ```bash
//! cargo run --release --example sgnq_scaling
//! ```

use netcomm::model::erdos_renyi;
use netcomm::stats::sgnq::quad_sum_fast;
use std::time::Instant;

fn main() {
    let mean_degree = 10.0;
    println!("    n   edges      Q (fast)      time");
    for n in [500usize, 1000, 2000, 4000] {
        let alpha = mean_degree / n as f64;
        let g = erdos_renyi(n, alpha, 99, 0).unwrap();
        let start = Instant::now();
        let q = quad_sum_fast(&g).unwrap();
        let dt = start.elapsed();
        println!("{n:>6}  {:>6}  {q:>12.4}  {dt:>9.2?}", g.edge_count());
    }
}
