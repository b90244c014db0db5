//! Null-distribution check: sample many one-community networks and
//! compare the standardized SgnQ values against N(0,1).
//!
//! ```bash
//! cargo run --release --example null_calibration
//! ```

use netcomm::experiments::compare::{NullCheckConfig, NullThetaMode, null_calibration};

fn main() {
    for (label, mode) in [
        ("Erdos-Renyi(0.1)", NullThetaMode::Constant { alpha: 0.1 }),
        ("Pareto degree profile", NullThetaMode::Pareto),
    ] {
        let cfg = NullCheckConfig {
            mode,
            n: 300,
            reps: 120,
            seed: 1729,
        };
        let s = null_calibration(&cfg).unwrap();
        println!(
            "{label}: mean = {:+.3}, variance = {:.3}, KS distance = {:.3} ({} replicates)",
            s.mean,
            s.variance.unwrap(),
            s.ks_distance,
            s.valid
        );
    }
    println!();
    println!("The constant-degree null tracks N(0,1) closely; dense heavy-tailed");
    println!("profiles deflate the statistic (the plug-in variance is a sparse-");
    println!("regime approximation), which is visible in the second row.");
}
