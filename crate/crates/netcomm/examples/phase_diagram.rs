//! Phase-diagram classification: tile the (beta, gamma) plane into the
//! impossible / computationally-infeasible / SgnQ-powerful / open
//! regions and print a coarse ASCII rendering plus region counts.
//!
//! ```bash
//! cargo run --example phase_diagram
//! ```

use netcomm::experiments::phase::{PhasePoint, RegionLabel, classify, classify_grid};
use std::collections::BTreeMap;

fn main() {
    // Coarse ASCII map: beta left-to-right, gamma top-to-bottom.
    println!("gamma\\beta  0.05 ............................ 0.95");
    let rows = 13;
    let cols = 31;
    for j in (0..rows).rev() {
        let gamma = -0.55 + 1.1 * j as f64 / (rows - 1) as f64;
        let mut line = String::new();
        for i in 0..cols {
            let beta = 0.05 + 0.9 * i as f64 / (cols - 1) as f64;
            let ch = match classify(PhasePoint { beta, gamma }) {
                RegionLabel::Impossible => 'X',
                RegionLabel::CompInfeasible => 'c',
                RegionLabel::SgnqPowerful => 's',
                RegionLabel::OpenModerate => 'o',
                RegionLabel::Boundary => '+',
            };
            line.push(ch);
        }
        println!("{gamma:+.2}      {line}");
    }
    println!();
    println!("X impossible, c computationally infeasible, s SgnQ powerful, o open");

    let grid = classify_grid((0.005, 0.995), (-0.6, 0.6), 100);
    let mut counts: BTreeMap<&'static str, usize> = BTreeMap::new();
    for (_, label) in &grid {
        *counts.entry(label.as_str()).or_default() += 1;
    }
    println!("\n100x100 grid region counts: {counts:?}");
}
