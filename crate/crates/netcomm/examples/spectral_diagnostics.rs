//! Spectral signal diagnostics for a two-block model: the centered
//! matrix, its closed-form nonzero eigenvalue, and balance vectors.
//!
//! ```bash
//! cargo run --example spectral_diagnostics
//! ```

use netcomm::model::spectral::{
    balance_vectors, describe, sbm_eigenvalues, tilde_lambda_two_block, tilde_omega,
};
use netcomm::model::{ThetaProfile, TwoBlockSpec};

fn main() {
    let spec = TwoBlockSpec::new(100, 10, 0.5, 0.1).unwrap();
    let params = spec.to_params(0).unwrap();

    let (d, g) = balance_vectors(&params);
    println!("balance vectors: d = {d:?}, g = {g:?}");

    let tl = tilde_lambda_two_block(&params).unwrap();
    let omega = params.omega().unwrap();
    let centered = tilde_omega(&omega).unwrap();
    println!(
        "tilde lambda (closed form) = {tl}   trace of centered matrix = {:.12}",
        centered.trace()
    );

    let (l1, l2) = sbm_eigenvalues(&spec).unwrap();
    println!("SBM eigenvalues: lambda1 = {l1}, lambda2 = {l2} (lambda2 equals tilde lambda)");

    // Heterogeneous-degree variant of the same block structure.
    let hetero = TwoBlockSpec::new(100, 10, 0.3, 0.08)
        .unwrap()
        .with_theta(ThetaProfile::Explicit(
            (0..100).map(|i| 0.6 + 0.8 * i as f64 / 99.0).collect(),
        ));
    let summary = describe(&hetero, 0).unwrap();
    println!(
        "heterogeneous model: b = {:.5}, alpha = {:.5}, lambda1 = {:.4}, tilde lambda = {:.4}",
        summary.b, summary.alpha, summary.lambda1, summary.tilde_lambda
    );
    println!("  d = {:?}", summary.d);
    println!("  g = {:?}", summary.g);
}
