//! Concurrence of the two-spin state `α|↓↓⟩ + β|↑↑⟩` whose coefficients are
//! fixed by the field tilt, next to the Berry phase factor `|b|`.
//!
//! The raw-coefficient concurrence `2|α||β|` equals `|b| = (1 − cos φ)/2`.
//! The Wootters concurrence of the normalized state is smaller except at
//! `φ = 0` and `φ = π`; both are printed.
//!
//! ```text
//! cargo run --example concurrence_vs_phi
//! ```

use std::f64::consts::PI;

use spinphase::entanglement::{coefficients_from_phi, concurrence_from_phi, spin_model_catalog};

fn main() -> spinphase::Result<()> {
    println!("{:>8} {:>10} {:>10} {:>12} {:>10} {:>10}", "phi", "alpha", "beta", "C = |b|", "Wootters", "M");
    for k in 0..=12 {
        let phi = PI * k as f64 / 12.0;
        let pair = coefficients_from_phi(phi)?;
        let report = concurrence_from_phi(phi)?;
        println!(
            "{phi:>8.4} {:>10.6} {:>10.6} {:>12.8} {:>10.6} {:>10.6}",
            pair.alpha.re,
            pair.beta.re,
            report.paper_c,
            report.wootters_c,
            pair.m()
        );
    }

    println!("\nspin models at the fixed points");
    for entry in spin_model_catalog() {
        println!("  phi = {:.4}  C = {}  {}", entry.phi, entry.concurrence, entry.label);
    }
    Ok(())
}
