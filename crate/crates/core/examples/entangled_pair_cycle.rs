//! Geometric phase of an entangled pair whose spins both follow the field.
//!
//! The Wilson loop along `(α|ψ↓ψ↓⟩ + β|ψ↑ψ↑⟩)/√M` equals the weighted sum
//! `2(|α|²γ₋ + |β|²γ₊)/M`, while the Pancharatnam phase of the cyclically
//! evolved state reads off `arg⟨ψ(0)|ψ(τ)⟩`. Local evolution leaves the
//! concurrence unchanged.
//!
//! ```text
//! cargo run --example entangled_pair_cycle
//! ```

use std::f64::consts::PI;

use spinphase::entanglement::wootters_concurrence;
use spinphase::evolution::{cyclic_evolve_pair, pair_state};
use spinphase::geometric::{
    closed_form_gamma, entangled_cycle, pancharatnam_overlap, phase_distance, wilson_loop_phase,
};
use spinphase::spin::FieldConfig;
use spinphase::C64;

fn main() -> spinphase::Result<()> {
    let cases = [
        (C64::new(1.0, 0.0), C64::new(0.0, 0.0), PI / 3.0),
        (C64::new(1.0, 0.0), C64::new(1.0, 0.0), PI / 3.0),
        (C64::new(0.6, 0.2), C64::new(-0.3, 0.7), 1.1),
        (C64::new(0.2, 0.0), C64::new(0.0, 0.9), 2.5),
    ];
    for (alpha, beta, phi) in cases {
        let cfg = FieldConfig::with_ratio(phi, 100.0)?;
        let (gp, gm) = closed_form_gamma(phi)?;
        let m = alpha.norm_sqr() + beta.norm_sqr();
        let weighted = 2.0 * (alpha.norm_sqr() * gm + beta.norm_sqr() * gp) / m;
        let wilson = wilson_loop_phase(&entangled_cycle(&cfg, alpha, beta, 10_000)?, true)?;

        let before = pair_state(alpha, beta, &cfg)?;
        let after = cyclic_evolve_pair(alpha, beta, &cfg)?;
        println!("alpha = {alpha:.2}, beta = {beta:.2}, phi = {phi:.4}");
        println!(
            "  Wilson loop {wilson:.8}, weighted sum {weighted:.8} (mod 2pi diff {:.1e})",
            phase_distance(wilson, weighted)
        );
        match pancharatnam_overlap(alpha, beta, gp) {
            Ok((_, record)) => println!(
                "  Pancharatnam phase {:.8}, visibility {:.6}",
                record.total, record.visibility
            ),
            Err(e) => println!("  Pancharatnam phase undefined: {e}"),
        }
        println!(
            "  concurrence {:.12} -> {:.12}\n",
            wootters_concurrence(&before)?,
            wootters_concurrence(&after)?
        );
    }
    Ok(())
}
