//! Berry phase of a spin-1/2 following a field that precesses on a cone.
//!
//! Traces both instantaneous eigenstates over one period, evaluates the
//! discrete Wilson loop at increasing resolution and compares it with
//! `γ± = −π(1 ∓ cos φ)`.
//!
//! ```text
//! cargo run --example berry_phase_wilson_loop
//! ```

use std::f64::consts::PI;

use spinphase::geometric::{closed_form_gamma, eigenstate_cycle, phase_distance, wilson_loop_phase, Branch};
use spinphase::spin::FieldConfig;

fn main() -> spinphase::Result<()> {
    println!("{:>8} {:>14} {:>14} {:>14} {:>10}", "phi", "gamma_plus", "wilson_up", "wilson_down", "err");
    for k in 1..8 {
        let phi = PI * k as f64 / 8.0;
        let cfg = FieldConfig::with_ratio(phi, 100.0)?;
        let (gp, gm) = closed_form_gamma(phi)?;
        let up = wilson_loop_phase(&eigenstate_cycle(&cfg, Branch::Up, 10_000), true)?;
        let down = wilson_loop_phase(&eigenstate_cycle(&cfg, Branch::Down, 10_000), true)?;
        let err = phase_distance(up, gp).max(phase_distance(down, gm));
        println!("{phi:>8.4} {gp:>14.10} {up:>14.10} {down:>14.10} {err:>10.2e}");
    }

    // The discretisation error falls off as 1/N².
    let cfg = FieldConfig::with_ratio(PI / 3.0, 100.0)?;
    let (gp, _) = closed_form_gamma(PI / 3.0)?;
    println!("\nconvergence at phi = pi/3");
    for samples in [16, 64, 256, 1024, 4096] {
        let g = wilson_loop_phase(&eigenstate_cycle(&cfg, Branch::Up, samples), true)?;
        println!("{samples:>6} samples: error {:.3e}", phase_distance(g, gp));
    }
    Ok(())
}
