//! Time-dependent Schrödinger propagation of the up eigenstate over one
//! field period, splitting the accumulated phase into its dynamical and
//! geometric parts.
//!
//! The geometric part approaches `γ₊` as the field turns slowly compared with
//! the Larmor frequency; at small ratios the state no longer follows the
//! field and the split breaks down.
//!
//! ```text
//! cargo run --release --example adiabatic_evolution
//! ```

use std::f64::consts::PI;

use spinphase::evolution::{exact_propagator, propagate};
use spinphase::geometric::{closed_form_gamma, phase_distance, PhaseConvention};
use spinphase::spin::{instantaneous_eigenstates, FieldConfig};

fn main() -> spinphase::Result<()> {
    let phi = PI / 3.0;
    let (gamma_plus, _) = closed_form_gamma(phi)?;
    println!("phi = pi/3, closed form gamma_plus = {gamma_plus:.6}\n");
    println!("{:>8} {:>12} {:>12} {:>12} {:>10} {:>10}", "ratio", "total", "dynamical", "geometric", "deviation", "fidelity");
    for ratio in [2.0, 10.0, 50.0, 200.0, 500.0, 2000.0] {
        let cfg = FieldConfig::with_ratio(phi, ratio)?;
        let (up, _) = instantaneous_eigenstates(&cfg, 0.0);
        let steps = (400.0 * ratio) as usize;
        let run = propagate(&up, &cfg, 0.0, cfg.period(), steps)?;
        let total = up.inner(&run.final_state).arg();
        let geometric = PhaseConvention::wrap(total - run.dynamical_phase);
        // How much of the state stayed on the up branch.
        let fidelity = up.inner(&run.final_state).norm_sqr();
        println!(
            "{ratio:>8} {total:>12.6} {:>12.4} {geometric:>12.6} {:>10.2e} {fidelity:>10.6}",
            run.dynamical_phase,
            phase_distance(geometric, gamma_plus)
        );
    }

    // The stepper against the rotating-frame solution.
    let cfg = FieldConfig::new(0.9, 1.0, 10.0)?;
    let (up, _) = instantaneous_eigenstates(&cfg, 0.0);
    let exact = exact_propagator(&cfg, cfg.period()).apply_state(&up);
    println!("\nstepper error against the exact propagator");
    for steps in [250, 500, 1000, 2000] {
        let run = propagate(&up, &cfg, 0.0, cfg.period(), steps)?;
        println!("{steps:>6} steps: {:.3e}", run.final_state.distance(&exact));
    }
    Ok(())
}
