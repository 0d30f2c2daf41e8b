//! Wootters concurrence for pure and mixed two-qubit states.
//!
//! Checks the Bell basis, a few random pure states against the closed form
//! `2|a₀a₃ − a₁a₂|`, and the Werner family `p|ψ⁻⟩⟨ψ⁻| + (1 − p)I/4`, whose
//! concurrence is `max(0, (3p − 1)/2)`.
//!
//! ```text
//! cargo run --example wootters_oracle
//! ```

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use spinphase::commands::sampling::random_state;
use spinphase::entanglement::{general_concurrence, spin_flip_spectrum, wootters_concurrence, wootters_concurrence_mixed};
use spinphase::linalg::{DensityMatrix, Operator, StateVector};
use spinphase::C64;

fn main() -> spinphase::Result<()> {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let (z, p, m) = (C64::new(0.0, 0.0), C64::new(h, 0.0), C64::new(-h, 0.0));
    for (name, amps) in [
        ("phi+", [p, z, z, p]),
        ("phi-", [p, z, z, m]),
        ("psi+", [z, p, p, z]),
        ("psi-", [z, p, m, z]),
    ] {
        let c = wootters_concurrence(&StateVector::new(amps.to_vec())?)?;
        println!("{name}: C = {c:.15}");
    }

    let mut rng = ChaCha8Rng::seed_from_u64(3);
    println!("\nrandom pure states");
    for _ in 0..5 {
        let s = random_state(&mut rng, 4);
        let w = wootters_concurrence(&s)?;
        let g = general_concurrence(s.amplitudes())?;
        println!("  Wootters {w:.12}  closed form {g:.12}  diff {:.1e}", (w - g).abs());
    }

    println!("\nWerner states");
    let singlet = [z, p, m, z];
    let projector = Operator::outer(&singlet, &singlet);
    let mixed = Operator::identity(4).scale(C64::new(0.25, 0.0));
    for k in 0..=5 {
        let weight = k as f64 / 5.0;
        let rho = DensityMatrix::new(
            projector
                .scale(C64::new(weight, 0.0))
                .add(&mixed.scale(C64::new(1.0 - weight, 0.0))),
        )?;
        let c = wootters_concurrence_mixed(&rho)?;
        let lambda = spin_flip_spectrum(&rho)?;
        println!(
            "  p = {weight:.1}: C = {c:.10} (expected {:.10}), lambda = {:.4?}",
            (1.5 * weight - 0.5).max(0.0),
            lambda
        );
    }
    Ok(())
}
