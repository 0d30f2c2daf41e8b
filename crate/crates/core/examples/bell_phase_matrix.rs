//! Cyclic evolution of the Bell pair `(|↑↓⟩ ± |↓↑⟩)/√2`.
//!
//! Each spin picks up `e^{±iγ₊}`, which mixes the symmetric and
//! antisymmetric states through `Σ = [[cos γ₊, i sin γ₊], [i sin γ₊, cos γ₊]]`.
//! At `γ₊ = −π` the matrix is `−I`: both states only change sign.
//!
//! ```text
//! cargo run --example bell_phase_matrix
//! ```

use std::f64::consts::PI;

use spinphase::geometric::{bell_transition, closed_form_gamma, sigma_matrix};

fn main() -> spinphase::Result<()> {
    for phi in [0.0, PI / 4.0, PI / 2.0, PI] {
        let (gamma_plus, _) = closed_form_gamma(phi)?;
        let sigma = sigma_matrix(gamma_plus);
        let transition = bell_transition(gamma_plus);
        let det = sigma.determinant();
        println!("phi = {phi:.4}, gamma_plus = {gamma_plus:.6}");
        for i in 0..2 {
            println!(
                "  [{:>+.6}{:>+.6}i  {:>+.6}{:>+.6}i]",
                sigma[(i, 0)].re,
                sigma[(i, 0)].im,
                sigma[(i, 1)].re,
                sigma[(i, 1)].im
            );
        }
        println!(
            "  det = {:+.6}{:+.6}i, unitarity defect = {:.1e}, transition mismatch = {:.1e}\n",
            det.re,
            det.im,
            sigma.unitarity_defect(),
            sigma.max_abs_diff(&transition)
        );
    }
    Ok(())
}
