//! Seeded random inputs for randomized checks.

use rand::Rng;
use rand_distr::{Distribution, StandardNormal, Uniform};

use crate::linalg::pauli::exp_dot_sigma;
use crate::linalg::{Operator, StateVector};
use crate::C64;

fn gaussian_c64<R: Rng + ?Sized>(rng: &mut R) -> C64 {
    C64::new(StandardNormal.sample(rng), StandardNormal.sample(rng))
}

/// Haar-distributed pure state of dimension `dim`.
pub fn random_state<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> StateVector {
    loop {
        let amps: Vec<C64> = (0..dim).map(|_| gaussian_c64(rng)).collect();
        if let Ok(s) = StateVector::normalized(amps) {
            return s;
        }
    }
}

/// Product of two independent random single-qubit states.
pub fn random_product_state<R: Rng + ?Sized>(rng: &mut R) -> StateVector {
    random_state(rng, 2).kron(&random_state(rng, 2))
}

/// Random single-qubit unitary `e^{iχ}·exp(−i·v·σ)`.
pub fn random_unitary2<R: Rng + ?Sized>(rng: &mut R) -> Operator {
    let v = [
        StandardNormal.sample(rng),
        StandardNormal.sample(rng),
        StandardNormal.sample(rng),
    ];
    let chi: f64 = Uniform::new(-std::f64::consts::PI, std::f64::consts::PI).sample(rng);
    exp_dot_sigma(v, 1.0).scale(C64::from_polar(1.0, chi))
}

/// Random nonzero complex coefficient pair `(α, β)`.
pub fn random_coefficients<R: Rng + ?Sized>(rng: &mut R) -> (C64, C64) {
    loop {
        let (a, b) = (gaussian_c64(rng), gaussian_c64(rng));
        if a.norm_sqr() + b.norm_sqr() > 1e-6 {
            return (a, b);
        }
    }
}
