//! Time evolution under the rotating-field Hamiltonian.
//!
//! [`propagate`] is a midpoint-exponential stepper: every step applies the
//! closed-form `exp(−i·H(t_mid)·Δt)` to each spin, so each step is unitary
//! to rounding and the scheme is second order in `Δt`.
//! [`exact_propagator`] solves the same problem in the co-rotating frame and
//! serves as its oracle.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometric::closed_form_gamma;
use crate::linalg::pauli::exp_dot_sigma;
use crate::linalg::{inner, l2_norm, Operator, StateVector};
use crate::spin::{field_direction, hamiltonian, instantaneous_eigenstates, FieldConfig};
use crate::C64;

/// Steps per field period used by [`propagate_period`].
pub const DEFAULT_STEPS: usize = 10_000;
/// Largest register [`propagate`] accepts.
pub const MAX_QUBITS: usize = 3;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EvolutionResult {
    /// Renormalized final state.
    pub final_state: StateVector,
    /// `−∫⟨ψ|H|ψ⟩dt` by the trapezoid rule on the step grid.
    pub dynamical_phase: f64,
    pub steps: usize,
    /// `|‖ψ(t1)‖ − 1|` before renormalization.
    pub unitarity_defect: f64,
}

/// Applies a 2×2 operator to spin `target` (0 = most significant) of an
/// `n`-spin register in place.
fn apply_to_spin(amps: &mut [C64], u: &Operator, target: usize, n: usize) {
    let stride = 1usize << (n - 1 - target);
    for i in 0..amps.len() {
        if i & stride != 0 {
            continue;
        }
        let (a0, a1) = (amps[i], amps[i | stride]);
        amps[i] = u[(0, 0)] * a0 + u[(0, 1)] * a1;
        amps[i | stride] = u[(1, 0)] * a0 + u[(1, 1)] * a1;
    }
}

/// `⟨ψ|Σ_q H_q(t)|ψ⟩` with every spin seeing the same field.
fn energy(amps: &[C64], h: &Operator, n: usize) -> f64 {
    let mut total = 0.0;
    for q in 0..n {
        let mut hpsi = amps.to_vec();
        apply_to_spin(&mut hpsi, h, q, n);
        total += inner(amps, &hpsi).re;
    }
    total
}

/// Evolves `psi0` from `t0` to `t1` in `steps` midpoint-exponential steps.
///
/// Registers of one to [`MAX_QUBITS`] spins are supported; every spin is
/// driven by the same field.
pub fn propagate(
    psi0: &StateVector,
    cfg: &FieldConfig,
    t0: f64,
    t1: f64,
    steps: usize,
) -> Result<EvolutionResult> {
    if steps == 0 {
        return Err(Error::BadSteps("steps must be at least 1".into()));
    }
    if !(t0.is_finite() && t1.is_finite() && t1 > t0) {
        return Err(Error::BadSteps(format!("need t1 > t0, got [{t0}, {t1}]")));
    }
    let n = psi0.num_qubits();
    if n > MAX_QUBITS {
        return Err(Error::BadDimension(format!(
            "propagation supports up to {MAX_QUBITS} spins, got {n}"
        )));
    }
    let dt = (t1 - t0) / steps as f64;
    let half_larmor = 0.5 * cfg.omega_larmor();
    let mut amps = psi0.amplitudes().to_vec();

    let mut energy_sum = 0.5 * energy(&amps, &hamiltonian(cfg, t0), n);
    for k in 0..steps {
        let t_mid = t0 + (k as f64 + 0.5) * dt;
        let axis = field_direction(cfg, t_mid).map(|x| half_larmor * x);
        let u = exp_dot_sigma(axis, dt);
        for q in 0..n {
            apply_to_spin(&mut amps, &u, q, n);
        }
        let t = t0 + (k + 1) as f64 * dt;
        let e = energy(&amps, &hamiltonian(cfg, t), n);
        energy_sum += if k + 1 == steps { 0.5 * e } else { e };
    }

    let norm = l2_norm(&amps);
    amps.iter_mut().for_each(|z| *z /= norm);
    Ok(EvolutionResult {
        final_state: StateVector::from_raw_unchecked(amps),
        dynamical_phase: -energy_sum * dt,
        steps,
        unitarity_defect: (norm - 1.0).abs(),
    })
}

/// One field period from `t = 0` at [`DEFAULT_STEPS`].
pub fn propagate_period(psi0: &StateVector, cfg: &FieldConfig) -> Result<EvolutionResult> {
    propagate(psi0, cfg, 0.0, cfg.period(), DEFAULT_STEPS)
}

/// Exact single-spin propagator from `0` to `t`:
/// `U(t) = exp(−iω₀tσ_z/2)·exp(−iH_rot·t)` with
/// `H_rot = (ω_L/2)·n(φ,0)·σ − (ω₀/2)σ_z`.
pub fn exact_propagator(cfg: &FieldConfig, t: f64) -> Operator {
    let frame = exp_dot_sigma([0.0, 0.0, 0.5 * cfg.omega0()], t);
    let n0 = field_direction(cfg, 0.0);
    let half = 0.5 * cfg.omega_larmor();
    let rot = [half * n0[0], half * n0[1], half * n0[2] - 0.5 * cfg.omega0()];
    frame.matmul(&exp_dot_sigma(rot, t))
}

/// `(α|ψ↓ψ↓⟩ + β|ψ↑ψ↑⟩)/√M` in the instantaneous eigenbasis at `t = 0`.
pub fn pair_state(alpha: C64, beta: C64, cfg: &FieldConfig) -> Result<StateVector> {
    pair_state_with_phases(alpha, beta, cfg, C64::new(1.0, 0.0), C64::new(1.0, 0.0))
}

fn pair_state_with_phases(
    alpha: C64,
    beta: C64,
    cfg: &FieldConfig,
    down_phase: C64,
    up_phase: C64,
) -> Result<StateVector> {
    let m = alpha.norm_sqr() + beta.norm_sqr();
    if m == 0.0 || m.is_nan() {
        return Err(Error::ZeroState);
    }
    let (up, down) = instantaneous_eigenstates(cfg, 0.0);
    let dd = down.kron(&down);
    let uu = up.kron(&up);
    let (a, b) = (alpha * down_phase, beta * up_phase);
    let scale = 1.0 / m.sqrt();
    let amps = dd
        .amplitudes()
        .iter()
        .zip(uu.amplitudes())
        .map(|(d, u)| (a * d + b * u) * scale)
        .collect();
    Ok(StateVector::from_raw_unchecked(amps))
}

/// State of the pair after one cycle with both spins following the field and
/// the dynamical phase removed:
/// `(αe^{2iγ₋}|ψ↓ψ↓⟩ + βe^{2iγ₊}|ψ↑ψ↑⟩)/√M`.
pub fn cyclic_evolve_pair(alpha: C64, beta: C64, cfg: &FieldConfig) -> Result<StateVector> {
    let (gamma_plus, gamma_minus) = closed_form_gamma(cfg.phi())?;
    pair_state_with_phases(
        alpha,
        beta,
        cfg,
        C64::from_polar(1.0, 2.0 * gamma_minus),
        C64::from_polar(1.0, 2.0 * gamma_plus),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometric::{phase_distance, principal};
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_3};

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn probe() -> StateVector {
        StateVector::new(vec![c(0.6, 0.0), c(0.0, 0.8)]).unwrap()
    }

    #[test]
    fn rejects_bad_steps() {
        let cfg = FieldConfig::new(0.5, 1.0, 3.0).unwrap();
        assert!(matches!(propagate(&probe(), &cfg, 0.0, 1.0, 0), Err(Error::BadSteps(_))));
        assert!(matches!(propagate(&probe(), &cfg, 1.0, 1.0, 10), Err(Error::BadSteps(_))));
        let big = StateVector::basis(16, 0).unwrap();
        assert!(matches!(propagate(&big, &cfg, 0.0, 1.0, 10), Err(Error::BadDimension(_))));
    }

    #[test]
    fn field_free_limit_is_identity() {
        let cfg = FieldConfig::new(1.0, 1.0, 0.0).unwrap();
        let r = propagate(&probe(), &cfg, 0.0, cfg.period(), 100).unwrap();
        assert_eq!(r.final_state, probe());
        assert_eq!(r.dynamical_phase, 0.0);
    }

    #[test]
    fn aligned_field_is_pure_dynamical_phase() {
        let cfg = FieldConfig::new(0.0, 1.0, 7.0).unwrap();
        let tau = cfg.period();
        let up = StateVector::basis(2, 0).unwrap();
        let r = propagate(&up, &cfg, 0.0, tau, 1000).unwrap();
        let expected = up.scaled(C64::from_polar(1.0, -7.0 * tau / 2.0));
        assert!(r.final_state.distance(&expected) < 1e-12);
        assert!((r.dynamical_phase + 7.0 * tau / 2.0).abs() < 1e-11);
    }

    #[test]
    fn adiabatic_geometric_phase() {
        let cfg = FieldConfig::with_ratio(FRAC_PI_3, 500.0).unwrap();
        let (up0, _) = instantaneous_eigenstates(&cfg, 0.0);
        let r = propagate(&up0, &cfg, 0.0, cfg.period(), 200_000).unwrap();
        let total = up0.inner(&r.final_state).arg();
        let geometric = principal(total - r.dynamical_phase);
        assert!(phase_distance(geometric, -FRAC_PI_2) < 1e-2, "{geometric}");
        assert!(r.unitarity_defect < 1e-8);
    }

    #[test]
    fn adiabatic_following() {
        let cfg = FieldConfig::with_ratio(FRAC_PI_3, 500.0).unwrap();
        let (up0, _) = instantaneous_eigenstates(&cfg, 0.0);
        let tau = cfg.period();
        for frac in [0.25, 0.5, 0.75, 1.0] {
            let t = frac * tau;
            let r = propagate(&up0, &cfg, 0.0, t, (frac * 100_000.0) as usize).unwrap();
            let (up_t, _) = instantaneous_eigenstates(&cfg, t);
            assert!(up_t.inner(&r.final_state).norm_sqr() >= 0.999);
        }
    }

    #[test]
    fn exact_propagator_examples() {
        let cfg = FieldConfig::new(1.1, 2.0, 5.0).unwrap();
        assert!(exact_propagator(&cfg, 0.0).max_abs_diff(&Operator::identity(2)) < 1e-16);
        assert!(exact_propagator(&cfg, 0.83).is_unitary(1e-12));

        let cfg = FieldConfig::new(0.0, 2.0, 5.0).unwrap();
        let t = 0.71;
        let expected = exp_dot_sigma([0.0, 0.0, 2.5], t);
        assert!(exact_propagator(&cfg, t).max_abs_diff(&expected) < 1e-14);
    }

    #[test]
    fn stepper_matches_exact_propagator() {
        let cfg = FieldConfig::new(0.9, 1.3, 4.7).unwrap();
        let tau = cfg.period();
        let r = propagate(&probe(), &cfg, 0.0, tau, 100_000).unwrap();
        let exact = exact_propagator(&cfg, tau).apply_state(&probe());
        assert!(r.final_state.distance(&exact) < 1e-6);
    }

    #[test]
    fn second_order_convergence() {
        let cfg = FieldConfig::with_ratio(FRAC_PI_3, 10.0).unwrap();
        let tau = cfg.period();
        let exact = exact_propagator(&cfg, tau).apply_state(&probe());
        let err = |steps| {
            propagate(&probe(), &cfg, 0.0, tau, steps)
                .unwrap()
                .final_state
                .distance(&exact)
        };
        let ratio = err(500) / err(1000);
        assert!((3.5..=4.5).contains(&ratio), "ratio {ratio}");
    }

    #[test]
    fn composition_of_intervals() {
        let cfg = FieldConfig::new(0.7, 1.0, 20.0).unwrap();
        let first = propagate(&probe(), &cfg, 0.0, 1.0, 4_000).unwrap();
        let second = propagate(&first.final_state, &cfg, 1.0, 2.5, 6_000).unwrap();
        let whole = propagate(&probe(), &cfg, 0.0, 2.5, 10_000).unwrap();
        assert!(second.final_state.distance(&whole.final_state) < 1e-8);
        assert!((first.dynamical_phase + second.dynamical_phase - whole.dynamical_phase).abs() < 1e-8);
    }

    #[test]
    fn two_spin_register_is_tensor_of_single_spin_runs() {
        let cfg = FieldConfig::new(0.7, 1.0, 3.0).unwrap();
        let other = StateVector::new(vec![c(0.0, 1.0), c(0.0, 0.0)]).unwrap();
        let joint = probe().kron(&other);
        let r = propagate(&joint, &cfg, 0.0, 2.0, 2_000).unwrap();
        let a = propagate(&probe(), &cfg, 0.0, 2.0, 2_000).unwrap();
        let b = propagate(&other, &cfg, 0.0, 2.0, 2_000).unwrap();
        assert!(r.final_state.distance(&a.final_state.kron(&b.final_state)) < 1e-12);
        assert!((r.dynamical_phase - a.dynamical_phase - b.dynamical_phase).abs() < 1e-12);
    }

    #[test]
    fn cyclic_pair_single_branch() {
        let cfg = FieldConfig::new(1.0, 1.0, 1.0).unwrap();
        let psi = cyclic_evolve_pair(c(0.3, 0.4), c(0.0, 0.0), &cfg).unwrap();
        let before = pair_state(c(0.3, 0.4), c(0.0, 0.0), &cfg).unwrap();
        let (_, gm) = closed_form_gamma(1.0).unwrap();
        assert!(psi.distance(&before.scaled(C64::from_polar(1.0, 2.0 * gm))) < 1e-15);
    }

    #[test]
    fn cyclic_pair_quarter_tilt_returns() {
        let cfg = FieldConfig::new(FRAC_PI_2, 1.0, 1.0).unwrap();
        let a = c(0.5, -0.2);
        let after = cyclic_evolve_pair(a, a, &cfg).unwrap();
        let before = pair_state(a, a, &cfg).unwrap();
        assert!(after.distance(&before) < 1e-14);
    }

    #[test]
    fn cyclic_pair_rejects_zero() {
        let cfg = FieldConfig::new(0.3, 1.0, 1.0).unwrap();
        assert_eq!(
            cyclic_evolve_pair(c(0.0, 0.0), c(0.0, 0.0), &cfg).unwrap_err(),
            Error::ZeroState
        );
    }
}
