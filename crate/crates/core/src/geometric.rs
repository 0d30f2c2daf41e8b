//! Geometric phases: closed forms, discretised Berry connection, overlap
//! phases of entangled states, the Bell-state phase matrix and the
//! three-spin composition rule.

use std::f64::consts::{PI, TAU};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{Operator, StateVector};
use crate::spin::{check_phi, instantaneous_eigenstates, FieldConfig};
use crate::C64;

/// Overlaps below this modulus leave the phase undefined.
pub const VISIBILITY_FLOOR: f64 = 1e-12;

/// Branch `(−2π, 0]` for Berry phases obtained from closed loops.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PhaseConvention;

impl PhaseConvention {
    pub const LOWER: f64 = -TAU;
    pub const UPPER: f64 = 0.0;
    /// Values this close below `−2π` (i.e. just above zero after wrapping)
    /// snap to zero.
    pub const SNAP: f64 = 1e-9;

    /// Maps any angle into `(−2π, 0]`.
    pub fn wrap(x: f64) -> f64 {
        let r = x - TAU * (x / TAU).ceil();
        if r <= Self::LOWER + Self::SNAP {
            0.0
        } else if r > 0.0 {
            r - TAU
        } else {
            // normalise -0.0
            r + 0.0
        }
    }

    pub fn contains(x: f64) -> bool {
        x > Self::LOWER && x <= Self::UPPER
    }
}

/// Angle in `(−π, π]`.
pub fn principal(x: f64) -> f64 {
    x - TAU * ((x - PI) / TAU).ceil()
}

/// Distance between two angles on the circle, in `[0, π]`.
pub fn phase_distance(a: f64, b: f64) -> f64 {
    principal(a - b).abs()
}

/// Decomposition of an accumulated phase.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PhaseRecord {
    pub geometric: f64,
    pub dynamical: f64,
    pub total: f64,
    /// Modulus of the inner product the phase was read from.
    pub visibility: f64,
}

impl PhaseRecord {
    /// Residual of `total ≡ geometric + dynamical (mod 2π)`.
    pub fn closure_defect(&self) -> f64 {
        phase_distance(self.total, self.geometric + self.dynamical)
    }
}

/// `γ₊ = −π(1 − cos φ)`, `γ₋ = −π(1 + cos φ)`.
///
/// `γ₋` is formed as `−2π − γ₊`, which makes `γ₊ + γ₋ == −2π` hold exactly
/// in floating point.
pub fn closed_form_gamma(phi: f64) -> Result<(f64, f64)> {
    check_phi(phi)?;
    let gamma_plus = -PI * (1.0 - phi.cos());
    Ok((gamma_plus, -TAU - gamma_plus))
}

/// Which instantaneous eigenstate a path follows.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    Up,
    Down,
}

/// `samples` snapshots of one eigenbranch over one field period, at
/// `t_k = kτ/samples`. The closing point is not repeated.
pub fn eigenstate_cycle(cfg: &FieldConfig, branch: Branch, samples: usize) -> Vec<StateVector> {
    let dt = cfg.period() / samples as f64;
    (0..samples)
        .map(|k| {
            let (up, down) = instantaneous_eigenstates(cfg, k as f64 * dt);
            match branch {
                Branch::Up => up,
                Branch::Down => down,
            }
        })
        .collect()
}

/// `(α|↓↓⟩ + β|↑↑⟩)/√M` written in the instantaneous eigenbasis at each
/// sample time, both spins following the field.
pub fn entangled_cycle(
    cfg: &FieldConfig,
    alpha: C64,
    beta: C64,
    samples: usize,
) -> Result<Vec<StateVector>> {
    let m = alpha.norm_sqr() + beta.norm_sqr();
    if m == 0.0 {
        return Err(Error::ZeroState);
    }
    let scale = 1.0 / m.sqrt();
    let dt = cfg.period() / samples as f64;
    Ok((0..samples)
        .map(|k| {
            let (up, down) = instantaneous_eigenstates(cfg, k as f64 * dt);
            let dd = down.kron(&down);
            let uu = up.kron(&up);
            let amps = dd
                .amplitudes()
                .iter()
                .zip(uu.amplitudes())
                .map(|(d, u)| (alpha * d + beta * u) * scale)
                .collect();
            StateVector::from_raw_unchecked(amps)
        })
        .collect())
}

/// Discrete Wilson loop `−arg Π_k ⟨ψ_k|ψ_{k+1}⟩`.
///
/// Each segment phase is taken in `(−π, π]` and the segments are summed
/// before the total is mapped into `(−2π, 0]`. With `closed` the last state
/// is linked back to the first. The result does not depend on the phases
/// of the individual states.
pub fn wilson_loop_phase(path: &[StateVector], closed: bool) -> Result<f64> {
    if path.len() < 3 {
        return Err(Error::DegeneratePath(format!(
            "need at least 3 states, got {}",
            path.len()
        )));
    }
    let dim = path[0].dim();
    if path.iter().any(|s| s.dim() != dim) {
        return Err(Error::BadDimension("path states differ in dimension".into()));
    }
    let links = if closed { path.len() } else { path.len() - 1 };
    // collected in index order, so the sum below is schedule independent
    let segment_args: Vec<f64> = (0..links)
        .into_par_iter()
        .with_min_len(256)
        .map(|k| {
            let overlap = path[k].inner(&path[(k + 1) % path.len()]);
            if overlap.norm() < VISIBILITY_FLOOR {
                Err(Error::DegeneratePath(format!(
                    "overlap {} between samples {k} and {} vanishes",
                    overlap.norm(),
                    k + 1
                )))
            } else {
                Ok(overlap.arg())
            }
        })
        .collect::<Result<_>>()?;
    let winding: f64 = segment_args.iter().sum();
    Ok(PhaseConvention::wrap(-winding))
}

/// Overlap `⟨ψ(0)|ψ(τ)⟩ = (|α|²e^{2iγ₋} + |β|²e^{2iγ₊})/M` of the cyclically
/// evolved pair, using `e^{2iγ₋} = e^{−2iγ₊}`.
///
/// The returned record has `geometric = total = arg(overlap)` in `(−π, π]`
/// (the dynamical part is taken as already removed) and the overlap modulus
/// as visibility.
pub fn pancharatnam_overlap(alpha: C64, beta: C64, gamma_plus: f64) -> Result<(C64, PhaseRecord)> {
    let m = alpha.norm_sqr() + beta.norm_sqr();
    if m == 0.0 {
        return Err(Error::ZeroState);
    }
    let overlap = (C64::from_polar(alpha.norm_sqr(), -2.0 * gamma_plus)
        + C64::from_polar(beta.norm_sqr(), 2.0 * gamma_plus))
        / m;
    let visibility = overlap.norm();
    if visibility < VISIBILITY_FLOOR {
        return Err(Error::ZeroVisibility(visibility));
    }
    let phase = overlap.arg();
    Ok((
        overlap,
        PhaseRecord {
            geometric: phase,
            dynamical: 0.0,
            total: phase,
            visibility,
        },
    ))
}

/// Literal amplitude-weighted composition `αe^{−2iγ₊} + βe^{2iγ₊}`.
///
/// This is not a unit-modulus quantity in general (for `α = β = 1/√2`,
/// `γ₊ = −π` it is `√2`); [`pancharatnam_overlap`] is the normalised
/// counterpart.
pub fn composition_raw(alpha: C64, beta: C64, gamma_plus: f64) -> C64 {
    alpha * C64::from_polar(1.0, -2.0 * gamma_plus) + beta * C64::from_polar(1.0, 2.0 * gamma_plus)
}

/// Phase matrix `Σ = exp(iγ₊σ_x) = [[cos γ₊, i sin γ₊], [i sin γ₊, cos γ₊]]`
/// acting on `(|ψ₊⟩, |ψ₋⟩)`.
pub fn sigma_matrix(gamma_plus: f64) -> Operator {
    let (s, c) = gamma_plus.sin_cos();
    Operator::from_rows([
        [C64::new(c, 0.0), C64::new(0.0, s)],
        [C64::new(0.0, s), C64::new(c, 0.0)],
    ])
}

/// Symmetric (`Plus`) or antisymmetric (`Minus`) Bell combination of
/// `|↑↓⟩` and `|↓↑⟩`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BellKind {
    Plus,
    Minus,
}

impl BellKind {
    fn sign(self) -> f64 {
        match self {
            BellKind::Plus => 1.0,
            BellKind::Minus => -1.0,
        }
    }
}

/// `(|↑↓⟩ ± |↓↑⟩)/√2`.
pub fn bell_state(which: BellKind) -> StateVector {
    bell_evolve(which, 0.0)
}

/// `|ψ±⟩_τ = (e^{iγ₊}|↑↓⟩ ± e^{−iγ₊}|↓↑⟩)/√2` in the computational basis.
pub fn bell_evolve(which: BellKind, gamma_plus: f64) -> StateVector {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let zero = C64::new(0.0, 0.0);
    StateVector::from_raw_unchecked(vec![
        zero,
        C64::from_polar(h, gamma_plus),
        C64::from_polar(h, -gamma_plus) * which.sign(),
        zero,
    ])
}

/// Amplitudes `T_ij = ⟨ψ_j|ψ_i⟩_τ` of the evolved Bell states in the
/// `(|ψ₊⟩, |ψ₋⟩)` basis. Equals [`sigma_matrix`] entry by entry.
pub fn bell_transition(gamma_plus: f64) -> Operator {
    let kinds = [BellKind::Plus, BellKind::Minus];
    let mut t = Operator::zeros(2);
    for (i, &evolved) in kinds.iter().enumerate() {
        let after = bell_evolve(evolved, gamma_plus);
        for (j, &basis) in kinds.iter().enumerate() {
            t[(i, j)] = bell_state(basis).inner(&after);
        }
    }
    t
}

/// Three-spin phase factor
/// `a₁e^{iγ(AB)}e^{iγ(C)} + a₂e^{iγ(A)}e^{iγ(BC)} + a₃e^{iγ(B)}e^{iγ(CA)}`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PairPhases {
    pub ab: f64,
    pub bc: f64,
    pub ca: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SinglePhases {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ThreeSpinPhase {
    pub value: C64,
    /// `arg(value)` in `(−π, π]`.
    pub phase: f64,
    pub visibility: f64,
}

pub fn three_spin_phase(
    a: [C64; 3],
    pairs: PairPhases,
    singles: SinglePhases,
) -> Result<ThreeSpinPhase> {
    if a.iter().all(|z| z.norm() == 0.0) {
        return Err(Error::ZeroState);
    }
    let e = |x: f64| C64::from_polar(1.0, x);
    let value = a[0] * e(pairs.ab + singles.c)
        + a[1] * e(singles.a + pairs.bc)
        + a[2] * e(singles.b + pairs.ca);
    let visibility = value.norm();
    if visibility < VISIBILITY_FLOOR {
        return Err(Error::ZeroVisibility(visibility));
    }
    Ok(ThreeSpinPhase {
        value,
        phase: value.arg(),
        visibility,
    })
}
