//! Spin-1/2 in a magnetic field rotating about the z axis.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::linalg::pauli::dot_sigma;
use crate::linalg::{Operator, StateVector};
use crate::C64;

/// Parameters of the rotating field `B(t) = B·n(φ, t)`.
///
/// `phi` is the tilt of the field from the quantization axis, `omega0` the
/// rotation rate about z, and `omega_larmor` the precession rate that sets
/// the energy scale `H = (ω_L/2)·n·σ` (ħ = 1).
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct FieldConfig {
    phi: f64,
    omega0: f64,
    omega_larmor: f64,
}

impl FieldConfig {
    /// `phi ∈ [0, π]`, `omega0 > 0`, `omega_larmor ≥ 0`. A zero Larmor rate
    /// is allowed so the field-free limit can be represented.
    pub fn new(phi: f64, omega0: f64, omega_larmor: f64) -> Result<Self> {
        check_phi(phi)?;
        if !(omega0.is_finite() && omega0 > 0.0) {
            return Err(domain(format!("omega0 must be positive, got {omega0}")));
        }
        if !(omega_larmor.is_finite() && omega_larmor >= 0.0) {
            return Err(domain(format!(
                "omega_larmor must be non-negative, got {omega_larmor}"
            )));
        }
        Ok(Self {
            phi,
            omega0,
            omega_larmor,
        })
    }

    /// Unit rotation rate with `ω_L = ratio·ω₀`.
    pub fn with_ratio(phi: f64, ratio: f64) -> Result<Self> {
        Self::new(phi, 1.0, ratio)
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    pub fn omega0(&self) -> f64 {
        self.omega0
    }

    pub fn omega_larmor(&self) -> f64 {
        self.omega_larmor
    }

    /// One field revolution, `τ = 2π/ω₀`.
    pub fn period(&self) -> f64 {
        2.0 * PI / self.omega0
    }
}

pub(crate) fn check_phi(phi: f64) -> Result<()> {
    if (0.0..=PI).contains(&phi) {
        Ok(())
    } else {
        Err(domain(format!("phi must lie in [0, pi], got {phi}")))
    }
}

/// `n(φ, t) = (sin φ cos ω₀t, sin φ sin ω₀t, cos φ)`.
pub fn field_direction(cfg: &FieldConfig, t: f64) -> [f64; 3] {
    let (sp, cp) = cfg.phi.sin_cos();
    let (sw, cw) = (cfg.omega0 * t).sin_cos();
    [sp * cw, sp * sw, cp]
}

/// `H(t) = (ω_L/2)·n(φ, t)·σ`.
pub fn hamiltonian(cfg: &FieldConfig, t: f64) -> Operator {
    let half = 0.5 * cfg.omega_larmor;
    dot_sigma(field_direction(cfg, t).map(|x| half * x))
}

/// Instantaneous eigenstates of `n(φ, t)·σ`:
///
/// ```text
/// up   =  cos(φ/2)|↑⟩ + sin(φ/2)·e^{iω₀t}|↓⟩
/// down = −sin(φ/2)|↑⟩ + cos(φ/2)·e^{iω₀t}|↓⟩
/// ```
///
/// The minus sign on `down` makes the pair orthogonal for every `φ`.
pub fn instantaneous_eigenstates(cfg: &FieldConfig, t: f64) -> (StateVector, StateVector) {
    let (s, c) = (0.5 * cfg.phi).sin_cos();
    let phase = C64::from_polar(1.0, cfg.omega0 * t);
    let up = StateVector::from_raw_unchecked(vec![C64::new(c, 0.0), phase * s]);
    let down = StateVector::from_raw_unchecked(vec![C64::new(-s, 0.0), phase * c]);
    (up, down)
}

/// Berry phase factor `b = −(1 − cos φ)/2` and its modulus.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BerryFactor {
    pub b: f64,
    pub abs_b: f64,
}

pub fn berry_factor(phi: f64) -> Result<BerryFactor> {
    check_phi(phi)?;
    let abs_b = 0.5 * (1.0 - phi.cos());
    Ok(BerryFactor { b: -abs_b, abs_b })
}

/// Phase `e^{i2πb}` picked up on one full circuit around flux `b`.
pub fn flux_phase(b: f64) -> C64 {
    C64::from_polar(1.0, 2.0 * PI * b)
}

/// Monopole field `b/(2πR²)` on a sphere of radius `R`, in flux quanta per
/// unit area.
pub fn monopole_field(b: f64, radius: f64) -> Result<f64> {
    if !(radius.is_finite() && radius > 0.0) {
        return Err(domain(format!("radius must be positive, got {radius}")));
    }
    Ok(b / (2.0 * PI * radius * radius))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::linalg::pauli::{sigma_x, sigma_z};
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_3};

    fn cfg(phi: f64) -> FieldConfig {
        FieldConfig::new(phi, 1.0, 2.0).unwrap()
    }

    #[test]
    fn config_validation() {
        assert!(FieldConfig::new(-0.1, 1.0, 1.0).is_err());
        assert!(FieldConfig::new(PI + 1e-9, 1.0, 1.0).is_err());
        assert!(FieldConfig::new(1.0, 0.0, 1.0).is_err());
        assert!(FieldConfig::new(1.0, 1.0, -1.0).is_err());
        assert!(FieldConfig::new(f64::NAN, 1.0, 1.0).is_err());
        assert!((cfg(0.3).period() - 2.0 * PI).abs() < 1e-15);
    }

    #[test]
    fn field_direction_examples() {
        assert_eq!(field_direction(&cfg(0.0), 1.234), [0.0, 0.0, 1.0]);
        let n = field_direction(&cfg(FRAC_PI_2), 0.0);
        assert!((n[0] - 1.0).abs() < 1e-15 && n[1] == 0.0 && n[2].abs() < 1e-15);
        let n = field_direction(&cfg(FRAC_PI_3), FRAC_PI_2);
        assert!(n[0].abs() < 1e-15);
        assert!((n[1] - 0.75f64.sqrt()).abs() < 1e-15);
        assert!((n[2] - 0.5).abs() < 1e-15);
    }

    #[test]
    fn hamiltonian_examples() {
        let c = FieldConfig::new(0.0, 1.0, 3.0).unwrap();
        assert!(hamiltonian(&c, 0.7).max_abs_diff(&sigma_z().scale(C64::new(1.5, 0.0))) < 1e-15);
        let c = FieldConfig::new(FRAC_PI_2, 1.0, 3.0).unwrap();
        assert!(hamiltonian(&c, 0.0).max_abs_diff(&sigma_x().scale(C64::new(1.5, 0.0))) < 1e-15);
        assert!(hamiltonian(&c, 0.41).trace().norm() < 1e-15);
    }

    #[test]
    fn eigenstate_examples() {
        let (up, down) = instantaneous_eigenstates(&cfg(0.0), 0.0);
        assert_eq!(up.amplitudes(), StateVector::basis(2, 0).unwrap().amplitudes());
        assert_eq!(down.amplitudes(), StateVector::basis(2, 1).unwrap().amplitudes());

        let (up, down) = instantaneous_eigenstates(&cfg(PI), 0.0);
        assert!(up.distance(&StateVector::basis(2, 1).unwrap()) < 1e-15);
        assert!(down.distance(&StateVector::basis(2, 0).unwrap().scaled(C64::new(-1.0, 0.0))) < 1e-15);

        let (up, _) = instantaneous_eigenstates(&cfg(FRAC_PI_2), 0.0);
        let h = std::f64::consts::FRAC_1_SQRT_2;
        assert!((up.amplitudes()[0] - h).norm() < 1e-15);
        assert!((up.amplitudes()[1] - h).norm() < 1e-15);
    }

    #[test]
    fn printed_down_state_is_not_orthogonal() {
        // sin(φ/2)|↑⟩ + cos(φ/2)e^{iω₀t}|↓⟩ overlaps the up state by sin φ
        let phi = 1.1;
        let (up, _) = instantaneous_eigenstates(&cfg(phi), 0.0);
        let (s, c) = (0.5 * phi).sin_cos();
        let printed = StateVector::new(vec![C64::new(s, 0.0), C64::new(c, 0.0)]).unwrap();
        assert!((up.inner(&printed).re - phi.sin()).abs() < 1e-15);
    }

    #[test]
    fn berry_factor_examples() {
        assert_eq!(berry_factor(0.0).unwrap().b, 0.0);
        assert!((berry_factor(FRAC_PI_2).unwrap().abs_b - 0.5).abs() < 1e-15);
        assert!((berry_factor(PI).unwrap().abs_b - 1.0).abs() < 1e-15);
        assert!(matches!(berry_factor(4.0), Err(Error::Domain(_))));
    }

    #[test]
    fn flux_phase_examples() {
        assert!((flux_phase(0.5) + 1.0).norm() < 1e-15);
        assert_eq!(flux_phase(0.0), C64::new(1.0, 0.0));
        for n in [1.0, 2.0, -3.0] {
            assert!((flux_phase(n) - 1.0).norm() < 1e-14);
        }
    }

    #[test]
    fn monopole_field_examples() {
        assert!((monopole_field(0.5, 1.0).unwrap() - 1.0 / (4.0 * PI)).abs() < 1e-16);
        assert!((monopole_field(0.5, 1.0).unwrap() - 0.07958).abs() < 1e-5);
        assert_eq!(monopole_field(0.0, 3.0).unwrap(), 0.0);
        assert!((monopole_field(1.0, 2.0).unwrap() - 1.0 / (8.0 * PI)).abs() < 1e-16);
        assert!(monopole_field(1.0, 0.0).is_err());
    }
}
