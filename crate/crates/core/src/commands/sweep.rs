use std::f64::consts::PI;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::output::{Cell, Outcome, Report, Tabular};
use crate::entanglement::concurrence_from_phi;
use crate::error::{domain, Result};
use crate::geometric::{closed_form_gamma, eigenstate_cycle, phase_distance, wilson_loop_phase, Branch};
use crate::spin::{berry_factor, FieldConfig};

/// Grid over the field tilt.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepSpec {
    pub phi_min: f64,
    pub phi_max: f64,
    pub points: usize,
    pub wilson_samples: usize,
    /// `ω_L/ω₀` of the field used to trace the eigenstate loop. The loop
    /// geometry does not depend on it.
    pub ratio: f64,
    pub tolerance: f64,
}

impl Default for SweepSpec {
    fn default() -> Self {
        Self {
            phi_min: 0.0,
            phi_max: PI,
            points: 64,
            wilson_samples: 10_000,
            ratio: 500.0,
            tolerance: 1e-6,
        }
    }
}

impl SweepSpec {
    pub fn validate(&self) -> Result<()> {
        let finite = [self.phi_min, self.phi_max, self.ratio, self.tolerance]
            .iter()
            .all(|x| x.is_finite());
        if !finite {
            return Err(domain("sweep parameters must be finite"));
        }
        if !(0.0 <= self.phi_min && self.phi_min < self.phi_max && self.phi_max <= PI) {
            return Err(domain(format!(
                "need 0 <= phi_min < phi_max <= pi, got [{}, {}]",
                self.phi_min, self.phi_max
            )));
        }
        if self.points < 2 {
            return Err(domain(format!("points must be >= 2, got {}", self.points)));
        }
        if self.wilson_samples < 16 {
            return Err(domain(format!(
                "wilson_samples must be >= 16, got {}",
                self.wilson_samples
            )));
        }
        if self.ratio <= 0.0 {
            return Err(domain(format!("ratio must be positive, got {}", self.ratio)));
        }
        if self.tolerance <= 0.0 {
            return Err(domain(format!("tolerance must be positive, got {}", self.tolerance)));
        }
        Ok(())
    }

    /// Grid points, with the last one pinned to `phi_max`.
    pub fn grid(&self) -> Vec<f64> {
        let step = (self.phi_max - self.phi_min) / (self.points - 1) as f64;
        (0..self.points)
            .map(|i| {
                if i + 1 == self.points {
                    self.phi_max
                } else {
                    self.phi_min + i as f64 * step
                }
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepRow {
    pub phi: f64,
    pub b: f64,
    pub abs_b: f64,
    pub gamma_plus: f64,
    pub gamma_minus: f64,
    pub gamma_wilson: f64,
    /// `2|α||β|` on the raw coefficients, `= sin²(φ/2)`.
    pub c_paper: f64,
    /// Wootters concurrence of the normalized pair state.
    pub c_wootters_normalized: f64,
    /// Circular distance between `gamma_wilson` and `gamma_plus`.
    pub abs_err_gamma: f64,
    /// `||2αβ| − |b||`.
    pub abs_err_c: f64,
}

impl Tabular for SweepRow {
    fn header() -> &'static [&'static str] {
        &[
            "phi",
            "b",
            "abs_b",
            "gamma_plus",
            "gamma_minus",
            "gamma_wilson",
            "c_paper",
            "c_wootters_normalized",
            "abs_err_gamma",
            "abs_err_c",
        ]
    }

    fn cells(&self) -> Vec<Cell> {
        [
            self.phi,
            self.b,
            self.abs_b,
            self.gamma_plus,
            self.gamma_minus,
            self.gamma_wilson,
            self.c_paper,
            self.c_wootters_normalized,
            self.abs_err_gamma,
            self.abs_err_c,
        ]
        .into_iter()
        .map(Cell::Num)
        .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepSummary {
    pub max_abs_err_gamma: f64,
    pub max_abs_err_c: f64,
    pub max_abs_err: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl Outcome for SweepSummary {
    fn passed(&self) -> bool {
        self.pass
    }
}

fn sweep_row(spec: &SweepSpec, phi: f64) -> Result<SweepRow> {
    let factor = berry_factor(phi)?;
    let (gamma_plus, gamma_minus) = closed_form_gamma(phi)?;
    let cfg = FieldConfig::with_ratio(phi, spec.ratio)?;
    let gamma_wilson = wilson_loop_phase(&eigenstate_cycle(&cfg, Branch::Up, spec.wilson_samples), true)?;
    let conc = concurrence_from_phi(phi)?;
    Ok(SweepRow {
        phi,
        b: factor.b,
        abs_b: factor.abs_b,
        gamma_plus,
        gamma_minus,
        gamma_wilson,
        c_paper: conc.paper_c,
        c_wootters_normalized: conc.wootters_c,
        abs_err_gamma: phase_distance(gamma_wilson, gamma_plus),
        abs_err_c: (conc.complex_c.norm() - factor.abs_b).abs(),
    })
}

/// Closed-form versus discretised Berry phase and concurrence versus `|b|`
/// across a tilt grid. Rows come back in ascending `φ`.
pub fn sweep(spec: &SweepSpec) -> Result<Report<SweepSpec, SweepRow, SweepSummary>> {
    spec.validate()?;
    let rows = spec
        .grid()
        .into_par_iter()
        .map(|phi| sweep_row(spec, phi))
        .collect::<Result<Vec<_>>>()?;
    let max_abs_err_gamma = rows.iter().map(|r| r.abs_err_gamma).fold(0.0, f64::max);
    let max_abs_err_c = rows.iter().map(|r| r.abs_err_c).fold(0.0, f64::max);
    let max_abs_err = max_abs_err_gamma.max(max_abs_err_c);
    Ok(Report {
        spec: spec.clone(),
        rows,
        summary: SweepSummary {
            max_abs_err_gamma,
            max_abs_err_c,
            max_abs_err,
            tolerance: spec.tolerance,
            pass: max_abs_err <= spec.tolerance,
        },
    })
}
