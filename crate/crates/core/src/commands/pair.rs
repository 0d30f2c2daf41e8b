//! Single-shot commands: adiabatic phase extraction, Bell-state mixing,
//! three-spin composition and monogamy reporting.

use serde::{Deserialize, Serialize};

use super::output::{Cell, Outcome, Report, Tabular};
use crate::entanglement::{monogamy_report, MonogamyReport};
use crate::error::{domain, Result};
use crate::evolution::propagate;
use crate::geometric::{
    bell_transition, closed_form_gamma, phase_distance, sigma_matrix, three_spin_phase,
    PairPhases, PhaseConvention, PhaseRecord, SinglePhases,
};
use crate::linalg::Operator;
use crate::spin::{check_phi, instantaneous_eigenstates, FieldConfig};
use crate::C64;

/// Deviations from the closed-form phase above this are flagged as
/// non-adiabatic.
pub const ADIABATIC_FLAG_THRESHOLD: f64 = 1e-2;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EvolveSpec {
    pub phi: f64,
    pub ratio: f64,
    pub steps: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EvolveRow {
    pub branch: String,
    pub geometric: f64,
    pub dynamical: f64,
    pub total: f64,
    pub visibility: f64,
    pub closed_form: f64,
    pub deviation: f64,
    pub unitarity_defect: f64,
}

impl EvolveRow {
    pub fn record(&self) -> PhaseRecord {
        PhaseRecord {
            geometric: self.geometric,
            dynamical: self.dynamical,
            total: self.total,
            visibility: self.visibility,
        }
    }
}

impl Tabular for EvolveRow {
    fn header() -> &'static [&'static str] {
        &[
            "branch",
            "geometric",
            "dynamical",
            "total",
            "visibility",
            "closed_form",
            "deviation",
            "unitarity_defect",
        ]
    }

    fn cells(&self) -> Vec<Cell> {
        vec![
            Cell::Text(self.branch.clone()),
            Cell::Num(self.geometric),
            Cell::Num(self.dynamical),
            Cell::Num(self.total),
            Cell::Num(self.visibility),
            Cell::Num(self.closed_form),
            Cell::Num(self.deviation),
            Cell::Num(self.unitarity_defect),
        ]
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EvolveSummary {
    /// Deviation exceeded [`ADIABATIC_FLAG_THRESHOLD`]; informational only.
    pub non_adiabatic: bool,
    pub threshold: f64,
    pub pass: bool,
}

impl Outcome for EvolveSummary {
    fn passed(&self) -> bool {
        self.pass
    }
}

/// Propagates `up_n(0)` over one period at `ω_L/ω₀ = ratio` and splits the
/// phase of `⟨up_n(0)|ψ(τ)⟩` into dynamical and geometric parts.
pub fn evolve(spec: &EvolveSpec) -> Result<Report<EvolveSpec, EvolveRow, EvolveSummary>> {
    check_phi(spec.phi)?;
    if !(spec.ratio.is_finite() && spec.ratio > 1.0) {
        return Err(domain(format!("ratio must exceed 1, got {}", spec.ratio)));
    }
    if spec.steps == 0 {
        return Err(domain("steps must be at least 1"));
    }
    let cfg = FieldConfig::with_ratio(spec.phi, spec.ratio)?;
    let (up0, _) = instantaneous_eigenstates(&cfg, 0.0);
    let result = propagate(&up0, &cfg, 0.0, cfg.period(), spec.steps)?;
    let overlap = up0.inner(&result.final_state);
    let total = overlap.arg();
    let record = PhaseRecord {
        geometric: PhaseConvention::wrap(total - result.dynamical_phase),
        dynamical: result.dynamical_phase,
        total,
        visibility: overlap.norm(),
    };
    let (closed_form, _) = closed_form_gamma(spec.phi)?;
    let deviation = phase_distance(record.geometric, closed_form);
    Ok(Report {
        spec: spec.clone(),
        rows: vec![EvolveRow {
            branch: "up".into(),
            geometric: record.geometric,
            dynamical: record.dynamical,
            total: record.total,
            visibility: record.visibility,
            closed_form,
            deviation,
            unitarity_defect: result.unitarity_defect,
        }],
        summary: EvolveSummary {
            non_adiabatic: deviation > ADIABATIC_FLAG_THRESHOLD,
            threshold: ADIABATIC_FLAG_THRESHOLD,
            pass: true,
        },
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BellSpec {
    pub gamma_plus: f64,
}

/// Entry `(evolved, basis)` of the phase matrix next to the matching
/// transition amplitude `⟨ψ_basis|ψ_evolved⟩_τ`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BellRow {
    pub evolved: String,
    pub basis: String,
    pub sigma_re: f64,
    pub sigma_im: f64,
    pub amplitude_re: f64,
    pub amplitude_im: f64,
}

impl Tabular for BellRow {
    fn header() -> &'static [&'static str] {
        &["evolved", "basis", "sigma_re", "sigma_im", "amplitude_re", "amplitude_im"]
    }

    fn cells(&self) -> Vec<Cell> {
        vec![
            Cell::Text(self.evolved.clone()),
            Cell::Text(self.basis.clone()),
            Cell::Num(self.sigma_re),
            Cell::Num(self.sigma_im),
            Cell::Num(self.amplitude_re),
            Cell::Num(self.amplitude_im),
        ]
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BellSummary {
    pub unitarity_defect: f64,
    pub determinant: C64,
    pub consistency_err: f64,
    /// `Σ = −I`: both Bell states come back with a sign flip.
    pub sign_flip: bool,
    pub pass: bool,
}

impl Outcome for BellSummary {
    fn passed(&self) -> bool {
        self.pass
    }
}

const BELL_TOL: f64 = 1e-12;

pub fn bell(spec: &BellSpec) -> Result<Report<BellSpec, BellRow, BellSummary>> {
    if !spec.gamma_plus.is_finite() {
        return Err(domain("gamma_plus must be finite"));
    }
    let sigma = sigma_matrix(spec.gamma_plus);
    let transition = bell_transition(spec.gamma_plus);
    let names = ["plus", "minus"];
    let mut rows = Vec::with_capacity(4);
    for (i, evolved) in names.iter().enumerate() {
        for (j, basis) in names.iter().enumerate() {
            rows.push(BellRow {
                evolved: evolved.to_string(),
                basis: basis.to_string(),
                sigma_re: sigma[(i, j)].re,
                sigma_im: sigma[(i, j)].im,
                amplitude_re: transition[(i, j)].re,
                amplitude_im: transition[(i, j)].im,
            });
        }
    }
    let unitarity_defect = sigma.unitarity_defect();
    let consistency_err = sigma.max_abs_diff(&transition);
    let minus_identity = Operator::identity(2).scale(C64::new(-1.0, 0.0));
    Ok(Report {
        spec: spec.clone(),
        rows,
        summary: BellSummary {
            unitarity_defect,
            determinant: sigma.determinant(),
            consistency_err,
            sign_flip: sigma.max_abs_diff(&minus_identity) < BELL_TOL,
            pass: consistency_err <= BELL_TOL && unitarity_defect <= BELL_TOL,
        },
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ThreeSpinSpec {
    pub amplitudes: [C64; 3],
    pub pairs: PairPhases,
    pub singles: SinglePhases,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ThreeSpinRow {
    pub value_re: f64,
    pub value_im: f64,
    pub phase: f64,
    pub visibility: f64,
}

impl Tabular for ThreeSpinRow {
    fn header() -> &'static [&'static str] {
        &["value_re", "value_im", "phase", "visibility"]
    }

    fn cells(&self) -> Vec<Cell> {
        [self.value_re, self.value_im, self.phase, self.visibility]
            .into_iter()
            .map(Cell::Num)
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ThreeSpinSummary {
    pub pass: bool,
}

impl Outcome for ThreeSpinSummary {
    fn passed(&self) -> bool {
        self.pass
    }
}

pub fn three_spin(spec: &ThreeSpinSpec) -> Result<Report<ThreeSpinSpec, ThreeSpinRow, ThreeSpinSummary>> {
    let r = three_spin_phase(spec.amplitudes, spec.pairs, spec.singles)?;
    Ok(Report {
        spec: spec.clone(),
        rows: vec![ThreeSpinRow {
            value_re: r.value.re,
            value_im: r.value.im,
            phase: r.phase,
            visibility: r.visibility,
        }],
        summary: ThreeSpinSummary { pass: true },
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonogamySpec {
    pub c12: f64,
    pub n: usize,
    pub c1_rest: Option<f64>,
}

impl Tabular for MonogamyReport {
    fn header() -> &'static [&'static str] {
        &["n", "c12", "c1_rest", "bound", "lhs", "critical_c12", "satisfied"]
    }

    fn cells(&self) -> Vec<Cell> {
        vec![
            Cell::Int(self.n as i64),
            Cell::Num(self.c12),
            self.c1_rest.map_or(Cell::Text(String::new()), Cell::Num),
            Cell::Num(self.bound),
            Cell::Num(self.lhs),
            Cell::Num(self.critical_c12),
            Cell::Bool(self.satisfied),
        ]
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonogamySummary {
    pub satisfied: bool,
    /// Reporting only: a violated inequality does not fail the run.
    pub pass: bool,
}

impl Outcome for MonogamySummary {
    fn passed(&self) -> bool {
        self.pass
    }
}

pub fn monogamy(spec: &MonogamySpec) -> Result<Report<MonogamySpec, MonogamyReport, MonogamySummary>> {
    let report = monogamy_report(spec.c12, spec.n, spec.c1_rest)?;
    Ok(Report {
        spec: spec.clone(),
        summary: MonogamySummary {
            satisfied: report.satisfied,
            pass: true,
        },
        rows: vec![report],
    })
}
