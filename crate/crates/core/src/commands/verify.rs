use std::f64::consts::{FRAC_1_SQRT_2, PI, TAU};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::output::{Cell, Outcome, Report, Tabular};
use super::sampling::{random_coefficients, random_product_state, random_state, random_unitary2};
use crate::entanglement::{
    coefficients_from_phi, complex_concurrence, concurrence_from_phi, general_concurrence,
    spin_model_catalog, wootters_concurrence,
};
use crate::error::{domain, Result};
use crate::evolution::{cyclic_evolve_pair, exact_propagator, pair_state, propagate};
use crate::geometric::{
    bell_transition, closed_form_gamma, eigenstate_cycle, entangled_cycle, phase_distance,
    sigma_matrix, wilson_loop_phase, Branch,
};
use crate::linalg::{kron, StateVector};
use crate::spin::{berry_factor, FieldConfig};
use crate::C64;

const WILSON_SAMPLES: usize = 10_000;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerifySpec {
    pub tolerance: f64,
    /// Trials per randomized check; zero skips them.
    pub seeds: usize,
    pub seed: u64,
}

impl Default for VerifySpec {
    fn default() -> Self {
        Self {
            tolerance: 1e-6,
            seeds: 50,
            seed: 0x5eed,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CheckRow {
    pub name: String,
    pub randomized: bool,
    pub trials: usize,
    pub max_abs_err: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl Tabular for CheckRow {
    fn header() -> &'static [&'static str] {
        &["name", "randomized", "trials", "max_abs_err", "tolerance", "pass"]
    }

    fn cells(&self) -> Vec<Cell> {
        vec![
            Cell::Text(self.name.clone()),
            Cell::Bool(self.randomized),
            Cell::Int(self.trials as i64),
            Cell::Num(self.max_abs_err),
            Cell::Num(self.tolerance),
            Cell::Bool(self.pass),
        ]
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerifySummary {
    pub checks: usize,
    pub failed: Vec<String>,
    pub max_abs_err: f64,
    pub seed: u64,
    pub pass: bool,
}

impl Outcome for VerifySummary {
    fn passed(&self) -> bool {
        self.pass
    }
}

fn grid(lo: f64, hi: f64, n: usize) -> impl Iterator<Item = f64> {
    (0..n).map(move |i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
}

fn max_of(values: impl IntoIterator<Item = f64>) -> f64 {
    values.into_iter().fold(0.0, f64::max)
}

type Check = (&'static str, usize, Box<dyn Fn() -> Result<f64>>);

fn deterministic_checks() -> Vec<Check> {
    vec![
        (
            "closed_form_vs_wilson",
            8,
            Box::new(|| {
                let mut worst: f64 = 0.0;
                for phi in grid(0.05, PI - 0.05, 8) {
                    let cfg = FieldConfig::with_ratio(phi, 1.0)?;
                    let g = wilson_loop_phase(&eigenstate_cycle(&cfg, Branch::Up, WILSON_SAMPLES), true)?;
                    worst = worst.max(phase_distance(g, closed_form_gamma(phi)?.0));
                }
                Ok(worst)
            }),
        ),
        (
            "gamma_sum_identity",
            64,
            Box::new(|| {
                let errs = grid(0.0, PI, 64)
                    .map(|phi| closed_form_gamma(phi).map(|(p, m)| (p + m + TAU).abs()))
                    .collect::<Result<Vec<_>>>()?;
                Ok(max_of(errs))
            }),
        ),
        (
            "branch_phase_identity",
            64,
            Box::new(|| {
                let errs = grid(0.0, PI, 64)
                    .map(|phi| {
                        closed_form_gamma(phi).map(|(p, m)| {
                            (C64::from_polar(1.0, 2.0 * m) - C64::from_polar(1.0, -2.0 * p)).norm()
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(max_of(errs))
            }),
        ),
        (
            "sigma_unitarity",
            64,
            Box::new(|| {
                Ok(max_of(grid(-TAU, 0.0, 64).map(|g| {
                    let s = sigma_matrix(g);
                    s.unitarity_defect().max((s.determinant() - 1.0).norm())
                })))
            }),
        ),
        (
            "bell_sigma_consistency",
            64,
            Box::new(|| {
                Ok(max_of(
                    grid(-TAU, 0.0, 64).map(|g| sigma_matrix(g).max_abs_diff(&bell_transition(g))),
                ))
            }),
        ),
        (
            "concurrence_equals_abs_b",
            256,
            Box::new(|| {
                let errs = grid(0.0, PI, 256)
                    .map(|phi| {
                        let c = complex_concurrence(&coefficients_from_phi(phi)?).norm();
                        Ok((c - berry_factor(phi)?.abs_b).abs())
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(max_of(errs))
            }),
        ),
        (
            "catalog_values",
            3,
            Box::new(|| {
                let errs = spin_model_catalog()
                    .iter()
                    .map(|e| {
                        let r = concurrence_from_phi(e.phi)?;
                        Ok((r.paper_c - e.concurrence).abs().max((r.abs_b - e.abs_b).abs()))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(max_of(errs))
            }),
        ),
        (
            "wootters_bell_states",
            4,
            Box::new(|| {
                let h = FRAC_1_SQRT_2;
                let (z, p, m) = (C64::new(0.0, 0.0), C64::new(h, 0.0), C64::new(-h, 0.0));
                let bells = [[p, z, z, p], [p, z, z, m], [z, p, p, z], [z, p, m, z]];
                let errs = bells
                    .iter()
                    .map(|a| Ok((wootters_concurrence(&StateVector::new(a.to_vec())?)? - 1.0).abs()))
                    .collect::<Result<Vec<_>>>()?;
                Ok(max_of(errs))
            }),
        ),
        (
            "stepper_vs_exact",
            1,
            Box::new(|| {
                let cfg = FieldConfig::new(0.9, 1.3, 4.7)?;
                let psi = StateVector::new(vec![C64::new(0.6, 0.0), C64::new(0.0, 0.8)])?;
                let r = propagate(&psi, &cfg, 0.0, cfg.period(), 100_000)?;
                let exact = exact_propagator(&cfg, cfg.period()).apply_state(&psi);
                Ok(r.final_state.distance(&exact))
            }),
        ),
    ]
}

fn randomized_checks(seed: u64, trials: usize) -> Vec<Check> {
    let rng = move |salt: u64| ChaCha8Rng::seed_from_u64(seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15));
    vec![
        (
            "wootters_vs_general",
            trials,
            Box::new(move || {
                let mut r = rng(1);
                let mut worst: f64 = 0.0;
                for _ in 0..trials {
                    let s = random_state(&mut r, 4);
                    worst = worst.max((wootters_concurrence(&s)? - general_concurrence(s.amplitudes())?).abs());
                }
                Ok(worst)
            }),
        ),
        (
            "wootters_product_states",
            trials,
            Box::new(move || {
                let mut r = rng(2);
                let mut worst: f64 = 0.0;
                for _ in 0..trials {
                    worst = worst.max(wootters_concurrence(&random_product_state(&mut r))?);
                }
                Ok(worst)
            }),
        ),
        (
            "wootters_local_unitary_invariance",
            trials,
            Box::new(move || {
                let mut r = rng(3);
                let mut worst: f64 = 0.0;
                for _ in 0..trials {
                    let s = random_state(&mut r, 4);
                    let u = kron(&random_unitary2(&mut r), &random_unitary2(&mut r));
                    let moved = StateVector::normalized(u.apply(s.amplitudes()))?;
                    worst = worst.max((wootters_concurrence(&moved)? - wootters_concurrence(&s)?).abs());
                }
                Ok(worst)
            }),
        ),
        (
            "entangled_wilson_vs_weighted_sum",
            trials,
            Box::new(move || {
                let mut r = rng(4);
                let mut worst: f64 = 0.0;
                for _ in 0..trials {
                    let (alpha, beta) = random_coefficients(&mut r);
                    let phi = rand::Rng::gen_range(&mut r, 0.05..PI - 0.05);
                    let cfg = FieldConfig::with_ratio(phi, 1.0)?;
                    let g = wilson_loop_phase(&entangled_cycle(&cfg, alpha, beta, WILSON_SAMPLES)?, true)?;
                    let (gp, gm) = closed_form_gamma(phi)?;
                    let m = alpha.norm_sqr() + beta.norm_sqr();
                    let oracle = 2.0 * (alpha.norm_sqr() * gm + beta.norm_sqr() * gp) / m;
                    worst = worst.max(phase_distance(g, oracle));
                }
                Ok(worst)
            }),
        ),
        (
            "cyclic_evolution_preserves_concurrence",
            trials,
            Box::new(move || {
                let mut r = rng(5);
                let mut worst: f64 = 0.0;
                for _ in 0..trials {
                    let (alpha, beta) = random_coefficients(&mut r);
                    let phi = rand::Rng::gen_range(&mut r, 0.0..PI);
                    let cfg = FieldConfig::with_ratio(phi, 1.0)?;
                    let before = wootters_concurrence(&pair_state(alpha, beta, &cfg)?)?;
                    let after = wootters_concurrence(&cyclic_evolve_pair(alpha, beta, &cfg)?)?;
                    worst = worst.max((before - after).abs());
                }
                Ok(worst)
            }),
        ),
    ]
}

/// Runs the invariant suite. Every check reports its largest absolute error
/// and passes when that error is within `tolerance`.
pub fn verify(spec: &VerifySpec) -> Result<Report<VerifySpec, CheckRow, VerifySummary>> {
    if !(spec.tolerance.is_finite() && spec.tolerance > 0.0) {
        return Err(domain(format!("tolerance must be positive, got {}", spec.tolerance)));
    }
    let mut checks: Vec<(bool, Check)> = deterministic_checks().into_iter().map(|c| (false, c)).collect();
    if spec.seeds > 0 {
        checks.extend(randomized_checks(spec.seed, spec.seeds).into_iter().map(|c| (true, c)));
    }
    let mut rows = Vec::with_capacity(checks.len());
    for (randomized, (name, trials, run)) in checks {
        let max_abs_err = run()?;
        rows.push(CheckRow {
            name: name.to_string(),
            randomized,
            trials,
            max_abs_err,
            tolerance: spec.tolerance,
            pass: max_abs_err <= spec.tolerance,
        });
    }
    let failed: Vec<String> = rows.iter().filter(|r| !r.pass).map(|r| r.name.clone()).collect();
    Ok(Report {
        spec: spec.clone(),
        summary: VerifySummary {
            checks: rows.len(),
            max_abs_err: max_of(rows.iter().map(|r| r.max_abs_err)),
            pass: failed.is_empty(),
            failed,
            seed: spec.seed,
        },
        rows,
    })
}
