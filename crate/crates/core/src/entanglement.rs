//! Two-spin concurrence and its relation to the Berry factor `b`.
//!
//! Two routes are kept deliberately separate. The closed forms
//! ([`complex_concurrence`], [`general_concurrence`]) work on amplitudes;
//! [`wootters_concurrence`] goes through the spin-flipped density matrix and
//! the Hermitian eigensolver, and is used to check the closed forms.
//!
//! For the `φ`-parameterised pair the raw-coefficient value
//! `2|α||β| = sin²(φ/2)` is what equals `|b|`. The normalized state has
//! concurrence `2|α||β|/M = sin²(φ/2)/(2 − sin²(φ/2))`; the two agree only
//! at `φ = 0` and `φ = π`. [`ConcurrenceReport`] carries both.

use std::f64::consts::{FRAC_PI_2, PI, SQRT_2};

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::linalg::pauli::sigma_y;
use crate::linalg::{hermitian_eig, kron, psd_sqrt, DensityMatrix, Operator, StateVector};
use crate::spin::{berry_factor, check_phi};
use crate::C64;

/// `(α|↓↓⟩ + β|↑↑⟩)/√M` with `M = |α|² + |β|²`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct EntangledPair {
    pub alpha: C64,
    pub beta: C64,
}

impl EntangledPair {
    pub fn new(alpha: C64, beta: C64) -> Result<Self> {
        let pair = Self { alpha, beta };
        let m = pair.m();
        if m == 0.0 || !m.is_finite() {
            return Err(Error::ZeroState);
        }
        Ok(pair)
    }

    pub fn m(&self) -> f64 {
        self.alpha.norm_sqr() + self.beta.norm_sqr()
    }

    /// Normalized state in the computational basis. `|↑↑⟩` is index 0 and
    /// `|↓↓⟩` index 3, so the amplitudes read `(β, 0, 0, α)/√M`.
    pub fn state(&self) -> StateVector {
        let s = 1.0 / self.m().sqrt();
        let zero = C64::new(0.0, 0.0);
        StateVector::from_raw_unchecked(vec![self.beta * s, zero, zero, self.alpha * s])
    }
}

/// Complex concurrence `2αβ` on the raw coefficients.
pub fn complex_concurrence(pair: &EntangledPair) -> C64 {
    pair.alpha * pair.beta * 2.0
}

/// Coefficients with `|α| = √2·cos²(φ/4)` and `|β| = √2·sin²(φ/4)`, both
/// real and nonnegative. `M = 2 − sin²(φ/2)`.
pub fn coefficients_from_phi(phi: f64) -> Result<EntangledPair> {
    check_phi(phi)?;
    let (s, c) = (0.25 * phi).sin_cos();
    Ok(EntangledPair {
        alpha: C64::new(SQRT_2 * c * c, 0.0),
        beta: C64::new(SQRT_2 * s * s, 0.0),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConcurrenceReport {
    /// `2αβ` on the raw coefficients.
    pub complex_c: C64,
    /// `sin²(φ/2) = (1 − cos φ)/2`, or `|complex_c|` without a `φ`.
    pub paper_c: f64,
    /// Wootters concurrence of the normalized state.
    pub wootters_c: f64,
    pub abs_b: f64,
    pub phi: Option<f64>,
}

/// Concurrence of the `φ`-parameterised pair, side by side with `|b|`.
pub fn concurrence_from_phi(phi: f64) -> Result<ConcurrenceReport> {
    let pair = coefficients_from_phi(phi)?;
    let factor = berry_factor(phi)?;
    Ok(ConcurrenceReport {
        complex_c: complex_concurrence(&pair),
        paper_c: 0.5 * (1.0 - phi.cos()),
        wootters_c: wootters_concurrence(&pair.state())?,
        abs_b: factor.abs_b,
        phi: Some(phi),
    })
}

/// Report for an arbitrary pair, without a generating angle.
pub fn concurrence_report(pair: &EntangledPair) -> Result<ConcurrenceReport> {
    let complex_c = complex_concurrence(pair);
    Ok(ConcurrenceReport {
        complex_c,
        paper_c: complex_c.norm(),
        wootters_c: wootters_concurrence(&pair.state())?,
        abs_b: complex_c.norm(),
        phi: None,
    })
}

fn spin_flip() -> Operator {
    kron(&sigma_y(), &sigma_y())
}

/// Largest four eigenvalues of the Hermitian dilation `[[0, A], [A†, 0]]`,
/// i.e. the singular values of `A`, in descending order.
fn singular_values_desc(a: &Operator) -> Result<[f64; 4]> {
    let n = a.dim();
    let mut dilation = Operator::zeros(2 * n);
    for i in 0..n {
        for j in 0..n {
            dilation[(i, n + j)] = a[(i, j)];
            dilation[(n + j, i)] = a[(i, j)].conj();
        }
    }
    let eig = hermitian_eig(&dilation)?;
    let top = &eig.values[eig.values.len() - 4..];
    Ok([top[3].max(0.0), top[2].max(0.0), top[1].max(0.0), top[0].max(0.0)])
}

fn concurrence_from_root(root: &Operator) -> Result<f64> {
    // λ_i are the singular values of √ρ·Y·√ρ*, whose squares are the
    // eigenvalues of √ρ·ρ̃·√ρ
    let a = root.matmul(&spin_flip()).matmul(&root.conj());
    let l = singular_values_desc(&a)?;
    Ok((l[0] - l[1] - l[2] - l[3]).max(0.0))
}

/// Wootters concurrence of a normalized two-qubit pure state.
///
/// For a pure state `√ρ = ρ = |ψ⟩⟨ψ|`, which avoids amplifying roundoff in
/// the zero eigenvalues through a square root.
pub fn wootters_concurrence(state: &StateVector) -> Result<f64> {
    if state.dim() != 4 {
        return Err(Error::BadDimension(format!(
            "concurrence needs a two-qubit state, got dimension {}",
            state.dim()
        )));
    }
    let norm = state.norm();
    if (norm - 1.0).abs() > 1e-10 {
        return Err(Error::NotNormalized(norm));
    }
    concurrence_from_root(DensityMatrix::from_pure(state).as_operator())
}

/// Wootters concurrence of a two-qubit density matrix.
pub fn wootters_concurrence_mixed(rho: &DensityMatrix) -> Result<f64> {
    if rho.dim() != 4 {
        return Err(Error::BadDimension(format!(
            "concurrence needs a 4x4 density matrix, got {0}x{0}",
            rho.dim()
        )));
    }
    concurrence_from_root(&psd_sqrt(rho)?)
}

/// Square roots of the eigenvalues of `√ρ·ρ̃·√ρ`, descending. This is the
/// textbook route; it loses accuracy on near-zero eigenvalues and is kept for
/// cross-checking.
pub fn spin_flip_spectrum(rho: &DensityMatrix) -> Result<[f64; 4]> {
    let root = psd_sqrt(rho)?;
    let y = spin_flip();
    let tilde = y.matmul(&rho.as_operator().conj()).matmul(&y);
    let r = root.matmul(&tilde).matmul(&root);
    let eig = hermitian_eig(&r)?;
    let mut l: Vec<f64> = eig.values.iter().map(|v| v.max(0.0).sqrt()).collect();
    l.reverse();
    Ok([l[0], l[1], l[2], l[3]])
}

/// `2|a₀a₃ − a₁a₂|/Σ|a_i|²` for (possibly unnormalized) two-qubit amplitudes.
pub fn general_concurrence(amplitudes: &[C64]) -> Result<f64> {
    if amplitudes.len() != 4 {
        return Err(Error::BadDimension(format!(
            "expected 4 amplitudes, got {}",
            amplitudes.len()
        )));
    }
    let m: f64 = amplitudes.iter().map(|z| z.norm_sqr()).sum();
    if m == 0.0 || m.is_nan() {
        return Err(Error::ZeroState);
    }
    let a = amplitudes;
    Ok(2.0 * (a[0] * a[3] - a[1] * a[2]).norm() / m)
}

/// Outcome of the pairwise-versus-one-to-rest sharing inequality
/// `(n − 1)·C₁₂ ≤ C₁(rest) ≤ 1`. The inequality is heuristic and fails for
/// W states, so it is reported rather than enforced.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct MonogamyReport {
    pub n: usize,
    pub c12: f64,
    pub c1_rest: Option<f64>,
    /// `1/(n − 1)`.
    pub bound: f64,
    /// `(n − 1)·C₁₂`.
    pub lhs: f64,
    /// Pairwise concurrence at which the inequality is saturated with
    /// `C₁(rest) = 1`; equal to `bound`.
    pub critical_c12: f64,
    pub satisfied: bool,
}

pub fn monogamy_report(c12: f64, n: usize, c1_rest: Option<f64>) -> Result<MonogamyReport> {
    if n < 2 {
        return Err(domain(format!("need at least 2 spins, got {n}")));
    }
    let unit = |x: f64| (0.0..=1.0).contains(&x);
    if !unit(c12) {
        return Err(domain(format!("c12 must lie in [0, 1], got {c12}")));
    }
    if let Some(r) = c1_rest {
        if !unit(r) {
            return Err(domain(format!("c1_rest must lie in [0, 1], got {r}")));
        }
    }
    let bound = 1.0 / (n - 1) as f64;
    let lhs = (n - 1) as f64 * c12;
    let satisfied = c12 <= bound && c1_rest.is_none_or(|r| lhs <= r);
    Ok(MonogamyReport {
        n,
        c12,
        c1_rest,
        bound,
        lhs,
        critical_c12: bound,
        satisfied,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub phi: f64,
    pub abs_b: f64,
    pub concurrence: f64,
    pub label: String,
}

/// The three fixed points of `|b|` and the spin models they describe.
pub fn spin_model_catalog() -> Vec<CatalogEntry> {
    let entry = |phi, value: f64, label: &str| CatalogEntry {
        phi,
        abs_b: value,
        concurrence: value,
        label: label.to_string(),
    };
    vec![
        entry(0.0, 0.0, "isotropic-ferromagnet"),
        entry(FRAC_PI_2, 0.5, "RVB-frustrated-antiferromagnet"),
        entry(PI, 1.0, "singlet-maximal"),
    ]
}
