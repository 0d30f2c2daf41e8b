//! Geometric phases of spin-1/2 particles driven by a rotating magnetic
//! field, and their relation to the concurrence of two-spin states.
//!
//! The crate is organised bottom-up:
//!
//! * [`linalg`] – small dense complex linear algebra (dimensions 2, 4, 8).
//! * [`spin`] – rotating field, spin Hamiltonian, instantaneous eigenstates,
//!   Berry factor `b`.
//! * [`evolution`] – time-ordered propagation, the exact rotating-frame
//!   propagator and cyclic evolution of entangled pairs.
//! * [`geometric`] – closed-form and discretised Berry phases, Pancharatnam
//!   overlaps, the Bell-state phase matrix and three-spin composition.
//! * [`entanglement`] – complex and Wootters concurrence, the `C = |b|`
//!   relation and monogamy reporting.
//! * [`commands`] – the sweep/verify/evolve/... reports behind the
//!   `spinphase` binary, with CSV, JSON and plain-text emission.
//!
//! Every runnable capability has a matching program under `examples/`:
//!
//! ```bash
//! cargo run --release --example concurrence_vs_phi
//! ```
//!
//! Basis convention: a single spin is stored as `(⟨↑_z|ψ⟩, ⟨↓_z|ψ⟩)`, so
//! `|0⟩ = |↑_z⟩` is the `+1` eigenvector of `σ_z`. Multi-spin registers are
//! Kronecker products with spin A as the most significant index.

pub mod commands;
pub mod entanglement;
pub mod error;
pub mod evolution;
pub mod geometric;
pub mod linalg;
pub mod spin;

pub use error::{Error, Result};
pub use num_complex::Complex64;

/// Complex scalar used for every amplitude and phase factor.
pub type C64 = Complex64;
