//! Three-spin phase composition and the pairwise sharing bound.
//!
//! The W state `(|001⟩ + |010⟩ + |100⟩)/√3` has pairwise concurrence 2/3 and
//! one-to-rest concurrence 2√2/3, both computed here by brute force from
//! reduced density matrices. It violates `(n − 1)C₁₂ ≤ C₁(rest)`, which is
//! why the bound is reported rather than enforced.
//!
//! ```text
//! cargo run --example three_spin_and_monogamy
//! ```

use spinphase::entanglement::{monogamy_report, wootters_concurrence_mixed};
use spinphase::geometric::{three_spin_phase, PairPhases, SinglePhases};
use spinphase::linalg::{DensityMatrix, Operator};
use spinphase::C64;

fn main() -> spinphase::Result<()> {
    let one = C64::new(1.0, 0.0);
    let zero = C64::new(0.0, 0.0);
    let pairs = PairPhases { ab: 1.0, bc: -0.4, ca: 0.25 };
    let singles = SinglePhases { a: 0.1, b: -0.2, c: 0.5 };
    for a in [[one, zero, zero], [zero, one, zero], [one, one, one]] {
        let r = three_spin_phase(a, pairs, singles)?;
        println!("a = ({}, {}, {}): phase {:.6}, visibility {:.6}", a[0].re, a[1].re, a[2].re, r.phase, r.visibility);
    }

    let third = C64::new((1.0f64 / 3.0).sqrt(), 0.0);
    let w = [zero, third, third, zero, third, zero, zero, zero];
    let mut rho12 = Operator::zeros(4);
    for i in 0..4 {
        for j in 0..4 {
            rho12[(i, j)] = w[2 * i] * w[2 * j].conj() + w[2 * i + 1] * w[2 * j + 1].conj();
        }
    }
    let c12 = wootters_concurrence_mixed(&DensityMatrix::new(rho12)?)?;
    let p_up: f64 = w[..4].iter().map(|z| z.norm_sqr()).sum();
    let c1_rest = 2.0 * (p_up * (1.0 - p_up)).sqrt();
    println!("\nW state: C12 = {c12:.10}, C1|rest = {c1_rest:.10}");

    let report = monogamy_report(c12, 3, Some(c1_rest))?;
    println!(
        "  (n-1)C12 = {:.6} vs C1|rest = {:.6}: satisfied = {}",
        report.lhs, c1_rest, report.satisfied
    );

    println!("\ncritical pairwise concurrence 1/(n-1)");
    for n in [2, 3, 4, 8, 16] {
        let r = monogamy_report(0.0, n, None)?;
        println!("  n = {n:>2}: {:.6}", r.critical_c12);
    }
    Ok(())
}
