use super::{Operator, StateVector};
use crate::error::{Error, Result};
use crate::C64;

/// Sweep limit for the cyclic Jacobi iteration.
pub const JACOBI_MAX_SWEEPS: usize = 100;
/// Convergence threshold on the off-diagonal Frobenius norm, relative to the
/// Frobenius norm of the input.
pub const JACOBI_OFF_TOL: f64 = 1e-14;

/// Eigendecomposition of a Hermitian matrix: ascending eigenvalues and the
/// matching orthonormal eigenvectors as columns of `vectors`.
#[derive(Clone, Debug)]
pub struct HermitianEigen {
    pub values: Vec<f64>,
    pub vectors: Operator,
}

impl HermitianEigen {
    /// Eigenvector `k` as a state.
    pub fn vector(&self, k: usize) -> StateVector {
        let n = self.vectors.dim();
        StateVector::from_raw_unchecked((0..n).map(|i| self.vectors[(i, k)]).collect())
    }

    /// `V·diag(λ)·V†`.
    pub fn reconstruct(&self) -> Operator {
        let diag: Vec<C64> = self.values.iter().map(|&l| C64::new(l, 0.0)).collect();
        self.vectors
            .matmul(&Operator::diagonal(&diag))
            .matmul(&self.vectors.adjoint())
    }
}

fn off_diagonal_norm(a: &Operator) -> f64 {
    let n = a.dim();
    let mut sum = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                sum += a[(i, j)].norm_sqr();
            }
        }
    }
    sum.sqrt()
}

/// Cyclic Jacobi eigensolver for Hermitian matrices.
///
/// Each rotation annihilates one off-diagonal pair `(p, q)` with the unitary
/// `J = [[c, s·e^{iθ}], [−s·e^{−iθ}, c]]`, where `θ = arg a_pq`. Eigenvalues
/// come back ascending and each eigenvector is rotated so that its first
/// nonzero component is real and positive.
pub fn hermitian_eig(m: &Operator) -> Result<HermitianEigen> {
    let defect = m.hermitian_defect();
    if defect > 1e-10 {
        return Err(Error::NotHermitian(defect));
    }
    let n = m.dim();
    // symmetrize so the iteration sees an exactly Hermitian matrix
    let mut a = m.add(&m.adjoint()).scale(C64::new(0.5, 0.0));
    let mut v = Operator::identity(n);
    let threshold = JACOBI_OFF_TOL * a.frobenius_norm();

    for _ in 0..JACOBI_MAX_SWEEPS {
        if off_diagonal_norm(&a) <= threshold {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].re.total_cmp(&a[(j, j)].re));
    let values = order.iter().map(|&k| a[(k, k)].re).collect();
    let mut vectors = Operator::zeros(n);
    for (col, &k) in order.iter().enumerate() {
        let lead = (0..n)
            .map(|i| v[(i, k)])
            .find(|z| z.norm() > 1e-12)
            .unwrap_or(C64::new(1.0, 0.0));
        let fix = lead.conj() / lead.norm();
        for i in 0..n {
            vectors[(i, col)] = v[(i, k)] * fix;
        }
    }
    Ok(HermitianEigen { values, vectors })
}

fn rotate(a: &mut Operator, v: &mut Operator, p: usize, q: usize) {
    let apq = a[(p, q)];
    let r = apq.norm();
    if r == 0.0 {
        return;
    }
    let phase = apq / r;
    let theta = (a[(q, q)].re - a[(p, p)].re) / (2.0 * r);
    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    let j_pq = phase * s;
    let j_qp = -phase.conj() * s;
    let n = a.dim();

    // A ← A·J and V ← V·J (columns p, q)
    for k in 0..n {
        let (akp, akq) = (a[(k, p)], a[(k, q)]);
        a[(k, p)] = akp * c + akq * j_qp;
        a[(k, q)] = akp * j_pq + akq * c;
        let (vkp, vkq) = (v[(k, p)], v[(k, q)]);
        v[(k, p)] = vkp * c + vkq * j_qp;
        v[(k, q)] = vkp * j_pq + vkq * c;
    }
    // A ← J†·A (rows p, q)
    for k in 0..n {
        let (apk, aqk) = (a[(p, k)], a[(q, k)]);
        a[(p, k)] = apk * c + aqk * j_qp.conj();
        a[(q, k)] = apk * j_pq.conj() + aqk * c;
    }
    a[(p, q)] = C64::new(0.0, 0.0);
    a[(q, p)] = C64::new(0.0, 0.0);
    a[(p, p)] = C64::new(a[(p, p)].re, 0.0);
    a[(q, q)] = C64::new(a[(q, q)].re, 0.0);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::pauli::{dot_sigma, sigma_x, sigma_z};

    #[test]
    fn sigma_z_spectrum() {
        let eig = hermitian_eig(&sigma_z()).unwrap();
        assert_eq!(eig.values, vec![-1.0, 1.0]);
        assert_eq!(eig.vector(0).amplitudes(), &[C64::new(0., 0.), C64::new(1., 0.)]);
        assert_eq!(eig.vector(1).amplitudes(), &[C64::new(1., 0.), C64::new(0., 0.)]);
    }

    #[test]
    fn sigma_x_spectrum() {
        let eig = hermitian_eig(&sigma_x()).unwrap();
        assert!((eig.values[0] + 1.0).abs() < 1e-15 && (eig.values[1] - 1.0).abs() < 1e-15);
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let down = eig.vector(0);
        assert!((down.amplitudes()[0] - h).norm() < 1e-15);
        assert!((down.amplitudes()[1] + h).norm() < 1e-15);
    }

    #[test]
    fn tilted_field_up_state() {
        // n(π/3, 0)·σ: +1 eigenvector is (cos π/6, sin π/6)
        let phi = std::f64::consts::FRAC_PI_3;
        let eig = hermitian_eig(&dot_sigma([phi.sin(), 0.0, phi.cos()])).unwrap();
        assert!((eig.values[1] - 1.0).abs() < 1e-14);
        let up = eig.vector(1);
        let (s, c) = (phi / 2.0).sin_cos();
        assert!((up.amplitudes()[0] - c).norm() < 1e-14);
        assert!((up.amplitudes()[1] - s).norm() < 1e-14);
    }

    #[test]
    fn rejects_non_hermitian() {
        let m = Operator::from_rows([
            [C64::new(0., 0.), C64::new(1., 0.)],
            [C64::new(0., 0.), C64::new(0., 0.)],
        ]);
        assert!(matches!(hermitian_eig(&m), Err(Error::NotHermitian(_))));
    }

    #[test]
    fn degenerate_and_zero_matrices() {
        let eig = hermitian_eig(&Operator::zeros(4)).unwrap();
        assert_eq!(eig.values, vec![0.0; 4]);
        let eig = hermitian_eig(&Operator::identity(8)).unwrap();
        assert!(eig.vectors.max_abs_diff(&Operator::identity(8)) < 1e-15);
    }
}
