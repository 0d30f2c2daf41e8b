//! Pauli matrices and closed-form SU(2) exponentials.

use super::Operator;
use crate::C64;

const ZERO: C64 = C64::new(0.0, 0.0);
const ONE: C64 = C64::new(1.0, 0.0);
const I: C64 = C64::new(0.0, 1.0);

pub fn identity2() -> Operator {
    Operator::identity(2)
}

pub fn sigma_x() -> Operator {
    Operator::from_rows([[ZERO, ONE], [ONE, ZERO]])
}

pub fn sigma_y() -> Operator {
    Operator::from_rows([[ZERO, -I], [I, ZERO]])
}

pub fn sigma_z() -> Operator {
    Operator::from_rows([[ONE, ZERO], [ZERO, -ONE]])
}

/// `v·σ` for a real 3-vector.
pub fn dot_sigma(v: [f64; 3]) -> Operator {
    let [x, y, z] = v;
    Operator::from_rows([
        [C64::new(z, 0.0), C64::new(x, -y)],
        [C64::new(x, y), C64::new(-z, 0.0)],
    ])
}

/// `exp(−i·t·v·σ) = cos(|v|t)·I − i·sin(|v|t)·(v̂·σ)`.
pub fn exp_dot_sigma(v: [f64; 3], t: f64) -> Operator {
    let len = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
    if len == 0.0 {
        return identity2();
    }
    let angle = len * t;
    let (s, c) = angle.sin_cos();
    let [x, y, z] = v.map(|a| a / len);
    // c·I − i·s·(x σx + y σy + z σz)
    Operator::from_rows([
        [C64::new(c, -s * z), C64::new(-s * y, -s * x)],
        [C64::new(s * y, -s * x), C64::new(c, s * z)],
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exp_matches_axis_cases() {
        let t = 0.37;
        let u = exp_dot_sigma([0.0, 0.0, 1.0], t);
        let expected = Operator::diagonal(&[C64::from_polar(1.0, -t), C64::from_polar(1.0, t)]);
        assert!(u.max_abs_diff(&expected) < 1e-15);

        let u = exp_dot_sigma([0.3, -0.4, 1.2], 0.9);
        assert!(u.is_unitary(1e-14));
        assert!((u.determinant() - 1.0).norm() < 1e-14);
    }

    #[test]
    fn exp_agrees_with_power_series() {
        let v = [0.2, 0.5, -0.3];
        let t = 0.8;
        let generator = dot_sigma(v).scale(C64::new(0.0, -t));
        let mut term = Operator::identity(2);
        let mut sum = Operator::identity(2);
        for k in 1..30 {
            term = term.matmul(&generator).scale(C64::new(1.0 / k as f64, 0.0));
            sum = sum.add(&term);
        }
        assert!(sum.max_abs_diff(&exp_dot_sigma(v, t)) < 1e-14);
    }

    #[test]
    fn paulis_anticommute() {
        let xy = sigma_x().matmul(&sigma_y());
        let yx = sigma_y().matmul(&sigma_x());
        assert!(xy.add(&yx).frobenius_norm() < 1e-15);
        assert!(xy.max_abs_diff(&sigma_z().scale(I)) < 1e-15);
    }
}
