use std::f64::consts::{PI, TAU};

use approx::assert_abs_diff_eq;
use proptest::prelude::*;

use spinphase::entanglement::{
    general_concurrence, spin_flip_spectrum, wootters_concurrence, wootters_concurrence_mixed,
};
use spinphase::evolution::{cyclic_evolve_pair, pair_state, propagate};
use spinphase::geometric::{
    closed_form_gamma, eigenstate_cycle, pancharatnam_overlap, phase_distance, principal,
    sigma_matrix, three_spin_phase, wilson_loop_phase, Branch, PairPhases, PhaseConvention,
    SinglePhases,
};
use spinphase::linalg::pauli::exp_dot_sigma;
use spinphase::linalg::{
    hermitian_eig, kron, partial_trace, psd_sqrt, DensityMatrix, Operator, StateVector, Subsystem,
};
use spinphase::spin::{
    berry_factor, field_direction, flux_phase, hamiltonian, instantaneous_eigenstates, FieldConfig,
};
use spinphase::C64;

fn complex() -> impl Strategy<Value = C64> {
    (-1.0..1.0f64, -1.0..1.0f64).prop_map(|(re, im)| C64::new(re, im))
}

fn operator(dim: usize) -> impl Strategy<Value = Operator> {
    prop::collection::vec(complex(), dim * dim)
        .prop_map(move |e| Operator::from_row_major(dim, e).unwrap())
}

fn hermitian(dim: usize) -> impl Strategy<Value = Operator> {
    operator(dim).prop_map(|a| a.add(&a.adjoint()))
}

fn state(dim: usize) -> impl Strategy<Value = StateVector> {
    prop::collection::vec(complex(), dim)
        .prop_filter("vector too short to normalize", |v| {
            v.iter().map(|z| z.norm_sqr()).sum::<f64>() > 1e-3
        })
        .prop_map(|v| StateVector::normalized(v).unwrap())
}

/// Local unitary `exp(−i·v·σ)` with an arbitrary axis.
fn unitary2() -> impl Strategy<Value = Operator> {
    prop::array::uniform3(-3.0..3.0f64).prop_map(|v| exp_dot_sigma(v, 1.0))
}

/// Mixture of three pure two-qubit states with random weights.
fn mixed_two_qubit() -> impl Strategy<Value = DensityMatrix> {
    (prop::collection::vec(state(4), 3), prop::array::uniform3(0.01..1.0f64)).prop_map(|(states, w)| {
        let total: f64 = w.iter().sum();
        let mut rho = Operator::zeros(4);
        for (s, p) in states.iter().zip(w) {
            let a = s.amplitudes();
            rho = rho.add(&Operator::outer(a, a).scale(C64::new(p / total, 0.0)));
        }
        DensityMatrix::new(rho).unwrap()
    })
}

fn phi() -> impl Strategy<Value = f64> {
    0.0..=PI
}

fn field() -> impl Strategy<Value = FieldConfig> {
    (phi(), 0.1..5.0f64, 0.1..50.0f64).prop_map(|(p, w0, wl)| FieldConfig::new(p, w0, wl).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn kron_is_associative(a in operator(2), b in operator(2), c in operator(2)) {
        let left = kron(&kron(&a, &b), &c);
        let right = kron(&a, &kron(&b, &c));
        prop_assert!(left.max_abs_diff(&right) < 1e-14);
    }

    #[test]
    fn kron_of_products_is_product_of_krons(a in operator(2), b in operator(2), c in operator(2), d in operator(2)) {
        let lhs = kron(&a, &b).matmul(&kron(&c, &d));
        let rhs = kron(&a.matmul(&c), &b.matmul(&d));
        prop_assert!(lhs.max_abs_diff(&rhs) < 1e-13);
    }

    #[test]
    fn eigen_decomposition_reconstructs(h in hermitian(4)) {
        let eig = hermitian_eig(&h).unwrap();
        prop_assert!(eig.reconstruct().max_abs_diff(&h) < 1e-12);
        prop_assert!(eig.values.windows(2).all(|w| w[0] <= w[1]));
        for j in 0..4 {
            for k in 0..4 {
                let overlap = eig.vector(j).inner(&eig.vector(k));
                let expected = if j == k { 1.0 } else { 0.0 };
                prop_assert!((overlap - C64::new(expected, 0.0)).norm() < 1e-12);
            }
        }
        let trace: f64 = eig.values.iter().sum();
        prop_assert!((trace - h.trace().re).abs() < 1e-12);
    }

    #[test]
    fn psd_sqrt_squares_back(rho in mixed_two_qubit()) {
        let root = psd_sqrt(&rho).unwrap();
        prop_assert!(root.hermitian_defect() < 1e-12);
        prop_assert!(root.matmul(&root).max_abs_diff(rho.as_operator()) < 1e-9);
    }

    #[test]
    fn partial_trace_of_product_recovers_factors(a in state(2), b in state(2)) {
        let rho = DensityMatrix::from_pure(&a.kron(&b));
        let ra = partial_trace(&rho, Subsystem::A).unwrap();
        let rb = partial_trace(&rho, Subsystem::B).unwrap();
        let pa = Operator::outer(a.amplitudes(), a.amplitudes());
        let pb = Operator::outer(b.amplitudes(), b.amplitudes());
        prop_assert!(ra.as_operator().max_abs_diff(&pa) < 1e-14);
        prop_assert!(rb.as_operator().max_abs_diff(&pb) < 1e-14);
    }

    #[test]
    fn instantaneous_eigenstates_diagonalize_field(cfg in field(), t in 0.0..20.0f64) {
        let (up, down) = instantaneous_eigenstates(&cfg, t);
        let h = hamiltonian(&cfg, t);
        let e = 0.5 * cfg.omega_larmor();
        let hu = h.apply_state(&up);
        let hd = h.apply_state(&down);
        prop_assert!(hu.distance(&up.scaled(C64::new(e, 0.0))) < 1e-13);
        prop_assert!(hd.distance(&down.scaled(C64::new(-e, 0.0))) < 1e-13);
        prop_assert!(up.inner(&down).norm() < 1e-14);
        prop_assert!((up.norm() - 1.0).abs() < 1e-14 && (down.norm() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn field_direction_is_unit(cfg in field(), t in -50.0..50.0f64) {
        let n = field_direction(&cfg, t);
        let len = (n[0] * n[0] + n[1] * n[1] + n[2] * n[2]).sqrt();
        prop_assert!((len - 1.0).abs() < 1e-15);
        prop_assert!((n[2] - cfg.phi().cos()).abs() < 1e-15);
    }

    #[test]
    fn berry_factor_modulus_is_monotone(a in phi(), b in phi()) {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        let (flo, fhi) = (berry_factor(lo).unwrap(), berry_factor(hi).unwrap());
        prop_assert!(flo.abs_b <= fhi.abs_b);
        prop_assert!((0.0..=1.0).contains(&fhi.abs_b));
        prop_assert_eq!(fhi.b, -fhi.abs_b);
    }

    #[test]
    fn flux_phase_is_berry_phase_factor(p in phi()) {
        let b = berry_factor(p).unwrap().b;
        let (gamma_plus, _) = closed_form_gamma(p).unwrap();
        prop_assert!((flux_phase(b) - C64::from_polar(1.0, gamma_plus)).norm() < 1e-14);
    }

    #[test]
    fn wilson_loop_is_gauge_invariant(
        p in 0.05..PI - 0.05,
        phases in prop::collection::vec(-PI..PI, 256),
        branch in prop::bool::ANY,
    ) {
        let cfg = FieldConfig::with_ratio(p, 10.0).unwrap();
        let branch = if branch { Branch::Up } else { Branch::Down };
        let path = eigenstate_cycle(&cfg, branch, 256);
        let regauged: Vec<StateVector> = path
            .iter()
            .zip(&phases)
            .map(|(s, &a)| s.scaled(C64::from_polar(1.0, a)))
            .collect();
        let g = wilson_loop_phase(&path, true).unwrap();
        let h = wilson_loop_phase(&regauged, true).unwrap();
        prop_assert!(phase_distance(g, h) < 1e-12);
        prop_assert!(PhaseConvention::contains(g));
    }

    #[test]
    fn branch_loops_sum_to_full_turn(p in 0.05..PI - 0.05) {
        let cfg = FieldConfig::with_ratio(p, 10.0).unwrap();
        let up = wilson_loop_phase(&eigenstate_cycle(&cfg, Branch::Up, 2000), true).unwrap();
        let down = wilson_loop_phase(&eigenstate_cycle(&cfg, Branch::Down, 2000), true).unwrap();
        let (gp, gm) = closed_form_gamma(p).unwrap();
        prop_assert!(phase_distance(up, gp) < 1e-5);
        prop_assert!(phase_distance(down, gm) < 1e-5);
    }

    #[test]
    fn sigma_inverts_under_negated_phase(g in -TAU..TAU) {
        let product = sigma_matrix(g).matmul(&sigma_matrix(-g));
        prop_assert!(product.max_abs_diff(&Operator::identity(2)) < 1e-15);
        prop_assert!(sigma_matrix(g).is_unitary(1e-14));
    }

    #[test]
    fn wrap_preserves_phase(x in -100.0..100.0f64) {
        let w = PhaseConvention::wrap(x);
        prop_assert!(PhaseConvention::contains(w));
        prop_assert!(phase_distance(w, x) < 1e-12);
        let p = principal(x);
        prop_assert!(p > -PI && p <= PI);
        prop_assert!(phase_distance(p, x) < 1e-12);
    }

    #[test]
    fn three_spin_single_term_adds_phases(
        amp in complex().prop_filter("nonzero", |z| z.norm() > 1e-3),
        ab in -PI..PI, c in -PI..PI,
    ) {
        let zero = C64::new(0.0, 0.0);
        let pairs = PairPhases { ab, bc: 1.0, ca: 2.0 };
        let singles = SinglePhases { a: 0.3, b: 0.4, c };
        let r = three_spin_phase([amp, zero, zero], pairs, singles).unwrap();
        prop_assert!(phase_distance(r.phase, ab + c + amp.arg()) < 1e-12);
        prop_assert!((r.visibility - amp.norm()).abs() < 1e-15);
    }

    #[test]
    fn wootters_invariant_under_local_unitaries(s in state(4), u in unitary2(), v in unitary2()) {
        let moved = StateVector::normalized(kron(&u, &v).apply(s.amplitudes())).unwrap();
        let before = wootters_concurrence(&s).unwrap();
        let after = wootters_concurrence(&moved).unwrap();
        prop_assert!((before - after).abs() < 1e-12);
        prop_assert!((before - general_concurrence(s.amplitudes()).unwrap()).abs() < 1e-12);
    }

    #[test]
    fn mixed_concurrence_is_bounded_and_invariant(rho in mixed_two_qubit(), u in unitary2(), v in unitary2()) {
        let c = wootters_concurrence_mixed(&rho).unwrap();
        prop_assert!((0.0..=1.0 + 1e-12).contains(&c));
        let w = kron(&u, &v);
        let moved = DensityMatrix::new(w.matmul(rho.as_operator()).matmul(&w.adjoint())).unwrap();
        prop_assert!((wootters_concurrence_mixed(&moved).unwrap() - c).abs() < 1e-8);
        let l = spin_flip_spectrum(&rho).unwrap();
        prop_assert!(((l[0] - l[1] - l[2] - l[3]).max(0.0) - c).abs() < 1e-6);
    }

    #[test]
    fn mixed_route_agrees_on_pure_states(s in state(4)) {
        let pure = wootters_concurrence(&s).unwrap();
        let mixed = wootters_concurrence_mixed(&DensityMatrix::from_pure(&s)).unwrap();
        prop_assert!((pure - mixed).abs() < 1e-6);
    }

    #[test]
    fn pancharatnam_matches_state_overlap(alpha in complex(), beta in complex(), p in phi()) {
        prop_assume!(alpha.norm_sqr() + beta.norm_sqr() > 1e-3);
        let cfg = FieldConfig::with_ratio(p, 10.0).unwrap();
        let (gamma_plus, _) = closed_form_gamma(p).unwrap();
        let overlap = pair_state(alpha, beta, &cfg)
            .unwrap()
            .inner(&cyclic_evolve_pair(alpha, beta, &cfg).unwrap());
        match pancharatnam_overlap(alpha, beta, gamma_plus) {
            Ok((value, record)) => {
                prop_assert!((value - overlap).norm() < 1e-13);
                prop_assert!((record.visibility - overlap.norm()).abs() < 1e-13);
                if record.visibility > 1e-6 {
                    prop_assert!(phase_distance(record.total, overlap.arg()) < 1e-8);
                }
                prop_assert!(record.closure_defect() < 1e-15);
            }
            Err(_) => prop_assert!(overlap.norm() < 1e-10),
        }
    }

    #[test]
    fn propagation_is_local(cfg in field(), a in state(2), b in state(2)) {
        let t = 0.37 * cfg.period();
        let single_a = propagate(&a, &cfg, 0.0, t, 64).unwrap().final_state;
        let single_b = propagate(&b, &cfg, 0.0, t, 64).unwrap().final_state;
        let pair = propagate(&a.kron(&b), &cfg, 0.0, t, 64).unwrap();
        prop_assert!(pair.final_state.distance(&single_a.kron(&single_b)) < 1e-12);
        prop_assert!(pair.unitarity_defect < 1e-12);
    }
}

#[test]
fn concurrence_range_endpoints() {
    let up = StateVector::basis(2, 0).unwrap();
    assert_abs_diff_eq!(wootters_concurrence(&up.kron(&up)).unwrap(), 0.0, epsilon = 1e-15);
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let singlet = StateVector::new(vec![
        C64::new(0.0, 0.0),
        C64::new(h, 0.0),
        C64::new(-h, 0.0),
        C64::new(0.0, 0.0),
    ])
    .unwrap();
    assert_abs_diff_eq!(wootters_concurrence(&singlet).unwrap(), 1.0, epsilon = 1e-14);
}
