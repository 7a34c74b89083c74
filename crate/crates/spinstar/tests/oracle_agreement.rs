//! Closed forms against the numerical oracles.
//!
//! The closed-form amplitudes and reduced densities are compared with exact
//! diagonalization on both Hamiltonian representations, and the two
//! representations with each other, on small systems where everything is
//! affordable inside an ordinary test run. The acceptance suite repeats
//! these comparisons at the full advertised scales.

use ndarray::{Array1, Array2};
use ndarray_linalg::{Eigh, UPLO};
use num_complex::Complex64;
use spinstar::oracle::{
    bath_j_squared, build_collective_hamiltonian, build_full_hamiltonian, central_s_squared,
    expectation, partial_trace_to_pair, reduce_collective_to_pair, spin_star_initial_state,
    CollectiveBasis, PairDensityMatrix, Propagator, StateVector, MS_VALUES,
};
use spinstar::{evolved_state, reduced_density, singlet_reduced, uniform_grid, SpinStarParams};

const ALPHA: f64 = 1.0;
const OMEGA: f64 = 0.7;

fn grid() -> Vec<f64> {
    uniform_grid(5.0, 40)
}

fn max_norm<'a>(it: impl IntoIterator<Item = &'a Complex64>) -> f64 {
    it.into_iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Max entrywise deviation between the branch expansion and a collective
/// state vector, over every basis slot (absent branches must read zero).
fn branch_deviation(
    params: &SpinStarParams,
    t: f64,
    psi: &StateVector,
    basis: &CollectiveBasis,
) -> f64 {
    let mut predicted = Array1::<Complex64>::zeros(basis.dim());
    for br in evolved_state(params, t) {
        let idx =
            basis.index_of(br.central_m, br.bath_m_j).expect("branches stay inside the sector");
        predicted[idx] = br.amplitude;
    }
    let diff = &predicted - psi.vector();
    max_norm(diff.iter())
}

#[test]
fn closed_form_matches_collective_oracle() {
    let mut worst = 0.0f64;
    for n in 1..=6u32 {
        let j = f64::from(n) / 2.0;
        let basis = CollectiveBasis::new(j).unwrap();
        let h = build_collective_hamiltonian(j, OMEGA, ALPHA).unwrap();
        let prop = Propagator::new(&h);
        for k in 0..=n {
            for &ms in &MS_VALUES {
                let params = SpinStarParams::new(n, k, ms, ALPHA, OMEGA).unwrap();
                let psi0 = basis.state(ms, params.m_j()).unwrap();
                for (i, psi) in prop.propagate_grid(&psi0, &grid()).unwrap().iter().enumerate() {
                    let t = grid()[i];
                    worst = worst.max(branch_deviation(&params, t, psi, &basis));
                    let reduced = reduce_collective_to_pair(psi, &basis).unwrap();
                    let closed = PairDensityMatrix::from_symmetric(&reduced_density(&params, t));
                    worst = worst.max(reduced.max_abs_diff(&closed));
                }
            }
        }
    }
    assert!(worst < 1e-9, "max deviation {worst:e}");
}

#[test]
fn closed_form_matches_collective_oracle_large_bath() {
    let n = 20u32;
    let j = 10.0;
    let basis = CollectiveBasis::new(j).unwrap();
    let prop = Propagator::new(&build_collective_hamiltonian(j, OMEGA, ALPHA).unwrap());
    let mut worst = 0.0f64;
    for k in [0, 1, 7, 10, 19, 20] {
        for &ms in &MS_VALUES {
            let params = SpinStarParams::new(n, k, ms, ALPHA, OMEGA).unwrap();
            let psi0 = basis.state(ms, params.m_j()).unwrap();
            for (i, psi) in prop.propagate_grid(&psi0, &grid()).unwrap().iter().enumerate() {
                let t = grid()[i];
                worst = worst.max(branch_deviation(&params, t, psi, &basis));
                let reduced = reduce_collective_to_pair(psi, &basis).unwrap();
                let closed = PairDensityMatrix::from_symmetric(&reduced_density(&params, t));
                worst = worst.max(reduced.max_abs_diff(&closed));
            }
        }
    }
    assert!(worst < 1e-9, "max deviation {worst:e}");
}

#[test]
fn closed_form_matches_full_oracle() {
    let mut worst = 0.0f64;
    for n in 1..=4u32 {
        let prop = Propagator::new(&build_full_hamiltonian(n, OMEGA, ALPHA).unwrap());
        for k in 0..=n {
            for &ms in &MS_VALUES {
                let params = SpinStarParams::new(n, k, ms, ALPHA, OMEGA).unwrap();
                let psi0 = spin_star_initial_state(n, k, ms).unwrap();
                for (i, psi) in prop.propagate_grid(&psi0, &grid()).unwrap().iter().enumerate() {
                    let reduced = partial_trace_to_pair(psi, n).unwrap();
                    let closed =
                        PairDensityMatrix::from_symmetric(&reduced_density(&params, grid()[i]));
                    worst = worst.max(reduced.max_abs_diff(&closed));
                }
            }
        }
    }
    assert!(worst < 1e-9, "max deviation {worst:e}");
}

#[test]
fn collective_and_full_oracles_agree() {
    let mut worst = 0.0f64;
    for n in 1..=4u32 {
        let j = f64::from(n) / 2.0;
        let basis = CollectiveBasis::new(j).unwrap();
        let coll = Propagator::new(&build_collective_hamiltonian(j, OMEGA, ALPHA).unwrap());
        let full = Propagator::new(&build_full_hamiltonian(n, OMEGA, ALPHA).unwrap());
        for k in 0..=n {
            for &ms in &MS_VALUES {
                let mj = f64::from(k) - j;
                let psi_c0 = basis.state(ms, mj).unwrap();
                let psi_f0 = spin_star_initial_state(n, k, ms).unwrap();
                let cs = coll.propagate_grid(&psi_c0, &grid()).unwrap();
                let fs = full.propagate_grid(&psi_f0, &grid()).unwrap();
                for (pc, pf) in cs.iter().zip(&fs) {
                    let rc = reduce_collective_to_pair(pc, &basis).unwrap();
                    let rf = partial_trace_to_pair(pf, n).unwrap();
                    worst = worst.max(rc.max_abs_diff(&rf));
                }
            }
        }
    }
    assert!(worst < 1e-9, "max deviation {worst:e}");
}

#[test]
fn full_propagation_conserves_sector_quantities() {
    let n = 3u32;
    let h = build_full_hamiltonian(n, OMEGA, ALPHA).unwrap();
    let prop = Propagator::new(&h);
    let s2 = central_s_squared(n);
    let j2 = bath_j_squared(n);
    for k in 0..=n {
        for &ms in &MS_VALUES {
            let psi0 = spin_star_initial_state(n, k, ms).unwrap();
            let e0 = expectation(&h, &psi0).unwrap();
            for psi in prop.propagate_grid(&psi0, &grid()).unwrap() {
                let norm = psi.vector().iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
                assert!((norm - 1.0).abs() < 1e-10);
                assert!((expectation(&h, &psi).unwrap() - e0).abs() < 1e-10);
                assert!((expectation(&s2, &psi).unwrap() - 2.0).abs() < 1e-10);
                let jj = f64::from(n) / 2.0 * (f64::from(n) / 2.0 + 1.0);
                assert!((expectation(&j2, &psi).unwrap() - jj).abs() < 1e-10);
            }
        }
    }
}

#[test]
fn eigendecomposition_residuals_stay_small() {
    let hams = [
        build_collective_hamiltonian(2.0, OMEGA, ALPHA).unwrap(),
        build_collective_hamiltonian(10.0, OMEGA, ALPHA).unwrap(),
        build_collective_hamiltonian(10.0, 0.0, 2.3).unwrap(),
        build_full_hamiltonian(3, OMEGA, ALPHA).unwrap(),
    ];
    for h in &hams {
        let (evals, evecs) = h.matrix().eigh(UPLO::Lower).unwrap();
        let lam = Array2::from_diag(&evals.mapv(|v| Complex64::new(v, 0.0)));
        let residual = h.matrix().dot(&evecs) - evecs.dot(&lam);
        let scale = max_norm(h.matrix().iter());
        let dev = max_norm(residual.iter());
        assert!(dev < 1e-9 * scale.max(1.0), "residual {dev:e} at scale {scale:e}");
    }
}

/// The pair prepared in its singlet is annihilated by the exchange term:
/// the reduced state stays the maximally entangled projector under the full
/// Hamiltonian, whatever the bath does.
#[test]
fn singlet_pair_is_dynamically_protected() {
    let n = 3u32;
    let bath_k = 1u32;
    let prop = Propagator::new(&build_full_hamiltonian(n, OMEGA, ALPHA).unwrap());
    let bdim = 1usize << n;
    let bath = spin_star_initial_state(n, bath_k, 1).unwrap(); // uu block holds the Dicke state
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let mut v = Array1::<Complex64>::zeros(4 * bdim);
    for bi in 0..bdim {
        let amp = bath.vector()[bi]; // amplitude of the Dicke component
        v[bdim + bi] = Complex64::new(h, 0.0) * amp;
        v[2 * bdim + bi] = Complex64::new(-h, 0.0) * amp;
    }
    let psi0 = StateVector::new(v).unwrap();
    let target = PairDensityMatrix::from_xstate(&singlet_reduced());
    assert!(
        (target.wootters_concurrence() - 1.0).abs() < 1e-7,
        "singlet projector must be maximally entangled"
    );
    for psi in prop.propagate_grid(&psi0, &grid()).unwrap() {
        let reduced = partial_trace_to_pair(&psi, n).unwrap();
        assert!(reduced.max_abs_diff(&target) < 1e-10);
    }
}
