//! Property tests for the invariants of the X-state criterion and the
//! closed-form dynamics: algebraic equivalences away from the separability
//! boundary, agreement with the spin-flip concurrence, normalization, and the
//! symmetries of the reduced evolution.

use num_complex::Complex64;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use spinstar::oracle::PairDensityMatrix;
use spinstar::{
    amplitudes, entanglement_windows, evolved_state, reduced_density, time_series, uniform_grid,
    SpinStarParams, SymmetricXState, XState,
};

fn random_symmetric(rng: &mut impl Rng) -> SymmetricXState {
    let (x, y, z): (f64, f64, f64) =
        (rng.gen_range(0.001..1.0), rng.gen_range(0.001..1.0), rng.gen_range(0.001..1.0));
    let s = x + 2.0 * y + z;
    SymmetricXState::new(x / s, y / s, z / s)
}

/// Random full-rank X state. Populations are floored away from zero and the
/// coherence kept off the Landau boundary so that the eigenvalue-based
/// concurrence retains full accuracy (it loses digits near rank deficiency).
fn random_xstate(rng: &mut impl Rng) -> XState {
    let raw: [f64; 4] = [
        rng.gen_range(0.01..1.0),
        rng.gen_range(0.01..1.0),
        rng.gen_range(0.01..1.0),
        rng.gen_range(0.01..1.0),
    ];
    let s: f64 = raw.iter().sum();
    let (a, b, d, e) = (raw[0] / s, raw[1] / s, raw[2] / s, raw[3] / s);
    let mag = rng.gen_range(0.0..0.999) * (b * d).sqrt();
    let phase = rng.gen_range(0.0..std::f64::consts::TAU);
    XState::new(a, b, Complex64::from_polar(mag, phase), d, e)
}

prop_compose! {
    fn arb_symmetric()(x in 0.001..1.0f64, y in 0.001..1.0f64, z in 0.001..1.0f64)
        -> SymmetricXState
    {
        let s = x + 2.0 * y + z;
        SymmetricXState::new(x / s, y / s, z / s)
    }
}

prop_compose! {
    fn arb_xstate()(
        pa in 0.01..1.0f64,
        pb in 0.01..1.0f64,
        pd in 0.01..1.0f64,
        pe in 0.01..1.0f64,
        frac in 0.0..0.999f64,
        phase in 0.0..std::f64::consts::TAU,
    ) -> XState {
        let s = pa + pb + pd + pe;
        let (a, b, d, e) = (pa / s, pb / s, pd / s, pe / s);
        XState::new(a, b, Complex64::from_polar(frac * (b * d).sqrt(), phase), d, e)
    }
}

prop_compose! {
    /// Valid (n, k, m_s) with n up to 120.
    fn arb_params()(
        n in 1u32..=120,
        kf in 0.0..1.0f64,
        ms in -1i32..=1,
        alpha in 0.05..3.0f64,
        omega in -2.0..2.0f64,
    ) -> SpinStarParams {
        let k = (kf * f64::from(n)).round() as u32;
        SpinStarParams::new(n, k, ms, alpha, omega).unwrap()
    }
}

proptest! {
    /// The moment criterion and the concurrence sign never disagree.
    #[test]
    fn verdict_equals_concurrence_sign(s in arb_symmetric()) {
        s.validate().unwrap();
        let v = s.criterion();
        prop_assert_eq!(v.entangled, v.concurrence > 0.0);
        prop_assert_eq!(v.entangled, s.as_xstate().concurrence() > 0.0);
    }

    /// Away from the boundary, the four equivalent predicates agree:
    /// variance < 2b, 2(a+e) - (a-e)^2 < 1, sqrt(a) + sqrt(e) < 1 and
    /// concurrence > 0.
    #[test]
    fn four_predicates_agree_off_boundary(s in arb_symmetric()) {
        let m = s.sz_moments();
        prop_assume!((m.variance - 2.0 * s.b).abs() > 1e-9);
        let p1 = m.variance < 2.0 * s.b;
        let p2 = 2.0 * (s.a + s.e) - (s.a - s.e).powi(2) < 1.0;
        let p3 = s.a.sqrt() + s.e.sqrt() < 1.0;
        let p4 = s.criterion().entangled;
        prop_assert_eq!(p1, p2);
        prop_assert_eq!(p1, p3);
        prop_assert_eq!(p1, p4);
    }

    /// Window membership of <Sz> decides entanglement at fixed b <= 1/4
    /// (away from the band edges, where the two float routes may differ in
    /// the last bit).
    #[test]
    fn window_membership_matches_verdict(s in arb_symmetric()) {
        prop_assume!(s.b <= 0.25);
        let mean = s.sz_moments().mean;
        prop_assume!((mean * mean - (1.0 - 4.0 * s.b)).abs() > 1e-12);
        let w = entanglement_windows(s.b).unwrap();
        prop_assert_eq!(w.contains(mean), s.criterion().entangled);
    }

    /// Closed-form X-state concurrence against the spin-flip construction.
    #[test]
    fn concurrence_matches_spin_flip(x in arb_xstate()) {
        x.validate().unwrap();
        let oracle = PairDensityMatrix::from_xstate(&x).wootters_concurrence();
        prop_assert!((x.concurrence() - oracle).abs() < 1e-10);
    }

    /// The transition amplitudes stay on the unit sphere at all times.
    #[test]
    fn amplitude_norms_stay_unit(p in arb_params(), t in 0.0..12.0f64) {
        let amp = amplitudes(&p, t);
        let norm = amp.a.norm_sqr() + amp.b.norm_sqr() + amp.c.norm_sqr()
            + amp.d.norm_sqr() + amp.e.norm_sqr();
        prop_assert!((norm - 1.0).abs() < 1e-12);
        prop_assert!((amp.global_phase.norm() - 1.0).abs() < 1e-12);
        let branch_norm: f64 =
            evolved_state(&p, t).iter().map(|b| b.amplitude.norm_sqr()).sum();
        prop_assert!((branch_norm - 1.0).abs() < 1e-12);
    }

    /// Every evolved branch stays inside the bath ladder, and the reduced
    /// state is a valid symmetric X state with unit trace.
    #[test]
    fn evolution_stays_physical(p in arb_params(), t in 0.0..12.0f64) {
        let branches = evolved_state(&p, t);
        prop_assert!((1..=3).contains(&branches.len()));
        for b in &branches {
            prop_assert!(b.bath_m_j.abs() <= p.j() + 1e-12);
            prop_assert!(matches!(b.central_m, -1..=1));
        }
        let s = reduced_density(&p, t);
        s.validate().unwrap();
        prop_assert!((s.a + 2.0 * s.b + s.e - 1.0).abs() < 1e-12);
    }

    /// The reduced pair state does not depend on omega (a global phase).
    #[test]
    fn reduced_state_ignores_omega(
        n in 1u32..=120,
        kf in 0.0..1.0f64,
        ms in -1i32..=1,
        alpha in 0.05..3.0f64,
        omega in -3.0..3.0f64,
        t in 0.0..12.0f64,
    ) {
        let k = (kf * f64::from(n)).round() as u32;
        let with = SpinStarParams::new(n, k, ms, alpha, omega).unwrap();
        let without = SpinStarParams::new(n, k, ms, alpha, 0.0).unwrap();
        let sw = reduced_density(&with, t);
        let so = reduced_density(&without, t);
        prop_assert_eq!((sw.a, sw.b, sw.e), (so.a, so.b, so.e));
    }

    /// Mirror symmetry: (m_s = -1, k) evolves exactly as (m_s = +1, N - k)
    /// with the a and e populations exchanged. The ladder factors of the two
    /// configurations are the same floating-point numbers, so the match is
    /// bitwise.
    #[test]
    fn specular_series_match(
        n in 1u32..=120,
        kf in 0.0..1.0f64,
        alpha in 0.05..3.0f64,
        t in 0.0..12.0f64,
    ) {
        let k = (kf * f64::from(n)).round() as u32;
        let down = SpinStarParams::new(n, k, -1, alpha, 0.0).unwrap();
        let up = SpinStarParams::new(n, n - k, 1, alpha, 0.0).unwrap();
        let sd = reduced_density(&down, t);
        let su = reduced_density(&up, t);
        prop_assert_eq!((sd.a, sd.b, sd.e), (su.e, su.b, su.a));
    }

    /// Edge-of-ladder preparations are exactly stationary.
    #[test]
    fn edge_states_are_stationary(n in 1u32..=120, alpha in 0.05..3.0f64, t in 0.0..12.0f64) {
        let top = SpinStarParams::new(n, n, 1, alpha, 0.0).unwrap();
        let s = reduced_density(&top, t);
        prop_assert_eq!((s.a, s.b, s.e), (1.0, 0.0, 0.0));
        let bottom = SpinStarParams::new(n, 0, -1, alpha, 0.0).unwrap();
        let s = reduced_density(&bottom, t);
        prop_assert_eq!((s.a, s.b, s.e), (0.0, 0.0, 1.0));
    }

    /// Consistency of the time-series records with the underlying state.
    #[test]
    fn time_series_rows_are_consistent(p in arb_params(), t_max in 0.1..8.0f64) {
        let grid = uniform_grid(t_max, 64);
        for r in time_series(&p, &grid).unwrap() {
            prop_assert!((r.a + 2.0 * r.b + r.e - 1.0).abs() < 1e-12);
            prop_assert_eq!(r.two_b, 2.0 * r.b);
            prop_assert_eq!(r.entangled, r.concurrence > 0.0);
            let s = SymmetricXState::new(r.a, r.b, r.e);
            let m = s.sz_moments();
            prop_assert_eq!(r.mean_sz, m.mean);
            prop_assert_eq!(r.var_sz, m.variance);
        }
    }
}

/// Bulk check of the verdict/concurrence equivalence on 10^4 seeded states
/// with the boundary excluded, mirroring the algebra on both moment routes.
#[test]
fn criterion_equivalence_bulk() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0057_a7e5);
    let mut kept = 0usize;
    while kept < 10_000 {
        let s = random_symmetric(&mut rng);
        let m = s.sz_moments();
        if (m.variance - 2.0 * s.b).abs() <= 1e-9 {
            continue;
        }
        kept += 1;
        let v = s.criterion();
        assert_eq!(v.entangled, m.variance < 2.0 * s.b, "state {s:?}");
        assert_eq!(v.entangled, v.concurrence > 0.0, "state {s:?}");
    }
}

/// The variance bound is necessary: no entangled X state violates it.
/// 10^5 seeded samples, no counterexample.
#[test]
fn variance_bound_is_necessary() {
    let mut rng = ChaCha8Rng::seed_from_u64(2026);
    for _ in 0..100_000 {
        let x = random_xstate(&mut rng);
        if x.concurrence() > 0.0 {
            assert!(x.variance_bound().satisfied, "entangled state rejected: {x:?}");
        }
    }
}
