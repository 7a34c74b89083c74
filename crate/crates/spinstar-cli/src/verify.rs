use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use spinstar::oracle::{
    build_collective_hamiltonian, build_full_hamiltonian, partial_trace_to_pair,
    reduce_collective_to_pair, spin_star_initial_state, CollectiveBasis, PairDensityMatrix,
    Propagator, MS_VALUES,
};
use spinstar::{amplitudes, reduced_density, SpinStarParams, XState};

use crate::config::RunConfig;
use crate::error::CliError;
use crate::VerifyArgs;

/// Outcome of one verification suite.
struct CheckOutcome {
    name: &'static str,
    detail: String,
    max_dev: f64,
    tol: f64,
}

impl CheckOutcome {
    fn pass(&self) -> bool {
        self.max_dev < self.tol
    }
}

fn internal(err: impl std::fmt::Display) -> CliError {
    CliError::Invalid(err.to_string())
}

/// Every (k, m_s) sector of the configured star.
fn sectors(n_bath: u32) -> impl Iterator<Item = (u32, i32)> {
    (0..=n_bath).flat_map(|k| MS_VALUES.into_iter().map(move |ms| (k, ms)))
}

/// Closed-form branch amplitudes against exact diagonalization in the
/// collective basis; `perturb` shifts the closed-form b entry to let the
/// harness prove it can fail.
fn closed_vs_collective(cfg: &RunConfig, perturb: f64) -> Result<CheckOutcome, CliError> {
    let n = cfg.n_bath;
    let j = f64::from(n) / 2.0;
    let basis = CollectiveBasis::new(j).map_err(internal)?;
    let h = build_collective_hamiltonian(j, cfg.omega, cfg.alpha).map_err(internal)?;
    let prop = Propagator::new(&h);
    let (_, ts) = cfg.grids();
    let mut max_dev = 0.0f64;
    for (k, ms) in sectors(n) {
        let params = SpinStarParams::new(n, k, ms, cfg.alpha, cfg.omega).map_err(internal)?;
        let psi0 = basis.state(ms, params.m_j()).map_err(internal)?;
        let states = prop.propagate_grid(&psi0, &ts).map_err(internal)?;
        for (i, psi) in states.iter().enumerate() {
            let oracle = reduce_collective_to_pair(psi, &basis).map_err(internal)?;
            let mut s = reduced_density(&params, ts[i]);
            s.b += perturb;
            let closed = PairDensityMatrix::from_symmetric(&s);
            max_dev = max_dev.max(oracle.max_abs_diff(&closed));
        }
    }
    Ok(CheckOutcome {
        name: "closed form vs collective oracle",
        detail: format!("N={n}, all k, all m_s, {} points", cfg.points),
        max_dev,
        tol: 1e-9,
    })
}

/// Collective-basis propagation against the full 2^(N+2) tensor product.
fn collective_vs_full(cfg: &RunConfig) -> Result<CheckOutcome, CliError> {
    let n = cfg.n_bath;
    let j = f64::from(n) / 2.0;
    let basis = CollectiveBasis::new(j).map_err(internal)?;
    let coll =
        Propagator::new(&build_collective_hamiltonian(j, cfg.omega, cfg.alpha).map_err(internal)?);
    let full = Propagator::new(&build_full_hamiltonian(n, cfg.omega, cfg.alpha).map_err(internal)?);
    let (_, ts) = cfg.grids();
    let mut max_dev = 0.0f64;
    for (k, ms) in sectors(n) {
        let psi_c0 = basis.state(ms, f64::from(k) - j).map_err(internal)?;
        let psi_f0 = spin_star_initial_state(n, k, ms).map_err(internal)?;
        let cs = coll.propagate_grid(&psi_c0, &ts).map_err(internal)?;
        let fs = full.propagate_grid(&psi_f0, &ts).map_err(internal)?;
        for (pc, pf) in cs.iter().zip(&fs) {
            let rc = reduce_collective_to_pair(pc, &basis).map_err(internal)?;
            let rf = partial_trace_to_pair(pf, n).map_err(internal)?;
            max_dev = max_dev.max(rc.max_abs_diff(&rf));
        }
    }
    Ok(CheckOutcome {
        name: "collective vs full oracle",
        detail: format!("N={n}, all k, all m_s, {} points", cfg.points),
        max_dev,
        tol: 1e-9,
    })
}

/// Closed-form X-state concurrence against the spin-flip eigenvalue route.
fn concurrence_vs_oracle() -> CheckOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut max_dev = 0.0f64;
    for _ in 0..10_000 {
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
        let x = XState::new(a, b, Complex64::from_polar(mag, phase), d, e);
        let oracle = PairDensityMatrix::from_xstate(&x).wootters_concurrence();
        max_dev = max_dev.max((x.concurrence() - oracle).abs());
    }
    CheckOutcome {
        name: "concurrence vs eigenvalue oracle",
        detail: "10000 random X states".into(),
        max_dev,
        tol: 1e-10,
    }
}

/// Amplitude norms and the reduced-state trace, which are exactly 1 in the
/// closed forms.
fn normalization(cfg: &RunConfig) -> Result<CheckOutcome, CliError> {
    let (_, ts) = cfg.grids();
    let mut max_dev = 0.0f64;
    for (k, ms) in sectors(cfg.n_bath) {
        let params =
            SpinStarParams::new(cfg.n_bath, k, ms, cfg.alpha, cfg.omega).map_err(internal)?;
        for &t in &ts {
            let amp = amplitudes(&params, t);
            let norm = match ms {
                0 => amp.a.norm_sqr() + amp.d.norm_sqr() + amp.e.norm_sqr(),
                _ => amp.a.norm_sqr() + amp.b.norm_sqr() + amp.c.norm_sqr(),
            };
            let s = reduced_density(&params, t);
            max_dev = max_dev.max((norm - 1.0).abs()).max((s.a + 2.0 * s.b + s.e - 1.0).abs());
        }
    }
    Ok(CheckOutcome {
        name: "normalization identities",
        detail: format!("N={}, all k, all m_s, {} points", cfg.n_bath, cfg.points),
        max_dev,
        tol: 1e-12,
    })
}

pub fn cmd_verify(args: &VerifyArgs) -> Result<(), CliError> {
    let run = crate::RunArgs {
        config: args.config.clone(),
        n_bath: args.n_bath,
        alpha: args.alpha,
        omega: args.omega,
        t_max: args.t_max,
        points: args.points,
        ..crate::RunArgs::default()
    };
    let cfg = RunConfig::resolve(&run, 6, 50)?;
    let perturb = args.perturb.unwrap_or(0.0);

    let mut checks = vec![closed_vs_collective(&cfg, perturb)?];
    if cfg.n_bath <= 10 {
        checks.push(collective_vs_full(&cfg)?);
    }
    checks.push(concurrence_vs_oracle());
    checks.push(normalization(&cfg)?);

    println!("verification report");
    let mut all_pass = true;
    for c in &checks {
        all_pass &= c.pass();
        println!(
            "  {:<34} max dev {:>10.3e}  tol {:>6.0e}  {}  [{}]",
            c.name,
            c.max_dev,
            c.tol,
            if c.pass() { "PASS" } else { "FAIL" },
            c.detail
        );
    }
    if cfg.n_bath > 10 {
        println!("  (full tensor-product oracle skipped: n_bath = {} > 10)", cfg.n_bath);
    }
    println!("overall: {}", if all_pass { "PASS" } else { "FAIL" });
    if all_pass {
        Ok(())
    } else {
        Err(CliError::Verification)
    }
}
