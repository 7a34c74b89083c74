use num_complex::Complex64;
use spinstar::{
    entanglement_windows, time_series, SpinStarParams, SymmetricXState, SzWindows, VerdictRule,
    XState, XStateError,
};

use crate::config::{OutputFormat, RunConfig};
use crate::error::CliError;
use crate::output::{emit, fmt_float, to_csv, to_json, BoundRow, EvolveRow, ScanRow};
use crate::{CheckArgs, FiguresArgs, RunArgs};

/// Tag the diagnostic with a stable machine-matchable reason code.
fn invalid_state(err: XStateError) -> CliError {
    let tag = match &err {
        XStateError::NegativePopulation { .. } => "NEGATIVE_POPULATION",
        XStateError::TraceNotOne { .. } => "TRACE_NOT_ONE",
        XStateError::LandauViolation { .. } => "LANDAU_VIOLATION",
        XStateError::Domain(_) => "DOMAIN_ERROR",
        XStateError::InconsistentInput { .. } => "INCONSISTENT_INPUT",
    };
    CliError::Invalid(format!("{tag}: {err}"))
}

fn internal(err: impl std::fmt::Display) -> CliError {
    CliError::Invalid(err.to_string())
}

pub fn cmd_check(args: &CheckArgs) -> Result<(), CliError> {
    match (&args.sym, args.values.as_slice()) {
        (Some(v), _) => check_symmetric(v[0], v[1], v[2]),
        (None, &[a, b, c, d, e]) => check_general(a, b, c, d, e),
        (None, []) => Err(CliError::invalid("check needs five values a b c d e, or --sym a b e")),
        (None, other) => Err(CliError::invalid(format!(
            "check needs exactly five values a b c d e (got {})",
            other.len()
        ))),
    }
}

fn verdict_word(entangled: bool) -> &'static str {
    if entangled {
        "entangled"
    } else {
        "not entangled"
    }
}

fn check_general(a: f64, b: f64, c: f64, d: f64, e: f64) -> Result<(), CliError> {
    let x = XState::new(a, b, Complex64::new(c, 0.0), d, e);
    x.validate().map_err(invalid_state)?;
    let m = x.sz_moments();
    let vb = x.variance_bound();
    let concurrence = x.concurrence();
    println!("state: valid X state (a={a}, b={b}, c={c}, d={d}, e={e})");
    println!("concurrence: {}", fmt_float(concurrence));
    println!("mean_sz: {}", fmt_float(m.mean));
    println!("var_sz: {}", fmt_float(m.variance));
    println!(
        "variance_bound: {} ({})",
        fmt_float(vb.bound),
        if vb.satisfied {
            "variance below bound: necessary condition for entanglement holds"
        } else {
            "variance not below bound: certainly separable"
        }
    );
    println!("verdict: {} (by concurrence)", verdict_word(concurrence > 0.0));
    Ok(())
}

fn check_symmetric(a: f64, b: f64, e: f64) -> Result<(), CliError> {
    let s = SymmetricXState::new(a, b, e);
    s.validate().map_err(invalid_state)?;
    let m = s.sz_moments();
    let v = s.criterion();
    println!("state: valid symmetric X state (a={a}, b={b}, e={e}; implied d = b, c = b)");
    println!("concurrence: {}", fmt_float(v.concurrence));
    println!("mean_sz: {}", fmt_float(m.mean));
    println!("var_sz: {}", fmt_float(m.variance));
    println!("two_b: {}", fmt_float(2.0 * s.b));
    let rule = match v.rule {
        VerdictRule::BAboveQuarter => "b > 1/4: entangled for every <Sz>",
        VerdictRule::WindowTest => "decided by <Sz>^2 against 1 - 4b",
        VerdictRule::Boundary => "exactly on the separability boundary",
    };
    println!("verdict: {} ({rule})", verdict_word(v.entangled));
    if s.b <= 0.25 {
        match entanglement_windows(s.b.max(0.0)).map_err(invalid_state)? {
            SzWindows::Empty => println!("sz_windows: none (b = 0)"),
            SzWindows::Bands { lo, hi } => println!(
                "sz_windows: ({}, {}] and [{}, {})",
                fmt_float(lo),
                fmt_float(hi),
                fmt_float(-hi),
                fmt_float(-lo)
            ),
            SzWindows::All => unreachable!("b <= 1/4 never yields the All window"),
        }
    }
    Ok(())
}

fn evolve_rows(cfg: &RunConfig, k: u32) -> Result<Vec<EvolveRow>, CliError> {
    let params =
        SpinStarParams::new(cfg.n_bath, k, cfg.m_s, cfg.alpha, cfg.omega).map_err(internal)?;
    let (alpha_t, ts) = cfg.grids();
    let records = time_series(&params, &ts).map_err(internal)?;
    Ok(alpha_t
        .iter()
        .zip(&records)
        .map(|(&at, r)| EvolveRow {
            alpha_t: at,
            a: r.a,
            b: r.b,
            e: r.e,
            mean_sz: r.mean_sz,
            var_sz: r.var_sz,
            two_b: r.two_b,
            concurrence: r.concurrence,
            entangled: r.entangled,
        })
        .collect())
}

pub fn cmd_evolve(args: &RunArgs) -> Result<(), CliError> {
    let cfg = RunConfig::resolve(args, 100, spinstar::DEFAULT_POINTS)?;
    if cfg.k_range.is_some() {
        return Err(CliError::invalid("evolve takes a single --k; use scan for --k-range"));
    }
    let k = cfg.k.ok_or_else(|| CliError::invalid("evolve needs --k"))?;
    let rows = evolve_rows(&cfg, k)?;
    let payload = match cfg.format {
        OutputFormat::Csv => to_csv(&rows),
        OutputFormat::Json => to_json(&rows),
    };
    emit(cfg.out.as_deref(), &payload)
}

fn scan_rows(cfg: &RunConfig, lo: u32, hi: u32) -> Result<Vec<ScanRow>, CliError> {
    let (alpha_t, ts) = cfg.grids();
    let mut rows = Vec::with_capacity((hi - lo + 1) as usize * alpha_t.len());
    for k in lo..=hi {
        let params =
            SpinStarParams::new(cfg.n_bath, k, cfg.m_s, cfg.alpha, cfg.omega).map_err(internal)?;
        let records = time_series(&params, &ts).map_err(internal)?;
        rows.extend(alpha_t.iter().zip(&records).map(|(&at, r)| ScanRow {
            k,
            alpha_t: at,
            concurrence: r.concurrence,
        }));
    }
    Ok(rows)
}

pub fn cmd_scan(args: &RunArgs) -> Result<(), CliError> {
    let cfg = RunConfig::resolve(args, 100, spinstar::DEFAULT_POINTS)?;
    let (lo, hi) = match (cfg.k_range, cfg.k) {
        (Some(range), None) => range,
        (None, Some(k)) => (k, k),
        (None, None) => {
            return Err(CliError::invalid("scan needs --k-range A..B (or a single --k)"))
        }
        (Some(_), Some(_)) => {
            return Err(CliError::invalid("give either --k or --k-range, not both"))
        }
    };
    let rows = scan_rows(&cfg, lo, hi)?;
    let payload = match cfg.format {
        OutputFormat::Csv => to_csv(&rows),
        OutputFormat::Json => to_json(&rows),
    };
    emit(cfg.out.as_deref(), &payload)
}

pub fn cmd_figures(args: &FiguresArgs) -> Result<(), CliError> {
    let run = RunArgs {
        config: args.config.clone(),
        alpha: args.alpha,
        omega: args.omega,
        t_max: args.t_max,
        points: args.points,
        ..RunArgs::default()
    };
    let mut cfg = RunConfig::resolve(&run, 100, spinstar::DEFAULT_POINTS)?;
    // The four reference data sets are defined on the N = 100, m_s = +1 star.
    cfg.n_bath = 100;
    cfg.m_s = 1;
    std::fs::create_dir_all(&args.out)
        .map_err(|e| CliError::Io(format!("cannot create {}: {e}", args.out.display())))?;

    for (name, k) in [("fig1.csv", 2u32), ("fig2.csv", 98)] {
        let rows: Vec<BoundRow> = evolve_rows(&cfg, k)?
            .iter()
            .map(|r| BoundRow { alpha_t: r.alpha_t, var_sz: r.var_sz, two_b: r.two_b })
            .collect();
        emit(Some(&args.out.join(name)), &to_csv(&rows))?;
    }
    for (name, lo, hi) in [("fig3.csv", 0u32, 100u32), ("fig4.csv", 97, 99)] {
        let rows = scan_rows(&cfg, lo, hi)?;
        emit(Some(&args.out.join(name)), &to_csv(&rows))?;
    }
    println!("wrote fig1.csv fig2.csv fig3.csv fig4.csv to {}", args.out.display());
    Ok(())
}
