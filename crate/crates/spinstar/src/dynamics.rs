//! Exact reduced dynamics of the central pair of a spin star.
//!
//! Two central qubits exchange excitations with a bath of `n` qubits through
//!
//! ```text
//!     H = w (Sz + Jz) + alpha (S+ J- + S- J+)
//! ```
//!
//! where S is the collective spin-1 (triplet) of the pair and J the
//! collective spin of the bath, taken in its maximal sector J = n/2 (Dicke
//! states). The free part commutes with the exchange part, so it only
//! contributes a global phase. Starting from |1, ms> |J, MJ> with
//! MJ = -n/2 + k, the exchange couples at most three product states in a
//! chain, and the propagator integrates in closed form.
//!
//! The reduced pair state is always a symmetric X state diagonal in
//! populations (a, b, b, e) with coherence b, so the criterion of
//! [`crate::xstate`] applies at every instant.

use crate::xstate::{SymmetricXState, XState};
use num_complex::Complex64;
use serde::Serialize;
use thiserror::Error;

/// Grid used by the command-line tools when none is requested: 1000 uniform
/// points over alpha*t in [0, 5].
pub const DEFAULT_T_MAX: f64 = 5.0;
pub const DEFAULT_POINTS: usize = 1000;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DynamicsError {
    #[error("bath must contain at least one spin")]
    EmptyBath,
    #[error("k = {k} outside the bath excitation range 0..={n_bath}")]
    KOutOfRange { k: u32, n_bath: u32 },
    #[error("central projection m_s must be -1, 0 or +1 (got {0})")]
    BadCentralProjection(i32),
    #[error("J = {j} and M_J = {m_j} must be half-integers with J - M_J integer")]
    NotHalfInteger { j: f64, m_j: f64 },
    #[error("|M_J| = {m_j} exceeds J = {j}")]
    Domain { j: f64, m_j: f64 },
    #[error("time grid is empty")]
    EmptyGrid,
    #[error("time grid must be non-negative and strictly increasing")]
    BadGrid,
}

/// Spin-star configuration with the initial condition |1, m_s> |J, -J + k>.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpinStarParams {
    /// Number of bath spins n; the bath sector is J = n/2.
    pub n_bath: u32,
    /// Bath excitation index: M_J = -n/2 + k, k in 0..=n.
    pub k: u32,
    /// Central triplet projection: -1, 0 or +1.
    pub m_s: i32,
    /// Exchange coupling (frequency units).
    pub alpha: f64,
    /// Free frequency of every spin; only contributes a global phase.
    pub omega: f64,
}

impl SpinStarParams {
    pub fn new(
        n_bath: u32,
        k: u32,
        m_s: i32,
        alpha: f64,
        omega: f64,
    ) -> Result<Self, DynamicsError> {
        if n_bath == 0 {
            return Err(DynamicsError::EmptyBath);
        }
        if k > n_bath {
            return Err(DynamicsError::KOutOfRange { k, n_bath });
        }
        if !matches!(m_s, -1..=1) {
            return Err(DynamicsError::BadCentralProjection(m_s));
        }
        Ok(Self { n_bath, k, m_s, alpha, omega })
    }

    pub fn j(&self) -> f64 {
        f64::from(self.n_bath) / 2.0
    }

    pub fn m_j(&self) -> f64 {
        f64::from(self.k) - self.j()
    }
}

/// Bath ladder factors for one exchange step up or down from (J, MJ):
///
/// ```text
///     p(s) = sqrt(J(J+1) - MJ (MJ+s))          first step
///     r(s) = sqrt(J(J+1) - (MJ+s)(MJ+2s))      second step
/// ```
///
/// for s = +1/-1, with the convention p(0) = 1, r(0) = 0. Radicands that
/// come out negative (steps leaving the ladder) clamp to zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LadderCoeffs {
    pub p_plus: f64,
    pub p_minus: f64,
    pub r_plus: f64,
    pub r_minus: f64,
}

impl LadderCoeffs {
    pub fn p(&self, s: i32) -> f64 {
        match s {
            1 => self.p_plus,
            -1 => self.p_minus,
            0 => 1.0,
            _ => panic!("ladder step must be -1, 0 or +1"),
        }
    }

    pub fn r(&self, s: i32) -> f64 {
        match s {
            1 => self.r_plus,
            -1 => self.r_minus,
            0 => 0.0,
            _ => panic!("ladder step must be -1, 0 or +1"),
        }
    }
}

fn clamped_sqrt(x: f64) -> f64 {
    if x > 0.0 {
        x.sqrt()
    } else {
        0.0
    }
}

fn is_half_integer(x: f64) -> bool {
    (2.0 * x - (2.0 * x).round()).abs() < 1e-9
}

pub fn ladder_coeffs(j: f64, m_j: f64) -> Result<LadderCoeffs, DynamicsError> {
    if j < 0.0
        || !is_half_integer(j)
        || !is_half_integer(m_j)
        || !is_half_integer(j - m_j)
        || (j - m_j - (j - m_j).round()).abs() > 1e-9
    {
        return Err(DynamicsError::NotHalfInteger { j, m_j });
    }
    if m_j.abs() > j + 1e-9 {
        return Err(DynamicsError::Domain { j, m_j });
    }
    let jj = j * (j + 1.0);
    let step = |s: f64| -> (f64, f64) {
        (clamped_sqrt(jj - m_j * (m_j + s)), clamped_sqrt(jj - (m_j + s) * (m_j + 2.0 * s)))
    };
    let (p_plus, r_plus) = step(1.0);
    let (p_minus, r_minus) = step(-1.0);
    Ok(LadderCoeffs { p_plus, p_minus, r_plus, r_minus })
}

/// Transition amplitudes of the exchange propagator at time `t`.
///
/// For m_s = +1/-1 the chain |1,ms>|J,MJ> <-> |1,0>|J,MJ+ms> <->
/// |1,-ms>|J,MJ+2ms> has couplings sqrt(2) alpha p and sqrt(2) alpha r,
/// giving with q^2 = p^2 + r^2 and Omega = alpha sqrt(2 q^2):
///
/// ```text
///     A = (p^2 cos Omega t + r^2) / q^2       stay amplitude
///     B = p r (cos Omega t - 1) / q^2         double exchange
///     C = p sin(Omega t) / q                  single exchange
/// ```
///
/// For m_s = 0 the chain is a vee, |1,+1>|J,MJ-1> <- |1,0>|J,MJ> ->
/// |1,-1>|J,MJ+1>, with Omega0 = alpha sqrt(2 (p(-1)^2 + p(+1)^2)):
///
/// ```text
///     A = cos(Omega0 t),   D = p(-1) sin(Omega0 t) / q0,
///                          E = p(+1) sin(Omega0 t) / q0
/// ```
///
/// A degenerate chain (all couplings zero) leaves the state alone: A = 1.
/// The amplitudes are real; `evolved_state` attaches the -i factors of the
/// odd exchange steps and the free phase e^{-i w (ms + MJ) t}.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AmplitudeSet {
    pub a: Complex64,
    pub b: Complex64,
    pub c: Complex64,
    pub d: Complex64,
    pub e: Complex64,
    /// Free-evolution phase e^{-i w (ms + MJ) t}.
    pub global_phase: Complex64,
}

pub fn amplitudes(params: &SpinStarParams, t: f64) -> AmplitudeSet {
    let lc = ladder_coeffs(params.j(), params.m_j()).expect("params are validated");
    let re = |x: f64| Complex64::new(x, 0.0);
    let global_phase =
        Complex64::new(0.0, -params.omega * (f64::from(params.m_s as i16) + params.m_j()) * t)
            .exp();
    let mut amp =
        AmplitudeSet { a: re(1.0), b: re(0.0), c: re(0.0), d: re(0.0), e: re(0.0), global_phase };
    match params.m_s {
        1 | -1 => {
            let p = lc.p(params.m_s);
            let r = lc.r(params.m_s);
            let q2 = p * p + r * r;
            if q2 > 0.0 {
                let (sin, cos) = (params.alpha * (2.0 * q2).sqrt() * t).sin_cos();
                amp.a = re((p * p * cos + r * r) / q2);
                amp.b = re(p * r * (cos - 1.0) / q2);
                amp.c = re(p * sin / q2.sqrt());
            }
        }
        _ => {
            let pm = lc.p(-1);
            let pp = lc.p(1);
            let q2 = pm * pm + pp * pp;
            if q2 > 0.0 {
                let (sin, cos) = (params.alpha * (2.0 * q2).sqrt() * t).sin_cos();
                amp.a = re(cos);
                amp.d = re(pm * sin / q2.sqrt());
                amp.e = re(pp * sin / q2.sqrt());
            }
        }
    }
    amp
}

/// One component of the evolved pure state, |1, central_m> |J, bath_m_j>.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Branch {
    pub central_m: i32,
    pub bath_m_j: f64,
    pub amplitude: Complex64,
}

/// The evolved state as a list of product branches. Branches whose ladder
/// coefficient vanishes (steps off the end of the bath ladder) are absent,
/// so every branch satisfies |bath_m_j| <= J.
pub fn evolved_state(params: &SpinStarParams, t: f64) -> Vec<Branch> {
    let amp = amplitudes(params, t);
    let lc = ladder_coeffs(params.j(), params.m_j()).expect("params are validated");
    let g = amp.global_phase;
    let minus_i = Complex64::new(0.0, -1.0);
    let mj = params.m_j();
    let mut branches = Vec::with_capacity(3);
    match params.m_s {
        ms @ (1 | -1) => {
            let step = f64::from(ms as i16);
            branches.push(Branch { central_m: ms, bath_m_j: mj, amplitude: g * amp.a });
            if lc.r(ms) != 0.0 {
                branches.push(Branch {
                    central_m: -ms,
                    bath_m_j: mj + 2.0 * step,
                    amplitude: g * amp.b,
                });
            }
            if lc.p(ms) != 0.0 {
                branches.push(Branch {
                    central_m: 0,
                    bath_m_j: mj + step,
                    amplitude: minus_i * g * amp.c,
                });
            }
        }
        _ => {
            branches.push(Branch { central_m: 0, bath_m_j: mj, amplitude: g * amp.a });
            if lc.p(-1) != 0.0 {
                branches.push(Branch {
                    central_m: 1,
                    bath_m_j: mj - 1.0,
                    amplitude: minus_i * g * amp.d,
                });
            }
            if lc.p(1) != 0.0 {
                branches.push(Branch {
                    central_m: -1,
                    bath_m_j: mj + 1.0,
                    amplitude: minus_i * g * amp.e,
                });
            }
        }
    }
    branches
}

/// Reduced pair state at time `t`. The branches live on orthogonal bath
/// states, so the pair matrix is diagonal in the triplet basis; expressed
/// in the product basis the |1,0> population splits evenly over the ud/du
/// block, populations and coherence alike: b = |<1,0|psi>|^2 / 2.
pub fn reduced_density(params: &SpinStarParams, t: f64) -> SymmetricXState {
    let amp = amplitudes(params, t);
    let (a, b, e) = match params.m_s {
        1 => (amp.a.norm_sqr(), 0.5 * amp.c.norm_sqr(), amp.b.norm_sqr()),
        -1 => (amp.b.norm_sqr(), 0.5 * amp.c.norm_sqr(), amp.a.norm_sqr()),
        _ => (amp.d.norm_sqr(), 0.5 * amp.a.norm_sqr(), amp.e.norm_sqr()),
    };
    SymmetricXState::new(a, b, e)
}

/// Reduced state of the pair prepared in the S = 0 singlet: the exchange
/// annihilates |0,0>, so the pair stays maximally entangled forever,
/// regardless of the bath state.
pub fn singlet_reduced() -> XState {
    XState::new(0.0, 0.5, Complex64::new(-0.5, 0.0), 0.5, 0.0)
}

/// Reduced state and criterion data at one grid point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TimeSeriesRecord {
    pub t: f64,
    pub a: f64,
    pub b: f64,
    pub e: f64,
    pub mean_sz: f64,
    pub var_sz: f64,
    pub two_b: f64,
    pub concurrence: f64,
    pub entangled: bool,
}

/// Evaluate the reduced dynamics and the entanglement criterion on a
/// non-negative, strictly increasing time grid.
pub fn time_series(
    params: &SpinStarParams,
    t_grid: &[f64],
) -> Result<Vec<TimeSeriesRecord>, DynamicsError> {
    if t_grid.is_empty() {
        return Err(DynamicsError::EmptyGrid);
    }
    if t_grid[0] < 0.0 || t_grid.windows(2).any(|w| w[1] <= w[0]) {
        return Err(DynamicsError::BadGrid);
    }
    Ok(t_grid
        .iter()
        .map(|&t| {
            let s = reduced_density(params, t);
            let m = s.sz_moments();
            let v = s.criterion();
            TimeSeriesRecord {
                t,
                a: s.a,
                b: s.b,
                e: s.e,
                mean_sz: m.mean,
                var_sz: m.variance,
                two_b: 2.0 * s.b,
                concurrence: v.concurrence,
                entangled: v.entangled,
            }
        })
        .collect())
}

/// `points` uniform values covering [0, t_max], endpoints included.
pub fn uniform_grid(t_max: f64, points: usize) -> Vec<f64> {
    match points {
        0 => Vec::new(),
        1 => vec![0.0],
        _ => (0..points).map(|i| t_max * i as f64 / (points - 1) as f64).collect(),
    }
}
