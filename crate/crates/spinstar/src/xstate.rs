//! Two-qubit X states and an entanglement criterion built on collective
//! spin measurements.
//!
//! In the ordered product basis {uu, ud, du, dd} an X state carries four
//! populations and a single coherence between the ud and du levels:
//!
//! ```text
//!     | a  .  .  . |
//!     | .  b  c  . |          a, b, d, e >= 0,  a + b + d + e = 1,
//!     | .  c* d  . |          |c| <= sqrt(b d)  (middle-block positivity)
//!     | .  .  .  e |
//! ```
//!
//! Its concurrence is C = max(0, 2(|c| - sqrt(a e))). For the symmetric
//! subfamily (d = b, c = b, real) the sign of the concurrence is decided by
//! the first two moments of the pair's collective inversion Sz alone:
//! the state is entangled iff (Delta Sz)^2 < 2b, iff <Sz>^2 > 1 - 4b.

use num_complex::Complex64;
use thiserror::Error;

/// Default absolute tolerance for state validation.
pub const VALIDATION_TOL: f64 = 1e-9;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum XStateError {
    #[error("negative population {name} = {value:e}")]
    NegativePopulation { name: &'static str, value: f64 },
    #[error("trace is {trace} instead of 1")]
    TraceNotOne { trace: f64 },
    #[error("coherence |c| = {coherence} exceeds the positivity limit sqrt(b d) = {limit}")]
    LandauViolation { coherence: f64, limit: f64 },
    #[error("{0}")]
    Domain(String),
    #[error("measurements are inconsistent: recovered population {name} = {value:e}")]
    InconsistentInput { name: &'static str, value: f64 },
}

/// General X-structured two-qubit density matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct XState {
    /// Population of uu.
    pub a: f64,
    /// Population of ud.
    pub b: f64,
    /// Population of du.
    pub d: f64,
    /// Population of dd.
    pub e: f64,
    /// Coherence between ud and du.
    pub c: Complex64,
}

/// First and second moments of the pair inversion Sz = (sigma_z1 + sigma_z2)/2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SzMoments {
    pub mean: f64,
    pub second_moment: f64,
    pub variance: f64,
}

/// Outcome of the necessary variance bound (see [`XState::variance_bound`]).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VarianceBound {
    pub bound: f64,
    pub satisfied: bool,
}

impl XState {
    /// Arguments follow the matrix layout: diagonal a, b, d, e with the
    /// coherence c between them.
    pub fn new(a: f64, b: f64, c: Complex64, d: f64, e: f64) -> Self {
        Self { a, b, d, e, c }
    }

    pub fn validate(&self) -> Result<(), XStateError> {
        self.validate_with_tol(VALIDATION_TOL)
    }

    /// Physicality check: non-negative populations, unit trace and the
    /// coherence bound |c| <= sqrt(b d), all within `tol`.
    pub fn validate_with_tol(&self, tol: f64) -> Result<(), XStateError> {
        for (name, value) in [("a", self.a), ("b", self.b), ("d", self.d), ("e", self.e)] {
            if value < -tol {
                return Err(XStateError::NegativePopulation { name, value });
            }
        }
        let trace = self.a + self.b + self.d + self.e;
        if (trace - 1.0).abs() > tol {
            return Err(XStateError::TraceNotOne { trace });
        }
        let limit = (self.b.max(0.0) * self.d.max(0.0)).sqrt();
        let coherence = self.c.norm();
        if coherence > limit + tol {
            return Err(XStateError::LandauViolation { coherence, limit });
        }
        Ok(())
    }

    /// Concurrence C = max(0, 2(|c| - sqrt(a e))).
    pub fn concurrence(&self) -> f64 {
        (2.0 * (self.c.norm() - (self.a * self.e).sqrt())).max(0.0)
    }

    /// <Sz> = a - e, <Sz^2> = a + e, and the variance.
    pub fn sz_moments(&self) -> SzMoments {
        let mean = self.a - self.e;
        let second_moment = self.a + self.e;
        SzMoments { mean, second_moment, variance: second_moment - mean * mean }
    }

    /// Necessary condition for entanglement: every entangled X state has
    /// (Delta Sz)^2 < 4bd - (b + d)((b + d) - 1). Satisfying the bound does
    /// not certify entanglement.
    pub fn variance_bound(&self) -> VarianceBound {
        let s = self.b + self.d;
        let bound = 4.0 * self.b * self.d - s * (s - 1.0);
        VarianceBound { bound, satisfied: self.sz_moments().variance < bound }
    }
}

/// X state with a fully symmetric middle block: d = b and c = b (real).
///
/// This is the family reached by the spin-star dynamics in [`crate::dynamics`];
/// a + 2b + e = 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymmetricXState {
    pub a: f64,
    pub b: f64,
    pub e: f64,
}

/// Which clause of the criterion decided a [`CriterionVerdict`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerdictRule {
    /// b > 1/4: entangled for every value of <Sz>.
    BAboveQuarter,
    /// Decided by <Sz>^2 against 1 - 4b.
    WindowTest,
    /// Concurrence exactly zero: on the separability boundary, reported
    /// not entangled.
    Boundary,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CriterionVerdict {
    pub entangled: bool,
    pub rule: VerdictRule,
    pub concurrence: f64,
}

impl SymmetricXState {
    pub fn new(a: f64, b: f64, e: f64) -> Self {
        Self { a, b, e }
    }

    pub fn validate(&self) -> Result<(), XStateError> {
        self.validate_with_tol(VALIDATION_TOL)
    }

    pub fn validate_with_tol(&self, tol: f64) -> Result<(), XStateError> {
        for (name, value) in [("a", self.a), ("b", self.b), ("e", self.e)] {
            if value < -tol {
                return Err(XStateError::NegativePopulation { name, value });
            }
        }
        let trace = self.a + 2.0 * self.b + self.e;
        if (trace - 1.0).abs() > tol {
            return Err(XStateError::TraceNotOne { trace });
        }
        Ok(())
    }

    pub fn as_xstate(&self) -> XState {
        XState::new(self.a, self.b, Complex64::new(self.b, 0.0), self.b, self.e)
    }

    pub fn sz_moments(&self) -> SzMoments {
        self.as_xstate().sz_moments()
    }

    /// Necessary-and-sufficient entanglement test.
    ///
    /// Exact algebra (using a + 2b + e = 1) gives three equivalent forms:
    ///
    /// ```text
    /// concurrence > 0  <=>  (Delta Sz)^2 < 2b  <=>  <Sz>^2 > 1 - 4b
    /// ```
    ///
    /// The verdict is evaluated through the concurrence so that `entangled`
    /// and `concurrence` can never disagree in floating point; the moment
    /// forms are exercised against it in the test suite. A state exactly on
    /// the boundary is reported not entangled.
    pub fn criterion(&self) -> CriterionVerdict {
        let raw = 2.0 * (self.b - (self.a * self.e).sqrt());
        let rule = if self.b > 0.25 {
            VerdictRule::BAboveQuarter
        } else if raw == 0.0 {
            VerdictRule::Boundary
        } else {
            VerdictRule::WindowTest
        };
        CriterionVerdict { entangled: raw > 0.0, rule, concurrence: raw.max(0.0) }
    }
}

/// Values of <Sz> compatible with entanglement, at fixed b.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SzWindows {
    /// b > 1/4: entangled whatever <Sz> is.
    All,
    /// b = 0: no value of <Sz> certifies entanglement.
    Empty,
    /// 0 < b <= 1/4: entangled iff <Sz> lies in (lo, hi] or [-hi, -lo),
    /// with lo = sqrt(1 - 4b) and hi = 1 - 2b (the physical extreme of
    /// |<Sz>| at this b).
    Bands { lo: f64, hi: f64 },
}

impl SzWindows {
    pub fn contains(&self, mean_sz: f64) -> bool {
        match *self {
            SzWindows::All => true,
            SzWindows::Empty => false,
            SzWindows::Bands { lo, hi } => {
                (mean_sz > lo && mean_sz <= hi) || (mean_sz >= -hi && mean_sz < -lo)
            }
        }
    }
}

/// Entanglement windows in <Sz> for a symmetric X state with middle
/// population `b`. Errors if b is outside the physical range [0, 1/2].
pub fn entanglement_windows(b: f64) -> Result<SzWindows, XStateError> {
    if !(0.0..=0.5).contains(&b) {
        return Err(XStateError::Domain(format!("b = {b} outside the physical range [0, 1/2]")));
    }
    if b == 0.0 {
        return Ok(SzWindows::Empty);
    }
    if b > 0.25 {
        return Ok(SzWindows::All);
    }
    Ok(SzWindows::Bands { lo: (1.0 - 4.0 * b).sqrt(), hi: 1.0 - 2.0 * b })
}

/// Entanglement verdict from the two measured quantities <Sz> and b alone.
///
/// Reconstructs a = (1 - 2b + <Sz>)/2 and e = (1 - 2b - <Sz>)/2; values
/// negative within `VALIDATION_TOL` are clamped to zero, values negative
/// beyond it mean the inputs cannot come from a physical symmetric X state.
pub fn classify_from_measurements(mean_sz: f64, b: f64) -> Result<CriterionVerdict, XStateError> {
    classify_from_measurements_with_tol(mean_sz, b, VALIDATION_TOL)
}

pub fn classify_from_measurements_with_tol(
    mean_sz: f64,
    b: f64,
    tol: f64,
) -> Result<CriterionVerdict, XStateError> {
    if !(0.0..=0.5).contains(&b) {
        return Err(XStateError::Domain(format!("b = {b} outside the physical range [0, 1/2]")));
    }
    if mean_sz.is_nan() || mean_sz.abs() > 1.0 + tol {
        return Err(XStateError::Domain(format!("|<Sz>| = {} exceeds 1", mean_sz.abs())));
    }
    let a = (1.0 - 2.0 * b + mean_sz) / 2.0;
    let e = (1.0 - 2.0 * b - mean_sz) / 2.0;
    if a < -tol {
        return Err(XStateError::InconsistentInput { name: "a", value: a });
    }
    if e < -tol {
        return Err(XStateError::InconsistentInput { name: "e", value: e });
    }
    Ok(SymmetricXState::new(a.max(0.0), b, e.max(0.0)).criterion())
}
