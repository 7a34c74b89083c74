//! Entanglement of a two-qubit X state from collective measurements, and the
//! exact reduced dynamics of the central pair of a spin star.
//!
//! The crate has three parts:
//!
//! * [`xstate`] — X-structured two-qubit density matrices, their concurrence,
//!   and a necessary-and-sufficient entanglement criterion for the symmetric
//!   subfamily that needs only the mean and variance of the collective
//!   inversion Sz plus one population.
//! * [`dynamics`] — closed-form time evolution of two central qubits
//!   exchange-coupled to a spin bath in its maximal-spin sector. The reduced
//!   pair state stays inside the symmetric X family, so the criterion tracks
//!   its entanglement exactly.
//! * [`oracle`] — brute-force cross-checks: dense Hamiltonians (collective
//!   and full tensor-product), exact-diagonalization propagation, partial
//!   traces and spin-flip concurrence. Shares no formulas with the closed
//!   forms; the test suite holds the two routes against each other.

pub mod dynamics;
pub mod oracle;
pub mod xstate;

pub use dynamics::{
    amplitudes, evolved_state, reduced_density, singlet_reduced, time_series, uniform_grid,
    AmplitudeSet, Branch, DynamicsError, LadderCoeffs, SpinStarParams, TimeSeriesRecord,
    DEFAULT_POINTS, DEFAULT_T_MAX,
};
pub use oracle::{OracleError, PairDensityMatrix, Propagator};
pub use xstate::{
    classify_from_measurements, entanglement_windows, CriterionVerdict, SymmetricXState, SzMoments,
    SzWindows, VerdictRule, XState, XStateError, VALIDATION_TOL,
};
