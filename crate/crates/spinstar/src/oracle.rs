//! Brute-force numerical oracles for the closed forms in this crate.
//!
//! Everything here recomputes, by dense linear algebra alone, quantities the
//! rest of the crate obtains analytically: Hamiltonians are assembled entry
//! by entry, time evolution comes from exact diagonalization (LAPACK `zheev`
//! through `ndarray-linalg`), reduced states from explicit partial traces,
//! and concurrence from the spin-flip construction. The two routes share no
//! formulas, so their agreement is the backbone of the test suite.
//!
//! Two independent Hamiltonian representations are available:
//!
//! * **collective** ([`build_collective_hamiltonian`]): basis
//!   |1, ms> x |J, MJ> with ms in [`MS_VALUES`] order and MJ ascending,
//!   dimension 3(2J + 1). Cheap even for hundreds of bath spins, but assumes
//!   the pair stays in its triplet and the bath in the maximal-J sector.
//! * **full** ([`build_full_hamiltonian`]): all n + 2 spins as bare qubits,
//!   dimension 2^(n+2), assuming nothing. Exponentially expensive; capped at
//!   [`MAX_FULL_BATH`] bath spins.

use crate::xstate::{SymmetricXState, XState};
use ndarray::{s, Array1, Array2, ArrayView1};
use ndarray_linalg::{Eigh, UPLO};
use num_complex::Complex64;
use thiserror::Error;

/// Central-spin projections in the basis order used throughout: +1, 0, -1.
pub const MS_VALUES: [i32; 3] = [1, 0, -1];

/// Largest bath for which the full 2^(n+2)-dimensional route is accepted.
pub const MAX_FULL_BATH: u32 = 10;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum OracleError {
    #[error("matrix is not Hermitian (max |H - H^dag| = {deviation:e})")]
    NotHermitian { deviation: f64 },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("vector norm is {0}, expected 1")]
    NotNormalized(f64),
    #[error("not a density matrix: {0}")]
    NotAState(String),
    #[error("{0}")]
    Domain(String),
}

fn one() -> Complex64 {
    Complex64::new(1.0, 0.0)
}

/// <a|b> with the conjugation on the left argument.
fn inner(a: ArrayView1<Complex64>, b: ArrayView1<Complex64>) -> Complex64 {
    a.iter().zip(b.iter()).map(|(x, y)| x.conj() * y).sum()
}

fn vec_norm(v: ArrayView1<Complex64>) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

fn adjoint(m: &Array2<Complex64>) -> Array2<Complex64> {
    m.t().mapv(|z| z.conj())
}

/// Eigenpairs of a Hermitian matrix, ascending eigenvalues, eigenvectors in
/// columns.
///
/// `eigh` on a row-major array can hand back the eigenvectors of the
/// transposed (= conjugated) matrix; rather than depend on that quirk of the
/// backend, probe a few eigenpair residuals and conjugate if that is what
/// makes H v = lambda v hold.
fn hermitian_eigen(m: &Array2<Complex64>) -> (Array1<f64>, Array2<Complex64>) {
    let (evals, mut evecs) =
        m.eigh(UPLO::Lower).expect("LAPACK zheev failed on a finite Hermitian matrix");
    let n = evals.len();
    let mut plain = 0.0f64;
    let mut conjugated = 0.0f64;
    for l in [0, n / 2, n - 1] {
        let lam = evals[l];
        let v = evecs.column(l).to_owned();
        let hv = m.dot(&v);
        plain += hv.iter().zip(v.iter()).map(|(a, b)| (a - b * lam).norm_sqr()).sum::<f64>();
        let vc = v.mapv(|z| z.conj());
        let hvc = m.dot(&vc);
        conjugated += hvc.iter().zip(vc.iter()).map(|(a, b)| (a - b * lam).norm_sqr()).sum::<f64>();
    }
    if conjugated < plain {
        evecs.mapv_inplace(|z| z.conj());
    }
    (evals, evecs)
}

/// A validated Hermitian operator.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianOp {
    matrix: Array2<Complex64>,
}

impl HermitianOp {
    pub fn new(matrix: Array2<Complex64>) -> Result<Self, OracleError> {
        if matrix.nrows() != matrix.ncols() {
            return Err(OracleError::DimensionMismatch {
                expected: matrix.nrows(),
                got: matrix.ncols(),
            });
        }
        let scale = matrix.iter().map(|z| z.norm()).fold(0.0, f64::max);
        let mut deviation = 0.0f64;
        for i in 0..matrix.nrows() {
            for j in i..matrix.ncols() {
                deviation = deviation.max((matrix[[i, j]] - matrix[[j, i]].conj()).norm());
            }
        }
        if deviation > 1e-12 * (1.0 + scale) {
            return Err(OracleError::NotHermitian { deviation });
        }
        Ok(Self { matrix })
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &Array2<Complex64> {
        &self.matrix
    }
}

/// A validated normalized pure state.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    vector: Array1<Complex64>,
}

impl StateVector {
    pub fn new(vector: Array1<Complex64>) -> Result<Self, OracleError> {
        let norm = vec_norm(vector.view());
        if (norm - 1.0).abs() > 1e-12 {
            return Err(OracleError::NotNormalized(norm));
        }
        Ok(Self { vector })
    }

    /// The `index`-th computational basis vector of a `dim`-dimensional space.
    pub fn basis(dim: usize, index: usize) -> Self {
        assert!(index < dim, "basis index {index} out of range for dim {dim}");
        let mut vector = Array1::zeros(dim);
        vector[index] = one();
        Self { vector }
    }

    /// Wrap a vector produced by a norm-preserving internal computation.
    fn unchecked(vector: Array1<Complex64>) -> Self {
        Self { vector }
    }

    pub fn dim(&self) -> usize {
        self.vector.len()
    }

    pub fn vector(&self) -> &Array1<Complex64> {
        &self.vector
    }
}

/// A validated two-qubit density matrix in the product basis {uu, ud, du, dd}.
#[derive(Debug, Clone, PartialEq)]
pub struct PairDensityMatrix {
    matrix: Array2<Complex64>,
}

impl PairDensityMatrix {
    /// Accepts any 4x4 Hermitian, unit-trace, positive-semidefinite matrix
    /// (within 1e-9 / eigenvalues down to -1e-10).
    pub fn from_matrix(matrix: Array2<Complex64>) -> Result<Self, OracleError> {
        if matrix.dim() != (4, 4) {
            return Err(OracleError::DimensionMismatch { expected: 4, got: matrix.nrows() });
        }
        let herm_dev = (0..4)
            .flat_map(|i| (i..4).map(move |j| (i, j)))
            .map(|(i, j)| (matrix[[i, j]] - matrix[[j, i]].conj()).norm())
            .fold(0.0, f64::max);
        if herm_dev > 1e-9 {
            return Err(OracleError::NotAState(format!("not Hermitian (deviation {herm_dev:e})")));
        }
        let trace = (0..4).map(|i| matrix[[i, i]].re).sum::<f64>();
        if (trace - 1.0).abs() > 1e-9 {
            return Err(OracleError::NotAState(format!("trace is {trace}")));
        }
        let (evals, _) = hermitian_eigen(&matrix);
        let min_eig = evals.iter().copied().fold(f64::INFINITY, f64::min);
        if min_eig < -1e-10 {
            return Err(OracleError::NotAState(format!("negative eigenvalue {min_eig:e}")));
        }
        Ok(Self { matrix })
    }

    /// The density matrix of an X state; structurally Hermitian, so only the
    /// numerical entries of `x` decide physicality (see [`XState::validate`]).
    pub fn from_xstate(x: &XState) -> Self {
        let z = Complex64::new(0.0, 0.0);
        let re = |v: f64| Complex64::new(v, 0.0);
        let rows = [
            [re(x.a), z, z, z],
            [z, re(x.b), x.c, z],
            [z, x.c.conj(), re(x.d), z],
            [z, z, z, re(x.e)],
        ];
        Self { matrix: Array2::from_shape_fn((4, 4), |(i, j)| rows[i][j]) }
    }

    pub fn from_symmetric(s: &SymmetricXState) -> Self {
        Self::from_xstate(&s.as_xstate())
    }

    pub fn matrix(&self) -> &Array2<Complex64> {
        &self.matrix
    }

    /// Largest entrywise difference from `other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.matrix.iter().zip(other.matrix.iter()).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
    }

    /// Concurrence by the spin-flip construction: with
    /// rho~ = (sy x sy) rho* (sy x sy), the decreasingly ordered square roots
    /// l_i of the eigenvalues of sqrt(rho) rho~ sqrt(rho) give
    /// C = max(0, l1 - l2 - l3 - l4).
    ///
    /// Only Hermitian eigenproblems are solved: the matrix sandwich keeps
    /// everything self-adjoint. Accuracy is ~1e-12 on generic full-rank
    /// states and ~1e-7 near pure states, where the zero eigenvalues square-
    /// root the rounding noise.
    pub fn wootters_concurrence(&self) -> f64 {
        let sqrt_rho = hermitian_sqrt(&self.matrix);
        // (sy x sy) rho* (sy x sy) = s_i s_j conj(rho[3-i, 3-j]),  s = (-1,1,1,-1)
        let s = [-1.0, 1.0, 1.0, -1.0];
        let tilde = Array2::from_shape_fn((4, 4), |(i, j)| {
            self.matrix[[3 - i, 3 - j]].conj() * s[i] * s[j]
        });
        let m = sqrt_rho.dot(&tilde).dot(&sqrt_rho);
        let (mus, _) = hermitian_eigen(&m);
        let mut lambdas: Vec<f64> = mus.iter().map(|&mu| mu.max(0.0).sqrt()).collect();
        lambdas.sort_by(|x, y| y.partial_cmp(x).unwrap());
        (lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3]).max(0.0)
    }
}

fn hermitian_sqrt(m: &Array2<Complex64>) -> Array2<Complex64> {
    let (evals, evecs) = hermitian_eigen(m);
    let mut scaled = evecs.clone();
    for (l, &ev) in evals.iter().enumerate() {
        let root = Complex64::new(ev.max(0.0).sqrt(), 0.0);
        scaled.column_mut(l).mapv_inplace(|z| z * root);
    }
    scaled.dot(&adjoint(&evecs))
}

/// Index bookkeeping for the collective basis |1, ms> x |J, MJ>: the ms
/// blocks follow [`MS_VALUES`], MJ ascends from -J to J inside each block.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CollectiveBasis {
    twice_j: i64,
}

impl CollectiveBasis {
    pub fn new(j: f64) -> Result<Self, OracleError> {
        let twice_j = (2.0 * j).round() as i64;
        if j < 0.0 || (2.0 * j - twice_j as f64).abs() > 1e-9 {
            return Err(OracleError::Domain(format!(
                "J = {j} must be a non-negative half-integer"
            )));
        }
        Ok(Self { twice_j })
    }

    pub fn j(&self) -> f64 {
        self.twice_j as f64 / 2.0
    }

    /// Number of MJ values, 2J + 1.
    pub fn n_mj(&self) -> usize {
        self.twice_j as usize + 1
    }

    pub fn dim(&self) -> usize {
        3 * self.n_mj()
    }

    /// The MJ value of the `mj_index`-th ladder slot (ascending).
    pub fn m_j(&self, mj_index: usize) -> f64 {
        (-self.twice_j + 2 * mj_index as i64) as f64 / 2.0
    }

    /// Flat basis index of |1, m_s> |J, m_j>, if it exists in this sector.
    pub fn index_of(&self, m_s: i32, m_j: f64) -> Option<usize> {
        let ms_index = MS_VALUES.iter().position(|&m| m == m_s)?;
        let twice_mj = (2.0 * m_j).round() as i64;
        if (2.0 * m_j - twice_mj as f64).abs() > 1e-9
            || twice_mj.abs() > self.twice_j
            || (twice_mj - self.twice_j) % 2 != 0
        {
            return None;
        }
        let mj_index = ((twice_mj + self.twice_j) / 2) as usize;
        Some(ms_index * self.n_mj() + mj_index)
    }

    /// The product basis state |1, m_s> |J, m_j> as a vector.
    pub fn state(&self, m_s: i32, m_j: f64) -> Result<StateVector, OracleError> {
        let index = self.index_of(m_s, m_j).ok_or_else(|| {
            OracleError::Domain(format!("no basis slot for m_s = {m_s}, m_j = {m_j}"))
        })?;
        Ok(StateVector::basis(self.dim(), index))
    }
}

/// H = w (Sz + Jz) + alpha (S+ J- + S- J+) on the collective basis, with S
/// the spin-1 of the pair and J the bath spin. Matrix elements are the
/// textbook ladder factors sqrt(s(s+1) - m(m+-1)).
pub fn build_collective_hamiltonian(
    j: f64,
    omega: f64,
    alpha: f64,
) -> Result<HermitianOp, OracleError> {
    let basis = CollectiveBasis::new(j)?;
    let n_mj = basis.n_mj();
    let jj = j * (j + 1.0);
    let mut h = Array2::<Complex64>::zeros((basis.dim(), basis.dim()));
    for (ms_index, &ms) in MS_VALUES.iter().enumerate() {
        let ms_f = f64::from(ms);
        for mj_index in 0..n_mj {
            let mj = basis.m_j(mj_index);
            let i = ms_index * n_mj + mj_index;
            h[[i, i]] += Complex64::new(omega * (ms_f + mj), 0.0);
            // S+ J-
            if ms < 1 && mj_index > 0 {
                let val =
                    alpha * (2.0 - ms_f * (ms_f + 1.0)).sqrt() * (jj - mj * (mj - 1.0)).sqrt();
                let up = MS_VALUES.iter().position(|&m| m == ms + 1).unwrap();
                h[[up * n_mj + mj_index - 1, i]] += Complex64::new(val, 0.0);
            }
            // S- J+
            if ms > -1 && mj_index + 1 < n_mj {
                let val =
                    alpha * (2.0 - ms_f * (ms_f - 1.0)).sqrt() * (jj - mj * (mj + 1.0)).sqrt();
                let down = MS_VALUES.iter().position(|&m| m == ms - 1).unwrap();
                h[[down * n_mj + mj_index + 1, i]] += Complex64::new(val, 0.0);
            }
        }
    }
    HermitianOp::new(h)
}

/// Partial trace over the bath of a pure collective-basis state. The pair
/// block index is the triplet label; the 4x4 product-basis matrix follows by
/// conjugating with the isometry |1,+1> = uu, |1,0> = (ud + du)/sqrt(2),
/// |1,-1> = dd.
pub fn reduce_collective_to_pair(
    psi: &StateVector,
    basis: &CollectiveBasis,
) -> Result<PairDensityMatrix, OracleError> {
    if psi.dim() != basis.dim() {
        return Err(OracleError::DimensionMismatch { expected: basis.dim(), got: psi.dim() });
    }
    let n_mj = basis.n_mj();
    let v = psi.vector();
    let mut rho3 = Array2::<Complex64>::zeros((3, 3));
    for m1 in 0..3 {
        for m2 in 0..3 {
            rho3[[m1, m2]] = inner(
                v.slice(s![m2 * n_mj..(m2 + 1) * n_mj]),
                v.slice(s![m1 * n_mj..(m1 + 1) * n_mj]),
            );
        }
    }
    let z = Complex64::new(0.0, 0.0);
    let h = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
    // rows: uu, ud, du, dd; columns: ms = +1, 0, -1
    let rows = [[one(), z, z], [z, h, z], [z, h, z], [z, z, one()]];
    let u = Array2::from_shape_fn((4, 3), |(i, j)| rows[i][j]);
    PairDensityMatrix::from_matrix(u.dot(&rho3).dot(&adjoint(&u)))
}

/// H = w (Sz + Jz) + alpha (S+ J- + S- J+) on all n + 2 bare qubits,
/// dimension 2^(n+2). Set bits are down spins; bit i < n is bath spin i and
/// bits n + 1, n are the central pair, so a basis index reads
/// (pair index) * 2^n + (bath index) with pair order uu, ud, du, dd.
pub fn build_full_hamiltonian(
    n_bath: u32,
    omega: f64,
    alpha: f64,
) -> Result<HermitianOp, OracleError> {
    if n_bath == 0 || n_bath > MAX_FULL_BATH {
        return Err(OracleError::Domain(format!(
            "full route supports 1..={MAX_FULL_BATH} bath spins, got {n_bath}"
        )));
    }
    let n = n_bath as usize;
    let dim = 1usize << (n + 2);
    let n_tot = (n + 2) as f64;
    let mut h = Array2::<Complex64>::zeros((dim, dim));
    let central_masks = [1usize << (n + 1), 1usize << n];
    for i in 0..dim {
        h[[i, i]] = Complex64::new(omega * (n_tot / 2.0 - f64::from(i.count_ones())), 0.0);
        for &cm in &central_masks {
            for bm in (0..n).map(|b| 1usize << b) {
                // sigma+ (central) sigma- (bath): central down -> up, bath up -> down
                if i & cm != 0 && i & bm == 0 {
                    h[[i ^ cm ^ bm, i]] += Complex64::new(alpha, 0.0);
                }
                // sigma- (central) sigma+ (bath)
                if i & cm == 0 && i & bm != 0 {
                    h[[i ^ cm ^ bm, i]] += Complex64::new(alpha, 0.0);
                }
            }
        }
    }
    HermitianOp::new(h)
}

/// The symmetric bath state |J = n/2, MJ = -n/2 + k>: the normalized sum of
/// all bath configurations with exactly `k` spins up.
pub fn dicke_state(n_bath: u32, k: u32) -> Result<StateVector, OracleError> {
    if n_bath == 0 || n_bath > MAX_FULL_BATH {
        return Err(OracleError::Domain(format!(
            "full route supports 1..={MAX_FULL_BATH} bath spins, got {n_bath}"
        )));
    }
    if k > n_bath {
        return Err(OracleError::Domain(format!(
            "k = {k} outside the bath excitation range 0..={n_bath}"
        )));
    }
    let dim = 1usize << n_bath;
    let down = n_bath - k;
    let hits: Vec<usize> = (0..dim).filter(|i| i.count_ones() == down).collect();
    let amp = Complex64::new(1.0 / (hits.len() as f64).sqrt(), 0.0);
    let mut v = Array1::zeros(dim);
    for i in hits {
        v[i] = amp;
    }
    StateVector::new(v)
}

/// |1, m_s> x |n/2, -n/2 + k> embedded in the full 2^(n+2)-dimensional space.
pub fn spin_star_initial_state(n_bath: u32, k: u32, m_s: i32) -> Result<StateVector, OracleError> {
    let central: [Complex64; 4] = {
        let z = Complex64::new(0.0, 0.0);
        let h = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        match m_s {
            1 => [one(), z, z, z],
            0 => [z, h, h, z],
            -1 => [z, z, z, one()],
            _ => {
                return Err(OracleError::Domain(format!(
                    "central projection m_s must be -1, 0 or +1 (got {m_s})"
                )))
            }
        }
    };
    let bath = dicke_state(n_bath, k)?;
    let bdim = bath.dim();
    let mut v = Array1::zeros(4 * bdim);
    for (c, &amp) in central.iter().enumerate() {
        if amp.norm() > 0.0 {
            for bi in 0..bdim {
                v[c * bdim + bi] = amp * bath.vector()[bi];
            }
        }
    }
    StateVector::new(v)
}

/// Partial trace over the bath of a pure state of the full register:
/// rho[p, q] = sum_b psi(p, b) conj(psi(q, b)).
pub fn partial_trace_to_pair(
    psi: &StateVector,
    n_bath: u32,
) -> Result<PairDensityMatrix, OracleError> {
    let bdim = 1usize << n_bath;
    if psi.dim() != 4 * bdim {
        return Err(OracleError::DimensionMismatch { expected: 4 * bdim, got: psi.dim() });
    }
    let v = psi.vector();
    let rho = Array2::from_shape_fn((4, 4), |(p, q)| {
        inner(v.slice(s![q * bdim..(q + 1) * bdim]), v.slice(s![p * bdim..(p + 1) * bdim]))
    });
    PairDensityMatrix::from_matrix(rho)
}

/// Exact-diagonalization propagator: psi(t) = V e^{-i L t} V^dag psi(0).
///
/// Diagonalizing once makes each further time (or initial state) cheap.
#[derive(Debug, Clone)]
pub struct Propagator {
    eigenvalues: Array1<f64>,
    eigenvectors: Array2<Complex64>,
}

impl Propagator {
    /// Eigenvector coefficients below this are dropped by
    /// [`Propagator::propagate_grid`]; the error this introduces is at most
    /// dim * DROP_TOL per amplitude, far below the 1e-9 comparisons the
    /// oracles serve. Sector-supported initial states excite only a handful
    /// of eigenvectors, so grids get dramatically cheaper.
    pub const DROP_TOL: f64 = 1e-14;

    pub fn new(h: &HermitianOp) -> Self {
        let (eigenvalues, eigenvectors) = hermitian_eigen(h.matrix());
        Self { eigenvalues, eigenvectors }
    }

    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    fn coefficients(&self, psi0: &StateVector, cutoff: f64) -> Vec<(usize, Complex64)> {
        (0..self.dim())
            .map(|l| (l, inner(self.eigenvectors.column(l), psi0.vector().view())))
            .filter(|(_, c)| c.norm() > cutoff)
            .collect()
    }

    fn evolve_one(&self, coeffs: &[(usize, Complex64)], t: f64) -> Array1<Complex64> {
        let mut out = Array1::zeros(self.dim());
        for &(l, c) in coeffs {
            let phase = Complex64::new(0.0, -self.eigenvalues[l] * t).exp();
            out.scaled_add(phase * c, &self.eigenvectors.column(l));
        }
        out
    }

    pub fn propagate(&self, psi0: &StateVector, t: f64) -> Result<StateVector, OracleError> {
        if psi0.dim() != self.dim() {
            return Err(OracleError::DimensionMismatch { expected: self.dim(), got: psi0.dim() });
        }
        let coeffs = self.coefficients(psi0, 0.0);
        Ok(StateVector::unchecked(self.evolve_one(&coeffs, t)))
    }

    pub fn propagate_grid(
        &self,
        psi0: &StateVector,
        ts: &[f64],
    ) -> Result<Vec<StateVector>, OracleError> {
        if psi0.dim() != self.dim() {
            return Err(OracleError::DimensionMismatch { expected: self.dim(), got: psi0.dim() });
        }
        let coeffs = self.coefficients(psi0, Self::DROP_TOL);
        Ok(ts.iter().map(|&t| StateVector::unchecked(self.evolve_one(&coeffs, t))).collect())
    }
}

/// One-shot evolution; prefer [`Propagator`] when sweeping times.
pub fn propagate(h: &HermitianOp, psi0: &StateVector, t: f64) -> Result<StateVector, OracleError> {
    Propagator::new(h).propagate(psi0, t)
}

/// <psi| op |psi>, guaranteed real by hermiticity.
pub fn expectation(op: &HermitianOp, psi: &StateVector) -> Result<f64, OracleError> {
    if psi.dim() != op.dim() {
        return Err(OracleError::DimensionMismatch { expected: op.dim(), got: psi.dim() });
    }
    let h_psi = op.matrix().dot(psi.vector());
    Ok(inner(psi.vector().view(), h_psi.view()).re)
}

/// Total-spin-squared of the qubits at bit positions lo..lo+count:
/// S^2 = Sz^2 + (S+ S- + S- S+) / 2.
fn subset_spin_squared(n_total: u32, lo: u32, count: u32) -> HermitianOp {
    let dim = 1usize << n_total;
    let mut sp = Array2::<Complex64>::zeros((dim, dim));
    let mut sz = Array2::<Complex64>::zeros((dim, dim));
    let sub_mask = ((1usize << count) - 1) << lo;
    for i in 0..dim {
        let down = f64::from((i & sub_mask).count_ones());
        sz[[i, i]] = Complex64::new(f64::from(count) / 2.0 - down, 0.0);
        for b in lo..lo + count {
            let mask = 1usize << b;
            if i & mask != 0 {
                sp[[i ^ mask, i]] += one();
            }
        }
    }
    let sm = adjoint(&sp);
    let s2 = sz.dot(&sz) + (sp.dot(&sm) + sm.dot(&sp)) * Complex64::new(0.5, 0.0);
    HermitianOp::new(s2).expect("spin-squared operators are Hermitian by construction")
}

/// S^2 of the central pair on the full register; eigenvalue 2 flags the
/// triplet, 0 the singlet.
pub fn central_s_squared(n_bath: u32) -> HermitianOp {
    subset_spin_squared(n_bath + 2, n_bath, 2)
}

/// J^2 of the bath on the full register; the Dicke sector has eigenvalue
/// (n/2)(n/2 + 1).
pub fn bath_j_squared(n_bath: u32) -> HermitianOp {
    subset_spin_squared(n_bath + 2, 0, n_bath)
}
