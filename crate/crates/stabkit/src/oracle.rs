//! Dense-matrix reference implementation, valid to about 10 qubits.
//!
//! Everything here works on explicit 2^N x 2^N complex matrices and is kept
//! deliberately independent of the tableau code paths: states are assembled
//! from Kronecker products and projector products, overlaps and fidelities
//! from matrix arithmetic and Hermitian eigendecompositions. The only things
//! shared with the fast code are the array types themselves.

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64 as C64;
use thiserror::Error;

use crate::array::{QubitPartition, StabiliserArray};
use crate::circuit::TableauOp;
use crate::pauli::{BaseGate, PauliElement, SingleQubitOp};

pub type CMatrix = DMatrix<C64>;

/// Default qubit cap; a 10-qubit matrix already holds 4^10 complex entries.
pub const DEFAULT_QUBIT_CAP: usize = 10;

/// Env var overriding the oracle qubit cap.
pub const ORACLE_CAP_ENV: &str = "STABKIT_ORACLE_CAP";

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("{n} qubits exceed the oracle cap of {cap} (set {ORACLE_CAP_ENV} to raise it)")]
    QubitLimitExceeded { n: usize, cap: usize },
}

fn qubit_cap() -> usize {
    std::env::var(ORACLE_CAP_ENV)
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_QUBIT_CAP)
}

fn check_cap(n: usize) -> Result<(), OracleError> {
    let cap = qubit_cap();
    if n > cap {
        Err(OracleError::QubitLimitExceeded { n, cap })
    } else {
        Ok(())
    }
}

/// A 2^N x 2^N density matrix, the oracle-side state representation.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseState {
    n_qubits: usize,
    matrix: CMatrix,
}

impl DenseState {
    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn dim(&self) -> usize {
        1 << self.n_qubits
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> CMatrix {
        self.matrix
    }

    pub fn from_matrix(n_qubits: usize, matrix: CMatrix) -> Self {
        assert_eq!(matrix.nrows(), 1 << n_qubits);
        assert_eq!(matrix.ncols(), 1 << n_qubits);
        Self { n_qubits, matrix }
    }
}

const ZERO: C64 = C64::new(0.0, 0.0);
const ONE: C64 = C64::new(1.0, 0.0);

pub fn identity(dim: usize) -> CMatrix {
    CMatrix::identity(dim, dim)
}

pub fn kron(a: &CMatrix, b: &CMatrix) -> CMatrix {
    a.kronecker(b)
}

/// 2x2 matrix of a single Pauli element.
pub fn pauli_matrix(p: PauliElement) -> CMatrix {
    let i = C64::new(0.0, 1.0);
    match p {
        PauliElement::I => CMatrix::from_row_slice(2, 2, &[ONE, ZERO, ZERO, ONE]),
        PauliElement::X => CMatrix::from_row_slice(2, 2, &[ZERO, ONE, ONE, ZERO]),
        PauliElement::Y => CMatrix::from_row_slice(2, 2, &[ZERO, -i, i, ZERO]),
        PauliElement::Z => CMatrix::from_row_slice(2, 2, &[ONE, ZERO, ZERO, -ONE]),
    }
}

/// Kronecker product of one stabiliser row, without its phase.
pub fn row_matrix(row: &[PauliElement]) -> CMatrix {
    let mut m = CMatrix::identity(1, 1);
    for &p in row {
        m = kron(&m, &pauli_matrix(p));
    }
    m
}

/// The (unnormalized) projector product over all generators,
/// prod_k (1 + s_k g_k)/2, assembled by dense matrix multiplication.
///
/// Valid for dependent generator sets too: repeated commuting projector
/// factors are idempotent. Imaginary generator phases are accepted so
/// that validation can be cross-checked against the product's failure to
/// be a state.
pub fn dense_projector(a: &StabiliserArray) -> Result<CMatrix, OracleError> {
    check_cap(a.n_qubits())?;
    let dim = 1 << a.n_qubits();
    let mut acc = identity(dim);
    for k in 0..a.num_rows() {
        let g = row_matrix(a.row(k));
        let s = C64::i().powu(a.phase(k).ipow() as u32);
        let factor = (identity(dim) + g * s).unscale(2.0);
        acc *= factor;
    }
    Ok(acc)
}

/// The stabiliser state rho = projector / 2^(N-K), by the projector
/// product form. The rows must be independent for the normalization to
/// be a unit trace; callers pre-reduce.
pub fn dense_state(a: &StabiliserArray) -> Result<DenseState, OracleError> {
    let p = dense_projector(a)?;
    let scale = 2f64.powi(a.n_qubits() as i32 - a.num_rows() as i32);
    Ok(DenseState {
        n_qubits: a.n_qubits(),
        matrix: p.unscale(scale),
    })
}

/// The same state assembled the expensive way, as the average of all 2^K
/// signed group elements. Independent of [`dense_state`]'s projector route;
/// the two must agree for independent generator sets.
pub fn dense_group_sum(a: &StabiliserArray) -> Result<DenseState, OracleError> {
    check_cap(a.n_qubits())?;
    let k = a.num_rows();
    assert!(
        k <= 24,
        "group enumeration over 2^{k} elements is unreasonable"
    );
    let dim = 1 << a.n_qubits();
    let signed_rows: Vec<CMatrix> = (0..k)
        .map(|r| row_matrix(a.row(r)) * C64::new(a.phase(r).sign(), 0.0))
        .collect();
    let mut current = identity(dim);
    let mut sum = current.clone();
    // Gray-code walk: each subset differs from the previous by one factor,
    // and Pauli rows are involutory, so toggling is one multiplication.
    let mut prev_gray = 0usize;
    for idx in 1..(1usize << k) {
        let gray = idx ^ (idx >> 1);
        let toggled = (gray ^ prev_gray).trailing_zeros() as usize;
        prev_gray = gray;
        current = &signed_rows[toggled] * current;
        sum += &current;
    }
    Ok(DenseState {
        n_qubits: a.n_qubits(),
        matrix: sum.unscale(2f64.powi(a.n_qubits() as i32)),
    })
}

/// Tr[rho1 rho2], real for Hermitian inputs.
pub fn dense_overlap(rho1: &DenseState, rho2: &DenseState) -> f64 {
    assert_eq!(rho1.n_qubits, rho2.n_qubits);
    (&rho1.matrix * &rho2.matrix).trace().re
}

fn hermitian_eigen(m: &CMatrix) -> (Vec<f64>, CMatrix) {
    let eig = SymmetricEigen::new(m.clone());
    let finite = eig.eigenvalues.iter().all(|v| v.is_finite())
        && eig
            .eigenvectors
            .iter()
            .all(|c| c.re.is_finite() && c.im.is_finite());
    if finite {
        (eig.eigenvalues.iter().cloned().collect(), eig.eigenvectors)
    } else {
        // The QR path occasionally breaks down on heavily degenerate
        // spectra; cyclic Jacobi is slower but never fails.
        jacobi_hermitian(m)
    }
}

/// Cyclic Jacobi eigendecomposition for complex Hermitian matrices.
fn jacobi_hermitian(a: &CMatrix) -> (Vec<f64>, CMatrix) {
    let n = a.nrows();
    let mut m = a.clone();
    let mut v = identity(n);
    let scale = a.iter().map(|c| c.norm()).fold(0.0, f64::max).max(1e-300);
    for _sweep in 0..80 {
        let off: f64 = (0..n)
            .flat_map(|p| ((p + 1)..n).map(move |q| (p, q)))
            .map(|(p, q)| m[(p, q)].norm_sqr())
            .sum::<f64>()
            .sqrt();
        if off < scale * 1e-14 {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = m[(p, q)];
                if apq.norm() < scale * 1e-18 {
                    continue;
                }
                let g = apq.norm();
                let phase = apq / g;
                let tau = (m[(q, q)].re - m[(p, p)].re) / (2.0 * g);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let sp = phase * s; // s·e^{iφ}
                                    // columns: col_p' = c·col_p − s·e^{−iφ}·col_q,
                                    //          col_q' = s·e^{iφ}·col_p + c·col_q
                for k in 0..n {
                    let mkp = m[(k, p)];
                    let mkq = m[(k, q)];
                    m[(k, p)] = mkp * c - mkq * sp.conj();
                    m[(k, q)] = mkp * sp + mkq * c;
                    let vkp = v[(k, p)];
                    let vkq = v[(k, q)];
                    v[(k, p)] = vkp * c - vkq * sp.conj();
                    v[(k, q)] = vkp * sp + vkq * c;
                }
                // rows: row_p' = c·row_p − s·e^{iφ}·row_q,
                //       row_q' = s·e^{−iφ}·row_p + c·row_q
                for k in 0..n {
                    let mpk = m[(p, k)];
                    let mqk = m[(q, k)];
                    m[(p, k)] = mpk * c - mqk * sp;
                    m[(q, k)] = mpk * sp.conj() + mqk * c;
                }
            }
        }
    }
    let vals: Vec<f64> = (0..n).map(|i| m[(i, i)].re).collect();
    (vals, v)
}

/// Positive-semidefinite square root via eigendecomposition. Eigenvalues
/// below a relative threshold are clipped to zero: the square root would
/// otherwise blow rounding noise of a true zero (~1e-16) up to ~1e-8,
/// while genuine stabiliser eigenvalues sit many orders above the cut.
pub fn sqrtm_psd(m: &CMatrix) -> CMatrix {
    let (vals, vecs) = hermitian_eigen(m);
    let cutoff = vals.iter().cloned().fold(0.0f64, f64::max).max(1e-300) * 1e-11;
    let d = DMatrix::from_diagonal(&nalgebra::DVector::from_iterator(
        vals.len(),
        vals.iter()
            .map(|&v| C64::new(if v > cutoff { v.sqrt() } else { 0.0 }, 0.0)),
    ));
    &vecs * d * vecs.adjoint()
}

/// Uhlmann fidelity Tr sqrt( sqrt(rho1) rho2 sqrt(rho1) ).
pub fn dense_uhlmann(rho1: &DenseState, rho2: &DenseState) -> f64 {
    assert_eq!(rho1.n_qubits, rho2.n_qubits);
    let s1 = sqrtm_psd(&rho1.matrix);
    let inner = &s1 * &rho2.matrix * &s1;
    sqrtm_psd(&inner).trace().re
}

/// Bures distance 2 sqrt(1 - F_u), with the fidelity clamped into [0, 1]
/// before the square root to absorb rounding.
pub fn dense_bures(rho1: &DenseState, rho2: &DenseState) -> f64 {
    let fu = dense_uhlmann(rho1, rho2).clamp(0.0, 1.0);
    2.0 * (1.0 - fu).sqrt()
}

/// Partial trace over the listed qubits (0-based, qubit 0 is the leftmost
/// tensor factor / most significant index bit).
pub fn dense_ptrace(rho: &DenseState, traced: &[usize]) -> DenseState {
    let n = rho.n_qubits;
    for &q in traced {
        assert!(q < n, "traced qubit {q} out of range");
    }
    let mut keep: Vec<usize> = (0..n).filter(|q| !traced.contains(q)).collect();
    keep.sort_unstable();
    let nk = keep.len();
    let kept_dim = 1 << nk;
    let traced_dim = 1 << (n - nk);
    let traced_list: Vec<usize> = (0..n).filter(|q| traced.contains(q)).collect();

    // Position of qubit q's bit inside a full index (bit 0 = rightmost).
    let bit = |q: usize| n - 1 - q;
    let mut out = CMatrix::zeros(kept_dim, kept_dim);
    for i in 0..kept_dim {
        for j in 0..kept_dim {
            let mut base_i = 0usize;
            let mut base_j = 0usize;
            for (pos, &q) in keep.iter().enumerate() {
                let b = bit(q);
                base_i |= ((i >> (nk - 1 - pos)) & 1) << b;
                base_j |= ((j >> (nk - 1 - pos)) & 1) << b;
            }
            let mut acc = ZERO;
            for t in 0..traced_dim {
                let mut full_i = base_i;
                let mut full_j = base_j;
                for (pos, &q) in traced_list.iter().enumerate() {
                    let b = bit(q);
                    let tb = (t >> pos) & 1;
                    full_i |= tb << b;
                    full_j |= tb << b;
                }
                acc += rho.matrix[(full_i, full_j)];
            }
            out[(i, j)] = acc;
        }
    }
    DenseState {
        n_qubits: nk,
        matrix: out,
    }
}

/// Von Neumann entropy in bits.
pub fn dense_entropy(rho: &DenseState) -> f64 {
    let (vals, _) = hermitian_eigen(&rho.matrix);
    -vals
        .iter()
        .filter(|&&v| v > 1e-12)
        .map(|&v| v * v.log2())
        .sum::<f64>()
}

/// Logarithmic negativity log2 || rho^(T_B) ||_1 across the partition.
pub fn dense_logneg(rho: &DenseState, partition: &QubitPartition) -> f64 {
    assert_eq!(partition.n_qubits(), rho.n_qubits);
    let n = rho.n_qubits;
    let dim = rho.dim();
    let bit = |q: usize| n - 1 - q;
    // Mask of party-B bits inside a basis index.
    let mut b_mask = 0usize;
    for &q in partition.party_b() {
        b_mask |= 1 << bit(q);
    }
    let mut pt = CMatrix::zeros(dim, dim);
    for i in 0..dim {
        for j in 0..dim {
            // Transpose the B-subsystem indices.
            let ti = (i & !b_mask) | (j & b_mask);
            let tj = (j & !b_mask) | (i & b_mask);
            pt[(ti, tj)] = rho.matrix[(i, j)];
        }
    }
    // The partial transpose of a Hermitian matrix is Hermitian, so its
    // trace norm is the sum of absolute eigenvalues.
    let (vals, _) = hermitian_eigen(&pt);
    vals.iter().map(|v| v.abs()).sum::<f64>().log2()
}

fn base_gate_matrix(g: BaseGate) -> CMatrix {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    match g {
        BaseGate::H => CMatrix::from_row_slice(
            2,
            2,
            &[
                C64::new(s, 0.0),
                C64::new(s, 0.0),
                C64::new(s, 0.0),
                C64::new(-s, 0.0),
            ],
        ),
        BaseGate::P => CMatrix::from_row_slice(2, 2, &[ONE, ZERO, ZERO, C64::new(0.0, 1.0)]),
        BaseGate::PDag => CMatrix::from_row_slice(2, 2, &[ONE, ZERO, ZERO, C64::new(0.0, -1.0)]),
    }
}

/// 2x2 unitary of a truth-table single-qubit op.
pub fn single_qubit_unitary(op: &SingleQubitOp) -> CMatrix {
    op.gates()
        .iter()
        .fold(identity(2), |acc, &g| acc * base_gate_matrix(g))
}

/// Left-multiplies `u` by the given single-qubit unitary acting on `qubit`
/// of an n-qubit register; O(4^n) instead of building the Kronecker factor.
fn apply_single_left(u: &mut CMatrix, n: usize, qubit: usize, gate: &CMatrix) {
    let dim = u.nrows();
    let stride = 1 << (n - 1 - qubit);
    let g00 = gate[(0, 0)];
    let g01 = gate[(0, 1)];
    let g10 = gate[(1, 0)];
    let g11 = gate[(1, 1)];
    for row in 0..dim {
        if row & stride != 0 {
            continue;
        }
        let partner = row | stride;
        for col in 0..dim {
            let a = u[(row, col)];
            let b = u[(partner, col)];
            u[(row, col)] = g00 * a + g01 * b;
            u[(partner, col)] = g10 * a + g11 * b;
        }
    }
}

/// Left-multiplies `u` by the basis permutation |i> -> |f(i)>.
fn apply_perm_left<F: Fn(usize) -> usize>(u: &mut CMatrix, f: F) {
    let dim = u.nrows();
    let mut out = CMatrix::zeros(dim, dim);
    for i in 0..dim {
        let fi = f(i);
        for col in 0..dim {
            out[(fi, col)] = u[(i, col)];
        }
    }
    *u = out;
}

/// Assembles the unitary of a recorded operation sequence (in application
/// order). Row operations do not change the state and are skipped.
pub fn circuit_unitary(n_qubits: usize, ops: &[TableauOp]) -> Result<CMatrix, OracleError> {
    check_cap(n_qubits)?;
    let n = n_qubits;
    let mut u = identity(1 << n);
    let bit = |q: usize| n - 1 - q;
    for op in ops {
        match *op {
            TableauOp::Single { op, col } => {
                let g = single_qubit_unitary(op);
                apply_single_left(&mut u, n, col, &g);
            }
            TableauOp::Cnot { control, target } => {
                let (cb, tb) = (bit(control), bit(target));
                apply_perm_left(
                    &mut u,
                    |i| {
                        if (i >> cb) & 1 == 1 {
                            i ^ (1 << tb)
                        } else {
                            i
                        }
                    },
                );
            }
            TableauOp::ColSwap { a, b } => {
                let (ab, bb) = (bit(a), bit(b));
                apply_perm_left(&mut u, |i| {
                    let (va, vb) = ((i >> ab) & 1, (i >> bb) & 1);
                    if va == vb {
                        i
                    } else {
                        i ^ (1 << ab) ^ (1 << bb)
                    }
                });
            }
            TableauOp::RowMul { .. } | TableauOp::RowSwap { .. } => {}
        }
    }
    Ok(u)
}

/// U rho U† for a recorded operation sequence.
pub fn conjugate_by_circuit(
    rho: &DenseState,
    ops: &[TableauOp],
) -> Result<DenseState, OracleError> {
    let u = circuit_unitary(rho.n_qubits, ops)?;
    Ok(DenseState {
        n_qubits: rho.n_qubits,
        matrix: &u * &rho.matrix * u.adjoint(),
    })
}

/// Largest absolute entry difference between two states' matrices.
pub fn max_abs_diff(a: &DenseState, b: &DenseState) -> f64 {
    assert_eq!(a.n_qubits, b.n_qubits);
    (&a.matrix - &b.matrix)
        .iter()
        .map(|c| c.norm())
        .fold(0.0, f64::max)
}

/// Sorted eigenvalue spectrum.
pub fn dense_spectrum(rho: &DenseState) -> Vec<f64> {
    let (mut vals, _) = hermitian_eigen(&rho.matrix);
    vals.sort_by(|a, b| a.partial_cmp(b).unwrap());
    vals
}
