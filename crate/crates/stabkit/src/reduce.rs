//! Row-reduced echelon form, the generator-independence check, rank, and
//! the partial-trace reduction.
//!
//! All of these use row operations only, so the represented state never
//! changes; only the generator set does.

use thiserror::Error;

use crate::array::StabiliserArray;
use crate::pauli::Phase;
use crate::work::Work;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ReduceError {
    #[error("row {} reduces to all-identity with phase -1: inconsistent generators", row + 1)]
    DependentWithMinusPhase { row: usize },
    #[error("no qubits selected for tracing")]
    EmptyTrace,
    #[error("tracing out all qubits would leave a 0-qubit state")]
    TracedAllQubits,
    #[error("traced qubit {} out of range (N = {n_qubits})", qubit + 1)]
    QubitOutOfRange { qubit: usize, n_qubits: usize },
}

/// The leading rows of one reduced column: one leader, or two with
/// anticommuting leading elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ColumnLeader {
    pub column: usize,
    pub first_row: usize,
    pub second_row: Option<usize>,
}

/// Outcome of the row-reduction: the reduced array, its rank, and the
/// per-column leader records.
#[derive(Clone, Debug)]
pub struct RrefResult {
    pub array: StabiliserArray,
    pub rank: usize,
    pub column_leaders: Vec<ColumnLeader>,
}

/// Core row-reduction loop over columns `0..col_end`, returning the column
/// leaders; `work` holds the reduced rows afterwards. The final value of
/// the top-of-active-region index is returned alongside (every row above it
/// is a leader row).
pub(crate) fn rref_in_place(work: &mut Work, col_end: usize) -> (Vec<ColumnLeader>, usize) {
    let k = work.num_rows();
    let mut leaders = Vec::new();
    let mut ku = 0usize;
    let mut nl = 0usize;
    while nl < col_end && ku < k {
        let first = (ku..k).find(|&m| !work.elem(m, nl).is_identity());
        let Some(k1) = first else {
            // no Pauli operators in this column
            nl += 1;
            continue;
        };
        let sigma1 = work.elem(k1, nl);
        let second = ((k1 + 1)..k).find(|&m| {
            let e = work.elem(m, nl);
            !e.is_identity() && e != sigma1
        });
        match second {
            None => {
                // one kind of Pauli: clear the column below one leader
                work.row_swap(k1, ku);
                for m in (ku + 1)..k {
                    if work.elem(m, nl) == sigma1 {
                        work.row_mul(ku, m);
                    }
                }
                leaders.push(ColumnLeader {
                    column: nl,
                    first_row: ku,
                    second_row: None,
                });
                ku += 1;
                nl += 1;
            }
            Some(k2) => {
                // two anticommuting leaders; eliminate every other row by
                // multiplying with the first, the second, or both
                work.row_swap(k1, ku);
                work.row_swap(k2, ku + 1);
                let s1 = work.elem(ku, nl);
                let s2 = work.elem(ku + 1, nl);
                for m in (ku + 2)..k {
                    let e = work.elem(m, nl);
                    if e.is_identity() {
                        continue;
                    }
                    if e == s1 {
                        work.row_mul(ku, m);
                    } else if e == s2 {
                        work.row_mul(ku + 1, m);
                    } else {
                        work.row_mul(ku, m);
                        work.row_mul(ku + 1, m);
                    }
                }
                leaders.push(ColumnLeader {
                    column: nl,
                    first_row: ku,
                    second_row: Some(ku + 1),
                });
                ku += 2;
                nl += 1;
            }
        }
    }
    (leaders, ku)
}

/// Brings the array to row-reduced echelon form. Row operations only: the
/// represented state is unchanged, and dependent rows surface as trailing
/// all-identity rows.
pub fn rref(a: &StabiliserArray) -> RrefResult {
    let mut work = Work::from_array(a);
    let (column_leaders, _) = rref_in_place(&mut work, a.n_qubits());
    let array = work.into_array();
    let identity_rows = (0..array.num_rows())
        .filter(|&m| array.is_row_identity(m))
        .count();
    RrefResult {
        rank: array.num_rows() - identity_rows,
        array,
        column_leaders,
    }
}

/// Number of independent generators.
pub fn rank(a: &StabiliserArray) -> usize {
    rref(a).rank
}

/// Reduces the array and removes the all-identity rows, leaving an
/// independent generator set for the same group.
pub fn drop_dependent(a: &StabiliserArray) -> Result<StabiliserArray, ReduceError> {
    let res = rref(a);
    let mut rows = Vec::with_capacity(res.rank);
    for (m, (row, phase)) in res.array.iter_rows().enumerate() {
        if row.iter().all(|p| p.is_identity()) {
            if phase == Phase::MINUS_ONE {
                return Err(ReduceError::DependentWithMinusPhase { row: m });
            }
        } else {
            rows.push((row.to_vec(), phase));
        }
    }
    Ok(StabiliserArray::from_rows(a.n_qubits(), rows).expect("shape preserved"))
}

/// Reduction used by validation: the 0-based row index of an all-identity
/// row with phase -1 in the reduced array, if the generators are
/// inconsistent.
pub(crate) fn contradiction_row(a: &StabiliserArray) -> Option<usize> {
    let res = rref(a);
    (0..res.array.num_rows())
        .find(|&m| res.array.is_row_identity(m) && res.array.phase(m) == Phase::MINUS_ONE)
}

/// Traces out the given qubits (0-based), returning the stabiliser array of
/// the reduced state on the remaining qubits in their original order.
///
/// The traced columns are moved to the front as pure bookkeeping, reduced,
/// and the leader rows and traced columns removed.
pub fn ptrace(a: &StabiliserArray, traced: &[usize]) -> Result<StabiliserArray, ReduceError> {
    let n = a.n_qubits();
    let mut traced: Vec<usize> = traced.to_vec();
    traced.sort_unstable();
    traced.dedup();
    if traced.is_empty() {
        return Err(ReduceError::EmptyTrace);
    }
    if let Some(&q) = traced.iter().find(|&&q| q >= n) {
        return Err(ReduceError::QubitOutOfRange {
            qubit: q,
            n_qubits: n,
        });
    }
    if traced.len() == n {
        return Err(ReduceError::TracedAllQubits);
    }
    let kept: Vec<usize> = (0..n).filter(|q| !traced.contains(q)).collect();
    let order: Vec<usize> = traced.iter().chain(kept.iter()).copied().collect();
    let t = traced.len();

    let mut work = Work::from_array_with_column_order(a, &order);
    let (_, ku) = rref_in_place(&mut work, t);
    // Every surviving row now acts as identity on the traced columns.
    debug_assert!((ku..work.num_rows()).all(|m| work.is_row_identity_in(m, 0..t)));
    let rows = (ku..work.num_rows())
        .map(|m| (work.rows[m][t..].to_vec(), work.phases[m]))
        .collect::<Vec<_>>();
    Ok(StabiliserArray::from_rows(n - t, rows).expect("kept columns are nonempty"))
}
