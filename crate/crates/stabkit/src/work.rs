//! Crate-internal mutable tableau used by the reduction algorithms.
//!
//! The public array type is an immutable value; the algorithms clone it
//! into a `Work`, mutate in place, and log every elementary operation so
//! the accumulated circuit can be returned and oracle-checked.

use crate::array::{row_product, StabiliserArray};
use crate::circuit::TableauOp;
use crate::pauli::{apply_cnot, apply_single_qubit, PauliElement, Phase, SingleQubitOp};

#[derive(Clone, Debug)]
pub(crate) struct Work {
    pub n: usize,
    pub rows: Vec<Vec<PauliElement>>,
    pub phases: Vec<Phase>,
    pub log: Vec<TableauOp>,
    /// col_perm[position] = original column index now at `position`.
    pub col_perm: Vec<usize>,
}

impl Work {
    pub fn from_array(a: &StabiliserArray) -> Self {
        Self {
            n: a.n_qubits,
            rows: a.rows.clone(),
            phases: a.phases.clone(),
            log: Vec::new(),
            col_perm: (0..a.n_qubits).collect(),
        }
    }

    /// Stacks two arrays over the same qubits into one working tableau.
    pub fn from_stacked(top: &StabiliserArray, bottom: &StabiliserArray) -> Self {
        assert_eq!(top.n_qubits, bottom.n_qubits);
        let mut rows = top.rows.clone();
        rows.extend(bottom.rows.iter().cloned());
        let mut phases = top.phases.clone();
        phases.extend(bottom.phases.iter().copied());
        Self {
            n: top.n_qubits,
            rows,
            phases,
            log: Vec::new(),
            col_perm: (0..top.n_qubits).collect(),
        }
    }

    /// Rebuilds the tableau with columns permuted so that
    /// `order[position] = original index`; pure bookkeeping, not logged.
    pub fn from_array_with_column_order(a: &StabiliserArray, order: &[usize]) -> Self {
        assert_eq!(order.len(), a.n_qubits);
        let rows = a
            .rows
            .iter()
            .map(|row| order.iter().map(|&q| row[q]).collect())
            .collect();
        Self {
            n: a.n_qubits,
            rows,
            phases: a.phases.clone(),
            log: Vec::new(),
            col_perm: order.to_vec(),
        }
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn elem(&self, row: usize, col: usize) -> PauliElement {
        self.rows[row][col]
    }

    pub fn is_row_identity_in(&self, row: usize, cols: std::ops::Range<usize>) -> bool {
        self.rows[row][cols].iter().all(|p| p.is_identity())
    }

    pub fn row_swap(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        self.rows.swap(i, j);
        self.phases.swap(i, j);
        self.log.push(TableauOp::RowSwap { a: i, b: j });
    }

    /// row dst := row src · row dst, with the phase assertion of the
    /// elementary operation.
    pub fn row_mul(&mut self, src: usize, dst: usize) {
        assert_ne!(src, dst, "cannot multiply a row into itself");
        let (row, phase) = row_product(
            (&self.rows[src], self.phases[src]),
            (&self.rows[dst], self.phases[dst]),
        );
        self.rows[dst] = row;
        self.phases[dst] = phase;
        self.log.push(TableauOp::RowMul { src, dst });
    }

    pub fn apply_single(&mut self, col: usize, op: &'static SingleQubitOp) {
        if std::ptr::eq(op, &SingleQubitOp::IDENTITY) {
            return;
        }
        for (row, phase) in self.rows.iter_mut().zip(&mut self.phases) {
            let (ph, img) = apply_single_qubit(op, row[col]);
            row[col] = img;
            *phase *= ph;
        }
        self.log.push(TableauOp::Single { op, col });
    }

    pub fn apply_cnot(&mut self, control: usize, target: usize) {
        assert_ne!(control, target);
        for (row, phase) in self.rows.iter_mut().zip(&mut self.phases) {
            let (ph, c, t) = apply_cnot(row[control], row[target]);
            row[control] = c;
            row[target] = t;
            *phase *= ph;
        }
        self.log.push(TableauOp::Cnot { control, target });
    }

    pub fn col_swap(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for row in &mut self.rows {
            row.swap(a, b);
        }
        self.col_perm.swap(a, b);
        self.log.push(TableauOp::ColSwap { a, b });
    }

    pub fn into_array(self) -> StabiliserArray {
        StabiliserArray {
            n_qubits: self.n,
            rows: self.rows,
            phases: self.phases,
        }
    }

    /// Extracts a rectangular sub-block as its own array.
    pub fn sub_array(
        &self,
        rows: std::ops::Range<usize>,
        cols: std::ops::Range<usize>,
    ) -> StabiliserArray {
        assert!(!cols.is_empty());
        StabiliserArray {
            n_qubits: cols.len(),
            rows: self.rows[rows.clone()]
                .iter()
                .map(|r| r[cols.clone()].to_vec())
                .collect(),
            phases: self.phases[rows].to_vec(),
        }
    }
}
