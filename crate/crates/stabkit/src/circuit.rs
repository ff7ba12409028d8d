//! Recorded elementary operations.
//!
//! Reduction algorithms log every step they take. Row operations never
//! change the represented state; column operations change it by
//! conjugation with the corresponding unitary, which the oracle can
//! reassemble from the log.

use std::fmt;

use crate::pauli::SingleQubitOp;

/// One logged elementary operation. Row and column indices are 0-based;
/// the display form is 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableauOp {
    /// Truth-table single-qubit op applied to one column.
    Single {
        op: &'static SingleQubitOp,
        col: usize,
    },
    /// CNOT between two columns.
    Cnot { control: usize, target: usize },
    /// Column (qubit) transposition.
    ColSwap { a: usize, b: usize },
    /// Row multiplication: row `dst` replaced by the product `src`·`dst`.
    RowMul { src: usize, dst: usize },
    /// Row transposition.
    RowSwap { a: usize, b: usize },
}

impl TableauOp {
    /// True for operations that alter the state (column operations).
    pub fn is_column_op(self) -> bool {
        matches!(
            self,
            TableauOp::Single { .. } | TableauOp::Cnot { .. } | TableauOp::ColSwap { .. }
        )
    }

    /// Columns touched by the op, if it is a column op.
    pub fn columns(self) -> Option<(usize, Option<usize>)> {
        match self {
            TableauOp::Single { col, .. } => Some((col, None)),
            TableauOp::Cnot { control, target } => Some((control, Some(target))),
            TableauOp::ColSwap { a, b } => Some((a, Some(b))),
            _ => None,
        }
    }
}

impl fmt::Display for TableauOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            TableauOp::Single { op, col } => write!(f, "{} {}", op.name(), col + 1),
            TableauOp::Cnot { control, target } => {
                write!(f, "CNOT {} {}", control + 1, target + 1)
            }
            TableauOp::ColSwap { a, b } => write!(f, "SWAP {} {}", a + 1, b + 1),
            TableauOp::RowMul { src, dst } => write!(f, "ROWMUL {} {}", src + 1, dst + 1),
            TableauOp::RowSwap { a, b } => write!(f, "ROWSWAP {} {}", a + 1, b + 1),
        }
    }
}
