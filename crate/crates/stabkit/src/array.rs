//! The stabiliser array: a K x N grid of Pauli elements plus a K-vector of
//! generator phases, with validation, the elementary row and column
//! operations, and the `stab v1` text format.
//!
//! Arrays are immutable values; every operation returns a new array. Row
//! operations never change the represented state, column operations change
//! it by the corresponding unitary.

use std::fmt;

use thiserror::Error;

use crate::pauli::{apply_cnot, apply_single_qubit, commutes, pauli_mul};
use crate::pauli::{PauliElement, Phase, SingleQubitOp};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ArrayError {
    #[error("an array must have at least one qubit")]
    NoQubits,
    #[error("row {} has {got} elements, expected {expected}", row + 1)]
    RowLengthMismatch {
        row: usize,
        expected: usize,
        got: usize,
    },
    #[error("row index {} out of range (K = {rows})", index + 1)]
    RowIndexOutOfRange { index: usize, rows: usize },
    #[error("column index {} out of range (N = {columns})", index + 1)]
    ColumnIndexOutOfRange { index: usize, columns: usize },
    #[error("cannot multiply row {} into itself", index + 1)]
    SelfRowMultiply { index: usize },
    #[error("control and target coincide (column {})", index + 1)]
    IdenticalColumns { index: usize },
    #[error("columns {} and {} belong to different parties", p + 1, q + 1)]
    CrossPartySwap { p: usize, q: usize },
    #[error("a party must contain at least one qubit")]
    EmptyParty,
    #[error("party qubit {} out of range (N = {n_qubits})", qubit + 1)]
    PartyQubitOutOfRange { qubit: usize, n_qubits: usize },
}

/// Why an array does not describe a stabiliser state. Row indices are
/// 0-based in the fields and 1-based in the rendered message.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ValidationError {
    #[error("rows {} and {} do not commute", first + 1, second + 1)]
    NonCommuting { first: usize, second: usize },
    #[error("row {} has an imaginary phase", row + 1)]
    ImaginaryPhase { row: usize },
    #[error("row {} reduces to the identity with phase -1", row + 1)]
    ContradictoryIdentityRow { row: usize },
}

/// K generators over N qubits: rows of Pauli elements plus a phase vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabiliserArray {
    pub(crate) n_qubits: usize,
    pub(crate) rows: Vec<Vec<PauliElement>>,
    pub(crate) phases: Vec<Phase>,
}

impl StabiliserArray {
    /// Builds an array from (row, phase) pairs, checking shape only.
    pub fn from_rows<I>(n_qubits: usize, rows: I) -> Result<Self, ArrayError>
    where
        I: IntoIterator<Item = (Vec<PauliElement>, Phase)>,
    {
        if n_qubits == 0 {
            return Err(ArrayError::NoQubits);
        }
        let mut r = Vec::new();
        let mut phases = Vec::new();
        for (i, (row, phase)) in rows.into_iter().enumerate() {
            if row.len() != n_qubits {
                return Err(ArrayError::RowLengthMismatch {
                    row: i,
                    expected: n_qubits,
                    got: row.len(),
                });
            }
            r.push(row);
            phases.push(phase);
        }
        Ok(Self {
            n_qubits,
            rows: r,
            phases,
        })
    }

    /// Convenience constructor from letter strings, e.g. `("XIZ", +)`.
    pub fn from_letters<'a, I>(n_qubits: usize, rows: I) -> Result<Self, ArrayError>
    where
        I: IntoIterator<Item = (&'a str, Phase)>,
    {
        Self::from_rows(
            n_qubits,
            rows.into_iter().map(|(s, ph)| {
                (
                    s.chars()
                        .filter_map(PauliElement::from_letter)
                        .collect::<Vec<_>>(),
                    ph,
                )
            }),
        )
    }

    /// The empty generator set (the maximally mixed state).
    pub fn empty(n_qubits: usize) -> Result<Self, ArrayError> {
        Self::from_rows(n_qubits, std::iter::empty())
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    /// K, the number of generator rows (not necessarily independent).
    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn row(&self, k: usize) -> &[PauliElement] {
        &self.rows[k]
    }

    pub fn phase(&self, k: usize) -> Phase {
        self.phases[k]
    }

    pub fn element(&self, row: usize, col: usize) -> PauliElement {
        self.rows[row][col]
    }

    pub fn iter_rows(&self) -> impl Iterator<Item = (&[PauliElement], Phase)> {
        self.rows
            .iter()
            .map(Vec::as_slice)
            .zip(self.phases.iter().copied())
    }

    pub fn is_row_identity(&self, k: usize) -> bool {
        self.rows[k].iter().all(|p| p.is_identity())
    }

    fn check_row(&self, index: usize) -> Result<(), ArrayError> {
        if index >= self.rows.len() {
            Err(ArrayError::RowIndexOutOfRange {
                index,
                rows: self.rows.len(),
            })
        } else {
            Ok(())
        }
    }

    fn check_col(&self, index: usize) -> Result<(), ArrayError> {
        if index >= self.n_qubits {
            Err(ArrayError::ColumnIndexOutOfRange {
                index,
                columns: self.n_qubits,
            })
        } else {
            Ok(())
        }
    }

    /// Checks that the array describes a stabiliser state: pairwise
    /// commuting rows, real generator phases, and no way to generate the
    /// negated identity.
    pub fn validate(&self) -> Result<(), ValidationError> {
        for (k, &ph) in self.phases.iter().enumerate() {
            if !ph.is_real() {
                return Err(ValidationError::ImaginaryPhase { row: k });
            }
            if self.is_row_identity(k) && ph == Phase::MINUS_ONE {
                return Err(ValidationError::ContradictoryIdentityRow { row: k });
            }
        }
        for i in 0..self.rows.len() {
            for j in (i + 1)..self.rows.len() {
                if !self.rows_commute(i, j) {
                    return Err(ValidationError::NonCommuting {
                        first: i,
                        second: j,
                    });
                }
            }
        }
        // Dependencies may still hide a contradiction such as {+ZZ, -ZZ};
        // those only surface after reduction.
        if let Some(row) = crate::reduce::contradiction_row(self) {
            return Err(ValidationError::ContradictoryIdentityRow { row });
        }
        Ok(())
    }

    /// True iff rows i and j commute as N-fold tensor products, i.e. they
    /// anticommute on an even number of columns.
    pub fn rows_commute(&self, i: usize, j: usize) -> bool {
        let anti = self.rows[i]
            .iter()
            .zip(&self.rows[j])
            .filter(|(a, b)| !commutes(**a, **b))
            .count();
        anti % 2 == 0
    }

    /// Interchanges rows i and j (allowed to coincide).
    pub fn row_transpose(&self, i: usize, j: usize) -> Result<Self, ArrayError> {
        self.check_row(i)?;
        self.check_row(j)?;
        let mut out = self.clone();
        out.rows.swap(i, j);
        out.phases.swap(i, j);
        Ok(out)
    }

    /// Replaces row `dst` by the elementwise product row `src` · row `dst`,
    /// phases included. Panics if the accumulated phase is imaginary, which
    /// signals non-commuting input rows.
    pub fn row_multiply(&self, src: usize, dst: usize) -> Result<Self, ArrayError> {
        self.check_row(src)?;
        self.check_row(dst)?;
        if src == dst {
            return Err(ArrayError::SelfRowMultiply { index: src });
        }
        let mut out = self.clone();
        let (row, phase) = row_product(
            (&self.rows[src], self.phases[src]),
            (&self.rows[dst], self.phases[dst]),
        );
        out.rows[dst] = row;
        out.phases[dst] = phase;
        Ok(out)
    }

    /// Swaps columns p and q. With a partition given, both must belong to
    /// the same party.
    pub fn column_transpose(
        &self,
        p: usize,
        q: usize,
        partition: Option<&QubitPartition>,
    ) -> Result<Self, ArrayError> {
        self.check_col(p)?;
        self.check_col(q)?;
        if let Some(part) = partition {
            if part.in_party_a(p) != part.in_party_a(q) {
                return Err(ArrayError::CrossPartySwap { p, q });
            }
        }
        let mut out = self.clone();
        for row in &mut out.rows {
            row.swap(p, q);
        }
        Ok(out)
    }

    /// Applies a truth-table single-qubit op to one column, updating every
    /// row phase by the tabulated factor.
    pub fn apply_column_op(&self, col: usize, op: &SingleQubitOp) -> Result<Self, ArrayError> {
        self.check_col(col)?;
        let mut out = self.clone();
        for (row, phase) in out.rows.iter_mut().zip(&mut out.phases) {
            let (ph, img) = apply_single_qubit(op, row[col]);
            row[col] = img;
            *phase *= ph;
        }
        Ok(out)
    }

    /// Applies a CNOT between the control and target columns.
    pub fn apply_cnot_columns(&self, control: usize, target: usize) -> Result<Self, ArrayError> {
        self.check_col(control)?;
        self.check_col(target)?;
        if control == target {
            return Err(ArrayError::IdenticalColumns { index: control });
        }
        let mut out = self.clone();
        for (row, phase) in out.rows.iter_mut().zip(&mut out.phases) {
            let (ph, c, t) = apply_cnot(row[control], row[target]);
            row[control] = c;
            row[target] = t;
            *phase *= ph;
        }
        Ok(out)
    }

    /// The entropy N - rank of the represented state, in bits.
    pub fn entropy(&self) -> usize {
        self.n_qubits - crate::reduce::rank(self)
    }
}

/// Elementwise Pauli product of two rows with full phase accumulation.
/// The result phase must come out real for commuting rows.
pub(crate) fn row_product(
    src: (&[PauliElement], Phase),
    dst: (&[PauliElement], Phase),
) -> (Vec<PauliElement>, Phase) {
    let mut phase = src.1 * dst.1;
    let row: Vec<PauliElement> = src
        .0
        .iter()
        .zip(dst.0)
        .map(|(&a, &b)| {
            let (ph, e) = pauli_mul(a, b);
            phase *= ph;
            e
        })
        .collect();
    assert!(
        phase.is_real(),
        "row product has imaginary phase {phase}; the rows do not commute"
    );
    (row, phase)
}

/// A bipartition of the qubits into parties A and B, both nonempty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QubitPartition {
    n_qubits: usize,
    party_a: Vec<usize>,
    party_b: Vec<usize>,
}

impl QubitPartition {
    /// Builds a partition from the 0-based qubit indices of party A; party
    /// B is the complement. Duplicates are collapsed.
    pub fn new(n_qubits: usize, mut party_a: Vec<usize>) -> Result<Self, ArrayError> {
        party_a.sort_unstable();
        party_a.dedup();
        if let Some(&q) = party_a.iter().find(|&&q| q >= n_qubits) {
            return Err(ArrayError::PartyQubitOutOfRange { qubit: q, n_qubits });
        }
        if party_a.is_empty() || party_a.len() == n_qubits {
            return Err(ArrayError::EmptyParty);
        }
        let party_b: Vec<usize> = (0..n_qubits).filter(|q| !party_a.contains(q)).collect();
        Ok(Self {
            n_qubits,
            party_a,
            party_b,
        })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn party_a(&self) -> &[usize] {
        &self.party_a
    }

    pub fn party_b(&self) -> &[usize] {
        &self.party_b
    }

    pub fn in_party_a(&self, qubit: usize) -> bool {
        self.party_a.binary_search(&qubit).is_ok()
    }
}

/* stab v1 text format ********************************************************
 *
 *     # stab v1  N=3 K=2
 *     + XIZ
 *     - ZZI
 *
 * Blank lines and additional `#` comments are ignored; parsing is
 * case-sensitive; a K=0 file contains only the header.
 */

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("missing `# stab v1` header")]
    MissingHeader,
    #[error("malformed header: {0}")]
    BadHeader(String),
    #[error("line {line}: expected `<sign> <paulis>`")]
    BadRowSyntax { line: usize },
    #[error("line {line}: `{ch}` is not one of I, X, Y, Z")]
    BadLetter { line: usize, ch: char },
    #[error("line {line}: row has {got} elements, expected {expected}")]
    WrongRowLength {
        line: usize,
        expected: usize,
        got: usize,
    },
    #[error("header announced K={expected} rows but the file has {got}")]
    RowCountMismatch { expected: usize, got: usize },
    #[error("invalid shape: {0}")]
    BadShape(ArrayError),
}

impl StabiliserArray {
    /// Canonical `stab v1` rendering; `parse_stab` inverts it byte-exactly.
    pub fn to_stab_string(&self) -> String {
        let mut out = format!("# stab v1  N={} K={}\n", self.n_qubits, self.rows.len());
        for (row, phase) in self.iter_rows() {
            out.push_str(phase.symbol());
            out.push(' ');
            for p in row {
                out.push(p.letter());
            }
            out.push('\n');
        }
        out
    }

    pub fn parse_stab(text: &str) -> Result<Self, ParseError> {
        let mut header: Option<(usize, usize)> = None;
        let mut rows: Vec<(Vec<PauliElement>, Phase)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix('#') {
                if header.is_none() {
                    header = Some(parse_header(rest, idx + 1)?);
                }
                // later comment lines are ignored
                continue;
            }
            let Some((n, _)) = header else {
                return Err(ParseError::MissingHeader);
            };
            let mut chars = line.chars();
            let sign = match chars.next() {
                Some('+') => Phase::PLUS_ONE,
                Some('-') => Phase::MINUS_ONE,
                _ => return Err(ParseError::BadRowSyntax { line: idx + 1 }),
            };
            if chars.next() != Some(' ') {
                return Err(ParseError::BadRowSyntax { line: idx + 1 });
            }
            let mut row = Vec::with_capacity(n);
            for ch in chars {
                match PauliElement::from_letter(ch) {
                    Some(p) => row.push(p),
                    None => return Err(ParseError::BadLetter { line: idx + 1, ch }),
                }
            }
            if row.len() != n {
                return Err(ParseError::WrongRowLength {
                    line: idx + 1,
                    expected: n,
                    got: row.len(),
                });
            }
            rows.push((row, sign));
        }
        let Some((n, k)) = header else {
            return Err(ParseError::MissingHeader);
        };
        if rows.len() != k {
            return Err(ParseError::RowCountMismatch {
                expected: k,
                got: rows.len(),
            });
        }
        Self::from_rows(n, rows).map_err(ParseError::BadShape)
    }
}

fn parse_header(rest: &str, line: usize) -> Result<(usize, usize), ParseError> {
    let bad = |msg: &str| ParseError::BadHeader(format!("line {line}: {msg}"));
    let mut tokens = rest.split_whitespace();
    if tokens.next() != Some("stab") || tokens.next() != Some("v1") {
        return Err(bad("expected `# stab v1`"));
    }
    let mut n = None;
    let mut k = None;
    for tok in tokens {
        if let Some(v) = tok.strip_prefix("N=") {
            n = v.parse::<usize>().ok();
        } else if let Some(v) = tok.strip_prefix("K=") {
            k = v.parse::<usize>().ok();
        } else {
            return Err(bad(&format!("unexpected token `{tok}`")));
        }
    }
    match (n, k) {
        (Some(n), Some(k)) if n > 0 => Ok((n, k)),
        (Some(0), _) => Err(bad("N must be positive")),
        _ => Err(bad("missing or malformed N= / K= fields")),
    }
}

impl fmt::Display for StabiliserArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_stab_string())
    }
}

impl std::str::FromStr for StabiliserArray {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse_stab(s)
    }
}
