//! Overlap Tr[rho1 rho2], Uhlmann fidelity, and Bures distance between two
//! stabiliser states on the same qubits, computed exactly in powers of two.
//!
//! Both states are projectors up to normalization, so the overlap is either
//! zero or 2^-j, and the Uhlmann fidelity zero or 2^(-j/2). The algorithm
//! stacks the two arrays, normal-forms the first block while replaying all
//! column operations on the second, then consumes the second block column
//! by column, accumulating the exact scalar.

use std::fmt;

use thiserror::Error;

use crate::array::{StabiliserArray, ValidationError};
use crate::cnf::cnf_reduce;
use crate::pauli::{PauliElement, Phase};
use crate::reduce;
use crate::work::Work;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OverlapError {
    #[error("dimension mismatch ({left} vs {right} qubits)")]
    DimensionMismatch { left: usize, right: usize },
    #[error("{side} array is not a stabiliser state: {source}")]
    InvalidInput {
        side: &'static str,
        #[source]
        source: ValidationError,
    },
}

/// An exact scalar that is either zero or an integer power of two.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DyadicScalar {
    zero: bool,
    log2: i32,
}

impl DyadicScalar {
    pub const ONE: Self = Self {
        zero: false,
        log2: 0,
    };
    pub const ZERO: Self = Self {
        zero: true,
        log2: 0,
    };

    pub fn pow2(log2: i32) -> Self {
        Self { zero: false, log2 }
    }

    pub fn is_zero(self) -> bool {
        self.zero
    }

    pub fn is_one(self) -> bool {
        !self.zero && self.log2 == 0
    }

    /// The exponent j in 2^j; None for zero.
    pub fn log2_value(self) -> Option<i32> {
        (!self.zero).then_some(self.log2)
    }

    pub fn to_f64(self) -> f64 {
        if self.zero {
            0.0
        } else {
            2f64.powi(self.log2)
        }
    }

    fn halve(&mut self) {
        self.log2 -= 1;
    }
}

impl fmt::Display for DyadicScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.zero {
            write!(f, "0")
        } else if self.log2 == 0 {
            write!(f, "1")
        } else {
            write!(f, "2^{}", self.log2)
        }
    }
}

/// An exact scalar that is either zero or a half-integer power of two,
/// stored as twice the exponent.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DyadicSqrt {
    zero: bool,
    twice_log2: i32,
}

impl DyadicSqrt {
    pub const ZERO: Self = Self {
        zero: true,
        twice_log2: 0,
    };

    pub fn pow2_half(twice_log2: i32) -> Self {
        Self {
            zero: false,
            twice_log2,
        }
    }

    pub fn is_zero(self) -> bool {
        self.zero
    }

    pub fn is_one(self) -> bool {
        !self.zero && self.twice_log2 == 0
    }

    /// Twice the exponent: the value is 2^(twice_log2_value/2); None for zero.
    pub fn twice_log2_value(self) -> Option<i32> {
        (!self.zero).then_some(self.twice_log2)
    }

    pub fn to_f64(self) -> f64 {
        if self.zero {
            0.0
        } else {
            2f64.powf(self.twice_log2 as f64 / 2.0)
        }
    }
}

impl fmt::Display for DyadicSqrt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.zero {
            write!(f, "0")
        } else if self.twice_log2 == 0 {
            write!(f, "1")
        } else if self.twice_log2 % 2 == 0 {
            write!(f, "2^{}", self.twice_log2 / 2)
        } else {
            write!(f, "2^{}/2", self.twice_log2)
        }
    }
}

/// Overlap F, Uhlmann fidelity F_u, and Bures distance 2*sqrt(1 - F_u).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OverlapResult {
    pub overlap: DyadicScalar,
    pub uhlmann: DyadicSqrt,
    pub bures: f64,
}

/// Two stabiliser arrays over the same qubits, stacked. Not itself a
/// stabiliser array: rows of the top block need not commute with rows of
/// the bottom block, but each block is individually valid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompositeArray {
    top: StabiliserArray,
    bottom: StabiliserArray,
}

impl CompositeArray {
    pub fn new(top: StabiliserArray, bottom: StabiliserArray) -> Result<Self, OverlapError> {
        if top.n_qubits() != bottom.n_qubits() {
            return Err(OverlapError::DimensionMismatch {
                left: top.n_qubits(),
                right: bottom.n_qubits(),
            });
        }
        top.validate()
            .map_err(|source| OverlapError::InvalidInput {
                side: "first",
                source,
            })?;
        bottom
            .validate()
            .map_err(|source| OverlapError::InvalidInput {
                side: "second",
                source,
            })?;
        Ok(Self { top, bottom })
    }

    pub fn top(&self) -> &StabiliserArray {
        &self.top
    }

    pub fn bottom(&self) -> &StabiliserArray {
        &self.bottom
    }

    pub fn n_qubits(&self) -> usize {
        self.top.n_qubits()
    }
}

/// Brings the top block to normal form while replaying every column
/// operation on the bottom block; row operations stay inside the top block.
pub fn joint_cnf(c: &CompositeArray) -> CompositeArray {
    let (work, _) = joint_cnf_work(&c.top, &c.bottom);
    split_composite(work, c.top.num_rows())
}

fn joint_cnf_work(top: &StabiliserArray, bottom: &StabiliserArray) -> (Work, usize) {
    let mut w = Work::from_stacked(top, bottom);
    let n = w.n;
    let r1 = cnf_reduce(&mut w, 0..top.num_rows(), 0..n);
    (w, r1)
}

fn split_composite(w: Work, k1: usize) -> CompositeArray {
    let n = w.n;
    let top = w.sub_array(0..k1, 0..n);
    let bottom = w.sub_array(k1..w.num_rows(), 0..n);
    CompositeArray { top, bottom }
}

/// Overlap, Uhlmann fidelity, and Bures distance between the states of two
/// validated arrays over the same qubits. The scalars are exact; floating
/// point enters only in the Bures output.
pub fn overlap(a1: &StabiliserArray, a2: &StabiliserArray) -> Result<OverlapResult, OverlapError> {
    if a1.n_qubits() != a2.n_qubits() {
        return Err(OverlapError::DimensionMismatch {
            left: a1.n_qubits(),
            right: a2.n_qubits(),
        });
    }
    a1.validate().map_err(|source| OverlapError::InvalidInput {
        side: "first",
        source,
    })?;
    a2.validate().map_err(|source| OverlapError::InvalidInput {
        side: "second",
        source,
    })?;

    // Pre-reduce both sides to independent generators so the block ranks
    // equal the row counts and the closed-form exponents apply.
    let a1 = reduce::drop_dependent(a1).expect("validated input cannot be contradictory");
    let a2 = reduce::drop_dependent(a2).expect("validated input cannot be contradictory");
    let n = a1.n_qubits();
    let (k1, k2) = (a1.num_rows(), a2.num_rows());

    let (mut w, r1) = joint_cnf_work(&a1, &a2);
    debug_assert_eq!(r1, k1, "independent generators reduce to k1 leaders");

    // Consume the bottom block column by column over the leader columns.
    // Every consumed non-X leader halves the scalar T; X leaders are
    // cancelled against the corresponding top-block row, which is where the
    // generator phases enter.
    let mut t = DyadicScalar::ONE;
    let kl_end = k1 + k2;
    let mut ku = k1;
    let mut nl = 0usize;
    let nr = r1;
    while nl < nr && ku < kl_end {
        let first = (ku..kl_end).find(|&m| !w.elem(m, nl).is_identity());
        if let Some(m1) = first {
            let sigma1 = w.elem(m1, nl);
            let second = ((m1 + 1)..kl_end).find(|&m| {
                let e = w.elem(m, nl);
                !e.is_identity() && e != sigma1
            });
            match second {
                None => {
                    // one kind of Pauli in the column
                    w.row_swap(m1, ku);
                    for m in (ku + 1)..kl_end {
                        if !w.elem(m, nl).is_identity() {
                            w.row_mul(ku, m);
                        }
                    }
                    if w.elem(ku, nl) == PauliElement::X {
                        // cancel against the top-block row leading here
                        w.row_mul(nl, ku);
                    } else {
                        t.halve();
                        ku += 1;
                    }
                }
                Some(m2) => {
                    // two kinds: eliminate the rest of the column, turn the
                    // second leader into the X one, cancel it, and consume
                    // the non-X leader
                    w.row_swap(m1, ku);
                    w.row_swap(m2, ku + 1);
                    let s1 = w.elem(ku, nl);
                    let s2 = w.elem(ku + 1, nl);
                    for m in (ku + 2)..kl_end {
                        let e = w.elem(m, nl);
                        if e.is_identity() {
                            continue;
                        }
                        if e == s1 {
                            w.row_mul(ku, m);
                        } else if e == s2 {
                            w.row_mul(ku + 1, m);
                        } else {
                            w.row_mul(ku, m);
                            w.row_mul(ku + 1, m);
                        }
                    }
                    if s1 == PauliElement::X {
                        w.row_swap(ku, ku + 1);
                    } else if s2 != PauliElement::X {
                        // the product of two distinct non-X Paulis is an X
                        w.row_mul(ku, ku + 1);
                    }
                    debug_assert_eq!(w.elem(ku + 1, nl), PauliElement::X);
                    w.row_mul(nl, ku + 1);
                    t.halve();
                    ku += 1;
                }
            }
        }
        nl += 1;
    }

    // End game: whatever bottom rows remain act as identity on the leader
    // columns. Their restriction to the trailing columns is reduced to find
    // its rank r2 and to detect an orthogonality contradiction.
    let mut r2 = 0usize;
    if ku < kl_end {
        debug_assert!((ku..kl_end).all(|m| w.is_row_identity_in(m, 0..nr)));
        if nr == n {
            // no trailing columns: only the leftover phases matter
            if (ku..kl_end).any(|m| w.phases[m] == Phase::MINUS_ONE) {
                t = DyadicScalar::ZERO;
            }
        } else {
            let block = w.sub_array(ku..kl_end, nr..n);
            let res = reduce::rref(&block);
            r2 = res.rank;
            let contradictory = (0..res.array.num_rows())
                .any(|m| res.array.is_row_identity(m) && res.array.phase(m) == Phase::MINUS_ONE);
            if contradictory {
                t = DyadicScalar::ZERO;
            }
        }
    }

    // F = C·T / 2^(2N-K1-K2) with C = 2^(N-R1-R2).
    let norm = 2 * n as i32 - k1 as i32 - k2 as i32;
    let c_log2 = n as i32 - r1 as i32 - r2 as i32;
    let (f, fu) = if t.is_zero() {
        (DyadicScalar::ZERO, DyadicSqrt::ZERO)
    } else {
        let t_log2 = t.log2_value().expect("nonzero");
        (
            DyadicScalar::pow2(t_log2 + c_log2 - norm),
            DyadicSqrt::pow2_half(2 * c_log2 + t_log2 - norm),
        )
    };
    if let Some(j) = f.log2_value() {
        debug_assert!(
            (-(n as i32)..=0).contains(&j),
            "overlap out of range: 2^{j}"
        );
    }
    let fu_value = fu.to_f64();
    debug_assert!(fu_value <= 1.0 + 1e-12);
    let bures = 2.0 * (1.0 - fu_value).max(0.0).sqrt();
    Ok(OverlapResult {
        overlap: f,
        uhlmann: fu,
        bures,
    })
}
