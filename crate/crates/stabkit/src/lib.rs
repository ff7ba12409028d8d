//! Polynomial-time normal forms and reductions for pure and mixed
//! stabiliser states.
//!
//! A state on N qubits is represented by a stabiliser array: K generator
//! rows of Pauli elements plus a vector of ±1 phases. The crate provides
//!
//! - the exact Pauli/phase algebra and the elementary truth-table gate
//!   actions ([`pauli`]);
//! - the array type, validation, elementary row/column operations, and the
//!   `stab v1` text format ([`mod@array`]);
//! - row-reduced echelon form, rank, independence filtering, and partial
//!   trace ([`reduce`]);
//! - the single-party Clifford normal form with recorded circuits
//!   ([`cnf`]);
//! - exact overlap, Uhlmann fidelity, and Bures distance between two
//!   states ([`mod@overlap`]);
//! - the bipartite normal form with EPR-pair counting and entanglement
//!   evaluation ([`bipartite`]);
//! - a dense-matrix oracle used to cross-check all of the above at small
//!   qubit counts ([`oracle`]);
//! - seeded random instance generation ([`random`]).
//!
//! # Quick start
//!
//! ```
//! use stabkit::{cnfp, overlap, rank, QubitPartition, StabiliserArray};
//!
//! let bell = StabiliserArray::parse_stab("# stab v1  N=2 K=2\n+ XX\n+ ZZ\n")?;
//! bell.validate()?;
//! assert_eq!(rank(&bell), 2);
//! assert_eq!(bell.entropy(), 0);
//!
//! // one maximally entangled pair across the 1|1 cut
//! let cut = QubitPartition::new(2, vec![0])?;
//! assert_eq!(cnfp(&bell, &cut)?.p, 1);
//!
//! // overlap with itself: F = 1 exactly
//! let same = overlap(&bell, &bell)?;
//! assert!(same.overlap.is_one());
//! assert_eq!(same.bures, 0.0);
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

pub mod array;
pub mod bipartite;
pub mod circuit;
pub mod cnf;
pub mod oracle;
pub mod overlap;
pub mod pauli;
pub mod random;
pub mod reduce;
mod work;

pub use array::{ArrayError, ParseError, QubitPartition, StabiliserArray, ValidationError};
pub use bipartite::{cnfp, entanglement, full_normal_form, BipartiteReport, EntanglementMeasure};
pub use circuit::TableauOp;
pub use cnf::{cnf1, negative_phase_normalize, CnfResult};
pub use overlap::{joint_cnf, overlap, CompositeArray, DyadicScalar, DyadicSqrt, OverlapResult};
pub use pauli::{
    apply_cnot, apply_single_qubit, commutes, pauli_mul, PauliElement, Phase, SingleQubitOp,
};
pub use random::random_array;
pub use reduce::{drop_dependent, ptrace, rank, rref, ReduceError, RrefResult};
