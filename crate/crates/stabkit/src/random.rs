//! Seeded random instance generation for tests, fuzzing and benchmarks.
//!
//! Arrays are grown from the trivial normal form by a seeded stream of
//! rank-preserving operations, so `random_array(n, k, seed)` always has
//! exactly rank k, always validates, and is byte-identical across runs
//! with the same seed.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::array::StabiliserArray;
use crate::pauli::{PauliElement, Phase, SingleQubitOp};
use crate::work::Work;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RandomError {
    #[error("rank k = {k} cannot exceed the qubit count n = {n}")]
    RankTooLarge { k: usize, n: usize },
    #[error("an array must have at least one qubit")]
    NoQubits,
}

/// Deterministic pseudo-random valid stabiliser array with exactly rank k
/// on n qubits: the k-leader normal form scrambled by seeded row
/// multiplications, row swaps, single-qubit ops and CNOTs.
pub fn random_array(n: usize, k: usize, seed: u64) -> Result<StabiliserArray, RandomError> {
    if n == 0 {
        return Err(RandomError::NoQubits);
    }
    if k > n {
        return Err(RandomError::RankTooLarge { k, n });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let base = StabiliserArray::from_rows(
        n,
        (0..k).map(|i| {
            let mut row = vec![PauliElement::I; n];
            row[i] = PauliElement::X;
            (row, Phase::PLUS_ONE)
        }),
    )
    .expect("shape is well-formed");
    if k == 0 && n < 2 {
        return Ok(base);
    }
    let mut w = Work::from_array(&base);
    let ops = 8 * n + 4 * k + 16;
    for _ in 0..ops {
        match rng.random_range(0..4u8) {
            0 if k >= 2 => {
                let src = rng.random_range(0..k);
                let mut dst = rng.random_range(0..k - 1);
                if dst >= src {
                    dst += 1;
                }
                w.row_mul(src, dst);
            }
            1 if k >= 2 => {
                let a = rng.random_range(0..k);
                let b = rng.random_range(0..k);
                w.row_swap(a, b);
            }
            2 => {
                let col = rng.random_range(0..n);
                let op = SingleQubitOp::TABLE[rng.random_range(1..6usize)];
                w.apply_single(col, op);
            }
            3 if n >= 2 => {
                let control = rng.random_range(0..n);
                let mut target = rng.random_range(0..n - 1);
                if target >= control {
                    target += 1;
                }
                w.apply_cnot(control, target);
            }
            _ => {}
        }
    }
    Ok(w.into_array())
}

/// Like [`random_array`] but with `extra` redundant rows mixed in: each is
/// a product of a random nonempty subset of the independent generators, so
/// the rank stays k while K = k + extra.
pub fn random_array_with_dependents(
    n: usize,
    k: usize,
    extra: usize,
    seed: u64,
) -> Result<StabiliserArray, RandomError> {
    let base = random_array(n, k, seed)?;
    if k == 0 || extra == 0 {
        return Ok(base);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let mut w = Work::from_array(&base);
    for _ in 0..extra {
        // append an identity row, then fold a random nonempty subset in
        w.rows.push(vec![PauliElement::I; n]);
        w.phases.push(Phase::PLUS_ONE);
        let dst = w.num_rows() - 1;
        let mask = rng.random_range(1..(1u64 << k.min(63)));
        for src in 0..k {
            if mask >> src & 1 == 1 {
                w.row_mul(src, dst);
            }
        }
    }
    // shuffle row order without disturbing determinism
    for i in (1..w.num_rows()).rev() {
        let j = rng.random_range(0..=i);
        w.row_swap(i, j);
    }
    Ok(w.into_array())
}

/// A random bipartition of n qubits with both parties nonempty.
pub fn random_partition(n: usize, seed: u64) -> crate::array::QubitPartition {
    assert!(n >= 2, "a bipartition needs at least two qubits");
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0xd134_2543_de82_ef95));
    loop {
        let party_a: Vec<usize> = (0..n).filter(|_| rng.random_bool(0.5)).collect();
        if !party_a.is_empty() && party_a.len() < n {
            return crate::array::QubitPartition::new(n, party_a).expect("proper subset");
        }
    }
}
