//! Bipartite normal form and EPR-pair counting.
//!
//! Restricted to local operations, any stabiliser array reduces to a stack
//! of XZ row pairs (one maximally entangled pair each, one qubit per
//! party) on top of a block containing only I and X (a separable state).
//! The pair count p is the state's entanglement in ebits; any normalized
//! additive measure evaluates to p.

use std::fmt;

use thiserror::Error;

use crate::array::{QubitPartition, StabiliserArray, ValidationError};
use crate::circuit::TableauOp;
use crate::cnf::cnf_reduce;
use crate::pauli::{PauliElement, SingleQubitOp};
use crate::reduce;
use crate::work::Work;

/// Normalized additive entanglement measures; each evaluates to exactly
/// one ebit on a maximally entangled pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EntanglementMeasure {
    /// Entropy of entanglement (meaningful for pure inputs).
    EntropyOfEntanglement,
    /// Distillable entanglement.
    Distillable,
    /// Logarithmic negativity.
    LogNegativity,
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("unknown entanglement measure `{0}` (expected logneg, entropy or distillable)")]
pub struct UnknownMeasure(pub String);

impl std::str::FromStr for EntanglementMeasure {
    type Err = UnknownMeasure;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "entropy" => Ok(Self::EntropyOfEntanglement),
            "distillable" => Ok(Self::Distillable),
            "logneg" => Ok(Self::LogNegativity),
            other => Err(UnknownMeasure(other.to_string())),
        }
    }
}

impl fmt::Display for EntanglementMeasure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Self::EntropyOfEntanglement => "entropy",
            Self::Distillable => "distillable",
            Self::LogNegativity => "logneg",
        };
        f.write_str(name)
    }
}

/// Result of the bipartite reduction.
///
/// Qubits are reported in a permuted frame: positions `0..n_a` hold party
/// A (pair columns first), positions `n_a..n` party B;
/// `qubit_order[position]` is the original qubit index. The recorded
/// circuits are strictly local to their party in this frame.
#[derive(Clone, Debug)]
pub struct BipartiteReport {
    /// Number of maximally entangled pairs across the cut.
    pub p: usize,
    pub n_a: usize,
    pub n_b: usize,
    /// Rank of the input array.
    pub k: usize,
    /// min(floor(K/2), N_A, N_B); p never exceeds it.
    pub bound: usize,
    pub qubit_order: Vec<usize>,
    pub circuit_a: Vec<TableauOp>,
    pub circuit_b: Vec<TableauOp>,
    /// The fully reduced two-party normal form, when requested.
    pub normal_form: Option<StabiliserArray>,
}

/// Entanglement p·E of the reported state under a normalized additive
/// measure (E = 1 ebit per pair for all supported measures).
pub fn entanglement(report: &BipartiteReport, measure: EntanglementMeasure) -> f64 {
    let _ = measure;
    report.p as f64
}

/// Counts the EPR pairs across the cut by normal-forming party A only.
pub fn cnfp(
    a: &StabiliserArray,
    partition: &QubitPartition,
) -> Result<BipartiteReport, ValidationError> {
    run(a, partition, false)
}

/// Full two-party normal form: party A reduction, then party B completion
/// and the final separable block, with `normal_form` populated.
pub fn full_normal_form(
    a: &StabiliserArray,
    partition: &QubitPartition,
) -> Result<BipartiteReport, ValidationError> {
    run(a, partition, true)
}

#[derive(Clone, Copy, Debug)]
enum Unit {
    /// A completed single-X row: entangles nothing across the cut.
    Single { row: usize, col: usize },
    /// A completed XZ row pair: one EPR pair.
    Pair { row_x: usize, col: usize },
}

fn run(
    a: &StabiliserArray,
    partition: &QubitPartition,
    complete_b: bool,
) -> Result<BipartiteReport, ValidationError> {
    assert_eq!(
        partition.n_qubits(),
        a.n_qubits(),
        "partition and array qubit counts differ"
    );
    a.validate()?;
    let a = reduce::drop_dependent(a).expect("validated input cannot be contradictory");
    let k = a.num_rows();
    let n = a.n_qubits();
    let n_a = partition.party_a().len();
    let n_b = partition.party_b().len();

    // Group party A's columns in front; pure bookkeeping, carried in the
    // returned qubit_order.
    let order: Vec<usize> = partition
        .party_a()
        .iter()
        .chain(partition.party_b())
        .copied()
        .collect();
    let mut w = Work::from_array_with_column_order(&a, &order);

    let units = cnfp_loop(&mut w, k, n_a);
    reorder_units(&mut w, &units, n_a, k);
    let p = units
        .iter()
        .filter(|u| matches!(u, Unit::Pair { .. }))
        .count();

    if complete_b {
        for pair in 0..p {
            complete_pair_on_b(&mut w, pair, n_a, n);
        }
        // The leftover rows commute on party B's remaining columns and
        // carry only I/X on party A, so a plain reduction finishes the
        // separable block.
        if n_a + p < n {
            cnf_reduce(&mut w, (2 * p)..k, (n_a + p)..n);
        }
        debug_assert!(normal_form_shape_ok(&w, p, n_a, k));
    }

    let bound = (k / 2).min(n_a).min(n_b);
    assert!(p <= bound, "pair count {p} exceeds the bound {bound}");
    if p == k / 2 && p == n_a && p == n_b {
        assert!(k == 2 * n_a && k == 2 * n_b);
    }

    let (circuit_a, circuit_b) = split_circuits(&w.log, n_a);
    Ok(BipartiteReport {
        p,
        n_a,
        n_b,
        k,
        bound,
        qubit_order: w.col_perm.clone(),
        circuit_a,
        circuit_b,
        normal_form: complete_b.then(|| w.into_array()),
    })
}

/// Party-A reduction: the single-party loop with two modifications. A
/// completed column only leaves the active region if no residues were
/// pushed back into it, and a missing anticommuting partner on A splits
/// the leading XZ pair off as one EPR pair.
fn cnfp_loop(w: &mut Work, k: usize, n_a: usize) -> Vec<Unit> {
    let mut units = Vec::new();
    let mut ku = 0usize;
    let mut nl = 0usize;
    let mut nr = n_a;
    while nl < nr && ku < k {
        let first = (ku..k).find(|&m| !w.elem(m, nl).is_identity());
        let Some(k1) = first else {
            w.col_swap(nl, nr - 1);
            nr -= 1;
            continue;
        };
        let sigma1 = w.elem(k1, nl);
        let second = ((k1 + 1)..k).find(|&m| {
            let e = w.elem(m, nl);
            !e.is_identity() && e != sigma1
        });
        match second {
            None => {
                w.row_swap(k1, ku);
                let sigma = w.elem(ku, nl);
                if sigma != PauliElement::X {
                    w.apply_single(nl, SingleQubitOp::taking(sigma, PauliElement::X));
                }
                for m in (ku + 1)..k {
                    if w.elem(m, nl) == PauliElement::X {
                        w.row_mul(ku, m);
                    }
                }
                for c in (nl + 1)..nr {
                    let e = w.elem(ku, c);
                    if !e.is_identity() && e != PauliElement::X {
                        w.apply_single(c, SingleQubitOp::taking(e, PauliElement::X));
                    }
                }
                for c in (nl + 1)..nr {
                    if w.elem(ku, c) == PauliElement::X {
                        w.apply_cnot(nl, c);
                    }
                }
                // Generators need not commute on party A alone, so the
                // CNOTs may have pushed Z residues back into this column;
                // if so the region stays and the next pass handles them.
                let clean = ((ku + 1)..k).all(|m| w.elem(m, nl).is_identity());
                if clean {
                    units.push(Unit::Single { row: ku, col: nl });
                    ku += 1;
                    nl += 1;
                } else {
                    debug_assert!(((ku + 1)..k)
                        .all(|m| matches!(w.elem(m, nl), PauliElement::I | PauliElement::Z)));
                }
            }
            Some(k2) => {
                w.row_swap(k1, ku);
                w.row_swap(k2, ku + 1);
                let pair = (w.elem(ku, nl), w.elem(ku + 1, nl));
                if pair != (PauliElement::X, PauliElement::Z) {
                    w.apply_single(
                        nl,
                        SingleQubitOp::taking_pair(pair, (PauliElement::X, PauliElement::Z)),
                    );
                }
                let partner = ((nl + 1)..nr).find(|&c| {
                    let a = w.elem(ku, c);
                    let b = w.elem(ku + 1, c);
                    !a.is_identity() && !b.is_identity() && a != b
                });
                if let Some(l) = partner {
                    let pair_l = (w.elem(ku, l), w.elem(ku + 1, l));
                    if pair_l != (PauliElement::X, PauliElement::Y) {
                        w.apply_single(
                            l,
                            SingleQubitOp::taking_pair(pair_l, (PauliElement::X, PauliElement::Y)),
                        );
                    }
                    w.apply_cnot(nl, l);
                } else {
                    // No partner inside party A: the pair is entangled
                    // with party B. Clean its rows and column, split it off.
                    for c in (nl + 1)..nr {
                        clean_pair_rows_column(w, ku, nl, c);
                    }
                    for m in (ku + 2)..k {
                        clean_below_pair(w, ku, nl, m);
                    }
                    units.push(Unit::Pair { row_x: ku, col: nl });
                    ku += 2;
                    nl += 1;
                }
            }
        }
    }
    units
}

/// Eliminates whatever the two pair rows (X and Z leaders in column `nl`)
/// carry in column `c`. Only commuting patterns can occur here; the
/// direction of each CNOT decides which of the two rows it affects, and
/// the `(I, σ)` case needs the leading column as the *target*.
fn clean_pair_rows_column(w: &mut Work, ku: usize, nl: usize, c: usize) {
    let e1 = w.elem(ku, c);
    let e2 = w.elem(ku + 1, c);
    match (e1.is_identity(), e2.is_identity()) {
        (true, true) => {}
        (true, false) => {
            if e2 != PauliElement::Z {
                w.apply_single(c, SingleQubitOp::taking(e2, PauliElement::Z));
            }
            w.apply_cnot(c, nl);
        }
        (false, true) => {
            if e1 != PauliElement::X {
                w.apply_single(c, SingleQubitOp::taking(e1, PauliElement::X));
            }
            w.apply_cnot(nl, c);
        }
        (false, false) => {
            assert_eq!(
                e1, e2,
                "anticommuting pair in column {c}: the partner search missed it"
            );
            if e1 != PauliElement::Z {
                w.apply_single(c, SingleQubitOp::taking(e1, PauliElement::Z));
            }
            w.apply_cnot(c, nl);
            debug_assert_eq!(w.elem(ku, c), PauliElement::Z);
            debug_assert!(w.elem(ku + 1, c).is_identity());
            w.apply_single(c, &SingleQubitOp::HADAMARD);
            w.apply_cnot(nl, c);
        }
    }
    debug_assert!(w.elem(ku, c).is_identity() && w.elem(ku + 1, c).is_identity());
}

/// Eliminates a Pauli below an XZ pair in its leading column by row
/// multiplications with the X row, the Z row, or both.
fn clean_below_pair(w: &mut Work, ku: usize, nl: usize, m: usize) {
    match w.elem(m, nl) {
        PauliElement::I => {}
        PauliElement::X => w.row_mul(ku, m),
        PauliElement::Y => {
            w.row_mul(ku, m);
            w.row_mul(ku + 1, m);
        }
        PauliElement::Z => w.row_mul(ku + 1, m),
    }
    debug_assert!(w.elem(m, nl).is_identity());
}

/// Moves pair units to the leading rows and columns (X row, Z row, pair
/// column i), singles after them, leftovers last. Row moves are free; the
/// column moves are recorded local swaps.
fn reorder_units(w: &mut Work, units: &[Unit], n_a: usize, k: usize) {
    let mut desired_rows: Vec<usize> = Vec::with_capacity(k);
    let mut desired_cols: Vec<usize> = Vec::new();
    for unit in units {
        if let Unit::Pair { row_x, col } = *unit {
            desired_rows.push(row_x);
            desired_rows.push(row_x + 1);
            desired_cols.push(col);
        }
    }
    for unit in units {
        if let Unit::Single { row, col } = *unit {
            desired_rows.push(row);
            desired_cols.push(col);
        }
    }
    let leftover_rows: Vec<usize> = (0..k).filter(|r| !desired_rows.contains(r)).collect();
    desired_rows.extend(leftover_rows);
    apply_row_order(w, &desired_rows);

    let leftover_cols: Vec<usize> = (0..n_a).filter(|c| !desired_cols.contains(c)).collect();
    desired_cols.extend(leftover_cols);
    debug_assert_eq!(desired_cols.len(), n_a);
    apply_col_order(w, &desired_cols);
}

/// Applies a row permutation (`order[target] = current index`) by swaps.
fn apply_row_order(w: &mut Work, order: &[usize]) {
    // position[i] = where the row originally at index i currently lives
    let mut position: Vec<usize> = (0..order.len()).collect();
    let mut occupant: Vec<usize> = (0..order.len()).collect();
    for (target, &wanted) in order.iter().enumerate() {
        let from = position[wanted];
        if from != target {
            w.row_swap(target, from);
            let displaced = occupant[target];
            occupant.swap(target, from);
            position[wanted] = target;
            position[displaced] = from;
        }
    }
}

/// Applies a column permutation over the leading `order.len()` columns.
fn apply_col_order(w: &mut Work, order: &[usize]) {
    let mut position: Vec<usize> = (0..order.len()).collect();
    let mut occupant: Vec<usize> = (0..order.len()).collect();
    for (target, &wanted) in order.iter().enumerate() {
        let from = position[wanted];
        if from != target {
            w.col_swap(target, from);
            let displaced = occupant[target];
            occupant.swap(target, from);
            position[wanted] = target;
            position[displaced] = from;
        }
    }
}

/// Completes pair `pair` (rows 2·pair and 2·pair+1) on party B: finds the
/// anticommuting partner column, moves it to slot n_a+pair, standardizes
/// it to XZ, and clears everything else the two rows carry on B.
fn complete_pair_on_b(w: &mut Work, pair: usize, n_a: usize, n: usize) {
    let rx = 2 * pair;
    let rz = rx + 1;
    let slot = n_a + pair;
    debug_assert!(
        (n_a..slot).all(|c| { w.elem(rx, c).is_identity() && w.elem(rz, c).is_identity() })
    );
    let partner = (slot..n)
        .find(|&c| {
            let a = w.elem(rx, c);
            let b = w.elem(rz, c);
            !a.is_identity() && !b.is_identity() && a != b
        })
        .expect("commuting generators leave an anticommuting partner on party B");
    w.col_swap(slot, partner);
    let pair_elems = (w.elem(rx, slot), w.elem(rz, slot));
    if pair_elems != (PauliElement::X, PauliElement::Z) {
        w.apply_single(
            slot,
            SingleQubitOp::taking_pair(pair_elems, (PauliElement::X, PauliElement::Z)),
        );
    }
    // Clear the X row's tail with CNOTs from the slot.
    for c in (slot + 1)..n {
        let e = w.elem(rx, c);
        if e.is_identity() {
            continue;
        }
        if e != PauliElement::X {
            w.apply_single(c, SingleQubitOp::taking(e, PauliElement::X));
        }
        w.apply_cnot(slot, c);
    }
    debug_assert_eq!(w.elem(rx, slot), PauliElement::X);
    // The Z row still anticommutes with the X row exactly at the slot;
    // clear its tail with CNOTs *into* the slot, which leave the X row
    // untouched because it is identity on those columns.
    for c in (slot + 1)..n {
        let e = w.elem(rz, c);
        if e.is_identity() {
            continue;
        }
        if e != PauliElement::Z {
            w.apply_single(c, SingleQubitOp::taking(e, PauliElement::Z));
        }
        w.apply_cnot(c, slot);
    }
    let leftover = w.elem(rz, slot);
    if leftover == PauliElement::Y {
        w.apply_single(
            slot,
            SingleQubitOp::taking_pair(
                (PauliElement::X, PauliElement::Y),
                (PauliElement::X, PauliElement::Z),
            ),
        );
    }
    debug_assert_eq!(w.elem(rx, slot), PauliElement::X);
    debug_assert_eq!(w.elem(rz, slot), PauliElement::Z);
    // Commutation with the finished pair forces identity on the slot for
    // every other row.
    debug_assert!((0..w.num_rows())
        .filter(|&m| m != rx && m != rz)
        .all(|m| w.elem(m, slot).is_identity()));
}

fn normal_form_shape_ok(w: &Work, p: usize, n_a: usize, k: usize) -> bool {
    let n = w.n;
    for pair in 0..p {
        let (rx, rz) = (2 * pair, 2 * pair + 1);
        for c in 0..n {
            let want_x = if c == pair || c == n_a + pair {
                PauliElement::X
            } else {
                PauliElement::I
            };
            let want_z = if c == pair || c == n_a + pair {
                PauliElement::Z
            } else {
                PauliElement::I
            };
            if w.elem(rx, c) != want_x || w.elem(rz, c) != want_z {
                return false;
            }
        }
    }
    for m in (2 * p)..k {
        for c in 0..n {
            let e = w.elem(m, c);
            let in_pair_cols = c < p || (n_a..n_a + p).contains(&c);
            if in_pair_cols && !e.is_identity() {
                return false;
            }
            if e != PauliElement::I && e != PauliElement::X {
                return false;
            }
        }
    }
    true
}

fn split_circuits(log: &[TableauOp], n_a: usize) -> (Vec<TableauOp>, Vec<TableauOp>) {
    let mut a = Vec::new();
    let mut b = Vec::new();
    for &op in log {
        let Some((c1, c2)) = op.columns() else {
            continue; // row operations do not change the state
        };
        let party_a = c1 < n_a;
        if let Some(c2) = c2 {
            assert_eq!(party_a, c2 < n_a, "cross-party operation recorded: {op}");
        }
        if party_a {
            a.push(op);
        } else {
            b.push(op);
        }
    }
    (a, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;
    use crate::pauli::Phase;

    const P: Phase = Phase::PLUS_ONE;
    const M: Phase = Phase::MINUS_ONE;

    fn arr(n: usize, rows: &[(&str, Phase)]) -> StabiliserArray {
        StabiliserArray::from_letters(n, rows.iter().copied()).unwrap()
    }

    fn part(n: usize, a: &[usize]) -> QubitPartition {
        QubitPartition::new(n, a.to_vec()).unwrap()
    }

    /// dense(normal form) must equal (U_b U_a) dense(grouped input) (·)†.
    fn assert_local_equivalence(
        input: &StabiliserArray,
        partition: &QubitPartition,
        report: &BipartiteReport,
    ) {
        let grouped_order: Vec<usize> = partition
            .party_a()
            .iter()
            .chain(partition.party_b())
            .copied()
            .collect();
        let reduced = reduce::drop_dependent(input).unwrap();
        let grouped = StabiliserArray::from_rows(
            reduced.n_qubits(),
            (0..reduced.num_rows()).map(|m| {
                (
                    grouped_order.iter().map(|&q| reduced.row(m)[q]).collect(),
                    reduced.phase(m),
                )
            }),
        )
        .unwrap();
        let mut ops = report.circuit_a.clone();
        ops.extend(report.circuit_b.iter().copied());
        let before = oracle::dense_state(&grouped).unwrap();
        let conj = oracle::conjugate_by_circuit(&before, &ops).unwrap();
        let nf = report.normal_form.as_ref().expect("normal form requested");
        let after = oracle::dense_state(nf).unwrap();
        assert!(
            oracle::max_abs_diff(&conj, &after) < 1e-12,
            "recorded local circuits do not reproduce the normal form"
        );
    }

    #[test]
    fn bell_pair_across_the_cut() {
        let bell = arr(2, &[("XX", P), ("ZZ", P)]);
        let partition = part(2, &[0]);
        let report = full_normal_form(&bell, &partition).unwrap();
        assert_eq!(report.p, 1);
        assert_eq!(report.bound, 1);
        assert_eq!(report.k, 2);
        let nf = report.normal_form.as_ref().unwrap();
        assert_eq!(nf.row(0), arr(2, &[("XX", P)]).row(0));
        assert_eq!(nf.row(1), arr(2, &[("ZZ", P)]).row(0));
        assert_local_equivalence(&bell, &partition, &report);
        assert_eq!(
            entanglement(&report, EntanglementMeasure::LogNegativity),
            1.0
        );
    }

    #[test]
    fn product_state_has_no_pairs() {
        let a = arr(2, &[("ZI", P), ("IZ", P)]);
        let partition = part(2, &[0]);
        let report = cnfp(&a, &partition).unwrap();
        assert_eq!(report.p, 0);
        assert_eq!(
            entanglement(&report, EntanglementMeasure::EntropyOfEntanglement),
            0.0
        );
    }

    #[test]
    fn ghz3_has_one_pair_across_any_cut() {
        let ghz = arr(3, &[("XXX", P), ("ZZI", P), ("IZZ", P)]);
        let partition = part(3, &[0]);
        let report = full_normal_form(&ghz, &partition).unwrap();
        assert_eq!(report.p, 1);
        // two XZ rows plus one bottom row of I/X only
        let nf = report.normal_form.as_ref().unwrap();
        assert_eq!(nf.num_rows(), 3);
        for c in 0..3 {
            let e = nf.element(2, c);
            assert!(e == PauliElement::I || e == PauliElement::X);
        }
        assert_local_equivalence(&ghz, &partition, &report);
        // oracle: entropy of party A's reduction is 1 bit
        let rho = oracle::dense_state(&ghz).unwrap();
        let red = oracle::dense_ptrace(&rho, &[1, 2]);
        assert!((oracle::dense_entropy(&red) - 1.0).abs() < 1e-10);

        let cut23 = part(3, &[1, 2]);
        assert_eq!(cnfp(&ghz, &cut23).unwrap().p, 1);
    }

    #[test]
    fn two_manifest_pairs_reach_the_bound() {
        let a = arr(4, &[("XIXI", P), ("ZIZI", P), ("IXIX", P), ("IZIZ", P)]);
        let partition = part(4, &[0, 1]);
        let report = full_normal_form(&a, &partition).unwrap();
        assert_eq!(report.p, 2);
        assert_eq!(report.bound, 2);
        assert_eq!(report.k, 4);
        assert_eq!(report.k, 2 * report.n_a);
        assert_eq!(report.k, 2 * report.n_b);
        assert_local_equivalence(&a, &partition, &report);
    }

    #[test]
    fn separable_xx_row_stays_in_bottom_block() {
        let a = arr(2, &[("XX", P)]);
        let partition = part(2, &[0]);
        let report = full_normal_form(&a, &partition).unwrap();
        assert_eq!(report.p, 0);
        let nf = report.normal_form.as_ref().unwrap();
        assert_eq!(nf.num_rows(), 1);
        for c in 0..2 {
            let e = nf.element(0, c);
            assert!(e == PauliElement::I || e == PauliElement::X);
        }
        assert_local_equivalence(&a, &partition, &report);
    }

    #[test]
    fn reversed_cnot_direction_is_emitted_for_i_sigma_columns() {
        // Party A = {0, 1}. After the leading column forms its XZ pair,
        // column 1 holds (I, Z) on the pair rows, which must be cleaned by
        // a CNOT with the *pair column as target*.
        let a = arr(4, &[("XIXI", P), ("ZZYI", P), ("IIIZ", P)]);
        a.validate().unwrap();
        let partition = part(4, &[0, 1]);
        let report = full_normal_form(&a, &partition).unwrap();
        assert!(
            report.circuit_a.iter().any(|op| matches!(
                op,
                TableauOp::Cnot {
                    control: 1,
                    target: 0
                }
            )),
            "expected a CNOT targeting the pair column, got {:?}",
            report.circuit_a
        );
        assert_local_equivalence(&a, &partition, &report);
    }

    #[test]
    fn residual_z_in_a_completed_column_becomes_a_pair() {
        // Party A = {0, 1}. Column 0 first completes as a single-X column,
        // but the row cleanup's CNOT pushes a Z back into it (the rows only
        // commute jointly with party B), so the region must stay put; the
        // next pass splits the column off as an XZ pair instead.
        let a = arr(3, &[("XXX", P), ("IYZ", P)]);
        a.validate().unwrap();
        let partition = part(3, &[0, 1]);
        let report = full_normal_form(&a, &partition).unwrap();
        assert_eq!(report.p, 1);
        let rho = oracle::dense_state(&a).unwrap();
        let logneg = oracle::dense_logneg(&rho, &partition);
        assert!((1.0 - logneg).abs() < 1e-9);
        assert_local_equivalence(&a, &partition, &report);
    }

    #[test]
    fn pair_count_matches_oracle_log_negativity() {
        let scrambled = arr(4, &[("XIII", P), ("IXII", P), ("IIXI", P)])
            .apply_cnot_columns(0, 3)
            .unwrap()
            .apply_column_op(1, &SingleQubitOp::PH)
            .unwrap()
            .apply_cnot_columns(2, 1)
            .unwrap()
            .apply_column_op(3, &SingleQubitOp::HADAMARD)
            .unwrap()
            .apply_cnot_columns(3, 0)
            .unwrap();
        let cases: Vec<(StabiliserArray, QubitPartition)> = vec![
            (arr(2, &[("XX", P), ("ZZ", M)]), part(2, &[0])),
            (arr(3, &[("XXX", P), ("ZZI", P), ("IZZ", P)]), part(3, &[1])),
            (arr(3, &[("XXI", P), ("ZZI", P)]), part(3, &[2])),
            (scrambled, part(4, &[0, 3])),
        ];
        for (a, partition) in cases {
            a.validate().unwrap();
            let report = cnfp(&a, &partition).unwrap();
            let reduced = reduce::drop_dependent(&a).unwrap();
            let rho = oracle::dense_state(&reduced).unwrap();
            let logneg = oracle::dense_logneg(&rho, &partition);
            assert!(
                (report.p as f64 - logneg).abs() < 1e-9,
                "p = {} but log-negativity = {} for\n{}",
                report.p,
                logneg,
                a
            );
        }
    }

    #[test]
    fn local_rotations_leave_p_invariant() {
        let ghz = arr(3, &[("XXX", P), ("ZZI", P), ("IZZ", P)]);
        let partition = part(3, &[0, 2]);
        let base = cnfp(&ghz, &partition).unwrap().p;
        let mut a = ghz;
        for (col, op) in [
            (0usize, &SingleQubitOp::PH),
            (2, &SingleQubitOp::HADAMARD),
            (1, &SingleQubitOp::PHPD),
        ] {
            a = a.apply_column_op(col, op).unwrap();
            assert_eq!(cnfp(&a, &partition).unwrap().p, base);
        }
        // a CNOT inside party A is local too
        let rotated = a.apply_cnot_columns(0, 2).unwrap();
        assert_eq!(cnfp(&rotated, &partition).unwrap().p, base);
    }

    #[test]
    fn measure_parsing() {
        use std::str::FromStr;
        assert_eq!(
            EntanglementMeasure::from_str("logneg").unwrap(),
            EntanglementMeasure::LogNegativity
        );
        assert_eq!(
            EntanglementMeasure::from_str("entropy").unwrap(),
            EntanglementMeasure::EntropyOfEntanglement
        );
        assert_eq!(
            EntanglementMeasure::from_str("distillable").unwrap(),
            EntanglementMeasure::Distillable
        );
        assert!(EntanglementMeasure::from_str("negativity").is_err());
    }
}
