//! Full single-party normal form: row and column operations reduce any
//! stabiliser array to a block of leading single-X rows followed by
//! all-identity rows, with the applied circuit recorded.

use crate::array::StabiliserArray;
use crate::circuit::TableauOp;
use crate::pauli::{PauliElement, Phase, SingleQubitOp};
use crate::work::Work;

/// A normal-formed array plus everything needed to reproduce it: the rank
/// `r`, the full operation log in application order, and the net column
/// relabeling (`column_permutation[position] = original qubit`).
#[derive(Clone, Debug)]
pub struct CnfResult {
    pub array: StabiliserArray,
    pub r: usize,
    pub ops: Vec<TableauOp>,
    pub column_permutation: Vec<usize>,
}

/// Core reduction loop shared by the single-party, composite, and
/// bipartite drivers.
///
/// Leader rows are chosen in `rows` and row operations stay inside it;
/// column operations act on the whole tableau (rows outside the range ride
/// along). Columns are consumed from `cols.start`, with all-identity
/// columns swapped to the right edge. Returns the number of leader rows
/// produced.
pub(crate) fn cnf_reduce(
    w: &mut Work,
    rows: std::ops::Range<usize>,
    cols: std::ops::Range<usize>,
) -> usize {
    let (row_start, row_end) = (rows.start, rows.end);
    let mut ku = row_start;
    let mut nl = cols.start;
    let mut nr = cols.end;
    while nl < nr && ku < row_end {
        let first = (ku..row_end).find(|&m| !w.elem(m, nl).is_identity());
        let Some(k1) = first else {
            // (a) the column is all identity: move it out of the region
            w.col_swap(nl, nr - 1);
            nr -= 1;
            continue;
        };
        let sigma1 = w.elem(k1, nl);
        let second = ((k1 + 1)..row_end).find(|&m| {
            let e = w.elem(m, nl);
            !e.is_identity() && e != sigma1
        });
        match second {
            None => {
                // (b) one kind of Pauli in the column
                w.row_swap(k1, ku);
                let sigma = w.elem(ku, nl);
                if sigma != PauliElement::X {
                    w.apply_single(nl, SingleQubitOp::taking(sigma, PauliElement::X));
                }
                for m in (ku + 1)..row_end {
                    if w.elem(m, nl) == PauliElement::X {
                        w.row_mul(ku, m);
                    }
                }
                // bring the rest of the top row to X, then cancel by CNOTs
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
                // Commutativity of the generators guarantees the CNOTs did
                // not reintroduce anything below the leader.
                assert!(
                    ((ku + 1)..row_end).all(|m| w.elem(m, nl).is_identity()),
                    "column {nl} not clean after row cleanup: non-commuting rows?"
                );
                ku += 1;
                nl += 1;
            }
            Some(k2) => {
                // (c) two kinds: standardize the leading pair to (X, Z) and
                // shrink their overlap by one CNOT; the region is unchanged
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
                let l = partner.expect("commuting generators must anticommute in a second column");
                let pair_l = (w.elem(ku, l), w.elem(ku + 1, l));
                if pair_l != (PauliElement::X, PauliElement::Y) {
                    w.apply_single(
                        l,
                        SingleQubitOp::taking_pair(pair_l, (PauliElement::X, PauliElement::Y)),
                    );
                }
                w.apply_cnot(nl, l);
            }
        }
    }
    ku - row_start
}

/// Reduces a validated array to its normal form: rank-many rows with a
/// single leading X each (row k leads in column k), all-identity rows at
/// the bottom, and the full circuit recorded.
pub fn cnf1(a: &StabiliserArray) -> CnfResult {
    let mut w = Work::from_array(a);
    let k = w.num_rows();
    let n = w.n;
    let r = cnf_reduce(&mut w, 0..k, 0..n);
    for m in 0..k {
        if m < r {
            debug_assert_eq!(w.elem(m, m), PauliElement::X);
            debug_assert!(w.phases[m].is_real());
        } else {
            debug_assert!(w.is_row_identity_in(m, 0..n));
            assert_eq!(
                w.phases[m],
                Phase::PLUS_ONE,
                "dependent row reduced to -identity: inconsistent generators"
            );
        }
    }
    let column_permutation = w.col_perm.clone();
    let ops = std::mem::take(&mut w.log);
    CnfResult {
        array: w.into_array(),
        r,
        ops,
        column_permutation,
    }
}

/// Maps any -X leading rows of a normal form to +X by a further
/// single-qubit op per affected column, extending the circuit. The leading
/// block of the result carries only +1 phases.
pub fn negative_phase_normalize(res: CnfResult) -> CnfResult {
    let mut w = Work::from_array(&res.array);
    for i in 0..res.r {
        if w.phases[i] == Phase::MINUS_ONE {
            // PHPd sends X to -X and leaves every other row's identity in
            // this column untouched.
            w.apply_single(i, &SingleQubitOp::PHPD);
        }
    }
    debug_assert!((0..res.r).all(|i| w.phases[i] == Phase::PLUS_ONE));
    let mut ops = res.ops;
    ops.append(&mut w.log);
    CnfResult {
        array: w.into_array(),
        r: res.r,
        ops,
        column_permutation: res.column_permutation,
    }
}
