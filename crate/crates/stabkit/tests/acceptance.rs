//! Acceptance suite: one test per release criterion, each printing a
//! PASS line with the scale and tolerance it ran at. Everything is checked
//! against the dense oracle at desk scale; the scaling criterion runs the
//! tableau algorithms at a few hundred qubits.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use stabkit::array::{QubitPartition, StabiliserArray};
use stabkit::bipartite::{cnfp, full_normal_form};
use stabkit::cnf::cnf1;
use stabkit::oracle;
use stabkit::overlap::overlap;
use stabkit::pauli::{
    apply_cnot, apply_single_qubit, pauli_mul, PauliElement, Phase, SingleQubitOp,
};
use stabkit::random::{random_array, random_array_with_dependents, random_partition};
use stabkit::reduce::{drop_dependent, ptrace, rank, rref};

const ALL_PAULIS: [PauliElement; 4] = [
    PauliElement::I,
    PauliElement::X,
    PauliElement::Y,
    PauliElement::Z,
];

fn p(letter: char) -> PauliElement {
    PauliElement::from_letter(letter).unwrap()
}

fn arr(n: usize, rows: &[(&str, Phase)]) -> StabiliserArray {
    StabiliserArray::from_letters(n, rows.iter().copied()).unwrap()
}

fn dense(a: &StabiliserArray) -> oracle::DenseState {
    oracle::dense_state(&drop_dependent(a).unwrap()).unwrap()
}

/// Scrambles the generator set by row operations only; the state is
/// untouched.
fn row_scramble(a: &StabiliserArray, seed: u64) -> StabiliserArray {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = a.num_rows();
    let mut out = a.clone();
    if k < 2 {
        return out;
    }
    for _ in 0..3 * k {
        if rng.random_bool(0.5) {
            let src = rng.random_range(0..k);
            let mut dst = rng.random_range(0..k - 1);
            if dst >= src {
                dst += 1;
            }
            out = out.row_multiply(src, dst).unwrap();
        } else {
            out = out
                .row_transpose(rng.random_range(0..k), rng.random_range(0..k))
                .unwrap();
        }
    }
    out
}

#[test]
fn criterion_01_truth_tables_bit_exact_and_unitary_checked() {
    let start = Instant::now();
    // multiplication table, all 16 entries against explicit 2x2 products
    for a in ALL_PAULIS {
        for b in ALL_PAULIS {
            let (ph, e) = pauli_mul(a, b);
            let lhs = oracle::pauli_matrix(a) * oracle::pauli_matrix(b);
            let rhs = oracle::pauli_matrix(e)
                * num_complex::Complex64::new(0.0, 1.0).powu(ph.ipow() as u32);
            assert!((lhs - rhs).iter().all(|c| c.norm() < 1e-12), "{a}·{b}");
        }
    }
    // spot anchors for the tabulated signs
    assert_eq!(pauli_mul(p('X'), p('Y')), (Phase::PLUS_I, p('Z')));
    assert_eq!(pauli_mul(p('Y'), p('X')), (Phase::MINUS_I, p('Z')));

    // all 18 single-qubit images, against U sigma U† with U built from the
    // tabulated H/P words
    for op in SingleQubitOp::TABLE {
        let u = oracle::single_qubit_unitary(op);
        for src in [p('X'), p('Y'), p('Z')] {
            let (ph, img) = apply_single_qubit(op, src);
            let lhs = &u * oracle::pauli_matrix(src) * u.adjoint();
            let rhs = oracle::pauli_matrix(img) * num_complex::Complex64::new(ph.sign(), 0.0);
            assert!(
                (lhs - rhs).iter().all(|c| c.norm() < 1e-12),
                "{} on {src}",
                op.name()
            );
        }
    }
    assert_eq!(
        apply_single_qubit(&SingleQubitOp::HADAMARD, p('X')),
        (Phase::PLUS_ONE, p('Z'))
    );
    assert_eq!(
        apply_single_qubit(&SingleQubitOp::HADAMARD, p('Y')),
        (Phase::MINUS_ONE, p('Y'))
    );

    // all 16 CNOT rows against the 4x4 unitary
    let cnot = oracle::circuit_unitary(
        2,
        &[stabkit::TableauOp::Cnot {
            control: 0,
            target: 1,
        }],
    )
    .unwrap();
    for c in ALL_PAULIS {
        for t in ALL_PAULIS {
            let (ph, c2, t2) = apply_cnot(c, t);
            let lhs = &cnot
                * oracle::kron(&oracle::pauli_matrix(c), &oracle::pauli_matrix(t))
                * cnot.adjoint();
            let rhs = oracle::kron(&oracle::pauli_matrix(c2), &oracle::pauli_matrix(t2))
                * num_complex::Complex64::new(ph.sign(), 0.0);
            assert!(
                (lhs - rhs).iter().all(|x| x.norm() < 1e-12),
                "CNOT ({c},{t})"
            );
        }
    }
    assert_eq!(
        apply_cnot(p('X'), p('Z')),
        (Phase::MINUS_ONE, p('Y'), p('Y'))
    );
    assert_eq!(
        apply_cnot(p('Y'), p('Y')),
        (Phase::MINUS_ONE, p('X'), p('Z'))
    );

    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "took {elapsed:?}");
    println!("PASS criterion 1: 16+18+16 truth-table entries bit-exact, unitary-checked at 1e-12 in {elapsed:?}");
}

#[test]
fn criterion_02_row_reduction_preserves_state_exactly() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x02);
    for case in 0..500u64 {
        let n = 1 + (case as usize % 6);
        let k = rng.random_range(0..=n);
        let extra = rng.random_range(0..=2usize.min(k));
        let a = random_array_with_dependents(n, k, extra, 7000 + case).unwrap();
        let before = oracle::dense_projector(&a).unwrap();
        let res = rref(&a);
        let after = oracle::dense_projector(&res.array).unwrap();
        let diff = (&before - &after)
            .iter()
            .map(|c| c.norm())
            .fold(0.0, f64::max);
        assert_eq!(diff, 0.0, "case {case}: projectors differ by {diff}");
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 30.0, "took {elapsed:?}");
    println!("PASS criterion 2: 500 random arrays (N ≤ 6), row reduction preserved the dense state exactly in {elapsed:?}");
}

#[test]
fn criterion_03_projector_trace_is_two_to_n_minus_rank() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x03);
    for case in 0..500u64 {
        let n = if case < 494 {
            1 + (case as usize % 6)
        } else {
            7 + (case as usize % 2)
        };
        let k = rng.random_range(0..=n);
        let extra = rng.random_range(0..=2usize.min(k));
        let a = random_array_with_dependents(n, k, extra, 11_000 + case).unwrap();
        let trace = oracle::dense_projector(&a).unwrap().trace().re;
        let expect = 2f64.powi(n as i32 - rank(&a) as i32);
        assert_eq!(trace, expect, "case {case}: N={n} K={}", a.num_rows());
        assert_eq!(a.entropy(), n - rank(&a));
    }
    println!("PASS criterion 3: 500 random arrays, projector trace = 2^(N-rank) exactly");
}

#[test]
fn criterion_04_partial_trace_matches_dense_partial_trace() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x04);
    let mut leader_cases = [false; 3];
    for case in 0..500u64 {
        let n = if case < 490 {
            2 + (case as usize % 5)
        } else {
            7 + (case as usize % 2)
        };
        let k = rng.random_range(0..=n);
        let a = random_array(n, k, 13_000 + case).unwrap();
        let t = rng.random_range(1..n);
        let mut traced: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            let j = rng.random_range(0..=i);
            traced.swap(i, j);
        }
        traced.truncate(t);
        traced.sort_unstable();

        let reduced = ptrace(&a, &traced).unwrap();
        let via_tableau = dense(&reduced);
        let via_dense = oracle::dense_ptrace(&dense(&a), &traced);
        let diff = oracle::max_abs_diff(&via_tableau, &via_dense);
        assert!(diff < 1e-12, "case {case}: ptrace differs by {diff}");

        // classify the traced-block leader structure (0, 1 or 2 leaders
        // per traced column) to make sure all proof cases are exercised
        let order: Vec<usize> = traced
            .iter()
            .copied()
            .chain((0..n).filter(|q| !traced.contains(q)))
            .collect();
        let permuted = StabiliserArray::from_rows(
            n,
            (0..a.num_rows()).map(|m| (order.iter().map(|&q| a.row(m)[q]).collect(), a.phase(m))),
        )
        .unwrap();
        let leaders = rref(&permuted).column_leaders;
        for col in 0..t {
            match leaders.iter().find(|l| l.column == col) {
                None => leader_cases[0] = true,
                Some(l) if l.second_row.is_none() => leader_cases[1] = true,
                Some(_) => leader_cases[2] = true,
            }
        }
    }
    assert_eq!(
        leader_cases, [true; 3],
        "not all leader counts were exercised"
    );
    println!("PASS criterion 4: 500 random partial traces match the dense oracle at 1e-12, all three leader cases covered");
}

#[test]
fn criterion_05_normal_form_is_unitarily_equivalent() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x05);
    for case in 0..300u64 {
        let n = if case < 296 {
            1 + (case as usize % 6)
        } else {
            7 + (case as usize % 2)
        };
        let k = rng.random_range(0..=n);
        let extra = rng.random_range(0..=1usize.min(k));
        let a = random_array_with_dependents(n, k, extra, 17_000 + case).unwrap();
        let res = cnf1(&a);
        assert_eq!(res.r, rank(&a), "case {case}");
        // block structure: leading X diagonal, identity tail
        for m in 0..res.array.num_rows() {
            for c in 0..n {
                let want = if m < res.r && c == m {
                    PauliElement::X
                } else {
                    PauliElement::I
                };
                assert_eq!(res.array.element(m, c), want, "case {case} row {m} col {c}");
            }
        }
        let before = dense(&a);
        let conj = oracle::conjugate_by_circuit(&before, &res.ops).unwrap();
        let after = dense(&res.array);
        let diff = oracle::max_abs_diff(&conj, &after);
        assert!(
            diff < 1e-12,
            "case {case}: conjugated state differs by {diff}"
        );
    }
    println!("PASS criterion 5: 300 random arrays, recorded circuits reproduce the normal form at 1e-12 with r = rank");
}

#[test]
fn criterion_06_group_sum_equals_projector_product() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x06);
    for case in 0..200u64 {
        let n = 1 + (case as usize % 6);
        let k = rng.random_range(0..=n.min(6));
        let a = random_array(n, k, 19_000 + case).unwrap();
        // half the cases check the normal form instead of the raw array
        let target = if case % 2 == 0 { a } else { cnf1(&a).array };
        let target = drop_dependent(&target).unwrap();
        let via_sum = oracle::dense_group_sum(&target).unwrap();
        let via_prod = oracle::dense_state(&target).unwrap();
        let diff = oracle::max_abs_diff(&via_sum, &via_prod);
        assert!(diff < 1e-12, "case {case}: group sum differs by {diff}");
    }
    println!("PASS criterion 6: 200 random arrays (K ≤ 6), group sum equals the projector product at 1e-12");
}

#[test]
fn criterion_07_overlap_exact_and_uhlmann_checked() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x07);
    let mut same_state_pairs = 0usize;
    let mut pure_pairs = 0usize;
    for case in 0..500u64 {
        let n = if case < 486 {
            1 + (case as usize % 6)
        } else if case < 496 {
            7
        } else {
            8
        };
        let k1 = rng.random_range(0..=n);
        let a1 = random_array(n, k1, 23_000 + case).unwrap();
        let same_state = case % 6 == 5;
        let a2 = if same_state {
            same_state_pairs += 1;
            row_scramble(&a1, 29_000 + case)
        } else {
            let k2 = rng.random_range(0..=n);
            random_array(n, k2, 31_000 + case).unwrap()
        };

        let res = overlap(&a1, &a2).unwrap();
        let d1 = dense(&a1);
        let d2 = dense(&a2);
        let f_dense = oracle::dense_overlap(&d1, &d2);
        assert_eq!(
            res.overlap.to_f64(),
            f_dense,
            "case {case}: overlap not exact"
        );
        let fu_dense = oracle::dense_uhlmann(&d1, &d2);
        assert!(
            (res.uhlmann.to_f64() - fu_dense).abs() < 1e-10,
            "case {case}: uhlmann {} vs dense {}",
            res.uhlmann,
            fu_dense
        );
        // range: F ∈ {0} ∪ {2^-j, 0 ≤ j ≤ N}
        if let Some(j) = res.overlap.log2_value() {
            assert!(-(n as i32) <= j && j <= 0, "case {case}: F = 2^{j}");
        }
        // symmetry of both quantities under operand exchange
        let swapped = overlap(&a2, &a1).unwrap();
        assert_eq!(swapped.overlap, res.overlap, "case {case}: F asymmetric");
        assert_eq!(swapped.uhlmann, res.uhlmann, "case {case}: F_u asymmetric");
        // pure states: F_u = sqrt(F)
        if rank(&a1) == n && rank(&a2) == n {
            pure_pairs += 1;
            assert_eq!(
                res.uhlmann.twice_log2_value(),
                res.overlap.log2_value(),
                "case {case}: pure-pure F_u ≠ √F"
            );
        }
        if same_state {
            assert!(res.uhlmann.is_one(), "case {case}: same state but F_u ≠ 1");
            assert_eq!(res.overlap.to_f64(), oracle::dense_overlap(&d1, &d1));
        }
        if res.overlap.is_one() {
            assert!(oracle::max_abs_diff(&d1, &d2) < 1e-12);
        }
        // F_u = 1 exactly when the states coincide
        assert_eq!(
            res.uhlmann.is_one(),
            oracle::max_abs_diff(&d1, &d2) == 0.0,
            "case {case}: F_u = {} but states {}",
            res.uhlmann,
            if oracle::max_abs_diff(&d1, &d2) == 0.0 {
                "equal"
            } else {
                "differ"
            }
        );
    }
    assert!(same_state_pairs >= 50 && pure_pairs >= 20);
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 60.0, "took {elapsed:?}");
    println!("PASS criterion 7: 500 random pairs, overlap exact, Uhlmann at 1e-10, symmetric, pure-pure √F law, in {elapsed:?}");
}

#[test]
fn criterion_08_pair_count_matches_entanglement() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x08);
    for case in 0..300u64 {
        let n = if case < 294 {
            2 + (case as usize % 5)
        } else {
            7 + (case as usize % 2)
        };
        let k = rng.random_range(0..=n);
        let a = random_array(n, k, 37_000 + case).unwrap();
        let partition = random_partition(n, 41_000 + case);
        let report = cnfp(&a, &partition).unwrap();

        assert!(report.p <= report.bound, "case {case}: bound violated");

        let rho = dense(&a);
        let logneg = oracle::dense_logneg(&rho, &partition);
        assert!(
            (report.p as f64 - logneg).abs() < 1e-9,
            "case {case}: p = {} vs log-negativity {logneg}",
            report.p
        );
        if rank(&a) == n {
            let reduced = oracle::dense_ptrace(&rho, partition.party_b());
            let entropy = oracle::dense_entropy(&reduced);
            assert!(
                (report.p as f64 - entropy).abs() < 1e-9,
                "case {case}: pure state, p = {} vs entropy {entropy}",
                report.p
            );
        }
        // 20 local pre-rotations per instance never change p
        {
            let mut rotated = a.clone();
            for _ in 0..20 {
                if rng.random_bool(0.7) || n < 2 {
                    let col = rng.random_range(0..n);
                    let op = SingleQubitOp::TABLE[rng.random_range(1..6usize)];
                    rotated = rotated.apply_column_op(col, op).unwrap();
                } else {
                    // CNOT inside one party
                    let party: &[usize] = if rng.random_bool(0.5) && partition.party_a().len() >= 2
                    {
                        partition.party_a()
                    } else if partition.party_b().len() >= 2 {
                        partition.party_b()
                    } else {
                        partition.party_a()
                    };
                    if party.len() < 2 {
                        continue;
                    }
                    let c = party[rng.random_range(0..party.len())];
                    let mut t = party[rng.random_range(0..party.len())];
                    if t == c {
                        t = party[(party.iter().position(|&q| q == c).unwrap() + 1) % party.len()];
                    }
                    rotated = rotated.apply_cnot_columns(c, t).unwrap();
                }
                assert_eq!(
                    cnfp(&rotated, &partition).unwrap().p,
                    report.p,
                    "case {case}: local rotation changed p"
                );
            }
        }
    }
    // constructed equality instances: K = 2·N_A = 2·N_B manifest pairs
    for pairs in 1..=3usize {
        let n = 2 * pairs;
        let mut rows = Vec::new();
        for i in 0..pairs {
            let mut x = vec![PauliElement::I; n];
            x[i] = PauliElement::X;
            x[pairs + i] = PauliElement::X;
            let mut z = vec![PauliElement::I; n];
            z[i] = PauliElement::Z;
            z[pairs + i] = PauliElement::Z;
            rows.push((x, Phase::PLUS_ONE));
            rows.push((z, Phase::PLUS_ONE));
        }
        let a = StabiliserArray::from_rows(n, rows).unwrap();
        let partition = QubitPartition::new(n, (0..pairs).collect()).unwrap();
        let report = cnfp(&a, &partition).unwrap();
        assert_eq!(report.p, pairs);
        assert_eq!(report.p, report.bound);
        assert_eq!(report.k, 2 * report.n_a);
        assert_eq!(report.k, 2 * report.n_b);
        // the bound stays achieved under local rotations
        let rotated = a
            .apply_column_op(0, &SingleQubitOp::PH)
            .unwrap()
            .apply_column_op(n - 1, &SingleQubitOp::HADAMARD)
            .unwrap();
        assert_eq!(cnfp(&rotated, &partition).unwrap().p, pairs);
    }
    println!("PASS criterion 8: 300 random cuts, p = log-negativity at 1e-9 (entropy for pure), bound kept, equality instances achieved, locally invariant");
}

#[test]
fn criterion_09_full_bipartite_normal_form() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x09);
    for case in 0..100u64 {
        let n = 2 + (case as usize % 5);
        let k = rng.random_range(0..=n);
        let a = random_array(n, k, 43_000 + case).unwrap();
        let partition = random_partition(n, 47_000 + case);
        let report = full_normal_form(&a, &partition).unwrap();
        let nf = report.normal_form.as_ref().expect("normal form requested");
        let (p, n_a) = (report.p, report.n_a);

        // structure: XZ pair rows, then I/X-only bottom rows that are
        // identity on every pair column
        for pair in 0..p {
            for c in 0..n {
                let (want_x, want_z) = if c == pair || c == n_a + pair {
                    (PauliElement::X, PauliElement::Z)
                } else {
                    (PauliElement::I, PauliElement::I)
                };
                assert_eq!(nf.element(2 * pair, c), want_x, "case {case}");
                assert_eq!(nf.element(2 * pair + 1, c), want_z, "case {case}");
            }
        }
        for m in (2 * p)..nf.num_rows() {
            for c in 0..n {
                let e = nf.element(m, c);
                assert!(
                    e == PauliElement::I || e == PauliElement::X,
                    "case {case}: bottom block has {e}"
                );
                if c < p || (n_a..n_a + p).contains(&c) {
                    assert!(e.is_identity(), "case {case}: pair column not identity");
                }
            }
        }
        // circuits strictly local
        for op in &report.circuit_a {
            let (c1, c2) = op.columns().unwrap();
            assert!(c1 < n_a && c2.is_none_or(|c| c < n_a), "case {case}");
        }
        for op in &report.circuit_b {
            let (c1, c2) = op.columns().unwrap();
            assert!(c1 >= n_a && c2.is_none_or(|c| c >= n_a), "case {case}");
        }
        // oracle: local circuits map the (grouped) input to the normal form
        let grouped_order: Vec<usize> = partition
            .party_a()
            .iter()
            .chain(partition.party_b())
            .copied()
            .collect();
        let reduced = drop_dependent(&a).unwrap();
        let grouped = StabiliserArray::from_rows(
            n,
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
        let after = dense(nf);
        let diff = oracle::max_abs_diff(&conj, &after);
        assert!(diff < 1e-12, "case {case}: normal form differs by {diff}");
    }
    println!("PASS criterion 9: 100 random instances, bipartite normal form structural and unitarily equivalent at 1e-12 under local circuits");
}

#[test]
fn criterion_10_polynomial_scaling() {
    let sizes = [50usize, 100, 200];
    let reps = 7;
    let mut cnf_medians = Vec::new();
    let mut overlap_medians = Vec::new();
    for (i, &n) in sizes.iter().enumerate() {
        let mut cnf_times = Vec::new();
        let mut ovl_times = Vec::new();
        for rep in 0..reps {
            let seed = 1000 * (i as u64 + 1) + rep;
            let a = random_array(n, n, seed).unwrap();
            let b = random_array(n, n, seed + 500).unwrap();
            let t0 = Instant::now();
            let res = cnf1(&a);
            cnf_times.push(t0.elapsed().as_secs_f64());
            assert_eq!(res.r, n);
            let t1 = Instant::now();
            let ov = overlap(&a, &b).unwrap();
            ovl_times.push(t1.elapsed().as_secs_f64());
            assert!(!ov.overlap.is_one() || n == 0);
        }
        cnf_times.sort_by(|a, b| a.partial_cmp(b).unwrap());
        ovl_times.sort_by(|a, b| a.partial_cmp(b).unwrap());
        cnf_medians.push(cnf_times[reps as usize / 2]);
        overlap_medians.push(ovl_times[reps as usize / 2]);
    }
    let fit = |ts: &[f64]| {
        let xs: Vec<f64> = sizes.iter().map(|&n| (n as f64).ln()).collect();
        let ys: Vec<f64> = ts.iter().map(|&t| t.max(1e-9).ln()).collect();
        let mx = xs.iter().sum::<f64>() / xs.len() as f64;
        let my = ys.iter().sum::<f64>() / ys.len() as f64;
        let num: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
        let den: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
        num / den
    };
    let cnf_exp = fit(&cnf_medians);
    let ovl_exp = fit(&overlap_medians);
    assert!(
        cnf_exp < 4.0,
        "cnf scaling exponent {cnf_exp:.2} (medians {cnf_medians:?})"
    );
    assert!(
        ovl_exp < 4.0,
        "overlap scaling exponent {ovl_exp:.2} (medians {overlap_medians:?})"
    );
    assert!(
        cnf_medians[2] < 1.0 && overlap_medians[2] < 1.0,
        "N = 200 medians: cnf {:.4}s, overlap {:.4}s",
        cnf_medians[2],
        overlap_medians[2]
    );
    println!(
        "PASS criterion 10: scaling exponents cnf {:.2}, overlap {:.2}; N=200 medians {:.1} ms and {:.1} ms",
        cnf_exp,
        ovl_exp,
        cnf_medians[2] * 1e3,
        overlap_medians[2] * 1e3
    );
}

#[test]
fn criterion_11_worked_fixtures() {
    const P: Phase = Phase::PLUS_ONE;
    const M: Phase = Phase::MINUS_ONE;
    let bell = arr(2, &[("XX", P), ("ZZ", P)]);
    let ghz = arr(3, &[("XXX", P), ("ZZI", P), ("IZZ", P)]);
    let product = arr(2, &[("ZI", P), ("IZ", P)]);

    // validation fixtures
    bell.validate().unwrap();
    assert!(arr(2, &[("XI", P), ("ZI", P)]).validate().is_err());
    assert!(
        StabiliserArray::from_rows(2, [(vec![p('X'), p('X')], Phase::PLUS_I)],)
            .unwrap()
            .validate()
            .is_err()
    );

    // reduction fixtures
    assert_eq!(rref(&bell).array, bell);
    assert_eq!(rank(&bell), 2);
    assert_eq!(
        rref(&arr(2, &[("ZI", P), ("ZZ", P)])).array,
        arr(2, &[("ZI", P), ("IZ", P)])
    );
    assert_eq!(
        rref(&arr(2, &[("ZZ", P), ("ZZ", P)])).array,
        arr(2, &[("ZZ", P), ("II", P)])
    );
    assert_eq!(rank(&arr(2, &[("XX", P), ("ZZ", P), ("YY", M)])), 2);
    assert_eq!(bell.entropy(), 0);
    assert_eq!(StabiliserArray::empty(3).unwrap().entropy(), 3);

    // partial traces
    assert_eq!(
        ptrace(&bell, &[0]).unwrap(),
        StabiliserArray::empty(1).unwrap()
    );
    assert_eq!(ptrace(&product, &[0]).unwrap(), arr(1, &[("Z", P)]));
    assert_eq!(
        drop_dependent(&ptrace(&ghz, &[2]).unwrap()).unwrap(),
        arr(2, &[("ZZ", P)])
    );

    // normal forms
    let z = cnf1(&arr(1, &[("Z", P)]));
    assert_eq!(z.array, arr(1, &[("X", P)]));
    assert_eq!(z.ops.len(), 1);
    let bell_nf = stabkit::negative_phase_normalize(cnf1(&bell));
    assert_eq!(bell_nf.array, arr(2, &[("XI", P), ("IX", P)]));

    // overlaps
    let same = overlap(&bell, &bell).unwrap();
    assert!(same.overlap.is_one() && same.uhlmann.is_one() && same.bures == 0.0);
    let orth = overlap(&arr(1, &[("Z", P)]), &arr(1, &[("Z", M)])).unwrap();
    assert!(orth.overlap.is_zero() && orth.bures == 2.0);
    let zx = overlap(&arr(1, &[("Z", P)]), &arr(1, &[("X", P)])).unwrap();
    assert_eq!(zx.overlap.to_f64(), 0.5);
    assert_eq!(zx.uhlmann.to_f64(), std::f64::consts::FRAC_1_SQRT_2);
    let mixed = overlap(&StabiliserArray::empty(1).unwrap(), &arr(1, &[("Z", P)])).unwrap();
    assert_eq!(mixed.overlap.to_f64(), 0.5);

    // entanglement
    let part = |n: usize, a: &[usize]| QubitPartition::new(n, a.to_vec()).unwrap();
    assert_eq!(cnfp(&bell, &part(2, &[0])).unwrap().p, 1);
    assert_eq!(cnfp(&product, &part(2, &[0])).unwrap().p, 0);
    assert_eq!(cnfp(&ghz, &part(3, &[0])).unwrap().p, 1);
    let two_pairs = arr(4, &[("XIXI", P), ("ZIZI", P), ("IXIX", P), ("IZIZ", P)]);
    let rep = cnfp(&two_pairs, &part(4, &[0, 1])).unwrap();
    assert_eq!((rep.p, rep.bound), (2, 2));

    println!(
        "PASS criterion 11: Bell, GHZ and product-state fixtures reproduce their reference values"
    );
}
