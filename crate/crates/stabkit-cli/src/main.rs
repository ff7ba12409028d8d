//! Command-line front end: parses `stab v1` files, dispatches the
//! reduction and comparison algorithms, and mirrors them through the dense
//! oracle for cross-checking. `-` stands for stdin; `--json` switches every
//! subcommand to a single-line structured record.
//!
//! Exit codes: 0 success, 1 domain errors (validation, dimensions, I/O),
//! 2 usage errors.

use std::io::Read;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde_json::json;

use stabkit::array::{QubitPartition, StabiliserArray};
use stabkit::bipartite::{cnfp, entanglement, full_normal_form, EntanglementMeasure};
use stabkit::cnf::cnf1;
use stabkit::oracle;
use stabkit::overlap::{overlap, DyadicScalar, DyadicSqrt, OverlapResult};
use stabkit::random::{random_array, random_partition};
use stabkit::reduce::{drop_dependent, ptrace, rank, rref};

#[derive(Parser)]
#[command(
    name = "stabkit",
    version,
    about = "Normal forms, reductions and entanglement for stabiliser states",
    max_term_width = 100
)]
struct Cli {
    /// Emit a single-line JSON record instead of text
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a file describes a stabiliser state
    Validate { file: String },
    /// Row-reduced echelon form (state unchanged)
    Rref { file: String },
    /// Number of independent generators
    Rank { file: String },
    /// Trace out qubits, e.g. --qubits 1,3
    Ptrace {
        file: String,
        /// 1-based qubit indices, comma-separated
        #[arg(long, value_name = "LIST")]
        qubits: String,
    },
    /// Single-party normal form
    Cnf {
        file: String,
        /// Also print the recorded operations, one per line
        #[arg(long)]
        circuit: bool,
    },
    /// Overlap, Uhlmann fidelity and Bures distance of two states
    Overlap { file1: String, file2: String },
    /// EPR-pair count and entanglement across a bipartition
    Entangle {
        file: String,
        /// 1-based qubit indices of party A, comma-separated
        #[arg(long = "partyA", value_name = "LIST")]
        party_a: String,
        #[arg(long, default_value = "logneg")]
        measure: String,
        /// Also compute and print the two-party normal form
        #[arg(long = "normal-form")]
        normal_form: bool,
    },
    /// Dense-matrix reference computations for cross-checking
    #[command(subcommand)]
    Oracle(OracleCommand),
    /// Generate a seeded random stabiliser array of exact rank k
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Timing sweep over the core algorithms; CSV on stdout
    Bench {
        /// Comma-separated qubit counts, e.g. 50,100,200
        #[arg(long, default_value = "")]
        sizes: String,
        #[arg(long, default_value_t = 5)]
        reps: usize,
    },
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Overlap quantities by dense linear algebra
    Overlap { file1: String, file2: String },
    /// Dense partial trace, cross-checked against the reduction
    Ptrace {
        file: String,
        #[arg(long, value_name = "LIST")]
        qubits: String,
    },
    /// Dense entanglement measures, cross-checked against the pair count
    Entangle {
        file: String,
        #[arg(long = "partyA", value_name = "LIST")]
        party_a: String,
    },
    /// Random-instance consistency sweep of every algorithm
    Check {
        #[arg(long, default_value_t = 5)]
        n: usize,
        #[arg(long, default_value_t = 20)]
        cases: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

enum Failure {
    Domain(String),
    Usage(String),
}

impl Failure {
    fn domain(e: impl std::fmt::Display) -> Self {
        Failure::Domain(e.to_string())
    }
}

type CliResult = Result<(), Failure>;

fn main() {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => {}
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            std::process::exit(1);
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            std::process::exit(2);
        }
    }
}

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Failure::Domain(format!("reading stdin: {e}")))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure::Domain(format!("reading {path}: {e}")))
    }
}

fn load_array(path: &str) -> Result<StabiliserArray, Failure> {
    let text = read_input(path)?;
    StabiliserArray::parse_stab(&text).map_err(|e| Failure::Domain(format!("{path}: {e}")))
}

fn load_valid(path: &str) -> Result<StabiliserArray, Failure> {
    let a = load_array(path)?;
    a.validate()
        .map_err(|e| Failure::Domain(format!("{path}: {e}")))?;
    Ok(a)
}

/// Parses a 1-based comma-separated index list into 0-based indices.
fn parse_indices(list: &str) -> Result<Vec<usize>, Failure> {
    let mut out = Vec::new();
    for tok in list.split(',') {
        let tok = tok.trim();
        if tok.is_empty() {
            continue;
        }
        let v: usize = tok
            .parse()
            .map_err(|_| Failure::Usage(format!("`{tok}` is not a qubit index")))?;
        if v == 0 {
            return Err(Failure::Usage("qubit indices are 1-based".into()));
        }
        out.push(v - 1);
    }
    if out.is_empty() {
        return Err(Failure::Usage("empty qubit list".into()));
    }
    Ok(out)
}

fn stab_lines(a: &StabiliserArray) -> Vec<String> {
    a.to_stab_string().lines().map(str::to_string).collect()
}

fn dyadic_json(d: DyadicScalar) -> serde_json::Value {
    json!({ "zero": d.is_zero(), "log2": d.log2_value() })
}

fn dyadic_sqrt_json(d: DyadicSqrt) -> serde_json::Value {
    json!({ "zero": d.is_zero(), "twice_log2": d.twice_log2_value() })
}

fn print_overlap_text(res: &OverlapResult) {
    println!("F = {}", res.overlap);
    println!("F_u = {}", res.uhlmann);
    println!("D_bures = {:.12}", res.bures);
}

fn run(cli: &Cli) -> CliResult {
    match &cli.command {
        Command::Validate { file } => {
            let a = load_array(file)?;
            match a.validate() {
                Ok(()) => {
                    if cli.json {
                        println!(
                            "{}",
                            json!({"cmd": "validate", "valid": true,
                                   "n": a.n_qubits(), "k": a.num_rows()})
                        );
                    } else {
                        println!("valid N={} K={}", a.n_qubits(), a.num_rows());
                    }
                    Ok(())
                }
                Err(e) => Err(Failure::domain(e)),
            }
        }
        Command::Rref { file } => {
            let a = load_valid(file)?;
            let res = rref(&a);
            if cli.json {
                println!(
                    "{}",
                    json!({"cmd": "rref", "n": res.array.n_qubits(),
                           "k": res.array.num_rows(), "rank": res.rank,
                           "stab": stab_lines(&res.array)})
                );
            } else {
                print!("{}", res.array.to_stab_string());
            }
            Ok(())
        }
        Command::Rank { file } => {
            let a = load_valid(file)?;
            let r = rank(&a);
            if cli.json {
                println!("{}", json!({"cmd": "rank", "rank": r}));
            } else {
                println!("rank = {r}");
            }
            Ok(())
        }
        Command::Ptrace { file, qubits } => {
            let a = load_valid(file)?;
            let traced = parse_indices(qubits)?;
            let out = ptrace(&a, &traced).map_err(Failure::domain)?;
            if cli.json {
                println!(
                    "{}",
                    json!({"cmd": "ptrace", "n": out.n_qubits(),
                           "k": out.num_rows(), "stab": stab_lines(&out)})
                );
            } else {
                print!("{}", out.to_stab_string());
            }
            Ok(())
        }
        Command::Cnf { file, circuit } => {
            let a = load_valid(file)?;
            let res = cnf1(&a);
            if cli.json {
                println!(
                    "{}",
                    json!({"cmd": "cnf", "r": res.r,
                           "stab": stab_lines(&res.array),
                           "circuit": res.ops.iter().map(|o| o.to_string()).collect::<Vec<_>>(),
                           "column_permutation":
                               res.column_permutation.iter().map(|q| q + 1).collect::<Vec<_>>()})
                );
            } else {
                print!("{}", res.array.to_stab_string());
                if *circuit {
                    for op in &res.ops {
                        println!("{op}");
                    }
                }
            }
            Ok(())
        }
        Command::Overlap { file1, file2 } => {
            let a1 = load_array(file1)?;
            let a2 = load_array(file2)?;
            let res = overlap(&a1, &a2).map_err(Failure::domain)?;
            if cli.json {
                println!(
                    "{}",
                    json!({"cmd": "overlap",
                           "F": dyadic_json(res.overlap), "F_decimal": res.overlap.to_f64(),
                           "F_u": dyadic_sqrt_json(res.uhlmann), "F_u_decimal": res.uhlmann.to_f64(),
                           "D_bures": res.bures})
                );
            } else {
                print_overlap_text(&res);
            }
            Ok(())
        }
        Command::Entangle {
            file,
            party_a,
            measure,
            normal_form,
        } => {
            let a = load_valid(file)?;
            let measure: EntanglementMeasure = measure
                .parse()
                .map_err(|e| Failure::Usage(format!("{e}")))?;
            let party = parse_indices(party_a)?;
            let partition = QubitPartition::new(a.n_qubits(), party).map_err(Failure::domain)?;
            let report = if *normal_form {
                full_normal_form(&a, &partition)
            } else {
                cnfp(&a, &partition)
            }
            .map_err(Failure::domain)?;
            let e = entanglement(&report, measure);
            if cli.json {
                println!(
                    "{}",
                    json!({"cmd": "entangle", "p": report.p, "E": e,
                           "measure": measure.to_string(),
                           "bound": report.bound, "rank": report.k,
                           "n_a": report.n_a, "n_b": report.n_b,
                           "qubit_order":
                               report.qubit_order.iter().map(|q| q + 1).collect::<Vec<_>>(),
                           "normal_form":
                               report.normal_form.as_ref().map(stab_lines)})
                );
            } else {
                println!("p = {}", report.p);
                println!("E = {e:.1}");
                if let Some(nf) = &report.normal_form {
                    println!(
                        "# qubit order: {}",
                        report
                            .qubit_order
                            .iter()
                            .map(|q| (q + 1).to_string())
                            .collect::<Vec<_>>()
                            .join(",")
                    );
                    print!("{}", nf.to_stab_string());
                }
            }
            Ok(())
        }
        Command::Oracle(sub) => run_oracle(cli, sub),
        Command::Random { n, k, seed } => {
            let a = random_array(*n, *k, *seed).map_err(Failure::domain)?;
            if cli.json {
                println!(
                    "{}",
                    json!({"cmd": "random", "n": n, "k": k, "seed": seed,
                           "stab": stab_lines(&a)})
                );
            } else {
                print!("{}", a.to_stab_string());
            }
            Ok(())
        }
        Command::Bench { sizes, reps } => run_bench(cli, sizes, *reps),
    }
}

fn run_oracle(cli: &Cli, sub: &OracleCommand) -> CliResult {
    match sub {
        OracleCommand::Overlap { file1, file2 } => {
            let a1 = drop_dependent(&load_valid(file1)?).map_err(Failure::domain)?;
            let a2 = drop_dependent(&load_valid(file2)?).map_err(Failure::domain)?;
            if a1.n_qubits() != a2.n_qubits() {
                return Err(Failure::Domain(format!(
                    "dimension mismatch ({} vs {} qubits)",
                    a1.n_qubits(),
                    a2.n_qubits()
                )));
            }
            let d1 = oracle::dense_state(&a1).map_err(Failure::domain)?;
            let d2 = oracle::dense_state(&a2).map_err(Failure::domain)?;
            let f = oracle::dense_overlap(&d1, &d2);
            let fu = oracle::dense_uhlmann(&d1, &d2);
            let bures = oracle::dense_bures(&d1, &d2);
            if cli.json {
                println!(
                    "{}",
                    json!({"cmd": "oracle overlap", "F": f, "F_u": fu, "D_bures": bures})
                );
            } else {
                println!("F = {f:.12}");
                println!("F_u = {fu:.12}");
                println!("D_bures = {bures:.12}");
            }
            Ok(())
        }
        OracleCommand::Ptrace { file, qubits } => {
            let a = load_valid(file)?;
            let traced = parse_indices(qubits)?;
            let reduced = ptrace(&a, &traced).map_err(Failure::domain)?;
            let via_tableau =
                oracle::dense_state(&drop_dependent(&reduced).map_err(Failure::domain)?)
                    .map_err(Failure::domain)?;
            let via_dense = oracle::dense_ptrace(
                &oracle::dense_state(&drop_dependent(&a).map_err(Failure::domain)?)
                    .map_err(Failure::domain)?,
                &traced,
            );
            let diff = oracle::max_abs_diff(&via_tableau, &via_dense);
            let entropy = oracle::dense_entropy(&via_dense);
            if cli.json {
                println!(
                    "{}",
                    json!({"cmd": "oracle ptrace", "entropy": entropy,
                           "max_abs_diff": diff})
                );
            } else {
                println!("entropy = {entropy:.12}");
                println!("max_abs_diff = {diff:.3e}");
            }
            Ok(())
        }
        OracleCommand::Entangle { file, party_a } => {
            let a = load_valid(file)?;
            let party = parse_indices(party_a)?;
            let partition = QubitPartition::new(a.n_qubits(), party).map_err(Failure::domain)?;
            let reduced = drop_dependent(&a).map_err(Failure::domain)?;
            let rho = oracle::dense_state(&reduced).map_err(Failure::domain)?;
            let logneg = oracle::dense_logneg(&rho, &partition);
            let p = cnfp(&a, &partition).map_err(Failure::domain)?.p;
            if cli.json {
                println!(
                    "{}",
                    json!({"cmd": "oracle entangle", "logneg": logneg, "p": p})
                );
            } else {
                println!("logneg = {logneg:.12}");
                println!("p = {p}");
            }
            Ok(())
        }
        OracleCommand::Check { n, cases, seed } => {
            let mut failures = 0usize;
            for case in 0..*cases {
                let k = (seed.wrapping_add(case) % (*n as u64 + 1)) as usize;
                let a = random_array(*n, k, seed + case).map_err(Failure::domain)?;
                let ok = consistency_check(&a, seed + case).map_err(Failure::domain)?;
                if !ok {
                    failures += 1;
                    eprintln!("inconsistent instance (seed {})", seed + case);
                }
            }
            if cli.json {
                println!(
                    "{}",
                    json!({"cmd": "oracle check", "cases": cases, "failures": failures})
                );
            } else {
                println!("checked {cases} instances: {failures} failures");
            }
            if failures > 0 {
                Err(Failure::Domain(format!(
                    "{failures} inconsistent instances"
                )))
            } else {
                Ok(())
            }
        }
    }
}

/// One random instance through every route, checked against the oracle.
fn consistency_check(a: &StabiliserArray, seed: u64) -> Result<bool, String> {
    let reduced = drop_dependent(a).map_err(|e| e.to_string())?;
    let rho = oracle::dense_state(&reduced).map_err(|e| e.to_string())?;
    // reduction preserves the state
    let res = rref(a);
    let rho2 = oracle::dense_state(&drop_dependent(&res.array).map_err(|e| e.to_string())?)
        .map_err(|e| e.to_string())?;
    if oracle::max_abs_diff(&rho, &rho2) > 1e-12 {
        return Ok(false);
    }
    // normal form is unitarily equivalent
    let nf = cnf1(a);
    let conj = oracle::conjugate_by_circuit(&rho, &nf.ops).map_err(|e| e.to_string())?;
    let nf_dense = oracle::dense_state(&drop_dependent(&nf.array).map_err(|e| e.to_string())?)
        .map_err(|e| e.to_string())?;
    if oracle::max_abs_diff(&conj, &nf_dense) > 1e-12 {
        return Ok(false);
    }
    // self-overlap is the purity
    let ov = overlap(a, a).map_err(|e| e.to_string())?;
    if (ov.overlap.to_f64() - oracle::dense_overlap(&rho, &rho)).abs() > 1e-12 {
        return Ok(false);
    }
    // pair count matches log-negativity
    if a.n_qubits() >= 2 {
        let partition = random_partition(a.n_qubits(), seed);
        let report = cnfp(a, &partition).map_err(|e| e.to_string())?;
        let logneg = oracle::dense_logneg(&rho, &partition);
        if (report.p as f64 - logneg).abs() > 1e-9 {
            return Ok(false);
        }
    }
    Ok(true)
}

fn run_bench(cli: &Cli, sizes: &str, reps: usize) -> CliResult {
    let mut ns = Vec::new();
    for tok in sizes.split(',') {
        let tok = tok.trim();
        if tok.is_empty() {
            continue;
        }
        let v: usize = tok
            .parse()
            .map_err(|_| Failure::Usage(format!("`{tok}` is not a size")))?;
        if v == 0 {
            return Err(Failure::Usage("sizes must be positive".into()));
        }
        ns.push(v);
    }
    let reps = reps.max(1);
    let mut rows = Vec::new();
    for &n in &ns {
        let k = n;
        let mut samples: [Vec<f64>; 4] = Default::default();
        for rep in 0..reps {
            let seed = (n as u64) << 8 | rep as u64;
            let a = random_array(n, k, seed).map_err(Failure::domain)?;
            let b = random_array(n, k, seed ^ 0xffff).map_err(Failure::domain)?;
            let t = Instant::now();
            std::hint::black_box(rref(&a));
            samples[0].push(t.elapsed().as_secs_f64() * 1e6);
            let t = Instant::now();
            std::hint::black_box(cnf1(&a));
            samples[1].push(t.elapsed().as_secs_f64() * 1e6);
            let t = Instant::now();
            std::hint::black_box(overlap(&a, &b).map_err(Failure::domain)?);
            samples[2].push(t.elapsed().as_secs_f64() * 1e6);
            if n >= 2 {
                let partition =
                    QubitPartition::new(n, (0..n / 2).collect()).map_err(Failure::domain)?;
                let t = Instant::now();
                std::hint::black_box(cnfp(&a, &partition).map_err(Failure::domain)?);
                samples[3].push(t.elapsed().as_secs_f64() * 1e6);
            }
        }
        for (algo, sample) in ["rref", "cnf1", "overlap", "cnfp"].iter().zip(&mut samples) {
            if sample.is_empty() {
                continue; // cnfp needs at least two qubits
            }
            sample.sort_by(|a, b| a.partial_cmp(b).unwrap());
            rows.push(json!({"n": n, "k": k, "algo": algo,
                             "median_us": sample[sample.len() / 2]}));
        }
    }
    if cli.json {
        println!("{}", json!({"cmd": "bench", "rows": rows}));
    } else {
        println!("n,k,algo,median_us");
        for row in rows {
            println!(
                "{},{},{},{:.1}",
                row["n"],
                row["k"],
                row["algo"].as_str().unwrap(),
                row["median_us"].as_f64().unwrap()
            );
        }
    }
    Ok(())
}
