//! `mpart`: one binary over the whole toolkit.
//!
//! Subcommands mirror the library surface: `poly` and `table` compute
//! polynomials, `roots` emits the root-cloud CSV behind the figures,
//! `congruence`, `mahler` and `verify-all` run the verification suites,
//! `kernel` and `spartitions` expose the remaining sequences. Identical
//! configuration always produces byte-identical output; any sampling is
//! driven by the `--seed` flag.
//!
//! Exit status: 0 when everything passed, 1 when a verification failed,
//! 2 for invalid configuration.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use m_ary_partitions::automata;
use m_ary_partitions::congruence;
use m_ary_partitions::engine::{self, Engine};
use m_ary_partitions::mahler;
use m_ary_partitions::mseq::{self, MSeq};
use m_ary_partitions::roots;

#[derive(Parser)]
#[command(name = "mpart", version, about = "M-ary partition polynomial toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write the main output to a file instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,
    /// Seed for sampled ranges
    #[arg(long, global = true, default_value_t = 20260)]
    seed: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print the ascending coefficient list of p_M(n, t)
    Poly {
        #[arg(long)]
        mseq: String,
        #[arg(long)]
        n: u64,
    },
    /// Emit the generating-product table as rows (n, j, a)
    Table {
        #[arg(long)]
        mseq: String,
        #[arg(long)]
        max_n: u64,
    },
    /// Root clouds of p_m(n, t): rows (n, re, im, modulus, residual)
    Roots {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        n_max: u64,
        /// Relative residual target of the iteration
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// Check the digit congruences; prints a pass/fail table and the
    /// first counterexample if one exists
    Congruence {
        #[arg(long)]
        mseq: String,
        #[arg(long)]
        n_max: u64,
        /// Also check the quantum-integer form (constant base only)
        #[arg(long)]
        quantum: bool,
        /// Also check the single-step reduction
        #[arg(long)]
        lemma: bool,
        /// Check a seeded random sample of this size instead of every n
        #[arg(long)]
        sample: Option<u64>,
    },
    /// Print the functional-equation coefficients and verify the identity
    Mahler {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 400)]
        trunc: u64,
    },
    /// Kernel classes of the sign sequence (default) or of a coefficient
    /// sequence reduced mod m
    Kernel {
        #[arg(long)]
        m: u64,
        #[arg(long, default_value_t = 6)]
        depth: u32,
        #[arg(long, default_value_t = 512)]
        len: usize,
        /// Explore the sequence a_m(k, n) mod m instead of the sign sequence
        #[arg(long)]
        coeff_k: Option<u64>,
    },
    /// Counts of partitions into parts M_j - 1
    Spartitions {
        #[arg(long)]
        mseq: String,
        #[arg(long)]
        max_n: u64,
    },
    /// Run every check suite against one base
    VerifyAll {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        n_max: u64,
        /// Sample size for the expensive polynomial checks
        #[arg(long)]
        sample: Option<u64>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(all_passed) => {
            if all_passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn parse_mseq(spec: &str) -> Result<MSeq, String> {
    MSeq::parse(spec).map_err(|e| e.to_string())
}

fn require_base(m: u64) -> Result<MSeq, String> {
    if m < 2 {
        return Err(format!("base {m} must be at least 2"));
    }
    Ok(MSeq::constant(m).unwrap())
}

/// 12 significant digits, deterministic across runs.
fn fmt_f64(x: f64) -> String {
    format!("{x:.11e}")
}

fn emit(out: &Option<PathBuf>, content: &str) -> Result<(), String> {
    match out {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

/// One row of a verification table.
struct CheckRow {
    check: &'static str,
    params: String,
    pass: bool,
    counterexample: Option<String>,
}

fn render_checks(format: Format, rows: &[CheckRow]) -> String {
    let mut s = String::new();
    match format {
        Format::Json => {
            s.push_str("{\"checks\":[");
            for (i, r) in rows.iter().enumerate() {
                if i > 0 {
                    s.push(',');
                }
                write!(
                    s,
                    "{{\"check\":\"{}\",\"params\":\"{}\",\"pass\":{}}}",
                    r.check, r.params, r.pass
                )
                .unwrap();
            }
            s.push_str("]}\n");
        }
        _ => {
            s.push_str("check,params,pass\n");
            for r in rows {
                let params = if r.params.contains(',') {
                    format!("\"{}\"", r.params)
                } else {
                    r.params.clone()
                };
                writeln!(s, "{},{params},{}", r.check, r.pass).unwrap();
            }
        }
    }
    for r in rows {
        if let Some(ce) = &r.counterexample {
            writeln!(s, "counterexample ({}): {}", r.check, ce).unwrap();
        }
    }
    s
}

/// Ascending sorted sample (with the range ends pinned) when `sample` is
/// set and smaller than the range; the full range otherwise.
fn choose_indices(n_max: u64, sample: Option<u64>, seed: u64) -> Vec<u64> {
    match sample {
        Some(count) if count < n_max + 1 => {
            let mut rng = StdRng::seed_from_u64(seed);
            let mut picks: Vec<u64> = (0..count).map(|_| rng.random_range(0..=n_max)).collect();
            picks.push(0);
            picks.push(n_max);
            picks.sort_unstable();
            picks.dedup();
            picks
        }
        _ => (0..=n_max).collect(),
    }
}

fn run(cli: Cli) -> Result<bool, String> {
    match cli.command {
        Command::Poly { mseq, n } => {
            let seq = parse_mseq(&mseq)?;
            let poly = engine::p_poly(&seq, n);
            let content = match cli.format {
                Format::Csv => {
                    let mut s = String::from("j,coeff\n");
                    for (j, c) in poly.coeffs().iter().enumerate() {
                        writeln!(s, "{j},{c}").unwrap();
                    }
                    s
                }
                _ => format!("{}\n", poly.to_coeff_json()),
            };
            emit(&cli.out, &content)?;
            Ok(true)
        }

        Command::Table { mseq, max_n } => {
            let seq = parse_mseq(&mseq)?;
            let table = engine::oracle_table(&seq, max_n);
            let content = match cli.format {
                Format::Json => {
                    let mut s = format!("{{\"mseq\":\"{seq}\",\"max_n\":{max_n},\"rows\":[");
                    for n in 0..=max_n {
                        if n > 0 {
                            s.push(',');
                        }
                        s.push_str(&table.row(n).to_coeff_json());
                    }
                    s.push_str("]}\n");
                    s
                }
                _ => {
                    let mut s = String::from("n,j,a\n");
                    for n in 0..=max_n {
                        for j in 0..=n as usize {
                            writeln!(s, "{n},{j},{}", table.coeff(j, n)).unwrap();
                        }
                    }
                    s
                }
            };
            emit(&cli.out, &content)?;
            Ok(true)
        }

        Command::Roots { m, n_max, tol } => {
            require_base(m)?;
            let cloud = roots::root_cloud(m, n_max, tol).map_err(|e| e.to_string())?;
            let bound = roots::radius_bound(m);
            let mut rows = String::from("n,re,im,modulus,residual\n");
            let mut max_modulus: f64 = 0.0;
            let mut inside = 0u64;
            let mut outside = 0u64;
            let mut min_nonzero = f64::INFINITY;
            let mut strict = true;
            for (n, report) in &cloud {
                let mut pairs: Vec<_> = report.roots.iter().enumerate().collect();
                pairs.sort_by(|a, b| {
                    (a.1.re, a.1.im)
                        .partial_cmp(&(b.1.re, b.1.im))
                        .unwrap_or(std::cmp::Ordering::Equal)
                });
                for (i, z) in pairs {
                    let modulus = z.norm();
                    writeln!(
                        rows,
                        "{n},{},{},{},{}",
                        fmt_f64(z.re),
                        fmt_f64(z.im),
                        fmt_f64(modulus),
                        fmt_f64(report.residuals[i])
                    )
                    .unwrap();
                    max_modulus = max_modulus.max(modulus);
                    strict &= modulus < bound;
                    if modulus > 0.0 {
                        min_nonzero = min_nonzero.min(modulus);
                        if modulus > 1.0 {
                            outside += 1;
                        } else if modulus < 1.0 {
                            inside += 1;
                        }
                    }
                }
            }
            emit(&cli.out, &rows)?;
            println!("# m={m} n_max={n_max} bound={}", fmt_f64(bound));
            println!(
                "# max_modulus={} strict_bound_held={strict}",
                fmt_f64(max_modulus)
            );
            println!(
                "# unit_circle: inside={inside} outside={outside} min_nonzero_modulus={}",
                fmt_f64(min_nonzero)
            );
            Ok(true)
        }

        Command::Congruence {
            mseq,
            n_max,
            quantum,
            lemma,
            sample,
        } => {
            let seq = parse_mseq(&mseq)?;
            let indices = choose_indices(n_max, sample, cli.seed);
            let params = match sample {
                Some(c) => format!("M={seq} sampled {c} of 0..={n_max} seed={}", cli.seed),
                None => format!("M={seq} n<={n_max}"),
            };
            let mut rows = Vec::new();

            let mut eng = Engine::new(seq.clone());
            let mut first_fail = None;
            for &n in &indices {
                let case = congruence::congruence_case(&mut eng, n).map_err(|e| e.to_string())?;
                if !case.holds {
                    first_fail = Some(format!(
                        "n={n} digits={:?} modulus={} lhs={} rhs={}",
                        case.digits.digits(),
                        case.modulus,
                        case.lhs,
                        case.rhs
                    ));
                    break;
                }
            }
            rows.push(CheckRow {
                check: "digit-congruence",
                params: params.clone(),
                pass: first_fail.is_none(),
                counterexample: first_fail,
            });

            let counts = engine::eval_sequence(&seq, n_max, &BigInt::one());
            let scalar_fail = indices
                .iter()
                .find(|&&n| !congruence::scalar_residue_holds(&seq, n, &counts[n as usize]))
                .map(|&n| format!("n={n}"));
            rows.push(CheckRow {
                check: "scalar-residue",
                params: params.clone(),
                pass: scalar_fail.is_none(),
                counterexample: scalar_fail,
            });

            if lemma {
                let cap = n_max.min(500);
                let fail = (0..=cap)
                    .find(|&n| !congruence::step_congruence_holds(&mut eng, n))
                    .map(|n| format!("multiplier n={n}"));
                rows.push(CheckRow {
                    check: "step-congruence",
                    params: format!("M={seq} multipliers<={cap}"),
                    pass: fail.is_none(),
                    counterexample: fail,
                });
            }

            if quantum {
                if !seq.is_constant() {
                    return Err("--quantum needs a constant base sequence".into());
                }
                let m = seq.m_at(1);
                let cap = n_max.min(500);
                let table = roots::q_poly_table(m, cap);
                let fail = (0..=cap)
                    .find(|&n| !congruence::quantum_holds_with(&table[n as usize], m, n))
                    .map(|n| format!("n={n}"));
                rows.push(CheckRow {
                    check: "quantum-residue",
                    params: format!("m={m} n<={cap}"),
                    pass: fail.is_none(),
                    counterexample: fail,
                });
            }

            let all = rows.iter().all(|r| r.pass);
            emit(&cli.out, &render_checks(cli.format, &rows))?;
            Ok(all)
        }

        Command::Mahler { m, k, trunc } => {
            require_base(m)?;
            let system = mahler::mahler_system(m, k);
            let series = engine::a_series(m, k as u64, trunc);
            let ok = mahler::verify_system(&system, &series);
            let content = match cli.format {
                Format::Json => {
                    let mut s =
                        format!("{{\"m\":{m},\"k\":{k},\"trunc\":{trunc},\"coeff_polys\":[");
                    for (j, p) in system.coeff_polys.iter().enumerate() {
                        if j > 0 {
                            s.push(',');
                        }
                        s.push_str(&p.to_coeff_json());
                    }
                    writeln!(
                        s,
                        "],\"inhom\":{},\"verified\":{ok}}}",
                        system.inhom.to_coeff_json()
                    )
                    .unwrap();
                    s
                }
                _ => {
                    let mut s = String::new();
                    for (j, p) in system.coeff_polys.iter().enumerate() {
                        writeln!(s, "P[{j}] = {}", p.to_coeff_json()).unwrap();
                    }
                    writeln!(s, "Q = {}", system.inhom.to_coeff_json()).unwrap();
                    writeln!(s, "verified (truncation {trunc}): {ok}").unwrap();
                    s
                }
            };
            emit(&cli.out, &content)?;
            Ok(ok)
        }

        Command::Kernel {
            m,
            depth,
            len,
            coeff_k,
        } => {
            require_base(m)?;
            let needed = (m as usize)
                .checked_pow(depth)
                .and_then(|s| s.checked_mul(len))
                .ok_or("m^depth * len overflows")?;
            if needed > 1 << 27 {
                return Err(format!(
                    "m^depth * len = {needed} values is beyond the supported range"
                ));
            }
            let (label, classes) = match coeff_k {
                None => {
                    if m % 2 != 0 {
                        return Err("the sign sequence needs an even base".into());
                    }
                    let values = roots::sign_sequence(m, needed);
                    let classes = automata::kernel_classes(m, depth, len, &values);
                    (
                        format!("sign sequence, m={m}"),
                        classes
                            .into_iter()
                            .map(|c| {
                                (
                                    c.i,
                                    c.j,
                                    format!("{:?}", &c.prefix[..c.prefix.len().min(16)]),
                                )
                            })
                            .collect::<Vec<_>>(),
                    )
                }
                Some(k) => {
                    let values = engine::a_series_mod(m, k, needed as u64 - 1, m);
                    let classes = automata::kernel_classes(m, depth, len, &values);
                    (
                        format!("coefficient sequence k={k} mod {m}"),
                        classes
                            .into_iter()
                            .map(|c| {
                                (
                                    c.i,
                                    c.j,
                                    format!("{:?}", &c.prefix[..c.prefix.len().min(16)]),
                                )
                            })
                            .collect::<Vec<_>>(),
                    )
                }
            };
            let mut s = format!(
                "# {label}: {} classes distinguishable at depth {depth}, prefix {len}\n",
                classes.len()
            );
            s.push_str("i,j,prefix\n");
            for (i, j, prefix) in &classes {
                writeln!(s, "{i},{j},\"{prefix}\"").unwrap();
            }
            emit(&cli.out, &s)?;
            Ok(true)
        }

        Command::Spartitions { mseq, max_n } => {
            let seq = parse_mseq(&mseq)?;
            let counts = engine::s_partitions(&seq, max_n);
            let content = match cli.format {
                Format::Json => {
                    let list = counts
                        .iter()
                        .map(|c| c.to_string())
                        .collect::<Vec<_>>()
                        .join(",");
                    format!("{{\"mseq\":\"{seq}\",\"counts\":[{list}]}}\n")
                }
                _ => {
                    let mut s = String::from("n,s\n");
                    for (n, c) in counts.iter().enumerate() {
                        writeln!(s, "{n},{c}").unwrap();
                    }
                    s
                }
            };
            emit(&cli.out, &content)?;
            Ok(true)
        }

        Command::VerifyAll { m, n_max, sample } => {
            require_base(m)?;
            let rows = verify_all(m, n_max, sample, cli.seed);
            let all = rows.iter().all(|r| r.pass);
            emit(&cli.out, &render_checks(cli.format, &rows))?;
            Ok(all)
        }
    }
}

fn verify_all(m: u64, n_max: u64, sample: Option<u64>, seed: u64) -> Vec<CheckRow> {
    let seq = MSeq::constant(m).unwrap();
    let mut rows = Vec::new();
    let mut push = |check: &'static str, params: String, fail: Option<String>| {
        rows.push(CheckRow {
            check,
            params,
            pass: fail.is_none(),
            counterexample: fail,
        });
    };

    let mut eng = Engine::new(seq.clone());

    {
        let cap = n_max.min(400);
        let table = engine::oracle_table(&seq, cap);
        let fail = (0..=cap)
            .find(|&n| eng.p_poly(n) != table.row(n))
            .map(|n| format!("n={n}"));
        push("oracle-equivalence", format!("m={m} n<={cap}"), fail);
    }

    {
        let fail = (0..=n_max)
            .find(|&n| eng.p_poly(n).degree() != Some(n as usize))
            .map(|n| format!("n={n}"));
        push("degree", format!("m={m} n<={n_max}"), fail);
    }

    {
        let fail = (0..=n_max)
            .find(|&n| eng.p_poly(n).order_at_zero() != Some(mseq::digit_sum(m, n) as usize))
            .map(|n| format!("n={n}"));
        push("order-at-zero", format!("m={m} n<={n_max}"), fail);
    }

    {
        let vals = roots::minus_one_sequence(&seq, n_max);
        let fail = if m.is_multiple_of(2) {
            let lsd = automata::sign_dfao_lsd(m).unwrap();
            let msd = automata::sign_dfao_msd(m).unwrap();
            (0..=n_max).find_map(|n| {
                let v = &vals[n as usize];
                if v.abs() > BigInt::one() {
                    return Some(format!("n={n}: out of range"));
                }
                let v = i8::try_from(v).unwrap();
                let formula = roots::even_m_sign(m, n).unwrap();
                (v != formula || v != lsd.run(n) || v != msd.run(n))
                    .then(|| format!("n={n}: {v} vs {formula}/{}/{}", lsd.run(n), msd.run(n)))
            })
        } else {
            let counts = engine::eval_sequence(&seq, n_max, &BigInt::one());
            (0..=n_max as usize).find_map(|n| {
                let expect = if n % 2 == 0 {
                    counts[n].clone()
                } else {
                    -counts[n].clone()
                };
                (vals[n].is_zero() || vals[n] != expect).then(|| format!("n={n}"))
            })
        };
        push("minus-one-dichotomy", format!("m={m} n<={n_max}"), fail);
    }

    {
        let cap = n_max.min(400);
        let bound = roots::radius_bound(m);
        let mut fail = None;
        for n in 1..=cap {
            let p = eng.p_poly(n).clone();
            match roots::complex_roots(&p, 1e-10) {
                Ok(report) => {
                    if report.max_modulus >= bound + 1e-6
                        || report.residuals.iter().any(|r| *r >= 1e-8)
                    {
                        fail = Some(format!("n={n}: modulus {}", report.max_modulus));
                        break;
                    }
                }
                Err(e) => {
                    fail = Some(format!("n={n}: {e}"));
                    break;
                }
            }
        }
        push("root-bound", format!("m={m} n<={cap} tol=1e-8"), fail);
    }

    {
        let cap = n_max.min(1000);
        let mut fail = None;
        for n in 0..=cap {
            match roots::tilde_normalize_with(&mut eng, n) {
                Ok(_) => {}
                Err(e) => {
                    fail = Some(format!("n={n}: {e}"));
                    break;
                }
            }
        }
        if fail.is_none() {
            let q_cap = cap / m;
            let table = roots::q_poly_table(m, q_cap);
            fail = (0..=q_cap)
                .find(|&n| {
                    roots::tilde_normalize_with(&mut eng, m * n).as_ref() != Ok(&table[n as usize])
                })
                .map(|n| format!("q-recurrence n={n}"));
        }
        push("tilde-support", format!("m={m} n<={cap}"), fail);
    }

    {
        let indices = choose_indices(n_max, sample, seed);
        let params = match sample {
            Some(c) => format!("m={m} sampled {c} of 0..={n_max} seed={seed}"),
            None => format!("m={m} n<={n_max}"),
        };
        let mut fail = None;
        for &n in &indices {
            match congruence::congruence_case(&mut eng, n) {
                Ok(case) if case.holds => {}
                Ok(case) => {
                    fail = Some(format!(
                        "n={n} digits={:?} modulus={} lhs={} rhs={}",
                        case.digits.digits(),
                        case.modulus,
                        case.lhs,
                        case.rhs
                    ));
                    break;
                }
                Err(e) => {
                    fail = Some(format!("n={n}: {e}"));
                    break;
                }
            }
        }
        push("digit-congruence", params, fail);
    }

    {
        let cap = n_max.min(500);
        let fail = (0..=cap)
            .find(|&n| !congruence::step_congruence_holds(&mut eng, n))
            .map(|n| format!("multiplier n={n}"));
        push("step-congruence", format!("m={m} multipliers<={cap}"), fail);
    }

    {
        let counts = engine::eval_sequence(&seq, n_max, &BigInt::one());
        let fail = (0..=n_max)
            .find(|&n| !congruence::scalar_residue_holds(&seq, n, &counts[n as usize]))
            .map(|n| format!("n={n}"));
        push("scalar-residue", format!("m={m} n<={n_max}"), fail);
    }

    {
        let cap = n_max.min(500);
        let table = roots::q_poly_table(m, cap);
        let fail = (0..=cap)
            .find(|&n| !congruence::quantum_holds_with(&table[n as usize], m, n))
            .map(|n| format!("n={n}"));
        push("quantum-residue", format!("m={m} n<={cap}"), fail);
    }

    {
        let trunc = n_max.clamp(64, 400);
        let fail = (1..=5usize)
            .find(|&k| !mahler::verify_mahler(m, k, trunc))
            .map(|k| format!("k={k}"));
        push("mahler-identity", format!("m={m} k<=5 trunc={trunc}"), fail);
    }

    if m.is_multiple_of(2) {
        // keep the sheared value table small for wide bases
        let mut depth = 6u32;
        while depth > 2 && m.pow(depth) * 512 > 1 << 22 {
            depth -= 1;
        }
        let needed = (m as usize).pow(depth) * 512;
        let values = roots::sign_sequence(m, needed);
        let classes = automata::kernel_classes(m, depth, 512, &values);
        let fail = (classes.len() != 4).then(|| format!("{} classes", classes.len()));
        push(
            "kernel-classes",
            format!("m={m} depth={depth} prefix=512"),
            fail,
        );
    }

    {
        let spart = engine::s_partitions(&seq, 10);
        let mut fail = None;
        'outer: for k in 1u64..=10 {
            let stable = eng.tail_coeff_stable(k);
            if stable != spart[k as usize] {
                fail = Some(format!("k={k}: tail != s(k)"));
                break;
            }
            let start = (k * m).div_ceil(m - 1);
            for n in start..=start + 40 {
                if eng.coeff_a((n - k) as i64, n as i64) != stable {
                    fail = Some(format!("k={k} n={n}"));
                    break 'outer;
                }
            }
        }
        push("tail-stability", format!("m={m} k<=10"), fail);
    }

    {
        let cap = n_max.min(2000);
        let mut fail = None;
        'outer: for k in 0u64..=12 {
            let uniform = engine::uniform_bound(k);
            for n in 0..=cap {
                let a = eng.coeff_a(k as i64, n as i64);
                let i = n % m;
                let closed_ok = if k >= i {
                    engine::coeff_bound(m, k - i).closed_holds(&a)
                } else {
                    a.is_zero()
                };
                if !closed_ok || a > uniform {
                    fail = Some(format!("k={k} n={n}"));
                    break 'outer;
                }
            }
        }
        push("coeff-bound", format!("m={m} k<=12 n<={cap}"), fail);
    }

    {
        let cap = n_max.min(2000);
        let mut fail = None;
        'outer: for r in 1u32..=40 {
            let step = match (m).checked_pow(r) {
                Some(s) if s <= cap.max(1) => s,
                _ => break,
            };
            for n in 1..=(cap / step) {
                if n % m == 0 {
                    continue;
                }
                let idx = step * n - 1;
                for j in 0..(m - 1) * r as u64 {
                    if !eng.coeff_a(j as i64, idx as i64).is_zero() {
                        fail = Some(format!("r={r} n={n} j={j}"));
                        break 'outer;
                    }
                }
            }
        }
        push("zero-structure", format!("m={m} n<={cap}"), fail);
    }

    {
        let cap = n_max.min(2000);
        let mut fail = None;
        'outer: for k in 0u64..=12 {
            for r in 1u32..=40 {
                let step = match m.checked_pow(r) {
                    Some(s) if s <= cap.max(1) => s,
                    _ => break,
                };
                for n in 1..=(cap / step) {
                    if n % m == 0 {
                        continue;
                    }
                    let lhs = eng.coeff_a(k as i64, (step * n) as i64);
                    let mut rhs = eng.coeff_a(k as i64, n as i64);
                    for j in 0..r {
                        rhs += eng.coeff_a(k as i64 - 1, (m.pow(r - j) * n - 1) as i64);
                    }
                    if lhs != rhs {
                        fail = Some(format!("k={k} r={r} n={n}"));
                        break 'outer;
                    }
                }
            }
        }
        push("telescoping", format!("m={m} k<=12 n<={cap}"), fail);
    }

    rows
}
