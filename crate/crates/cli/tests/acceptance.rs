//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.
//!
//! Set `STRATA_E7=1` to include the W(E7) census in criterion 1.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use weyl_strata::brute_force::DEFAULT_BUDGET;
use weyl_strata::exceptional::{
    crosscheck, embedded_tables, rows_of, table_violations, ExceptionalType,
};
use weyl_strata::signed::{
    classes_classical, compare_with_brute_force, e_sums, strata_table, StrataRow,
};
use weyl_strata::slodowy::{run_slice_suite, SLICE_GENERAL_SAMPLES};
use weyl_strata::weyl::Kind;

const SEED: u64 = 20_240_601;

const BOUND_SMALL_CENSUS: Duration = Duration::from_secs(1);
const BOUND_E6_CENSUS: Duration = Duration::from_secs(60);
const BOUND_E7_CENSUS: Duration = Duration::from_secs(15 * 60);
const BOUND_TABLES: Duration = Duration::from_secs(1);
const BOUND_EXAMPLES: Duration = Duration::from_secs(1);
const BOUND_MU_LAW: Duration = Duration::from_secs(5);
const BOUND_ORACLE: Duration = Duration::from_secs(30);
const BOUND_SLICE: Duration = Duration::from_secs(30);

/// Type, rank, and the expected `(H, fiber size)` of each basic stratum.
type Example = (Kind, usize, &'static [(&'static str, usize)]);

const MAX_CLASSICAL_RANK: usize = 8;
const MAX_ORACLE_RANK: usize = 5;

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Outcome {
            pass,
            detail: detail.into(),
        }
    }
}

fn run(id: &str, title: &str, bound: Option<Duration>, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let mut out = f();
    let took = start.elapsed();
    let timing = match bound {
        Some(b) => {
            if took >= b {
                out.pass = false;
            }
            format!("{:.3} s, bound {} s", took.as_secs_f64(), b.as_secs_f64())
        }
        None => format!("{:.3} s", took.as_secs_f64()),
    };
    let status = if out.pass { "PASS" } else { "FAIL" };
    println!("{status}  {id} {title}: {} [{timing}]", out.detail);
    out.pass
}

fn classical_groups(max_rank: usize) -> Vec<(Kind, usize)> {
    [Kind::B, Kind::C, Kind::D]
        .into_iter()
        .flat_map(|k| {
            (2..=max_rank)
                .filter(move |&n| k.is_valid_rank(n))
                .map(move |n| (k, n))
        })
        .collect()
}

fn census() -> Outcome {
    let rows = embedded_tables();
    let mut groups = vec![
        (ExceptionalType::G2, 3, BOUND_SMALL_CENSUS),
        (ExceptionalType::F4, 9, BOUND_SMALL_CENSUS),
        (ExceptionalType::E6, 5, BOUND_E6_CENSUS),
    ];
    let e7 = std::env::var("STRATA_E7").is_ok_and(|v| v == "1");
    if e7 {
        groups.push((ExceptionalType::E7, 12, BOUND_E7_CENSUS));
    }
    let mut pass = true;
    let mut parts = vec![];
    for (g, expected, bound) in groups {
        let start = Instant::now();
        let res = crosscheck(g, rows, DEFAULT_BUDGET);
        let took = start.elapsed();
        match res {
            Ok(c) => {
                let ok = c.passed() && c.elliptic_count == expected && took < bound;
                pass &= ok;
                parts.push(format!(
                    "{g} {}/{expected} elliptic in {:.3} s",
                    c.elliptic_count,
                    took.as_secs_f64()
                ));
                for f in c.failures() {
                    parts.push(format!("{g} {}: {}", f.name, f.detail));
                }
            }
            Err(e) => {
                pass = false;
                parts.push(format!("{g}: {e}"));
            }
        }
    }
    let f4_l10 = rows_of(rows, ExceptionalType::F4)
        .iter()
        .filter(|r| r.min_length == 10 && r.charpoly.to_string() == "Phi2^2*Phi6")
        .count();
    pass &= f4_l10 == 2;
    parts.push(format!("F4 l=10 Phi2^2*Phi6 rows {f4_l10}"));
    if !e7 {
        parts.push("E7 skipped (STRATA_E7=1 to run)".into());
    }
    Outcome::new(pass, parts.join("; "))
}

fn tables() -> Outcome {
    let rows = embedded_tables();
    let row_faults: usize = rows.iter().map(|r| r.violations().len()).sum();
    let table_faults = table_violations(rows);
    let c_ex: Vec<_> = rows.iter().filter(|r| r.is_c_ex).collect();
    let c_ex_ok = c_ex.len() == 1
        && c_ex[0].group == ExceptionalType::E8
        && c_ex[0].h_type.ranks() == [1, 1]
        && c_ex[0].predicted_fiber_size() == 3;
    let four_a1: Vec<usize> = rows
        .iter()
        .filter(|r| r.group == ExceptionalType::E8 && r.gamma_name == "4A1")
        .map(|r| r.predicted_fiber_size())
        .collect();
    let pass =
        rows.len() == 59 && row_faults == 0 && table_faults.is_empty() && c_ex_ok && four_a1 == [5];
    Outcome::new(
        pass,
        format!(
            "{} rows, {row_faults} row violations, {} table violations, C_ex unique with fiber 3: {c_ex_ok}, E8 4A1 fibers {four_a1:?}",
            rows.len(),
            table_faults.len()
        ),
    )
}

fn worked_examples() -> Outcome {
    let cases: [Example; 3] = [
        (Kind::C, 2, &[("{1}", 1), ("{1}", 1)]),
        (Kind::C, 3, &[("C1", 2), ("{1}", 1), ("{1}", 1)]),
        (Kind::D, 4, &[("C1", 2), ("{1}", 1), ("{1}", 1)]),
    ];
    let mut pass = true;
    let mut parts = vec![];
    for (kind, n, want) in cases {
        let got = match strata_table(kind, n) {
            Ok(rows) => {
                let mut v: Vec<(String, usize)> = rows
                    .iter()
                    .filter(|r| r.basic)
                    .map(|r| (r.h_type.to_string(), r.fiber_size()))
                    .collect();
                v.sort();
                v
            }
            Err(e) => return Outcome::new(false, format!("{kind}{n}: {e}")),
        };
        let want: Vec<(String, usize)> = want.iter().map(|(h, s)| (h.to_string(), *s)).collect();
        pass &= got == want;
        let shown: Vec<String> = got.iter().map(|(h, s)| format!("{h}:{s}")).collect();
        parts.push(format!("{kind}{n} [{}]", shown.join(" ")));
    }
    Outcome::new(pass, parts.join("; "))
}

fn mu_law() -> Outcome {
    let (mut strata, mut literal, mut offset, mut sizes) = (0, 0, 0, 0);
    let mut partition_faults = vec![];
    let mut first_break = None;
    for (kind, n) in classical_groups(MAX_CLASSICAL_RANK) {
        let (rows, classes) = match (strata_table(kind, n), classes_classical(kind, n)) {
            (Ok(r), Ok(c)) => (r, c.len()),
            (Err(e), _) | (_, Err(e)) => return Outcome::new(false, format!("{kind}{n}: {e}")),
        };
        strata += rows.len();
        sizes += rows
            .iter()
            .filter(|r| r.fiber_size() == r.predicted_size())
            .count();
        offset += rows
            .iter()
            .filter(|r| r.mu_multiset == r.predicted_mu)
            .count();
        for r in &rows {
            if r.mu_multiset == e_sums(&r.h_type) {
                literal += 1;
            } else if first_break.is_none() {
                first_break = Some(format!(
                    "{kind}{n} {} has mu {:?}, sums {:?}",
                    r.label,
                    r.mu_multiset,
                    e_sums(&r.h_type)
                ));
            }
        }
        let total: usize = rows.iter().map(StrataRow::fiber_size).sum();
        if total != classes {
            partition_faults.push(format!("{kind}{n}"));
        }
    }
    let pass = sizes == strata && literal == strata && partition_faults.is_empty();
    let mut detail = format!(
        "{strata} strata: fiber size {sizes}/{strata}, partition faults {partition_faults:?}, \
         literal mu law {literal}/{strata}, offset law (min mu + sums) {offset}/{strata}"
    );
    if let Some(b) = first_break {
        detail.push_str(&format!("; first break: {b}"));
    }
    Outcome::new(pass, detail)
}

fn oracle() -> Outcome {
    let mut pass = true;
    let mut parts = vec![];
    for (kind, n) in classical_groups(MAX_ORACLE_RANK) {
        match compare_with_brute_force(kind, n, DEFAULT_BUDGET) {
            Ok(c) => {
                let failed: Vec<&str> = c
                    .items
                    .iter()
                    .filter(|i| !i.pass)
                    .map(|i| i.name.as_str())
                    .collect();
                pass &= failed.is_empty();
                if failed.is_empty() {
                    parts.push(format!("{kind}{n} {} classes", c.rows.len()));
                } else {
                    parts.push(format!("{kind}{n} failed {failed:?}"));
                }
            }
            Err(e) => {
                pass = false;
                parts.push(format!("{kind}{n}: {e}"));
            }
        }
    }
    Outcome::new(pass, parts.join(", "))
}

fn slice() -> Outcome {
    let rep = run_slice_suite(SEED);
    let general = rep.samples_by_kind.get("general").copied().unwrap_or(0);
    let mut pass = rep.passed()
        && rep.violation_count == 0
        && general >= SLICE_GENERAL_SAMPLES
        && general >= 1000;
    let empty_pieces: Vec<&String> = rep
        .piece_counts
        .iter()
        .filter(|(_, &v)| v == 0)
        .map(|(k, _)| k)
        .collect();
    pass &= empty_pieces.is_empty();
    let failed: Vec<String> = rep
        .checks
        .iter()
        .filter(|c| !c.pass)
        .map(|c| format!("{}: {}", c.name, c.detail))
        .collect();
    Outcome::new(
        pass,
        format!(
            "{} samples ({general} general), {} checks, dims {:?}, pieces {:?}, fibers checked {}, failed {failed:?}",
            rep.total_samples,
            rep.checks.len(),
            rep.dim_histogram,
            rep.piece_counts,
            rep.preimages_checked
        ),
    )
}

fn determinism() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_strata");
    let commands: &[&[&str]] = &[
        &["strata", "--type", "B", "--rank", "4"],
        &["strata", "--type", "C3"],
        &["strata", "--type", "D5"],
        &["elliptic", "--type", "C3"],
        &["elliptic", "--type", "D4"],
        &["elliptic", "--type", "E8"],
        &["elliptic", "--type", "A5"],
        &["verify", "tables"],
        &["verify", "lengths:F4"],
        &["verify", "classical-oracle:4"],
        &["verify", "slodowy", "--seed", "7"],
        &["verify", "all"],
    ];
    let mut runs = 0;
    let mut mismatches = vec![];
    for args in commands {
        for format in ["json", "tsv", "text"] {
            let once = || {
                Command::new(bin)
                    .args(*args)
                    .args(["--format", format])
                    .output()
                    .map(|o| (o.status.code(), o.stdout))
            };
            match (once(), once()) {
                (Ok(a), Ok(b)) => {
                    runs += 2;
                    if a != b || a.1.is_empty() || a.0 != Some(0) {
                        mismatches.push(format!("{} --format {format}", args.join(" ")));
                    }
                }
                (Err(e), _) | (_, Err(e)) => return Outcome::new(false, format!("{bin}: {e}")),
            }
        }
    }
    Outcome::new(
        mismatches.is_empty(),
        format!(
            "{runs} runs over {} commands x 3 formats, differing or failing: {mismatches:?}",
            commands.len()
        ),
    )
}

fn main() -> ExitCode {
    let results = [
        run("C1", "elliptic census", None, census),
        run("C2", "table self-consistency", Some(BOUND_TABLES), tables),
        run(
            "C3",
            "classical worked examples",
            Some(BOUND_EXAMPLES),
            worked_examples,
        ),
        run(
            "C4",
            "fiber size and mu law, B/C/D rank <= 8",
            Some(BOUND_MU_LAW),
            mu_law,
        ),
        run(
            "C5",
            "oracle equivalence, B/C/D rank <= 5",
            Some(BOUND_ORACLE),
            oracle,
        ),
        run("C6", "slice suite", Some(BOUND_SLICE), slice),
        run("C7", "deterministic reports", None, determinism),
    ];
    let failed = results.iter().filter(|p| !**p).count();
    println!(
        "acceptance: {} passed, {failed} failed",
        results.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
