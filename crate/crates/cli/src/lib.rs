//! Reports behind the `strata` binary.
//!
//! Every command produces a [`Report`]: parameters, a table, and a list of
//! pass/fail assertions. The same report renders as aligned text, JSON or
//! TSV. Reports contain no timing or other run-dependent data, so repeated
//! invocations with the same arguments are byte-identical.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::Serialize;
use weyl_strata::brute_force::{enumerate, enumerate_cached, GroupTable};
use weyl_strata::exceptional::{
    crosscheck_table, embedded_checksum, embedded_tables, load_tables_from, rows_of,
    table_violations, EllipticRow, ExceptionalType,
};
use weyl_strata::signed::{compare_with_brute_force, strata_checks, strata_table};
use weyl_strata::slodowy::run_slice_suite;
use weyl_strata::weyl::{cyclotomic_factor, Kind, RootSystem};
use weyl_strata::{CheckItem, Error};

/// Bumped whenever the structure of [`Report`] changes.
pub const SCHEMA_VERSION: u32 = 1;
pub const DEFAULT_SEED: u64 = 20_240_601;
/// Environment variable naming an alternative elliptic table file.
pub const TABLE_FILE_ENV: &str = "STRATA_TABLE_FILE";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] Error),
    #[error("serialization failed: {0}")]
    Json(#[from] serde_json::Error),
}

pub type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Tsv,
}

/// Output of one command.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub command: String,
    pub parameters: BTreeMap<String, String>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
    pub assertions: Vec<CheckItem>,
    pub seed: Option<u64>,
}

impl Report {
    fn new(command: &str, columns: &[&str]) -> Self {
        Report {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            parameters: BTreeMap::new(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: vec![],
            assertions: vec![],
            seed: None,
        }
    }

    fn param(&mut self, key: &str, value: impl ToString) {
        self.parameters.insert(key.to_string(), value.to_string());
    }

    fn row(&mut self, cells: Vec<String>) {
        debug_assert_eq!(cells.len(), self.columns.len());
        self.rows.push(cells);
    }

    pub fn passed(&self) -> bool {
        self.assertions.iter().all(|a| a.pass)
    }

    pub fn failures(&self) -> usize {
        self.assertions.iter().filter(|a| !a.pass).count()
    }

    pub fn render(&self, format: Format) -> CliResult<String> {
        Ok(match format {
            Format::Json => serde_json::to_string_pretty(self)? + "\n",
            Format::Tsv => self.render_tsv(),
            Format::Text => self.render_text(),
        })
    }

    fn render_text(&self) -> String {
        let mut out = format!("command: {}\n", self.command);
        for (k, v) in &self.parameters {
            out += &format!("  {k}: {v}\n");
        }
        if let Some(seed) = self.seed {
            out += &format!("  seed: {seed}\n");
        }
        if !self.rows.is_empty() {
            let mut widths: Vec<usize> = self.columns.iter().map(|c| c.chars().count()).collect();
            for r in &self.rows {
                for (w, cell) in widths.iter_mut().zip(r) {
                    *w = (*w).max(cell.chars().count());
                }
            }
            let line = |cells: &[String]| {
                let padded: Vec<String> = cells
                    .iter()
                    .zip(&widths)
                    .map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
                    .collect();
                padded.join("  ").trim_end().to_string() + "\n"
            };
            out += "\n";
            out += &line(&self.columns);
            for r in &self.rows {
                out += &line(r);
            }
        }
        if !self.assertions.is_empty() {
            out += "\n";
            for a in &self.assertions {
                let tag = if a.pass { "PASS" } else { "FAIL" };
                out += &format!("{tag}  {}: {}\n", a.name, a.detail);
            }
        }
        let failed = self.failures();
        out += &format!(
            "\nassertions: {} passed, {failed} failed\n",
            self.assertions.len() - failed
        );
        out
    }

    fn render_tsv(&self) -> String {
        let clean = |s: &str| s.replace(['\t', '\n'], " ");
        let mut out = format!(
            "#schema_version\t{}\n#command\t{}\n",
            self.schema_version, self.command
        );
        for (k, v) in &self.parameters {
            out += &format!("#parameter\t{k}\t{}\n", clean(v));
        }
        if let Some(seed) = self.seed {
            out += &format!("#seed\t{seed}\n");
        }
        out += &(self.columns.join("\t") + "\n");
        for r in &self.rows {
            out += &(r.iter().map(|c| clean(c)).collect::<Vec<_>>().join("\t") + "\n");
        }
        for a in &self.assertions {
            let tag = if a.pass { "PASS" } else { "FAIL" };
            out += &format!(
                "#assertion\t{tag}\t{}\t{}\n",
                clean(&a.name),
                clean(&a.detail)
            );
        }
        out
    }
}

/// Parses `C` with `--rank 3`, or `C3` alone.
pub fn parse_type(ty: &str, rank: Option<usize>) -> CliResult<(Kind, usize)> {
    let ty = ty.trim();
    let (letter, digits) = ty.split_at(ty.chars().next().map_or(0, char::len_utf8));
    let kind: Kind = letter
        .parse()
        .map_err(|_| CliError::Usage(format!("unknown type {ty:?}")))?;
    let embedded = if digits.is_empty() {
        None
    } else {
        Some(
            digits
                .parse::<usize>()
                .map_err(|_| CliError::Usage(format!("bad rank in {ty:?}")))?,
        )
    };
    let n = match (embedded, rank) {
        (Some(a), Some(b)) if a != b => {
            return Err(CliError::Usage(format!(
                "type {ty} conflicts with --rank {b}"
            )))
        }
        (Some(a), _) | (None, Some(a)) => a,
        (None, None) => return Err(CliError::Usage("a rank is required (--rank)".into())),
    };
    if !kind.is_valid_rank(n) {
        return Err(CliError::Usage(format!("{kind}{n} is not a valid type")));
    }
    Ok((kind, n))
}

/// Options shared by the verification targets.
#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub seed: u64,
    pub budget: u64,
    pub opt_in_e7: bool,
    pub cache_dir: Option<PathBuf>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            seed: DEFAULT_SEED,
            budget: weyl_strata::brute_force::DEFAULT_BUDGET,
            opt_in_e7: false,
            cache_dir: None,
        }
    }
}

/// The elliptic tables: the file named by [`TABLE_FILE_ENV`] if set,
/// otherwise the embedded copy. Also returns a description of the source.
pub fn load_tables() -> CliResult<(Vec<EllipticRow>, String)> {
    match std::env::var_os(TABLE_FILE_ENV) {
        Some(path) => {
            let path = PathBuf::from(path);
            let rows = load_tables_from(&path)?;
            Ok((rows, path.display().to_string()))
        }
        None => Ok((
            embedded_tables().to_vec(),
            format!("embedded (sha256 {})", embedded_checksum()),
        )),
    }
}

fn join<T: ToString>(xs: &[T], sep: &str) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(sep)
}

/// Strata of a classical Weyl group.
pub fn cmd_strata(kind: Kind, n: usize) -> CliResult<Report> {
    if !matches!(kind, Kind::B | Kind::C | Kind::D) {
        return Err(CliError::Usage(format!(
            "strata are implemented for types B, C, D; got {kind}"
        )));
    }
    let mut r = Report::new(
        "strata",
        &["label", "basic", "H", "fiber", "predicted", "mu", "classes"],
    );
    r.param("type", kind);
    r.param("rank", n);
    for row in strata_table(kind, n)? {
        r.row(vec![
            row.label.to_string(),
            if row.basic { "yes" } else { "no" }.into(),
            row.h_type.to_string(),
            row.fiber_size().to_string(),
            row.predicted_size().to_string(),
            join(&row.mu_multiset, ","),
            join(&row.classes, " "),
        ]);
    }
    r.assertions = strata_checks(kind, n)?.items;
    Ok(r)
}

/// Elliptic classes: the stored table for exceptional types, computed
/// elliptic strata for classical ones.
pub fn cmd_elliptic(kind: Kind, n: usize) -> CliResult<Report> {
    if let Some(group) = ExceptionalType::from_kind(kind, n) {
        let (rows, source) = load_tables()?;
        let mut r = Report::new(
            "elliptic",
            &[
                "l",
                "charpoly",
                "gamma",
                "springer",
                "H",
                "p_C",
                "C_ex",
                "predicted_fiber",
            ],
        );
        r.param("type", group);
        r.param("tables", source);
        let rows = rows_of(&rows, group);
        for row in &rows {
            r.row(vec![
                row.min_length.to_string(),
                row.charpoly_label(),
                row.gamma_name.clone(),
                format!("{}_{}", row.springer_rep.0, row.springer_rep.1),
                row.h_type.to_string(),
                row.p_c.to_string(),
                if row.is_c_ex { "yes" } else { "no" }.into(),
                row.predicted_fiber_size().to_string(),
            ]);
        }
        let bad: Vec<String> = rows.iter().flat_map(EllipticRow::violations).collect();
        r.assertions.push(CheckItem::new(
            format!("{group}: row invariants"),
            bad.is_empty(),
            if bad.is_empty() {
                format!("{} rows", rows.len())
            } else {
                bad.join("; ")
            },
        ));
        r.assertions.push(CheckItem::new(
            format!("{group}: row count"),
            rows.len() == group.expected_rows(),
            format!("{} rows, expected {}", rows.len(), group.expected_rows()),
        ));
        return Ok(r);
    }
    let mut r = Report::new(
        "elliptic",
        &["class", "label", "H", "fiber", "predicted", "mu"],
    );
    r.param("type", kind);
    r.param("rank", n);
    if kind == Kind::A {
        // the Coxeter class: an (n+1)-cycle, regular unipotent label
        let rs = RootSystem::new(kind, n)?;
        let cox = rs.coxeter_element();
        let poly = cyclotomic_factor(&weyl_strata::weyl::char_poly(&cox))?;
        r.param("charpoly", poly);
        r.row(vec![
            format!("({})", n + 1),
            (n + 1).to_string(),
            "{1}".into(),
            "1".into(),
            "1".into(),
            "0".into(),
        ]);
        return Ok(r);
    }
    let rows = strata_table(kind, n)?;
    let mut basic = 0;
    for row in rows.iter().filter(|r| r.basic) {
        basic += 1;
        let elliptic: Vec<String> = row
            .classes
            .iter()
            .filter(|c| c.is_elliptic())
            .map(|c| c.to_string())
            .collect();
        r.row(vec![
            elliptic.join(" "),
            row.label.to_string(),
            row.h_type.to_string(),
            row.fiber_size().to_string(),
            row.predicted_size().to_string(),
            join(&row.mu_multiset, ","),
        ]);
    }
    let elliptic_classes = rows
        .iter()
        .flat_map(|r| &r.classes)
        .filter(|c| c.is_elliptic())
        .count();
    r.assertions.push(CheckItem::new(
        format!("{kind}{n}: one elliptic class per basic stratum"),
        elliptic_classes == basic && r.rows.iter().all(|row| !row[0].contains(' ')),
        format!("{elliptic_classes} elliptic classes, {basic} basic strata"),
    ));
    Ok(r)
}

fn group_table(kind: Kind, n: usize, opts: &VerifyOptions) -> CliResult<GroupTable> {
    let rs = RootSystem::new(kind, n)?;
    Ok(match &opts.cache_dir {
        Some(dir) => enumerate_cached(&rs, opts.budget, dir)?,
        None => enumerate(&rs, opts.budget)?,
    })
}

fn verify_lengths(r: &mut Report, group: ExceptionalType, opts: &VerifyOptions) -> CliResult<()> {
    match group {
        ExceptionalType::E8 => {
            return Err(CliError::Usage(
                "E8 is too large to enumerate; use G2, F4, E6 or E7".into(),
            ))
        }
        ExceptionalType::E7 if !opts.opt_in_e7 => {
            return Err(CliError::Usage(
                "E7 enumerates 2,903,040 elements (several hundred MB); pass --opt-in-e7".into(),
            ))
        }
        _ => {}
    }
    let (rows, _) = load_tables()?;
    let t = group_table(group.kind(), group.rank(), opts)?;
    let c = crosscheck_table(group, &rows, &t)?;
    let target = format!("lengths:{group}");
    for (q, v) in [
        ("group order", c.group_order),
        ("conjugacy classes", c.class_count),
        ("elliptic classes", c.elliptic_count),
    ] {
        r.row(vec![target.clone(), q.into(), v.to_string()]);
    }
    let matched = c
        .items
        .iter()
        .filter(|i| i.name.starts_with("row ") && i.pass)
        .count();
    let listed = rows_of(&rows, group).len();
    r.row(vec![
        target.clone(),
        "rows matched".into(),
        format!("{matched}/{listed}"),
    ]);
    for mut item in c.items {
        item.name = format!("{group}: {}", item.name);
        r.assertions.push(item);
    }
    Ok(())
}

fn verify_tables(r: &mut Report) -> CliResult<()> {
    let (rows, _) = load_tables()?;
    let bad = table_violations(&rows);
    r.row(vec!["tables".into(), "rows".into(), rows.len().to_string()]);
    r.row(vec![
        "tables".into(),
        "violations".into(),
        bad.len().to_string(),
    ]);
    for group in ExceptionalType::ALL {
        let mine: Vec<&String> = bad
            .iter()
            .filter(|v| v.starts_with(&group.to_string()))
            .collect();
        r.assertions.push(CheckItem::new(
            format!("{group}: table consistency"),
            mine.is_empty(),
            if mine.is_empty() {
                format!("{} rows", rows_of(&rows, group).len())
            } else {
                mine.iter()
                    .map(|s| s.as_str())
                    .collect::<Vec<_>>()
                    .join("; ")
            },
        ));
    }
    let global: Vec<&String> = bad
        .iter()
        .filter(|v| {
            !ExceptionalType::ALL
                .iter()
                .any(|g| v.starts_with(&g.to_string()))
        })
        .collect();
    r.assertions.push(CheckItem::new(
        "tables: single folded class",
        global.is_empty(),
        if global.is_empty() {
            "E8, l = 44".to_string()
        } else {
            global
                .iter()
                .map(|s| s.as_str())
                .collect::<Vec<_>>()
                .join("; ")
        },
    ));
    Ok(())
}

fn verify_classical(r: &mut Report, n: usize, opts: &VerifyOptions) -> CliResult<()> {
    if !(2..=8).contains(&n) {
        return Err(CliError::Usage(format!(
            "classical-oracle rank must be in 2..=8, got {n}"
        )));
    }
    let target = format!("classical-oracle:{n}");
    for kind in [Kind::B, Kind::C, Kind::D] {
        if !kind.is_valid_rank(n) {
            continue;
        }
        let cmp = compare_with_brute_force(kind, n, opts.budget)?;
        r.row(vec![
            target.clone(),
            format!("{kind}{n} group order"),
            cmp.group_order.to_string(),
        ]);
        r.row(vec![
            target.clone(),
            format!("{kind}{n} classes"),
            cmp.rows.len().to_string(),
        ]);
        r.assertions.extend(cmp.items);
        let s = strata_checks(kind, n)?;
        r.row(vec![
            target.clone(),
            format!("{kind}{n} strata"),
            s.strata.to_string(),
        ]);
        r.assertions.extend(s.items);
    }
    Ok(())
}

fn verify_slodowy(r: &mut Report, opts: &VerifyOptions) -> CliResult<()> {
    let rep = run_slice_suite(opts.seed);
    r.seed = Some(opts.seed);
    let t = "slodowy".to_string();
    let mut kv = |q: String, v: String| r.rows.push(vec![t.clone(), q, v]);
    kv("samples".into(), rep.total_samples.to_string());
    for (k, v) in &rep.samples_by_kind {
        kv(format!("samples {k}"), v.to_string());
    }
    for (k, v) in &rep.dim_histogram {
        kv(format!("centralizer dim {k}"), v.to_string());
    }
    for (k, v) in &rep.class_counts {
        kv(format!("class {k}"), v.to_string());
    }
    for (k, v) in &rep.piece_counts {
        kv(format!("piece {k}"), v.to_string());
    }
    kv("in X~'".into(), rep.in_xtilde.to_string());
    kv("in X''".into(), rep.in_xdoubleprime.to_string());
    kv(
        "pi fibers checked".into(),
        rep.preimages_checked.to_string(),
    );
    kv(
        "negated-variant disagreements".into(),
        rep.negated_variant_disagreements.to_string(),
    );
    for f in &rep.families {
        kv(
            format!("family {:?} {}", f.family, f.element),
            format!("dim {}", f.centralizer_dim),
        );
    }
    for v in &rep.violations {
        kv("violation".into(), v.clone());
    }
    r.assertions.extend(rep.checks);
    Ok(())
}

/// A verification target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Target {
    Lengths(ExceptionalType),
    Tables,
    ClassicalOracle(usize),
    Slodowy,
    All,
}

impl std::str::FromStr for Target {
    type Err = CliError;

    fn from_str(s: &str) -> CliResult<Self> {
        let bad = || CliError::Usage(format!("unknown verify target {s:?}"));
        Ok(match s.split_once(':') {
            Some(("lengths", g)) => Target::Lengths(g.parse().map_err(|_| bad())?),
            Some(("classical-oracle", n)) => Target::ClassicalOracle(n.parse().map_err(|_| bad())?),
            None if s == "tables" => Target::Tables,
            None if s == "slodowy" => Target::Slodowy,
            None if s == "all" => Target::All,
            _ => return Err(bad()),
        })
    }
}

pub fn cmd_verify(target: &Target, opts: &VerifyOptions) -> CliResult<Report> {
    let mut r = Report::new("verify", &["target", "quantity", "value"]);
    r.param("budget", opts.budget);
    r.param("opt_in_e7", opts.opt_in_e7);
    match target {
        Target::Lengths(g) => {
            r.param("target", format!("lengths:{g}"));
            verify_lengths(&mut r, *g, opts)?;
        }
        Target::Tables => {
            r.param("target", "tables");
            verify_tables(&mut r)?;
        }
        Target::ClassicalOracle(n) => {
            r.param("target", format!("classical-oracle:{n}"));
            verify_classical(&mut r, *n, opts)?;
        }
        Target::Slodowy => {
            r.param("target", "slodowy");
            verify_slodowy(&mut r, opts)?;
        }
        Target::All => {
            r.param("target", "all");
            verify_tables(&mut r)?;
            for g in [
                ExceptionalType::G2,
                ExceptionalType::F4,
                ExceptionalType::E6,
            ] {
                verify_lengths(&mut r, g, opts)?;
            }
            if opts.opt_in_e7 {
                verify_lengths(&mut r, ExceptionalType::E7, opts)?;
            }
            for n in 2..=5 {
                verify_classical(&mut r, n, opts)?;
            }
            verify_slodowy(&mut r, opts)?;
        }
    }
    Ok(r)
}

/// Cache directory argument check, kept separate for testing.
pub fn check_cache_dir(dir: &Path) -> CliResult<()> {
    if dir.exists() && !dir.is_dir() {
        return Err(CliError::Usage(format!(
            "{} is not a directory",
            dir.display()
        )));
    }
    Ok(())
}
