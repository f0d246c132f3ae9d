//! Elliptic conjugacy classes of the exceptional Weyl groups.
//!
//! The rows live in `data/elliptic_tables.tsv` (format documented in the
//! file header) next to a SHA-256 sidecar. The embedded copy is checked
//! against its sidecar the first time it is read.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::brute_force::{conjugacy_classes, elliptic_classes, enumerate, GroupTable};
use crate::check::CheckItem;
use crate::error::{Error, Result};
use crate::signed::CentralizerType;
use crate::weyl::{CyclotomicProduct, Kind, RootSystem};

const EMBEDDED_TABLE: &str = include_str!("../../data/elliptic_tables.tsv");
const EMBEDDED_CHECKSUM: &str = include_str!("../../data/elliptic_tables.tsv.sha256");

/// The five exceptional types.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ExceptionalType {
    G2,
    F4,
    E6,
    E7,
    E8,
}

impl ExceptionalType {
    pub const ALL: [ExceptionalType; 5] = [
        ExceptionalType::G2,
        ExceptionalType::F4,
        ExceptionalType::E6,
        ExceptionalType::E7,
        ExceptionalType::E8,
    ];

    pub fn kind(self) -> Kind {
        match self {
            ExceptionalType::G2 => Kind::G,
            ExceptionalType::F4 => Kind::F,
            _ => Kind::E,
        }
    }

    pub fn rank(self) -> usize {
        match self {
            ExceptionalType::G2 => 2,
            ExceptionalType::F4 => 4,
            ExceptionalType::E6 => 6,
            ExceptionalType::E7 => 7,
            ExceptionalType::E8 => 8,
        }
    }

    pub fn from_kind(kind: Kind, rank: usize) -> Option<Self> {
        match (kind, rank) {
            (Kind::G, 2) => Some(ExceptionalType::G2),
            (Kind::F, 4) => Some(ExceptionalType::F4),
            (Kind::E, 6) => Some(ExceptionalType::E6),
            (Kind::E, 7) => Some(ExceptionalType::E7),
            (Kind::E, 8) => Some(ExceptionalType::E8),
            _ => None,
        }
    }

    /// Number of elliptic classes listed for this type.
    pub fn expected_rows(self) -> usize {
        match self {
            ExceptionalType::G2 => 3,
            ExceptionalType::F4 => 9,
            ExceptionalType::E6 => 5,
            ExceptionalType::E7 => 12,
            ExceptionalType::E8 => 30,
        }
    }
}

impl fmt::Display for ExceptionalType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind(), self.rank())
    }
}

impl FromStr for ExceptionalType {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.trim().to_ascii_uppercase().as_str() {
            "G2" => Ok(ExceptionalType::G2),
            "F4" => Ok(ExceptionalType::F4),
            "E6" => Ok(ExceptionalType::E6),
            "E7" => Ok(ExceptionalType::E7),
            "E8" => Ok(ExceptionalType::E8),
            other => Err(format!("not an exceptional type: {other:?}")),
        }
    }
}

/// Prime marks separating two classes with equal length and characteristic
/// polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Disambiguator {
    Prime,
    DoublePrime,
}

impl fmt::Display for Disambiguator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Disambiguator::Prime => write!(f, "'"),
            Disambiguator::DoublePrime => write!(f, "''"),
        }
    }
}

/// One elliptic class of an exceptional Weyl group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EllipticRow {
    pub group: ExceptionalType,
    pub min_length: u32,
    pub charpoly: CyclotomicProduct,
    pub disambiguator: Option<Disambiguator>,
    pub gamma_name: String,
    /// `(degree, subscript)` of the Springer representation.
    pub springer_rep: (u32, u32),
    pub h_type: CentralizerType,
    pub p_c: u8,
    pub is_c_ex: bool,
}

impl EllipticRow {
    /// `Π (n_j + 1)` over the centralizer type, or 3 for the folded class.
    pub fn predicted_fiber_size(&self) -> usize {
        if self.is_c_ex {
            3
        } else {
            self.h_type.index_set_size()
        }
    }

    pub fn charpoly_label(&self) -> String {
        match self.disambiguator {
            Some(d) => format!("({}){d}", self.charpoly),
            None => self.charpoly.to_string(),
        }
    }

    /// Row-level consistency checks; returns a description of each failure.
    pub fn violations(&self) -> Vec<String> {
        let mut out = vec![];
        let r = self.group.rank();
        if self.charpoly.degree() != r {
            out.push(format!("degree {} != rank {r}", self.charpoly.degree()));
        }
        if self.charpoly.multiplicity(1) != 0 {
            out.push("has a Phi1 factor".into());
        }
        let l = self.min_length as usize;
        if l < r || !(l - r).is_multiple_of(2) || self.springer_rep.1 as usize != (l - r) / 2 {
            out.push(format!(
                "subscript {} != (l - r)/2 with l = {l}, r = {r}",
                self.springer_rep.1
            ));
        }
        if !matches!(self.p_c, 0 | 2 | 3) {
            out.push(format!("p_C = {} not in {{0, 2, 3}}", self.p_c));
        }
        out
    }
}

impl fmt::Display for EllipticRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}; {}; {}; {}_{}; {}",
            self.min_length,
            self.charpoly_label(),
            self.gamma_name,
            self.springer_rep.0,
            self.springer_rep.1,
            self.h_type
        )
    }
}

fn parse_row(line_no: usize, line: &str) -> Result<EllipticRow> {
    let err = |message: String| Error::TableFormat {
        line: line_no,
        message,
    };
    let fields: Vec<&str> = line.split('\t').collect();
    if fields.len() != 9 {
        return Err(err(format!("expected 9 fields, found {}", fields.len())));
    }
    let group: ExceptionalType = fields[0].parse().map_err(err)?;
    let min_length = fields[1]
        .parse()
        .map_err(|_| err(format!("bad length {:?}", fields[1])))?;
    let charpoly: CyclotomicProduct = fields[2].parse().map_err(err)?;
    let disambiguator = match fields[3] {
        "-" => None,
        "'" => Some(Disambiguator::Prime),
        "''" => Some(Disambiguator::DoublePrime),
        other => return Err(err(format!("bad tag {other:?}"))),
    };
    let springer_rep = fields[5]
        .split_once('_')
        .and_then(|(d, n)| Some((d.parse().ok()?, n.parse().ok()?)))
        .ok_or_else(|| err(format!("bad Springer label {:?}", fields[5])))?;
    let h_type: CentralizerType = fields[6].parse().map_err(err)?;
    let p_c = fields[7]
        .parse()
        .map_err(|_| err(format!("bad p_C {:?}", fields[7])))?;
    let is_c_ex = match fields[8] {
        "0" => false,
        "1" => true,
        other => return Err(err(format!("bad c_ex flag {other:?}"))),
    };
    Ok(EllipticRow {
        group,
        min_length,
        charpoly,
        disambiguator,
        gamma_name: fields[4].to_string(),
        springer_rep,
        h_type,
        p_c,
        is_c_ex,
    })
}

/// Parses table text: `#` comment lines, one header line, then rows.
pub fn parse_tables(text: &str) -> Result<Vec<EllipticRow>> {
    let mut rows = vec![];
    let mut header_seen = false;
    for (i, line) in text.lines().enumerate() {
        let line = line.trim_end_matches('\r');
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        if !header_seen {
            if !line.starts_with("type\t") {
                return Err(Error::TableFormat {
                    line: i + 1,
                    message: "missing header line".into(),
                });
            }
            header_seen = true;
            continue;
        }
        rows.push(parse_row(i + 1, line)?);
    }
    Ok(rows)
}

pub fn checksum_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

fn verify_checksum(what: &str, bytes: &[u8], expected: &str) -> Result<()> {
    let found = checksum_hex(bytes);
    let expected = expected.trim();
    if found != expected {
        return Err(Error::Checksum {
            what: what.to_string(),
            expected: expected.to_string(),
            found,
        });
    }
    Ok(())
}

/// The embedded tables (checksum-verified).
pub fn embedded_tables() -> &'static [EllipticRow] {
    static TABLES: OnceLock<Vec<EllipticRow>> = OnceLock::new();
    TABLES.get_or_init(|| {
        verify_checksum(
            "embedded elliptic table",
            EMBEDDED_TABLE.as_bytes(),
            EMBEDDED_CHECKSUM,
        )
        .and_then(|()| parse_tables(EMBEDDED_TABLE))
        .expect("embedded elliptic table is corrupt")
    })
}

pub fn embedded_checksum() -> &'static str {
    EMBEDDED_CHECKSUM.trim()
}

/// Loads tables from a file. When `<path>.sha256` exists the file must match it.
pub fn load_tables_from(path: &Path) -> Result<Vec<EllipticRow>> {
    let bytes = std::fs::read(path)?;
    let mut sidecar = path.as_os_str().to_owned();
    sidecar.push(".sha256");
    let sidecar = Path::new(&sidecar);
    if sidecar.exists() {
        verify_checksum(
            &path.display().to_string(),
            &bytes,
            &std::fs::read_to_string(sidecar)?,
        )?;
    }
    let text = String::from_utf8(bytes).map_err(|e| Error::TableFormat {
        line: 0,
        message: e.to_string(),
    })?;
    parse_tables(&text)
}

/// Rows of one type from the embedded tables, in file order.
pub fn table(group: ExceptionalType) -> Vec<EllipticRow> {
    rows_of(embedded_tables(), group)
}

pub fn rows_of(rows: &[EllipticRow], group: ExceptionalType) -> Vec<EllipticRow> {
    rows.iter().filter(|r| r.group == group).cloned().collect()
}

pub fn predicted_fiber_size(row: &EllipticRow) -> usize {
    row.predicted_fiber_size()
}

/// Whole-table checks: row invariants, row counts, the unique folded class,
/// and the expected collisions of minimal lengths.
pub fn table_violations(rows: &[EllipticRow]) -> Vec<String> {
    let mut out = vec![];
    for r in rows {
        for v in r.violations() {
            out.push(format!("{} row {r}: {v}", r.group));
        }
    }
    for g in ExceptionalType::ALL {
        let n = rows.iter().filter(|r| r.group == g).count();
        if n != g.expected_rows() {
            out.push(format!("{g}: {n} rows, expected {}", g.expected_rows()));
        }
        let mut by_length: BTreeMap<u32, usize> = BTreeMap::new();
        for r in rows.iter().filter(|r| r.group == g) {
            *by_length.entry(r.min_length).or_default() += 1;
        }
        let repeated: Vec<u32> = by_length
            .iter()
            .filter(|(_, &c)| c > 1)
            .map(|(&l, _)| l)
            .collect();
        let allowed: &[u32] = match g {
            ExceptionalType::F4 => &[10],
            ExceptionalType::E8 => &[16, 22, 24, 26, 44, 46],
            _ => &[],
        };
        if repeated != allowed {
            out.push(format!(
                "{g}: repeated minimal lengths {repeated:?}, expected {allowed:?}"
            ));
        }
    }
    let c_ex: Vec<&EllipticRow> = rows.iter().filter(|r| r.is_c_ex).collect();
    let ok = c_ex.len() == 1 && {
        let r = c_ex[0];
        r.group == ExceptionalType::E8
            && r.min_length == 44
            && r.charpoly == CyclotomicProduct::from_factors([(2, 4), (6, 2)])
            && r.h_type == CentralizerType::new([1, 1])
    };
    if !ok {
        out.push(format!(
            "expected exactly one folded class (E8, l = 44, Phi2^4*Phi6^2, C1xC1), found {}",
            c_ex.len()
        ));
    }
    out
}

/// Result of comparing a table with brute-force enumeration.
#[derive(Debug, Clone, Serialize)]
pub struct Crosscheck {
    pub group: ExceptionalType,
    pub group_order: usize,
    pub class_count: usize,
    pub elliptic_count: usize,
    pub items: Vec<CheckItem>,
}

impl Crosscheck {
    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.pass)
    }

    pub fn failures(&self) -> Vec<&CheckItem> {
        self.items.iter().filter(|i| !i.pass).collect()
    }
}

/// Enumerates the group and compares its elliptic classes with `rows`:
/// class count, the multiset of (characteristic polynomial, minimal length),
/// and `μ = 0` on every elliptic class.
pub fn crosscheck(group: ExceptionalType, rows: &[EllipticRow], budget: u64) -> Result<Crosscheck> {
    let rs = RootSystem::new(group.kind(), group.rank())?;
    crosscheck_table(group, rows, &enumerate(&rs, budget)?)
}

/// [`crosscheck`] against an already enumerated group.
pub fn crosscheck_table(
    group: ExceptionalType,
    rows: &[EllipticRow],
    t: &GroupTable,
) -> Result<Crosscheck> {
    if (t.kind(), t.rank()) != (group.kind(), group.rank()) {
        return Err(Error::InvalidType {
            kind: t.kind(),
            rank: t.rank(),
        });
    }
    let classes = conjugacy_classes(t);
    let elliptic = elliptic_classes(&classes);
    let rows: Vec<&EllipticRow> = rows.iter().filter(|r| r.group == group).collect();

    let mut observed: BTreeMap<(CyclotomicProduct, u32), usize> = BTreeMap::new();
    for c in &elliptic {
        *observed
            .entry((c.factors.clone(), u32::from(c.min_length)))
            .or_default() += 1;
    }
    let mut expected: BTreeMap<(CyclotomicProduct, u32), usize> = BTreeMap::new();
    for r in &rows {
        *expected
            .entry((r.charpoly.clone(), r.min_length))
            .or_default() += 1;
    }

    let mut items = vec![CheckItem {
        name: "elliptic class count".into(),
        pass: elliptic.len() == rows.len(),
        detail: format!("{} enumerated, {} in table", elliptic.len(), rows.len()),
    }];
    items.push(CheckItem {
        name: "mu = 0 on elliptic classes".into(),
        pass: elliptic
            .iter()
            .all(|c| c.mu == 0 && c.factors.multiplicity(1) == 0),
        detail: format!("{} classes", elliptic.len()),
    });
    for r in &rows {
        let key = (r.charpoly.clone(), r.min_length);
        let want = expected[&key];
        let got = observed.get(&key).copied().unwrap_or(0);
        items.push(CheckItem {
            name: format!("row {}; {}", r.min_length, r.charpoly_label()),
            pass: got == want,
            detail: if want > 1 {
                format!("{got} classes share this pair, table lists {want}")
            } else {
                format!("{got} matching class(es)")
            },
        });
    }
    for (key, &got) in &observed {
        if !expected.contains_key(key) {
            items.push(CheckItem {
                name: format!("unlisted class {}; {}", key.1, key.0),
                pass: false,
                detail: format!("{got} enumerated class(es) with no table row"),
            });
        }
    }
    Ok(Crosscheck {
        group,
        group_order: t.len(),
        class_count: classes.len(),
        elliptic_count: elliptic.len(),
        items,
    })
}
