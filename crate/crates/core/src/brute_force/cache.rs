//! On-disk cache of enumerated group tables.
//!
//! Layout (all integers little-endian):
//!
//! ```text
//! magic        4 bytes  "WSGT"
//! format       u32      CACHE_FORMAT_VERSION
//! code_len     u16      length of the crate version string
//! code         bytes    crate version (CARGO_PKG_VERSION)
//! kind         u8       type letter, ASCII
//! rank         u8
//! order        u64      number of elements
//! lengths      u16 × order
//! matrices     i8 × order × rank²   (row-major, BFS index order)
//! checksum     32 bytes SHA-256 of everything above
//! ```
//!
//! A file is only accepted when the checksum verifies and the
//! (type, rank, code version) key matches the request.

use std::fs;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

use super::{enumerate, GroupTable};
use crate::error::{Error, Result};
use crate::weyl::{Kind, RootSystem};

pub const CACHE_FORMAT_VERSION: u32 = 1;
const MAGIC: &[u8; 4] = b"WSGT";
const CODE_VERSION: &str = env!("CARGO_PKG_VERSION");

pub fn cache_file_name(kind: Kind, rank: usize) -> String {
    format!("{kind}{rank}-v{CODE_VERSION}.wsgt")
}

/// Writes `table` into `dir`, returning the file path.
pub fn save_table(table: &GroupTable, dir: &Path) -> Result<PathBuf> {
    fs::create_dir_all(dir)?;
    let mut buf = Vec::with_capacity(table.arena.len() + 2 * table.len() + 64);
    buf.extend_from_slice(MAGIC);
    buf.extend_from_slice(&CACHE_FORMAT_VERSION.to_le_bytes());
    buf.extend_from_slice(&(CODE_VERSION.len() as u16).to_le_bytes());
    buf.extend_from_slice(CODE_VERSION.as_bytes());
    buf.push(table.kind.letter() as u8);
    buf.push(table.rank as u8);
    buf.extend_from_slice(&(table.len() as u64).to_le_bytes());
    for l in &table.lengths {
        buf.extend_from_slice(&l.to_le_bytes());
    }
    buf.extend(table.arena.iter().map(|&x| x as u8));
    let digest = Sha256::digest(&buf);
    buf.extend_from_slice(&digest);
    let path = dir.join(cache_file_name(table.kind, table.rank));
    fs::write(&path, buf)?;
    Ok(path)
}

struct Reader<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Reader<'a> {
    fn take(&mut self, n: usize) -> Result<&'a [u8]> {
        let end = self
            .pos
            .checked_add(n)
            .filter(|&e| e <= self.bytes.len())
            .ok_or_else(|| Error::Cache("truncated file".into()))?;
        let out = &self.bytes[self.pos..end];
        self.pos = end;
        Ok(out)
    }

    fn u8(&mut self) -> Result<u8> {
        Ok(self.take(1)?[0])
    }

    fn u16(&mut self) -> Result<u16> {
        Ok(u16::from_le_bytes(self.take(2)?.try_into().unwrap()))
    }

    fn u32(&mut self) -> Result<u32> {
        Ok(u32::from_le_bytes(self.take(4)?.try_into().unwrap()))
    }

    fn u64(&mut self) -> Result<u64> {
        Ok(u64::from_le_bytes(self.take(8)?.try_into().unwrap()))
    }
}

/// Loads the cached table for `rs` from `dir`. Returns `Ok(None)` when no
/// file exists for the key.
pub fn load_table(rs: &RootSystem, dir: &Path) -> Result<Option<GroupTable>> {
    let path = dir.join(cache_file_name(rs.kind(), rs.rank()));
    if !path.exists() {
        return Ok(None);
    }
    let bytes = fs::read(&path)?;
    if bytes.len() < 32 {
        return Err(Error::Cache(format!("{} is truncated", path.display())));
    }
    let (body, stored) = bytes.split_at(bytes.len() - 32);
    let digest = Sha256::digest(body);
    if digest.as_slice() != stored {
        return Err(Error::Checksum {
            what: path.display().to_string(),
            expected: hex::encode(stored),
            found: hex::encode(digest),
        });
    }
    let mut r = Reader {
        bytes: body,
        pos: 0,
    };
    if r.take(4)? != MAGIC {
        return Err(Error::Cache("bad magic".into()));
    }
    let format = r.u32()?;
    if format != CACHE_FORMAT_VERSION {
        return Err(Error::Cache(format!("unsupported format version {format}")));
    }
    let code_len = r.u16()? as usize;
    let code = r.take(code_len)?;
    if code != CODE_VERSION.as_bytes() {
        return Err(Error::Cache(format!(
            "written by version {}, this is {CODE_VERSION}",
            String::from_utf8_lossy(code)
        )));
    }
    let kind = r.u8()? as char;
    let rank = r.u8()? as usize;
    if kind != rs.kind().letter() || rank != rs.rank() {
        return Err(Error::Cache(format!(
            "file holds {kind}{rank}, wanted {}",
            rs.name()
        )));
    }
    let order = r.u64()?;
    if order != rs.order() {
        return Err(Error::Cache(format!(
            "file holds {order} elements, expected {}",
            rs.order()
        )));
    }
    let order = order as usize;
    let mut table = GroupTable::empty(rs);
    table.lengths = (0..order).map(|_| r.u16()).collect::<Result<_>>()?;
    table.arena = r
        .take(order * rank * rank)?
        .iter()
        .map(|&b| b as i8)
        .collect();
    if r.pos != body.len() {
        return Err(Error::Cache("trailing bytes".into()));
    }
    table.rebuild_index();
    table.locate_generators();
    Ok(Some(table))
}

/// Loads the table from `dir` when present, otherwise enumerates and stores it.
pub fn enumerate_cached(rs: &RootSystem, budget: u64, dir: &Path) -> Result<GroupTable> {
    if let Some(t) = load_table(rs, dir)? {
        return Ok(t);
    }
    let t = enumerate(rs, budget)?;
    save_table(&t, dir)?;
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brute_force::DEFAULT_BUDGET;

    #[test]
    fn round_trip_and_corruption() {
        let dir = tempfile::tempdir().unwrap();
        let rs = RootSystem::new(Kind::B, 3).unwrap();
        assert!(load_table(&rs, dir.path()).unwrap().is_none());
        let t = enumerate_cached(&rs, DEFAULT_BUDGET, dir.path()).unwrap();
        let back = load_table(&rs, dir.path()).unwrap().unwrap();
        assert_eq!(back.arena, t.arena);
        assert_eq!(back.lengths, t.lengths);
        assert_eq!(back.generators, t.generators);
        assert_eq!(
            back.index_of(&rs.coxeter_element()),
            t.index_of(&rs.coxeter_element())
        );

        let path = dir.path().join(cache_file_name(Kind::B, 3));
        let mut bytes = fs::read(&path).unwrap();
        bytes[20] ^= 1;
        fs::write(&path, bytes).unwrap();
        assert!(matches!(
            load_table(&rs, dir.path()),
            Err(Error::Checksum { .. })
        ));
    }
}
