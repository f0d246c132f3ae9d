//! Full enumeration of small Weyl groups, used as an oracle.
//!
//! Elements are stored as packed `i8` matrices in one arena and indexed by a
//! hash table keyed on the row-major entries. Indexing is the BFS insertion
//! order from the identity, applying generators `s_1, ..., s_r` in order on
//! the right, so index order is non-decreasing in Coxeter length.

mod cache;

use std::hash::{BuildHasher, BuildHasherDefault, DefaultHasher};

use hashbrown::HashTable;

use crate::error::{Error, Result};
use crate::weyl::{
    char_poly, cyclotomic_factor, mu, CyclotomicProduct, IntPolynomial, Kind, RootSystem,
    WeylElement,
};

pub use cache::{cache_file_name, enumerate_cached, load_table, save_table, CACHE_FORMAT_VERSION};

/// Default cap on the group order accepted by [`enumerate`].
pub const DEFAULT_BUDGET: u64 = 3_000_000;

type Hasher = BuildHasherDefault<DefaultHasher>;

/// Every element of a Weyl group with its Coxeter length.
pub struct GroupTable {
    kind: Kind,
    rank: usize,
    cartan: Vec<Vec<i8>>,
    arena: Vec<i8>,
    lengths: Vec<u16>,
    index: HashTable<u32>,
    hasher: Hasher,
    generators: Vec<u32>,
}

impl std::fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("GroupTable")
            .field("type", &format!("{}{}", self.kind, self.rank))
            .field("order", &self.len())
            .finish()
    }
}

impl GroupTable {
    fn empty(rs: &RootSystem) -> Self {
        let cartan = rs
            .cartan()
            .iter()
            .map(|row| row.iter().map(|&x| x as i8).collect())
            .collect();
        GroupTable {
            kind: rs.kind(),
            rank: rs.rank(),
            cartan,
            arena: vec![],
            lengths: vec![],
            index: HashTable::new(),
            hasher: Hasher::default(),
            generators: vec![],
        }
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.lengths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lengths.is_empty()
    }

    fn stride(&self) -> usize {
        self.rank * self.rank
    }

    fn raw(&self, idx: u32) -> &[i8] {
        let s = self.stride();
        &self.arena[idx as usize * s..(idx as usize + 1) * s]
    }

    pub fn element(&self, idx: u32) -> WeylElement {
        WeylElement::from_entries(
            self.rank,
            self.raw(idx).iter().map(|&x| i64::from(x)).collect(),
        )
    }

    pub fn length(&self, idx: u32) -> u16 {
        self.lengths[idx as usize]
    }

    pub fn lengths(&self) -> &[u16] {
        &self.lengths
    }

    /// Indices of the simple reflections, in Bourbaki order.
    pub fn generators(&self) -> &[u32] {
        &self.generators
    }

    pub fn max_length(&self) -> u16 {
        self.lengths.iter().copied().max().unwrap_or(0)
    }

    fn hash_of(&self, entries: &[i8]) -> u64 {
        self.hasher.hash_one(entries)
    }

    fn lookup_raw(&self, entries: &[i8]) -> Option<u32> {
        let h = self.hash_of(entries);
        self.index.find(h, |&i| self.raw(i) == entries).copied()
    }

    /// Index of a matrix, if it belongs to the group.
    pub fn index_of(&self, w: &WeylElement) -> Option<u32> {
        if w.rank() != self.rank {
            return None;
        }
        let packed: Option<Vec<i8>> = w.entries().iter().map(|&x| i8::try_from(x).ok()).collect();
        self.lookup_raw(&packed?)
    }

    fn push(&mut self, entries: &[i8], length: u16) -> u32 {
        let idx = self.lengths.len() as u32;
        self.arena.extend_from_slice(entries);
        self.lengths.push(length);
        let h = self.hash_of(entries);
        let arena = &self.arena;
        let hasher = &self.hasher;
        let s = self.stride();
        self.index.insert_unique(h, idx, |&i| {
            hasher.hash_one(&arena[i as usize * s..(i as usize + 1) * s])
        });
        idx
    }

    /// `out = w · s_i`: column `j` becomes `w_j − A[i][j] · w_i`.
    fn right_multiply(&self, w: &[i8], i: usize, out: &mut [i8]) {
        let n = self.rank;
        out.copy_from_slice(w);
        for (j, &a) in self.cartan[i].iter().enumerate() {
            if a != 0 {
                for r in 0..n {
                    out[r * n + j] -= a * w[r * n + i];
                }
            }
        }
    }

    /// `out = s_i · w`: row `i` becomes `w_i − Σ_k A[i][k] w_k`.
    fn left_multiply(&self, w: &[i8], i: usize, out: &mut [i8]) {
        let n = self.rank;
        out.copy_from_slice(w);
        for (k, &a) in self.cartan[i].iter().enumerate() {
            if a != 0 {
                for c in 0..n {
                    out[i * n + c] -= a * w[k * n + c];
                }
            }
        }
    }

    fn rebuild_index(&mut self) {
        let s = self.stride();
        let mut index = HashTable::with_capacity(self.len());
        for idx in 0..self.len() as u32 {
            let entries = &self.arena[idx as usize * s..(idx as usize + 1) * s];
            let h = self.hasher.hash_one(entries);
            let arena = &self.arena;
            let hasher = &self.hasher;
            index.insert_unique(h, idx, |&i: &u32| {
                hasher.hash_one(&arena[i as usize * s..(i as usize + 1) * s])
            });
        }
        self.index = index;
    }

    fn locate_generators(&mut self) {
        let n = self.rank;
        let id: Vec<i8> = (0..n * n).map(|k| i8::from(k % (n + 1) == 0)).collect();
        let mut buf = vec![0i8; n * n];
        self.generators = (0..n)
            .map(|i| {
                self.right_multiply(&id, i, &mut buf);
                self.lookup_raw(&buf).expect("generator missing from table")
            })
            .collect();
    }
}

/// Enumerates the whole group generated by the simple reflections of `rs`.
pub fn enumerate(rs: &RootSystem, budget: u64) -> Result<GroupTable> {
    let order = rs.order();
    if order > budget {
        return Err(Error::BudgetExceeded { order, budget });
    }
    let mut table = GroupTable::empty(rs);
    let n = rs.rank();
    table.arena.reserve(order as usize * n * n);
    table.lengths.reserve(order as usize);
    table.index.reserve(order as usize, |_| 0);
    let id: Vec<i8> = (0..n * n).map(|k| i8::from(k % (n + 1) == 0)).collect();
    table.push(&id, 0);
    let mut current = vec![0i8; n * n];
    let mut next = vec![0i8; n * n];
    let mut cursor = 0usize;
    while cursor < table.len() {
        current.copy_from_slice(table.raw(cursor as u32));
        let length = table.lengths[cursor];
        for i in 0..n {
            table.right_multiply(&current, i, &mut next);
            if table.lookup_raw(&next).is_none() {
                table.push(&next, length + 1);
            }
        }
        cursor += 1;
    }
    debug_assert_eq!(table.len() as u64, order);
    table.locate_generators();
    Ok(table)
}

/// A conjugacy class with its invariants.
#[derive(Debug, Clone)]
pub struct ConjClass {
    /// Member indices in increasing order.
    pub members: Vec<u32>,
    /// The member with the smallest index (a minimal-length element).
    pub representative: u32,
    pub char_poly: IntPolynomial,
    pub factors: CyclotomicProduct,
    pub mu: usize,
    pub min_length: u16,
}

impl ConjClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn is_elliptic(&self) -> bool {
        self.mu == 0
    }
}

/// Conjugacy classes as orbits under conjugation by the simple reflections,
/// ordered by their smallest member index.
pub fn conjugacy_classes(t: &GroupTable) -> Vec<ConjClass> {
    let n = t.rank;
    let mut class_of = vec![u32::MAX; t.len()];
    let mut classes = vec![];
    let mut left = vec![0i8; n * n];
    let mut conj = vec![0i8; n * n];
    let mut stack = vec![];
    for start in 0..t.len() as u32 {
        if class_of[start as usize] != u32::MAX {
            continue;
        }
        let label = classes.len() as u32;
        class_of[start as usize] = label;
        let mut members = vec![start];
        stack.push(start);
        while let Some(idx) = stack.pop() {
            for i in 0..n {
                t.left_multiply(t.raw(idx), i, &mut left);
                t.right_multiply(&left, i, &mut conj);
                let j = t.lookup_raw(&conj).expect("conjugate missing from table");
                if class_of[j as usize] == u32::MAX {
                    class_of[j as usize] = label;
                    members.push(j);
                    stack.push(j);
                }
            }
        }
        members.sort_unstable();
        let rep = t.element(start);
        let poly = char_poly(&rep);
        let factors = cyclotomic_factor(&poly)
            .expect("Weyl group element with non-cyclotomic characteristic polynomial");
        let min_length = members.iter().map(|&m| t.length(m)).min().unwrap_or(0);
        classes.push(ConjClass {
            representative: start,
            mu: mu(&rep),
            char_poly: poly,
            factors,
            min_length,
            members,
        });
    }
    classes
}

/// The classes with `μ = 0`.
pub fn elliptic_classes(classes: &[ConjClass]) -> Vec<&ConjClass> {
    classes.iter().filter(|c| c.is_elliptic()).collect()
}

/// Index of the class containing `idx`.
pub fn class_index_of(classes: &[ConjClass], idx: u32) -> Option<usize> {
    classes
        .iter()
        .position(|c| c.members.binary_search(&idx).is_ok())
}
