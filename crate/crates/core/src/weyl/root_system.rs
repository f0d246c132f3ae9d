//! Root systems of the simple types and their Weyl groups, realized on the
//! root lattice.
//!
//! Simple roots are numbered as in Bourbaki:
//!
//! - `B_n`: `α_n` is the short simple root.
//! - `C_n`: `α_n` is the long simple root.
//! - `D_n`: `α_{n-1}` and `α_n` are both joined to `α_{n-2}`.
//! - `E_n`: `α_2` is joined to `α_4`; the chain is `α_1 - α_3 - α_4 - ... - α_n`.
//! - `F_4`: `α_1, α_2` long, `α_3, α_4` short, double bond between `α_2` and `α_3`.
//! - `G_2`: `α_1` short, `α_2` long.
//!
//! The Cartan matrix uses `A[i][j] = <α_i^∨, α_j>`, so the simple reflection
//! `s_i` sends `α_j` to `α_j - A[i][j] α_i`. Matrices act on column vectors of
//! simple-root coordinates.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weyl::linalg;

/// Cartan–Killing type letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Kind {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Kind {
    pub fn is_classical(self) -> bool {
        matches!(self, Kind::A | Kind::B | Kind::C | Kind::D)
    }

    pub fn letter(self) -> char {
        match self {
            Kind::A => 'A',
            Kind::B => 'B',
            Kind::C => 'C',
            Kind::D => 'D',
            Kind::E => 'E',
            Kind::F => 'F',
            Kind::G => 'G',
        }
    }

    /// Whether `(self, rank)` names a simple type in the standard list
    /// (no low-rank coincidences).
    pub fn is_valid_rank(self, rank: usize) -> bool {
        match self {
            Kind::A => rank >= 1,
            Kind::B | Kind::C => rank >= 2,
            Kind::D => rank >= 4,
            Kind::E => (6..=8).contains(&rank),
            Kind::F => rank == 4,
            Kind::G => rank == 2,
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for Kind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Kind::A),
            "B" => Ok(Kind::B),
            "C" => Ok(Kind::C),
            "D" => Ok(Kind::D),
            "E" => Ok(Kind::E),
            "F" => Ok(Kind::F),
            "G" => Ok(Kind::G),
            other => Err(format!("unknown type letter {other:?}")),
        }
    }
}

/// Order of the Weyl group of a simple type.
pub fn weyl_group_order(kind: Kind, rank: usize) -> u64 {
    let factorial = |n: usize| (1..=n as u64).product::<u64>();
    match kind {
        Kind::A => factorial(rank + 1),
        Kind::B | Kind::C => (1u64 << rank) * factorial(rank),
        Kind::D => (1u64 << (rank - 1)) * factorial(rank),
        Kind::E => match rank {
            6 => 51_840,
            7 => 2_903_040,
            _ => 696_729_600,
        },
        Kind::F => 1152,
        Kind::G => 12,
    }
}

/// Number of positive roots, which is also the length of the longest element.
pub fn positive_root_count(kind: Kind, rank: usize) -> usize {
    match kind {
        Kind::A => rank * (rank + 1) / 2,
        Kind::B | Kind::C => rank * rank,
        Kind::D => rank * (rank - 1),
        Kind::E => match rank {
            6 => 36,
            7 => 63,
            _ => 120,
        },
        Kind::F => 24,
        Kind::G => 6,
    }
}

/// A square integer matrix in the simple-root basis representing an element of
/// a Weyl group.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    rank: usize,
    entries: Vec<i64>,
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        let mut entries = vec![0; rank * rank];
        for i in 0..rank {
            entries[i * rank + i] = 1;
        }
        WeylElement { rank, entries }
    }

    /// Builds an element from row-major entries. The caller is responsible for
    /// the entries describing an actual group element.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let rank = rows.len();
        assert!(
            rows.iter().all(|r| r.len() == rank),
            "matrix must be square"
        );
        WeylElement {
            rank,
            entries: rows.iter().flatten().copied().collect(),
        }
    }

    pub(crate) fn from_entries(rank: usize, entries: Vec<i64>) -> Self {
        debug_assert_eq!(entries.len(), rank * rank);
        WeylElement { rank, entries }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn entry(&self, row: usize, col: usize) -> i64 {
        self.entries[row * self.rank + col]
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries
            .chunks(self.rank)
            .map(<[i64]>::to_vec)
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == WeylElement::identity(self.rank)
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        (0..self.rank)
            .map(|i| (0..self.rank).map(|j| self.entry(i, j) * v[j]).sum())
            .collect()
    }

    pub fn transpose(&self) -> WeylElement {
        let n = self.rank;
        let mut entries = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                entries[j * n + i] = self.entries[i * n + j];
            }
        }
        WeylElement { rank: n, entries }
    }

    /// Multiplicative order, or `None` if no power up to `limit` is the identity.
    pub fn order(&self, limit: usize) -> Option<usize> {
        let id = WeylElement::identity(self.rank);
        let mut power = self.clone();
        for k in 1..=limit {
            if power == id {
                return Some(k);
            }
            power = &power * self;
        }
        None
    }

    pub fn determinant(&self) -> i64 {
        linalg::determinant_i64(&self.rows())
    }

    pub fn trace(&self) -> i64 {
        (0..self.rank).map(|i| self.entry(i, i)).sum()
    }

    /// `x^{-1} self x`.
    pub fn conjugate_by(&self, x: &WeylElement, x_inverse: &WeylElement) -> WeylElement {
        &(x_inverse * self) * x
    }

    /// Checks that the matrix maps the given root set onto itself.
    pub fn permutes(&self, roots: &BTreeSet<Vec<i64>>) -> bool {
        roots.iter().all(|r| roots.contains(&self.apply(r)))
    }
}

impl Mul for &WeylElement {
    type Output = WeylElement;

    fn mul(self, rhs: &WeylElement) -> WeylElement {
        assert_eq!(self.rank, rhs.rank, "rank mismatch in product");
        let n = self.rank;
        let mut entries = vec![0; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.entries[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    entries[i * n + j] += a * rhs.entries[k * n + j];
                }
            }
        }
        WeylElement { rank: n, entries }
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .entries
            .chunks(self.rank)
            .map(|r| r.iter().map(i64::to_string).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "[{}]", rows.join("; "))
    }
}

/// A simple root system with its Cartan matrix and simple reflections.
#[derive(Debug, Clone)]
pub struct RootSystem {
    kind: Kind,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    simple_reflections: Vec<WeylElement>,
}

impl RootSystem {
    /// Builds the root system of type `kind` and rank `rank`.
    pub fn new(kind: Kind, rank: usize) -> Result<Self> {
        if !kind.is_valid_rank(rank) {
            return Err(Error::InvalidType { kind, rank });
        }
        let cartan = cartan_matrix(kind, rank);
        let simple_reflections = (0..rank)
            .map(|i| {
                let mut s = WeylElement::identity(rank);
                for j in 0..rank {
                    s.entries[i * rank + j] -= cartan[i][j];
                }
                s
            })
            .collect();
        Ok(RootSystem {
            kind,
            rank,
            cartan,
            simple_reflections,
        })
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.kind, self.rank)
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn simple_reflections(&self) -> &[WeylElement] {
        &self.simple_reflections
    }

    pub fn simple_reflection(&self, i: usize) -> &WeylElement {
        &self.simple_reflections[i]
    }

    pub fn identity(&self) -> WeylElement {
        WeylElement::identity(self.rank)
    }

    pub fn order(&self) -> u64 {
        weyl_group_order(self.kind, self.rank)
    }

    /// Product `s_1 s_2 ... s_r` of the simple reflections in Bourbaki order.
    pub fn coxeter_element(&self) -> WeylElement {
        self.word(&(0..self.rank).collect::<Vec<_>>())
    }

    /// Product of simple reflections `s_{i_1} s_{i_2} ...` (zero-based indices).
    pub fn word(&self, word: &[usize]) -> WeylElement {
        word.iter().fold(self.identity(), |acc, &i| {
            &acc * &self.simple_reflections[i]
        })
    }

    /// All roots, as simple-root coordinate vectors, obtained by closing the
    /// simple roots under the simple reflections.
    pub fn roots(&self) -> BTreeSet<Vec<i64>> {
        let mut seen = BTreeSet::new();
        let mut queue: VecDeque<Vec<i64>> = (0..self.rank)
            .map(|i| {
                let mut v = vec![0; self.rank];
                v[i] = 1;
                v
            })
            .collect();
        while let Some(root) = queue.pop_front() {
            if !seen.insert(root.clone()) {
                continue;
            }
            for s in &self.simple_reflections {
                let image = s.apply(&root);
                if !seen.contains(&image) {
                    queue.push_back(image);
                }
            }
        }
        seen
    }

    /// Coxeter matrix entry `m_ij` read off the Cartan matrix.
    pub fn coxeter_exponent(&self, i: usize, j: usize) -> usize {
        if i == j {
            return 1;
        }
        match self.cartan[i][j] * self.cartan[j][i] {
            0 => 2,
            1 => 3,
            2 => 4,
            3 => 6,
            p => unreachable!("invalid Cartan product {p}"),
        }
    }
}

fn cartan_matrix(kind: Kind, rank: usize) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0i64; rank]; rank];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut bond = |i: usize, j: usize, a_ij: i64, a_ji: i64| {
        a[i][j] = a_ij;
        a[j][i] = a_ji;
    };
    match kind {
        Kind::A => {
            for i in 0..rank - 1 {
                bond(i, i + 1, -1, -1);
            }
        }
        Kind::B => {
            for i in 0..rank - 2 {
                bond(i, i + 1, -1, -1);
            }
            bond(rank - 2, rank - 1, -1, -2);
        }
        Kind::C => {
            for i in 0..rank - 2 {
                bond(i, i + 1, -1, -1);
            }
            bond(rank - 2, rank - 1, -2, -1);
        }
        Kind::D => {
            for i in 0..rank - 2 {
                bond(i, i + 1, -1, -1);
            }
            bond(rank - 3, rank - 1, -1, -1);
        }
        Kind::E => {
            // 1-3, 3-4, 2-4, then the chain 4-5-...-n
            bond(0, 2, -1, -1);
            bond(2, 3, -1, -1);
            bond(1, 3, -1, -1);
            for i in 3..rank - 1 {
                bond(i, i + 1, -1, -1);
            }
        }
        Kind::F => {
            bond(0, 1, -1, -1);
            bond(1, 2, -1, -2);
            bond(2, 3, -1, -1);
        }
        Kind::G => {
            bond(0, 1, -3, -1);
        }
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_small_types() -> Vec<(Kind, usize)> {
        let mut v = vec![];
        for n in 1..=6 {
            v.push((Kind::A, n));
        }
        for n in 2..=6 {
            v.push((Kind::B, n));
            v.push((Kind::C, n));
        }
        for n in 4..=7 {
            v.push((Kind::D, n));
        }
        v.extend([
            (Kind::E, 6),
            (Kind::E, 7),
            (Kind::E, 8),
            (Kind::F, 4),
            (Kind::G, 2),
        ]);
        v
    }

    #[test]
    fn rejects_invalid_pairs() {
        for (kind, rank) in [
            (Kind::A, 0),
            (Kind::B, 1),
            (Kind::D, 3),
            (Kind::E, 5),
            (Kind::F, 3),
            (Kind::G, 3),
        ] {
            match RootSystem::new(kind, rank) {
                Err(Error::InvalidType { kind: k, rank: r }) => assert_eq!((k, r), (kind, rank)),
                other => panic!("expected rejection of {kind}{rank}, got {other:?}"),
            }
        }
    }

    #[test]
    fn a1_is_minus_one() {
        let rs = RootSystem::new(Kind::A, 1).unwrap();
        assert_eq!(rs.simple_reflection(0).entries(), &[-1]);
        assert_eq!(rs.simple_reflection(0).order(10), Some(2));
    }

    #[test]
    fn simple_reflections_satisfy_coxeter_relations() {
        for (kind, rank) in all_small_types() {
            let rs = RootSystem::new(kind, rank).unwrap();
            for i in 0..rank {
                let s = rs.simple_reflection(i);
                assert!((s * s).is_identity(), "{}: s{i}^2", rs.name());
                assert_eq!(s.determinant(), -1);
                for j in i + 1..rank {
                    let m = rs.coxeter_exponent(i, j);
                    let st = s * rs.simple_reflection(j);
                    assert_eq!(st.order(12), Some(m), "{}: (s{i} s{j})", rs.name());
                }
            }
        }
    }

    #[test]
    fn root_counts_and_permutation() {
        for (kind, rank) in all_small_types() {
            let rs = RootSystem::new(kind, rank).unwrap();
            let roots = rs.roots();
            assert_eq!(
                roots.len(),
                2 * positive_root_count(kind, rank),
                "{}",
                rs.name()
            );
            for s in rs.simple_reflections() {
                assert!(s.permutes(&roots));
            }
            assert!(rs.coxeter_element().permutes(&roots));
        }
    }

    #[test]
    fn coxeter_number_is_order_of_coxeter_element() {
        // h = 2N / r
        for (kind, rank) in all_small_types() {
            let rs = RootSystem::new(kind, rank).unwrap();
            let h = 2 * positive_root_count(kind, rank) / rank;
            assert_eq!(rs.coxeter_element().order(64), Some(h), "{}", rs.name());
        }
    }

    #[test]
    fn kind_parsing() {
        assert_eq!("e".parse::<Kind>().unwrap(), Kind::E);
        assert!("H".parse::<Kind>().is_err());
    }
}
