//! Conjugacy classes of the Weyl groups of types `B_n`, `C_n`, `D_n` as signed
//! cycle types, and their images among unipotent labels in characteristic 2.
//!
//! A class is a bipartition `(α, β)`: `α` lists the cycle lengths of the
//! positive cycles of a signed permutation of `{1..n}`, `β` those of the
//! negative cycles. On the `2n` points `{±1, ..., ±n}` (the involution `τ`
//! being negation) a positive `k`-cycle becomes two `k`-cycles swapped by `τ`
//! and a negative `k`-cycle becomes one `τ`-stable `2k`-cycle.
//!
//! Type `B_n` uses exactly the combinatorics of type `C_n`. In type `D_n`
//! only classes with an even number of negative cycles occur, and the classes
//! with `β = ∅` and all parts of `α` even split in two (labels `I`, `II`).
//! Each half forms its own stratum, matched with one of the two very even
//! unipotent labels.

mod oracle;
mod realize;
mod strata;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weyl::Kind;

pub use oracle::{compare_with_brute_force, expected_char_poly, OracleComparison, OracleRow};
pub use realize::{realize, realize_signed_permutation, signed_permutation_matrix};
pub use strata::{basic_labels, e_sums, strata_checks, strata_table, StrataChecks, StrataRow};

/// Split tag for the two halves of a split class in type `D`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SplitLabel {
    I,
    II,
}

impl fmt::Display for SplitLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SplitLabel::I => write!(f, "I"),
            SplitLabel::II => write!(f, "II"),
        }
    }
}

/// Partition as a non-increasing list of positive parts.
pub type Partition = Vec<usize>;

/// All partitions of `m`, in reverse lexicographic order (`[m]` first).
pub fn partitions(m: usize) -> Vec<Partition> {
    fn rec(m: usize, max: usize, prefix: &mut Partition, out: &mut Vec<Partition>) {
        if m == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=max.min(m)).rev() {
            prefix.push(part);
            rec(m - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = vec![];
    rec(m, m, &mut vec![], &mut out);
    out
}

/// A conjugacy class of `W(B_n)`, `W(C_n)` or `W(D_n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SignedClass {
    alpha: Partition,
    beta: Partition,
    split: Option<SplitLabel>,
}

impl SignedClass {
    /// Builds a class; parts are sorted into non-increasing order.
    pub fn new(mut alpha: Partition, mut beta: Partition, split: Option<SplitLabel>) -> Self {
        alpha.sort_unstable_by(|a, b| b.cmp(a));
        beta.sort_unstable_by(|a, b| b.cmp(a));
        SignedClass { alpha, beta, split }
    }

    pub fn alpha(&self) -> &[usize] {
        &self.alpha
    }

    pub fn beta(&self) -> &[usize] {
        &self.beta
    }

    pub fn split(&self) -> Option<SplitLabel> {
        self.split
    }

    pub fn rank(&self) -> usize {
        self.alpha.iter().sum::<usize>() + self.beta.iter().sum::<usize>()
    }

    /// Cycle type splits in `W(D_n)`: no negative cycles, all positive cycles even.
    pub fn is_degenerate(&self) -> bool {
        self.beta.is_empty() && self.alpha.iter().all(|k| k % 2 == 0)
    }

    /// No positive cycles, i.e. no fixed vector.
    pub fn is_elliptic(&self) -> bool {
        self.alpha.is_empty()
    }

    /// Whether the class is a valid class of the given classical type.
    pub fn belongs_to(&self, kind: Kind, n: usize) -> bool {
        if self.rank() != n || self.alpha.contains(&0) || self.beta.contains(&0) {
            return false;
        }
        match kind {
            Kind::B | Kind::C => self.split.is_none(),
            Kind::D => {
                self.beta.len().is_multiple_of(2) && (self.split.is_some() == self.is_degenerate())
            }
            _ => false,
        }
    }

    /// Passes to the `2n`-point picture.
    pub fn to_cycle_datum(&self) -> CycleDatum {
        let mut d = CycleDatum {
            split: self.split,
            ..CycleDatum::default()
        };
        for &k in &self.alpha {
            if k % 2 == 1 {
                *d.nu_odd.entry(k).or_insert(0) += 2;
            } else {
                *d.nu_dprime.entry(k).or_insert(0) += 2;
            }
        }
        for &k in &self.beta {
            *d.nu_prime.entry(2 * k).or_insert(0) += 1;
        }
        d
    }

    /// Inverse of [`SignedClass::to_cycle_datum`].
    pub fn from_cycle_datum(d: &CycleDatum) -> SignedClass {
        let mut alpha = vec![];
        let mut beta = vec![];
        for (&k, &m) in &d.nu_odd {
            alpha.extend(std::iter::repeat_n(k, m / 2));
        }
        for (&k, &m) in &d.nu_dprime {
            alpha.extend(std::iter::repeat_n(k, m / 2));
        }
        for (&k, &m) in &d.nu_prime {
            beta.extend(std::iter::repeat_n(k / 2, m));
        }
        SignedClass::new(alpha, beta, d.split)
    }
}

impl fmt::Display for SignedClass {
    /// `[α;β]`, with a `{I}`/`{II}` suffix for split classes.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |p: &[usize]| p.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
        write!(f, "[{};{}]", join(&self.alpha), join(&self.beta))?;
        if let Some(s) = self.split {
            write!(f, "{{{s}}}")?;
        }
        Ok(())
    }
}

/// Enumerates the conjugacy classes of `W(kind_n)` for `kind ∈ {B, C, D}`.
/// For `D`, each degenerate cycle type appears twice, tagged `I` then `II`.
pub fn classes_classical(kind: Kind, n: usize) -> Result<Vec<SignedClass>> {
    if !matches!(kind, Kind::B | Kind::C | Kind::D) || !kind.is_valid_rank(n) {
        return Err(Error::InvalidType { kind, rank: n });
    }
    let mut out = vec![];
    for a in (0..=n).rev() {
        for alpha in partitions(a) {
            for beta in partitions(n - a) {
                if kind == Kind::D && beta.len() % 2 == 1 {
                    continue;
                }
                let c = SignedClass::new(alpha.clone(), beta, None);
                if kind == Kind::D && c.is_degenerate() {
                    for tag in [SplitLabel::I, SplitLabel::II] {
                        out.push(SignedClass {
                            split: Some(tag),
                            ..c.clone()
                        });
                    }
                } else {
                    out.push(c);
                }
            }
        }
    }
    Ok(out)
}

/// Cycle counts of an element acting on the `2n` points `{±1, ..., ±n}`.
///
/// `nu_odd[i]` counts `i`-cycles for odd `i` (fixed points included under
/// `i = 1`); for even `i`, `nu_prime[i]` counts the `τ`-stable `i`-cycles and
/// `nu_dprime[i]` the others. Zero counts are not stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CycleDatum {
    pub nu_odd: BTreeMap<usize, usize>,
    pub nu_prime: BTreeMap<usize, usize>,
    pub nu_dprime: BTreeMap<usize, usize>,
    pub split: Option<SplitLabel>,
}

impl CycleDatum {
    /// Number of points moved, i.e. `Σ i·ν_i`, which equals `2n`.
    pub fn points(&self) -> usize {
        let sum = |m: &BTreeMap<usize, usize>| m.iter().map(|(i, v)| i * v).sum::<usize>();
        sum(&self.nu_odd) + sum(&self.nu_prime) + sum(&self.nu_dprime)
    }

    pub fn is_valid(&self) -> bool {
        self.nu_odd
            .iter()
            .all(|(i, v)| i % 2 == 1 && v % 2 == 0 && *v > 0)
            && self.nu_prime.iter().all(|(i, v)| i % 2 == 0 && *v > 0)
            && self
                .nu_dprime
                .iter()
                .all(|(i, v)| i % 2 == 0 && v % 2 == 0 && *v > 0)
            && self.points().is_multiple_of(2)
    }

    /// `μ` of the class: the number of positive cycles,
    /// `Σ_{i odd} ν_i/2 + Σ_{i even} ν''_i/2`.
    pub fn mu(&self) -> usize {
        self.nu_odd.values().map(|v| v / 2).sum::<usize>()
            + self.nu_dprime.values().map(|v| v / 2).sum::<usize>()
    }

    /// Image in the set of unipotent labels: `ν_i = ν'_i + ν''_i` for even
    /// `i`, with `ε_i = 1` iff `ν'_i > 0` whenever `ν_i` is even and positive.
    pub fn phi(&self) -> StratumLabel {
        let mut nu = self.nu_odd.clone();
        let mut eps = BTreeMap::new();
        let even: std::collections::BTreeSet<usize> = self
            .nu_prime
            .keys()
            .chain(self.nu_dprime.keys())
            .copied()
            .collect();
        for i in even {
            let p = self.nu_prime.get(&i).copied().unwrap_or(0);
            let pp = self.nu_dprime.get(&i).copied().unwrap_or(0);
            let total = p + pp;
            nu.insert(i, total);
            if total % 2 == 0 {
                eps.insert(i, u8::from(p > 0));
            }
        }
        let very_even_tag = if self.nu_odd.is_empty() && self.nu_prime.is_empty() {
            self.split
        } else {
            None
        };
        StratumLabel {
            nu,
            eps,
            very_even_tag,
        }
    }
}

pub fn to_cycle_datum(c: &SignedClass) -> CycleDatum {
    c.to_cycle_datum()
}

pub fn phi(d: &CycleDatum) -> StratumLabel {
    d.phi()
}

pub fn mu_of(d: &CycleDatum) -> usize {
    d.mu()
}

/// A unipotent label in characteristic 2: Jordan multiplicities `ν_i` with a
/// bit `ε_i` on each even `i` of even positive multiplicity, plus the very
/// even tag in type `D`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct StratumLabel {
    pub nu: BTreeMap<usize, usize>,
    pub eps: BTreeMap<usize, u8>,
    pub very_even_tag: Option<SplitLabel>,
}

impl StratumLabel {
    pub fn points(&self) -> usize {
        self.nu.iter().map(|(i, v)| i * v).sum()
    }

    /// All parts even and every defined `ε_i` equal to 1.
    pub fn is_basic(&self) -> bool {
        self.nu.keys().all(|i| i % 2 == 0) && self.eps.values().all(|&e| e == 1)
    }

    pub fn is_valid(&self, kind: Kind, n: usize) -> bool {
        let shape_ok = self.points() == 2 * n
            && self
                .nu
                .iter()
                .all(|(i, v)| *v > 0 && (i % 2 == 0 || v % 2 == 0))
            && self
                .eps
                .iter()
                .all(|(i, e)| *e <= 1 && i % 2 == 0 && self.nu.get(i).is_some_and(|v| v % 2 == 0))
            && self
                .nu
                .iter()
                .filter(|(i, v)| *i % 2 == 0 && *v % 2 == 0)
                .all(|(i, _)| self.eps.contains_key(i));
        if !shape_ok {
            return false;
        }
        let very_even = self
            .nu
            .iter()
            .all(|(i, v)| i % 2 == 0 && v % 2 == 0 && self.eps.get(i) == Some(&0));
        match kind {
            Kind::B | Kind::C => self.very_even_tag.is_none(),
            Kind::D => {
                self.nu.values().sum::<usize>() % 2 == 0
                    && (self.very_even_tag.is_some() == very_even)
            }
            _ => false,
        }
    }

    /// Enumerates the cycle data mapping to this label.
    pub fn fiber(&self) -> Vec<CycleDatum> {
        let odd: BTreeMap<usize, usize> = self
            .nu
            .iter()
            .filter(|(i, _)| *i % 2 == 1)
            .map(|(&i, &v)| (i, v))
            .collect();
        let mut data = vec![CycleDatum {
            nu_odd: odd,
            split: self.very_even_tag,
            ..CycleDatum::default()
        }];
        for (&i, &v) in self.nu.iter().filter(|(i, _)| *i % 2 == 0) {
            let choices: Vec<usize> = if v % 2 == 1 {
                (0..v).step_by(2).collect()
            } else if self.eps.get(&i) == Some(&1) {
                (0..=v - 2).step_by(2).collect()
            } else {
                vec![v]
            };
            data = data
                .into_iter()
                .flat_map(|d| {
                    choices.iter().map(move |&dp| {
                        let mut d = d.clone();
                        if dp > 0 {
                            d.nu_dprime.insert(i, dp);
                        }
                        if v > dp {
                            d.nu_prime.insert(i, v - dp);
                        }
                        d
                    })
                })
                .collect();
        }
        data
    }

    /// Type of the modified centralizer: one `C_m` factor for each even `i`
    /// with `ν_i` odd (`m = (ν_i − 1)/2`) or with `ν_i` even and `ε_i = 1`
    /// (`m = (ν_i − 2)/2`), rank-zero factors dropped.
    pub fn h_type(&self) -> CentralizerType {
        let ranks = self
            .nu
            .iter()
            .filter(|(i, _)| *i % 2 == 0)
            .filter_map(|(i, &v)| {
                if v % 2 == 1 {
                    Some((v - 1) / 2)
                } else if self.eps.get(i) == Some(&1) {
                    Some((v - 2) / 2)
                } else {
                    None
                }
            })
            .filter(|&m| m > 0);
        CentralizerType::new(ranks)
    }

    /// `μ` of the class in the fiber with the fewest positive cycles:
    /// odd parts and `ε_i = 0` parts only.
    pub fn min_mu(&self) -> usize {
        self.nu
            .iter()
            .filter(|(i, _)| *i % 2 == 1 || self.eps.get(i) == Some(&0))
            .map(|(_, v)| v / 2)
            .sum()
    }
}

pub fn fiber(s: &StratumLabel) -> Vec<CycleDatum> {
    s.fiber()
}

pub fn h_type(s: &StratumLabel) -> CentralizerType {
    s.h_type()
}

impl fmt::Display for StratumLabel {
    /// Parts in decreasing order separated by spaces, `i^m` for multiplicity
    /// `m > 1`, `[ε]` after parts carrying a bit, `{I}`/`{II}` for the very
    /// even tag. Example: `2^4[1]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .nu
            .iter()
            .rev()
            .map(|(i, v)| {
                let mut s = if *v == 1 {
                    i.to_string()
                } else {
                    format!("{i}^{v}")
                };
                if let Some(e) = self.eps.get(i) {
                    s.push_str(&format!("[{e}]"));
                }
                s
            })
            .collect();
        write!(f, "{}", parts.join(" "))?;
        if let Some(t) = self.very_even_tag {
            write!(f, "{{{t}}}")?;
        }
        Ok(())
    }
}

/// Multiset of symplectic ranks `{n_j}`; empty means the trivial group.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CentralizerType {
    ranks: Vec<usize>,
}

impl CentralizerType {
    pub fn new<I: IntoIterator<Item = usize>>(ranks: I) -> Self {
        let mut ranks: Vec<usize> = ranks.into_iter().collect();
        assert!(
            ranks.iter().all(|&r| r >= 1),
            "symplectic factors have rank at least 1"
        );
        ranks.sort_unstable_by(|a, b| b.cmp(a));
        CentralizerType { ranks }
    }

    pub fn trivial() -> Self {
        CentralizerType::default()
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn is_trivial(&self) -> bool {
        self.ranks.is_empty()
    }

    /// `Π (n_j + 1)`, the size of `E(C) = Π [0, n_j]`.
    pub fn index_set_size(&self) -> usize {
        self.ranks.iter().map(|r| r + 1).product()
    }
}

impl fmt::Display for CentralizerType {
    /// `{1}` for the trivial group, otherwise factors like `C1xC1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ranks.is_empty() {
            return write!(f, "{{1}}");
        }
        let parts: Vec<String> = self.ranks.iter().map(|r| format!("C{r}")).collect();
        write!(f, "{}", parts.join("x"))
    }
}

impl std::str::FromStr for CentralizerType {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let s = s.trim();
        if s == "{1}" {
            return Ok(CentralizerType::trivial());
        }
        let ranks = s
            .split('x')
            .map(|p| {
                p.trim()
                    .strip_prefix('C')
                    .and_then(|r| r.parse::<usize>().ok())
                    .filter(|&r| r >= 1)
                    .ok_or_else(|| format!("bad centralizer factor {p:?}"))
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(CentralizerType::new(ranks))
    }
}
