use std::collections::BTreeMap;

use serde::Serialize;

use super::{classes_classical, partitions, CentralizerType, SignedClass, StratumLabel};
use crate::check::CheckItem;
use crate::error::Result;
use crate::weyl::Kind;

/// One stratum of a classical Weyl group.
#[derive(Debug, Clone, Serialize)]
pub struct StrataRow {
    pub label: StratumLabel,
    pub basic: bool,
    pub h_type: CentralizerType,
    /// Classes mapping to `label`, found by applying the map to every class.
    pub classes: Vec<SignedClass>,
    /// Classes produced by enumerating the fiber from the label alone.
    pub fiber: Vec<SignedClass>,
    /// `μ` of each class in `classes`, sorted.
    pub mu_multiset: Vec<usize>,
    /// `min μ + Σ_j i_j` over `Π_j [0, n_j]`, sorted.
    pub predicted_mu: Vec<usize>,
}

impl StrataRow {
    pub fn fiber_size(&self) -> usize {
        self.classes.len()
    }

    pub fn predicted_size(&self) -> usize {
        self.h_type.index_set_size()
    }
}

/// Sorted multiset `{Σ_j i_j : i_* ∈ Π_j [0, n_j]}`.
pub fn e_sums(h: &CentralizerType) -> Vec<usize> {
    let mut sums = vec![0usize];
    for &r in h.ranks() {
        sums = sums
            .iter()
            .flat_map(|&s| (0..=r).map(move |i| s + i))
            .collect();
    }
    sums.sort_unstable();
    sums
}

/// Strata of `W(kind_n)` for `kind ∈ {B, C, D}`, ordered by the smallest `μ`
/// in the stratum and then by label.
pub fn strata_table(kind: Kind, n: usize) -> Result<Vec<StrataRow>> {
    let mut by_label: BTreeMap<StratumLabel, Vec<SignedClass>> = BTreeMap::new();
    for c in classes_classical(kind, n)? {
        by_label
            .entry(c.to_cycle_datum().phi())
            .or_default()
            .push(c);
    }
    let mut rows: Vec<StrataRow> = by_label
        .into_iter()
        .map(|(label, classes)| {
            let h_type = label.h_type();
            let mut mu_multiset: Vec<usize> =
                classes.iter().map(|c| c.to_cycle_datum().mu()).collect();
            mu_multiset.sort_unstable();
            let offset = label.min_mu();
            let predicted_mu = e_sums(&h_type).into_iter().map(|s| s + offset).collect();
            let fiber = label
                .fiber()
                .iter()
                .map(SignedClass::from_cycle_datum)
                .collect();
            StrataRow {
                basic: label.is_basic(),
                h_type,
                classes,
                fiber,
                mu_multiset,
                predicted_mu,
                label,
            }
        })
        .collect();
    rows.sort_by(|a, b| (a.label.min_mu(), &a.label).cmp(&(b.label.min_mu(), &b.label)));
    Ok(rows)
}

/// The basic labels, built directly: `2n` split into even parts with every
/// defined `ε_i = 1`; for `D`, an even number of parts.
pub fn basic_labels(kind: Kind, n: usize) -> Vec<StratumLabel> {
    partitions(n)
        .into_iter()
        .filter_map(|half| {
            let mut nu = BTreeMap::new();
            for k in half {
                *nu.entry(2 * k).or_insert(0) += 1;
            }
            if kind == Kind::D && nu.values().sum::<usize>() % 2 == 1 {
                return None;
            }
            let eps = nu
                .iter()
                .filter(|(_, v)| *v % 2 == 0)
                .map(|(&i, _)| (i, 1u8))
                .collect();
            Some(StratumLabel {
                nu,
                eps,
                very_even_tag: None,
            })
        })
        .collect()
}

/// Outcome of the stratum invariants for one group.
#[derive(Debug, Clone, Serialize)]
pub struct StrataChecks {
    pub strata: usize,
    pub classes: usize,
    /// Strata whose `μ` multiset equals `{Σ i_j}` with no offset.
    pub literal_mu_strata: usize,
    pub items: Vec<CheckItem>,
}

/// Partition, fiber enumeration, fiber size `Π(n_j + 1)`, and the `μ` law
/// `min μ + {Σ i_j}` (which is `{Σ i_j}` itself on basic strata).
pub fn strata_checks(kind: Kind, n: usize) -> Result<StrataChecks> {
    let classes = classes_classical(kind, n)?.len();
    let rows = strata_table(kind, n)?;
    let name = format!("{kind}{n}");
    let total: usize = rows.iter().map(StrataRow::fiber_size).sum();
    let count = |f: &dyn Fn(&StrataRow) -> bool| rows.iter().filter(|r| f(r)).count();
    let fiber_ok = count(&|r| {
        let mut a = r.classes.clone();
        let mut b = r.fiber.clone();
        a.sort();
        b.sort();
        a == b
    });
    let size_ok = count(&|r| r.fiber_size() == r.predicted_size());
    let mu_ok = count(&|r| r.mu_multiset == r.predicted_mu);
    let basic = count(&|r| r.basic);
    let basic_literal = count(&|r| r.basic && r.mu_multiset == e_sums(&r.h_type));
    let literal = count(&|r| r.mu_multiset == e_sums(&r.h_type));
    let valid = count(&|r| r.label.is_valid(kind, n));
    let s = rows.len();
    let items = vec![
        CheckItem::new(
            format!("{name}: fibers partition the classes"),
            total == classes,
            format!("{total} of {classes} classes over {s} strata"),
        ),
        CheckItem::new(
            format!("{name}: labels are valid"),
            valid == s,
            format!("{valid}/{s}"),
        ),
        CheckItem::new(
            format!("{name}: fiber enumerated from the label equals the preimage"),
            fiber_ok == s,
            format!("{fiber_ok}/{s}"),
        ),
        CheckItem::new(
            format!("{name}: fiber size = prod(n_j + 1)"),
            size_ok == s,
            format!("{size_ok}/{s}"),
        ),
        CheckItem::new(
            format!("{name}: mu multiset = min mu + sums"),
            mu_ok == s,
            format!("{mu_ok}/{s}"),
        ),
        CheckItem::new(
            format!("{name}: mu multiset = sums on basic strata"),
            basic_literal == basic,
            format!("{basic_literal}/{basic}"),
        ),
    ];
    Ok(StrataChecks {
        strata: s,
        classes,
        literal_mu_strata: literal,
        items,
    })
}
