use serde::Serialize;

use super::{classes_classical, realize, SignedClass};
use crate::brute_force::{class_index_of, conjugacy_classes, enumerate};
use crate::check::CheckItem;
use crate::error::Result;
use crate::weyl::{char_poly, mu, IntPolynomial, Kind, RootSystem};

/// `Π_{k ∈ α} (x^k − 1) · Π_{k ∈ β} (x^k + 1)`.
pub fn expected_char_poly(c: &SignedClass) -> IntPolynomial {
    let pos = c.alpha().iter().map(|&k| IntPolynomial::binomial(k, -1));
    let neg = c.beta().iter().map(|&k| IntPolynomial::binomial(k, 1));
    pos.chain(neg)
        .fold(IntPolynomial::one(), |acc, p| &acc * &p)
}

#[derive(Debug, Clone, Serialize)]
pub struct OracleRow {
    pub class: String,
    pub char_poly: String,
    pub mu: usize,
    pub size: usize,
    pub min_length: u16,
}

/// Signed cycle types against brute-force enumeration of one group.
#[derive(Debug, Clone, Serialize)]
pub struct OracleComparison {
    pub kind: Kind,
    pub rank: usize,
    pub group_order: usize,
    pub rows: Vec<OracleRow>,
    pub items: Vec<CheckItem>,
}

/// Realizes every signed class, locates it among the enumerated classes, and
/// compares counts, characteristic polynomials and `μ`.
pub fn compare_with_brute_force(kind: Kind, n: usize, budget: u64) -> Result<OracleComparison> {
    let rs = RootSystem::new(kind, n)?;
    let t = enumerate(&rs, budget)?;
    let oracle = conjugacy_classes(&t);
    let ours = classes_classical(kind, n)?;
    let name = rs.name();

    let mut hit = vec![false; oracle.len()];
    let (mut located, mut poly_ok, mut mu_ok, mut formula_ok) = (0, 0, 0, 0);
    let mut rows = vec![];
    for c in &ours {
        let w = realize(c, &rs)?;
        let expected = expected_char_poly(c);
        formula_ok += usize::from(char_poly(&w) == expected);
        let Some(k) = t.index_of(&w).and_then(|idx| class_index_of(&oracle, idx)) else {
            continue;
        };
        if !hit[k] {
            hit[k] = true;
            located += 1;
        }
        let cls = &oracle[k];
        poly_ok += usize::from(cls.char_poly == expected);
        mu_ok += usize::from(cls.mu == c.to_cycle_datum().mu() && mu(&w) == cls.mu);
        rows.push(OracleRow {
            class: c.to_string(),
            char_poly: cls.factors.to_string(),
            mu: cls.mu,
            size: cls.size(),
            min_length: cls.min_length,
        });
    }
    let total = ours.len();
    let items = vec![
        CheckItem::new(
            format!("{name}: class count"),
            total == oracle.len(),
            format!(
                "{total} signed cycle types, {} enumerated classes",
                oracle.len()
            ),
        ),
        CheckItem::new(
            format!("{name}: representatives land in distinct classes"),
            located == total && located == oracle.len(),
            format!("{located} of {} classes hit", oracle.len()),
        ),
        CheckItem::new(
            format!("{name}: char poly of representative is the product formula"),
            formula_ok == total,
            format!("{formula_ok}/{total}"),
        ),
        CheckItem::new(
            format!("{name}: char poly of enumerated class agrees"),
            poly_ok == total,
            format!("{poly_ok}/{total}"),
        ),
        CheckItem::new(
            format!("{name}: mu agrees"),
            mu_ok == total,
            format!("{mu_ok}/{total}"),
        ),
    ];
    Ok(OracleComparison {
        kind,
        rank: n,
        group_order: t.len(),
        rows,
        items,
    })
}
