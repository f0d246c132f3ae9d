//! Seeded property checks over rational points of the slice.
//!
//! Random rational points almost always land in `Y`, so besides the general
//! samples the suite builds points on each piece, on `X̃′` through `π`, on
//! `X″`, on `X̃′ ∩ X″`, and small perturbations of constructed points.
//! Samples are drawn sequentially from one seeded stream, then evaluated in
//! parallel and aggregated in sample order, so the report does not depend on
//! the number of threads.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::cover::{pi, pi_preimage};
use super::flipped;
use super::{
    bracket, centralizer_dim, centralizer_system_nullity, classify_slice, g6_family_samples,
    in_intersection_form, in_xdoubleprime, in_xprime, in_xtilde, matching_pieces, n_and_n_prime,
    piece_of, system_matches_bracket, xdoubleprime_jacobian_rank, FamilySample, Piece, SliceClass,
    SliceVector, Sp4Element, Q,
};
use crate::check::CheckItem;

/// Number of unconstrained random points.
pub const SLICE_GENERAL_SAMPLES: usize = 1000;
const PER_CONSTRUCTION: usize = 100;
const PERTURBED: usize = 200;
const MAX_LISTED_VIOLATIONS: usize = 20;

/// How a sample was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum SampleKind {
    Fixed,
    General,
    OnPiece(Piece),
    PiImage,
    XDoublePrime,
    Intersection,
    Perturbed,
}

impl fmt::Display for SampleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SampleKind::Fixed => write!(f, "fixed"),
            SampleKind::General => write!(f, "general"),
            SampleKind::OnPiece(p) => write!(f, "piece-{p}"),
            SampleKind::PiImage => write!(f, "pi-image"),
            SampleKind::XDoublePrime => write!(f, "x-double-prime"),
            SampleKind::Intersection => write!(f, "intersection"),
            SampleKind::Perturbed => write!(f, "perturbed"),
        }
    }
}

fn small(rng: &mut ChaCha8Rng) -> Q {
    let n: i64 = rng.gen_range(-9..=9);
    small_with_numerator(rng, n)
}

fn small_nonzero(rng: &mut ChaCha8Rng) -> Q {
    let mut n = 0;
    while n == 0 {
        n = rng.gen_range(-9..=9);
    }
    small_with_numerator(rng, n)
}

fn small_with_numerator(rng: &mut ChaCha8Rng, n: i64) -> Q {
    let mut d = 0;
    while d == 0 {
        d = rng.gen_range(-9..=9);
    }
    Q::new(n.into(), d.into())
}

fn on_piece(rng: &mut ChaCha8Rng, piece: Piece) -> SliceVector {
    let z = Q::zero;
    match piece {
        Piece::X1 => {
            let (b, c, f) = (small_nonzero(rng), small_nonzero(rng), small_nonzero(rng));
            let d = &b * &c / &f;
            let g = &c * &f / &b;
            let i = -(&b * &f) / &c;
            SliceVector::new(b, c, d, f, g, i)
        }
        Piece::X2 => {
            let (c, d) = (small_nonzero(rng), small_nonzero(rng));
            let g = &c * &c / &d;
            SliceVector::new(z(), c, d, z(), g, z())
        }
        Piece::X3 => {
            let (b, d) = (small_nonzero(rng), small_nonzero(rng));
            let i = -(&b * &b) / &d;
            SliceVector::new(b, z(), d, z(), z(), i)
        }
        Piece::X4 => SliceVector::new(z(), z(), small_nonzero(rng), z(), z(), z()),
        Piece::X5 => {
            let (g, i) = (small(rng), small(rng));
            SliceVector::new(z(), z(), &i * &g, z(), g, i)
        }
        Piece::X6 => {
            let (f, g, i) = (small_nonzero(rng), small(rng), small(rng));
            let d = &f * &f + &i * &g;
            SliceVector::new(z(), z(), d, f, g, i)
        }
    }
}

fn random_point(rng: &mut ChaCha8Rng) -> SliceVector {
    SliceVector::from_array(std::array::from_fn(|_| small(rng)))
}

/// The fixed points used as worked examples.
fn fixed_points() -> Vec<SliceVector> {
    [
        [0, 0, 0, 0, 0, 0],
        [1, 0, 0, 0, 0, 0],
        [0, 0, 1, 0, 0, 0],
        [0, 0, 1, 1, 0, 0],
        [1, 1, 1, 1, 1, -1],
        [1, 1, 1, -1, -1, 1],
        [0, 0, 0, 0, -3, 0],
        [0, 0, 0, 0, 0, 5],
    ]
    .into_iter()
    .map(SliceVector::from_ints)
    .collect()
}

fn draw_samples(seed: u64) -> Vec<(SampleKind, SliceVector)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<(SampleKind, SliceVector)> = fixed_points()
        .into_iter()
        .map(|q| (SampleKind::Fixed, q))
        .collect();
    for _ in 0..SLICE_GENERAL_SAMPLES {
        out.push((SampleKind::General, random_point(&mut rng)));
    }
    for piece in Piece::ALL {
        for _ in 0..PER_CONSTRUCTION {
            out.push((SampleKind::OnPiece(piece), on_piece(&mut rng, piece)));
        }
    }
    for _ in 0..PER_CONSTRUCTION {
        let (d, g, i) = (small(&mut rng), small(&mut rng), small(&mut rng));
        out.push((SampleKind::PiImage, pi(&d, &g, &i)));
    }
    for _ in 0..PER_CONSTRUCTION {
        let (f, g, i) = (small(&mut rng), small(&mut rng), small(&mut rng));
        let d = &f * &f + &i * &g;
        out.push((
            SampleKind::XDoublePrime,
            SliceVector::new(Q::zero(), Q::zero(), d, f, g, i),
        ));
    }
    for _ in 0..PER_CONSTRUCTION {
        let (g, i) = (small(&mut rng), small(&mut rng));
        out.push((SampleKind::Intersection, pi(&Q::zero(), &g, &i)));
    }
    for _ in 0..PERTURBED {
        let piece = Piece::ALL[rng.gen_range(0..6)];
        let mut coords = on_piece(&mut rng, piece).to_array();
        let k = rng.gen_range(0..6);
        coords[k] += small_nonzero(&mut rng);
        out.push((SampleKind::Perturbed, SliceVector::from_array(coords)));
    }
    out
}

/// Names of the per-sample checks, in report order.
const SAMPLE_CHECKS: [&str; 10] = [
    "centralizer dim in {2, 4, 6}",
    "X iff in X~' or X''",
    "X = X' disjoint union X''",
    "pieces partition X",
    "constructed samples lie in their piece",
    "system nullity equals centralizer dim",
    "system rows span the bracket conditions",
    "pi lands in X~'; fibers have 2 points off the origin; pi(pi^-1(q)) = q",
    "X~' meet X'' equals b=c=d=0, gi+f^2=0",
    "X'' Jacobian has rank 1",
];

struct Outcome {
    dim: usize,
    class: Option<SliceClass>,
    piece: Option<Piece>,
    xtilde: bool,
    xpp: bool,
    preimage_checked: bool,
    negated_disagrees: bool,
    failures: Vec<(usize, String)>,
}

fn evaluate(kind: SampleKind, q: &SliceVector) -> Outcome {
    let mut failures = vec![];
    let mut fail = |k: usize, msg: String| failures.push((k, format!("{kind} {q}: {msg}")));
    let dim = centralizer_dim(&q.to_element());
    if !matches!(dim, 2 | 4 | 6) {
        fail(0, format!("dim {dim}"));
    }
    let class = classify_slice(q).ok();
    let xtilde = in_xtilde(q);
    let xpp = in_xdoubleprime(q);
    if class.map(|c| c == SliceClass::X) != Some(xtilde || xpp) {
        fail(1, format!("dim {dim}, in X~' {xtilde}, in X'' {xpp}"));
    }
    let xprime = in_xprime(q);
    if (xprime && xpp) || (class == Some(SliceClass::X)) != (xprime || xpp) {
        fail(2, format!("in X' {xprime}, in X'' {xpp}, dim {dim}"));
    }
    let piece = match piece_of(q) {
        Ok(p) => p,
        Err(e) => {
            fail(3, e.to_string());
            None
        }
    };
    if let SampleKind::OnPiece(p) = kind {
        if piece != Some(p) {
            fail(4, format!("expected {p}, matched {:?}", matching_pieces(q)));
        }
    }
    let nullity = centralizer_system_nullity(q);
    if nullity != dim {
        fail(5, format!("nullity {nullity}, dim {dim}"));
    }
    if !system_matches_bracket(q) {
        fail(6, "row spaces differ".into());
    }
    if matches!(kind, SampleKind::PiImage | SampleKind::Intersection) && !xtilde {
        fail(7, "pi image outside X~'".into());
    }
    let mut preimage_checked = false;
    if xtilde {
        preimage_checked = true;
        match pi_preimage(q) {
            Ok(p) => {
                let expected = if q.is_origin() { 1 } else { 2 };
                let distinct: BTreeSet<String> = p
                    .points
                    .iter()
                    .map(|x| format!("{:?}", x.clone().map(|v| v.to_string())))
                    .collect();
                if p.len() != expected || distinct.len() != expected {
                    fail(7, format!("fiber has {} points", distinct.len()));
                }
            }
            Err(e) => fail(7, e.to_string()),
        }
    }
    if (xtilde && xpp) != in_intersection_form(q) {
        fail(8, format!("in X~' {xtilde}, in X'' {xpp}"));
    }
    if xpp && xdoubleprime_jacobian_rank(q) != 1 {
        fail(9, "rank 0".into());
    }
    let negated_disagrees = flipped::in_x(q) != (class == Some(SliceClass::X));
    Outcome {
        dim,
        class,
        piece,
        xtilde,
        xpp,
        preimage_checked,
        negated_disagrees,
        failures,
    }
}

/// Aggregate result of [`run_slice_suite`].
#[derive(Debug, Clone, Serialize)]
pub struct SliceReport {
    pub seed: u64,
    pub total_samples: usize,
    pub samples_by_kind: BTreeMap<String, usize>,
    pub dim_histogram: BTreeMap<usize, usize>,
    pub class_counts: BTreeMap<String, usize>,
    pub piece_counts: BTreeMap<String, usize>,
    pub in_xtilde: usize,
    pub in_xdoubleprime: usize,
    pub preimages_checked: usize,
    /// Samples where the `(f, g, i)`-negated sets disagree with the
    /// centralizer dimension. Informational.
    pub negated_variant_disagreements: usize,
    pub families: Vec<FamilySample>,
    pub checks: Vec<CheckItem>,
    pub violation_count: usize,
    pub violations: Vec<String>,
}

impl SliceReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

fn fixed_checks() -> Vec<CheckItem> {
    let (n, n_prime) = n_and_n_prime();
    let h = bracket(&n, &n_prime).expect("pattern closed under bracket");
    let mut expected = [0; 10];
    expected[0] = -1;
    let origin_dim = centralizer_dim(&SliceVector::origin().to_element());
    vec![
        CheckItem::new(
            "[N, N'] = diag(-1, 0, 0, 1)",
            h == Sp4Element::from_ints(expected),
            format!("[N, N'] has {h}"),
        ),
        CheckItem::new(
            "slice origin N has centralizer dim 6",
            origin_dim == 6,
            format!("dim {origin_dim}"),
        ),
        CheckItem::new(
            "zero has centralizer dim 10",
            centralizer_dim(&Sp4Element::zero()) == 10,
            "ad 0 = 0",
        ),
    ]
}

/// Runs every slice property on the seeded sample set.
pub fn run_slice_suite(seed: u64) -> SliceReport {
    let samples = draw_samples(seed);
    let outcomes: Vec<Outcome> = samples.par_iter().map(|(k, q)| evaluate(*k, q)).collect();

    let mut samples_by_kind = BTreeMap::new();
    let mut dim_histogram = BTreeMap::new();
    let mut class_counts = BTreeMap::new();
    let mut piece_counts: BTreeMap<String, usize> =
        Piece::ALL.iter().map(|p| (p.to_string(), 0)).collect();
    let mut failures: Vec<Vec<String>> = vec![vec![]; SAMPLE_CHECKS.len()];
    let (mut xt, mut xpp, mut pre, mut neg) = (0, 0, 0, 0);
    for ((kind, _), o) in samples.iter().zip(&outcomes) {
        *samples_by_kind.entry(kind.to_string()).or_insert(0) += 1;
        *dim_histogram.entry(o.dim).or_insert(0) += 1;
        let class = o.class.map_or("none".to_string(), |c| format!("{c:?}"));
        *class_counts.entry(class).or_insert(0) += 1;
        if let Some(p) = o.piece {
            *piece_counts.entry(p.to_string()).or_insert(0) += 1;
        }
        xt += usize::from(o.xtilde);
        xpp += usize::from(o.xpp);
        pre += usize::from(o.preimage_checked);
        neg += usize::from(o.negated_disagrees);
        for (k, msg) in &o.failures {
            failures[*k].push(msg.clone());
        }
    }

    let mut checks = fixed_checks();
    let observed: BTreeSet<usize> = dim_histogram.keys().copied().collect();
    for (k, name) in SAMPLE_CHECKS.iter().enumerate() {
        let fails = &failures[k];
        let mut pass = fails.is_empty();
        let mut detail = format!("{} failures over {} samples", fails.len(), samples.len());
        if k == 0 {
            pass &= observed == BTreeSet::from([2, 4, 6]);
            detail = format!("{detail}; observed dims {observed:?}");
        }
        if k == 3 {
            pass &= piece_counts.values().all(|&c| c > 0);
        }
        if k == 7 {
            detail = format!("{detail}; {pre} fibers computed");
        }
        checks.push(CheckItem::new(*name, pass, detail));
    }
    let families = g6_family_samples();
    let bad: Vec<&FamilySample> = families.iter().filter(|f| f.centralizer_dim != 4).collect();
    checks.push(CheckItem::new(
        "g6 family representatives have centralizer dim 4",
        bad.is_empty(),
        format!(
            "{} representatives, {} with another dimension",
            families.len(),
            bad.len()
        ),
    ));

    let all: Vec<String> = failures.into_iter().flatten().collect();
    SliceReport {
        seed,
        total_samples: samples.len(),
        samples_by_kind,
        dim_histogram,
        class_counts,
        piece_counts,
        in_xtilde: xt,
        in_xdoubleprime: xpp,
        preimages_checked: pre,
        negated_variant_disagreements: neg,
        families,
        checks,
        violation_count: all.len(),
        violations: all.into_iter().take(MAX_LISTED_VIOLATIONS).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructions_hit_their_pieces() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for piece in Piece::ALL {
            for _ in 0..20 {
                let q = on_piece(&mut rng, piece);
                assert_eq!(matching_pieces(&q), vec![piece], "{q}");
            }
        }
    }

    #[test]
    fn samples_are_reproducible() {
        assert_eq!(draw_samples(3), draw_samples(3));
        assert_ne!(draw_samples(3), draw_samples(4));
    }
}
