use weyl_strata::brute_force::{conjugacy_classes, elliptic_classes, enumerate, DEFAULT_BUDGET};
use weyl_strata::signed::{basic_labels, classes_classical, strata_checks, strata_table};
use weyl_strata::weyl::{Kind, RootSystem};

fn groups(max: usize) -> impl Iterator<Item = (Kind, usize)> {
    [Kind::B, Kind::C, Kind::D].into_iter().flat_map(move |k| {
        (2..=max)
            .filter(move |&n| k.is_valid_rank(n))
            .map(move |n| (k, n))
    })
}

#[test]
fn stratum_invariants_hold_through_rank_seven() {
    for (kind, n) in groups(7) {
        let s = strata_checks(kind, n).unwrap();
        let failed: Vec<_> = s.items.iter().filter(|i| !i.pass).collect();
        assert!(failed.is_empty(), "{kind}{n}: {failed:?}");
    }
}

#[test]
fn each_basic_stratum_holds_one_elliptic_class() {
    for (kind, n) in groups(7) {
        let rows = strata_table(kind, n).unwrap();
        let basic: Vec<_> = rows.iter().filter(|r| r.basic).collect();
        assert_eq!(basic.len(), basic_labels(kind, n).len(), "{kind}{n}");
        for r in &rows {
            let elliptic = r.classes.iter().filter(|c| c.is_elliptic()).count();
            assert_eq!(elliptic, usize::from(r.basic), "{kind}{n} {}", r.label);
        }
    }
}

#[test]
fn elliptic_counts_agree_with_enumeration() {
    for (kind, n) in groups(5) {
        let ours = classes_classical(kind, n)
            .unwrap()
            .iter()
            .filter(|c| c.is_elliptic())
            .count();
        let rs = RootSystem::new(kind, n).unwrap();
        let cc = conjugacy_classes(&enumerate(&rs, DEFAULT_BUDGET).unwrap());
        assert_eq!(ours, elliptic_classes(&cc).len(), "{kind}{n}");
    }
}

#[test]
fn non_classical_types_are_rejected() {
    assert!(classes_classical(Kind::E, 6).is_err());
    assert!(classes_classical(Kind::D, 3).is_err());
    assert!(strata_table(Kind::A, 3).is_err());
}
