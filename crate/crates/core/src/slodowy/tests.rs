use proptest::prelude::*;

use super::*;

fn q(v: [i64; 6]) -> SliceVector {
    SliceVector::from_ints(v)
}

#[test]
fn bracket_examples() {
    let x = Sp4Element::from_ints([1, 2, 3, 4, 5, 6, 7, 8, 9, 10]);
    assert!(bracket(&x, &x).unwrap().is_zero());
    let (n, n_prime) = n_and_n_prime();
    let h = bracket(&n, &n_prime).unwrap();
    assert_eq!(h, Sp4Element::from_ints([-1, 0, 0, 0, 0, 0, 0, 0, 0, 0]));
    assert_eq!(h.coord('A'), &rat(-1));
}

#[test]
fn pattern_violations_are_reported() {
    let mut m = Sp4Element::zero().matrix();
    m[1][3] = rat(1);
    assert!(matches!(
        Sp4Element::from_matrix(&m),
        Err(Error::PatternViolation { row: 1, col: 3 })
    ));
    let x = Sp4Element::from_ints([3, -1, 4, 1, -5, 9, 2, -6, 5, 3]);
    assert_eq!(Sp4Element::from_matrix(&x.matrix()).unwrap(), x);
}

#[test]
fn centralizer_dim_examples() {
    assert_eq!(centralizer_dim(&Sp4Element::zero()), 10);
    assert_eq!(centralizer_dim(&SliceVector::origin().to_element()), 6);
    assert_eq!(centralizer_dim(&q([1, 0, 0, 0, 0, 0]).to_element()), 2);
}

#[test]
fn classification_examples() {
    assert_eq!(
        classify_slice(&q([0, 0, 1, 0, 0, 0])).unwrap(),
        SliceClass::X
    );
    assert_eq!(classify_slice(&q([0; 6])).unwrap(), SliceClass::X);
    assert_eq!(
        classify_slice(&q([1, 0, 0, 0, 0, 0])).unwrap(),
        SliceClass::Y
    );
    assert_eq!(centralizer_dim(&q([0, 0, 1, 0, 0, 0]).to_element()), 4);
}

#[test]
fn system_nullity_examples() {
    assert_eq!(centralizer_system_nullity(&q([0; 6])), 6);
    assert_eq!(centralizer_system_nullity(&q([1, 0, 0, 0, 0, 0])), 2);
    assert_eq!(centralizer_system_nullity(&q([0, 0, 1, 0, 0, 0])), 4);
}

#[test]
fn membership_examples() {
    let origin = q([0; 6]);
    assert!(in_xtilde(&origin) && in_xdoubleprime(&origin));
    let x4 = q([0, 0, 1, 0, 0, 0]);
    assert!(in_xtilde(&x4) && !in_xdoubleprime(&x4));
    assert_eq!(piece_of(&x4).unwrap(), Some(Piece::X4));
    let x6 = q([0, 0, 1, 1, 0, 0]);
    assert!(in_xdoubleprime(&x6));
    assert_eq!(piece_of(&x6).unwrap(), Some(Piece::X6));
    assert_eq!(piece_of(&q([1, 0, 0, 0, 0, 0])).unwrap(), None);
    assert_eq!(piece_of(&origin).unwrap(), Some(Piece::X5));
}

#[test]
fn family_representatives() {
    let fams = g6_family_samples();
    assert!(fams.iter().all(|f| f.centralizer_dim == 4), "{fams:?}");
    for fam in [
        G6Family::EqualPairs,
        G6Family::OnePair,
        G6Family::Subregular,
    ] {
        assert!(fams.iter().any(|f| f.family == fam));
    }
    for k in [1, 2, 4, 7] {
        assert_eq!(power_ranks(&Sp4Element::basis(k)), [2, 0, 0]);
    }
    // a long root vector is minimal nilpotent: centralizer dim 6
    assert_eq!(power_ranks(&Sp4Element::basis(3)), [1, 0, 0]);
    assert_eq!(centralizer_dim(&Sp4Element::basis(3)), 6);
}

/// The prose variant `cE + gF + fG = 0` of the second condition.
fn system_with_prose_sign(p: &SliceVector) -> Vec<Vec<Q>> {
    let mut rows: Vec<Vec<Q>> = centralizer_system(p).iter().map(|r| r.to_vec()).collect();
    rows[1][2] = p.f.clone();
    rows
}

#[test]
fn displayed_sign_matches_the_bracket_and_prose_sign_does_not() {
    let p = SliceVector::from_ints([2, -1, 3, 5, -4, 7]);
    assert!(system_matches_bracket(&p));
    let prose = system_with_prose_sign(&p);
    let derived = bracket_system(&p);
    let stacked: Vec<Vec<Q>> = prose.iter().chain(&derived).cloned().collect();
    assert_ne!(rank_rational(&stacked), rank_rational(&derived));
    // on X6 the two signs even give different nullities
    let x6 = q([0, 0, 2, 1, 1, 1]);
    assert_eq!(centralizer_dim(&x6.to_element()), 4);
    assert_eq!(centralizer_system_nullity(&x6), 4);
    assert_ne!(nullity_rational(&system_with_prose_sign(&x6), 6), 4);
}

#[test]
fn candidate_elements_commute_with_q() {
    let p = q([0, 0, 2, 1, 1, 1]);
    let rows: Vec<Vec<Q>> = centralizer_system(&p).iter().map(|r| r.to_vec()).collect();
    assert_eq!(nullity_rational(&rows, 6), 4);
    // F = G = H = 0, E = 1 solves the system here
    let z = candidate_check(&p, [1, 0, 0, 0, 0, 0]);
    assert!(z.is_none() || z == Some(true));
}

fn candidate_check(p: &SliceVector, v: [i64; 6]) -> Option<bool> {
    let sys = centralizer_system(p);
    let v = v.map(rat);
    let solves = sys.iter().all(|row| {
        row.iter()
            .zip(&v)
            .fold(Q::zero(), |acc, (a, b)| acc + a * b)
            .is_zero()
    });
    if !solves {
        return None;
    }
    Some(
        bracket(&p.to_element(), &centralizer_candidate(p, &v))
            .unwrap()
            .is_zero(),
    )
}

#[test]
fn small_suite_passes() {
    let report = run_slice_suite(1);
    assert!(report.passed(), "{:#?}", report.checks);
    assert!(report.total_samples > SLICE_GENERAL_SAMPLES);
    assert_eq!(report.violation_count, 0, "{:?}", report.violations);
}

fn small_rational() -> impl Strategy<Value = Q> {
    (-9i64..=9, 1i64..=9).prop_map(|(n, d)| Q::new(n.into(), d.into()))
}

fn element() -> impl Strategy<Value = Sp4Element> {
    proptest::array::uniform10(small_rational()).prop_map(Sp4Element::new)
}

proptest! {
    #[test]
    fn bracket_is_antisymmetric(x in element(), y in element()) {
        prop_assert_eq!(bracket(&x, &y).unwrap(), -&bracket(&y, &x).unwrap());
    }

    #[test]
    fn jacobi_identity(x in element(), y in element(), z in element()) {
        let a = bracket(&x, &bracket(&y, &z).unwrap()).unwrap();
        let b = bracket(&y, &bracket(&z, &x).unwrap()).unwrap();
        let c = bracket(&z, &bracket(&x, &y).unwrap()).unwrap();
        prop_assert!((&(&a + &b) + &c).is_zero());
    }

    #[test]
    fn system_solutions_commute(v in proptest::array::uniform6(small_rational())) {
        let p = SliceVector::from_array(v);
        prop_assert!(system_matches_bracket(&p));
        prop_assert_eq!(centralizer_system_nullity(&p), centralizer_dim(&p.to_element()));
    }
}

#[test]
fn negated_variant_disagrees_with_the_bracket() {
    // π(1,1,1) in the negated variant has a 2-dimensional centralizer
    let p = flipped::pi(&rat(1), &rat(1), &rat(1));
    assert_eq!(p, q([1, 1, 1, -1, -1, 1]));
    assert!(flipped::in_xtilde(&p));
    assert_eq!(centralizer_dim(&p.to_element()), 2);
    assert!(!in_xtilde(&p));
    let p = pi(&rat(1), &rat(1), &rat(1));
    assert_eq!(centralizer_dim(&p.to_element()), 4);
    assert_eq!(piece_of(&p).unwrap(), Some(Piece::X1));
    // both variants agree on X″ and at the origin
    assert!(flipped::in_x(&q([0, 0, 1, 1, 0, 0])) && flipped::in_x(&q([0; 6])));
}
