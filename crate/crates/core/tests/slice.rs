use num_rational::BigRational;
use weyl_strata::slodowy::{
    centralizer_dim, centralizer_system_nullity, classify_slice, in_intersection_form,
    in_xdoubleprime, in_xtilde, matching_pieces, pi, pi_preimage, run_slice_suite, SliceClass,
    SliceVector,
};

fn r(v: i64) -> BigRational {
    BigRational::from_integer(v.into())
}

/// Every point of `{-1, 0, 1}^6`.
fn grid() -> impl Iterator<Item = SliceVector> {
    (0..729).map(|mut k| {
        let mut c = [0i64; 6];
        for x in &mut c {
            *x = k % 3 - 1;
            k /= 3;
        }
        SliceVector::from_ints(c)
    })
}

#[test]
fn grid_points_obey_the_stratification() {
    for q in grid() {
        let dim = centralizer_dim(&q.to_element());
        assert!([2, 4, 6].contains(&dim), "{q}");
        assert_eq!(centralizer_system_nullity(&q), dim, "{q}");
        let in_x = in_xtilde(&q) || in_xdoubleprime(&q);
        assert_eq!(dim >= 4, in_x, "{q}");
        let class = classify_slice(&q).unwrap();
        assert_eq!(class == SliceClass::X, in_x, "{q}");
        let pieces = matching_pieces(&q);
        assert_eq!(pieces.len(), usize::from(in_x), "{q}: {pieces:?}");
        assert_eq!(
            in_xtilde(&q) && in_xdoubleprime(&q),
            in_intersection_form(&q),
            "{q}"
        );
    }
}

#[test]
fn cover_round_trips_on_integer_points() {
    for d in -2..=2 {
        for g in -2..=2 {
            for i in -2..=2 {
                let q = pi(&r(d), &r(g), &r(i));
                assert!(in_xtilde(&q), "{q}");
                let pre = pi_preimage(&q).unwrap();
                let expected = if (d, g, i) == (0, 0, 0) { 1 } else { 2 };
                assert_eq!(pre.len(), expected, "{q}");
                let found = pre.points.iter().any(|p| {
                    p.iter()
                        .zip([d, g, i])
                        .all(|(v, w)| v.to_rational() == Some(r(w)))
                });
                assert!(found, "({d}, {g}, {i}) missing from {pre}");
            }
        }
    }
}

#[test]
fn suite_is_reproducible_for_a_seed() {
    let a = run_slice_suite(11);
    let b = run_slice_suite(11);
    assert!(a.passed(), "{:?}", a.violations);
    assert_eq!(a.dim_histogram, b.dim_histogram);
    assert_eq!(a.piece_counts, b.piece_counts);
    assert_eq!(a.total_samples, b.total_samples);
}
