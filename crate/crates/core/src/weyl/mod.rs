//! Root data, reflection representations, characteristic polynomials and the
//! fixed-space dimension `μ`.

pub mod linalg;
mod poly;
mod root_system;

pub use poly::{
    char_poly, cyclotomic, cyclotomic_factor, euler_phi, mu, CyclotomicProduct, IntPolynomial,
};
pub use root_system::{positive_root_count, weyl_group_order, Kind, RootSystem, WeylElement};

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn random_word(rank: usize, seeds: &[usize]) -> Vec<usize> {
        seeds.iter().map(|s| s % rank).collect()
    }

    proptest! {
        #[test]
        fn mu_is_multiplicity_of_phi1(seeds in proptest::collection::vec(0usize..64, 0..20)) {
            for (kind, rank) in [(Kind::F, 4), (Kind::E, 6), (Kind::B, 5), (Kind::D, 5)] {
                let rs = RootSystem::new(kind, rank).unwrap();
                let w = rs.word(&random_word(rank, &seeds));
                let p = char_poly(&w);
                let f = cyclotomic_factor(&p).unwrap();
                prop_assert_eq!(f.degree(), rank);
                prop_assert_eq!(&f.expand(), &p);
                prop_assert_eq!(mu(&w), f.multiplicity(1) as usize);
                prop_assert_eq!(w.determinant().abs(), 1);
                prop_assert_eq!(p.eval(0).abs(), 1);
            }
        }

        #[test]
        fn char_poly_is_a_class_function(
            seeds in proptest::collection::vec(0usize..64, 0..16),
            conj in proptest::collection::vec(0usize..64, 1..8),
        ) {
            let rs = RootSystem::new(Kind::E, 7).unwrap();
            let w = rs.word(&random_word(7, &seeds));
            let word = random_word(7, &conj);
            let x = rs.word(&word);
            let rev: Vec<usize> = word.iter().rev().copied().collect();
            let x_inv = rs.word(&rev);
            prop_assert!((&x * &x_inv).is_identity());
            prop_assert_eq!(char_poly(&w.conjugate_by(&x, &x_inv)), char_poly(&w));
        }
    }
}
