//! Exact rank, nullity and determinant by fraction-free (Bareiss) elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Rank of an integer matrix given as rows.
pub fn rank_bigint(rows: &[Vec<BigInt>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows.to_vec();
    bareiss_in_place(&mut m).0
}

pub fn rank_i64(rows: &[Vec<i64>]) -> usize {
    rank_bigint(&to_bigint(rows))
}

/// Rank of a rational matrix. Each row is scaled by the lcm of its
/// denominators so elimination runs over the integers.
pub fn rank_rational(rows: &[Vec<BigRational>]) -> usize {
    let scaled: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|row| {
            let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
        })
        .collect();
    rank_bigint(&scaled)
}

/// Dimension of the kernel of a rational matrix with `cols` columns.
pub fn nullity_rational(rows: &[Vec<BigRational>], cols: usize) -> usize {
    cols - rank_rational(rows)
}

pub fn determinant_i64(rows: &[Vec<i64>]) -> i64 {
    let n = rows.len();
    if n == 0 {
        return 1;
    }
    let mut m = to_bigint(rows);
    let (rank, sign) = bareiss_in_place(&mut m);
    if rank < n {
        return 0;
    }
    let det = &m[n - 1][n - 1] * sign;
    i64::try_from(det).expect("determinant overflows i64")
}

fn to_bigint(rows: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect()
}

/// Row-reduces `m` in place with Bareiss' fraction-free update. Returns the
/// rank and the sign of the row permutation. For a full-rank square matrix
/// the last pivot times that sign is the determinant.
fn bareiss_in_place(m: &mut [Vec<BigInt>]) -> (usize, i64) {
    let rows = m.len();
    if rows == 0 {
        return (0, 1);
    }
    let cols = m[0].len();
    let mut sign = 1;
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pivot) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        if pivot != r {
            m.swap(pivot, r);
            sign = -sign;
        }
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = &m[r][c] * &m[i][j] - &m[i][c] * &m[r][j];
                debug_assert!((&v % &prev).is_zero());
                m[i][j] = v / &prev;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        r += 1;
    }
    (r, sign)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn small_ranks() {
        assert_eq!(rank_i64(&[vec![0, 0], vec![0, 0]]), 0);
        assert_eq!(rank_i64(&[vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(rank_i64(&[vec![0, 1], vec![1, 0]]), 2);
        assert_eq!(
            rank_rational(&[vec![q(1, 2), q(1, 3)], vec![q(3, 2), q(1, 1)]]),
            1
        );
        assert_eq!(nullity_rational(&[vec![q(1, 2), q(0, 1), q(1, 7)]], 3), 2);
    }

    #[test]
    fn determinants() {
        assert_eq!(determinant_i64(&[vec![0, 1], vec![1, 0]]), -1);
        assert_eq!(
            determinant_i64(&[vec![2, 1, 0], vec![1, 2, 1], vec![0, 1, 2]]),
            4
        );
        assert_eq!(determinant_i64(&[vec![1, 2], vec![2, 4]]), 0);
    }

    /// Cofactor expansion, independent of the elimination path.
    fn det_cofactor(m: &[Vec<i64>]) -> i64 {
        let n = m.len();
        if n == 1 {
            return m[0][0];
        }
        (0..n)
            .map(|j| {
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|r| {
                        r.iter()
                            .enumerate()
                            .filter(|&(k, _)| k != j)
                            .map(|(_, &x)| x)
                            .collect()
                    })
                    .collect();
                let s = if j % 2 == 0 { 1 } else { -1 };
                s * m[0][j] * det_cofactor(&minor)
            })
            .sum()
    }

    proptest! {
        #[test]
        fn determinant_matches_cofactor(entries in proptest::collection::vec(-4i64..=4, 16)) {
            let m: Vec<Vec<i64>> = entries.chunks(4).map(<[i64]>::to_vec).collect();
            prop_assert_eq!(determinant_i64(&m), det_cofactor(&m));
            prop_assert_eq!(rank_i64(&m) == 4, det_cofactor(&m) != 0);
        }
    }
}
