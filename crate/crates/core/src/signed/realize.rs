//! Concrete representatives of signed cycle types as root-lattice matrices.
//!
//! A signed permutation acts on `ε_1, ..., ε_n`; in the simple-root basis it
//! becomes `P⁻¹ S P`, where the columns of `P` are the simple roots written
//! in the `ε` basis:
//!
//! - `B_n`: `α_i = ε_i − ε_{i+1}`, `α_n = ε_n`
//! - `C_n`: `α_i = ε_i − ε_{i+1}`, `α_n = 2ε_n`
//! - `D_n`: `α_i = ε_i − ε_{i+1}`, `α_n = ε_{n−1} + ε_n`
//!
//! Cycles occupy consecutive coordinates, `α` cycles first. The `II` half of
//! a split class is the `I` representative conjugated by the sign change of
//! `ε_1`.

use num_rational::Rational64;
use num_traits::{One, Zero};

use super::{SignedClass, SplitLabel};
use crate::error::{Error, Result};
use crate::weyl::{Kind, RootSystem, WeylElement};

/// The signed permutation matrix of the standard representative, in the `ε`
/// basis.
pub fn signed_permutation_matrix(c: &SignedClass) -> Vec<Vec<i64>> {
    let n = c.rank();
    let mut s = vec![vec![0i64; n]; n];
    let mut start = 0;
    let cycles = c
        .alpha()
        .iter()
        .map(|&k| (k, 1))
        .chain(c.beta().iter().map(|&k| (k, -1)));
    for (k, last_sign) in cycles {
        for t in 0..k {
            let from = start + t;
            if t + 1 < k {
                s[from + 1][from] = 1;
            } else {
                s[start][from] = last_sign;
            }
        }
        start += k;
    }
    if c.split() == Some(SplitLabel::II) {
        for row in &mut s {
            row[0] = -row[0];
        }
        for x in &mut s[0] {
            *x = -*x;
        }
    }
    s
}

fn simple_roots_in_eps(kind: Kind, n: usize) -> Vec<Vec<i64>> {
    // P[row][col]: coordinate `row` of α_col
    let mut p = vec![vec![0i64; n]; n];
    for j in 0..n - 1 {
        p[j][j] = 1;
        p[j + 1][j] = -1;
    }
    match kind {
        Kind::B => p[n - 1][n - 1] = 1,
        Kind::C => p[n - 1][n - 1] = 2,
        Kind::D => {
            p[n - 2][n - 1] = 1;
            p[n - 1][n - 1] = 1;
        }
        _ => unreachable!("only classical types B, C, D have an ε model here"),
    }
    p
}

fn invert(m: &[Vec<i64>]) -> Vec<Vec<Rational64>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational64>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<Rational64> = row.iter().map(|&x| Rational64::from_integer(x)).collect();
            r.extend((0..n).map(|j| {
                if i == j {
                    Rational64::one()
                } else {
                    Rational64::zero()
                }
            }));
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n)
            .find(|&i| !a[i][c].is_zero())
            .expect("singular basis change");
        a.swap(c, p);
        let inv = a[c][c].recip();
        for x in &mut a[c] {
            *x *= inv;
        }
        for i in 0..n {
            if i != c && !a[i][c].is_zero() {
                let f = a[i][c];
                let pivot_row = a[c].clone();
                for (x, y) in a[i].iter_mut().zip(pivot_row) {
                    *x -= f * y;
                }
            }
        }
    }
    a.into_iter().map(|r| r[n..].to_vec()).collect()
}

/// Converts a signed permutation matrix (in the `ε` basis) to the simple-root
/// basis of `rs`.
pub fn realize_signed_permutation(s: &[Vec<i64>], rs: &RootSystem) -> Result<WeylElement> {
    let n = rs.rank();
    if s.len() != n || !matches!(rs.kind(), Kind::B | Kind::C | Kind::D) {
        return Err(Error::InvalidType {
            kind: rs.kind(),
            rank: n,
        });
    }
    let p = simple_roots_in_eps(rs.kind(), n);
    let p_inv = invert(&p);
    let mut entries = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let mut acc = Rational64::zero();
            for k in 0..n {
                for l in 0..n {
                    if s[k][l] != 0 && p[l][j] != 0 {
                        acc += p_inv[i][k] * Rational64::from_integer(s[k][l] * p[l][j]);
                    }
                }
            }
            assert!(
                acc.is_integer(),
                "signed permutation does not preserve the root lattice"
            );
            entries.push(acc.to_integer());
        }
    }
    Ok(WeylElement::from_entries(n, entries))
}

/// A representative of `c` in the Weyl group of `rs`.
pub fn realize(c: &SignedClass, rs: &RootSystem) -> Result<WeylElement> {
    if !c.belongs_to(rs.kind(), rs.rank()) {
        return Err(Error::TypeMismatch {
            class: c.to_string(),
            kind: rs.kind(),
            rank: rs.rank(),
        });
    }
    realize_signed_permutation(&signed_permutation_matrix(c), rs)
}
