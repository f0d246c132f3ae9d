//! Exact arithmetic in multiquadratic fields `Q(√r_1, ..., √r_k)`.
//!
//! A [`Tower`] fixes the radicands; no product of a nonempty subset of them is
//! a rational square, so the monomials `m_S = Π_{j ∈ S} √r_j` form a basis
//! of dimension `2^k`. Elements store one rational coefficient per subset
//! mask. Multiplication uses `m_S · m_T = (Π_{j ∈ S ∩ T} r_j) · m_{S △ T}`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Square root of a rational, when it is one.
pub fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let n = exact_isqrt(r.numer())?;
    let d = exact_isqrt(r.denom())?;
    Some(BigRational::new(n, d))
}

fn exact_isqrt(n: &BigInt) -> Option<BigInt> {
    let s = n.sqrt();
    (&s * &s == *n).then_some(s)
}

/// A fixed set of independent radicands.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Tower {
    radicands: Vec<BigRational>,
}

impl Tower {
    pub fn new() -> Self {
        Tower::default()
    }

    pub fn radicands(&self) -> &[BigRational] {
        &self.radicands
    }

    pub fn degree(&self) -> usize {
        1 << self.radicands.len()
    }

    fn mask_product(&self, mask: usize) -> BigRational {
        self.radicands
            .iter()
            .enumerate()
            .filter(|(j, _)| mask >> j & 1 == 1)
            .fold(BigRational::one(), |acc, (_, r)| acc * r)
    }

    /// Makes `√r` expressible, adjoining a new radicand only when needed.
    /// Returns `(s, mask)` with `√r = s · m_mask`.
    pub fn adjoin_sqrt(&mut self, r: &BigRational) -> (BigRational, usize) {
        if r.is_zero() {
            return (BigRational::zero(), 0);
        }
        for mask in 0..self.degree() {
            let rs = self.mask_product(mask);
            if let Some(s) = rational_sqrt(&(r * &rs)) {
                return (s / rs, mask);
            }
        }
        self.radicands.push(r.clone());
        (BigRational::one(), self.degree() / 2)
    }
}

/// An element of the field generated by a [`Tower`].
#[derive(Debug, Clone)]
pub struct QuadExt {
    tower: Arc<Tower>,
    coeffs: Vec<BigRational>,
}

impl QuadExt {
    pub fn zero(tower: &Arc<Tower>) -> Self {
        QuadExt {
            tower: Arc::clone(tower),
            coeffs: vec![BigRational::zero(); tower.degree()],
        }
    }

    pub fn from_rational(tower: &Arc<Tower>, r: BigRational) -> Self {
        let mut x = QuadExt::zero(tower);
        x.coeffs[0] = r;
        x
    }

    /// `s · m_mask`.
    pub fn monomial(tower: &Arc<Tower>, s: BigRational, mask: usize) -> Self {
        let mut x = QuadExt::zero(tower);
        x.coeffs[mask] = s;
        x
    }

    /// `√r`, where `r` must already be expressible in `tower`.
    pub fn sqrt_in(tower: &Arc<Tower>, r: &BigRational) -> Option<Self> {
        if r.is_zero() {
            return Some(QuadExt::zero(tower));
        }
        (0..tower.degree()).find_map(|mask| {
            let rs = tower.mask_product(mask);
            rational_sqrt(&(r * &rs)).map(|s| QuadExt::monomial(tower, s / rs, mask))
        })
    }

    pub fn tower(&self) -> &Arc<Tower> {
        &self.tower
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The value as a rational, if it lies in `Q`.
    pub fn to_rational(&self) -> Option<BigRational> {
        self.coeffs[1..]
            .iter()
            .all(Zero::is_zero)
            .then(|| self.coeffs[0].clone())
    }

    fn same_tower(&self, other: &Self) {
        assert!(
            Arc::ptr_eq(&self.tower, &other.tower) || self.tower == other.tower,
            "QuadExt operands from different towers"
        );
    }
}

impl PartialEq for QuadExt {
    fn eq(&self, other: &Self) -> bool {
        self.tower == other.tower && self.coeffs == other.coeffs
    }
}

impl Eq for QuadExt {}

impl Add for &QuadExt {
    type Output = QuadExt;

    fn add(self, rhs: &QuadExt) -> QuadExt {
        self.same_tower(rhs);
        QuadExt {
            tower: Arc::clone(&self.tower),
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &QuadExt {
    type Output = QuadExt;

    fn sub(self, rhs: &QuadExt) -> QuadExt {
        self + &(-rhs)
    }
}

impl Neg for &QuadExt {
    type Output = QuadExt;

    fn neg(self) -> QuadExt {
        QuadExt {
            tower: Arc::clone(&self.tower),
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

impl Neg for QuadExt {
    type Output = QuadExt;

    fn neg(self) -> QuadExt {
        -&self
    }
}

impl Mul for &QuadExt {
    type Output = QuadExt;

    fn mul(self, rhs: &QuadExt) -> QuadExt {
        self.same_tower(rhs);
        let mut out = QuadExt::zero(&self.tower);
        for (s, a) in self.coeffs.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (t, b) in rhs.coeffs.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let factor = self.tower.mask_product(s & t);
                out.coeffs[s ^ t] += a * b * factor;
            }
        }
        out
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = vec![];
        for (mask, c) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let roots: Vec<String> = self
                .tower
                .radicands
                .iter()
                .enumerate()
                .filter(|(j, _)| mask >> j & 1 == 1)
                .map(|(_, r)| format!("sqrt({r})"))
                .collect();
            terms.push(if roots.is_empty() {
                c.to_string()
            } else if c.is_one() {
                roots.join("*")
            } else {
                format!("{c}*{}", roots.join("*"))
            });
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn rational_squares() {
        assert_eq!(rational_sqrt(&q(9, 4)), Some(q(3, 2)));
        assert_eq!(rational_sqrt(&q(2, 1)), None);
        assert_eq!(rational_sqrt(&q(-4, 1)), None);
    }

    #[test]
    fn squaring_a_root_gives_the_radicand() {
        let mut t = Tower::new();
        let rads = [q(2, 1), q(-3, 5), q(-10, 3), q(9, 1), q(-6, 5), q(7, 1)];
        for r in &rads {
            t.adjoin_sqrt(r);
        }
        // -10/3 and -6/5 reduce against 2 and -3/5; 9 is rational
        assert_eq!(t.radicands().len(), 3);
        let t = Arc::new(t);
        for r in &rads {
            let s = QuadExt::sqrt_in(&t, r).unwrap();
            assert_eq!((&s * &s).to_rational(), Some(r.clone()), "{r}");
        }
    }

    #[test]
    fn field_identities() {
        let mut t = Tower::new();
        t.adjoin_sqrt(&q(2, 1));
        t.adjoin_sqrt(&q(-1, 1));
        let t = Arc::new(t);
        let a = &QuadExt::monomial(&t, q(1, 1), 1) + &QuadExt::from_rational(&t, q(3, 1));
        let b = &QuadExt::monomial(&t, q(-2, 3), 3) + &QuadExt::monomial(&t, q(1, 2), 2);
        let c = QuadExt::monomial(&t, q(5, 1), 2);
        assert_eq!(&a * &b, &b * &a);
        assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        assert!((&a - &a).is_zero());
        assert_eq!(a.to_string(), "3 + sqrt(2)");
    }
}
