//! Integer polynomials, characteristic polynomials of Weyl group elements and
//! their factorization into cyclotomic polynomials.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weyl::{linalg, WeylElement};

/// Polynomial with integer coefficients, lowest degree first, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IntPolynomial(Vec<i64>);

impl IntPolynomial {
    pub fn new(mut coefficients: Vec<i64>) -> Self {
        while coefficients.last() == Some(&0) {
            coefficients.pop();
        }
        IntPolynomial(coefficients)
    }

    pub fn one() -> Self {
        IntPolynomial(vec![1])
    }

    /// `x^n + c`.
    pub fn binomial(n: usize, c: i64) -> Self {
        let mut v = vec![0; n + 1];
        v[0] += c;
        v[n] += 1;
        IntPolynomial::new(v)
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn leading(&self) -> i64 {
        self.0.last().copied().unwrap_or(0)
    }

    pub fn eval(&self, x: i64) -> i64 {
        self.0.iter().rev().fold(0, |acc, &c| acc * x + c)
    }

    /// Division by a monic polynomial: returns `(quotient, remainder)`.
    pub fn div_rem_monic(&self, divisor: &IntPolynomial) -> (IntPolynomial, IntPolynomial) {
        assert_eq!(divisor.leading(), 1, "divisor must be monic");
        let d = divisor.degree();
        if self.0.len() <= d {
            return (IntPolynomial(vec![]), self.clone());
        }
        let mut rem = self.0.clone();
        let mut quot = vec![0; rem.len() - d];
        for k in (0..quot.len()).rev() {
            let c = rem[k + d];
            quot[k] = c;
            if c != 0 {
                for (j, &dc) in divisor.0.iter().enumerate() {
                    rem[k + j] -= c * dc;
                }
            }
        }
        rem.truncate(d);
        (IntPolynomial::new(quot), IntPolynomial::new(rem))
    }

    pub fn pow(&self, e: u32) -> IntPolynomial {
        (0..e).fold(IntPolynomial::one(), |acc, _| &acc * self)
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial(vec![]);
        }
        let mut out = vec![0; self.0.len() + rhs.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            for (j, &b) in rhs.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.0.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let abs = c.abs();
            let coeff = if abs == 1 && k > 0 {
                String::new()
            } else {
                abs.to_string()
            };
            let mono = match k {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{k}"),
            };
            write!(f, "{sign}{coeff}{mono}")?;
            first = false;
        }
        Ok(())
    }
}

/// `det(x·I − w)` computed exactly by the Faddeev–LeVerrier recursion. Every
/// division in the recursion is exact for integer matrices.
pub fn char_poly(w: &WeylElement) -> IntPolynomial {
    let n = w.rank();
    let a: Vec<i128> = w.entries().iter().map(|&x| x as i128).collect();
    let matmul = |x: &[i128], y: &[i128]| {
        let mut out = vec![0i128; n * n];
        for i in 0..n {
            for k in 0..n {
                let xv = x[i * n + k];
                if xv != 0 {
                    for j in 0..n {
                        out[i * n + j] += xv * y[k * n + j];
                    }
                }
            }
        }
        out
    };
    // coefficients c[n] = 1, c[n-k] computed at step k
    let mut coeffs = vec![0i128; n + 1];
    coeffs[n] = 1;
    let mut m = vec![0i128; n * n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = matmul(&a, &m);
        for i in 0..n {
            next[i * n + i] += coeffs[n - k + 1];
        }
        m = next;
        let am = matmul(&a, &m);
        let trace: i128 = (0..n).map(|i| am[i * n + i]).sum();
        debug_assert_eq!(trace % k as i128, 0);
        coeffs[n - k] = -trace / k as i128;
    }
    IntPolynomial::new(
        coeffs
            .into_iter()
            .map(|c| i64::try_from(c).expect("characteristic polynomial coefficient overflow"))
            .collect(),
    )
}

/// Dimension of the 1-eigenspace of `w`, i.e. the nullity of `w − 1`.
pub fn mu(w: &WeylElement) -> usize {
    let n = w.rank();
    let rows: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| w.entry(i, j) - i64::from(i == j)).collect())
        .collect();
    n - linalg::rank_i64(&rows)
}

pub fn euler_phi(mut n: u32) -> u32 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// The `d`-th cyclotomic polynomial, from `x^d − 1 = Π_{e | d} Φ_e`.
pub fn cyclotomic(d: u32) -> IntPolynomial {
    assert!(d >= 1);
    let mut p = IntPolynomial::binomial(d as usize, -1);
    for e in (1..d).filter(|e| d.is_multiple_of(*e)) {
        let (q, r) = p.div_rem_monic(&cyclotomic(e));
        debug_assert!(r.is_zero());
        p = q;
    }
    p
}

/// A multiset of cyclotomic factors `Φ_d^m`, keyed by `d`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CyclotomicProduct {
    factors: BTreeMap<u32, u32>,
}

impl CyclotomicProduct {
    pub fn from_factors<I: IntoIterator<Item = (u32, u32)>>(factors: I) -> Self {
        let mut out = CyclotomicProduct::default();
        for (d, m) in factors {
            if m > 0 {
                *out.factors.entry(d).or_insert(0) += m;
            }
        }
        out
    }

    pub fn factors(&self) -> &BTreeMap<u32, u32> {
        &self.factors
    }

    pub fn multiplicity(&self, d: u32) -> u32 {
        self.factors.get(&d).copied().unwrap_or(0)
    }

    /// `Σ φ(d)·m`.
    pub fn degree(&self) -> usize {
        self.factors
            .iter()
            .map(|(&d, &m)| (euler_phi(d) * m) as usize)
            .sum()
    }

    pub fn expand(&self) -> IntPolynomial {
        self.factors
            .iter()
            .fold(IntPolynomial::one(), |acc, (&d, &m)| {
                &acc * &cyclotomic(d).pow(m)
            })
    }
}

impl fmt::Display for CyclotomicProduct {
    /// Written as `Phi2^2*Phi6`; the empty product is `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|(d, m)| {
                if *m == 1 {
                    format!("Phi{d}")
                } else {
                    format!("Phi{d}^{m}")
                }
            })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

impl FromStr for CyclotomicProduct {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let s = s.trim();
        if s == "1" {
            return Ok(CyclotomicProduct::default());
        }
        let mut factors = vec![];
        for part in s.split('*') {
            let body = part
                .trim()
                .strip_prefix("Phi")
                .ok_or_else(|| format!("factor {part:?} does not start with Phi"))?;
            let (d, m) = match body.split_once('^') {
                Some((d, m)) => (d, m),
                None => (body, "1"),
            };
            let d: u32 = d.parse().map_err(|_| format!("bad index in {part:?}"))?;
            let m: u32 = m.parse().map_err(|_| format!("bad exponent in {part:?}"))?;
            if d == 0 || m == 0 {
                return Err(format!("zero index or exponent in {part:?}"));
            }
            factors.push((d, m));
        }
        Ok(CyclotomicProduct::from_factors(factors))
    }
}

/// Factors a monic polynomial into cyclotomic polynomials by repeated exact
/// division. Candidates are all `d` with `φ(d) ≤ deg p` and `d ≤ 2·deg(p)²`.
pub fn cyclotomic_factor(p: &IntPolynomial) -> Result<CyclotomicProduct> {
    let degree = p.degree();
    if p.leading() != 1 {
        return Err(Error::NotCyclotomic {
            remainder: p.to_string(),
        });
    }
    let cap = (2 * degree * degree).max(2) as u32;
    let mut rest = p.clone();
    let mut factors = vec![];
    for d in 1..=cap {
        if euler_phi(d) as usize > rest.degree() {
            continue;
        }
        let phi_d = cyclotomic(d);
        let mut mult = 0;
        loop {
            let (q, r) = rest.div_rem_monic(&phi_d);
            if !r.is_zero() {
                break;
            }
            rest = q;
            mult += 1;
        }
        if mult > 0 {
            factors.push((d, mult));
        }
        if rest.degree() == 0 {
            break;
        }
    }
    if rest != IntPolynomial::one() {
        return Err(Error::NotCyclotomic {
            remainder: rest.to_string(),
        });
    }
    Ok(CyclotomicProduct::from_factors(factors))
}
