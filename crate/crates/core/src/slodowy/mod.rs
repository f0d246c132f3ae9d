//! The Lie algebra `sp4` as 4×4 matrices, its subregular Slodowy slice, and
//! the decomposition of the slice by centralizer dimension.
//!
//! An element has ten coordinates `A..J` placed as
//!
//! ```text
//! A  B  C  D
//! E  F  G  C
//! H  I -F -B
//! J  H -E -A
//! ```
//!
//! The slice point `q(b, c, d, f, g, i)` is the element with `B = b, C = c,
//! D = d, F = f, G = g, I = i, J = 1` and all other coordinates zero. All
//! arithmetic is over `Q` (or an explicit quadratic extension for the
//! preimages of `π`), so every check is an equality.
//!
//! The conditions for `X̃′`, `X′` and the pieces `X1..X3` are the ones forced
//! by the centralizer equations with `x = f² + ig − d`. Reading `x` as
//! `d − f² − ig` instead yields the same sets with `(f, g, i)` negated; that
//! variant lives in [`flipped`] and is kept only to show it disagrees with
//! the centralizer dimensions.

mod cover;
pub mod flipped;
mod quad;
mod sampling;

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::weyl::linalg::{nullity_rational, rank_rational};

pub use cover::{pi, pi_preimage, pi_quad, Preimage};
pub use quad::{rational_sqrt, QuadExt, Tower};
pub use sampling::{run_slice_suite, SampleKind, SliceReport, SLICE_GENERAL_SAMPLES};

pub type Q = BigRational;

pub(crate) fn rat(n: i64) -> Q {
    Q::from_integer(n.into())
}

/// Coordinate names in storage order.
pub const COORDS: [char; 10] = ['A', 'B', 'C', 'D', 'E', 'F', 'G', 'H', 'I', 'J'];

/// `(coordinate, sign)` at each matrix position.
const PATTERN: [[(usize, i8); 4]; 4] = [
    [(0, 1), (1, 1), (2, 1), (3, 1)],
    [(4, 1), (5, 1), (6, 1), (2, 1)],
    [(7, 1), (8, 1), (5, -1), (1, -1)],
    [(9, 1), (7, 1), (4, -1), (0, -1)],
];

/// An element of `sp4` in the ten-coordinate model.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Sp4Element {
    coords: [Q; 10],
}

impl Sp4Element {
    pub fn new(coords: [Q; 10]) -> Self {
        Sp4Element { coords }
    }

    pub fn from_ints(coords: [i64; 10]) -> Self {
        Sp4Element {
            coords: coords.map(rat),
        }
    }

    pub fn zero() -> Self {
        Sp4Element::from_ints([0; 10])
    }

    /// The element with coordinate `k` equal to 1 and the rest 0.
    pub fn basis(k: usize) -> Self {
        let mut c = [0; 10];
        c[k] = 1;
        Sp4Element::from_ints(c)
    }

    pub fn coords(&self) -> &[Q; 10] {
        &self.coords
    }

    /// Coordinate by name (`'A'..='J'`).
    pub fn coord(&self, name: char) -> &Q {
        let k = COORDS
            .iter()
            .position(|&c| c == name)
            .expect("coordinate name A..J");
        &self.coords[k]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn matrix(&self) -> [[Q; 4]; 4] {
        std::array::from_fn(|r| {
            std::array::from_fn(|c| {
                let (k, s) = PATTERN[r][c];
                if s > 0 {
                    self.coords[k].clone()
                } else {
                    -self.coords[k].clone()
                }
            })
        })
    }

    /// Reads the coordinates back from a matrix, rejecting anything outside
    /// the pattern.
    pub fn from_matrix(m: &[[Q; 4]; 4]) -> Result<Self> {
        let mut coords: [Option<Q>; 10] = Default::default();
        for (r, row) in PATTERN.iter().enumerate() {
            for (c, &(k, s)) in row.iter().enumerate() {
                let v = if s > 0 {
                    m[r][c].clone()
                } else {
                    -m[r][c].clone()
                };
                match &coords[k] {
                    None => coords[k] = Some(v),
                    Some(prev) if *prev == v => {}
                    Some(_) => return Err(Error::PatternViolation { row: r, col: c }),
                }
            }
        }
        Ok(Sp4Element {
            coords: coords.map(|c| c.expect("every coordinate occurs")),
        })
    }

    pub fn scale(&self, s: &Q) -> Self {
        Sp4Element {
            coords: std::array::from_fn(|k| &self.coords[k] * s),
        }
    }
}

impl Add for &Sp4Element {
    type Output = Sp4Element;

    fn add(self, rhs: &Sp4Element) -> Sp4Element {
        Sp4Element {
            coords: std::array::from_fn(|k| &self.coords[k] + &rhs.coords[k]),
        }
    }
}

impl Sub for &Sp4Element {
    type Output = Sp4Element;

    fn sub(self, rhs: &Sp4Element) -> Sp4Element {
        Sp4Element {
            coords: std::array::from_fn(|k| &self.coords[k] - &rhs.coords[k]),
        }
    }
}

impl Neg for &Sp4Element {
    type Output = Sp4Element;

    fn neg(self) -> Sp4Element {
        Sp4Element {
            coords: std::array::from_fn(|k| -&self.coords[k]),
        }
    }
}

impl fmt::Display for Sp4Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = COORDS
            .iter()
            .zip(&self.coords)
            .filter(|(_, v)| !v.is_zero())
            .map(|(n, v)| format!("{n}={v}"))
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(", "))
        }
    }
}

fn mat_mul(a: &[[Q; 4]; 4], b: &[[Q; 4]; 4]) -> [[Q; 4]; 4] {
    std::array::from_fn(|r| {
        std::array::from_fn(|c| {
            (0..4)
                .filter(|&k| !a[r][k].is_zero() && !b[k][c].is_zero())
                .fold(Q::zero(), |acc, k| acc + &a[r][k] * &b[k][c])
        })
    })
}

fn mat_rank(m: &[[Q; 4]; 4]) -> usize {
    rank_rational(&m.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
}

/// `xy − yx`.
pub fn bracket(x: &Sp4Element, y: &Sp4Element) -> Result<Sp4Element> {
    let (mx, my) = (x.matrix(), y.matrix());
    let (xy, yx) = (mat_mul(&mx, &my), mat_mul(&my, &mx));
    let diff: [[Q; 4]; 4] = std::array::from_fn(|r| std::array::from_fn(|c| &xy[r][c] - &yx[r][c]));
    Sp4Element::from_matrix(&diff)
}

/// Matrix of `ad x` on the coordinate basis (column `k` is `[x, e_k]`).
pub fn ad_matrix(x: &Sp4Element) -> Result<Vec<Vec<Q>>> {
    let mut rows = vec![vec![Q::zero(); 10]; 10];
    for k in 0..10 {
        let col = bracket(x, &Sp4Element::basis(k))?;
        for (r, v) in col.coords.into_iter().enumerate() {
            rows[r][k] = v;
        }
    }
    Ok(rows)
}

/// `dim` of the centralizer, `10 − rank(ad x)`.
pub fn centralizer_dim(x: &Sp4Element) -> usize {
    let ad = ad_matrix(x).expect("the bracket of two pattern matrices stays in the pattern");
    10 - rank_rational(&ad)
}

/// Ranks of `x, x², x³` as a 4×4 matrix; `(2, 0, 0)` is Jordan type (2,2).
pub fn power_ranks(x: &Sp4Element) -> [usize; 3] {
    let m = x.matrix();
    let m2 = mat_mul(&m, &m);
    let m3 = mat_mul(&m2, &m);
    [mat_rank(&m), mat_rank(&m2), mat_rank(&m3)]
}

/// A point of the slice, `q(b, c, d, f, g, i)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SliceVector {
    pub b: Q,
    pub c: Q,
    pub d: Q,
    pub f: Q,
    pub g: Q,
    pub i: Q,
}

impl SliceVector {
    pub fn new(b: Q, c: Q, d: Q, f: Q, g: Q, i: Q) -> Self {
        SliceVector { b, c, d, f, g, i }
    }

    pub fn from_ints([b, c, d, f, g, i]: [i64; 6]) -> Self {
        SliceVector::new(rat(b), rat(c), rat(d), rat(f), rat(g), rat(i))
    }

    pub fn origin() -> Self {
        SliceVector::from_ints([0; 6])
    }

    pub fn to_array(&self) -> [Q; 6] {
        [
            self.b.clone(),
            self.c.clone(),
            self.d.clone(),
            self.f.clone(),
            self.g.clone(),
            self.i.clone(),
        ]
    }

    pub fn from_array([b, c, d, f, g, i]: [Q; 6]) -> Self {
        SliceVector { b, c, d, f, g, i }
    }

    /// `x = f² + ig − d`.
    pub fn x(&self) -> Q {
        &self.f * &self.f + &self.i * &self.g - &self.d
    }

    pub fn is_origin(&self) -> bool {
        self.to_array().iter().all(Zero::is_zero)
    }

    pub fn to_element(&self) -> Sp4Element {
        let z = Q::zero;
        Sp4Element::new([
            z(),
            self.b.clone(),
            self.c.clone(),
            self.d.clone(),
            z(),
            self.f.clone(),
            self.g.clone(),
            z(),
            self.i.clone(),
            Q::one(),
        ])
    }
}

impl fmt::Display for SliceVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a = self.to_array().map(|v| v.to_string());
        write!(f, "q({})", a.join(", "))
    }
}

impl Serialize for SliceVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// The nilpotent `N` (slice origin) and its partner `N′`.
pub fn n_and_n_prime() -> (Sp4Element, Sp4Element) {
    (Sp4Element::basis(9), Sp4Element::basis(3))
}

/// Coefficients of the six linear conditions on `(E, F, G, H, I, J)` that
/// cut out the centralizer of `q` once `A = 0` and `B, C, D` are eliminated.
pub fn centralizer_system(q: &SliceVector) -> [[Q; 6]; 6] {
    let SliceVector {
        b,
        c,
        d: _,
        f,
        g,
        i,
    } = q;
    let x = q.x();
    let z = Q::zero;
    let ci_bf = c * i + b * f;
    let bg_cf = b * g - c * f;
    [
        // bH + fI − iF = 0
        [z(), -i.clone(), z(), b.clone(), f.clone(), z()],
        // cE + gF − fG = 0
        [c.clone(), g.clone(), -f.clone(), z(), z(), z()],
        // (ci + bf)E + (bg − cf)H = 0
        [ci_bf.clone(), z(), z(), bg_cf.clone(), z(), z()],
        // xH + (ci + bf)J − bF − cI = 0
        [z(), -b.clone(), z(), x.clone(), -c.clone(), ci_bf],
        // −xE + (bg − cf)J − bG + cF = 0
        [-x, c.clone(), -b.clone(), z(), z(), bg_cf],
        // bE + iG − gI − cH = 0
        [b.clone(), z(), i.clone(), -c.clone(), -g.clone(), z()],
    ]
}

pub fn centralizer_system_nullity(q: &SliceVector) -> usize {
    let rows: Vec<Vec<Q>> = centralizer_system(q).iter().map(|r| r.to_vec()).collect();
    nullity_rational(&rows, 6)
}

/// The element with the given `(E, F, G, H, I, J)` and `A = 0`,
/// `B = −iE + fH + bJ`, `C = fE + gH + cJ`, `D = bE + cH + dJ`.
pub fn centralizer_candidate(q: &SliceVector, efghij: &[Q; 6]) -> Sp4Element {
    let [e, f_, g_, h, i_, j] = efghij;
    let SliceVector { b, c, d, f, g, i } = q;
    Sp4Element::new([
        Q::zero(),
        -(i * e) + f * h + b * j,
        f * e + g * h + c * j,
        b * e + c * h + d * j,
        e.clone(),
        f_.clone(),
        g_.clone(),
        h.clone(),
        i_.clone(),
        j.clone(),
    ])
}

/// The linear map `(E..J) ↦ [q, candidate]` as a 10×6 matrix. Its kernel is
/// the solution space of [`centralizer_system`] exactly when the system was
/// transcribed correctly.
pub fn bracket_system(q: &SliceVector) -> Vec<Vec<Q>> {
    let qe = q.to_element();
    let mut m = vec![vec![Q::zero(); 6]; 10];
    for k in 0..6 {
        let mut unit: [Q; 6] = Default::default();
        unit[k] = Q::one();
        let col =
            bracket(&qe, &centralizer_candidate(q, &unit)).expect("pattern closed under bracket");
        for (r, v) in col.coords.into_iter().enumerate() {
            m[r][k] = v;
        }
    }
    m
}

/// `true` when the rows of [`centralizer_system`] and of [`bracket_system`]
/// span the same space.
pub fn system_matches_bracket(q: &SliceVector) -> bool {
    let table: Vec<Vec<Q>> = centralizer_system(q).iter().map(|r| r.to_vec()).collect();
    let derived = bracket_system(q);
    let stacked: Vec<Vec<Q>> = table.iter().chain(&derived).cloned().collect();
    let r = rank_rational(&stacked);
    r == rank_rational(&table) && r == rank_rational(&derived)
}

/// The two parts of the slice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum SliceClass {
    /// Centralizer dimension 4 or 6.
    X,
    /// Centralizer dimension 2.
    Y,
}

pub fn classify_slice(q: &SliceVector) -> Result<SliceClass> {
    match centralizer_dim(&q.to_element()) {
        2 => Ok(SliceClass::Y),
        4 | 6 => Ok(SliceClass::X),
        dim => Err(Error::UnexpectedCentralizerDim {
            point: q.to_string(),
            dim,
        }),
    }
}

/// `fd − bc = gd − c² = di + b² = gi + f² = 0`, the image of [`pi`].
pub fn in_xtilde(q: &SliceVector) -> bool {
    let SliceVector { b, c, d, f, g, i } = q;
    (f * d - b * c).is_zero()
        && (g * d - c * c).is_zero()
        && (d * i + b * b).is_zero()
        && (g * i + f * f).is_zero()
}

/// `b = c = 0` and `f² + ig − d = 0`.
pub fn in_xdoubleprime(q: &SliceVector) -> bool {
    q.b.is_zero() && q.c.is_zero() && q.x().is_zero()
}

/// The subset of `X̃′` with `d ≠ 0`.
pub fn in_xprime(q: &SliceVector) -> bool {
    let SliceVector { b, c, d, f, g, i } = q;
    !d.is_zero()
        && (f * d - b * c).is_zero()
        && (g * d - c * c).is_zero()
        && (d * i + b * b).is_zero()
}

/// `b = c = d = 0` and `gi + f² = 0`, the expected form of `X̃′ ∩ X″`.
pub fn in_intersection_form(q: &SliceVector) -> bool {
    let SliceVector { b, c, d, f, g, i } = q;
    b.is_zero() && c.is_zero() && d.is_zero() && (g * i + f * f).is_zero()
}

/// The six pieces of `X`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Piece {
    X1,
    X2,
    X3,
    X4,
    X5,
    X6,
}

impl Piece {
    pub const ALL: [Piece; 6] = [
        Piece::X1,
        Piece::X2,
        Piece::X3,
        Piece::X4,
        Piece::X5,
        Piece::X6,
    ];

    pub fn index(self) -> usize {
        self as usize + 1
    }

    /// The defining conditions of the piece.
    pub fn contains(self, q: &SliceVector) -> bool {
        let SliceVector { b, c, d, f, g, i } = q;
        let z = |v: &Q| v.is_zero();
        match self {
            Piece::X1 => {
                !z(b) && !z(c) && z(&(b * g - c * f)) && z(&(c * i + b * f)) && z(&(f * d - b * c))
            }
            Piece::X2 => z(b) && !z(c) && z(f) && z(i) && z(&(g * d - c * c)),
            Piece::X3 => !z(b) && z(c) && z(f) && z(g) && z(&(d * i + b * b)),
            Piece::X4 => z(b) && z(c) && z(f) && !z(d) && z(i) && z(g),
            Piece::X5 => z(b) && z(c) && z(f) && z(&(i * g - d)),
            Piece::X6 => z(b) && z(c) && !z(f) && z(&q.x()),
        }
    }
}

impl fmt::Display for Piece {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "X{}", self.index())
    }
}

pub fn matching_pieces(q: &SliceVector) -> Vec<Piece> {
    Piece::ALL.into_iter().filter(|p| p.contains(q)).collect()
}

/// The piece containing `q` when `q ∈ X`, `None` when `q ∈ Y`. A point of
/// `X` in zero or several pieces, or a point of `Y` in any piece, is an error.
pub fn piece_of(q: &SliceVector) -> Result<Option<Piece>> {
    let pieces = matching_pieces(q);
    let class = classify_slice(q)?;
    match (class, pieces.as_slice()) {
        (SliceClass::X, [p]) => Ok(Some(*p)),
        (SliceClass::Y, []) => Ok(None),
        _ => Err(Error::PieceViolation {
            point: q.to_string(),
            pieces: pieces.iter().map(|p| p.index()).collect(),
        }),
    }
}

/// Rank of the Jacobian of `f² + ig − d` in `(d, f, g, i)` at `q`.
pub fn xdoubleprime_jacobian_rank(q: &SliceVector) -> usize {
    let grad = vec![vec![rat(-1), rat(2) * &q.f, q.i.clone(), q.g.clone()]];
    rank_rational(&grad)
}

/// The three families of dimension-4 centralizers in `sp4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum G6Family {
    /// Semisimple, eigenvalues `z, z, −z, −z`.
    EqualPairs,
    /// Semisimple, eigenvalues `z, −z, 0, 0`.
    OnePair,
    /// Nilpotent of Jordan type (2,2).
    Subregular,
}

#[derive(Debug, Clone, Serialize)]
pub struct FamilySample {
    pub family: G6Family,
    pub element: String,
    pub centralizer_dim: usize,
}

/// Representatives of each family for several `z`, with their centralizer
/// dimensions.
pub fn g6_family_samples() -> Vec<FamilySample> {
    let mut out = vec![];
    let scalars = [rat(1), rat(-2), Q::new(3.into(), 7.into())];
    for z in &scalars {
        let mut equal = [0; 10];
        equal[0] = 1;
        equal[5] = 1;
        let mut one = [0; 10];
        one[0] = 1;
        out.push((G6Family::EqualPairs, Sp4Element::from_ints(equal).scale(z)));
        out.push((G6Family::OnePair, Sp4Element::from_ints(one).scale(z)));
    }
    for k in [1, 2, 4, 7] {
        // B, C, E and H each fill two entries: square zero, rank 2
        out.push((G6Family::Subregular, Sp4Element::basis(k)));
    }
    out.into_iter()
        .map(|(family, e)| FamilySample {
            family,
            element: e.to_string(),
            centralizer_dim: centralizer_dim(&e),
        })
        .collect()
}

#[cfg(test)]
mod tests;
