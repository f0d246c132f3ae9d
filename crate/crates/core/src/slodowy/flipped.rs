//! The slice sets with `(f, g, i)` negated in the conditions that do not
//! involve `x`. Every function here is wrong against [`super::centralizer_dim`]
//! away from `b = c = f = g = i = 0`; they exist for comparison only.

use num_traits::Zero;

use super::{SliceVector, Q};

/// `fd + bc = gd + c² = di − b² = gi + f² = 0`.
pub fn in_xtilde(q: &SliceVector) -> bool {
    let SliceVector { b, c, d, f, g, i } = q;
    (f * d + b * c).is_zero()
        && (g * d + c * c).is_zero()
        && (d * i - b * b).is_zero()
        && (g * i + f * f).is_zero()
}

/// `(D, G, I) ↦ q(DI, GD, D², −IG, −G², I²)`.
pub fn pi(d: &Q, g: &Q, i: &Q) -> SliceVector {
    SliceVector::new(d * i, g * d, d * d, -(i * g), -(g * g), i * i)
}

/// Membership in `X̃′ ∪ X″` with this variant of `X̃′`.
pub fn in_x(q: &SliceVector) -> bool {
    in_xtilde(q) || super::in_xdoubleprime(q)
}
