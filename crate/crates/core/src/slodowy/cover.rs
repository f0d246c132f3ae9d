//! The double cover `π: (D, G, I) ↦ q(DI, GD, D², IG, G², −I²)` of `X̃′`.

use std::fmt;
use std::sync::Arc;

use num_traits::Zero;

use super::quad::{QuadExt, Tower};
use super::{in_xtilde, SliceVector, Q};
use crate::error::{Error, Result};

pub fn pi(d: &Q, g: &Q, i: &Q) -> SliceVector {
    SliceVector::new(d * i, g * d, d * d, i * g, g * g, -(i * i))
}

/// `π` over a quadratic extension; `None` if a coordinate is irrational.
pub fn pi_quad(p: &[QuadExt; 3]) -> Option<SliceVector> {
    let [d, g, i] = p;
    let coords = [&(d * i), &(g * d), &(d * d), &(i * g), &(g * g), &-(i * i)];
    let r: Option<Vec<Q>> = coords.iter().map(|v| v.to_rational()).collect();
    let r = r?;
    Some(SliceVector::from_array(
        r.try_into().expect("six coordinates"),
    ))
}

/// The fiber of `π` over a point of `X̃′`, written in a field containing the
/// required square roots.
#[derive(Debug, Clone)]
pub struct Preimage {
    pub tower: Arc<Tower>,
    pub points: Vec<[QuadExt; 3]>,
}

impl Preimage {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

impl fmt::Display for Preimage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pts: Vec<String> = self
            .points
            .iter()
            .map(|[d, g, i]| format!("({d}, {g}, {i})"))
            .collect();
        write!(f, "{{{}}}", pts.join(", "))
    }
}

/// All `(D, G, I)` with `π(D, G, I) = q`.
///
/// Square roots of `d`, `g` and `−i` are taken for the nonzero ones; signs
/// are then fixed so that `IG = f` (flipping `G`), then `ID = b` or
/// `DG = c` (flipping `D`, or `G` when `I = 0`). The resulting point and its
/// negative are checked against `q` before returning.
pub fn pi_preimage(q: &SliceVector) -> Result<Preimage> {
    if !in_xtilde(q) {
        return Err(Error::NotInXtilde(q.to_string()));
    }
    let mut tower = Tower::new();
    for r in [&q.d, &q.g, &-q.i.clone()] {
        tower.adjoin_sqrt(r);
    }
    let tower = Arc::new(tower);
    let root = |r: &Q| QuadExt::sqrt_in(&tower, r).expect("radicand adjoined above");
    let rational = |r: &Q| QuadExt::from_rational(&tower, r.clone());

    let (dz, gz, iz) = (q.d.is_zero(), q.g.is_zero(), q.i.is_zero());
    let mut d = root(&q.d);
    let mut g = root(&q.g);
    let i = root(&-q.i.clone());
    match (dz, gz, iz) {
        (true, true, true) => {
            let zero = QuadExt::zero(&tower);
            let origin = [zero.clone(), zero.clone(), zero];
            return finish(q, tower, vec![origin]);
        }
        (true, true, false) | (true, false, true) | (false, true, true) => {}
        (true, false, false) => {
            if &i * &g != rational(&q.f) {
                g = -g;
            }
        }
        (false, false, true) => {
            if &d * &g != rational(&q.c) {
                g = -g;
            }
        }
        (false, true, false) => {
            if &i * &d != rational(&q.b) {
                d = -d;
            }
        }
        (false, false, false) => {
            if &i * &g != rational(&q.f) {
                g = -g;
            }
            if &i * &d != rational(&q.b) {
                d = -d;
            }
        }
    }
    let neg = [-&d, -&g, -&i];
    finish(q, tower, vec![[d, g, i], neg])
}

fn finish(q: &SliceVector, tower: Arc<Tower>, points: Vec<[QuadExt; 3]>) -> Result<Preimage> {
    for p in &points {
        if pi_quad(p).as_ref() != Some(q) {
            return Err(Error::NotInXtilde(format!(
                "{q}: no sign choice reproduces the point"
            )));
        }
    }
    debug_assert!(points.len() == 1 || points.iter().all(|p| p.iter().any(|v| !v.is_zero())));
    Ok(Preimage { tower, points })
}
