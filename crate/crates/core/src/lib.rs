//! Strata of Weyl groups.
//!
//! The crate is organized around five pieces:
//!
//! - [`weyl`]: root systems, integer reflection representations,
//!   characteristic polynomials, cyclotomic factorization and `μ`.
//! - [`signed`]: conjugacy classes of the classical Weyl groups as signed
//!   cycle types, the map to unipotent labels, stratum fibers and modified
//!   centralizer types.
//! - [`exceptional`]: the elliptic tables for `G2, F4, E6, E7, E8`.
//! - [`brute_force`]: full enumeration of small Weyl groups, used as an
//!   independent oracle.
//! - [`slodowy`]: exact arithmetic on `sp4` and its subregular Slodowy slice.

#![allow(clippy::needless_range_loop)]

pub mod brute_force;
pub mod check;
pub mod error;
pub mod exceptional;
pub mod signed;
pub mod slodowy;
pub mod weyl;

pub use check::CheckItem;
pub use error::{Error, Result};
