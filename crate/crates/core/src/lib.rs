//! Root systems inside rings of integers of number fields.
//!
//! The crate builds root systems whose Weyl groups sit inside the group
//! `L(K)` generated by the automorphisms of a number field `K` and the
//! multiplications by its nonzero elements, certifies them with exact
//! arithmetic, and runs the arithmetic elimination pipeline that decides which
//! Weyl groups of rank `n` can embed in `L(K)` for `[K:Q] = n`.
//!
//! Module map:
//!
//! - [`exactmath`]: rationals, matrices, quadratic forms, lattice level sets
//! - [`numberfield`]: fields, integral bases, automorphisms, norms, roots of unity
//! - [`lgroup`]: elements `mult(a)∘g` of `L(K)`, composition, orders, recognition
//! - [`group`]: explicit finite groups and their element-order data
//! - [`rootsystems`]: verification, bases, Dynkin types, Weyl groups
//! - [`weyldata`]: closed-form orders and p-adic valuation tables
//! - [`realizations`]: the rank 1 and 2 realizations and the biquadratic embeddings
//! - [`classify`]: the elimination pipeline over all types of a given rank

pub mod classify;
pub mod error;
pub mod exactmath;
pub mod group;
pub mod lgroup;
pub mod numberfield;
pub mod realizations;
pub mod rootsystems;
pub mod textfmt;
pub mod weyldata;

pub use error::{Error, Result};

/// Default cap on explicitly generated group sizes.
pub const DEFAULT_GROUP_CAP: usize = 1_000_000;

/// Group-generation cap, overridable through `ROOTFIELD_CAP`.
pub fn group_cap() -> usize {
    std::env::var("ROOTFIELD_CAP")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_GROUP_CAP)
}
