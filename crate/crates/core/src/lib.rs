//! Exponents `a(G)` of transitive permutation groups and exact counts of
//! number fields over ℚ by discriminant.
//!
//! The group side computes the index of a permutation, the invariant `a(G)`,
//! and builds the permutation representations that come up when comparing
//! counting exponents (regular representations, coset actions, direct and
//! wreath products). The arithmetic side counts quadratic, cyclic prime
//! degree and biquadratic fields exactly and fits the growth exponent of the
//! counts, so that the predicted exponent can be checked against data.

pub mod cli;
pub mod constructions;
pub mod estimator;
pub mod fieldcount;
pub mod ntsieves;
pub mod permcore;

pub use permcore::{AValue, GroupError, Perm, PermError, PermGroup, DEFAULT_CAP};
