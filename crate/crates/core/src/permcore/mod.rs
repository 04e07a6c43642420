//! Permutations, permutation groups and the index invariants `ind(g)` and
//! `a(G)`.

mod closure;
mod group;
mod perm;

pub(crate) use closure::{bfs_closure, word_of};
pub use group::{AValue, PermGroup, DEFAULT_CAP};
pub(crate) use group::orbit;
pub use perm::Perm;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("point {point} out of range for degree {degree}")]
    OutOfRange { point: usize, degree: usize },
    #[error("point {0} repeated in cycle expression")]
    RepeatedPoint(usize),
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("image sequence is not a bijection")]
    NotBijection,
    #[error("degree must be positive")]
    ZeroDegree,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("group order exceeds cap {cap}")]
    CapExceeded { cap: usize },
    #[error("group is trivial")]
    TrivialGroup,
    #[error(transparent)]
    Perm(#[from] PermError),
}
