//! Every chapter of the guide is attached to a module here, so `cargo test`
//! runs its Rust listings as doc-tests against the current library.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/exponent.md")]
pub mod exponent {}
#[doc = include_str!("../../../book/src/constructions.md")]
pub mod constructions {}
#[doc = include_str!("../../../book/src/domination.md")]
pub mod domination {}
#[doc = include_str!("../../../book/src/counting.md")]
pub mod counting {}
#[doc = include_str!("../../../book/src/sieves.md")]
pub mod sieves {}
#[doc = include_str!("../../../book/src/fitting.md")]
pub mod fitting {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
