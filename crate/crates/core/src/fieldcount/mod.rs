//! Exact counts over ℚ of quadratic, cyclic prime-degree and biquadratic
//! fields by absolute discriminant, plus ingestion of external census files
//! for families that are not enumerated here.

mod biquadratic;
mod census;
mod cyclic;
mod quadratic;
mod tally;

pub use biquadratic::{biquadratic_fields, biquadratic_tally, count_biquadratic, third_discriminant};
pub use census::{ingest_census, CensusRecord, CENSUS_HEADER};
pub use cyclic::{count_cyclic_ell, cyclic_conductors, cyclic_tally, ConductorEntry};
pub use quadratic::{count_quadratic, fundamental_discriminants, quadratic_tally};
pub use tally::{tally_samples, write_samples, DiscriminantTally};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldCountError {
    #[error("ℓ = {0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("sample grid is not sorted ascending")]
    UnsortedGrid,
    #[error("census header must be {:?}, found {found:?}", CENSUS_HEADER)]
    CensusHeader { found: String },
    #[error("census line {line}: {msg}")]
    CensusLine { line: usize, msg: String },
    #[error("census read failed: {0}")]
    Io(String),
}
