//! Exact computations with principal nilpotent pairs in gl_n / sl_n and their
//! orthogonal and symplectic relatives.
//!
//! Everything is computed over ℚ; there is no floating point anywhere.

pub mod cli;
pub mod cohomology;
pub mod diagrams;
pub mod error;
pub mod exact;
pub mod harmonics;
pub mod multiplicity;
pub mod nilpairs;
pub mod rectangular;
pub mod suites;

pub use error::{Error, Result};

/// Largest diagram size accepted by enumeration and survey entry points
/// unless overridden by `NILPAIR_MAX_N`.
pub const DEFAULT_MAX_N: usize = 10;

/// Size cap from `NILPAIR_MAX_N`, falling back to [`DEFAULT_MAX_N`].
pub fn max_n() -> usize {
    std::env::var("NILPAIR_MAX_N")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_N)
}
