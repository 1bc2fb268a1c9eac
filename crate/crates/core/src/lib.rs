//! Exact combinatorial arithmetic for Dolbeault-type vanishing theorems on
//! Grassmannian bundles.
//!
//! Everything here is integer-exact: no floating point anywhere, and all
//! representation dimensions are arbitrary-precision. The crate is organized
//! around the objects the vanishing bounds are made of:
//!
//! - [`partitions`] — the staircase function `delta`, Young-diagram
//!   transposition and rank, the weighted dominance pre-order, and the
//!   lexicographic injection `phi`;
//! - [`schur`] — Littlewood–Richardson products, the hook decomposition of
//!   `S^a ⊗ ∧^b`, tensor powers, Weyl dimensions, and the relative-forms
//!   decomposition of a Grassmann-bundle fibration;
//! - [`bott`] — Bott's algorithm for the cohomology of homogeneous bundles
//!   `S_a Q ⊗ S_b S` on the Grassmannian, plus the projective-space
//!   specialization for twisted holomorphic forms;
//! - [`vanishing`] — the numerical vanishing predicates (threshold / excess
//!   arithmetic) for symmetric-times-exterior powers of ample bundles;
//! - [`spectral`] — index bookkeeping for the Borel–Le Potier spectral
//!   sequence: E1-term placement, connecting-morphism targets, the bound
//!   `Q(x, alpha)`, and the telescoping identities behind the main estimate;
//! - [`harness`] — a falsification harness that computes exact cohomology of
//!   split bundles on projective space and sweeps it against every predicate.
//!
//! All operations are pure functions of immutable values and are safe to call
//! concurrently.

pub mod bott;
pub mod harness;
pub mod partitions;
pub mod schur;
pub mod spectral;
pub mod vanishing;

use thiserror::Error;

/// Error type for every fallible operation in this crate.
///
/// All variants describe domain violations (inputs outside an operation's
/// contract) or arithmetic that would overflow the fixed-width intermediate
/// types; no operation panics on bad input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Parts were not positive and non-increasing.
    #[error("invalid partition {0:?}: parts must be positive and non-increasing")]
    InvalidPartition(Vec<u64>),
    /// Weight entries were not non-increasing.
    #[error("invalid weight {0:?}: entries must be non-increasing")]
    InvalidWeight(Vec<i64>),
    /// An input violated an operation's domain contract.
    #[error("{0}")]
    Domain(String),
    /// Exact arithmetic exceeded the widest intermediate integer type.
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Returns a `Domain` error unless `cond` holds.
macro_rules! ensure {
    ($cond:expr, $($msg:tt)*) => {
        if !$cond {
            return Err($crate::Error::Domain(format!($($msg)*)));
        }
    };
}
pub(crate) use ensure;
