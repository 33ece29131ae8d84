//! Exact enumeration of unlabeled trees.
//!
//! The [`series`] and [`multiset`] modules are generic over an exact
//! coefficient ring ([`Scalar`]); the aliases below fix the ring to big
//! integers, which is what every counting routine in the CLI uses.

pub mod error;
pub mod multiset;
pub mod oracle;
pub mod report;
pub mod scalar;
pub mod series;
pub mod trees;
pub mod verify;

pub use error::{Error, Result};
pub use scalar::{ExactDiv, Scalar};
pub use series::PowerSeries;
pub use trees::TreeFamily;

/// Arbitrary-precision signed integer used for every count.
pub type Coefficient = num_bigint::BigInt;
/// Power series over [`Coefficient`].
pub type Series = PowerSeries<Coefficient>;
/// Power series over exact rationals.
pub type RationalSeries = PowerSeries<num_rational::BigRational>;
