//! Exact isometry groups of elliptic 3-manifolds.
//!
//! Every computation runs over cyclotomic fields with rational coordinates;
//! the arithmetic layer is generic over the coordinate type and the rest of
//! the crate uses the aliases below.

pub mod classifier;
pub mod cyclotomic;
pub mod error;
pub mod groups;
pub mod hopf;
pub mod isometry;
pub mod mcg;
pub mod quaternion;
pub mod structural;
pub mod verify;

pub use num_rational::Ratio;

/// Exact rational coordinate type.
pub type Rational = Ratio<i64>;
/// Cyclotomic number with rational coordinates.
pub type Cyc = cyclotomic::Cyclotomic<Rational>;
/// Unit quaternion with exact cyclotomic components.
pub type Quat = quaternion::Quaternion<Rational>;
