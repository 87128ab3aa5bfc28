//! Exact integer-quaternion model of the first-generation Standard-Model
//! quanta.
//!
//! Every particle carries a *Lambek charge*, a quaternion with components in
//! {-1, 0, +1}. The fermion number is its scalar part, the electric charge is
//! one third of the sum of its vector components, and charges add at
//! interaction vertices. The charges decompose into the 24 Hurwitz units,
//! which form the binary tetrahedral group Q24.
//!
//! All arithmetic is exact: scalars live in Q, Q(√2) or Q(√5) with
//! big-integer fractions, so every identity checked here is an equality, not
//! a tolerance.

pub mod charge;
pub mod commands;
pub mod decompose;
pub mod error;
pub mod groups;
pub mod particles;
pub mod quaternion;
pub mod report;
pub mod scalar;
pub mod text;
pub mod units;
pub mod vertex;

pub use error::{Error, Result};
pub use quaternion::Quaternion;
pub use scalar::{Field, QuadScalar};
