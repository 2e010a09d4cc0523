//! Exact linear algebra over a non-commutative division algebra
//! (rational quaternions): the row-over-column and column-over-row matrix
//! products, bases and coordinates of left vector spaces, passive and
//! active basis transformations, geometric objects, and the coordinate
//! transformation laws of linear, polylinear and skew-symmetric maps.
//!
//! Everything is exact. Every transformation law in this crate can be
//! checked with `==`, and the [`suite`] module does so on random instances.

pub mod error;
pub mod geometry;
pub mod ncmatrix;
pub mod random;
pub mod scalar;
pub mod suite;
pub mod text;
pub mod transform;
pub mod vspace;

pub use error::{Error, Result};
pub use ncmatrix::NcMatrix;
pub use scalar::{DivisionAlgebra, Quaternion, Rational};
