//! Exact computation of biderivations, centroids and commuting linear maps on
//! finite-dimensional multiplicative Hom-Lie algebras.
//!
//! Everything is carried out over the rationals with arbitrary-precision
//! arithmetic. Solution spaces are returned in a canonical reduced-echelon
//! form so that spaces obtained along different routes (direct solve versus
//! the quotient/restriction reduction) compare equal as data.
//!
//! The crate is `no_std` and only needs `alloc`; file formats and the command
//! line live in the companion `homlie-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod algebra;
pub mod catalog;
pub mod error;
pub mod linalg;
pub mod maps;
pub mod reduction;
pub mod rep;

pub use algebra::{HomLieAlgebra, QuotientData, SimplicityVerdict, ValidationReport};
pub use error::{Error, Hypothesis, Result};
pub use linalg::{Matrix, Scalar, Subspace, Vector};
pub use maps::{BilinearMap, MapKind, MapSpace, Verdict};
pub use rep::{ModuleHomSpace, Representation};
