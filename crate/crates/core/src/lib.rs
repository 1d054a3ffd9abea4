//! Exact computations for Brauer graph algebras: presentations, reduction
//! systems, the diamond lemma, second Hochschild cohomology and deformations.

pub mod deform;
pub mod error;
pub mod exactla;
pub mod fixtures;
pub mod hochschild;
pub mod pathalg;
pub mod presentation;
pub mod ribbon;
pub mod rewrite;

pub use error::{Error, Result};
