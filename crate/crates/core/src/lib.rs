//! Exact-arithmetic construction and verification of difference algebras,
//! 2-term difference A∞-algebras, difference associative 2-algebras, their
//! cohomology, and the correspondences between them.

pub mod ainf2;
pub mod corresp;
pub mod diffainf2;
pub mod cli;
pub mod cohom;
pub mod derived;
pub mod diffalg;
pub mod hbimod;
pub mod error;
pub mod exactlin;
pub mod format;
pub mod genkit;
pub mod report;
pub mod twoalg;

pub use error::{Error, Result};
pub use report::Report;
