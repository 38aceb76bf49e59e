//! Seminormal forms, Gram determinants, idempotents and block decompositions
//! for cellular algebras with Jucys–Murphy elements, in exact arithmetic.

pub mod error;
pub mod field;
pub mod linalg;
pub mod cellular;
pub mod instances;
pub mod blocks;
pub mod jm;
pub mod report;
pub mod triangular;

pub use error::{Error, Result};
