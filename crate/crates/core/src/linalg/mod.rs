//! Exact dense linear algebra over any [`FieldKind`](crate::field::FieldKind).

mod json;
mod matrix;
mod minpoly;
mod shape;

pub use matrix::Matrix;
pub use shape::ShapeSet;
