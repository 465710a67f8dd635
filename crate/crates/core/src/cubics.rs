//! Cubic forms: the exact polynomial engine, the [`CubicForm`] type with its
//! JSON interchange format, and the catalog of constructors.

pub mod catalog;
mod form;
mod json;
pub mod poly;

pub use form::{permutation_count, CubicForm, TensorEntry};
pub use poly::{Poly, RandomTest};
