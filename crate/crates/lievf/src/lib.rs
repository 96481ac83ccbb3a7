//! Exact symbolic analysis of finite-dimensional Lie algebras of rational
//! vector fields: structure theory, generic-point stabilizers, primitivity
//! classification, rational normalization maps, and truncated realizations
//! of abstract pairs as vector-field jets.
//!
//! All arithmetic is exact over the rationals; no floating point anywhere.

// index loops mirror the subscript conventions of the linear algebra
#![allow(clippy::needless_range_loop)]

pub mod error;
pub mod normalization;
pub mod primitivity;
pub mod realization;
pub mod stabilizer;
pub mod structure;
pub mod symbolic;
pub mod vector_fields;

pub use error::{Error, Result};
pub use structure::{StructureConstants, SubalgebraSpec, VectorFieldAlgebra};
pub use symbolic::{Matrix, Polynomial, Rational, RationalFunction, Vars};
pub use vector_fields::{Chart, JetField, MultiVector, VanishingOrder, VectorField};
