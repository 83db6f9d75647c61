//! Exact-arithmetic toolkit for finite-dimensional Hom-Lie antialgebras: identity
//! checkers, representations, the twisted cochain complex and its cohomology,
//! abelian extensions, and first-order deformations.

pub mod algebra;
pub mod catalog;
pub mod cli;
pub mod deformations;
pub mod cochain;
pub mod cohomology;
pub mod error;
pub mod extensions;
pub mod io;
pub mod linalg;
pub mod matrix;
pub mod report;
pub mod representation;
pub mod scalar;
pub mod tensor;

pub use error::{Error, Result};
