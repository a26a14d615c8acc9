//! Exact computations in triangulated categories of singularities.
//!
//! The crate is organized bottom-up: [`algebra`] holds fields, polynomials
//! and finite-dimensional algebras; [`groebner`] builds modules over quotient
//! rings on top of Gröbner bases; [`matfac`], [`toric`], [`sodcheck`] and
//! [`ncdef`] implement the geometric computations; [`cli`] binds everything
//! to a command-line driver and a regression manifest.

pub mod algebra;
pub mod cli;
pub mod error;
pub mod groebner;
pub mod matfac;
pub mod ncdef;
pub mod parse;
pub mod sodcheck;
pub mod toric;

pub use error::{Error, Result};
