//! Monoids of maximal Cohen–Macaulay modules over one-dimensional rings of
//! finite CM type, with the supporting lattice, polynomial and linear-algebra
//! machinery.

pub mod artin;
pub mod catalog;
pub mod cli;
pub mod error;
pub mod json;
pub mod factor;
pub mod lattice;
pub mod linalg;
pub mod poly;

pub use error::{Error, Result};
