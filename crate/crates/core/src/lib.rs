//! Brieskorn modules, Gauss-Manin connections, mixed Hodge bases and
//! Picard-Fuchs equations for tame polynomials over the rationals.

pub mod algebra;
pub mod error;
pub mod groebner;
pub mod brieskorn;
pub mod gauss_manin;
pub mod mhs;
pub mod picard_fuchs;
pub mod cli;

pub use error::{Error, Result};
