//! Monomial ideals: linear quotients, lexsegments, explicit free resolutions,
//! Stanley-Reisner theory, constructible ideals and subword complexes.
//!
//! Every closed-form result is backed by an independent brute-force Betti
//! oracle in [`oracle`].

pub mod betti;
pub mod constructible;
pub mod coxeter;
pub mod error;
pub mod fixtures;
pub mod ideal;
pub mod lexsegment;
pub mod linalg;
pub mod monomial;
pub mod oracle;
pub mod quotients;
pub mod resolution;
pub mod simplicial;

pub use betti::BettiTable;
pub use error::{Error, Result};
pub use ideal::{MonomialIdeal, PrimeDecomposition};
pub use linalg::Field;
pub use monomial::{Monomial, TermOrder};
