//! Quon Fourier algebra over unitary modular tensor categories.

pub mod cli;
pub mod error;
pub mod fourier;
pub mod graph;
pub mod graphic;
pub mod io;
pub mod mtc;
pub mod quon;
pub mod recoupling;
pub mod report;

pub use error::{Error, ParseError, Result};
