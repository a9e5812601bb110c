//! Aperiodicity, fibrosity and local-consistency lower bounds for promise
//! constraint satisfaction problems.

pub mod aperiodicity;
pub mod boolmat;
pub mod cli;
pub mod consistency;
pub mod error;
pub mod generator;
pub mod hypergraph;
pub mod io;
pub mod pipeline;
pub mod rational;
pub mod structures;

pub use error::{Error, Result};
