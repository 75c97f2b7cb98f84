pub mod cc;
pub mod chebyshev;
pub mod cli;
pub mod cluster;
pub mod decimal;
pub mod error;
pub mod fixtures;
pub mod frieze;
pub mod laurent;
pub mod rep;
pub mod reproduce;
pub mod theta;

pub use error::{Error, Result};
