pub mod chebrec;
pub mod cli;
pub mod error;
pub mod field;
pub mod fraction;
pub mod ore;
pub mod scalar;
pub mod series;

pub use error::{Error, Result};
