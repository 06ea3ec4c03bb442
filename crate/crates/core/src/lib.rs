pub mod complexes;
pub mod error;
pub mod field;
pub mod graded;
pub mod groebner;
pub mod linearity;
pub mod poly;
pub mod report;

pub use error::{Error, Result};
