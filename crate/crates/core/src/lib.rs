pub mod bundle;
pub mod cayley;
pub mod cohomology;
pub mod error;
pub mod field;
pub mod forms;
pub mod lr;
pub mod matrix;
pub mod parse;
pub mod partition;
pub mod report;
pub mod sampling;
pub mod schur;
pub mod series;

pub use error::{Error, Result};
