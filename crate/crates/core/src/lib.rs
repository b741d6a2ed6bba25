pub mod coeffs;
pub mod error;
pub mod genera;
pub mod graded;
pub mod io;
pub mod pipelines;
pub mod pontrjagin;
pub mod random;
pub mod spaces;
pub mod verify;

pub use error::{Error, ErrorKind, Result};
