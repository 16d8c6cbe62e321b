pub mod cli;
pub mod cosets;
pub mod cyclic_codes;
pub mod error;
pub mod finite_field;
pub mod modular;
pub mod oracle;
pub mod polynomial;

pub use error::{Error, Result};
