pub mod algebra;
pub mod classify;
pub mod cli;
pub mod code;
pub mod conditions;
pub mod error;
pub mod fp;
pub mod logical;
pub mod oracle;

pub use error::{Error, Result};
