//! Front-end plumbing for `braidseed`: seed export, word sampling and the
//! verification sweeps behind `braidseed verify`.

pub mod error;
pub mod export;
pub mod sample;
pub mod sweep;

pub use error::{CliError, Outcome};
