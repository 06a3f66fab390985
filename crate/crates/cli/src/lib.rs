//! Library side of `ybe-forge`: tensor documents, emitters, subcommands and
//! verification suites.

pub mod commands;
pub mod document;
pub mod emit;
pub mod error;
pub mod verify;

pub use document::{parse_complex, parse_rational, TensorDocument};
pub use error::{CliError, CliResult};
pub use verify::{Suite, Verifier, VerifyReport};
