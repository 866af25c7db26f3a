//! Command-line front end and verification suites for the `verlinde-core`
//! library: label translation, weight parsing, a shared character cache with
//! on-disk persistence, and JSON/text reports.

pub mod cache;
pub mod commands;
pub mod data;
pub mod error;
pub mod labels;
pub mod report;
pub mod suites;
pub mod weights;

pub use cache::SharedCache;
pub use error::{CliError, CliResult};
pub use report::{Check, Status, VerificationReport};
pub use suites::{Suite, SuiteParams};
