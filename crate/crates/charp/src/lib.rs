//! Command-line front end for `charp-core`: argument parsing, JSON/CSV/text
//! output, an on-disk result cache and multi-prime scans.

pub mod args;
pub mod cache;
pub mod error;
pub mod report;
pub mod run;
pub mod scan;
pub mod session;

pub use error::CliError;
pub use run::run;
