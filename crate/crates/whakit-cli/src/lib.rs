//! Command-line front end for `whakit-core`: bundle files, the example
//! catalog and run reports.

pub mod bundle;
pub mod catalog;
pub mod cli;
pub mod report;

pub use cli::run;
