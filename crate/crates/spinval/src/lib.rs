//! Command-line front end for `spinval-core`: exact tables, coefficient
//! listings and the numerical verification report, as text, JSON or CSV.

pub mod cli;
pub mod commands;
pub mod format;
pub mod record;

pub use cli::run;
pub use record::OutputRecord;
