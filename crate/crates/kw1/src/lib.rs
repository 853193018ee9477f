//! The `kw1` command-line workbench: input documents, output formats and
//! the orchestration behind each subcommand.

pub mod cache;
pub mod input;
pub mod output;
pub mod polyparse;
pub mod run;
