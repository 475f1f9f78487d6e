//! The `semicong` command-line workbench: a small script language for
//! declaring semirings, congruences, varieties and polynomial systems, and
//! subcommands that run one library operation each with stable text output.

pub mod commands;
pub mod error;
pub mod script;

pub use commands::{run, Cli, Command};
pub use error::{CliError, Location};
