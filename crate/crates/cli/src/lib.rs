//! Parser, emitters and command dispatch for the `iterhopf` command line tool.

pub mod commands;
pub mod emit;
pub mod parse;

pub use commands::{run, CliError, Command, Options};
pub use emit::{Format, Output};
pub use parse::{parse, ExprAst, SyntaxError};
