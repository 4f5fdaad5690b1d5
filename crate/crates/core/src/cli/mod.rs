//! Command-line front end: expression parsing, output formatting, JSON
//! reports, random instances and the subcommand drivers.

mod commands;
mod format;
mod parse;
pub mod props;
pub mod random;
mod report;

pub use commands::{execute, run, Cli, Command, Outcome};
pub use format::format_operator;
pub use parse::{parse_bipoly, parse_operator, parse_ratfun2};
pub use report::{BoundsJson, OperatorJson, Report, Row, Trials, Verification};
