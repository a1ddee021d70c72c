//! Command-line front end for the `quantset` library. The binary is a thin
//! wrapper over [`run`]; the report types are public so their JSON can be
//! read back.

pub mod args;
pub mod commands;
pub mod error;
pub mod output;
pub mod svg;

use args::{Cli, Command};
use error::Result;

pub fn run(cli: &Cli) -> Result<()> {
    match &cli.command {
        Command::Describe(a) => commands::describe::run(a),
        Command::Arma(a) => commands::arma::run(a),
        Command::Garch(a) => commands::garch::run(a),
        Command::Risk(a) => commands::risk::run(a),
        Command::Var(a) => commands::var::run(a),
    }
}
