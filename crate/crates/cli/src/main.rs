//! `iterhopf`: batch front end for the iterated-integral Hopf algebra kernel.

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use iterhopf_cli::{run, Command, Options};

#[derive(Debug, Parser)]
#[command(name = "iterhopf", version, about = "Exact Hopf algebra of iterated integrals, trees and polylogarithms")]
struct Cli {
    #[command(flatten)]
    opts: Options,
    #[command(subcommand)]
    command: Command,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command, &cli.opts) {
        Ok(out) => {
            let _ = writeln!(std::io::stdout(), "{}", out.render(cli.opts.format));
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("{}", e);
            ExitCode::from(e.exit_code())
        }
    }
}
