// Copyright 2026 The framekit Authors
// SPDX-License-Identifier: Apache-2.0

//! `framekit` command-line front end.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use report::{CliError, Format};

#[derive(Parser, Debug)]
#[command(
    name = "framekit",
    version,
    about = "Pauli and Clifford frame tracking toolkit"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "json", global = true)]
    out: Format,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count good CNOT input pairs and the two T-input classes.
    Counts(commands::CountsArgs),
    /// Check the CNOT propagation identities by matrix products.
    Relations(commands::RelationsArgs),
    /// Evaluate the T-walk cutoff probability and its bounds.
    WalkAnalytic(commands::WalkArgs),
    /// Minimal cutoff n(p) reaching each target probability.
    Fig6(commands::Fig6Args),
    /// Monte Carlo of the T-gate correction walk.
    TWalk(commands::TWalkArgs),
    /// Monte Carlo of the CNOT retry protocol.
    CnotMc(commands::CnotArgs),
    /// Run the Pauli-frame protocol on a circuit file.
    Simulate(commands::SimulateArgs),
    /// Verify that syndrome projection turns Clifford errors into logical Cliffords.
    AppendixA(commands::AppendixArgs),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = match &cli.command {
        Command::Counts(a) => commands::counts(a),
        Command::Relations(a) => commands::relations(a),
        Command::WalkAnalytic(a) => commands::walk_analytic(a),
        Command::Fig6(a) => commands::fig6(a),
        Command::TWalk(a) => commands::t_walk(a),
        Command::CnotMc(a) => commands::cnot_mc(a),
        Command::Simulate(a) => commands::simulate(a),
        Command::AppendixA(a) => commands::appendix_a(a),
    };
    let report = report.map(|mut r| {
        r.config["out"] = report::to_value(&cli.out);
        r
    });
    let result = report.and_then(|r| r.emit(cli.out, cli.output.as_deref()).map(|_| r.passed));
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            if let CliError::Usage(_) = e {
                eprintln!("run `framekit --help` for usage");
            }
            ExitCode::from(2)
        }
    }
}
