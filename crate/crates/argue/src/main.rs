//! Command-line front end: formula checks, extension computation, dialogue
//! games, action prioritisation, and actor-network analysis.
//!
//! Every command is deterministic given its flags; stochastic commands
//! take a mandatory `--seed`. Exit codes: 0 success, 2 usage or parse
//! error, 3 resource cap exceeded, 4 I/O failure.

mod af;
mod ddg;
mod error;
mod formula;
mod net;
mod output;
mod prioritize;

use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(name = "argue", version, about = "Argumentation, dialogues, and actor networks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Truth-table summary of a formula, with optional star-world check
    Formula(formula::FormulaArgs),
    /// Extensions of the argument framework mined from a tagged corpus
    Af(af::AfArgs),
    /// Two-player dialogue games over a thesis
    #[command(subcommand)]
    Ddg(ddg::DdgCommand),
    /// Rank tagged actions by sampled dialogue outcomes
    Prioritize(prioritize::PrioritizeArgs),
    /// Actor-network measures: betweenness, blocks, correlate
    #[command(subcommand)]
    Net(net::NetCommand),
}

fn main() {
    // Die quietly when a downstream pager or `head` closes the pipe.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Formula(args) => formula::run(args),
        Command::Af(args) => af::run(args),
        Command::Ddg(command) => ddg::run(command),
        Command::Prioritize(args) => prioritize::run(args),
        Command::Net(command) => net::run(command),
    };
    if let Err(err) = outcome {
        eprintln!("error: {err}");
        std::process::exit(err.code());
    }
}
