use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

mod commands;
mod render;

use commands::Outcome;

/// Piecewise testability and PT-separability of finite automata.
///
/// Exit codes: 0 for a positive answer (PT, separable, tower found, ...),
/// 1 for a negative one, 2 for usage, parse and runtime errors.
#[derive(Parser)]
#[command(name = "ptsep", version)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
pub struct Global {
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Include wall-clock timings in the report.
    #[arg(long, global = true)]
    pub timings: bool,
    /// Node budget for oracle searches.
    #[arg(long, global = true, default_value_t = 200_000)]
    pub max_nodes: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether the language of an automaton is piecewise testable.
    PtCheck {
        path: PathBuf,
        /// Largest k for the profile oracle cross-check.
        #[arg(long, default_value_t = 4)]
        kmax: usize,
        /// Skip the oracle cross-check.
        #[arg(long)]
        no_oracle: bool,
    },
    /// Decide whether two languages are separable by a piecewise testable language.
    Separability {
        a: PathBuf,
        b: PathBuf,
        /// Attach a k-PT separator when separable.
        #[arg(long)]
        separator: bool,
        #[arg(long, default_value_t = 6)]
        kmax: usize,
        #[arg(long, default_value_t = 5)]
        hmax: usize,
        #[arg(long)]
        no_oracle: bool,
    },
    /// Search for a tower of the given height by brute force.
    Tower {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        height: usize,
    },
    /// Print the minimal DFA of an automaton.
    Minimize { path: PathBuf },
    /// Print the subset-construction DFA of an automaton.
    Determinize { path: PathBuf },
    /// Monotone circuits and their separability instances.
    #[command(subcommand)]
    Mcvp(McvpCommand),
    /// Brute-force oracles.
    #[command(subcommand)]
    Oracle(OracleCommand),
}

#[derive(Subcommand)]
enum McvpCommand {
    /// Write A_prime.aut, A_min.aut and B.aut for a circuit.
    Build {
        circuit: PathBuf,
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
    },
    /// Print the value of the last gate (0 or 1).
    Eval { circuit: PathBuf },
    /// Decide separability of the reduction and compare with evaluation.
    Endtoend { circuit: PathBuf },
}

#[derive(Subcommand)]
enum OracleCommand {
    /// List the k-profiles of the accepted words.
    Profiles {
        path: PathBuf,
        #[arg(long, default_value_t = 2)]
        k: usize,
    },
    /// Report the heights h ≤ hmax for which towers exist.
    Towers {
        a: PathBuf,
        b: PathBuf,
        #[arg(long, default_value_t = 5)]
        hmax: usize,
    },
    /// Search for a k-PT separator with k ≤ kmax.
    Separator {
        a: PathBuf,
        b: PathBuf,
        #[arg(long, default_value_t = 6)]
        kmax: usize,
    },
}

fn run(cli: &Cli) -> anyhow::Result<Outcome> {
    let g = cli.global;
    match &cli.command {
        Command::PtCheck { path, kmax, no_oracle } => commands::pt_check(g, path, *kmax, !no_oracle),
        Command::Separability {
            a,
            b,
            separator,
            kmax,
            hmax,
            no_oracle,
        } => commands::separability(g, a, b, *separator, *kmax, *hmax, !no_oracle),
        Command::Tower { a, b, height } => commands::tower(g, a, b, *height),
        Command::Minimize { path } => commands::minimize(path),
        Command::Determinize { path } => commands::determinize(path),
        Command::Mcvp(McvpCommand::Build { circuit, out_dir }) => commands::mcvp_build(g, circuit, out_dir),
        Command::Mcvp(McvpCommand::Eval { circuit }) => commands::mcvp_eval(g, circuit),
        Command::Mcvp(McvpCommand::Endtoend { circuit }) => commands::mcvp_endtoend(g, circuit),
        Command::Oracle(OracleCommand::Profiles { path, k }) => commands::oracle_profiles(g, path, *k),
        Command::Oracle(OracleCommand::Towers { a, b, hmax }) => commands::oracle_towers(g, a, b, *hmax),
        Command::Oracle(OracleCommand::Separator { a, b, kmax }) => commands::oracle_separator(g, a, b, *kmax),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(outcome) => {
            let mut out = std::io::stdout().lock();
            // a closed pipe is not an error for the verdict
            let _ = if cli.global.json {
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&outcome.json).expect("serializable report")
                )
            } else {
                write!(out, "{}", outcome.text)
            };
            ExitCode::from(outcome.code)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
