use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;
mod input;
mod verify;

use input::CliError;

#[derive(Parser, Debug)]
#[command(
    name = "equisym",
    version,
    about = "Finite group actions on compact Riemann surfaces"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    output: Format,

    /// Worker threads (default: all cores). Results do not depend on it.
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Group catalog file (JSON); may be repeated.
    #[arg(long, global = true)]
    catalog: Vec<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Signatures of a given dimension satisfying Riemann–Hurwitz.
    Signatures {
        #[arg(long)]
        genus: u64,
        #[arg(long)]
        order: u64,
        #[arg(long)]
        dim: i64,
    },
    /// Surface-kernel generating vectors of a group and signature.
    Vectors {
        #[arg(long)]
        group: String,
        #[arg(long)]
        signature: String,
        #[arg(long)]
        count_only: bool,
    },
    /// Topological classes of actions (equisymmetric strata).
    Strata {
        #[arg(long)]
        group: String,
        #[arg(long)]
        signature: String,
        /// Directory for cached stratum reports.
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Group algebra decomposition of the Jacobian for one action.
    Jacobian {
        #[arg(long)]
        group: String,
        #[arg(long)]
        signature: String,
        #[arg(long, allow_hyphen_values = true)]
        vector: String,
        /// Comma-separated subgroups, e.g. "<r>,<s>,G".
        #[arg(long)]
        subgroups: Option<String>,
        /// Comma-separated nested pairs, e.g. "<r>->G,<s>->G".
        #[arg(long)]
        pryms: Option<String>,
    },
    /// Maximal group orders over a genus range.
    Scan {
        #[arg(long)]
        dim: i64,
        /// Genus range or list, e.g. "2..30" or "5,6,9,10".
        #[arg(long)]
        genus: String,
        /// Skip the realizability phase.
        #[arg(long)]
        arithmetic_only: bool,
    },
    /// Check the stated results for a family against exhaustive computation.
    Verify {
        #[arg(long, value_enum)]
        suite: verify::Suite,
        #[arg(long)]
        genus: Option<String>,
    },
}

pub struct Context {
    pub format: Format,
    pub threads: riemann_actions::Threads,
    pub catalogs: Vec<PathBuf>,
}

fn run(cli: Cli) -> Result<String, CliError> {
    let ctx = Context {
        format: cli.output,
        threads: cli
            .threads
            .map_or_else(riemann_actions::Threads::all, riemann_actions::Threads::new),
        catalogs: cli.catalog,
    };
    match cli.command {
        Command::Signatures { genus, order, dim } => commands::signatures(&ctx, genus, order, dim),
        Command::Vectors {
            group,
            signature,
            count_only,
        } => commands::vectors(&ctx, &group, &signature, count_only),
        Command::Strata {
            group,
            signature,
            cache,
        } => commands::strata(&ctx, &group, &signature, cache),
        Command::Jacobian {
            group,
            signature,
            vector,
            subgroups,
            pryms,
        } => commands::jacobian(
            &ctx,
            &group,
            &signature,
            &vector,
            subgroups.as_deref(),
            pryms.as_deref(),
        ),
        Command::Scan {
            dim,
            genus,
            arithmetic_only,
        } => commands::scan(&ctx, dim, &genus, arithmetic_only),
        Command::Verify { suite, genus } => verify::run(&ctx, suite, genus.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(CliError::Expectation(out)) => {
            print!("{out}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
