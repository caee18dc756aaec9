//! `mingen`: load finite groups, build Cayley graphs, decompose them into
//! components, and search for minimal generating sets.
//!
//! Exit codes: 0 success, 1 domain errors (bad element names, invalid
//! group axioms, failed verification), 2 parse/usage errors, 3 refusals
//! by a resource guard.

mod builtin;
mod commands;
mod trace;

use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

use cayley::{io, Error, FiniteGroup, Result};

#[derive(Parser)]
#[command(
    name = "mingen",
    version,
    about = "Finite-group toolkit: Cayley graphs, components, minimal generating sets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Where the group comes from; exactly one source must be given.
#[derive(Args)]
#[command(group(ArgGroup::new("source").required(true)))]
struct Source {
    /// Cayley-table file (header of names, then one row per element)
    #[arg(long, value_name = "PATH", group = "source")]
    table: Option<PathBuf>,

    /// Permutation-generator file (cycle notation, one per line)
    #[arg(long, value_name = "PATH", group = "source")]
    perms: Option<PathBuf>,

    /// Standard family: trivial, klein4, cyclic:N, dihedral:N,
    /// symmetric:N, or product:SPEC*SPEC
    #[arg(long, value_name = "SPEC", group = "source")]
    builtin: Option<String>,

    /// Skip the associativity check when loading a table
    #[arg(long)]
    trusted: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Validate the group axioms of the input
    Check {
        #[command(flatten)]
        source: Source,
    },
    /// Print the order and the order of every element
    Info {
        #[command(flatten)]
        source: Source,
    },
    /// Build the Cayley (di)graph and report degree statistics
    Cayley {
        #[command(flatten)]
        source: Source,
        /// Comma-separated generator names
        #[arg(long, value_name = "NAMES", default_value = "")]
        gens: String,
        /// Write a DOT rendering here
        #[arg(long, value_name = "PATH")]
        dot: Option<PathBuf>,
        /// Render the undirected graph instead of the color digraph
        #[arg(long)]
        undirected: bool,
    },
    /// Decompose the Cayley graph into components and verify the coset
    /// correspondence
    Components {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_name = "NAMES", default_value = "")]
        gens: String,
    },
    /// Print the generated subgroup and its index
    Closure {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_name = "NAMES", default_value = "")]
        gens: String,
    },
    /// Extend a subset to a generating set with chain/star connectors
    Connectors {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_name = "NAMES", default_value = "")]
        gens: String,
        #[arg(long, value_enum, default_value_t = ModeArg::Both)]
        mode: ModeArg,
    },
    /// Find a minimal generating set by growing and pruning
    Mingen {
        #[command(flatten)]
        source: Source,
        /// Starting generator (must not be the identity)
        #[arg(long, value_name = "NAME")]
        start: String,
        /// How to pick vertices outside the base component
        #[arg(long, value_enum, default_value_t = PolicyArg::First)]
        policy: PolicyArg,
        /// Comma-separated scripted picks (implies --policy script)
        #[arg(long, value_name = "NAMES")]
        script: Option<String>,
        /// Write the run's trace as JSON lines here
        #[arg(long, value_name = "PATH")]
        trace_json: Option<PathBuf>,
        /// Write a DOT rendering of the final set's color digraph here
        #[arg(long, value_name = "PATH")]
        dot: Option<PathBuf>,
    },
    /// Brute-force the rank: smallest generating set by exhaustive search
    Rank {
        #[command(flatten)]
        source: Source,
        /// Largest subset size to try (default: the group order)
        #[arg(long, value_name = "N")]
        cap: Option<usize>,
    },
    /// Re-run a recorded trace and confirm it reproduces step for step
    VerifyTrace {
        #[command(flatten)]
        source: Source,
        /// Trace file written by `mingen --trace-json`
        #[arg(long, value_name = "PATH")]
        trace: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Chain,
    Star,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PolicyArg {
    First,
    Script,
}

fn load_group(source: &Source) -> Result<FiniteGroup> {
    let read = |path: &PathBuf| {
        std::fs::read_to_string(path)
            .map_err(|e| Error::Usage(format!("cannot read {}: {e}", path.display())))
    };
    if let Some(path) = &source.table {
        let text = read(path)?;
        if source.trusted {
            io::parse_cayley_table_trusted(&text)
        } else {
            io::parse_cayley_table(&text)
        }
    } else if let Some(path) = &source.perms {
        io::parse_permutation_generators(&read(path)?)
    } else {
        builtin::parse_builtin(source.builtin.as_deref().expect("clap enforces one source"))
    }
}

fn run(cli: &Cli) -> Result<i32> {
    match &cli.command {
        Command::Check { source } => match load_group(source) {
            Ok(group) => {
                println!("ok: group axioms hold (order {})", group.order());
                Ok(0)
            }
            Err(Error::InvalidGroup(report)) => {
                println!("invalid: {report}");
                Ok(1)
            }
            Err(other) => Err(other),
        },
        Command::Info { source } => commands::info(&load_group(source)?),
        Command::Cayley {
            source,
            gens,
            dot,
            undirected,
        } => commands::cayley(&load_group(source)?, gens, dot.as_deref(), *undirected),
        Command::Components { source, gens } => commands::components(&load_group(source)?, gens),
        Command::Closure { source, gens } => commands::closure(&load_group(source)?, gens),
        Command::Connectors { source, gens, mode } => {
            let mode = match mode {
                ModeArg::Chain => commands::ConnectorsMode::Chain,
                ModeArg::Star => commands::ConnectorsMode::Star,
                ModeArg::Both => commands::ConnectorsMode::Both,
            };
            commands::connectors_cmd(&load_group(source)?, gens, mode)
        }
        Command::Mingen {
            source,
            start,
            policy,
            script,
            trace_json,
            dot,
        } => commands::mingen(
            &load_group(source)?,
            &commands::MingenArgs {
                start,
                script: script.as_deref(),
                want_script_policy: *policy == PolicyArg::Script,
                trace_json: trace_json.as_deref(),
                dot: dot.as_deref(),
            },
        ),
        Command::Rank { source, cap } => commands::rank(&load_group(source)?, *cap),
        Command::VerifyTrace { source, trace } => {
            commands::verify_trace(&load_group(source)?, trace)
        }
    }
}

fn exit_code(error: &Error) -> i32 {
    match error {
        Error::Parse { .. } | Error::Usage(_) => 2,
        Error::InvalidGroup(_) | Error::Domain(_) => 1,
        Error::Resource(_) => 3,
    }
}

fn main() {
    let cli = Cli::parse();
    let code = match run(&cli) {
        Ok(code) => code,
        Err(error) => {
            eprintln!("error: {error}");
            exit_code(&error)
        }
    };
    std::process::exit(code);
}
