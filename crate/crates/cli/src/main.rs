//! `maxmin`: MAX MIN vertex cover numbers, edge-ideal Betti tables, and the
//! bound/classification/spectrum harnesses from the command line.
//!
//! Exit codes: 0 success, 1 usage, 2 parse, 3 resource cap,
//! 4 verification counterexample.

mod commands;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "maxmin", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Combinatorial invariants (τ_max, i, matching numbers, predicates) of
    /// each input graph, one JSON object per line.
    Invariants(GraphArgs),
    /// Graded Betti table of S/I(G).
    Betti(BettiArgs),
    /// Print a named family member as graph6, e.g. `construct hs 5`.
    Construct(ConstructArgs),
    /// Run a verification harness.
    Verify(VerifyArgs),
    /// List one graph6 representative per isomorphism class on n vertices.
    Enumerate(EnumerateArgs),
}

#[derive(Args, Debug, Clone)]
pub struct GraphArgs {
    /// Read graphs from a file (`-` for stdin); graph6 lines or one edge list.
    #[arg(long, conflicts_with = "family")]
    pub graph: Option<String>,
    /// Use a named family instead, e.g. `hs:5`, `c4`, `2k2`, `spectrum:10,5`.
    #[arg(long)]
    pub family: Option<String>,
}

#[derive(Args, Debug)]
pub struct BettiArgs {
    #[command(flatten)]
    pub source: GraphArgs,
    #[command(flatten)]
    pub field: FieldArgs,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Also compute the cover-ideal table and check reg(I^∨) = pd(S/I).
    #[arg(long)]
    pub dual: bool,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct FieldArgs {
    /// Coefficient field characteristic: 0 for the rationals or a prime.
    #[arg(long = "char", default_value_t = 2)]
    pub characteristic: u64,
    /// Largest vertex count for Betti computations.
    #[arg(long, env = "MAXMIN_MAX_N", default_value_t = maxmin::betti::DEFAULT_MAX_N)]
    pub max_n: usize,
}

#[derive(Args, Debug)]
pub struct ConstructArgs {
    /// Family name and parameters: `hs 5`, `gn 27`, `kb 2 3`, `spectrum 10 5`.
    #[arg(required = true, num_args = 1..)]
    pub family: Vec<String>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub p: Option<usize>,
    #[arg(long)]
    pub r: Option<usize>,
    /// Emit an edge list instead of graph6.
    #[arg(long)]
    pub edge_list: bool,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub harness: Harness,
    #[arg(long)]
    pub n: usize,
    /// Restrict `spectrum` and `pdr-build` to a single p.
    #[arg(long)]
    pub p: Option<usize>,
    /// Restrict `pdr-build` to a single r.
    #[arg(long)]
    pub r: Option<usize>,
    /// Visit every isomorphism class (bound, n <= 9).
    #[arg(long, conflicts_with = "samples")]
    pub exhaustive: bool,
    /// Number of random isolate-free samples (bound); requires --seed.
    #[arg(long, env = "MAXMIN_SAMPLES")]
    pub samples: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, default_value_t = 0.5)]
    pub edge_prob: f64,
    #[command(flatten)]
    pub field: FieldArgs,
    /// Report format; `csv` applies to `pdr-spec`.
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct EnumerateArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value_t = Filter::All)]
    pub filter: Filter,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Ascii,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Harness {
    Bound,
    Classification,
    Spectrum,
    PdrSpec,
    PdrBuild,
    Exotic,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Filter {
    All,
    NoIsolated,
    Connected,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    ExitCode::SUCCESS
                }
                _ => ExitCode::from(commands::EXIT_USAGE),
            };
        }
    };
    match commands::run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("maxmin: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
