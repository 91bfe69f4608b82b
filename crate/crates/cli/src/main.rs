//! `permpow`: count, verify and export pattern-avoiding permutations.

mod cache;
mod commands;
mod config;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use permpow::{Mode, Permutation};

use crate::config::{FileSettings, FlagSettings, Settings, CACHE_ENV};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Resource(String),
    Verify(String),
    Io(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Resource(_) => 3,
            CliError::Verify(_) => 4,
            CliError::Io(_) => 5,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Resource(m) | CliError::Verify(m) | CliError::Io(m) => m,
        }
    }
}

impl From<permpow::Error> for CliError {
    fn from(e: permpow::Error) -> Self {
        let msg = e.to_string();
        match e {
            permpow::Error::InvalidArgument(_) | permpow::Error::Parse { .. } => {
                CliError::Usage(msg)
            }
            permpow::Error::ResourceLimit { .. } => CliError::Resource(msg),
            permpow::Error::Verification(_) => CliError::Verify(msg),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "permpow",
    version,
    about = "Pattern avoidance for permutations and their powers"
)]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct GlobalArgs {
    /// Settings file with key=value lines (max_n, syt_max_boxes, threads, cache).
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,
    /// Result cache (JSON lines); overrides $PERMPOW_CACHE.
    #[arg(long, global = true, value_name = "FILE")]
    cache: Option<PathBuf>,
    /// Do not read or write the result cache.
    #[arg(long, global = true, conflicts_with = "cache")]
    no_cache: bool,
    /// Worker threads for enumeration.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Largest permutation length any search may visit.
    #[arg(long, global = true, value_name = "N")]
    max_length: Option<usize>,
    /// Largest tableau size that may be enumerated.
    #[arg(long, global = true, value_name = "BOXES")]
    syt_max_boxes: Option<usize>,
}

#[derive(Debug, Args, Clone)]
pub struct QueryArgs {
    /// Patterns in one-line notation, comma separated.
    #[arg(long, value_delimiter = ',', num_args = 1.., required = true)]
    pub patterns: Vec<Permutation>,
    #[arg(long, default_value_t = Mode::Plain)]
    pub mode: Mode,
    /// Keep only permutations whose order lies in this set.
    #[arg(long, value_delimiter = ',')]
    pub orders: Vec<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Construction {
    /// Skew sums of self-symmetric blocks whose square is a direct sum of decreasing runs.
    Theorem1,
    /// Order-3 permutation avoiding id_{k+1}.
    Zeta,
    /// The square of zeta.
    Eta,
    /// The r-cycle 23…r1.
    Cyclic,
    /// Order-n powerful avoider of 3412.
    W3412,
    /// 53827614.
    Order12,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Count permutations of length n avoiding the patterns.
    Count {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        query: QueryArgs,
        /// Also list the permutations.
        #[arg(long)]
        witnesses: bool,
    },
    /// Check a counting formula against brute force, or run a property suite.
    Verify {
        #[arg(long, required_unless_present = "suite", conflicts_with = "suite")]
        formula: Option<String>,
        /// rsk, evacuation, symmetry or bounds.
        #[arg(long)]
        suite: Option<String>,
        #[arg(long)]
        min_n: Option<usize>,
        /// Last n for a formula; largest length for the rsk and symmetry suites.
        #[arg(long)]
        max_n: Option<usize>,
        /// Largest tableau for the evacuation suite.
        #[arg(long)]
        max_boxes: Option<usize>,
        /// Block size for the bounds suite.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print verified witnesses from a construction, one per line.
    Witness {
        #[arg(long, value_enum)]
        construction: Construction,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        /// Pattern checked against every power of the cyclic witness.
        #[arg(long, default_value = "2413")]
        pattern: Permutation,
        /// At most this many witnesses.
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Write a sequence as "n a(n)" lines.
    Sequence {
        #[arg(long, conflicts_with = "patterns")]
        formula: Option<String>,
        #[arg(long, value_delimiter = ',', required_unless_present = "formula")]
        patterns: Vec<Permutation>,
        #[arg(long, default_value_t = Mode::Plain)]
        mode: Mode,
        #[arg(long, value_delimiter = ',')]
        orders: Vec<u64>,
        #[arg(long)]
        min_n: Option<usize>,
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Tally the orders of the permutations a count would select.
    Spectrum {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        query: QueryArgs,
    },
}

fn settings(g: &GlobalArgs) -> Result<Settings, CliError> {
    let file = match &g.config {
        Some(p) => FileSettings::load(p)?,
        None => FileSettings::default(),
    };
    let flags = FlagSettings {
        max_n: g.max_length,
        syt_max_boxes: g.syt_max_boxes,
        threads: g.threads,
        cache: g.cache.clone(),
        no_cache: g.no_cache,
    };
    let env = std::env::var_os(CACHE_ENV)
        .filter(|v| !v.is_empty())
        .map(PathBuf::from);
    Settings::resolve(&flags, env, &file)
}

fn run(cli: Cli, out: &mut dyn Write) -> Result<(), CliError> {
    let settings = settings(&cli.global)?;
    let mut ctx = commands::Context::new(settings)?;
    match cli.command {
        Command::Count {
            n,
            query,
            witnesses,
        } => ctx.count(out, n, &query, witnesses),
        Command::Verify {
            formula,
            suite,
            min_n,
            max_n,
            max_boxes,
            k,
            format,
        } => match (formula, suite) {
            (Some(f), _) => ctx.verify_formula(out, &f, min_n, max_n, format),
            (None, Some(s)) => ctx.verify_suite(out, &s, max_n, max_boxes, k, format),
            (None, None) => Err(CliError::Usage("give --formula or --suite".into())),
        },
        Command::Witness {
            construction,
            k,
            r,
            n,
            pattern,
            limit,
        } => ctx.witness(out, construction, k, r, n, &pattern, limit),
        Command::Sequence {
            formula,
            patterns,
            mode,
            orders,
            min_n,
            max_n,
            out: path,
        } => {
            let query = (!patterns.is_empty()).then_some(QueryArgs {
                patterns,
                mode,
                orders,
            });
            ctx.sequence(out, formula.as_deref(), query.as_ref(), min_n, max_n, &path)
        }
        Command::Spectrum { n, query } => ctx.spectrum(out, n, &query),
    }
}

fn main() -> ExitCode {
    let args: Vec<OsString> = std::env::args_os().collect();
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let result = run(cli, &mut out).and_then(|()| out.flush().map_err(CliError::from));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("permpow: {}", e.message());
            ExitCode::from(e.exit_code())
        }
    }
}
