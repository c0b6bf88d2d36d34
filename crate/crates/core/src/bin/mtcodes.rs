use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use mtcodes::cli::codefile::CodeFile;
use mtcodes::cli::commands::{self, Limits};
use mtcodes::cli::probe::{probe_command, ProbeConfig};
use mtcodes::cli::report::{Outcome, Status};
use mtcodes::cli::verify::{verify, VerifyConfig};
use mtcodes::corpus::CorpusConfig;
use mtcodes::{Error, MTCode};

/// Multi-twisted code analyzer.
#[derive(Parser)]
#[command(name = "mtcodes", version)]
struct Cli {
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,
    /// Codeword cap for minimum-distance enumeration.
    #[arg(long, global = true, default_value_t = mtcodes::mtcode::DEFAULT_MAX_ENUM)]
    max_enum: u64,
    /// Cap on minors evaluated by the determinantal method.
    #[arg(long, global = true, default_value_t = mtcodes::dimension::DEFAULT_MAX_MINORS)]
    max_minors: u64,
    /// Stable key = value output only.
    #[arg(long, global = true)]
    machine: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full report: constituents, decomposition, dimensions, LCD, distances.
    Analyze { file: PathBuf },
    /// Dimension by rank, minors and triangular basis.
    Dim { file: PathBuf },
    /// Basis of the dual code.
    Dual { file: PathBuf },
    /// Minimum distance by enumeration.
    Mindist { file: PathBuf },
    /// Constituents and direct-sum checks.
    Decompose { file: PathBuf },
    /// LCD verdicts by criterion and by hull.
    Lcd { file: PathBuf },
    /// Invariant suite over a seeded random corpus.
    Verify(VerifyArgs),
    /// Bucket a shape's codes by dimension relation and LCD status.
    Probe(ProbeArgs),
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 500)]
    corpus_size: usize,
    /// Leading instances drawn with pairwise coprime cofactors.
    #[arg(long, default_value_t = 125)]
    decomposable: usize,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    #[arg(long)]
    replay_dir: Option<PathBuf>,
    /// Re-check one corpus index.
    #[arg(long)]
    only: Option<usize>,
    #[arg(long, value_delimiter = ',', default_value = "2,3,4,5")]
    q_values: Vec<u32>,
    #[arg(long, default_value_t = 1)]
    ell_min: usize,
    #[arg(long, default_value_t = 3)]
    ell_max: usize,
    #[arg(long, default_value_t = 1)]
    m_min: usize,
    #[arg(long, default_value_t = 6)]
    m_max: usize,
    #[arg(long, default_value_t = 0)]
    rho_min: usize,
    #[arg(long, default_value_t = 3)]
    rho_max: usize,
    /// Codeword cap for the distance checks.
    #[arg(long, default_value_t = 1 << 16)]
    distance_cap: u64,
}

#[derive(Args)]
struct ProbeArgs {
    #[arg(long)]
    q: u32,
    #[arg(long, value_delimiter = ',')]
    modulus: Option<Vec<u32>>,
    #[arg(long, value_delimiter = ',', required = true)]
    lambda: Vec<u32>,
    #[arg(long, value_delimiter = ',', required = true)]
    m: Vec<usize>,
    #[arg(long, default_value_t = 1)]
    rho: usize,
    #[arg(long, default_value_t = 100_000)]
    budget: u64,
}

fn load(path: &PathBuf, limits: &Limits) -> Result<MTCode, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    CodeFile::parse_code(&text, limits.max_q)
}

fn run(cli: Cli) -> Result<Outcome, Error> {
    let limits = Limits { max_enum: cli.max_enum, max_minors: cli.max_minors, ..Limits::default() };
    let file_cmd = |path: &PathBuf, f: fn(&MTCode, &Limits) -> Result<Outcome, Error>| f(&load(path, &limits)?, &limits);
    match cli.command {
        Command::Analyze { file } => file_cmd(&file, commands::analyze),
        Command::Dim { file } => file_cmd(&file, commands::dim),
        Command::Dual { file } => file_cmd(&file, commands::dual),
        Command::Mindist { file } => file_cmd(&file, commands::mindist),
        Command::Decompose { file } => file_cmd(&file, commands::decompose),
        Command::Lcd { file } => file_cmd(&file, commands::lcd),
        Command::Verify(a) => {
            let corpus = CorpusConfig {
                size: a.corpus_size,
                seed: cli.seed,
                q_values: a.q_values,
                ell: a.ell_min..=a.ell_max,
                m: a.m_min..=a.m_max,
                rho: a.rho_min..=a.rho_max,
                decomposable: a.decomposable,
                ..CorpusConfig::default()
            };
            let config = VerifyConfig {
                corpus,
                workers: a.workers,
                distance_cap: a.distance_cap,
                replay_dir: a.replay_dir,
                only: a.only,
            };
            verify(&config, &limits)
        }
        Command::Probe(a) => {
            let config = ProbeConfig {
                q: a.q,
                modulus: a.modulus,
                lambda: a.lambda,
                m: a.m,
                rho: a.rho,
                budget: a.budget,
                seed: cli.seed,
            };
            probe_command(&config, &limits)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { Status::Usage.code() as u8 } else { 0 });
        }
    };
    let machine = cli.machine;
    match run(cli) {
        Ok(out) => {
            print!("{}", out.report.render(machine));
            ExitCode::from(out.status.code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            let status = match e {
                Error::InternalInvariantViolation(_) => Status::Mismatch,
                _ => Status::Usage,
            };
            ExitCode::from(status.code() as u8)
        }
    }
}
