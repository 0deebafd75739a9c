//! `qpke`: run forward-search and parity-scheme experiments and emit
//! plot-ready JSON or CSV.
//!
//! Exit codes: 0 success, 2 usage error, 3 resource-guard error, 4 I/O error.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand, ValueEnum};
use qpke_core::adversary::AttackMode;
use qpke_core::experiment::{self, Command, ExperimentReport, FamilyChoice, OutputFormat, Parameters, RunConfig};
use qpke_core::Error;

#[derive(Parser)]
#[command(name = "qpke", version, about = "Forward search attacks on quantum-public-key bit encryption")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Symmetry test of one state against N-1 copies of another.
    Symtest(RunArgs),
    /// Single-bit forward search attack.
    Attack(RunArgs),
    /// Compound attack on the parity-encoded scheme.
    Compound(RunArgs),
    /// Helstrom optimum against the symmetry-test attack.
    Helstrom(RunArgs),
    /// Compound-attack success table for s = 1..codeword-len.
    Psuccess(RunArgs),
    /// Codeword length needed for a security threshold.
    Smin(RunArgs),
    /// Overlap bound and Holevo check of a key family.
    Keycheck(RunArgs),
    /// Rerun the configuration echoed in a JSON report (or a bare config).
    Replay {
        path: PathBuf,
        #[arg(long, value_enum)]
        format: Option<Format>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Rotation,
    Random,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Quantum,
    Bernoulli,
}

#[derive(Args)]
struct RunArgs {
    /// Master seed; generated and recorded in the report when omitted.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, default_value_t = 0)]
    trials: u64,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Output file; standard output when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads for trials (results do not depend on it).
    #[arg(long)]
    threads: Option<usize>,

    #[arg(long, value_enum)]
    family: Option<Family>,
    #[arg(long)]
    family_seed: Option<u64>,
    #[arg(long)]
    key_bits: Option<usize>,
    #[arg(long)]
    register_dim: Option<usize>,
    /// T, public-key copies per key.
    #[arg(long)]
    copies_t: Option<usize>,
    /// N, registers of a standalone symmetry test.
    #[arg(long)]
    copies: Option<usize>,
    /// Overlap |<xi|chi>| of a standalone symmetry test.
    #[arg(long)]
    overlap: Option<f64>,
    #[arg(long)]
    codeword_len: Option<usize>,
    #[arg(long, value_enum)]
    mode: Option<Mode>,
    /// Fix the plaintext bit instead of drawing it per trial.
    #[arg(long)]
    plaintext: Option<u8>,
    #[arg(long)]
    epsilon: Option<f64>,
    /// P[b = 0].
    #[arg(long)]
    prior: Option<f64>,
    /// Rotation angle of U1 in radians; pi/2 (the default) is orthogonal.
    #[arg(long)]
    tilt: Option<f64>,
    #[arg(long)]
    overlap_bound: Option<f64>,
    #[arg(long)]
    holevo_margin: Option<f64>,
}

impl From<Format> for OutputFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Json => OutputFormat::Json,
            Format::Csv => OutputFormat::Csv,
        }
    }
}

impl RunArgs {
    fn into_config(self, command: Command) -> RunConfig {
        RunConfig {
            command,
            parameters: Parameters {
                family: self.family.map(|f| match f {
                    Family::Rotation => FamilyChoice::Rotation,
                    Family::Random => FamilyChoice::Random,
                }),
                family_seed: self.family_seed,
                key_bits: self.key_bits,
                register_dim: self.register_dim,
                copies_t: self.copies_t,
                copies: self.copies,
                overlap: self.overlap,
                codeword_len: self.codeword_len,
                mode: self.mode.map(|m| match m {
                    Mode::Quantum => AttackMode::Quantum,
                    Mode::Bernoulli => AttackMode::Bernoulli,
                }),
                plaintext: self.plaintext,
                epsilon: self.epsilon,
                prior: self.prior,
                tilt: self.tilt,
                overlap_bound: self.overlap_bound,
                holevo_margin: self.holevo_margin,
            },
            master_seed: self.seed.unwrap_or_else(fresh_seed),
            trials: self.trials,
            output_format: self.format.into(),
            output_path: self.out,
            threads: self.threads,
        }
    }
}

fn fresh_seed() -> u64 {
    let nanos = SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_nanos() as u64)
        .unwrap_or(0);
    nanos ^ (u64::from(std::process::id()) << 32)
}

fn load_config(path: &PathBuf) -> Result<RunConfig, Error> {
    let text = std::fs::read_to_string(path)?;
    match ExperimentReport::from_json(&text) {
        Ok(report) => {
            report.config.validate()?;
            Ok(report.config)
        }
        Err(_) => RunConfig::from_json(&text),
    }
}

fn execute(cli: Cli) -> Result<(), Error> {
    let config = match cli.command {
        Cmd::Symtest(a) => a.into_config(Command::Symtest),
        Cmd::Attack(a) => a.into_config(Command::Attack),
        Cmd::Compound(a) => a.into_config(Command::Compound),
        Cmd::Helstrom(a) => a.into_config(Command::Helstrom),
        Cmd::Psuccess(a) => a.into_config(Command::Psuccess),
        Cmd::Smin(a) => a.into_config(Command::Smin),
        Cmd::Keycheck(a) => a.into_config(Command::Keycheck),
        Cmd::Replay { path, format, out } => {
            let mut config = load_config(&path)?;
            if let Some(f) = format {
                config.output_format = f.into();
            }
            config.output_path = out;
            config
        }
    };
    let report = experiment::run(&config)?;
    experiment::emit(&report, config.output_format, config.output_path.as_deref())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("qpke: {e}");
            let code = if e.is_io() {
                4
            } else if e.is_resource() {
                3
            } else {
                2
            };
            ExitCode::from(code)
        }
    }
}
