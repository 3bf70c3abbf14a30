mod commands;
mod record;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use szeta::numkernel::rational::parse_rational;
use szeta::numkernel::{PrecisionContext, Rational};

use record::{Emitter, Format};

#[derive(Parser, Debug)]
#[command(name = "szeta", version, about = "Multiple zeta values over zeros of Kummer, Bessel and Airy functions")]
struct Cli {
    /// Working precision in decimal digits.
    #[arg(long, global = true, env = "SZETA_DIGITS", default_value_t = 50)]
    digits: u32,
    /// Number of zeros used by sums over zeros.
    #[arg(long = "zeros", global = true, default_value_t = 200)]
    zero_count: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write records here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Tables of closed-form and oracle values.
    Values {
        #[arg(value_enum)]
        family: Family,
        #[arg(long)]
        quantity: String,
        #[command(flatten)]
        params: Params,
        #[arg(long, default_value = "0..4")]
        n: IndexRange,
        /// Depth for averages.
        #[arg(long)]
        k: Option<usize>,
        /// Base exponent for oracle quantities.
        #[arg(long, default_value_t = 2)]
        s: u32,
        /// Starred (≥) nested sums for the oracle.
        #[arg(long)]
        star: bool,
    },
    /// Identity sweeps; exit status 0 iff every case passes.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long, value_enum)]
        family: Option<Family>,
        #[command(flatten)]
        params: Params,
        #[arg(long)]
        n: Option<IndexRange>,
        #[arg(long)]
        max: Option<usize>,
        #[arg(long)]
        depth: Option<usize>,
    },
    /// Zero tables.
    Zeros {
        #[arg(value_enum)]
        family: Family,
        #[command(flatten)]
        params: Params,
        #[arg(long, default_value_t = 10)]
        count: usize,
        /// Zero-cache file, read before and extended after the run.
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Ground-state and energy-product estimates along a ladder of s.
    Estimate {
        #[arg(value_enum, default_value_t = Family::Airy)]
        family: Family,
        #[command(flatten)]
        params: Params,
        #[arg(long, value_delimiter = ',', default_value = "10,20,30")]
        s: Vec<u32>,
        #[arg(long, default_value_t = 1)]
        r: usize,
        #[arg(long, value_enum, default_value_t = Energy::Magnitude)]
        energy: Energy,
    },
}

#[derive(Args, Debug, Clone, Default)]
pub struct Params {
    /// Bessel order(s); repeat for several.
    #[arg(long, allow_hyphen_values = true)]
    pub nu: Vec<String>,
    #[arg(long)]
    pub a: Option<String>,
    #[arg(long)]
    pub b: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Bessel,
    Hyper,
    Airy,
    AiryPrime,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Oracle,
    Dissection,
    GesselViennot,
    Lommel,
    Krein,
    AiryBessel,
    StarConvolution,
    Quantum,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Energy {
    Magnitude,
    Square,
}

/// `a..b` (inclusive) or a single index.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IndexRange {
    pub lo: usize,
    pub hi: usize,
}

impl IndexRange {
    pub fn iter(&self) -> std::ops::RangeInclusive<usize> {
        self.lo..=self.hi
    }
}

impl FromStr for IndexRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parse = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("bad index '{t}'"));
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (parse(a)?, parse(b.trim_start_matches('='))?),
            None => {
                let v = parse(s)?;
                (v, v)
            }
        };
        if lo > hi {
            return Err(format!("empty range {s}"));
        }
        Ok(IndexRange { lo, hi })
    }
}

pub struct RunConfig {
    pub ctx: PrecisionContext,
    pub zero_count: usize,
}

pub const MAX_DEPTH: usize = 6;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Compute(szeta::error::Error),
    Io(io::Error),
}

impl From<szeta::error::Error> for CliError {
    fn from(e: szeta::error::Error) -> Self {
        CliError::Compute(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

pub fn usage<T>(msg: impl Into<String>) -> Result<T, CliError> {
    Err(CliError::Usage(msg.into()))
}

pub fn rational_arg(name: &str, s: &str) -> Result<Rational, CliError> {
    parse_rational(s).ok_or_else(|| CliError::Usage(format!("--{name}: cannot parse '{s}' as a rational")))
}

fn run(cli: Cli) -> Result<bool, CliError> {
    if cli.digits < 15 {
        return usage("--digits must be at least 15");
    }
    if cli.zero_count < 10 {
        return usage("--zeros must be at least 10");
    }
    let cfg = RunConfig { ctx: PrecisionContext::new(cli.digits)?, zero_count: cli.zero_count };
    let mut em = Emitter::new(cli.digits);
    match &cli.command {
        Command::Values { family, quantity, params, n, k, s, star } => {
            commands::values(&cfg, &mut em, *family, quantity, params, *n, *k, *s, *star)?
        }
        Command::Verify { suite, family, params, n, max, depth } => {
            if depth.is_some_and(|d| d > MAX_DEPTH) {
                return usage(format!("--depth is limited to {MAX_DEPTH}"));
            }
            commands::verify(&cfg, &mut em, *suite, *family, params, *n, *max, *depth)?
        }
        Command::Zeros { family, params, count, cache } => {
            commands::zeros(&cfg, &mut em, *family, params, *count, cache.as_deref())?
        }
        Command::Estimate { family, params, s, r, energy } => {
            commands::estimate(&cfg, &mut em, *family, params, s, *r, *energy)?
        }
    }
    match &cli.out {
        Some(path) => {
            let mut w = BufWriter::new(File::create(path)?);
            em.write(cli.format, &mut w)?;
            w.flush()?;
        }
        None => {
            let stdout = io::stdout();
            let mut w = stdout.lock();
            em.write(cli.format, &mut w)?;
            w.flush()?;
        }
    }
    for r in em.records.iter().filter(|r| r.status == "fail") {
        eprintln!("FAIL {} [{}] defect {} (tol {})", r.quantity, r.parameters, r.value, r.error_bound);
    }
    Ok(em.all_pass())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(CliError::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(CliError::Compute(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(CliError::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
