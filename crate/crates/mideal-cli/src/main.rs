mod commands;
mod input;
mod report;
mod sweep;

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::Value;

use mideal::Field;

use commands::{ComplexCmd, ConstructibleCmd, Context, IdealCmd, LexCmd, ResolutionCmd, SubwordCmd};
use report::{digest, Failure, RunReport, Status};
use sweep::SweepCmd;

#[derive(Parser, Debug)]
#[command(name = "mideal", version, about = "Monomial ideals, free resolutions and simplicial complexes")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Characteristic of the coefficient field; 0 is the rationals.
    #[arg(long = "char", default_value_t = 0, global = true)]
    characteristic: u64,
    /// Seed for the random families of `sweep`.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    /// Worker threads; defaults to the number of cores.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Add wall-clock time to the report. Reports are otherwise reproducible.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Pretty,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Betti numbers, linear quotients, stability and ideal operations
    #[command(subcommand)]
    Ideal(IdealCmd),
    /// Lexsegment ideals L(u, v)
    #[command(subcommand)]
    Lexsegment(LexCmd),
    /// Explicit free resolutions and their verification
    #[command(subcommand)]
    Resolution(ResolutionCmd),
    /// Simplicial complexes through their Stanley-Reisner ideals
    #[command(subcommand)]
    Complex(ComplexCmd),
    /// Constructibility certificates, search and polarization
    #[command(subcommand)]
    Constructible(ConstructibleCmd),
    /// Subword complexes of a word in S_m
    #[command(subcommand)]
    Subword(SubwordCmd),
    /// Property sweeps over exhaustive or seeded random families
    #[command(subcommand)]
    Sweep(SweepCmd),
}

fn command_name(argv: &[String]) -> String {
    // the first two words that are not flags
    let mut words = Vec::new();
    let mut skip = false;
    for a in argv.iter().skip(1) {
        if skip {
            skip = false;
            continue;
        }
        if a.starts_with("--") {
            skip = !a.contains('=') && !matches!(a.as_str(), "--timing");
            continue;
        }
        words.push(a.as_str());
        if words.len() == 2 {
            break;
        }
    }
    words.join(" ")
}

fn dispatch(cli: &Cli, ctx: &Context) -> Result<report::Outcome, Failure> {
    match &cli.command {
        Command::Ideal(c) => commands::ideal(c, ctx),
        Command::Lexsegment(c) => commands::lexsegment(c, ctx),
        Command::Resolution(c) => commands::resolution(c, ctx),
        Command::Complex(c) => commands::complex(c, ctx),
        Command::Constructible(c) => commands::constructible(c, ctx),
        Command::Subword(c) => commands::subword(c, ctx),
        Command::Sweep(c) => sweep::sweep(c, ctx),
    }
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(Status::InputError.code()),
            };
        }
    };
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("--threads: {e}");
            return ExitCode::from(Status::InputError.code());
        }
    }
    let start = Instant::now();
    let outcome = Field::from_char(cli.characteristic)
        .map_err(Failure::from)
        .and_then(|field| dispatch(&cli, &Context { field, seed: cli.seed }));
    let timing_ms = cli.timing.then(|| start.elapsed().as_secs_f64() * 1e3);
    let command = command_name(&argv);
    let report = match outcome {
        Ok(o) => RunReport {
            command,
            input_digest: digest(&o.input),
            input: o.input,
            status: o.status,
            exit_code: o.status.code(),
            result: o.result,
            error: None,
            warnings: o.warnings,
            timing_ms,
            pretty: o.pretty,
        },
        Err(f) => RunReport {
            command,
            input_digest: digest(&Value::Array(argv.iter().skip(1).map(|a| Value::String(a.clone())).collect())),
            input: Value::Null,
            status: f.status,
            exit_code: f.status.code(),
            result: Value::Null,
            error: Some(f.message.clone()),
            warnings: Vec::new(),
            timing_ms,
            pretty: Vec::new(),
        },
    };
    let text = match cli.format {
        Format::Json => report.json() + "\n",
        Format::Pretty => report.pretty(),
    };
    // a closed pipe is the reader's choice, not an error of ours
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
    if let Some(e) = &report.error {
        eprintln!("error: {e}");
    }
    ExitCode::from(report.exit_code)
}
