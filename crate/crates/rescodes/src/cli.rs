//! The `rescodes` command line.
//!
//! Exit codes: 0 on success, 1 when a check fails or a word cannot be
//! decoded, 2 on usage errors, bad input and infeasible searches.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rescodes_core::code::construct;
use rescodes_core::decode::{DecodeStatus, Decoder, DecoderKind};
use rescodes_core::verify::Method;
use rescodes_core::{Family, LinearCode};

use crate::format::{self, DecodeDocument, DistanceDocument, FormatError};
use crate::parallel;
use crate::simulate::simulate;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "rescodes", version, about = "Codes correcting restricted errors over prime fields")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a code and print its parity-check matrix.
    Construct {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
    },
    /// Check the minimum distance of a code.
    Verify {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long, value_enum, default_value_t = VerifyMethod::Auto)]
        method: VerifyMethod,
        /// Distance to certify; defaults to the guaranteed distance.
        #[arg(long)]
        bound: Option<u32>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Decode a comma-separated word read from standard input.
    Decode {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long, value_enum, default_value_t = DecoderChoice::Algebraic)]
        decoder: DecoderChoice,
    },
    /// Decode random codewords hit by `t` unit errors.
    Simulate {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long)]
        t: u32,
        #[arg(long)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = DecoderChoice::Algebraic)]
        decoder: DecoderChoice,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

#[derive(Debug, Args)]
pub struct CodeArgs {
    #[arg(long)]
    pub family: Option<String>,
    #[arg(long)]
    pub p: Option<u64>,
    /// Number of error values, for `perfect1` and CSV matrices.
    #[arg(long, default_value_t = 4)]
    pub m: u32,
    /// Redundancy of a `perfect1` code.
    #[arg(long, default_value_t = 1)]
    pub r: usize,
    /// Value set `A`, as `-k..k` or a list.
    #[arg(long, allow_hyphen_values = true)]
    pub set: Option<String>,
    /// A matrix written by `construct`, instead of `--family`.
    #[arg(long)]
    pub matrix_file: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VerifyMethod {
    Full,
    Bounded,
    Auto,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DecoderChoice {
    Algebraic,
    Bounded,
}

impl From<DecoderChoice> for DecoderKind {
    fn from(c: DecoderChoice) -> Self {
        match c {
            DecoderChoice::Algebraic => DecoderKind::Algebraic,
            DecoderChoice::Bounded => DecoderKind::Bounded,
        }
    }
}

/// A failure carrying the exit code to report.
struct Failure(i32, String);

impl From<FormatError> for Failure {
    fn from(e: FormatError) -> Self {
        Failure(EXIT_USAGE, e.to_string())
    }
}

impl From<rescodes_core::Error> for Failure {
    fn from(e: rescodes_core::Error) -> Self {
        Failure(EXIT_USAGE, e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure(EXIT_USAGE, e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure(EXIT_USAGE, e.to_string())
    }
}

fn load_code(args: &CodeArgs) -> Result<LinearCode, Failure> {
    if let Some(path) = &args.matrix_file {
        let text = std::fs::read_to_string(path)?;
        return Ok(format::read_matrix(&text, args.p, args.m)?);
    }
    let name =
        args.family.as_deref().ok_or_else(|| Failure(EXIT_USAGE, "--family or --matrix-file is required".into()))?;
    let family = Family::from_name(name)
        .filter(|f| *f != Family::Custom)
        .ok_or_else(|| Failure(EXIT_USAGE, format!("unknown family '{name}'")))?;
    let p = args.p.ok_or_else(|| Failure(EXIT_USAGE, "--p is required".into()))?;
    let set = args.set.as_deref().map(format::parse_set).transpose()?;
    Ok(construct(family, p, args.m, args.r, set.as_deref())?)
}

fn print_json<T: serde::Serialize>(out: &mut dyn Write, value: &T) -> Result<(), Failure> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn execute(cli: Cli, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    match cli.command {
        Command::Construct { code, format } => {
            let code = load_code(&code)?;
            if let Some(w) = code.warning() {
                writeln!(err, "warning: {w}")?;
            }
            match format {
                OutputFormat::Json => format::write_json(&code, out)?,
                OutputFormat::Csv => format::write_csv(&code, out)?,
            }
            Ok(EXIT_OK)
        }
        Command::Verify { code, method, bound, jobs } => {
            let code = load_code(&code)?;
            let method = match method {
                VerifyMethod::Full => Some(Method::FullEnumeration),
                VerifyMethod::Bounded => Some(Method::BoundedWeight),
                VerifyMethod::Auto => None,
            };
            let report = parallel::verify(&code, method, bound, jobs)?;
            print_json(out, &DistanceDocument::from(&report))?;
            Ok(if report.certified() { EXIT_OK } else { EXIT_FAIL })
        }
        Command::Decode { code, decoder } => {
            let code = load_code(&code)?;
            let mut text = String::new();
            stdin.read_to_string(&mut text)?;
            let received = format::parse_vector(&text, code.field(), code.len())?;
            let decoder = Decoder::new(&code, decoder.into())?;
            let result = decoder.decode(&received)?;
            let syndrome = code.syndrome(&received)?;
            print_json(out, &DecodeDocument::new(&result, syndrome.values()))?;
            Ok(match result.status {
                DecodeStatus::DetectedUncorrectable => EXIT_FAIL,
                _ => EXIT_OK,
            })
        }
        Command::Simulate { code, t, trials, seed, decoder, jobs } => {
            let code = load_code(&code)?;
            let decoder = Decoder::new(&code, decoder.into())?;
            let report = simulate(&decoder, t, trials, seed, jobs)?;
            print_json(out, &report)?;
            report.write_table(err)?;
            Ok(EXIT_OK)
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match execute(cli, stdin, out, err) {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}
