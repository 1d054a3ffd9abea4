//! `bga`: run the Brauer graph algebra pipeline on a fixture or a graph
//! document and print JSON.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::Value;

#[derive(Parser, Debug)]
#[command(name = "bga", version, about = "Reduction systems, HH² and deformations of Brauer graph algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub opts: Options,
}

#[derive(Subcommand, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    /// Check the graph invariants.
    Validate,
    /// Dimensions, counts and the dimension formula.
    Info,
    /// Irreducible paths and the multiplication table.
    Basis,
    /// Diamond check of the reduction system.
    Diamond,
    /// Second Hochschild cohomology with a basis.
    Hh2,
    /// The standard cocycles and their verification.
    Cocycles,
    /// Deform by a cocycle and check the result.
    Deform,
    /// Run every bundled fixture and compare with the known numbers.
    Selftest,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum DeformType {
    A,
    B,
    C,
    D1,
    D2,
    Custom,
}

impl DeformType {
    fn tag(self) -> &'static str {
        match self {
            DeformType::A => "A",
            DeformType::B => "B",
            DeformType::C => "C",
            DeformType::D1 => "D1",
            DeformType::D2 => "D2",
            DeformType::Custom => "custom",
        }
    }
}

#[derive(clap::Args, Debug, Clone, Default)]
pub struct Options {
    /// Ribbon graph JSON document.
    #[arg(long, global = true, conflicts_with = "fixture")]
    pub input: Option<PathBuf>,
    /// Bundled fixture: ex1, dbl, loc<m>, annulus, torus, ann2.
    #[arg(long, global = true)]
    pub fixture: Option<String>,
    /// Explicit bipartition, e.g. "v1,v2|w".
    #[arg(long, global = true)]
    pub bipartition: Option<String>,
    /// Reduction system JSON (array of {"tip", "replacement"}); replaces the
    /// built one.
    #[arg(long, global = true)]
    pub rules: Option<PathBuf>,
    #[arg(long, alias = "type", global = true, value_enum, ignore_case = true)]
    pub deform_type: Option<DeformType>,
    /// Deformation parameters as JSON, e.g. '{"vertex": "v2", "i": 1}'.
    #[arg(long, global = true)]
    pub params: Option<String>,
    /// Full deformation request document; overrides --deform-type/--params.
    #[arg(long, global = true)]
    pub request: Option<PathBuf>,
    /// `formal:D` or a rational value.
    #[arg(long, global = true)]
    pub t: Option<String>,
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true)]
    pub check_semisimple: bool,
    #[arg(long, global = true)]
    pub pretty: bool,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] bga_core::Error),
    #[error("{0}")]
    Io(String),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    fn code(&self) -> &'static str {
        match self {
            CliError::Core(e) => e.code(),
            CliError::Io(_) => "IoError",
            CliError::Usage(_) => "UsageError",
        }
    }

    /// Verification failures exit 1, bad input exits 2.
    fn exit_status(&self) -> u8 {
        match self {
            CliError::Core(bga_core::Error::NonAssociative(_)) => 1,
            _ => 2,
        }
    }
}

/// A report and whether every check in it passed.
pub struct Outcome {
    pub report: Value,
    pub passed: bool,
}

fn render(v: &Value, pretty: bool) -> String {
    let mut s = if pretty { serde_json::to_string_pretty(v) } else { serde_json::to_string(v) }.expect("serialisable");
    s.push('\n');
    s
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = commands::run(cli.command, &cli.opts);
    let (text, status) = match result {
        Ok(o) => (render(&o.report, cli.opts.pretty), if o.passed { 0 } else { 1 }),
        Err(e) => {
            let v = serde_json::json!({"error": e.code(), "detail": e.to_string()});
            (render(&v, cli.opts.pretty), e.exit_status())
        }
    };
    if let Err(e) = emit(&text, cli.opts.out.as_ref()) {
        eprintln!("{}", render(&serde_json::json!({"error": e.code(), "detail": e.to_string()}), false));
        return ExitCode::from(2);
    }
    ExitCode::from(status)
}
