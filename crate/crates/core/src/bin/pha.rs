use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use partial_hopf::catalog::{catalog, Params};
use partial_hopf::document::Document;
use partial_hopf::pipeline::{exit_code, render, run, Format, Stage};
use partial_hopf::scalar::Field;

#[derive(Parser)]
#[command(name = "pha", about = "Verify partial actions of finite-dimensional Hopf algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: OutFormat,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Text,
    Json,
}

#[derive(clap::Args)]
struct FileArg {
    file: PathBuf,
}

#[derive(Subcommand)]
enum Command {
    /// Algebra, Hopf and partial action axioms.
    Verify(FileArg),
    /// Invariants A^H.
    Invariants(FileArg),
    /// Trace map and its image.
    Trace(FileArg),
    /// Standard globalization.
    Envelope(FileArg),
    /// Partial smash product.
    Smash(FileArg),
    /// Morita context between A^H and the smash product.
    Morita(FileArg),
    /// Partial coaction and canonical map.
    Galois(FileArg),
    /// Every stage, one consolidated report.
    Full(FileArg),
    /// Writes a catalog document.
    Example {
        name: String,
        #[arg(long)]
        alpha: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        hopf: Option<String>,
        #[arg(long)]
        algebra: Option<String>,
        #[arg(long, default_value = "Q")]
        field: String,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

fn input_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("pha: {msg}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = match cli.format {
        OutFormat::Text => Format::Text,
        OutFormat::Json => Format::Json,
    };
    let (stage, file) = match cli.command {
        Command::Example { name, alpha, n, m, hopf, algebra, field, out } => {
            let field = match Field::from_name(&field) {
                Ok(f) => f,
                Err(e) => return input_error(e),
            };
            let doc = match catalog(&name, &Params { field, alpha, n, m, hopf, algebra }) {
                Ok(d) => d,
                Err(e) => return input_error(e),
            };
            let text = doc.to_json();
            return match out {
                Some(path) => match std::fs::write(&path, text) {
                    Ok(()) => ExitCode::SUCCESS,
                    Err(e) => input_error(format!("{}: {e}", path.display())),
                },
                None => {
                    print!("{text}");
                    ExitCode::SUCCESS
                }
            };
        }
        Command::Verify(f) => (Stage::Verify, f.file),
        Command::Invariants(f) => (Stage::Invariants, f.file),
        Command::Trace(f) => (Stage::Trace, f.file),
        Command::Envelope(f) => (Stage::Envelope, f.file),
        Command::Smash(f) => (Stage::Smash, f.file),
        Command::Morita(f) => (Stage::Morita, f.file),
        Command::Galois(f) => (Stage::Galois, f.file),
        Command::Full(f) => (Stage::Full, f.file),
    };
    let text = match std::fs::read_to_string(&file) {
        Ok(t) => t,
        Err(e) => return input_error(format!("{}: {e}", file.display())),
    };
    let report = match Document::from_json(&text).and_then(|d| run(stage, &d)) {
        Ok(r) => r,
        Err(e) => return input_error(format!("{}: {e}", file.display())),
    };
    print!("{}", render(&report, format));
    ExitCode::from(exit_code(&report) as u8)
}
