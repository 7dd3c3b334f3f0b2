//! `hnnlin`: JSON in, JSON out. Exit status 0 on success, 2 on invalid
//! input, 1 when a computation fails.

mod cmd;
mod error;
mod io;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use hnnlin::spectra::DEFAULT_TOL;

use error::CliError;

#[derive(Parser)]
#[command(name = "hnnlin", version, about = "Exact linearization of HNN extensions and doubles over cyclic subgroups")]
struct Cli {
    /// Suppress the human-readable summary on stderr.
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Britton-reduce an HNN word and its cyclic conjugacy class.
    Reduce {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        word: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build π_q or certify words through it.
    #[command(subcommand)]
    Linearize(LinearizeCommand),
    /// Same as `linearize certify`.
    Certify(CertifyArgs),
    /// Evaluate amalgam words in the double of one or two specs over ⟨w⟩.
    Double {
        /// One spec (the double) or two (one per factor).
        #[arg(long, num_args = 1, required = true)]
        spec: Vec<PathBuf>,
        #[arg(long)]
        words: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Floating-point spectral diagnostics.
    #[command(subcommand)]
    Spectra(SpectraCommand),
    /// Pell units and Zariski-dense cyclic subgroups of the norm-one torus.
    #[command(subcommand)]
    Unittorus(UnittorusCommand),
}

#[derive(Subcommand)]
enum LinearizeCommand {
    /// Validate a spec and print the h-basis data and the image of t.
    Build {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Certify a JSON list of HNN words.
    Certify(CertifyArgs),
}

#[derive(Args)]
struct CertifyArgs {
    #[arg(long)]
    spec: PathBuf,
    #[arg(long)]
    words: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct MatrixArgs {
    #[arg(long)]
    matrix: PathBuf,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum SpectraCommand {
    /// Log singular values.
    Cartan(MatrixArgs),
    /// Log eigenvalue moduli.
    Jordan(MatrixArgs),
    /// Translation length of a real or quaternionic matrix.
    Tlen(MatrixArgs),
    /// Finite-ball root-gap fit for a list of generators.
    GapFit {
        /// A matrix file or a file holding a list of generators; repeatable.
        #[arg(long, required = true)]
        matrix: Vec<PathBuf>,
        #[arg(long, default_value_t = 8)]
        radius: usize,
        /// 1-based simple root.
        #[arg(long, default_value_t = 1)]
        root: usize,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare translation lengths of two quaternionic matrices.
    Obstruct {
        /// Two files, or one file holding a list of two matrices.
        #[arg(long, required = true)]
        matrix: Vec<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum UnittorusCommand {
    /// Pell unit for √m and its density certificate.
    Build {
        #[arg(long)]
        m: u64,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn run(cli: Cli) -> Result<Option<String>, CliError> {
    match cli.command {
        Command::Reduce { spec, word, out } => cmd::reduce(&spec, &word, out.as_deref()),
        Command::Linearize(LinearizeCommand::Build { spec, out }) => cmd::linearize_build(&spec, out.as_deref()),
        Command::Linearize(LinearizeCommand::Certify(a)) | Command::Certify(a) => cmd::certify(&a.spec, &a.words, a.out.as_deref()),
        Command::Double { spec, words, out } => cmd::double(&spec, &words, out.as_deref()),
        Command::Spectra(s) => match s {
            SpectraCommand::Cartan(a) => cmd::cartan(&a.matrix, a.out.as_deref()),
            SpectraCommand::Jordan(a) => cmd::jordan(&a.matrix, a.out.as_deref()),
            SpectraCommand::Tlen(a) => cmd::tlen(&a.matrix, a.tol, a.out.as_deref()),
            SpectraCommand::GapFit { matrix, radius, root, tol, out } => cmd::gap_fit(&matrix, radius, root, tol, out.as_deref()),
            SpectraCommand::Obstruct { matrix, tol, out } => cmd::obstruct(&matrix, tol, out.as_deref()),
        },
        Command::Unittorus(UnittorusCommand::Build { m, tol, out }) => cmd::unittorus_build(m, tol, out.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let quiet = cli.quiet;
    match run(cli) {
        Ok(summary) => {
            if let Some(s) = summary.filter(|_| !quiet) {
                eprintln!("{s}");
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("hnnlin: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
