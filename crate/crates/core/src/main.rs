use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use graph_hopf::cli::{self, FamilyName, Format, OpArgs};
use graph_hopf::enumerate::Bounds;
use graph_hopf::verify::{run_suite, VerifyConfig};
use graph_hopf::{QParam, Result};

#[derive(Parser)]
#[command(name = "graph-hopf", version, about = "Exact Hopf algebras of graphs and posets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Unordered,
    Ordered,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Json,
    Csv,
}

#[derive(clap::Args)]
struct Common {
    #[arg(long, value_enum, default_value = "unordered")]
    mode: Mode,
    /// `formal` or a rational such as `1/2`.
    #[arg(long, default_value = "formal")]
    q: String,
    #[arg(long, default_value_t = 3)]
    max_vertices: usize,
    #[arg(long, default_value_t = 3)]
    max_edges: usize,
    /// Bound on external half-edges per vertex side.
    #[arg(long, default_value_t = 1)]
    max_ext: u32,
    #[arg(long, value_enum, default_value = "json")]
    format: OutFormat,
    /// Accepted for scripting compatibility; work runs on one thread.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

impl Common {
    fn ordered(&self) -> bool {
        matches!(self.mode, Mode::Ordered)
    }
    fn bounds(&self) -> Bounds {
        Bounds { max_edges: self.max_edges, max_ext: self.max_ext }
    }
    fn format(&self) -> Format {
        match self.format {
            OutFormat::Json => Format::Json,
            OutFormat::Csv => Format::Csv,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// List the isoclasses with `n` vertices, one per line.
    Enumerate {
        family: String,
        n: usize,
        #[command(flatten)]
        common: Common,
    },
    /// product | Delta | delta | antipode | counit | star | pair | realize
    Op {
        op: String,
        /// Inline JSON object, or `@file`.
        left: String,
        right: Option<String>,
        #[arg(long, default_value = "fg")]
        family: String,
        /// Parameters of `delta` (the coaction at `(q1, q2)`).
        #[arg(long, default_value = "0")]
        q1: String,
        #[arg(long, default_value = "0")]
        q2: String,
        /// `equivalent:N`, `ordered:N` or ranks like `0,0,1`.
        #[arg(long)]
        alphabet: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Run a verification suite; exits non-zero if any check fails.
    Verify {
        suite: String,
        /// Poset size bound of the duality suites.
        #[arg(long)]
        max_size: Option<usize>,
        /// Oracle alphabet size.
        #[arg(long, default_value_t = 6)]
        alphabet: usize,
        /// Include per-check timings (output is then not reproducible).
        #[arg(long)]
        timings: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Structure constants as CSV.
    ExportConstants {
        family: String,
        #[arg(long, default_value = "product")]
        op: String,
        #[command(flatten)]
        common: Common,
    },
}

/// Writes to stdout; a closed pipe (`| head`) is not an error.
fn emit(text: &str) -> Result<()> {
    let mut out = io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|()| out.flush()) {
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Enumerate { family, n, common } => {
            let lines = cli::enumerate_lines(FamilyName::parse(&family)?, n, common.bounds(), common.ordered(), common.format())?;
            emit(&lines.iter().map(|l| format!("{l}\n")).collect::<String>())?;
            Ok(true)
        }
        Command::Op { op, left, right, family, q1, q2, alphabet, common } => {
            let args = OpArgs {
                op,
                family: FamilyName::parse(&family)?,
                left: cli::read_json(&left)?,
                right: right.as_deref().map(cli::read_json).transpose()?,
                q: QParam::parse(&common.q)?,
                q1: QParam::parse(&q1)?,
                q2: QParam::parse(&q2)?,
                ordered: common.ordered(),
                alphabet: alphabet.as_deref().map(cli::parse_alphabet).transpose()?,
            };
            emit(&format!("{}\n", serde_json::to_string_pretty(&cli::run_op(&args)?)?))?;
            Ok(true)
        }
        Command::Verify { suite, max_size, alphabet, timings, common } => {
            let cfg = VerifyConfig {
                max_vertices: common.max_vertices,
                max_edges: common.max_edges,
                max_ext: common.max_ext,
                alphabet,
                modes: match common.mode {
                    Mode::Unordered => vec![false],
                    Mode::Ordered => vec![true],
                    Mode::Both => vec![false, true],
                },
                max_size,
                ..VerifyConfig::default()
            };
            let report = run_suite(&suite, &cfg)?;
            emit(&format!("{}\n", serde_json::to_string_pretty(&report.to_json(timings))?))?;
            Ok(report.passed())
        }
        Command::ExportConstants { family, op, common } => {
            let q = QParam::parse(&common.q)?;
            let fam = FamilyName::parse(&family)?;
            emit(&cli::export_constants(fam, &op, common.max_vertices, common.bounds(), common.ordered(), q)?)?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
