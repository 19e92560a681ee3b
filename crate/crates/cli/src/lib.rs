//! The `lschur` command line, as a library so it can be driven in-process.

mod expr;
mod output;
mod rings;
mod ring_cmd;
mod schur_cmd;
mod series_cmd;

use clap::{Parser, Subcommand, ValueEnum};

use output::{error_code, Outcome};

#[derive(Parser)]
#[command(name = "lschur", version, about = "Symmetric functions, λ-rings and rationality of power series")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    format: Format,

    /// Largest degree any computation may reach.
    #[arg(long, env = "LSCHUR_MAX_DEGREE", default_value_t = lambda_schur::DEFAULT_MAX_DEGREE, global = true)]
    max_degree: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Symmetric functions in the Schur basis.
    Schur {
        #[command(subcommand)]
        op: schur_cmd::SchurOp,
    },
    /// λ-operations and bounds in presented λ-rings.
    Ring {
        #[command(subcommand)]
        op: ring_cmd::RingOp,
    },
    /// Rationality checks for power series.
    Series {
        #[command(subcommand)]
        op: series_cmd::SeriesOp,
    },
}

/// What one invocation printed, and its exit code.
pub struct Invocation {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Runs `lschur` with `args` (without the program name).
pub fn invoke<I, T>(args: I) -> Invocation
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let argv = std::iter::once(std::ffi::OsString::from("lschur")).chain(args.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let (stdout, stderr) = if e.use_stderr() { (String::new(), text) } else { (text, String::new()) };
            return Invocation { stdout, stderr, code };
        }
    };
    let cap = cli.max_degree;
    let result = match cli.command {
        Command::Schur { op } => schur_cmd::run(op, cap),
        Command::Ring { op } => ring_cmd::run(op, cap),
        Command::Series { op } => series_cmd::run(op, cap),
    };
    match result {
        Ok(outcome) => Invocation {
            stdout: render(&outcome, cli.format) + "\n",
            stderr: String::new(),
            code: outcome.exit_code(),
        },
        Err(e) => Invocation {
            stdout: String::new(),
            stderr: format!("error: {}\n", e),
            code: error_code(&e),
        },
    }
}

fn render(outcome: &Outcome, format: Format) -> String {
    match format {
        Format::Human => outcome.human.clone(),
        Format::Json => serde_json::to_string_pretty(&outcome.json).expect("JSON value serializes"),
    }
}
