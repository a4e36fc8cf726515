//! The `bchlab` command line.
//!
//! Exit codes: 0 when every requested check passes, 1 when a check fails,
//! 2 for usage or input errors.

mod commands;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

pub use commands::CliError;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Default cap on `--n` for `gen` and `verify`; `BCHLAB_MAX_N` overrides it.
pub const DEFAULT_MAX_N: usize = 6;

#[derive(Parser, Debug)]
#[command(name = "bchlab", version, about = "Burchnall-Chaundy polynomials and their difference analogues")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Tsv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    #[value(name = "P")]
    P,
    #[value(name = "Q")]
    Q,
    #[value(name = "Q0")]
    Q0,
    #[value(name = "R")]
    R,
    #[value(name = "x")]
    X,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Coords {
    T,
    Q,
    C,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Route {
    Determinant,
    Recurrence,
    Closed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Direction {
    TToQ,
    QToT,
    EvenGauge,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Check {
    Bch,
    Dbch,
    Dodgson,
    ModifiedDodgson,
    Constraint,
    Jacobi,
    Laurent,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Condense,
    Bareiss,
    Both,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the members 1..n of a sequence.
    Gen {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long, value_enum)]
        coords: Option<Coords>,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        route: Option<Route>,
        /// Run every applicable route and fail on disagreement.
        #[arg(long)]
        cross_check: bool,
    },
    /// Print coordinate changes between times and constants.
    Convert {
        #[arg(long, value_enum)]
        direction: Direction,
        #[arg(long)]
        n: usize,
    },
    /// Check a relation or property up to index n.
    Verify {
        #[arg(long, value_enum)]
        relation: Check,
        #[arg(long)]
        n: usize,
    },
    /// Evolve the lattice recurrence on a window.
    Table {
        /// `ones`, `symbolic`, or `file:PATH` (lines `n value`).
        #[arg(long, default_value = "ones")]
        seed: String,
        /// `figure4`, `AxB`, or `m0..m1,n0..n1`.
        #[arg(long, default_value = "figure4", allow_hyphen_values = true)]
        window: String,
        #[arg(long, default_value = "1")]
        alpha: String,
        #[arg(long, default_value = "-1")]
        beta: String,
        /// Fail on 0/0 sites instead of filling them with 1.
        #[arg(long)]
        strict: bool,
        /// Require every cell to be an integer Laurent polynomial.
        #[arg(long)]
        check_laurent: bool,
    },
    /// Determinant of a matrix file.
    Det {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// Continuum limit `P_n` in the constants `c_k`.
    Limit {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        check_against_bch: bool,
        /// Also print the rescaled KdV times.
        #[arg(long)]
        kdv_times: bool,
    },
}

/// Parses `args` (including the program name) and runs the command,
/// writing results to `out` and diagnostics to `err`. Returns the exit code.
pub fn run(args: impl IntoIterator<Item = impl Into<OsString> + Clone>, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if code == EXIT_OK {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };
    match commands::dispatch(&cli, out, err) {
        Ok(true) => EXIT_OK,
        Ok(false) => EXIT_FAILED,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

/// Cap on `--n`, from `BCHLAB_MAX_N` when set.
pub fn max_n() -> Result<usize, CliError> {
    match std::env::var("BCHLAB_MAX_N") {
        Ok(v) => v.trim().parse().map_err(|_| CliError::Usage(format!("BCHLAB_MAX_N={v:?} is not an integer"))),
        Err(_) => Ok(DEFAULT_MAX_N),
    }
}
