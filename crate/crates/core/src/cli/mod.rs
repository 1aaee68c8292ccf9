//! Command-line front end.

pub mod bench;
pub mod document;
pub mod parser;

use std::ffi::OsString;
use std::io::Write;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

pub use document::{equation, parse_table_str, RecurrenceDocument};
pub use parser::parse_operator;

use crate::chebrec::{compute, reduce_order, Algorithm};
use crate::error::Error;
use crate::field::ops;
use crate::series::{catalog, lookup, verify_function};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

pub const SEED_ENV: &str = "ORECHEB_SEED";

#[derive(Parser, Debug)]
#[command(name = "orecheb", version, about = "Recurrences for Chebyshev coefficients of D-finite functions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum AlgoArg {
    Lewanowicz,
    Paszkowski,
    Rebillard,
    Dac,
}

impl From<AlgoArg> for Algorithm {
    fn from(a: AlgoArg) -> Self {
        match a {
            AlgoArg::Lewanowicz => Algorithm::Lewanowicz,
            AlgoArg::Paszkowski => Algorithm::Paszkowski,
            AlgoArg::Rebillard => Algorithm::Rebillard,
            AlgoArg::Dac => Algorithm::Dac,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Compute the recurrence for a differential operator.
    Rec {
        /// Operator, e.g. "(x^2+1)*Dx^2 + 2*x*Dx".
        #[arg(long)]
        op: String,
        #[arg(long, value_enum, default_value = "dac")]
        algo: AlgoArg,
        /// Divide out the common left factor with the denominator.
        #[arg(long)]
        reduce: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Print the equation at symmetric indices c[n-m/2] … c[n+m/2].
        #[arg(long)]
        centered: bool,
    },
    /// Check a computed recurrence against a catalog function.
    Verify {
        #[arg(long)]
        function: String,
        #[arg(long, value_enum, default_value = "dac")]
        algo: AlgoArg,
        /// Highest coefficient index used.
        #[arg(long = "N", default_value_t = 64)]
        n: usize,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
    },
    /// Time all algorithms on random operators.
    Bench {
        #[arg(long, default_value_t = 2)]
        dmax: usize,
        #[arg(long, default_value_t = 16)]
        kmax: usize,
        /// Overridden by ORECHEB_SEED.
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Skip Lewanowicz, whose lclm steps dominate for large k.
        #[arg(long)]
        skip_lewanowicz: bool,
    },
    /// List built-in functions and their operators.
    Catalog,
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Internal(_) => EXIT_INTERNAL,
        _ => EXIT_INPUT,
    }
}

/// Runs the CLI on `args`, writing to `out` and `err`; returns the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<i32, Error> {
    let io = |e: std::io::Error| Error::Internal(format!("write failed: {e}"));
    match cmd {
        Command::Rec {
            op,
            algo,
            reduce,
            format,
            centered,
        } => {
            let l = parse_operator(&op)?;
            let start = Instant::now();
            let (r, count) = ops::measure(|| {
                let r = compute(algo.into(), &l)?;
                if reduce {
                    reduce_order(&r)
                } else {
                    Ok(r)
                }
            });
            let r = r?;
            let ms = start.elapsed().as_secs_f64() * 1e3;
            let doc = RecurrenceDocument::new(&r, &op, centered, reduce, ms, count)?;
            match format {
                Format::Text => write!(out, "{}", doc.to_text()),
                Format::Json => writeln!(out, "{}", doc.to_json()),
            }
            .map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Verify {
            function,
            algo,
            n,
            tol,
        } => {
            let f = lookup(&function)?;
            let rep = verify_function(&f, algo.into(), n, tol)?;
            let a = &rep.annihilation;
            writeln!(
                out,
                "{} {} {}: residual {:.3e} (tol {:.1e}) at n = {}; {} rows checked, {} below noise, n in [{}, {}], {:?} coefficients\nrecurrence: {}",
                if a.pass { "pass" } else { "FAIL" },
                rep.function,
                rep.algorithm,
                a.max_residual,
                a.tol,
                a.worst_n,
                a.checked,
                a.skipped,
                a.n_min,
                a.n_max,
                rep.source,
                equation(&rep.operator, 0),
            )
            .map_err(io)?;
            Ok(if a.pass { EXIT_OK } else { EXIT_VERIFY })
        }
        Command::Bench {
            dmax,
            kmax,
            seed,
            skip_lewanowicz,
        } => {
            let seed = match std::env::var(SEED_ENV) {
                Ok(s) => s.trim().parse().map_err(|_| Error::Parse {
                    pos: 0,
                    msg: format!("{SEED_ENV} must be an unsigned integer, got '{s}'"),
                })?,
                Err(_) => seed,
            };
            let algos: Vec<Algorithm> = Algorithm::ALL
                .into_iter()
                .filter(|a| !(skip_lewanowicz && *a == Algorithm::Lewanowicz))
                .collect();
            let rows = bench::run_bench(dmax, &bench::doubling(kmax), seed, &algos)?;
            writeln!(out, "seed {seed}, d = {dmax}").map_err(io)?;
            write!(out, "{}", bench::format_table(&rows)).map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Catalog => {
            for f in catalog() {
                writeln!(
                    out,
                    "{:<8} {:<36} {:<26} {:?}",
                    f.name, f.description, f.operator_text, f.source
                )
                .map_err(io)?;
            }
            Ok(EXIT_OK)
        }
    }
}
