//! Argument parsing and dispatch. Exit codes: 0 success, 1 verification or
//! computation failure, 2 usage or configuration error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use spinval_core::numeric::{Ctx, NormSource, Reference};

use crate::commands::{self, Form};
use crate::format::{Document, Format};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(name = "spinval", version, about = "Critical values of L(s, F12, spin): exact tables and numerical checks")]
pub struct Cli {
    /// Working precision in decimal digits (at least 15).
    #[arg(long, global = true, default_value_t = 30)]
    pub prec: u32,
    /// Dirichlet coefficients for the degree-4 L-function.
    #[arg(long, global = true, default_value_t = 150)]
    pub coeffs: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the output here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Norms {
    /// 40-digit constants.
    Stored,
    /// Recomputed at the working precision.
    Fresh,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Against {
    /// The printed 15-digit columns of the published tables.
    Published,
    /// The exact values rendered with the selected norms.
    Exact,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Regenerate table 1 (projection coefficients) or 2–4 (critical values).
    Table {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=4))]
        which: u8,
        #[arg(long, value_enum, default_value_t = Norms::Stored)]
        norms: Norms,
    },
    /// List Fourier or Dirichlet coefficients.
    Coeffs {
        #[arg(value_enum)]
        form: Form,
        /// Largest index listed.
        #[arg(long, default_value_t = 15)]
        n_max: usize,
    },
    /// Compare the exact values with direct numerical L-values.
    Verify {
        /// Largest accepted relative difference.
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = Norms::Stored)]
        norms: Norms,
        #[arg(long, value_enum, default_value_t = Against::Published)]
        against: Against,
    },
}

impl From<Norms> for NormSource {
    fn from(n: Norms) -> Self {
        match n {
            Norms::Stored => NormSource::Stored,
            Norms::Fresh => NormSource::Fresh,
        }
    }
}

impl From<Against> for Reference {
    fn from(a: Against) -> Self {
        match a {
            Against::Published => Reference::Published,
            Against::Exact => Reference::Exact,
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { stderr.write_all(text.as_bytes()) } else { stdout.write_all(text.as_bytes()) };
            return code;
        }
    };
    if cli.coeffs == 0 {
        let _ = writeln!(stderr, "error: --coeffs must be positive");
        return EXIT_USAGE;
    }
    let ctx = match Ctx::new(cli.prec) {
        Ok(c) => c,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return EXIT_USAGE;
        }
    };

    let (rendered, mut code) = match cli.command {
        Command::Table { which, norms } => match commands::table(which, &ctx, norms.into()) {
            Ok(doc) => (doc.render(cli.format), EXIT_OK),
            Err(e) => return fail(stderr, &e),
        },
        Command::Coeffs { form, n_max } => {
            if n_max == 0 {
                let _ = writeln!(stderr, "error: --n-max must be positive");
                return EXIT_USAGE;
            }
            (commands::coefficients(form, n_max).render(cli.format), EXIT_OK)
        }
        Command::Verify { tol, norms, against } => {
            if !(tol > 0.0 && tol.is_finite()) {
                let _ = writeln!(stderr, "error: --tol must be a positive number");
                return EXIT_USAGE;
            }
            match commands::verify(&ctx, cli.coeffs, norms.into(), against.into(), tol) {
                Ok(doc) => {
                    let code = if doc.passed { EXIT_OK } else { EXIT_FAILED };
                    for r in doc.rows.iter().filter(|r| !r.pass) {
                        let _ = writeln!(stderr, "s={} {}: relative difference {} exceeds {}", r.s, r.branch, r.rel_diff, doc.tolerance);
                    }
                    (doc.render(cli.format), code)
                }
                Err(e) => return fail(stderr, &e),
            }
        }
    };

    let text = match rendered {
        Ok(t) => t,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return EXIT_FAILED;
        }
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, text.as_bytes()),
        None => stdout.write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: writing output: {e}");
        code = EXIT_FAILED;
    }
    code
}

/// A numerical failure, including a coefficient count too small for the
/// requested precision, means the requested accuracy was not reached.
fn fail(stderr: &mut dyn Write, e: &spinval_core::Error) -> u8 {
    let _ = writeln!(stderr, "error: {e}");
    EXIT_FAILED
}
