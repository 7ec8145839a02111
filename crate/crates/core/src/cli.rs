//! The `mixcage` command line.
//!
//! Exit codes: 0 on success, 1 when a verification fails, 2 for usage
//! errors, 3 for invalid input such as a field order that is not a prime
//! power or a malformed graph file.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::format::{parse_mixed, render_mixed};
use crate::gf::{make_field, prime_power};
use crate::girth::mixed_girth;
use crate::mixed::{build_circulant_digraph, build_hq};
use crate::plane::{build_pg2, build_semiplane};
use crate::verify::{bounds, verify_hq, GIRTH_CUTOFF};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INVALID_INPUT: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "mixcage",
    version,
    about = "Build and certify mixed graphs of girth five from elliptic semiplanes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the field GF(q): modulus, primitive element and exponent table.
    Field { q: u64 },
    /// Build a graph and write it in the MIXED format.
    Build {
        #[command(subcommand)]
        target: BuildTarget,
    },
    /// Compute the mixed girth of a MIXED file.
    Girth {
        file: PathBuf,
        /// Only look for cycles up to this length.
        #[arg(long)]
        cutoff: Option<usize>,
        /// Also print a shortest cycle.
        #[arg(long)]
        witness: bool,
    },
    /// Run the certificate suite.
    Verify {
        #[command(subcommand)]
        target: VerifyTarget,
    },
    /// One row per prime power q in [qmin, qmax] with q >= 7.
    Table {
        qmin: u64,
        qmax: u64,
        #[arg(long, value_enum, default_value_t = TableFormat::Tsv)]
        format: TableFormat,
    },
}

#[derive(Debug, Subcommand)]
enum BuildTarget {
    /// Incidence graph of PG(2, q).
    Pg2 {
        q: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Type-L elliptic semiplane graph G_q.
    Semiplane {
        q: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The mixed graph H_q.
    Hq {
        q: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Circulant digraph on n vertices with jumps 1..=k.
    Circulant {
        n: usize,
        k: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
enum VerifyTarget {
    /// Verify H_q.
    Hq {
        q: u64,
        /// Human-readable report with claims and counterexamples.
        #[arg(long)]
        text: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Tsv,
    Md,
}

enum Failure {
    Invalid(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Invalid(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Invalid(e.to_string())
    }
}

/// Runs the command line with `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if code == EXIT_OK {
                out.write_all(rendered.as_bytes())
            } else {
                err.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => EXIT_OK,
        Err(Failure::Verification) => EXIT_VERIFY_FAILED,
        Err(Failure::Invalid(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INVALID_INPUT
        }
    }
}

fn emit(doc: &str, target: Option<PathBuf>, out: &mut dyn Write) -> Result<(), Failure> {
    match target {
        Some(path) => std::fs::write(path, doc)?,
        None => out.write_all(doc.as_bytes())?,
    }
    Ok(())
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::Field { q } => {
            let f = make_field(q)?;
            let spec = f.spec();
            writeln!(out, "field q={} p={} n={}", spec.q, spec.p, spec.n)?;
            let coeffs: Vec<String> = spec.modulus.iter().map(u32::to_string).collect();
            writeln!(out, "modulus {}", coeffs.join(" "))?;
            writeln!(out, "xi {}", f.xi())?;
            for (j, e) in f.exp_table().iter().enumerate() {
                writeln!(out, "{j}\t{e}")?;
            }
        }
        Command::Build { target } => match target {
            BuildTarget::Pg2 { q, out: path } => {
                let lg = build_pg2(&make_field(q)?);
                emit(&render_mixed(&lg.graph, Some(lg.labels())), path, out)?;
            }
            BuildTarget::Semiplane { q, out: path } => {
                let lg = build_semiplane(&make_field(q)?)?;
                emit(&render_mixed(&lg.graph, Some(lg.labels())), path, out)?;
            }
            BuildTarget::Hq { q, out: path } => {
                let hq = build_hq(&make_field(q)?)?;
                let lg = &hq.labeled;
                emit(&render_mixed(&lg.graph, Some(lg.labels())), path, out)?;
            }
            BuildTarget::Circulant { n, k, out: path } => {
                let jumps: Vec<usize> = (1..=k).collect();
                let g = build_circulant_digraph(n, &jumps)?;
                emit(&render_mixed(&g, None), path, out)?;
            }
        },
        Command::Girth {
            file,
            cutoff,
            witness,
        } => {
            let doc = std::fs::read_to_string(&file)
                .map_err(|e| Failure::Invalid(format!("{}: {e}", file.display())))?;
            let parsed = parse_mixed(&doc)?;
            let report = mixed_girth(&parsed.graph, cutoff);
            writeln!(out, "girth {}", report.girth)?;
            if witness {
                if let Some(cycle) = &report.witness {
                    writeln!(out, "witness {cycle}")?;
                }
            }
        }
        Command::Verify {
            target: VerifyTarget::Hq { q, text },
        } => {
            let report = verify_hq(q)?;
            let rendered = if text {
                report.render_text()
            } else {
                report.render_lines()
            };
            out.write_all(rendered.as_bytes())?;
            if !report.overall() {
                return Err(Failure::Verification);
            }
        }
        Command::Table { qmin, qmax, format } => write_table(qmin, qmax, format, out)?,
    }
    Ok(())
}

fn write_table(
    qmin: u64,
    qmax: u64,
    format: TableFormat,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    const HEADER: [&str; 7] = ["q", "k", "R", "order", "girth", "lower", "upper"];
    match format {
        TableFormat::Tsv => writeln!(out, "{}", HEADER.join("\t"))?,
        TableFormat::Md => {
            writeln!(out, "| {} |", HEADER.join(" | "))?;
            writeln!(out, "|{}", "---|".repeat(HEADER.len()))?;
        }
    }
    for q in qmin.max(7)..=qmax {
        if prime_power(q).is_none() {
            continue;
        }
        let hq = build_hq(&make_field(q)?)?;
        let girth = mixed_girth(&hq.labeled.graph, Some(GIRTH_CUTOFF)).girth;
        let bp = bounds(q, hq.params.k as u64)?;
        let row = [
            q.to_string(),
            hq.params.k.to_string(),
            hq.params.r.to_string(),
            hq.labeled.graph.n().to_string(),
            girth.to_string(),
            bp.lower.to_string(),
            bp.upper.to_string(),
        ];
        match format {
            TableFormat::Tsv => writeln!(out, "{}", row.join("\t"))?,
            TableFormat::Md => writeln!(out, "| {} |", row.join(" | "))?,
        }
    }
    Ok(())
}
