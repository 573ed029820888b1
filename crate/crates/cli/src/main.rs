//! `fano`: runs the verification suites and a few standalone utilities.
//!
//! Exit codes: 0 when every check passes, 1 when any check fails, 2 on a
//! configuration error (bad arguments, invalid cubic, unwritable output).

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use fano_core::verify::{all_passed, render_table, run_all, run_suite, CheckRecord, Config, Suite};
use fano_core::{enumerate_monomials, hilbert_count, Ring, WeightSystem, WeightedProjectiveSpace};

#[derive(Parser)]
#[command(
    name = "fano",
    version,
    about = "Exact checks for the P(1,1,4,6) construction"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CheckOpts {
    /// Binary cubic in x1, x2 with three distinct nonzero rational roots.
    #[arg(long)]
    xi: Option<String>,
    /// Also write one JSON record per line to this file.
    #[arg(long)]
    json: Option<PathBuf>,
    /// Seed for randomly drawn members.
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites and print a table.
    Verify {
        /// all, wps, scroll, system-s, system-t or theorem.
        target: Option<String>,
        /// Same as the positional target; wins if both are given.
        #[arg(long)]
        suite: Option<String>,
        #[command(flatten)]
        opts: CheckOpts,
    },
    /// Number of monomials of a given weighted degree.
    Hilbert {
        #[arg(long, default_value = "1,1,4,6")]
        weights: WeightSystem,
        #[arg(long)]
        degree: u64,
        /// Print the monomials too, leading first.
        #[arg(long)]
        list: bool,
    },
    /// Anticanonical data of a weighted projective space.
    Wps {
        #[arg(long, default_value = "1,1,4,6")]
        weights: WeightSystem,
        /// Print the anticanonical monomial basis.
        #[arg(long)]
        basis: bool,
    },
    /// Scroll and bundle checks.
    ScrollCheck {
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Checks of the sextic system, as JSON lines.
    SystemS(CheckOpts),
    /// Checks of the degree-12 system, as JSON lines.
    SystemT(CheckOpts),
    /// The constraint description of the sextic system, as JSON lines.
    Sprime(CheckOpts),
    /// The span identity for one cubic.
    Theorem(CheckOpts),
}

enum Report {
    Table,
    JsonLines,
}

struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

fn main() -> ExitCode {
    env_logger::init();
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure(msg)) => {
            eprintln!("fano: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<bool, Failure> {
    match command {
        Command::Verify {
            target,
            suite,
            opts,
        } => {
            let name = suite.or(target);
            let config = config(&opts, name.as_deref())?;
            emit(run_all(&config), opts.json.as_deref(), Report::Table)
        }
        Command::Hilbert {
            weights,
            degree,
            list,
        } => {
            println!("{}", hilbert_count(&weights, degree));
            if list {
                let ring = ring_for(&weights)?;
                for m in enumerate_monomials(&weights, degree) {
                    println!("{}", m.display(&ring));
                }
            }
            Ok(true)
        }
        Command::Wps { weights, basis } => {
            let space = WeightedProjectiveSpace::new(weights)?;
            let monos = space.anticanonical_basis();
            println!("weights               {}", space.weights());
            println!("anticanonical weight  {}", space.anticanonical_weight());
            println!(
                "self-intersection     {}",
                space.anticanonical_selfintersection()
            );
            println!("basis size            {}", monos.len());
            if basis {
                let ring = ring_for(space.weights())?;
                for m in &monos {
                    println!("{}", m.display(&ring));
                }
            }
            Ok(true)
        }
        Command::ScrollCheck { json } => {
            let records = run_suite(Suite::Scroll, &Config::default());
            emit(records, json.as_deref(), Report::Table)
        }
        Command::SystemS(opts) => {
            let records = run_suite(Suite::SystemS, &config(&opts, None)?);
            emit(records, opts.json.as_deref(), Report::JsonLines)
        }
        Command::SystemT(opts) => {
            let records = run_suite(Suite::SystemT, &config(&opts, None)?);
            emit(records, opts.json.as_deref(), Report::JsonLines)
        }
        Command::Sprime(opts) => {
            let records = run_suite(Suite::SystemS, &config(&opts, None)?)
                .into_iter()
                .filter(|r| r.check_id.starts_with("system-s.sprime"))
                .collect();
            emit(records, opts.json.as_deref(), Report::JsonLines)
        }
        Command::Theorem(opts) => {
            let records = run_suite(Suite::Theorem, &config(&opts, None)?);
            emit(records, opts.json.as_deref(), Report::Table)
        }
    }
}

fn config(opts: &CheckOpts, suite: Option<&str>) -> Result<Config, Failure> {
    Ok(Config::new(opts.xi.as_deref(), opts.seed, suite)?)
}

/// `y1, y2, ...` for `P(1,1,4,6)`-style output.
fn ring_for(ws: &WeightSystem) -> Result<Ring, Failure> {
    Ok(Ring::new((1..=ws.arity()).map(|i| format!("y{i}")))?)
}

fn emit(records: Vec<CheckRecord>, json: Option<&Path>, report: Report) -> Result<bool, Failure> {
    if let Some(path) = json {
        let file = File::create(path).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
        write_json_lines(&records, BufWriter::new(file))?;
    }
    match report {
        Report::Table => print!("{}", render_table(&records)),
        Report::JsonLines => write_json_lines(&records, io::stdout().lock())?,
    }
    Ok(all_passed(&records))
}

fn write_json_lines(records: &[CheckRecord], mut out: impl Write) -> Result<(), Failure> {
    for r in records {
        serde_json::to_writer(&mut out, r)?;
        writeln!(out)?;
    }
    out.flush()?;
    Ok(())
}
