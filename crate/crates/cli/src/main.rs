//! `hyperarr`: invariants of hyperplane arrangements from the command line.
//!
//! Exit status is 2 for unreadable or invalid input, 1 when a budget is
//! exceeded or an agreement check fails, and 0 otherwise.

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use hyperarr::poset::DEFAULT_POINT_BUDGET;
use hyperarr::regions::RegionBudget;
use hyperarr::Error;

use hyperarr_cli::commands::{self, Budgets, Method, Source};
use hyperarr_cli::report::Report;

#[derive(Debug, Parser)]
#[command(
    name = "hyperarr",
    version,
    about = "Exact combinatorics of real hyperplane arrangements"
)]
struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for parallel enumeration.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Largest F_p^d the finite field method may scan.
    #[arg(long, global = true, default_value_t = DEFAULT_POINT_BUDGET)]
    max_points: u64,
    /// Largest number of regions to enumerate.
    #[arg(long, global = true, default_value_t = RegionBudget::default().max_regions)]
    max_regions: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Characteristic polynomial.
    Chi {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value = "mobius")]
        method: Method,
    },
    /// Region and bounded-region counts.
    Regions {
        #[command(flatten)]
        source: Source,
        /// List every region with a sample point.
        #[arg(long)]
        enumerate: bool,
        /// List the relatively bounded regions.
        #[arg(long)]
        bounded: bool,
    },
    /// Parking functions and the Shi arrangement.
    Parking {
        #[arg(long)]
        n: usize,
        /// Label the regions of Shi(n) by parking functions.
        #[arg(long)]
        labels: bool,
    },
    /// Ballot sequences of the Catalan arrangement's base chamber.
    Ballot {
        #[arg(long)]
        n: usize,
    },
    /// Orlik-Solomon graded dimensions.
    Os {
        #[command(flatten)]
        source: Source,
    },
    /// Roots of the Linial characteristic polynomial.
    LinialRoots {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
    },
    /// Chromatic polynomial and acyclic orientations of a graph.
    Graph {
        #[arg(long)]
        file: String,
        #[arg(long)]
        chromatic: bool,
        #[arg(long)]
        acyclic: bool,
    },
    /// Run the acceptance criteria.
    Selftest {
        /// Run a single criterion.
        #[arg(long)]
        criterion: Option<usize>,
    },
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. }
        | Error::InvalidSpec(_)
        | Error::InvalidInput(_)
        | Error::ZeroNormal
        | Error::DimensionMismatch { .. }
        | Error::DuplicateHyperplane(_) => 2,
        _ => 1,
    }
}

#[cfg(feature = "parallel")]
fn set_threads(k: usize) -> Result<(), Error> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(k)
        .build_global()
        .map_err(|e| Error::InvalidInput(e.to_string()))
}

#[cfg(not(feature = "parallel"))]
fn set_threads(_: usize) -> Result<(), Error> {
    Ok(())
}

fn run(cli: &Cli) -> Result<Report, Error> {
    if let Some(k) = cli.threads {
        set_threads(k)?;
    }
    let budgets = Budgets {
        max_points: cli.max_points,
        regions: RegionBudget {
            max_regions: cli.max_regions,
            ..RegionBudget::default()
        },
    };
    match &cli.command {
        Command::Chi { source, method } => commands::chi(source, *method, budgets),
        Command::Regions {
            source,
            enumerate,
            bounded,
        } => commands::regions(source, *enumerate, *bounded, budgets),
        Command::Parking { n, labels } => commands::parking(*n, *labels),
        Command::Ballot { n } => commands::ballot(*n, budgets),
        Command::Os { source } => commands::orlik_solomon(source),
        Command::LinialRoots { n, tol } => commands::linial_roots(*n, *tol),
        Command::Graph {
            file,
            chromatic,
            acyclic,
        } => commands::graph(file, *chromatic, *acyclic, budgets),
        Command::Selftest { criterion } => commands::run_selftest(*criterion),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            if cli.json {
                print!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
            if report.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
