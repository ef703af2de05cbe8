//! `rotor`: phase-space computations for the plane rotator from JSON state
//! documents, emitting CSV/JSON artifacts plus a machine-readable run
//! report on stdout.
//!
//! Exit codes: 0 on success with every invariant passing, 1 when an
//! invariant check fails, 2 on usage or input errors.

mod commands;
mod doc;
mod output;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use doc::LatticeArg;
use output::write_atomic;
use report::RunReport;

/// An input/usage problem: reported on stderr with exit code 2.
#[derive(Debug)]
pub struct CliError {
    message: String,
}

impl CliError {
    pub fn input(message: impl Into<String>) -> Self {
        Self {
            message: message.into(),
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.message)
    }
}

#[derive(Parser)]
#[command(
    name = "rotor",
    version,
    about = "Phase-space distributions for the quantum plane rotator",
    after_help = "Set ROTOR_NUM_THREADS to cap the parallelism of the field kernels."
)]
struct Cli {
    /// Also write the run report to this path.
    #[arg(long, global = true)]
    report: Option<PathBuf>,
    /// Write the results object (with hbar/inertia metadata) to this path.
    #[arg(long, global = true)]
    json: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Phase-space distribution of a state as CSV (phi, j_over_hbar, f).
    Wigner {
        /// JSON state document.
        #[arg(long)]
        state: PathBuf,
        /// Angle grid size (default: covers all modes, at least 64).
        #[arg(long)]
        grid: Option<usize>,
        /// Momentum lattice step (default: by state parity).
        #[arg(long, value_enum)]
        lattice: Option<LatticeArg>,
        /// CSV output path.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Angle and momentum marginals as two CSVs (prefix_angle/_momentum).
    Marginals {
        #[arg(long)]
        state: PathBuf,
        /// Output prefix for the two CSV files.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        grid: Option<usize>,
        /// Momentum sweep start, in units of hbar (default: -cutoff - 2).
        #[arg(long)]
        j_min: Option<f64>,
        /// Momentum sweep end, in units of hbar (default: cutoff + 2).
        #[arg(long)]
        j_max: Option<f64>,
        /// Number of sweep samples, including non-integer heights
        /// (default: quarter steps).
        #[arg(long)]
        j_samples: Option<usize>,
    },
    /// Phase-space overlap of two states by both routes.
    Overlap {
        #[arg(long)]
        state1: PathBuf,
        #[arg(long)]
        state2: PathBuf,
    },
    /// Free evolution; optionally check the quantum-Liouville identity.
    Evolve {
        #[arg(long)]
        state: PathBuf,
        /// Evolution time.
        #[arg(long)]
        time: f64,
        /// Compare quantum evolution against classical transport.
        #[arg(long)]
        check_coherence: bool,
        #[arg(long)]
        grid: Option<usize>,
        #[arg(long, value_enum)]
        lattice: Option<LatticeArg>,
        /// Write the evolved state as a loadable JSON document.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Boltzmann ensemble field, dephasing and wave-equation residual.
    Thermal {
        /// JSON ensemble document.
        #[arg(long)]
        ensemble: PathBuf,
        /// Temperature as an energy, k_B T.
        #[arg(long = "kT")]
        k_t: f64,
        /// Apply one dephasing interval of this length.
        #[arg(long)]
        dephase: Option<f64>,
        /// Evaluate the classical wave-equation residual.
        #[arg(long)]
        wave_residual: bool,
        #[arg(long)]
        grid: Option<usize>,
        #[arg(long, value_enum)]
        lattice: Option<LatticeArg>,
        /// CSV output path for the averaged field.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Poisson number weights of a rotational coherent state.
    Coherent {
        /// Mean occupation J/hbar.
        #[arg(long)]
        lambda: f64,
        /// Truncation of the weight table.
        #[arg(long)]
        nmax: usize,
        /// CSV output path (n, w_n).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Orbit-radius ladder and the Galilean-moon comparison table.
    Orbits {
        /// "jupiter" (bundled observed radii) or "custom".
        #[arg(long, default_value = "jupiter")]
        system: String,
        /// Central mass in kg, for --system custom.
        #[arg(long)]
        central_mass: Option<f64>,
        /// First ladder index for custom systems.
        #[arg(long, default_value_t = 0)]
        n_min: u32,
        /// Last ladder index for custom systems.
        #[arg(long, default_value_t = 42)]
        n_max: u32,
        /// CSV output path.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Scaled sawtooth partial sum and its sine-integral limit.
    Gibbs {
        /// Number of terms.
        #[arg(long)]
        n: usize,
        /// Evaluation angle (default pi).
        #[arg(long)]
        phi: Option<f64>,
    },
}

fn run(command: &Command) -> Result<RunReport, CliError> {
    match command {
        Command::Wigner {
            state,
            grid,
            lattice,
            out,
        } => commands::wigner(state, *grid, *lattice, out.clone()),
        Command::Marginals {
            state,
            out,
            grid,
            j_min,
            j_max,
            j_samples,
        } => commands::marginals(state, out.clone(), *grid, *j_min, *j_max, *j_samples),
        Command::Overlap { state1, state2 } => commands::overlap(state1, state2),
        Command::Evolve {
            state,
            time,
            check_coherence,
            grid,
            lattice,
            out,
        } => commands::evolve(state, *time, *check_coherence, *grid, *lattice, out.clone()),
        Command::Thermal {
            ensemble,
            k_t,
            dephase,
            wave_residual,
            grid,
            lattice,
            out,
        } => commands::thermal(
            ensemble,
            *k_t,
            *dephase,
            *wave_residual,
            *grid,
            *lattice,
            out.clone(),
        ),
        Command::Coherent { lambda, nmax, out } => commands::coherent(*lambda, *nmax, out.clone()),
        Command::Orbits {
            system,
            central_mass,
            n_min,
            n_max,
            out,
        } => commands::orbits(system, *central_mass, *n_min, *n_max, out.clone()),
        Command::Gibbs { n, phi } => commands::gibbs(*n, *phi),
    }
}

fn main() -> ExitCode {
    if let Ok(threads) = std::env::var("ROTOR_NUM_THREADS") {
        if let Ok(n) = threads.parse::<usize>() {
            if n > 0 {
                rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build_global()
                    .ok();
            }
        }
    }

    let cli = Cli::parse();
    let report = match run(&cli.command) {
        Ok(report) => report,
        Err(err) => {
            eprintln!("error: {err}");
            return ExitCode::from(2);
        }
    };

    let rendered = match serde_json::to_value(&report) {
        Ok(value) => format!("{value:#}\n"),
        Err(err) => {
            eprintln!("error: cannot render report: {err}");
            return ExitCode::from(2);
        }
    };
    print!("{rendered}");
    if let Some(path) = &cli.report {
        if let Err(err) = write_atomic(path, rendered.as_bytes()) {
            eprintln!("error: {err}");
            return ExitCode::from(2);
        }
    }
    if let Some(path) = &cli.json {
        let results = format!(
            "{:#}\n",
            serde_json::Value::Object(report.results_document())
        );
        if let Err(err) = write_atomic(path, results.as_bytes()) {
            eprintln!("error: {err}");
            return ExitCode::from(2);
        }
    }

    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
