//! JSON input documents: single states and ensembles.

use num_complex::Complex64;
use rotor_core::{AngularWaveFunction, RotorSpec};
use serde::Deserialize;

use crate::CliError;

fn default_hbar() -> f64 {
    1.0
}

fn default_inertia() -> f64 {
    1.0
}

/// Lattice step selector as it appears in documents and flags.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum LatticeArg {
    Int,
    Half,
}

/// One state constructor. `terms` entries are `[n, [re, im]]`.
#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum StateKind {
    Eigenstate { n: i64 },
    Superposition { terms: Vec<(i64, (f64, f64))> },
    Wavepacket { mean_angle: f64, concentration: f64 },
}

impl StateKind {
    pub fn build(&self, cutoff: usize, spec: RotorSpec) -> Result<AngularWaveFunction, CliError> {
        let state = match self {
            StateKind::Eigenstate { n } => AngularWaveFunction::eigenstate(*n, cutoff, spec),
            StateKind::Superposition { terms } => {
                let terms: Vec<(i64, Complex64)> = terms
                    .iter()
                    .map(|&(n, (re, im))| (n, Complex64::new(re, im)))
                    .collect();
                AngularWaveFunction::superposition(&terms, cutoff, spec)
            }
            StateKind::Wavepacket {
                mean_angle,
                concentration,
            } => {
                if *concentration < 0.0 {
                    return Err(CliError::input("concentration must not be negative"));
                }
                Ok(AngularWaveFunction::wavepacket(
                    *mean_angle,
                    *concentration,
                    cutoff,
                    spec,
                ))
            }
        };
        state.map_err(|e| CliError::input(format!("cannot build state: {e}")))
    }
}

/// A single rotor state with its constants and optional output geometry.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StateDocument {
    #[serde(default = "default_hbar")]
    pub hbar: f64,
    #[serde(default = "default_inertia")]
    pub inertia: f64,
    pub state: StateKind,
    pub cutoff: usize,
    #[serde(default)]
    pub grid: Option<usize>,
    #[serde(default)]
    pub lattice: Option<LatticeArg>,
}

impl StateDocument {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text)
            .map_err(|e| CliError::input(format!("malformed state document: {e}")))
    }

    pub fn spec(&self) -> Result<RotorSpec, CliError> {
        RotorSpec::new(self.hbar, self.inertia)
            .map_err(|e| CliError::input(format!("invalid rotor constants: {e}")))
    }

    pub fn build(&self) -> Result<AngularWaveFunction, CliError> {
        self.state.build(self.cutoff, self.spec()?)
    }
}

/// A list of states sharing constants and cutoff, to be weighted thermally.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EnsembleDocument {
    #[serde(default = "default_hbar")]
    pub hbar: f64,
    #[serde(default = "default_inertia")]
    pub inertia: f64,
    pub cutoff: usize,
    pub states: Vec<StateKind>,
    #[serde(default)]
    pub grid: Option<usize>,
    #[serde(default)]
    pub lattice: Option<LatticeArg>,
}

impl EnsembleDocument {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text)
            .map_err(|e| CliError::input(format!("malformed ensemble document: {e}")))
    }

    pub fn spec(&self) -> Result<RotorSpec, CliError> {
        RotorSpec::new(self.hbar, self.inertia)
            .map_err(|e| CliError::input(format!("invalid rotor constants: {e}")))
    }

    pub fn build_states(&self) -> Result<Vec<AngularWaveFunction>, CliError> {
        let spec = self.spec()?;
        self.states
            .iter()
            .map(|k| k.build(self.cutoff, spec))
            .collect()
    }
}
