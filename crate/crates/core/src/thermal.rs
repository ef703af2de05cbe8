//! Thermal ensembles of rotor states, coherence-time dephasing, and the
//! emergence of a classical wave equation for the averaged distribution.
//!
//! An ensemble is a weighted set of pure states with per-member energy
//! `E_s` and mean angular momentum `J_s`. Its distribution is the weighted
//! sum of the members' mode spectra,
//!
//! ```text
//! f_T(φ, J) = (1/2πℏ) Σ_m e^{-imφ} f̃'_T(m, J/ℏ),
//! f̃'_T(m, J/ℏ) = Σ_s w_s ψ^s_b (ψ^s_a)*.
//! ```
//!
//! The dephasing map over one coherence interval τ multiplies mode `m` of
//! member `s` by exactly `e^{-iτ m J_s/I}`, so with
//! `Ω² = ⟨J²⟩/I², ⟨J²⟩ = Σ_s w_s J_s²` the averaged field satisfies the
//! classical wave equation `∂²_t f_T = Ω² ∂²_φ f_T` exactly whenever all
//! members share the same `J_s²`, and approximately as the spread of `J_s²`
//! shrinks.

use num_complex::Complex64;

use crate::error::{Result, RotorError};
use crate::rotor::{AngleGrid, AngularWaveFunction, RotorSpec};
use crate::wigner::{mode_spectrum, ModeSpectrum, MomentumLattice, WignerField};

/// Which per-member quantity enters `⟨J²⟩ = Σ_s w_s J_s²`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MomentumSquareConvention {
    /// Square of the member mean momentum, `(Σ_n |c_n|² nℏ)²`. The default.
    #[default]
    MeanSquare,
    /// Member second moment, `Σ_n |c_n|² (nℏ)²`.
    SecondMoment,
}

/// One weighted ensemble member. Energy and mean momentum are recomputed
/// from the coefficients at construction, never trusted from the caller.
#[derive(Debug, Clone, PartialEq)]
pub struct EnsembleMember {
    state: AngularWaveFunction,
    weight: f64,
    energy: f64,
    mean_momentum: f64,
}

impl EnsembleMember {
    pub fn state(&self) -> &AngularWaveFunction {
        &self.state
    }

    pub fn weight(&self) -> f64 {
        self.weight
    }

    /// `E_s = Σ_n |c_n|² n²ℏ²/2I`.
    pub fn energy(&self) -> f64 {
        self.energy
    }

    /// `J_s = Σ_n |c_n|² nℏ`.
    pub fn mean_momentum(&self) -> f64 {
        self.mean_momentum
    }
}

/// A weighted set of rotor states with unit total weight.
#[derive(Debug, Clone, PartialEq)]
pub struct ThermalEnsemble {
    members: Vec<EnsembleMember>,
    spec: RotorSpec,
    /// Optional kT label recording how the weights were produced.
    temperature: Option<f64>,
}

impl ThermalEnsemble {
    /// Builds an ensemble from explicit nonnegative weights, which are
    /// normalized to unit sum.
    pub fn from_weighted_states(
        states: Vec<(AngularWaveFunction, f64)>,
        spec: RotorSpec,
    ) -> Result<Self> {
        Self::assemble(states, spec, None)
    }

    /// Boltzmann weights `w_s ∝ e^{-E_s/kT}` over the given states.
    ///
    /// `kT = 0` puts all weight on the minimal-energy members, split
    /// equally on ties; `kT = ∞` gives the uniform ensemble.
    pub fn boltzmann(states: Vec<AngularWaveFunction>, k_t: f64, spec: RotorSpec) -> Result<Self> {
        if states.is_empty() {
            return Err(RotorError::EmptyEnsemble);
        }
        if k_t < 0.0 {
            return Err(RotorError::Negative { quantity: "kT" });
        }
        let energies: Vec<f64> = states.iter().map(|s| s.energy()).collect();
        let e_min = energies.iter().cloned().fold(f64::INFINITY, f64::min);
        let weights: Vec<f64> = if k_t == 0.0 {
            let tie = 1e-12 * e_min.abs().max(1.0);
            energies
                .iter()
                .map(|&e| if e <= e_min + tie { 1.0 } else { 0.0 })
                .collect()
        } else {
            // Shift by the minimum for a stable exponential.
            energies
                .iter()
                .map(|&e| (-(e - e_min) / k_t).exp())
                .collect()
        };
        let weighted = states.into_iter().zip(weights).collect();
        Self::assemble(weighted, spec, Some(k_t))
    }

    fn assemble(
        states: Vec<(AngularWaveFunction, f64)>,
        spec: RotorSpec,
        temperature: Option<f64>,
    ) -> Result<Self> {
        if states.is_empty() {
            return Err(RotorError::EmptyEnsemble);
        }
        let total: f64 = states.iter().map(|(_, w)| w).sum();
        if total <= 0.0 || !total.is_finite() {
            return Err(RotorError::DegenerateState);
        }
        let mut members = Vec::with_capacity(states.len());
        for (state, weight) in states {
            if weight < 0.0 {
                return Err(RotorError::Negative {
                    quantity: "ensemble weight",
                });
            }
            if state.spec() != spec {
                return Err(RotorError::SpecMismatch);
            }
            members.push(EnsembleMember {
                energy: state.energy(),
                mean_momentum: state.mean_momentum(),
                weight: weight / total,
                state,
            });
        }
        Ok(Self {
            members,
            spec,
            temperature,
        })
    }

    pub fn members(&self) -> &[EnsembleMember] {
        &self.members
    }

    pub fn spec(&self) -> RotorSpec {
        self.spec
    }

    pub fn temperature(&self) -> Option<f64> {
        self.temperature
    }

    /// `⟨J²⟩ = Σ_s w_s J_s²` under the chosen convention.
    pub fn mean_momentum_square(&self, convention: MomentumSquareConvention) -> f64 {
        self.members
            .iter()
            .map(|m| {
                let j_sq = match convention {
                    MomentumSquareConvention::MeanSquare => m.mean_momentum * m.mean_momentum,
                    MomentumSquareConvention::SecondMoment => m.state.momentum_second_moment(),
                };
                m.weight * j_sq
            })
            .sum()
    }

    /// Thermal angular frequency `Ω = √(⟨J²⟩)/I` with the default
    /// mean-square convention.
    pub fn omega_t(&self) -> f64 {
        self.omega_t_with(MomentumSquareConvention::MeanSquare)
    }

    pub fn omega_t_with(&self, convention: MomentumSquareConvention) -> f64 {
        self.mean_momentum_square(convention).sqrt() / self.spec.inertia
    }

    /// One coherence interval of dephasing: coefficient `c_x` of member `s`
    /// picks up the phase `e^{-(i/ℏ)(E_s - (xℏ - J_s)J_s/I)τ}`, so mode `m`
    /// of the member's spectrum is multiplied by exactly `e^{-iτ m J_s/I}`.
    /// Preserves every member's norm, energy and mean momentum.
    pub fn dephase(&self, tau: f64) -> Self {
        assert!(tau >= 0.0, "coherence interval must be nonnegative");
        let RotorSpec { hbar, inertia } = self.spec;
        let members = self
            .members
            .iter()
            .map(|m| {
                let e_s = m.energy;
                let j_s = m.mean_momentum;
                let state = m.state.with_phases(|x| {
                    let detuning = e_s - (x as f64 * hbar - j_s) * j_s / inertia;
                    Complex64::from_polar(1.0, -detuning * tau / hbar)
                });
                EnsembleMember {
                    state,
                    weight: m.weight,
                    energy: e_s,
                    mean_momentum: j_s,
                }
            })
            .collect();
        Self {
            members,
            spec: self.spec,
            temperature: self.temperature,
        }
    }
}

/// The ensemble mode spectrum `f̃'_T = Σ_s w_s f̃'_s` on a lattice that must
/// accept every member's parity.
pub fn thermal_mode_spectrum(
    ensemble: &ThermalEnsemble,
    lattice: &MomentumLattice,
) -> Result<ModeSpectrum> {
    let spectra: Vec<ModeSpectrum> = ensemble
        .members()
        .iter()
        .map(|m| mode_spectrum(m.state(), lattice))
        .collect::<Result<_>>()?;
    let weighted: Vec<(f64, &ModeSpectrum)> = ensemble
        .members()
        .iter()
        .zip(spectra.iter())
        .map(|(m, s)| (m.weight(), s))
        .collect();
    Ok(ModeSpectrum::weighted_sum(&weighted))
}

/// The averaged distribution of the ensemble: the weight-convex combination
/// of the members' fields. Total mass 1 on a covering lattice.
pub fn thermal_field(
    ensemble: &ThermalEnsemble,
    grid: &AngleGrid,
    lattice: &MomentumLattice,
) -> Result<WignerField> {
    let spectrum = thermal_mode_spectrum(ensemble, lattice)?;
    Ok(WignerField::from_modes(
        ensemble.spec(),
        *grid,
        *lattice,
        spectrum,
    ))
}

/// Residual of the classical wave equation `∂²_t f_T = Ω² ∂²_φ f_T` under
/// the dephasing model, with the default mean-square convention for Ω².
pub fn wave_equation_residual(
    ensemble: &ThermalEnsemble,
    grid: &AngleGrid,
    lattice: &MomentumLattice,
) -> Result<f64> {
    wave_equation_residual_with(
        ensemble,
        grid,
        lattice,
        MomentumSquareConvention::MeanSquare,
    )
}

/// Both sides of the wave equation are assembled analytically per mode:
///
/// ```text
/// ∂²_t f̃'(m)   = -Σ_s w_s (m J_s/I)² f̃'_s(m)
/// Ω² ∂²_φ f̃'(m) = -m² Ω² f̃'_T(m)
/// ```
///
/// and the reconstructed fields are compared. Returns the maximum absolute
/// difference normalized by the maximum absolute value of the Ω² side; when
/// the field is angle-independent (every m ≠ 0 mode empty) both sides
/// vanish and the absolute residual (0) is returned instead. Exactly zero
/// whenever all members share the same `J_s²`.
pub fn wave_equation_residual_with(
    ensemble: &ThermalEnsemble,
    grid: &AngleGrid,
    lattice: &MomentumLattice,
    convention: MomentumSquareConvention,
) -> Result<f64> {
    let inertia = ensemble.spec().inertia;
    let omega_sq = ensemble.mean_momentum_square(convention) / (inertia * inertia);

    let spectra: Vec<ModeSpectrum> = ensemble
        .members()
        .iter()
        .map(|m| mode_spectrum(m.state(), lattice))
        .collect::<Result<_>>()?;
    let weighted: Vec<(f64, &ModeSpectrum)> = ensemble
        .members()
        .iter()
        .zip(spectra.iter())
        .map(|(m, s)| (m.weight(), s))
        .collect();
    let combined = ModeSpectrum::weighted_sum(&weighted);

    // -Σ_s w_s (m J_s/I)² f̃'_s(m), member by member.
    let scaled: Vec<ModeSpectrum> = ensemble
        .members()
        .iter()
        .zip(spectra.iter())
        .map(|(member, spectrum)| {
            let rate = member.mean_momentum() / inertia;
            spectrum.map_modes(|_, m, amp| amp * (-(m as f64 * rate) * (m as f64 * rate)))
        })
        .collect();
    let time_terms: Vec<(f64, &ModeSpectrum)> = ensemble
        .members()
        .iter()
        .zip(scaled.iter())
        .map(|(m, s)| (m.weight(), s))
        .collect();
    let time_side = ModeSpectrum::weighted_sum(&time_terms);

    // -m² Ω² f̃'_T(m).
    let angle_side = combined.map_modes(|_, m, amp| amp * (-(m as f64) * (m as f64) * omega_sq));

    let spec = ensemble.spec();
    let time_field = WignerField::from_modes(spec, *grid, *lattice, time_side);
    let angle_field = WignerField::from_modes(spec, *grid, *lattice, angle_side);

    let mut diff = 0.0f64;
    let mut scale = 0.0f64;
    for (a, b) in time_field.values().iter().zip(angle_field.values().iter()) {
        diff = diff.max((a - b).abs());
        scale = scale.max(b.abs());
    }
    if scale > 0.0 {
        Ok(diff / scale)
    } else {
        Ok(diff)
    }
}
