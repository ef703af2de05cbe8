//! Quantum phase-space distributions for the plane rotator.
//!
//! The phase space of a bead on a circle is the cylinder T*S¹ with
//! coordinates (angle φ, angular momentum J). This crate builds the real
//! quasiprobability distribution of a rotor state over that cylinder and
//! everything the construction supports:
//!
//! - [`rotor`]: states as truncated angular-momentum coefficient vectors,
//!   with exact conversion to and from angle samples.
//! - [`wigner`]: the distribution itself: pointwise kernel evaluation,
//!   mode-resolved fields on integer or half-integer momentum lattices,
//!   marginals, overlaps, the angle operator and the sawtooth series with
//!   its Gibbs overshoot.
//! - [`dynamics`]: free quantum evolution and spectral Liouville transport,
//!   which coincide exactly on the lattice.
//! - [`thermal`]: weighted ensembles, coherence-time dephasing and the
//!   classical wave equation the averaged field obeys.
//! - [`coherent`]: rotational coherent states, Poisson number statistics
//!   and entropy comparisons.
//! - [`orbits`]: the base-2 orbital action ladder and the Galilean-moon
//!   radius table.
//!
//! All types are immutable after construction and all operations are pure,
//! so everything is safe to use from multiple threads. Field synthesis
//! parallelizes over lattice rows internally with bit-identical results
//! regardless of thread count.

pub mod coherent;
pub mod dynamics;
pub mod error;
pub mod orbits;
pub mod rotor;
pub mod thermal;
pub mod wigner;

pub use coherent::{CoherentStateSpec, WeightDistribution};
pub use dynamics::EvolutionParams;
pub use error::{Result, RotorError};
pub use orbits::{OrbitRow, OrbitSystem, QuantizationReport};
pub use rotor::{AngleGrid, AngularWaveFunction, ParityClass, RotorSpec, HBAR_SI, PLANCK_H_SI};
pub use thermal::{EnsembleMember, MomentumSquareConvention, ThermalEnsemble};
pub use wigner::{AngleOperatorMatrix, LatticeStep, ModeSpectrum, MomentumLattice, WignerField};
