//! Error type shared by all rotor-core operations.

use thiserror::Error;

use crate::rotor::ParityClass;

/// Errors produced by state construction and phase-space operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum RotorError {
    /// A mode index lies outside the truncation band `[-cutoff, cutoff]`.
    #[error("mode index {n} outside the cutoff band [-{cutoff}, {cutoff}]")]
    CutoffViolation { n: i64, cutoff: usize },

    /// All amplitudes vanish; the state cannot be normalized.
    #[error("state has zero norm and cannot be normalized")]
    DegenerateState,

    /// An angle grid is too small to resolve the band limit without aliasing.
    #[error("grid of {actual} points cannot resolve the band limit (need at least {required})")]
    Resolution { required: usize, actual: usize },

    /// Two operands carry different rotor constants (hbar or inertia).
    #[error("operands carry different rotor constants (hbar or inertia)")]
    SpecMismatch,

    /// An integer momentum lattice was requested for a mixed-parity state.
    #[error("integer momentum lattice requires a state of pure parity, got {parity:?}")]
    ParityLattice { parity: ParityClass },

    /// Two fields do not share the same grid/lattice geometry.
    #[error("fields do not share the same grid and lattice geometry")]
    FieldMismatch,

    /// An ensemble was built from an empty state list.
    #[error("ensemble needs at least one member state")]
    EmptyEnsemble,

    /// A weight distribution truncated at `n_max` leaves too much tail mass.
    #[error("weights truncated at n_max = {n_max} leave tail mass {tail:e} (limit {limit:e})")]
    TailMass { n_max: usize, tail: f64, limit: f64 },

    /// A parameter that must be strictly positive was not.
    #[error("{quantity} must be positive")]
    NonPositive { quantity: &'static str },

    /// A parameter that must be nonnegative was negative.
    #[error("{quantity} must not be negative")]
    Negative { quantity: &'static str },
}

pub type Result<T> = std::result::Result<T, RotorError>;
