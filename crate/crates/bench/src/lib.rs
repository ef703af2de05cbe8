//! Shared state builders for the benchmark targets.

use num_complex::Complex64;
use rotor_core::{AngularWaveFunction, RotorSpec};

/// A dense pure-parity test state with pseudo-random fixed amplitudes.
pub fn dense_even_state(cutoff: usize) -> AngularWaveFunction {
    let terms: Vec<(i64, Complex64)> = (-(cutoff as i64)..=cutoff as i64)
        .filter(|n| n.rem_euclid(2) == 0)
        .map(|n| {
            let x = n as f64;
            (n, Complex64::new((1.3 * x).sin() + 0.1, (0.7 * x).cos()))
        })
        .collect();
    AngularWaveFunction::superposition(&terms, cutoff, RotorSpec::natural())
        .expect("nonzero amplitude set")
}
