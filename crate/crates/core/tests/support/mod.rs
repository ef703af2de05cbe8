//! Shared oracles for the integration suites: quadrature rules and state
//! generators that stay independent of the library's evaluation paths.

// Each test target uses a different subset of these helpers.
#![allow(dead_code)]

use std::f64::consts::PI;

use num_complex::Complex64;
use rand::Rng;
use rotor_core::{AngularWaveFunction, ParityClass, RotorSpec};

/// Gauss-Legendre nodes and weights on [-1, 1], by Newton iteration on the
/// Legendre recurrence.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 2);
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0f64, x);
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}

/// Gauss-Legendre quadrature of a real integrand over [a, b].
pub fn integrate(f: impl Fn(f64) -> f64, a: f64, b: f64, n: usize) -> f64 {
    let (nodes, weights) = gauss_legendre(n);
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    nodes
        .iter()
        .zip(weights.iter())
        .map(|(&x, &w)| w * f(mid + half * x))
        .sum::<f64>()
        * half
}

/// Gauss-Legendre quadrature of a complex integrand over [a, b].
pub fn integrate_complex(f: impl Fn(f64) -> Complex64, a: f64, b: f64, n: usize) -> Complex64 {
    let (nodes, weights) = gauss_legendre(n);
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    nodes
        .iter()
        .zip(weights.iter())
        .map(|(&x, &w)| f(mid + half * x) * w)
        .sum::<Complex64>()
        * half
}

/// Local basis synthesis, kept separate from the library's own.
fn synthesize(psi: &AngularWaveFunction, phi: f64) -> Complex64 {
    let mut acc = Complex64::ZERO;
    for (n, c) in psi.coefficients() {
        acc += c * Complex64::from_polar(1.0, n as f64 * phi);
    }
    acc / (2.0 * PI).sqrt()
}

/// Direct quadrature of the defining γ integral
/// `(1/2πℏ) ∫ dγ e^{-iγJ/ℏ} ψ(φ+γ/2) ψ*(φ-γ/2)` over
/// `[window_start, window_start + 2π]`.
pub fn wigner_gamma_quadrature(
    psi: &AngularWaveFunction,
    phi: f64,
    j_action: f64,
    window_start: f64,
    n_points: usize,
) -> Complex64 {
    let hbar = psi.spec().hbar;
    let integrand = |gamma: f64| {
        Complex64::from_polar(1.0, -gamma * j_action / hbar)
            * synthesize(psi, phi + gamma / 2.0)
            * synthesize(psi, phi - gamma / 2.0).conj()
    };
    integrate_complex(integrand, window_start, window_start + 2.0 * PI, n_points)
        / (2.0 * PI * hbar)
}

/// A random normalized state populating the modes allowed by `parity`.
pub fn random_state(
    rng: &mut impl Rng,
    parity: ParityClass,
    cutoff: usize,
    spec: RotorSpec,
) -> AngularWaveFunction {
    let keep = |n: i64| match parity {
        ParityClass::Even => n.rem_euclid(2) == 0,
        ParityClass::Odd => n.rem_euclid(2) == 1,
        ParityClass::Mixed => true,
    };
    loop {
        let terms: Vec<(i64, Complex64)> = (-(cutoff as i64)..=cutoff as i64)
            .filter(|&n| keep(n))
            .map(|n| {
                (
                    n,
                    Complex64::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5),
                )
            })
            .collect();
        if let Ok(psi) = AngularWaveFunction::superposition(&terms, cutoff, spec) {
            // Mixed parity must actually mix once amplitudes are random.
            if parity != ParityClass::Mixed || psi.parity_class() == ParityClass::Mixed {
                return psi;
            }
        }
    }
}
