//! Closed-form evaluations checked against independent quadrature and
//! projection oracles.

mod support;

use std::f64::consts::PI;

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rotor_core::coherent::{gaussian_wigner_point, CoherentStateSpec};
use rotor_core::wigner::{
    angle_operator_matrix, sine_integral, wigner_point, wigner_point_windowed,
};
use rotor_core::{AngularWaveFunction, ParityClass, RotorSpec};
use support::{integrate, integrate_complex, random_state, wigner_gamma_quadrature};

#[test]
fn gauss_legendre_rule_is_sound() {
    assert!((integrate(|x| x * x, 0.0, 1.0, 16) - 1.0 / 3.0).abs() < 1e-14);
    assert!((integrate(f64::sin, 0.0, PI, 64) - 2.0).abs() < 1e-14);
    assert!(
        (integrate(|x| (10.0 * x).cos(), -PI, PI, 128) - 2.0 * (10.0 * PI).sin() / 10.0).abs()
            < 1e-12
    );
}

#[test]
fn kernel_point_matches_gamma_quadrature() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let spec = RotorSpec::natural();
    for parity in [ParityClass::Even, ParityClass::Odd, ParityClass::Mixed] {
        let psi = random_state(&mut rng, parity, 6, spec);
        for &(phi, j) in &[
            (0.0, 0.0),
            (0.7, 1.0),
            (-1.3, 0.5),
            (2.1, -2.25),
            (PI / 2.0, 3.0),
        ] {
            let oracle = wigner_gamma_quadrature(&psi, phi, j, -PI, 200);
            let closed = wigner_point(&psi, phi, j);
            assert!(
                (closed - oracle.re).abs() < 1e-11,
                "{parity:?} at ({phi}, {j}): {closed} vs {}",
                oracle.re
            );
            assert!(oracle.im.abs() < 1e-11);
        }
    }
}

#[test]
fn windowed_kernel_matches_shifted_quadrature() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let psi = random_state(&mut rng, ParityClass::Mixed, 5, RotorSpec::natural());
    for &(phi, j) in &[(0.3, 0.0), (1.1, 1.0), (-0.4, 1.5)] {
        let oracle = wigner_gamma_quadrature(&psi, phi, j, 0.0, 200);
        let closed = wigner_point_windowed(&psi, phi, j, 0.0);
        assert!(
            (closed - oracle).norm() < 1e-11,
            "({phi}, {j}): {closed} vs {oracle}"
        );
    }
}

#[test]
fn scaled_hbar_kernel_matches_quadrature() {
    let spec = RotorSpec::new(0.7, 2.0).unwrap();
    let psi = AngularWaveFunction::superposition(
        &[(0, Complex64::ONE), (2, Complex64::new(0.0, 1.0))],
        4,
        spec,
    )
    .unwrap();
    // J = 2ℏ sits on the lattice; J = 0.9ℏ does not.
    for j_over_hbar in [2.0, 0.9] {
        let j = j_over_hbar * spec.hbar;
        let oracle = wigner_gamma_quadrature(&psi, 0.4, j, -PI, 200);
        assert!((wigner_point(&psi, 0.4, j) - oracle.re).abs() < 1e-11);
    }
}

#[test]
fn angle_operator_matches_fourier_integral() {
    let cutoff = 6usize;
    let op = angle_operator_matrix(cutoff);
    let n = cutoff as i64;
    for b in -n..=n {
        for a in -n..=n {
            let oracle = integrate_complex(
                |phi| Complex64::from_polar(phi, (a - b) as f64 * phi),
                -PI,
                PI,
                128,
            ) / (2.0 * PI);
            let entry = op.entry(b, a);
            assert!(
                (entry - oracle).norm() < 1e-12,
                "entry ({b}, {a}): {entry} vs {oracle}"
            );
        }
    }
}

#[test]
fn wavepacket_matches_dft_projection() {
    let spec = RotorSpec::natural();
    let cutoff = 16usize;
    let (mean, concentration) = (0.9, 2.0);
    let packet = AngularWaveFunction::wavepacket(mean, concentration, cutoff, spec);

    // Project the amplitude profile exp((κ/2)cos(φ-φ₀)) on a fine grid.
    let m = 1024usize;
    let samples: Vec<Complex64> = (0..m)
        .map(|j| {
            let phi = -PI + 2.0 * PI * j as f64 / m as f64;
            Complex64::new(((concentration / 2.0) * (phi - mean).cos()).exp(), 0.0)
        })
        .collect();
    let mut coeffs = Vec::new();
    for n in -(cutoff as i64)..=cutoff as i64 {
        let mut acc = Complex64::ZERO;
        for (j, s) in samples.iter().enumerate() {
            let phi = -PI + 2.0 * PI * j as f64 / m as f64;
            acc += s * Complex64::from_polar(1.0, -(n as f64) * phi);
        }
        coeffs.push(acc / m as f64);
    }
    let norm = coeffs.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
    for (i, n) in (-(cutoff as i64)..=cutoff as i64).enumerate() {
        let oracle = coeffs[i] / norm;
        let got = packet.coefficient(n);
        assert!((got - oracle).norm() < 1e-12, "mode {n}: {got} vs {oracle}");
    }
}

#[test]
fn sine_integral_matches_quadrature() {
    for &x in &[0.5, 1.0, PI, 2.0 * PI, 10.0] {
        let oracle = integrate(|t| if t == 0.0 { 1.0 } else { t.sin() / t }, 0.0, x, 200);
        assert!(
            (sine_integral(x) - oracle).abs() < 1e-13,
            "Si({x}): {} vs {oracle}",
            sine_integral(x)
        );
    }
}

#[test]
fn gaussian_profile_has_unit_mass() {
    let cs = CoherentStateSpec::new(1.3, 0.8, 1.5, 0.4, 1.0).unwrap();
    let angle = 0.4f64;
    let sigma_q = (cs.width_position() / 2.0).sqrt();
    let sigma_p = (cs.width_momentum() / 2.0).sqrt();
    let (u, pm) = (
        [cs.radius() * angle.cos(), cs.radius() * angle.sin()],
        cs.tangential_momentum(),
    );
    let v = [-pm * angle.sin(), pm * angle.cos()];

    // Tensor Gauss-Legendre over a ±6σ box in all four coordinates.
    let n = 40usize;
    let axis = |center: f64, sigma: f64| -> (Vec<f64>, Vec<f64>) {
        let (nodes, weights) = support::gauss_legendre(n);
        let half = 6.0 * sigma;
        (
            nodes.iter().map(|&x| center + half * x).collect(),
            weights.iter().map(|&w| w * half).collect(),
        )
    };
    let (qx, wqx) = axis(u[0], sigma_q);
    let (qy, wqy) = axis(u[1], sigma_q);
    let (px, wpx) = axis(v[0], sigma_p);
    let (py, wpy) = axis(v[1], sigma_p);

    let mut mass = 0.0;
    for (iq, &x) in qx.iter().enumerate() {
        for (jq, &y) in qy.iter().enumerate() {
            let wq = wqx[iq] * wqy[jq];
            for (ip, &a) in px.iter().enumerate() {
                for (jp, &b) in py.iter().enumerate() {
                    mass +=
                        wq * wpx[ip] * wpy[jp] * gaussian_wigner_point(&cs, [x, y], [a, b], angle);
                }
            }
        }
    }
    assert!((mass - 1.0).abs() < 1e-6, "mass = {mass}");
}
