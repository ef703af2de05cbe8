//! Rotational coherent states: the Gaussian phase-space profile of a
//! displaced 2D oscillator ground state circling at constant radius, its
//! Poisson angular-momentum statistics, and entropy comparisons.

use num_complex::Complex64;

use crate::error::{Result, RotorError};

/// Tail mass a truncated weight distribution may leave uncaptured.
pub const TAIL_MASS_LIMIT: f64 = 1e-10;

/// Parameters of a rotational coherent state: a particle of mass `M`
/// rotating at angular frequency `ω` on a circle of radius `R`, starting at
/// angle `φ₀`. Derived quantities: orbital action `J = MωR²`, displacement
/// `z = √(J/ℏ)·e^{-iφ₀}`, Gaussian widths `a = ℏ/Mω`, `b = ℏMω` with
/// `a·b = ℏ²`, and tangential momentum `P = MωR`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoherentStateSpec {
    mass: f64,
    omega: f64,
    radius: f64,
    phase: f64,
    hbar: f64,
}

impl CoherentStateSpec {
    pub fn new(mass: f64, omega: f64, radius: f64, phase: f64, hbar: f64) -> Result<Self> {
        if mass <= 0.0 || mass.is_nan() {
            return Err(RotorError::NonPositive { quantity: "mass" });
        }
        if omega <= 0.0 || omega.is_nan() {
            return Err(RotorError::NonPositive { quantity: "omega" });
        }
        if hbar <= 0.0 || hbar.is_nan() {
            return Err(RotorError::NonPositive { quantity: "hbar" });
        }
        if radius < 0.0 {
            return Err(RotorError::Negative { quantity: "radius" });
        }
        Ok(Self {
            mass,
            omega,
            radius,
            phase,
            hbar,
        })
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn phase(&self) -> f64 {
        self.phase
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    /// Orbital action `J = MωR²`.
    pub fn action(&self) -> f64 {
        self.mass * self.omega * self.radius * self.radius
    }

    /// Displacement amplitude `z = √(J/ℏ)·e^{-iφ₀}`, with `|z|² = J/ℏ`.
    pub fn displacement(&self) -> Complex64 {
        Complex64::from_polar((self.action() / self.hbar).sqrt(), -self.phase)
    }

    /// Position width `a = ℏ/Mω`.
    pub fn width_position(&self) -> f64 {
        self.hbar / (self.mass * self.omega)
    }

    /// Momentum width `b = ℏMω`.
    pub fn width_momentum(&self) -> f64 {
        self.hbar * self.mass * self.omega
    }

    /// Tangential momentum `P = MωR`.
    pub fn tangential_momentum(&self) -> f64 {
        self.mass * self.omega * self.radius
    }
}

/// The isotropic Gaussian phase-space profile of the coherent state at
/// orbit angle `φ`,
///
/// ```text
/// f(q, p) = (1/π²ℏ²) e^{-(q-u)²/a - (p-v)²/b},
/// u = (R cos φ, R sin φ),  v = (-P sin φ, P cos φ),
/// ```
///
/// normalized to unit mass over T*ℝ² since `a·b = ℏ²`.
pub fn gaussian_wigner_point(
    spec: &CoherentStateSpec,
    q: [f64; 2],
    p: [f64; 2],
    angle: f64,
) -> f64 {
    let (sin_phi, cos_phi) = angle.sin_cos();
    let u = [spec.radius * cos_phi, spec.radius * sin_phi];
    let pm = spec.tangential_momentum();
    let v = [-pm * sin_phi, pm * cos_phi];
    let dq = (q[0] - u[0]).powi(2) + (q[1] - u[1]).powi(2);
    let dp = (p[0] - v[0]).powi(2) + (p[1] - v[1]).powi(2);
    let peak = 1.0 / (std::f64::consts::PI.powi(2) * spec.hbar * spec.hbar);
    peak * (-dq / spec.width_position() - dp / spec.width_momentum()).exp()
}

/// A discrete weight distribution over `n = 0..=n_max` with unit mass.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightDistribution {
    weights: Vec<f64>,
    mean: f64,
}

impl WeightDistribution {
    /// Wraps explicit nonnegative weights; the sum must already be within
    /// [`TAIL_MASS_LIMIT`] of 1.
    pub fn from_weights(weights: Vec<f64>) -> Result<Self> {
        if weights.is_empty() {
            return Err(RotorError::EmptyEnsemble);
        }
        if weights.iter().any(|&w| w < 0.0) {
            return Err(RotorError::Negative { quantity: "weight" });
        }
        let total: f64 = weights.iter().sum();
        let tail = (1.0 - total).abs();
        if tail > TAIL_MASS_LIMIT {
            return Err(RotorError::TailMass {
                n_max: weights.len() - 1,
                tail,
                limit: TAIL_MASS_LIMIT,
            });
        }
        let mean = weights.iter().enumerate().map(|(n, &w)| n as f64 * w).sum();
        Ok(Self { weights, mean })
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn weight(&self, n: usize) -> f64 {
        self.weights.get(n).copied().unwrap_or(0.0)
    }

    pub fn n_max(&self) -> usize {
        self.weights.len() - 1
    }

    /// `Σ_n n·w_n`.
    pub fn mean(&self) -> f64 {
        self.mean
    }
}

/// Poisson weights `w_n = e^{-λ} λⁿ/n!` for `n = 0..=n_max`, computed by
/// the multiplicative recursion `w_{n+1} = w_n·λ/(n+1)` (no factorials, no
/// overflow). Fails if the truncation leaves tail mass above
/// [`TAIL_MASS_LIMIT`].
pub fn poisson_weights(lambda: f64, n_max: usize) -> Result<WeightDistribution> {
    if lambda < 0.0 {
        return Err(RotorError::Negative { quantity: "lambda" });
    }
    let mut weights = Vec::with_capacity(n_max + 1);
    let mut w = (-lambda).exp();
    for n in 0..=n_max {
        weights.push(w);
        w *= lambda / (n + 1) as f64;
    }
    let tail = 1.0 - weights.iter().sum::<f64>();
    if tail > TAIL_MASS_LIMIT {
        return Err(RotorError::TailMass {
            n_max,
            tail,
            limit: TAIL_MASS_LIMIT,
        });
    }
    let mean = weights.iter().enumerate().map(|(n, &w)| n as f64 * w).sum();
    Ok(WeightDistribution { weights, mean })
}

/// Number-state weight `|⟨n|Z⟩|²` of the displaced vacuum
/// `|Z⟩ = e^{z b̂† - z* b̂}|0⟩`, via the normal-ordered expansion
/// `⟨n|Z⟩ = e^{-|z|²/2} zⁿ/√(n!)`. Equals the Poisson weight of
/// `λ = |z|²`: the same closed form reached through the operator algebra
/// instead of the distributional definition.
pub fn coherent_overlap_weight(z: Complex64, n: usize) -> f64 {
    // zⁿ/√(n!) built multiplicatively in the complex plane.
    let mut amplitude = Complex64::ONE;
    for k in 1..=n {
        amplitude *= z / (k as f64).sqrt();
    }
    amplitude *= (-z.norm_sqr() / 2.0).exp();
    amplitude.norm_sqr()
}

/// Shannon entropy `S_w = -Σ_n w_n ln w_n` with `0·ln 0 := 0`.
pub fn distribution_entropy(distribution: &WeightDistribution) -> f64 {
    -distribution
        .weights()
        .iter()
        .filter(|&&w| w > 0.0)
        .map(|&w| w * w.ln())
        .sum::<f64>()
}

/// Entropy `S_J = [1 + ln(2πλ)]/2` of the Gaussian on ℝ with the same mean
/// and variance as the Poisson distribution of mean λ.
pub fn gaussian_reference_entropy(lambda: f64) -> Result<f64> {
    if lambda <= 0.0 || lambda.is_nan() {
        return Err(RotorError::NonPositive { quantity: "lambda" });
    }
    Ok(0.5 * (1.0 + (2.0 * std::f64::consts::PI * lambda).ln()))
}
