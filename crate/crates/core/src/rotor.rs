//! Rotor states on the circle and their two representations.
//!
//! A state is stored as truncated angular-momentum coefficients `c_n`,
//! `n ∈ [-N, N]`, relative to the orthonormal basis
//!
//! ```text
//! ψ_n(φ) = e^{inφ}/√(2π),   φ ∈ [-π, π)
//! ```
//!
//! The momentum representation is the discrete, exactly representable one,
//! so it is the single source of truth; the angle representation `ψ(φ)` is
//! always synthesized from the coefficients, never stored. Conversions fail
//! loudly on aliasing instead of truncating silently.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Result, RotorError};

/// Planck constant h, J·s (2019 SI exact value).
pub const PLANCK_H_SI: f64 = 6.626_070_15e-34;

/// Reduced Planck constant ℏ = h/2π, J·s.
pub const HBAR_SI: f64 = PLANCK_H_SI / (2.0 * PI);

/// Normalization tolerance: constructors renormalize, and a state is
/// considered unit-norm when `|Σ|c_n|² - 1| < NORM_TOLERANCE`.
pub const NORM_TOLERANCE: f64 = 1e-12;

/// Amplitudes with `|c_n| < COEFF_TOLERANCE` count as zero when classifying
/// parity.
pub const COEFF_TOLERANCE: f64 = 1e-12;

/// Physical constants of a rotor: action scale ℏ and moment of inertia I.
///
/// Natural units (ℏ = I = 1) are the default; SI values can be supplied
/// explicitly, e.g. `RotorSpec::new(HBAR_SI, inertia)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RotorSpec {
    pub hbar: f64,
    pub inertia: f64,
}

impl Default for RotorSpec {
    fn default() -> Self {
        Self {
            hbar: 1.0,
            inertia: 1.0,
        }
    }
}

impl RotorSpec {
    pub fn new(hbar: f64, inertia: f64) -> Result<Self> {
        if hbar <= 0.0 || hbar.is_nan() {
            return Err(RotorError::NonPositive { quantity: "hbar" });
        }
        if inertia <= 0.0 || inertia.is_nan() {
            return Err(RotorError::NonPositive {
                quantity: "inertia",
            });
        }
        Ok(Self { hbar, inertia })
    }

    /// Natural units, ℏ = I = 1.
    pub fn natural() -> Self {
        Self::default()
    }
}

/// Uniform angle grid `φ_j = -π + 2πj/M`, `j = 0..M-1`, covering `[-π, π)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AngleGrid {
    size: usize,
}

impl AngleGrid {
    pub fn new(size: usize) -> Result<Self> {
        if size < 2 {
            return Err(RotorError::Resolution {
                required: 2,
                actual: size,
            });
        }
        Ok(Self { size })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Grid spacing 2π/M.
    pub fn spacing(&self) -> f64 {
        2.0 * PI / self.size as f64
    }

    /// The j-th grid point.
    pub fn point(&self, j: usize) -> f64 {
        debug_assert!(j < self.size);
        -PI + 2.0 * PI * j as f64 / self.size as f64
    }

    pub fn points(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.size).map(move |j| self.point(j))
    }
}

/// Parity of a rotor state under the half-turn `φ → φ + π`.
///
/// `Even` states populate only even modes (`ψ(φ+π) = ψ(φ)`), `Odd` states
/// only odd modes (`ψ(φ+π) = -ψ(φ)`); everything else is `Mixed`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParityClass {
    Even,
    Odd,
    Mixed,
}

/// A normalized rotor state held as angular-momentum coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct AngularWaveFunction {
    spec: RotorSpec,
    cutoff: usize,
    /// `coeffs[i]` is the amplitude of mode `n = i - cutoff`.
    coeffs: Vec<Complex64>,
}

impl AngularWaveFunction {
    /// Normalizes raw coefficients; fails on an (effectively) zero vector.
    fn from_raw(coeffs: Vec<Complex64>, cutoff: usize, spec: RotorSpec) -> Result<Self> {
        debug_assert_eq!(coeffs.len(), 2 * cutoff + 1);
        let norm_sqr: f64 = coeffs.iter().map(|c| c.norm_sqr()).sum();
        if norm_sqr <= 0.0 || !norm_sqr.is_finite() {
            return Err(RotorError::DegenerateState);
        }
        let scale = norm_sqr.sqrt().recip();
        let coeffs = coeffs.into_iter().map(|c| c * scale).collect();
        Ok(Self {
            spec,
            cutoff,
            coeffs,
        })
    }

    /// The momentum eigenstate `ψ_n(φ) = e^{inφ}/√(2π)`.
    pub fn eigenstate(n: i64, cutoff: usize, spec: RotorSpec) -> Result<Self> {
        if n.unsigned_abs() as usize > cutoff {
            return Err(RotorError::CutoffViolation { n, cutoff });
        }
        let mut coeffs = vec![Complex64::ZERO; 2 * cutoff + 1];
        coeffs[(n + cutoff as i64) as usize] = Complex64::ONE;
        Ok(Self {
            spec,
            cutoff,
            coeffs,
        })
    }

    /// A normalized superposition of momentum eigenstates. Amplitudes for a
    /// repeated mode index accumulate.
    pub fn superposition(
        terms: &[(i64, Complex64)],
        cutoff: usize,
        spec: RotorSpec,
    ) -> Result<Self> {
        let mut coeffs = vec![Complex64::ZERO; 2 * cutoff + 1];
        for &(n, amp) in terms {
            if n.unsigned_abs() as usize > cutoff {
                return Err(RotorError::CutoffViolation { n, cutoff });
            }
            coeffs[(n + cutoff as i64) as usize] += amp;
        }
        Self::from_raw(coeffs, cutoff, spec)
    }

    /// A localized state with von Mises angle density: the amplitude profile
    /// `exp((κ/2)·cos(φ - φ₀))` projected onto the band `[-N, N]` and
    /// renormalized. Its Fourier coefficients are `c_n ∝ I_n(κ/2)·e^{-inφ₀}`
    /// with `I_n` the modified Bessel function, so the state peaks at `φ₀`
    /// and concentration 0 degrades to the uniform state `ψ_0`.
    pub fn wavepacket(mean_angle: f64, concentration: f64, cutoff: usize, spec: RotorSpec) -> Self {
        assert!(concentration >= 0.0, "concentration must be nonnegative");
        let half_kappa = concentration / 2.0;
        let mut coeffs = vec![Complex64::ZERO; 2 * cutoff + 1];
        for n in -(cutoff as i64)..=cutoff as i64 {
            let magnitude = bessel_i(n.unsigned_abs(), half_kappa);
            let phase = Complex64::from_polar(1.0, -(n as f64) * mean_angle);
            coeffs[(n + cutoff as i64) as usize] = phase * magnitude;
        }
        // I_0(x) >= 1, so the raw vector can never be degenerate.
        Self::from_raw(coeffs, cutoff, spec).expect("wavepacket projection is never degenerate")
    }

    /// Recovers coefficients from angle samples on a uniform grid by discrete
    /// Fourier projection, then renormalizes. The samples must come from a
    /// band-limited state and satisfy `M ≥ 2N + 1`.
    pub fn from_angle_samples(
        samples: &[Complex64],
        cutoff: usize,
        spec: RotorSpec,
    ) -> Result<Self> {
        let m = samples.len();
        if m < 2 * cutoff + 1 {
            return Err(RotorError::Resolution {
                required: 2 * cutoff + 1,
                actual: m,
            });
        }
        let grid = AngleGrid::new(m)?;
        let scale = (2.0 * PI).sqrt() / m as f64;
        let mut coeffs = vec![Complex64::ZERO; 2 * cutoff + 1];
        for (i, slot) in coeffs.iter_mut().enumerate() {
            let n = i as i64 - cutoff as i64;
            let mut acc = Complex64::ZERO;
            for (j, &s) in samples.iter().enumerate() {
                acc += s * Complex64::from_polar(1.0, -(n as f64) * grid.point(j));
            }
            *slot = acc * scale;
        }
        Self::from_raw(coeffs, cutoff, spec)
    }

    /// Synthesizes `ψ(φ_j) = Σ_n c_n e^{inφ_j}/√(2π)` on the grid.
    /// Fails when the grid cannot resolve the band limit (`M < 2N + 1`).
    pub fn angle_samples(&self, grid: &AngleGrid) -> Result<Vec<Complex64>> {
        let required = 2 * self.cutoff + 1;
        if grid.size() < required {
            return Err(RotorError::Resolution {
                required,
                actual: grid.size(),
            });
        }
        Ok(grid.points().map(|phi| self.angle_value(phi)).collect())
    }

    /// Pointwise synthesis `ψ(φ) = Σ_n c_n e^{inφ}/√(2π)`.
    pub fn angle_value(&self, phi: f64) -> Complex64 {
        let mut acc = Complex64::ZERO;
        for (n, c) in self.coefficients() {
            acc += c * Complex64::from_polar(1.0, n as f64 * phi);
        }
        acc / (2.0 * PI).sqrt()
    }

    /// The scalar product `⟨self|other⟩ = Σ_n c*_n c'_n`. Cutoffs may differ
    /// (missing coefficients read as zero); the rotor constants must match.
    pub fn inner_product(&self, other: &Self) -> Result<Complex64> {
        if self.spec != other.spec {
            return Err(RotorError::SpecMismatch);
        }
        let mut acc = Complex64::ZERO;
        for (n, c) in self.coefficients() {
            acc += c.conj() * other.coefficient(n);
        }
        Ok(acc)
    }

    /// Classifies the state by which mode parities carry amplitude above
    /// [`COEFF_TOLERANCE`].
    pub fn parity_class(&self) -> ParityClass {
        let mut has_even = false;
        let mut has_odd = false;
        for (n, c) in self.coefficients() {
            if c.norm() >= COEFF_TOLERANCE {
                if n.rem_euclid(2) == 0 {
                    has_even = true;
                } else {
                    has_odd = true;
                }
            }
        }
        match (has_even, has_odd) {
            (true, true) => ParityClass::Mixed,
            (false, true) => ParityClass::Odd,
            // A normalized state always carries some amplitude.
            _ => ParityClass::Even,
        }
    }

    /// Amplitude of mode `n`; zero outside the band.
    pub fn coefficient(&self, n: i64) -> Complex64 {
        if n.unsigned_abs() as usize > self.cutoff {
            Complex64::ZERO
        } else {
            self.coeffs[(n + self.cutoff as i64) as usize]
        }
    }

    /// Iterates `(n, c_n)` over the stored band `n ∈ [-N, N]`.
    pub fn coefficients(&self) -> impl Iterator<Item = (i64, Complex64)> + '_ {
        let cutoff = self.cutoff as i64;
        self.coeffs
            .iter()
            .enumerate()
            .map(move |(i, &c)| (i as i64 - cutoff, c))
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    pub fn spec(&self) -> RotorSpec {
        self.spec
    }

    pub fn norm_sqr(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm_sqr()).sum()
    }

    /// Mean energy `⟨Ĵ²/2I⟩ = Σ_n |c_n|² n²ℏ²/2I`.
    pub fn energy(&self) -> f64 {
        let RotorSpec { hbar, inertia } = self.spec;
        self.coefficients()
            .map(|(n, c)| c.norm_sqr() * (n as f64 * hbar).powi(2))
            .sum::<f64>()
            / (2.0 * inertia)
    }

    /// Mean angular momentum `⟨Ĵ⟩ = Σ_n |c_n|² nℏ`.
    pub fn mean_momentum(&self) -> f64 {
        self.coefficients()
            .map(|(n, c)| c.norm_sqr() * n as f64 * self.spec.hbar)
            .sum()
    }

    /// Second moment `⟨Ĵ²⟩ = Σ_n |c_n|² (nℏ)²`.
    pub fn momentum_second_moment(&self) -> f64 {
        self.coefficients()
            .map(|(n, c)| c.norm_sqr() * (n as f64 * self.spec.hbar).powi(2))
            .sum()
    }

    /// Applies a unit phase to every coefficient. The caller guarantees
    /// `|phase(n)| = 1`, so the norm is preserved exactly and no
    /// renormalization is applied.
    pub(crate) fn with_phases(&self, phase: impl Fn(i64) -> Complex64) -> Self {
        let cutoff = self.cutoff as i64;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, &c)| c * phase(i as i64 - cutoff))
            .collect();
        Self {
            spec: self.spec,
            cutoff: self.cutoff,
            coeffs,
        }
    }
}

/// Modified Bessel function of the first kind `I_n(x)` for integer order,
/// by the ascending power series. Adequate for the moderate arguments that
/// arise from wavepacket concentrations.
fn bessel_i(order: u64, x: f64) -> f64 {
    let half = x / 2.0;
    // term_0 = (x/2)^n / n!
    let mut term = 1.0;
    for k in 1..=order {
        term *= half / k as f64;
    }
    let mut sum = term;
    let mut k = 1.0;
    while term.abs() > 1e-18 * sum.abs().max(1.0) {
        term *= half * half / (k * (k + order as f64));
        sum += term;
        k += 1.0;
        if k > 500.0 {
            break;
        }
    }
    sum
}
