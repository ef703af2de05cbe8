//! Phase-space (Wigner) distributions on the cylinder T*S¹.
//!
//! For a rotor state `ψ` the distribution over angle `φ` and angular
//! momentum `J` is
//!
//! ```text
//! f_ψ(φ, J) = (1/2πℏ) ∫_{-π}^{π} dγ e^{-iγJ/ℏ} ψ(φ + γ/2) ψ*(φ - γ/2)
//! ```
//!
//! which for a band-limited state evaluates in closed form through the
//! sinc kernel `j₀(x) = sin(x)/x`:
//!
//! ```text
//! f_ψ(φ, J) = (1/2πℏ) Σ_{n,n'} c_n c*_{n'} e^{i(n-n')φ} j₀(π((n+n')/2 - J/ℏ))
//! ```
//!
//! [`wigner_point`] evaluates this kernel form at arbitrary real `(φ, J)`.
//! Off the integer lattice `J/ℏ ∈ ℤ` the kernel behaves badly on purpose:
//! the momentum marginal can turn negative there, and for mixed-parity
//! states the value depends on the choice of γ window
//! ([`wigner_point_windowed`] exposes that dependence).
//!
//! [`wigner_field`] instead stores the distribution through its angular
//! Fourier modes,
//!
//! ```text
//! f(φ, J) = (1/2πℏ) Σ_m e^{-imφ} f̃'(m, J/ℏ),   f̃'(m, J/ℏ) = c_b c*_a,
//! a = J/ℏ + m/2,  b = J/ℏ - m/2,  a, b ∈ ℤ,
//! ```
//!
//! keeping exactly the mode pairs with integer indices. Pure-parity states
//! populate only integer lattice heights (even mode differences), where the
//! field coincides with the kernel form node by node; mixed-parity states
//! additionally populate half-integer heights through odd mode differences.
//! Every `(a, b)` pair lives at exactly one lattice height, so lattice sums
//! weight each populated point by ℏ and the total mass, the marginals and
//! the overlap identity all come out exact on a lattice that covers the
//! band.

use std::f64::consts::PI;

use ndarray::Array2;
use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Result, RotorError};
use crate::rotor::{AngleGrid, AngularWaveFunction, ParityClass, RotorSpec};

/// Largest imaginary residue tolerated when a synthesized field value is
/// taken real. Exceeding it indicates a broken Hermitian symmetry, i.e. a
/// library bug, and panics rather than truncating silently.
pub const IMAG_TOLERANCE: f64 = 1e-10;

/// `j₀(x) = sin(x)/x` with the removable singularity filled: `j₀(0) = 1`.
///
/// Below `|x| < 1e-4` the Taylor expansion `1 - x²/6 + x⁴/120` is used to
/// avoid cancellation; at the switch point the two branches agree to well
/// below machine epsilon.
pub fn sinc_j0(x: f64) -> f64 {
    if x.abs() < 1e-4 {
        let x2 = x * x;
        1.0 - x2 / 6.0 + x2 * x2 / 120.0
    } else {
        x.sin() / x
    }
}

/// Sine integral `Si(x) = ∫₀^x sin(t)/t dt` by the ascending power series.
/// Accurate to machine precision for the moderate arguments (|x| ≲ 20)
/// used here.
pub fn sine_integral(x: f64) -> f64 {
    // term_k = (-1)^k x^{2k+1} / ((2k+1)(2k+1)!)
    let mut term = x;
    let mut sum = x;
    let mut k = 0.0f64;
    while term.abs() > 1e-17 * sum.abs().max(1.0) {
        let odd = 2.0 * k + 1.0;
        term *= -x * x * odd / ((odd + 2.0) * (odd + 2.0) * (odd + 1.0));
        sum += term;
        k += 1.0;
        if k > 200.0 {
            break;
        }
    }
    sum
}

/// Spacing of a momentum lattice in units of ℏ.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LatticeStep {
    /// Points `J = nℏ`, `n ∈ ℤ`. Valid only for pure-parity states.
    Integer,
    /// Points `J = nℏ/2`, `n ∈ ℤ`. Required for mixed-parity states, whose
    /// odd mode differences populate the half-integer heights.
    Half,
}

/// A finite lattice of angular-momentum values `J = k·step·ℏ`,
/// `k ∈ [min_index, max_index]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MomentumLattice {
    step: LatticeStep,
    min_index: i64,
    max_index: i64,
}

impl MomentumLattice {
    pub fn integer(min_index: i64, max_index: i64) -> Self {
        assert!(min_index <= max_index, "lattice range is empty");
        Self {
            step: LatticeStep::Integer,
            min_index,
            max_index,
        }
    }

    pub fn half(min_index: i64, max_index: i64) -> Self {
        assert!(min_index <= max_index, "lattice range is empty");
        Self {
            step: LatticeStep::Half,
            min_index,
            max_index,
        }
    }

    /// The smallest lattice of the parity-appropriate step that carries the
    /// full mode content of `psi`: integer heights `[-N, N]` for pure
    /// parity, half-integer heights `[-N, N]` (indices `[-2N, 2N]`) for
    /// mixed parity.
    pub fn covering(psi: &AngularWaveFunction) -> Self {
        let n = psi.cutoff() as i64;
        match psi.parity_class() {
            ParityClass::Even | ParityClass::Odd => Self::integer(-n, n),
            ParityClass::Mixed => Self::half(-2 * n, 2 * n),
        }
    }

    pub fn step(&self) -> LatticeStep {
        self.step
    }

    pub fn index_range(&self) -> (i64, i64) {
        (self.min_index, self.max_index)
    }

    pub fn len(&self) -> usize {
        (self.max_index - self.min_index + 1) as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `J/ℏ` at the given row.
    pub fn point_over_hbar(&self, row: usize) -> f64 {
        let k = self.min_index + row as i64;
        match self.step {
            LatticeStep::Integer => k as f64,
            LatticeStep::Half => k as f64 / 2.0,
        }
    }

    pub fn points_over_hbar(&self) -> Vec<f64> {
        (0..self.len()).map(|r| self.point_over_hbar(r)).collect()
    }

    /// Twice the height `J/ℏ` at the given row, always an exact integer.
    fn doubled_index(&self, row: usize) -> i64 {
        let k = self.min_index + row as i64;
        match self.step {
            LatticeStep::Integer => 2 * k,
            LatticeStep::Half => k,
        }
    }

    /// Integer lattices admit only pure-parity states.
    pub fn accepts(&self, parity: ParityClass) -> bool {
        match self.step {
            LatticeStep::Integer => parity != ParityClass::Mixed,
            LatticeStep::Half => true,
        }
    }
}

/// Angular Fourier-mode content of a phase-space field: one complex
/// amplitude `f̃'(m, J/ℏ)` per (lattice row, mode m).
///
/// A real synthesized field corresponds to the Hermitian symmetry
/// `f̃'(-m, ·) = conj(f̃'(m, ·))`, which every constructor here preserves.
#[derive(Debug, Clone, PartialEq)]
pub struct ModeSpectrum {
    max_mode: i64,
    /// Shape `(rows, 2·max_mode + 1)`; column `i` holds mode `m = i - max_mode`.
    amplitudes: Array2<Complex64>,
}

impl ModeSpectrum {
    pub(crate) fn zeros(rows: usize, max_mode: i64) -> Self {
        let cols = (2 * max_mode + 1) as usize;
        Self {
            max_mode,
            amplitudes: Array2::from_elem((rows, cols), Complex64::ZERO),
        }
    }

    pub fn rows(&self) -> usize {
        self.amplitudes.nrows()
    }

    pub fn max_mode(&self) -> i64 {
        self.max_mode
    }

    /// Amplitude of mode `m` at the given lattice row; zero outside the band.
    pub fn amplitude(&self, row: usize, m: i64) -> Complex64 {
        if m.abs() > self.max_mode {
            Complex64::ZERO
        } else {
            self.amplitudes[(row, (m + self.max_mode) as usize)]
        }
    }

    pub(crate) fn set(&mut self, row: usize, m: i64, value: Complex64) {
        self.amplitudes[(row, (m + self.max_mode) as usize)] = value;
    }

    /// Largest violation of the Hermitian symmetry, for diagnostics.
    pub fn hermitian_defect(&self) -> f64 {
        let mut worst = 0.0f64;
        for row in 0..self.rows() {
            for m in 0..=self.max_mode {
                let d = (self.amplitude(row, -m) - self.amplitude(row, m).conj()).norm();
                worst = worst.max(d);
            }
        }
        worst
    }

    /// Mode-wise linear combination `Σ_s w_s S_s` over spectra on the same
    /// lattice. Mode bands may differ (members of an ensemble can carry
    /// different cutoffs); the result spans the widest band.
    pub(crate) fn weighted_sum(terms: &[(f64, &ModeSpectrum)]) -> ModeSpectrum {
        let rows = terms[0].1.rows();
        let max_mode = terms.iter().map(|&(_, s)| s.max_mode).max().unwrap();
        let mut out = ModeSpectrum::zeros(rows, max_mode);
        for &(w, s) in terms {
            assert_eq!(s.rows(), rows, "spectra live on different lattices");
            let offset = (max_mode - s.max_mode) as usize;
            for row in 0..rows {
                for (col, &amp) in s.amplitudes.row(row).iter().enumerate() {
                    if amp != Complex64::ZERO {
                        out.amplitudes[(row, col + offset)] += w * amp;
                    }
                }
            }
        }
        out
    }

    pub(crate) fn map_modes(&self, f: impl Fn(usize, i64, Complex64) -> Complex64) -> Self {
        let mut out = self.clone();
        for row in 0..self.rows() {
            for m in -self.max_mode..=self.max_mode {
                out.set(row, m, f(row, m, self.amplitude(row, m)));
            }
        }
        out
    }
}

/// The mode spectrum of a single state on a lattice: `f̃'(m, J/ℏ) = c_b c*_a`
/// over all integer pairs `a = J/ℏ + m/2`, `b = J/ℏ - m/2` inside the band.
pub fn mode_spectrum(psi: &AngularWaveFunction, lattice: &MomentumLattice) -> Result<ModeSpectrum> {
    let parity = psi.parity_class();
    if !lattice.accepts(parity) {
        return Err(RotorError::ParityLattice { parity });
    }
    let n = psi.cutoff() as i64;
    let max_mode = 2 * n;
    let mut spectrum = ModeSpectrum::zeros(lattice.len(), max_mode);
    for row in 0..lattice.len() {
        // a + b = 2·J/ℏ; modes must match its parity for a, b ∈ ℤ.
        let doubled = lattice.doubled_index(row);
        let m_start = if (max_mode - doubled).rem_euclid(2) == 0 {
            -max_mode
        } else {
            -max_mode + 1
        };
        let mut m = m_start;
        while m <= max_mode {
            let a = (doubled + m) / 2;
            let b = (doubled - m) / 2;
            if a.abs() <= n && b.abs() <= n {
                spectrum.set(row, m, psi.coefficient(b) * psi.coefficient(a).conj());
            }
            m += 2;
        }
    }
    Ok(spectrum)
}

/// A real phase-space distribution sampled on an angle grid × momentum
/// lattice, together with the mode spectrum it was synthesized from.
///
/// Lattice sums (`total_mass`, `sum_over_lattice`) weight every populated
/// point by ℏ: each integer mode pair lives at exactly one height, so this
/// realizes `∫dJ = ℏΣ` channel by channel and keeps the normalization and
/// marginal identities exact on covering lattices of either step.
#[derive(Debug, Clone, PartialEq)]
pub struct WignerField {
    spec: RotorSpec,
    grid: AngleGrid,
    lattice: MomentumLattice,
    modes: ModeSpectrum,
    /// Shape `(lattice rows, grid points)`.
    values: Array2<f64>,
    max_imag_residue: f64,
}

impl WignerField {
    /// Synthesizes the real field from a Hermitian-symmetric mode spectrum.
    ///
    /// Panics if the imaginary residue of any synthesized value exceeds
    /// [`IMAG_TOLERANCE`]; that can only happen through an internal
    /// consistency bug, never through user input.
    pub(crate) fn from_modes(
        spec: RotorSpec,
        grid: AngleGrid,
        lattice: MomentumLattice,
        modes: ModeSpectrum,
    ) -> Self {
        let rows = lattice.len();
        let cols = grid.size();
        let norm = 1.0 / (2.0 * PI * spec.hbar);
        let row_data: Vec<(Vec<f64>, f64)> = (0..rows)
            .into_par_iter()
            .map(|row| {
                let mut out = Vec::with_capacity(cols);
                let mut residue = 0.0f64;
                for phi in grid.points() {
                    let mut acc = Complex64::ZERO;
                    for m in -modes.max_mode()..=modes.max_mode() {
                        let amp = modes.amplitude(row, m);
                        if amp != Complex64::ZERO {
                            acc += amp * Complex64::from_polar(1.0, -(m as f64) * phi);
                        }
                    }
                    acc *= norm;
                    residue = residue.max(acc.im.abs());
                    out.push(acc.re);
                }
                (out, residue)
            })
            .collect();
        let mut values = Array2::zeros((rows, cols));
        let mut max_imag_residue = 0.0f64;
        for (row, (data, residue)) in row_data.into_iter().enumerate() {
            max_imag_residue = max_imag_residue.max(residue);
            for (col, v) in data.into_iter().enumerate() {
                values[(row, col)] = v;
            }
        }
        assert!(
            max_imag_residue < IMAG_TOLERANCE,
            "field synthesis left imaginary residue {max_imag_residue:e}; \
             the mode spectrum lost its Hermitian symmetry"
        );
        Self {
            spec,
            grid,
            lattice,
            modes,
            values,
            max_imag_residue,
        }
    }

    pub fn spec(&self) -> RotorSpec {
        self.spec
    }

    pub fn grid(&self) -> &AngleGrid {
        &self.grid
    }

    pub fn lattice(&self) -> &MomentumLattice {
        &self.lattice
    }

    pub fn modes(&self) -> &ModeSpectrum {
        &self.modes
    }

    /// `f(φ_col, J_row)`.
    pub fn value(&self, row: usize, col: usize) -> f64 {
        self.values[(row, col)]
    }

    pub fn values(&self) -> &Array2<f64> {
        &self.values
    }

    /// Largest imaginary part discarded while synthesizing the samples.
    pub fn max_imag_residue(&self) -> f64 {
        self.max_imag_residue
    }

    /// Total mass `Σ_rows ℏ ∮dφ f`, evaluated exactly from the zero modes:
    /// `∮dφ f(φ, J) = f̃'(0, J/ℏ)/ℏ`. Equals 1 for a normalized state on a
    /// covering lattice, independent of the grid size.
    pub fn total_mass(&self) -> f64 {
        (0..self.lattice.len())
            .map(|row| self.modes.amplitude(row, 0).re)
            .sum()
    }

    /// Total mass by literal grid quadrature, `Σ_rows ℏ (2π/M) Σ_cols f`.
    /// Matches [`total_mass`](Self::total_mass) when the grid resolves every
    /// populated mode (`M > 2·max_mode`).
    pub fn quadrature_mass(&self) -> f64 {
        let cell = self.spec.hbar * self.grid.spacing();
        self.values.iter().sum::<f64>() * cell
    }

    /// Angle quadrature of one lattice row, `(2π/M) Σ_cols f(φ, J_row)`.
    pub fn integrate_over_angle(&self, row: usize) -> f64 {
        self.values.row(row).sum() * self.grid.spacing()
    }

    /// Weighted lattice sum at one grid column, `ℏ Σ_rows f(φ_col, J)`.
    pub fn sum_over_lattice(&self, col: usize) -> f64 {
        self.values.column(col).sum() * self.spec.hbar
    }

    /// Applies a unit phase per (row, mode); used by the spectral transport.
    pub(crate) fn with_mode_phases(&self, phase: impl Fn(usize, i64) -> Complex64) -> Self {
        let modes = self.modes.map_modes(|row, m, amp| amp * phase(row, m));
        Self::from_modes(self.spec, self.grid, self.lattice, modes)
    }
}

/// Builds the mode-pair field of a state on the given grid and lattice.
///
/// Integer lattices reject mixed-parity states; on them the field agrees
/// with the [`wigner_point`] kernel at every node. On half lattices the
/// half-integer heights hold exactly the odd interference modes.
pub fn wigner_field(
    psi: &AngularWaveFunction,
    grid: &AngleGrid,
    lattice: &MomentumLattice,
) -> Result<WignerField> {
    let spectrum = mode_spectrum(psi, lattice)?;
    Ok(WignerField::from_modes(
        psi.spec(),
        *grid,
        *lattice,
        spectrum,
    ))
}

/// Kernel evaluation of the distribution at an arbitrary phase-space point,
///
/// `f(φ, J) = (1/2πℏ) Σ_{n,n'} c_n c*_{n'} e^{i(n-n')φ} j₀(π((n+n')/2 - J/ℏ))`.
///
/// `J` may be any real value; off the integer lattice the result can be
/// negative and, for mixed-parity states, window-dependent (see
/// [`wigner_point_windowed`]).
pub fn wigner_point(psi: &AngularWaveFunction, phi: f64, j_action: f64) -> f64 {
    let value = wigner_point_windowed(psi, phi, j_action, -PI);
    assert!(
        value.im.abs() < IMAG_TOLERANCE,
        "kernel evaluation left imaginary residue {:e}",
        value.im.abs()
    );
    value.re
}

/// Kernel evaluation with the γ integration window `[start, start + 2π]`.
///
/// The closed form of the window shift is the per-pair factor
/// `e^{i(start+π)x}` with `x = (n+n')/2 - J/ℏ`. For pure-parity states at
/// integer `J/ℏ` every contributing `x` is an integer where the factor has
/// no effect, so the value is window-invariant; mixed-parity states pick up
/// genuinely complex, window-dependent values, which is why this variant
/// returns the full complex result.
pub fn wigner_point_windowed(
    psi: &AngularWaveFunction,
    phi: f64,
    j_action: f64,
    window_start: f64,
) -> Complex64 {
    let hbar = psi.spec().hbar;
    let height = j_action / hbar;
    let shift = window_start + PI;
    let mut acc = Complex64::ZERO;
    for (n, cn) in psi.coefficients() {
        if cn == Complex64::ZERO {
            continue;
        }
        for (np, cnp) in psi.coefficients() {
            if cnp == Complex64::ZERO {
                continue;
            }
            let x = 0.5 * (n + np) as f64 - height;
            let kernel = sinc_j0(PI * x);
            let angle_phase = Complex64::from_polar(1.0, (n - np) as f64 * phi);
            let window_phase = Complex64::from_polar(1.0, shift * x);
            acc += cn * cnp.conj() * angle_phase * window_phase * kernel;
        }
    }
    acc / (2.0 * PI * hbar)
}

/// Angle marginal `F^cs(φ) = |ψ(φ)|²`, always nonnegative.
pub fn marginal_angle(psi: &AngularWaveFunction, phi: f64) -> f64 {
    psi.angle_value(phi).norm_sqr()
}

/// Momentum marginal `F^ms(J) = (1/ℏ) Σ_n |c_n|² j₀(π(n - J/ℏ))`.
///
/// At integer heights this reduces to the projection probability
/// `|c_{J/ℏ}|²/ℏ ≥ 0`; at fractional heights it may be negative and is
/// returned as-is.
pub fn marginal_momentum(psi: &AngularWaveFunction, j_action: f64) -> f64 {
    let hbar = psi.spec().hbar;
    let height = j_action / hbar;
    psi.coefficients()
        .map(|(n, c)| c.norm_sqr() * sinc_j0(PI * (n as f64 - height)))
        .sum::<f64>()
        / hbar
}

/// Phase-space overlap `(f₁, f₂) = |⟨ψ₁|ψ₂⟩|² / 2πℏ`.
pub fn phase_space_overlap(psi1: &AngularWaveFunction, psi2: &AngularWaveFunction) -> Result<f64> {
    let ip = psi1.inner_product(psi2)?;
    Ok(ip.norm_sqr() / (2.0 * PI * psi1.spec().hbar))
}

/// Overlap by the explicit lattice sum `Σ_rows ℏ (2π/M) Σ_cols f₁·f₂` over
/// two fields of identical geometry. Exact (equal to
/// [`phase_space_overlap`]) when the shared lattice covers both states and
/// the grid resolves the product modes (`M > 4N`).
pub fn field_product_overlap(f1: &WignerField, f2: &WignerField) -> Result<f64> {
    if f1.grid != f2.grid || f1.lattice != f2.lattice {
        return Err(RotorError::FieldMismatch);
    }
    if f1.spec != f2.spec {
        return Err(RotorError::SpecMismatch);
    }
    let cell = f1.spec.hbar * f1.grid.spacing();
    let mut acc = 0.0;
    for (a, b) in f1.values.iter().zip(f2.values.iter()) {
        acc += a * b;
    }
    Ok(acc * cell)
}

/// Correlation defect `C_ψ(φ, J) = f_ψ(φ, J) - F^cs(φ)·F^ms(J)`, the
/// deviation of the distribution from the product of its marginals.
pub fn correlation_defect(psi: &AngularWaveFunction, phi: f64, j_action: f64) -> f64 {
    wigner_point(psi, phi, j_action) - marginal_angle(psi, phi) * marginal_momentum(psi, j_action)
}

/// Matrix of the angle operator in the momentum basis,
/// `φ̂'_{ba} = -i·(-1)^{a-b}/(a-b)` off the diagonal and 0 on it.
#[derive(Debug, Clone, PartialEq)]
pub struct AngleOperatorMatrix {
    cutoff: usize,
    /// Shape `(2N+1, 2N+1)`; `entries[(b+N, a+N)] = φ̂'_{ba}`.
    entries: Array2<Complex64>,
}

impl AngleOperatorMatrix {
    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    /// Entry `φ̂'_{ba}` addressed by momentum quantum numbers `b, a ∈ [-N, N]`.
    pub fn entry(&self, b: i64, a: i64) -> Complex64 {
        let n = self.cutoff as i64;
        assert!(
            b.abs() <= n && a.abs() <= n,
            "index outside the cutoff band"
        );
        self.entries[((b + n) as usize, (a + n) as usize)]
    }

    /// Largest violation of `φ̂'_{ab} = conj(φ̂'_{ba})`.
    pub fn hermitian_defect(&self) -> f64 {
        let n = self.cutoff as i64;
        let mut worst = 0.0f64;
        for b in -n..=n {
            for a in -n..=n {
                worst = worst.max((self.entry(a, b) - self.entry(b, a).conj()).norm());
            }
        }
        worst
    }
}

/// Closed-form angle operator matrix on the band `[-N, N]`. Hermitian with
/// zero diagonal and entry magnitude `1/|a-b|`; the entry at `a-b = 1` is
/// exactly `i`.
pub fn angle_operator_matrix(cutoff: usize) -> AngleOperatorMatrix {
    let n = cutoff as i64;
    let dim = 2 * cutoff + 1;
    let mut entries = Array2::from_elem((dim, dim), Complex64::ZERO);
    for b in -n..=n {
        for a in -n..=n {
            if a == b {
                continue;
            }
            let diff = a - b;
            let sign = if diff.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
            entries[((b + n) as usize, (a + n) as usize)] =
                Complex64::new(0.0, -sign / diff as f64);
        }
    }
    AngleOperatorMatrix { cutoff, entries }
}

/// Partial sum of the sawtooth Fourier series of the angle coordinate,
/// `2 Σ_{m=1}^{n} (-1)^{m+1} sin(mφ)/m`, which converges to φ pointwise on
/// the open interval (-π, π).
pub fn angle_fourier_series(n_terms: usize, phi: f64) -> f64 {
    let mut sum = 0.0;
    for m in 1..=n_terms {
        let sign = if m % 2 == 1 { 1.0 } else { -1.0 };
        sum += sign * (m as f64 * phi).sin() / m as f64;
    }
    2.0 * sum
}

/// The scaled partial sum `2 Σ_{m=1}^{n} sin(mφ/n)/m`.
///
/// As `n → ∞` it converges to `2·Si(φ)` (a Riemann sum of the sinc
/// integral), the Gibbs overshoot value at a jump discontinuity; at `φ = π`
/// that limit is `2·Si(π) ≈ 3.703874`, i.e. `1.17898·π`.
pub fn gibbs_limit_sum(n: usize, phi: f64) -> f64 {
    let mut sum = 0.0;
    for m in 1..=n {
        sum += (m as f64 * phi / n as f64).sin() / m as f64;
    }
    2.0 * sum
}
