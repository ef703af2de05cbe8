//! Geometric quantization of circular orbits: the base-2 action ladder
//! `log₂(J/J_G)³ = n` with `J_G = McR_G`, the radii `r_n = R_G·2^{1+2n/3}`
//! it implies through Kepler's third law, and the comparison against the
//! observed radii of the Galilean moons.

use crate::error::{Result, RotorError};

/// Gravitational constant γ_G, m³ kg⁻¹ s⁻² (CODATA, 4 significant digits).
pub const GRAVITATIONAL_CONSTANT: f64 = 6.674e-11;

/// Speed of light, m/s (exact).
pub const LIGHT_SPEED: f64 = 299_792_458.0;

/// Jupiter mass, kg.
pub const JUPITER_MASS: f64 = 1.898e27;

/// Observed mean orbital radii of the Galilean moons (meters) with the
/// ladder index assigned to each: published astronomical values, bundled
/// for the comparison table.
pub const GALILEAN_MOONS: [(&str, u32, f64); 4] = [
    ("Io", 39, 421.6e6),
    ("Europa", 40, 670.8e6),
    ("Ganymede", 41, 1070.0e6),
    ("Callisto", 42, 1882.0e6),
];

/// A central body with the constants needed to derive its Schwarzschild
/// radius `R_G = 2γ_G M_o/c²`. The radius is always derived, never stored.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrbitSystem {
    central_mass: f64,
    gravitational_constant: f64,
    light_speed: f64,
}

impl OrbitSystem {
    pub fn new(central_mass: f64, gravitational_constant: f64, light_speed: f64) -> Result<Self> {
        if central_mass <= 0.0 || central_mass.is_nan() {
            return Err(RotorError::NonPositive {
                quantity: "central mass",
            });
        }
        if gravitational_constant <= 0.0 || gravitational_constant.is_nan() {
            return Err(RotorError::NonPositive {
                quantity: "gravitational constant",
            });
        }
        if light_speed <= 0.0 || light_speed.is_nan() {
            return Err(RotorError::NonPositive {
                quantity: "light speed",
            });
        }
        Ok(Self {
            central_mass,
            gravitational_constant,
            light_speed,
        })
    }

    /// A central body of the given mass with default constants.
    pub fn with_central_mass(central_mass: f64) -> Result<Self> {
        Self::new(central_mass, GRAVITATIONAL_CONSTANT, LIGHT_SPEED)
    }

    pub fn jupiter() -> Self {
        Self::with_central_mass(JUPITER_MASS).expect("bundled constants are positive")
    }

    pub fn central_mass(&self) -> f64 {
        self.central_mass
    }

    pub fn gravitational_constant(&self) -> f64 {
        self.gravitational_constant
    }

    pub fn light_speed(&self) -> f64 {
        self.light_speed
    }

    /// `R_G = 2γ_G M_o/c²`.
    pub fn schwarzschild_radius(&self) -> f64 {
        2.0 * self.gravitational_constant * self.central_mass
            / (self.light_speed * self.light_speed)
    }

    /// Action scale `J_G = McR_G` of an orbiter of mass `M`.
    pub fn gravitational_action(&self, orbiter_mass: f64) -> f64 {
        orbiter_mass * self.light_speed * self.schwarzschild_radius()
    }
}

/// Radius of the n-th rung of the ladder, `r_n = R_G·2^{1+2n/3}`.
pub fn orbit_radius(n: u32, system: &OrbitSystem) -> f64 {
    system.schwarzschild_radius() * 2f64.powf(1.0 + 2.0 * n as f64 / 3.0)
}

/// Continuous ladder index `3·log₂(J/J_G)` of an orbital action. The
/// quantization hypothesis asserts this is a nonnegative integer; the value
/// is returned as-is so the hypothesis can be evaluated, not imposed.
pub fn quantization_index(j_action: f64, system: &OrbitSystem, orbiter_mass: f64) -> Result<f64> {
    if j_action <= 0.0 || j_action.is_nan() {
        return Err(RotorError::NonPositive { quantity: "action" });
    }
    if orbiter_mass <= 0.0 || orbiter_mass.is_nan() {
        return Err(RotorError::NonPositive {
            quantity: "orbiter mass",
        });
    }
    Ok(3.0 * (j_action / system.gravitational_action(orbiter_mass)).log2())
}

/// Inverse of [`quantization_index`]: `J = J_G·2^{index/3}`.
pub fn action_from_index(index: f64, system: &OrbitSystem, orbiter_mass: f64) -> f64 {
    system.gravitational_action(orbiter_mass) * 2f64.powf(index / 3.0)
}

/// The continuous index with its nearest-integer reading.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuantizationReport {
    pub index: f64,
    pub nearest: i64,
    pub deviation: f64,
}

pub fn quantization_report(
    j_action: f64,
    system: &OrbitSystem,
    orbiter_mass: f64,
) -> Result<QuantizationReport> {
    let index = quantization_index(j_action, system, orbiter_mass)?;
    let nearest = index.round() as i64;
    Ok(QuantizationReport {
        index,
        nearest,
        deviation: index - nearest as f64,
    })
}

/// The ladder radius computed two ways: from the quantized action through
/// the circular-orbit relation `J = M√(γ_G M_o r)`, giving
/// `r = (J_G·2^{n/3})²/(M²γ_G M_o)`, and directly from the ladder formula.
/// The two agree identically (and independently of `M`) because
/// `γ_G M_o = c²R_G/2`.
pub fn kepler_consistency(n: u32, system: &OrbitSystem, orbiter_mass: f64) -> (f64, f64) {
    let action = action_from_index(n as f64, system, orbiter_mass);
    let mu = system.gravitational_constant() * system.central_mass();
    let r_from_action = action * action / (orbiter_mass * orbiter_mass * mu);
    (r_from_action, orbit_radius(n, system))
}

/// One comparison row: a named satellite, its ladder index, the observed
/// radius, the computed radius and their ratio.
#[derive(Debug, Clone, PartialEq)]
pub struct OrbitRow {
    pub name: &'static str,
    pub n: u32,
    pub r_obs: f64,
    pub r_n: f64,
    pub ratio: f64,
}

/// The Galilean-moon comparison table for the given central body
/// (Jupiter for the bundled observed radii).
pub fn table1(system: &OrbitSystem) -> Vec<OrbitRow> {
    GALILEAN_MOONS
        .iter()
        .map(|&(name, n, r_obs)| {
            let r_n = orbit_radius(n, system);
            OrbitRow {
                name,
                n,
                r_obs,
                r_n,
                ratio: r_obs / r_n,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn jupiter_schwarzschild_radius() {
        let r = OrbitSystem::jupiter().schwarzschild_radius();
        assert!((r - 2.82).abs() / 2.82 < 0.01, "R_G = {r}");
        assert_relative_eq!(r, 2.818843729569062, epsilon = 1e-12);
    }

    #[test]
    fn solar_schwarzschild_radius() {
        let sun = OrbitSystem::with_central_mass(1.989e30).unwrap();
        assert_relative_eq!(sun.schwarzschild_radius(), 2.954e3, max_relative = 1e-3);
    }

    #[test]
    fn rejects_nonpositive_mass() {
        assert_eq!(
            OrbitSystem::with_central_mass(0.0).unwrap_err(),
            RotorError::NonPositive {
                quantity: "central mass"
            }
        );
    }

    #[test]
    fn ladder_base_rung_is_twice_the_radius() {
        let jupiter = OrbitSystem::jupiter();
        assert_relative_eq!(
            orbit_radius(0, &jupiter),
            2.0 * jupiter.schwarzschild_radius(),
            epsilon = 1e-15
        );
    }

    #[test]
    fn ladder_progression_is_geometric() {
        let jupiter = OrbitSystem::jupiter();
        for n in [0, 5, 17, 39] {
            assert_relative_eq!(
                orbit_radius(n + 3, &jupiter) / orbit_radius(n, &jupiter),
                4.0,
                epsilon = 1e-12
            );
        }
    }

    #[test]
    fn index_of_gravitational_action_is_zero() {
        let jupiter = OrbitSystem::jupiter();
        let j_g = jupiter.gravitational_action(1.0e20);
        assert_eq!(quantization_index(j_g, &jupiter, 1.0e20).unwrap(), 0.0);
        assert_relative_eq!(
            quantization_index(j_g * 2f64.powi(13), &jupiter, 1.0e20).unwrap(),
            39.0,
            epsilon = 1e-12
        );
    }

    #[test]
    fn index_round_trip() {
        let jupiter = OrbitSystem::jupiter();
        let mass = 8.93e22;
        for n in 0..=60 {
            let action = action_from_index(n as f64, &jupiter, mass);
            let back = quantization_index(action, &jupiter, mass).unwrap();
            assert_relative_eq!(back, n as f64, epsilon = 1e-12, max_relative = 1e-12);
        }
    }

    #[test]
    fn quantization_report_flags_deviation() {
        let jupiter = OrbitSystem::jupiter();
        let mass = 1.0e20;
        let action = action_from_index(38.7, &jupiter, mass);
        let report = quantization_report(action, &jupiter, mass).unwrap();
        assert_eq!(report.nearest, 39);
        assert_relative_eq!(report.deviation, -0.3, epsilon = 1e-9);
    }

    #[test]
    fn kepler_route_matches_ladder_and_ignores_orbiter_mass() {
        let jupiter = OrbitSystem::jupiter();
        for n in [0, 7, 39, 60] {
            let (r_j, r_f) = kepler_consistency(n, &jupiter, 8.93e22);
            assert_relative_eq!(r_j, r_f, max_relative = 1e-12);
            let (r_heavy, _) = kepler_consistency(n, &jupiter, 8.93e25);
            assert_relative_eq!(r_j, r_heavy, max_relative = 1e-12);
        }
        let (r0, _) = kepler_consistency(0, &jupiter, 1.0);
        assert_relative_eq!(
            r0,
            2.0 * jupiter.schwarzschild_radius(),
            max_relative = 1e-12
        );
    }

    #[test]
    fn comparison_table_reproduces_published_rows() {
        let rows = table1(&OrbitSystem::jupiter());
        assert_eq!(rows.len(), 4);
        // Computed radii against the 4-significant-figure reference values.
        let reference = [378.5e6, 600.8e6, 953.7e6, 1514.0e6];
        let ratios = [1.11, 1.12, 1.12, 1.24];
        for ((row, &r_ref), &ratio_ref) in rows.iter().zip(&reference).zip(&ratios) {
            assert!(
                (row.r_n - r_ref).abs() / r_ref < 0.002,
                "{}: r_n = {} vs {}",
                row.name,
                row.r_n,
                r_ref
            );
            assert_relative_eq!(
                (row.ratio * 100.0).round() / 100.0,
                ratio_ref,
                epsilon = 1e-12
            );
            assert_relative_eq!(row.ratio, row.r_obs / row.r_n, epsilon = 1e-15);
        }
        assert_relative_eq!(rows[0].r_n, 378.3388e6, max_relative = 1e-4);
    }
}
