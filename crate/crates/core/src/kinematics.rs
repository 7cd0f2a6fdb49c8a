//! Physical constants and the closed-form phase and wavelength relations for
//! free matter waves.
//!
//! Two single-path phases appear throughout the crate. The *matter* phase
//! `pi L / lambda` is what the free-particle action accumulates along a path of
//! length `L`; the *optical* phase `2 pi L / lambda` is what counting
//! wavefronts gives. Phase differences between paths of equal duration agree
//! to first order in the path-length difference even though single-path
//! phases differ by a factor of two.

use std::f64::consts::{PI, TAU};

use crate::error::{require_non_negative, require_positive, Error, Result};

/// Reduced Planck constant, J s (CODATA 2018).
pub const HBAR: f64 = 1.054_571_817e-34;
/// Planck constant, J s (CODATA 2018, exact).
pub const PLANCK: f64 = 6.626_070_15e-34;
/// Electron rest mass, kg (CODATA 2018).
pub const ELECTRON_MASS: f64 = 9.109_383_701_5e-31;
/// Proton rest mass, kg (CODATA 2018).
pub const PROTON_MASS: f64 = 1.672_621_923_69e-27;
/// Neutron rest mass, kg (CODATA 2018).
pub const NEUTRON_MASS: f64 = 1.674_927_498_04e-27;

/// A non-relativistic massive particle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParticleSpecies {
    mass: f64,
}

impl ParticleSpecies {
    pub const ELECTRON: ParticleSpecies = ParticleSpecies { mass: ELECTRON_MASS };
    pub const PROTON: ParticleSpecies = ParticleSpecies { mass: PROTON_MASS };
    pub const NEUTRON: ParticleSpecies = ParticleSpecies { mass: NEUTRON_MASS };

    pub fn new(mass: f64) -> Result<Self> {
        require_positive(mass, "particle mass")?;
        Ok(Self { mass })
    }

    /// Looks up one of the built-in species by lowercase name.
    pub fn by_name(name: &str) -> Option<Self> {
        match name {
            "electron" => Some(Self::ELECTRON),
            "proton" => Some(Self::PROTON),
            "neutron" => Some(Self::NEUTRON),
            _ => None,
        }
    }

    /// Mass in kg.
    pub fn mass(&self) -> f64 {
        self.mass
    }
}

/// A phase in radians, kept both as accumulated and as principal value.
///
/// The raw value is what the formulas produce (it can be ~1e5 rad for a
/// micrometre path); the principal value lies in `(-pi, pi]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseValue {
    raw: f64,
    principal: f64,
}

impl PhaseValue {
    pub fn new(raw: f64) -> Self {
        Self { raw, principal: principal_value(raw) }
    }

    pub fn raw(&self) -> f64 {
        self.raw
    }

    pub fn principal(&self) -> f64 {
        self.principal
    }
}

impl From<f64> for PhaseValue {
    fn from(raw: f64) -> Self {
        PhaseValue::new(raw)
    }
}

/// Reduces an angle into `(-pi, pi]`.
pub fn principal_value(angle: f64) -> f64 {
    let reduced = (angle + PI).rem_euclid(TAU) - PI;
    if reduced <= -PI {
        reduced + TAU
    } else {
        reduced
    }
}

/// de Broglie wavelength `h / (m v)`.
pub fn de_broglie_wavelength(species: ParticleSpecies, speed: f64) -> Result<f64> {
    require_positive(speed, "speed")?;
    Ok(PLANCK / (species.mass() * speed))
}

/// Speed whose de Broglie wavelength is `wavelength`.
pub fn speed_for_wavelength(species: ParticleSpecies, wavelength: f64) -> Result<f64> {
    require_positive(wavelength, "wavelength")?;
    Ok(PLANCK / (species.mass() * wavelength))
}

/// Phase accumulated by a free matter wave over `length`: `pi L / lambda`.
pub fn matter_phase(length: f64, wavelength: f64) -> Result<PhaseValue> {
    require_positive(wavelength, "wavelength")?;
    require_non_negative(length, "path length")?;
    Ok(PhaseValue::new(PI * length / wavelength))
}

/// Wavefront-counting phase `2 pi L / lambda`, correct for light.
pub fn optical_phase(length: f64, wavelength: f64) -> Result<PhaseValue> {
    require_positive(wavelength, "wavelength")?;
    require_non_negative(length, "path length")?;
    Ok(PhaseValue::new(TAU * length / wavelength))
}

/// Phase difference obtained by assigning both paths the same wavelength.
///
/// This is physically wrong (it is half the observed difference) and is kept
/// to demonstrate exactly that.
pub fn naive_equal_velocity_phase_diff(
    length_a: f64,
    length_b: f64,
    wavelength: f64,
) -> Result<PhaseValue> {
    require_positive(wavelength, "wavelength")?;
    Ok(PhaseValue::new(PI * (length_b - length_a) / wavelength))
}

/// First-order wavelength of a path `delta_l` longer than one of length
/// `length_a` and wavelength `lambda_a`, for equal durations.
pub fn expanded_wavelength(lambda_a: f64, length_a: f64, delta_l: f64) -> Result<f64> {
    require_positive(lambda_a, "wavelength")?;
    require_positive(length_a, "reference path length")?;
    if !(delta_l.abs() < length_a) {
        return Err(Error::Domain(format!(
            "|delta L| = {} must be smaller than the reference length {length_a} for the expansion",
            delta_l.abs()
        )));
    }
    Ok(lambda_a * (1.0 - delta_l / length_a))
}

/// Exact and first-order phase difference between two paths of equal duration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoPathPhase {
    /// `m (L_B^2 - L_A^2) / (2 hbar dt)`.
    pub exact: PhaseValue,
    /// `2 pi (L_B - L_A) / lambda_A` with `lambda_A = h dt / (m L_A)`.
    pub first_order: PhaseValue,
}

pub fn two_path_phase_difference(
    length_a: f64,
    length_b: f64,
    duration: f64,
    species: ParticleSpecies,
) -> Result<TwoPathPhase> {
    require_positive(duration, "duration")?;
    require_positive(length_a, "path length L_A")?;
    require_positive(length_b, "path length L_B")?;
    let m = species.mass();
    // (L_B^2 - L_A^2) factored to avoid cancellation for nearly equal paths.
    let exact = m * (length_b - length_a) * (length_b + length_a) / (2.0 * HBAR * duration);
    let lambda_a = PLANCK * duration / (m * length_a);
    let first_order = TAU * (length_b - length_a) / lambda_a;
    Ok(TwoPathPhase {
        exact: PhaseValue::new(exact),
        first_order: PhaseValue::new(first_order),
    })
}

/// Far-field angle of diffraction order `order`: `arcsin(n lambda / d)`.
pub fn far_field_maxima(separation: f64, wavelength: f64, order: i32) -> Result<f64> {
    require_positive(separation, "slit separation")?;
    require_positive(wavelength, "wavelength")?;
    let ratio = f64::from(order) * wavelength / separation;
    if ratio.abs() > 1.0 {
        return Err(Error::NoSuchOrder { order, ratio });
    }
    Ok(ratio.asin())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    const L: f64 = 3.37e-6;
    const D: f64 = 2.73e-7;

    #[test]
    fn electron_wavelength_at_ten_million() {
        let lambda = de_broglie_wavelength(ParticleSpecies::ELECTRON, 1.0e7).unwrap();
        assert_relative_eq!(lambda, 7.2739e-11, max_relative = 1e-4);
        let half = de_broglie_wavelength(ParticleSpecies::ELECTRON, 2.0e7).unwrap();
        assert_relative_eq!(half, lambda / 2.0, max_relative = 1e-15);
        let unit_speed = PLANCK / ELECTRON_MASS;
        let one = de_broglie_wavelength(ParticleSpecies::ELECTRON, unit_speed).unwrap();
        assert_relative_eq!(one, 1.0, max_relative = 1e-15);
    }

    #[test]
    fn speed_must_be_positive() {
        assert!(matches!(
            de_broglie_wavelength(ParticleSpecies::ELECTRON, 0.0),
            Err(Error::Domain(_))
        ));
        assert!(de_broglie_wavelength(ParticleSpecies::ELECTRON, -3.0).is_err());
        assert!(ParticleSpecies::new(0.0).is_err());
    }

    #[test]
    fn matter_and_optical_phase_examples() {
        let lambda = 7.2739e-11;
        assert_eq!(matter_phase(0.0, lambda).unwrap().raw(), 0.0);
        assert_relative_eq!(matter_phase(lambda, lambda).unwrap().raw(), PI);
        assert_relative_eq!(optical_phase(lambda, lambda).unwrap().raw(), TAU);
        assert_relative_eq!(matter_phase(L, lambda).unwrap().raw(), 1.4556e5, max_relative = 1e-4);
        assert!(matter_phase(L, 0.0).is_err());
        assert!(optical_phase(-1.0, lambda).is_err());
    }

    #[test]
    fn matter_phase_matches_action_form() {
        // m L^2 / (2 hbar dt) with dt = L / v
        let v = 1.0e7;
        let lambda = de_broglie_wavelength(ParticleSpecies::ELECTRON, v).unwrap();
        let action = ELECTRON_MASS * L * L / (2.0 * HBAR * (L / v));
        assert_relative_eq!(matter_phase(L, lambda).unwrap().raw(), action, max_relative = 1e-9);
    }

    #[test]
    fn optical_phase_reproduces_the_intuitive_near_field_difference() {
        let lambda = 7.2739e-11;
        let path_difference = 2.0 * ((L * L + D * D).sqrt() - L);
        let optical = optical_phase(path_difference, lambda).unwrap().raw();
        // closed form 2 m d^2 / (hbar dt) - m d^4 / (2 hbar dt L^2) with v = 2L/dt
        let v = speed_for_wavelength(ParticleSpecies::ELECTRON, lambda).unwrap();
        let dt = 2.0 * L / v;
        let m = ELECTRON_MASS;
        let expanded = 2.0 * m * D * D / (HBAR * dt) - m * D.powi(4) / (2.0 * HBAR * dt * L * L);
        // the next term of the expansion is ~ d^6 / L^5 relative to the leading one
        assert_relative_eq!(optical, expanded, max_relative = 1e-5);
    }

    #[test]
    fn naive_difference_examples() {
        let lambda = 5.0e-11;
        assert_eq!(naive_equal_velocity_phase_diff(L, L, lambda).unwrap().raw(), 0.0);
        assert_relative_eq!(
            naive_equal_velocity_phase_diff(L, L + lambda, lambda).unwrap().raw(),
            PI,
            max_relative = 1e-9
        );
        assert!(naive_equal_velocity_phase_diff(L, L, 0.0).is_err());
    }

    #[test]
    fn expanded_wavelength_examples() {
        let lambda = 7.0e-11;
        assert_eq!(expanded_wavelength(lambda, L, 0.0).unwrap(), lambda);
        assert_relative_eq!(expanded_wavelength(lambda, L, L / 100.0).unwrap(), 0.99 * lambda);
        assert!(expanded_wavelength(lambda, L, L).is_err());
        assert!(expanded_wavelength(lambda, L, -1.5 * L).is_err());
    }

    #[test]
    fn expanded_wavelength_error_is_second_order() {
        let dt = 6.74e-13;
        let m = ELECTRON_MASS;
        let lambda_a = PLANCK * dt / (m * L);
        for k in 0..20 {
            let eps = 10f64.powf(-4.0 + 2.0 * f64::from(k) / 19.0);
            let exact = PLANCK * dt / (m * (L + eps * L));
            let approx = expanded_wavelength(lambda_a, L, eps * L).unwrap();
            let ratio = (exact - approx).abs() / (lambda_a * eps * eps);
            // exact - expanded = lambda_a eps^2 / (1 + eps)
            assert!(ratio > 0.98 && ratio < 1.0 + 1e-6, "eps={eps} ratio={ratio}");
        }
    }

    #[test]
    fn two_path_difference_examples() {
        let dt = 6.74e-13;
        let same = two_path_phase_difference(L, L, dt, ParticleSpecies::ELECTRON).unwrap();
        assert_eq!(same.exact.raw(), 0.0);
        assert_eq!(same.first_order.raw(), 0.0);

        let la = 2.0 * L;
        let lb = 2.0 * (L * L + D * D).sqrt();
        let fig = two_path_phase_difference(la, lb, dt, ParticleSpecies::ELECTRON).unwrap();
        assert_relative_eq!(fig.exact.raw(), 1910.1, max_relative = 1e-3);
        assert_relative_eq!(fig.exact.raw(), 304.0 * TAU, max_relative = 1e-3);
        assert!(two_path_phase_difference(la, lb, 0.0, ParticleSpecies::ELECTRON).is_err());
    }

    #[test]
    fn first_order_is_twice_the_naive_value() {
        let dt = 1.0e-13;
        let lb = L * 1.001;
        let two = two_path_phase_difference(L, lb, dt, ParticleSpecies::ELECTRON).unwrap();
        let lambda_a = PLANCK * dt / (ELECTRON_MASS * L);
        let naive = naive_equal_velocity_phase_diff(L, lb, lambda_a).unwrap();
        assert_relative_eq!(two.first_order.raw(), 2.0 * naive.raw(), max_relative = 1e-14);
    }

    #[test]
    fn far_field_examples() {
        assert_eq!(far_field_maxima(1e-6, 1e-9, 0).unwrap(), 0.0);
        assert_relative_eq!(far_field_maxima(2.0, 1.0, 1).unwrap(), PI / 6.0, max_relative = 1e-14);
        assert_relative_eq!(
            far_field_maxima(273e-9, 7.2739e-11, 1).unwrap(),
            2.6644e-4,
            max_relative = 1e-4
        );
        assert!(matches!(
            far_field_maxima(1.0, 0.6, 2),
            Err(Error::NoSuchOrder { order: 2, .. })
        ));
        assert!(far_field_maxima(1.0, 0.6, -2).is_err());
    }

    #[test]
    fn principal_value_edges() {
        assert_eq!(principal_value(PI), PI);
        assert_eq!(principal_value(-PI), PI);
        assert!((principal_value(3.0 * PI) - PI).abs() < 1e-12);
        assert!((principal_value(-0.5) + 0.5).abs() < 1e-15);
        assert_eq!(principal_value(0.0), 0.0);
    }

    #[test]
    fn species_lookup() {
        assert_eq!(ParticleSpecies::by_name("electron"), Some(ParticleSpecies::ELECTRON));
        assert_eq!(ParticleSpecies::by_name("muon"), None);
    }
}
