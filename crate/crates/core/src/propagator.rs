//! Free-particle propagator, the two-step propagator through a slit, and the
//! stationary-phase analysis of the slit-crossing time.
//!
//! Two-dimensional paths are reduced to scalar leg lengths: a path from the
//! source to a slit point and on to the screen is described by `L1`, `L2` and
//! the total duration `tau`. No transverse propagator is ever built.

use std::f64::consts::{FRAC_PI_4, PI};

use num_complex::Complex64;

use crate::error::{require_non_negative, require_positive, Error, Result};
use crate::kinematics::{ParticleSpecies, PhaseValue, HBAR};
use crate::quadrature::{gauss_kronrod_15, next_quadratic_level, PanelSum};

/// A point in one spatial dimension at one instant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpaceTimeEvent {
    pub position: f64,
    pub time: f64,
}

impl SpaceTimeEvent {
    pub fn new(position: f64, time: f64) -> Result<Self> {
        if !position.is_finite() || !time.is_finite() {
            return Err(Error::Domain(format!(
                "event coordinates must be finite, got ({position}, {time})"
            )));
        }
        Ok(Self { position, time })
    }
}

/// Physical meaning of a [`ComplexAmplitude`]'s scale.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AmplitudeUnit {
    /// Carries the propagator normalization (`m / (2 pi i hbar)` and its
    /// square roots), so the value has physical units.
    Propagator1d,
    /// Dimensionless: the normalization has been divided out.
    Relative,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexAmplitude {
    pub value: Complex64,
    pub unit: AmplitudeUnit,
}

impl ComplexAmplitude {
    pub fn new(value: Complex64, unit: AmplitudeUnit) -> Self {
        Self { value, unit }
    }

    pub fn magnitude(&self) -> f64 {
        self.value.norm()
    }

    /// Argument in `(-pi, pi]`.
    pub fn argument(&self) -> f64 {
        let arg = self.value.arg();
        if arg == -PI {
            PI
        } else {
            arg
        }
    }

    /// Divides out a normalization constant, yielding a relative amplitude.
    pub fn relative_to(&self, normalization: Complex64) -> ComplexAmplitude {
        ComplexAmplitude::new(self.value / normalization, AmplitudeUnit::Relative)
    }
}

/// Source-to-slit and slit-to-screen leg lengths with the total duration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoLegPath {
    source_leg: f64,
    screen_leg: f64,
    duration: f64,
}

impl TwoLegPath {
    pub fn new(source_leg: f64, screen_leg: f64, duration: f64) -> Result<Self> {
        require_positive(source_leg, "source-to-slit length L1")?;
        require_positive(screen_leg, "slit-to-screen length L2")?;
        require_positive(duration, "path duration tau")?;
        Ok(Self { source_leg, screen_leg, duration })
    }

    /// Symmetric path with both legs of length `leg`.
    pub fn symmetric(leg: f64, duration: f64) -> Result<Self> {
        Self::new(leg, leg, duration)
    }

    pub fn source_leg(&self) -> f64 {
        self.source_leg
    }

    pub fn screen_leg(&self) -> f64 {
        self.screen_leg
    }

    pub fn duration(&self) -> f64 {
        self.duration
    }

    pub fn total_length(&self) -> f64 {
        self.source_leg + self.screen_leg
    }

    fn check_slit_time(&self, t_slit: f64) -> Result<()> {
        if t_slit > 0.0 && t_slit < self.duration {
            Ok(())
        } else {
            Err(Error::Domain(format!(
                "slit time {t_slit} s must lie strictly inside (0, {}) s",
                self.duration
            )))
        }
    }
}

/// `sqrt(m / (2 pi i hbar dt)) * exp(i m dx^2 / (2 hbar dt))`, principal root.
pub(crate) fn propagator_value(dx: f64, dt: f64, mass: f64) -> Complex64 {
    let radicand = Complex64::new(0.0, -mass / (2.0 * PI * HBAR * dt));
    radicand.sqrt() * Complex64::from_polar(1.0, mass * dx * dx / (2.0 * HBAR * dt))
}

/// Free-particle propagator `K(b; a)` in one dimension.
pub fn free_propagator(
    a: SpaceTimeEvent,
    b: SpaceTimeEvent,
    species: ParticleSpecies,
) -> Result<ComplexAmplitude> {
    let dt = b.time - a.time;
    if !(dt > 0.0) {
        return Err(Error::Causality { start: a.time, end: b.time });
    }
    let value = propagator_value(b.position - a.position, dt, species.mass());
    Ok(ComplexAmplitude::new(value, AmplitudeUnit::Propagator1d))
}

/// Classical action over `hbar` for uniform motion: `m L^2 / (2 hbar dt)`.
pub fn path_phase(length: f64, duration: f64, species: ParticleSpecies) -> Result<PhaseValue> {
    require_positive(duration, "duration")?;
    require_non_negative(length, "path length")?;
    Ok(PhaseValue::new(species.mass() * length * length / (2.0 * HBAR * duration)))
}

/// `K(screen; slit) * K(slit; source)` for a slit crossing at `t_slit`.
pub fn two_step_amplitude(
    path: TwoLegPath,
    t_slit: f64,
    species: ParticleSpecies,
) -> Result<ComplexAmplitude> {
    path.check_slit_time(t_slit)?;
    let m = species.mass();
    let first = propagator_value(path.source_leg, t_slit, m);
    let second = propagator_value(path.screen_leg, path.duration - t_slit, m);
    Ok(ComplexAmplitude::new(first * second, AmplitudeUnit::Propagator1d))
}

/// Phase of a path crossing the slit at `t_slit`.
pub fn slit_phase(path: TwoLegPath, t_slit: f64, species: ParticleSpecies) -> Result<PhaseValue> {
    path.check_slit_time(t_slit)?;
    let rest = path.duration - t_slit;
    let raw = species.mass() / (2.0 * HBAR)
        * (path.source_leg * path.source_leg / t_slit + path.screen_leg * path.screen_leg / rest);
    Ok(PhaseValue::new(raw))
}

/// `d(slit phase)/d t_slit`, zero where the two leg velocities are equal.
pub fn slit_phase_rate(path: TwoLegPath, t_slit: f64, species: ParticleSpecies) -> Result<f64> {
    path.check_slit_time(t_slit)?;
    let rest = path.duration - t_slit;
    let v1 = path.source_leg / t_slit;
    let v2 = path.screen_leg / rest;
    Ok(species.mass() / (2.0 * HBAR) * (v2 - v1) * (v2 + v1))
}

/// `d^2(slit phase)/d t_slit^2`; positive everywhere on the open interval.
pub fn slit_phase_curvature(path: TwoLegPath, t_slit: f64, species: ParticleSpecies) -> Result<f64> {
    path.check_slit_time(t_slit)?;
    let rest = path.duration - t_slit;
    Ok(species.mass() / HBAR
        * (path.source_leg.powi(2) / t_slit.powi(3) + path.screen_leg.powi(2) / rest.powi(3)))
}

/// Slit-crossing time with equal leg velocities, `tau L1 / (L1 + L2)`.
pub fn stationary_slit_time(path: TwoLegPath) -> f64 {
    path.duration * path.source_leg / path.total_length()
}

/// Slit phase at the stationary time: `m (L1 + L2)^2 / (2 hbar tau)`.
pub fn stationary_phase(path: TwoLegPath, species: ParticleSpecies) -> PhaseValue {
    let total = path.total_length();
    PhaseValue::new(species.mass() * total * total / (2.0 * HBAR * path.duration))
}

/// Position integral of `K(b; x, t_mid) K(x, t_mid; a)` over `x`.
///
/// The window spans `fresnel_zones` zones on each side of the classical
/// crossing point (where the quadratic phase has grown by `pi` per zone).
/// Beyond the window the integrand is replaced by its leading endpoint
/// term `i f(X) / |psi'(X)|`.
pub fn composed_propagator(
    a: SpaceTimeEvent,
    b: SpaceTimeEvent,
    t_mid: f64,
    fresnel_zones: f64,
    species: ParticleSpecies,
) -> Result<ComplexAmplitude> {
    if !(t_mid > a.time && t_mid < b.time) {
        return Err(Error::Domain(format!(
            "intermediate time {t_mid} s must lie strictly between {} and {} s",
            a.time, b.time
        )));
    }
    require_positive(fresnel_zones, "number of Fresnel zones")?;
    let m = species.mass();
    let t1 = t_mid - a.time;
    let t2 = b.time - t_mid;
    let center = a.position + (b.position - a.position) * t1 / (t1 + t2);
    // phase about the classical point: curvature * y^2
    let curvature = m / (2.0 * HBAR) * (1.0 / t1 + 1.0 / t2);
    let half_width = (fresnel_zones * PI / curvature).sqrt();

    let integrand = |y: f64| {
        let x = center + y;
        propagator_value(x - a.position, t1, m) * propagator_value(b.position - x, t2, m)
    };

    let mut sum = PanelSum::default();
    for side in [1.0, -1.0] {
        let mut lo = 0.0;
        while lo < half_width {
            let hi = next_quadratic_level(lo, curvature, FRAC_PI_4, f64::INFINITY, half_width);
            let (p, q) = if side > 0.0 { (lo, hi) } else { (-hi, -lo) };
            sum.add(gauss_kronrod_15(&integrand, p, q));
            lo = hi;
        }
    }
    let slope = 2.0 * curvature * half_width;
    let tails = (integrand(half_width) + integrand(-half_width)) * Complex64::i() / slope;
    Ok(ComplexAmplitude::new(sum.value + tails, AmplitudeUnit::Propagator1d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kinematics::{de_broglie_wavelength, matter_phase, ELECTRON_MASS, PLANCK};
    use approx::assert_relative_eq;

    const E: ParticleSpecies = ParticleSpecies::ELECTRON;
    const L: f64 = 3.37e-6;

    fn event(x: f64, t: f64) -> SpaceTimeEvent {
        SpaceTimeEvent::new(x, t).unwrap()
    }

    #[test]
    fn zero_displacement_has_minus_quarter_pi_argument() {
        let k = free_propagator(event(0.0, 0.0), event(0.0, 1e-13), E).unwrap();
        assert_relative_eq!(k.argument(), -FRAC_PI_4, max_relative = 1e-14);
        assert_eq!(k.unit, AmplitudeUnit::Propagator1d);
    }

    #[test]
    fn exponent_phase_matches_matter_phase() {
        let dt = 3.37e-13;
        let phase = ELECTRON_MASS * L * L / (2.0 * HBAR * dt);
        assert_relative_eq!(phase, 1.4556e5, max_relative = 1e-4);
        let lambda = de_broglie_wavelength(E, L / dt).unwrap();
        assert_relative_eq!(phase, matter_phase(L, lambda).unwrap().raw(), max_relative = 1e-9);
        // the propagator's argument is that phase minus pi/4, modulo 2 pi
        let k = free_propagator(event(0.0, 0.0), event(L, dt), E).unwrap();
        let expected = PhaseValue::new(phase - FRAC_PI_4).principal();
        assert!((k.argument() - expected).abs() < 1e-9);
    }

    #[test]
    fn causality_is_enforced() {
        let r = free_propagator(event(0.0, 1.0), event(1.0, 1.0), E);
        assert!(matches!(r, Err(Error::Causality { .. })));
        assert!(free_propagator(event(0.0, 2.0), event(1.0, 1.0), E).is_err());
        assert!(SpaceTimeEvent::new(f64::NAN, 0.0).is_err());
    }

    #[test]
    fn magnitude_ignores_displacement() {
        let dt = 2.5e-13;
        let m0 = free_propagator(event(0.0, 0.0), event(0.0, dt), E).unwrap().magnitude();
        for dx in [1e-9, 3.3e-7, 4.1e-6, 1e-3] {
            let m = free_propagator(event(0.0, 0.0), event(dx, dt), E).unwrap().magnitude();
            assert_relative_eq!(m, m0, max_relative = 1e-14);
        }
    }

    #[test]
    fn path_phase_examples() {
        let dt = 6.74e-13;
        assert_eq!(path_phase(0.0, dt, E).unwrap().raw(), 0.0);
        let p = path_phase(L, dt, E).unwrap().raw();
        let lambda = PLANCK * dt / (ELECTRON_MASS * L);
        // h and 2 pi hbar agree to the ten digits of the published hbar
        assert_relative_eq!(p, matter_phase(L, lambda).unwrap().raw(), max_relative = 1e-9);
        assert_relative_eq!(path_phase(L, 2.0 * dt, E).unwrap().raw(), p / 2.0, max_relative = 1e-15);
        assert!(path_phase(L, 0.0, E).is_err());
    }

    #[test]
    fn two_step_magnitude_and_symmetry() {
        let tau = 6.72e-13;
        let path = TwoLegPath::new(L, 1.3 * L, tau).unwrap();
        let t = 0.37 * tau;
        let k = two_step_amplitude(path, t, E).unwrap();
        let expected = ELECTRON_MASS / (2.0 * PI * HBAR) / (t * (tau - t)).sqrt();
        assert_relative_eq!(k.magnitude(), expected, max_relative = 1e-13);

        let mirrored = TwoLegPath::new(1.3 * L, L, tau).unwrap();
        let km = two_step_amplitude(mirrored, tau - t, E).unwrap();
        assert!((k.argument() - km.argument()).abs() < 1e-9);
        assert!(two_step_amplitude(path, 0.0, E).is_err());
        assert!(two_step_amplitude(path, tau, E).is_err());
    }

    #[test]
    fn two_step_argument_is_slit_phase_minus_half_pi() {
        let tau = 6.72e-13;
        let path = TwoLegPath::symmetric(L, tau).unwrap();
        let k = two_step_amplitude(path, tau / 2.0, E).unwrap();
        let phase = slit_phase(path, tau / 2.0, E).unwrap();
        assert_relative_eq!(
            phase.raw(),
            2.0 * ELECTRON_MASS * L * L / (HBAR * tau),
            max_relative = 1e-14
        );
        // two factors of exp(-i pi/4)
        let expected = PhaseValue::new(phase.raw() - 2.0 * FRAC_PI_4).principal();
        assert!((k.argument() - expected).abs() < 1e-9);
    }

    #[test]
    fn slit_phase_has_poles_at_the_endpoints() {
        let tau = 1e-12;
        let path = TwoLegPath::new(L, 0.5 * L, tau).unwrap();
        let mid = slit_phase(path, 0.5 * tau, E).unwrap().raw();
        assert!(slit_phase(path, 1e-9 * tau, E).unwrap().raw() > 1e6 * mid);
        assert!(slit_phase(path, tau * (1.0 - 1e-9), E).unwrap().raw() > 1e6 * mid);
    }

    #[test]
    fn stationary_time_examples() {
        let tau = 6.0e-13;
        let sym = TwoLegPath::symmetric(L, tau).unwrap();
        assert_relative_eq!(stationary_slit_time(sym), tau / 2.0);
        let skew = TwoLegPath::new(2.0 * L, L, tau).unwrap();
        assert_relative_eq!(stationary_slit_time(skew), 2.0 * tau / 3.0, max_relative = 1e-15);
    }

    #[test]
    fn stationary_phase_is_the_minimum_of_the_slit_phase() {
        let tau = 6.0e-13;
        let path = TwoLegPath::new(L, 0.7 * L, tau).unwrap();
        let star = stationary_phase(path, E).raw();
        let grid_min = (1..100_000)
            .map(|k| slit_phase(path, tau * f64::from(k) / 100_000.0, E).unwrap().raw())
            .fold(f64::INFINITY, f64::min);
        assert!(grid_min >= star * (1.0 - 1e-14));
        assert_relative_eq!(grid_min, star, max_relative = 1e-7);

        let t = stationary_slit_time(path);
        let split = path_phase(L, t, E).unwrap().raw() + path_phase(0.7 * L, tau - t, E).unwrap().raw();
        assert_relative_eq!(split, star, max_relative = 1e-14);
        assert_relative_eq!(slit_phase(path, t, E).unwrap().raw(), star, max_relative = 1e-14);
    }

    #[test]
    fn symmetric_stationary_phase_matches_closed_form_phi0() {
        let t_beta = 6.72e-13;
        let path = TwoLegPath::symmetric(L, t_beta).unwrap();
        let phi0 = 2.0 * ELECTRON_MASS * L * L / (HBAR * t_beta);
        assert_relative_eq!(stationary_phase(path, E).raw(), phi0, max_relative = 1e-15);
        let lambda = de_broglie_wavelength(E, 2.0 * L / t_beta).unwrap();
        assert_relative_eq!(
            stationary_phase(path, E).raw(),
            matter_phase(2.0 * L, lambda).unwrap().raw(),
            max_relative = 1e-9
        );
    }

    #[test]
    fn rate_matches_finite_differences() {
        let tau = 6.0e-13;
        let path = TwoLegPath::new(L, 1.4 * L, tau).unwrap();
        for frac in [0.2, 0.45, 0.8] {
            let t = frac * tau;
            let h = tau * 1e-7;
            let fd = (slit_phase(path, t + h, E).unwrap().raw()
                - slit_phase(path, t - h, E).unwrap().raw())
                / (2.0 * h);
            assert_relative_eq!(slit_phase_rate(path, t, E).unwrap(), fd, max_relative = 1e-5);
        }
    }
}
