//! Non-spreading Gaussian wave packet
//! `psi(x, t) = exp(i (k0 x - w0 t)) exp(-(dk^2 / 2) (x - hbar k0 t / m)^2)`.
//!
//! The envelope travels at the group velocity `hbar k0 / m` and the carrier at
//! the phase velocity `hbar k0 / 2m`, so after the packet has covered a
//! distance `L` its carrier has advanced by only `k0 L / 2`.

use num_complex::Complex64;

use crate::error::{require_non_negative, require_positive, Error, Result};
use crate::kinematics::{ParticleSpecies, PhaseValue, HBAR};

/// Carrier wavenumber and momentum width, in rad/m.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WavePacketParams {
    k0: f64,
    delta_k: f64,
    species: ParticleSpecies,
}

/// Widths at or above `k0 / 5` are rejected.
pub const MAX_RELATIVE_WIDTH: f64 = 0.2;

impl WavePacketParams {
    pub fn new(k0: f64, delta_k: f64, species: ParticleSpecies) -> Result<Self> {
        require_positive(k0, "carrier wavenumber k0")?;
        require_positive(delta_k, "momentum width delta_k")?;
        if delta_k >= MAX_RELATIVE_WIDTH * k0 {
            return Err(Error::Domain(format!(
                "momentum width {delta_k} rad/m must be below k0/5 = {} rad/m",
                MAX_RELATIVE_WIDTH * k0
            )));
        }
        Ok(WavePacketParams { k0, delta_k, species })
    }

    /// Packet whose envelope moves at `speed`, with `delta_k = relative_width * k0`.
    pub fn from_speed(species: ParticleSpecies, speed: f64, relative_width: f64) -> Result<Self> {
        require_positive(speed, "speed")?;
        let k0 = species.mass() * speed / HBAR;
        Self::new(k0, relative_width * k0, species)
    }

    pub fn k0(&self) -> f64 {
        self.k0
    }

    pub fn delta_k(&self) -> f64 {
        self.delta_k
    }

    pub fn species(&self) -> ParticleSpecies {
        self.species
    }

    /// `hbar k0^2 / 2m`.
    pub fn angular_frequency(&self) -> f64 {
        HBAR * self.k0 * self.k0 / (2.0 * self.species.mass())
    }

    /// `m / (hbar dk^2)`, the time over which the dropped dispersion phase
    /// reaches order one.
    pub fn spreading_time(&self) -> f64 {
        self.species.mass() / (HBAR * self.delta_k * self.delta_k)
    }
}

pub fn group_velocity(params: WavePacketParams) -> f64 {
    HBAR * params.k0 / params.species.mass()
}

pub fn phase_velocity(params: WavePacketParams) -> f64 {
    HBAR * params.k0 / (2.0 * params.species.mass())
}

/// Packet value at `(x, t)`, with unit amplitude at the envelope peak.
pub fn packet_amplitude(params: WavePacketParams, x: f64, t: f64) -> Result<Complex64> {
    if !x.is_finite() || !t.is_finite() {
        return Err(Error::Domain(format!("packet needs finite x and t, got ({x}, {t})")));
    }
    let limit = params.spreading_time();
    if t.abs() > limit {
        return Err(Error::Validity(format!(
            "t = {t:e} s exceeds the spreading time {limit:e} s of the non-dispersive packet"
        )));
    }
    let offset = x - group_velocity(params) * t;
    let envelope = (-0.5 * (params.delta_k * offset).powi(2)).exp();
    let carrier = params.k0 * x - params.angular_frequency() * t;
    Ok(Complex64::from_polar(envelope, carrier))
}

/// Envelope magnitude `exp(-(dk^2/2)(x - v_g t)^2)`.
pub fn packet_envelope(params: WavePacketParams, x: f64, t: f64) -> Result<f64> {
    packet_amplitude(params, x, t).map(|psi| psi.norm())
}

/// Carrier phase accrued while the envelope travels `distance`:
/// `k0 L - w0 dt` with `dt = L m / (hbar k0)`.
pub fn packet_carrier_phase(params: WavePacketParams, distance: f64) -> Result<PhaseValue> {
    require_non_negative(distance, "distance")?;
    let travel_time = distance / group_velocity(params);
    Ok(PhaseValue::new(params.k0 * distance - params.angular_frequency() * travel_time))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kinematics::{matter_phase, ELECTRON_MASS};
    use crate::propagator::path_phase;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    fn electron_packet() -> WavePacketParams {
        WavePacketParams::from_speed(ParticleSpecies::ELECTRON, 1e7, 0.05).unwrap()
    }

    #[test]
    fn velocities_at_ten_million() {
        let p = electron_packet();
        assert_relative_eq!(p.k0(), 8.638e10, max_relative = 1e-4);
        assert_relative_eq!(group_velocity(p), 1e7, max_relative = 1e-14);
        assert_relative_eq!(phase_velocity(p), 5e6, max_relative = 1e-14);
        assert_eq!(group_velocity(p), 2.0 * phase_velocity(p));
    }

    #[test]
    fn origin_and_peak() {
        let p = electron_packet();
        assert_eq!(packet_amplitude(p, 0.0, 0.0).unwrap(), Complex64::new(1.0, 0.0));
        let t = 3e-17;
        let peak = group_velocity(p) * t;
        assert_relative_eq!(packet_envelope(p, peak, t).unwrap(), 1.0, max_relative = 1e-15);
        assert!(packet_envelope(p, peak + 1e-10, t).unwrap() < 1.0);
    }

    #[test]
    fn width_limits() {
        let e = ParticleSpecies::ELECTRON;
        assert!(WavePacketParams::new(1e10, 2e9, e).is_err());
        assert!(WavePacketParams::new(1e10, 1.9e9, e).is_ok());
        assert!(WavePacketParams::new(0.0, 1.0, e).is_err());
        assert!(WavePacketParams::new(1e10, 0.0, e).is_err());
    }

    #[test]
    fn spreading_time_gates_validity() {
        let p = electron_packet();
        let limit = ELECTRON_MASS / (HBAR * p.delta_k().powi(2));
        assert_relative_eq!(p.spreading_time(), limit);
        assert!(packet_amplitude(p, 0.0, 0.99 * limit).is_ok());
        assert!(matches!(packet_amplitude(p, 0.0, 1.01 * limit), Err(Error::Validity(_))));
        assert!(matches!(packet_amplitude(p, 0.0, -1.01 * limit), Err(Error::Validity(_))));
    }

    #[test]
    fn carrier_phase_examples() {
        let p = electron_packet();
        assert_eq!(packet_carrier_phase(p, 0.0).unwrap().raw(), 0.0);
        let wavelength = 2.0 * PI / p.k0();
        assert_relative_eq!(packet_carrier_phase(p, wavelength).unwrap().raw(), PI, max_relative = 1e-14);
        assert!(packet_carrier_phase(p, -1.0).is_err());
        for distance in [1e-9, 3.37e-6, 6.74e-6, 1e-3] {
            let phase = packet_carrier_phase(p, distance).unwrap().raw();
            let duration = distance * ELECTRON_MASS / (HBAR * p.k0());
            let via_path = path_phase(distance, duration, ParticleSpecies::ELECTRON).unwrap().raw();
            assert_relative_eq!(phase, via_path, max_relative = 1e-13);
            assert_relative_eq!(phase, matter_phase(distance, wavelength).unwrap().raw(), max_relative = 1e-13);
        }
    }
}
