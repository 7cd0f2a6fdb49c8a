//! Parameter sets for the convergence study, the near-field pattern, a
//! far-field pattern and the wave-packet snapshots.

use std::f64::consts::PI;

use crate::doubleslit::{fringe_spacing, screen_grid, Method, SlitGeometry, Timing};
use crate::kinematics::{ParticleSpecies, HBAR};
use crate::propagator::TwoLegPath;
use crate::timesum::{QuadratureSettings, TimeSumConfig};
use crate::wavepacket::WavePacketParams;

/// Leg length of the symmetric convergence-study path, in metres.
pub const CONVERGENCE_LEG: f64 = 3.37e-6;
/// Nominal duration of the convergence-study path, in seconds.
pub const CONVERGENCE_NOMINAL_DURATION: f64 = 6.72e-13;

pub const SLIT_SEPARATION: f64 = 273e-9;
pub const SLIT_WIDTH: f64 = 63e-9;
pub const NEAR_FIELD_DISTANCE: f64 = 3.37e-6;
pub const STRAIGHT_PATH_SPEED: f64 = 1e7;
pub const NEAR_FIELD_TIMESUM_WINDOW: f64 = 6.88e-14;
pub const SCREEN_POINTS: usize = 1024;
pub const TIMESUM_SCREEN_POINTS: usize = 5;
/// Half-width of the default screen window, in fringe spacings.
pub const SCREEN_HALF_WIDTH_FRINGES: f64 = 3.0;

#[derive(Debug, Clone, PartialEq)]
pub struct ConvergencePreset {
    pub path: TwoLegPath,
    pub windows: Vec<f64>,
    pub settings: QuadratureSettings,
    pub species: ParticleSpecies,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PatternPreset {
    pub geometry: SlitGeometry,
    pub timing: Timing,
    pub species: ParticleSpecies,
    pub methods: Vec<Method>,
    pub screen: Vec<f64>,
    pub samples_per_slit: usize,
    pub timesum: Option<TimeSumConfig>,
    /// Screen points for the time-summed method, which is far costlier.
    pub timesum_screen: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PacketPreset {
    pub params: WavePacketParams,
    pub times: Vec<f64>,
    pub positions: Vec<f64>,
}

/// Duration near `nominal` at which a symmetric electron path with legs `leg`
/// has a stationary phase equal to an odd multiple of pi.
pub fn odd_pi_aligned_duration(leg: f64, nominal: f64, species: ParticleSpecies) -> f64 {
    // phi0 = m (2 leg)^2 / (2 hbar tau)
    let scale = species.mass() * (2.0 * leg).powi(2) / (2.0 * HBAR);
    let odd = ((scale / nominal / PI - 1.0) / 2.0).round();
    scale / ((2.0 * odd + 1.0) * PI)
}

/// `count` windows spaced geometrically from `first` to `last`.
pub fn geometric_windows(first: f64, last: f64, count: usize) -> Vec<f64> {
    let ratio = (last / first).powf(1.0 / (count - 1) as f64);
    (0..count)
        .map(|i| if i + 1 == count { last } else { first * ratio.powi(i as i32) })
        .collect()
}

/// Symmetric 3.37 um legs with the duration nudged from 6.72e-13 s so that
/// the stationary phase is an odd multiple of pi.
pub fn fig4() -> ConvergencePreset {
    let species = ParticleSpecies::ELECTRON;
    let duration = odd_pi_aligned_duration(CONVERGENCE_LEG, CONVERGENCE_NOMINAL_DURATION, species);
    ConvergencePreset {
        path: TwoLegPath::symmetric(CONVERGENCE_LEG, duration).expect("preset path is valid"),
        windows: geometric_windows(1e-16, 0.8 * duration, 48),
        settings: QuadratureSettings::default(),
        species,
    }
}

fn near_field_geometry() -> SlitGeometry {
    let half = 0.5 * SLIT_SEPARATION;
    SlitGeometry {
        source_y: half,
        slit1_y: half,
        slit2_y: -half,
        slit1_width: SLIT_WIDTH,
        slit2_width: SLIT_WIDTH,
        dist_source_slits: NEAR_FIELD_DISTANCE,
        dist_slits_screen: NEAR_FIELD_DISTANCE,
    }
}

/// Screen window of `half_fringes` fringe spacings around `center`.
fn screen_around(
    geometry: &SlitGeometry,
    timing: Timing,
    species: ParticleSpecies,
    center: f64,
    half_fringes: f64,
    count: usize,
) -> Vec<f64> {
    let spacing = fringe_spacing(geometry, timing, species).expect("preset geometry is valid");
    let half = half_fringes * spacing;
    screen_grid(center - half, center + half, count).expect("preset grid is valid")
}

/// Near-field layout: source in line with the upper slit, point transit
/// through each slit center, screen centred on the source line.
pub fn fig6() -> PatternPreset {
    let species = ParticleSpecies::ELECTRON;
    let geometry = near_field_geometry();
    let timing = Timing::EqualTotalTime {
        duration: geometry.straight_path_length() / STRAIGHT_PATH_SPEED,
    };
    let center = geometry.source_y;
    PatternPreset {
        geometry,
        timing,
        species,
        methods: Method::ALL.to_vec(),
        screen: screen_around(&geometry, timing, species, center, SCREEN_HALF_WIDTH_FRINGES, SCREEN_POINTS),
        samples_per_slit: 1,
        timesum: Some(TimeSumConfig::new(NEAR_FIELD_TIMESUM_WINDOW)),
        timesum_screen: screen_around(
            &geometry,
            timing,
            species,
            center,
            SCREEN_HALF_WIDTH_FRINGES,
            TIMESUM_SCREEN_POINTS,
        ),
    }
}

/// Distances (m) well past `1e4 d^2 / lambda` for the near-field slits at
/// 1e7 m/s.
pub const FAR_FIELD_DISTANCE: f64 = 12.0;

/// Symmetric source with the near-field slits, source and screen 12 m away.
/// The screen brackets the first-order maximum by half a fringe.
pub fn far_field() -> PatternPreset {
    let species = ParticleSpecies::ELECTRON;
    let half = 0.5 * SLIT_SEPARATION;
    let geometry = SlitGeometry {
        source_y: 0.0,
        slit1_y: half,
        slit2_y: -half,
        slit1_width: SLIT_WIDTH,
        slit2_width: SLIT_WIDTH,
        dist_source_slits: FAR_FIELD_DISTANCE,
        dist_slits_screen: FAR_FIELD_DISTANCE,
    };
    let duration = geometry.straight_path_length() / STRAIGHT_PATH_SPEED;
    let timing = Timing::EqualTotalTime { duration };
    let wavelength = crate::kinematics::de_broglie_wavelength(species, STRAIGHT_PATH_SPEED)
        .expect("positive speed");
    let first_order = crate::kinematics::far_field_maxima(SLIT_SEPARATION, wavelength, 1)
        .expect("first order exists");
    let center = FAR_FIELD_DISTANCE * first_order.tan();
    let screen = screen_around(&geometry, timing, species, center, 0.5, 401);
    // 32 Fresnel zones of the slit-time integral on each side of t*
    let phi0 = species.mass() * geometry.straight_path_length().powi(2) / (2.0 * HBAR * duration);
    let window = duration * (32.0 * PI / phi0).sqrt();
    PatternPreset {
        geometry,
        timing,
        species,
        methods: Method::ALL.to_vec(),
        timesum_screen: screen.clone(),
        screen,
        samples_per_slit: 1,
        timesum: Some(TimeSumConfig::new(window)),
    }
}

/// Momentum width of the snapshot packet as a fraction of `k0`.
pub const PACKET_RELATIVE_WIDTH: f64 = 0.05;

/// Electron packet at 1e7 m/s with `dk = k0 / 20`, five snapshots 1e-17 s apart.
pub fn fig2() -> PacketPreset {
    let params = WavePacketParams::from_speed(ParticleSpecies::ELECTRON, STRAIGHT_PATH_SPEED, PACKET_RELATIVE_WIDTH)
        .expect("preset packet is valid");
    let times = (0..5).map(|i| i as f64 * 1e-17).collect();
    let positions = screen_grid(-1.0e-9, 1.5e-9, 1001).expect("preset grid is valid");
    PacketPreset { params, times, positions }
}
