//! Browser bindings: a near-field pattern, a slit-time convergence series and
//! a wave-packet snapshot, each returned as flat `Float64Array`s.

use matterwave::doubleslit::{fringe_spacing, pattern, screen_grid, Method, SlitGeometry, Timing};
use matterwave::faddeeva::{time_sum_prefactor, timesum_closed_form};
use matterwave::presets::{self, geometric_windows, odd_pi_aligned_duration};
use matterwave::propagator::stationary_phase;
use matterwave::timesum::{convergence_study, QuadratureSettings};
use matterwave::wavepacket::{packet_amplitude, WavePacketParams};
use matterwave::{ParticleSpecies, TwoLegPath};
use wasm_bindgen::prelude::*;

const ELECTRON: ParticleSpecies = ParticleSpecies::ELECTRON;

fn js_error(err: matterwave::Error) -> JsError {
    JsError::new(&err.to_string())
}

/// Intuitive and stationary-phase screen patterns, each scaled to a peak of 1.
#[wasm_bindgen]
pub struct Pattern {
    screen_nm: Vec<f64>,
    intuitive: Vec<f64>,
    stationary: Vec<f64>,
    fringe_nm: f64,
}

#[wasm_bindgen]
impl Pattern {
    #[wasm_bindgen(getter)]
    pub fn screen_nm(&self) -> Vec<f64> {
        self.screen_nm.clone()
    }

    #[wasm_bindgen(getter)]
    pub fn intuitive(&self) -> Vec<f64> {
        self.intuitive.clone()
    }

    #[wasm_bindgen(getter)]
    pub fn stationary(&self) -> Vec<f64> {
        self.stationary.clone()
    }

    #[wasm_bindgen(getter)]
    pub fn fringe_nm(&self) -> f64 {
        self.fringe_nm
    }
}

/// Two point slits `separation_nm` apart, the source in line with the upper
/// one, source and screen `distance_um` from the slits. The electron covers
/// the straight source-screen line at `speed_m_per_s`.
#[wasm_bindgen]
pub fn near_field_pattern(
    separation_nm: f64,
    distance_um: f64,
    speed_m_per_s: f64,
    fringes: f64,
    count: usize,
) -> Result<Pattern, JsError> {
    if !(separation_nm > 0.0 && distance_um > 0.0) {
        return Err(JsError::new("separation and distance must be positive"));
    }
    let half = 0.5 * separation_nm * 1e-9;
    let distance = distance_um * 1e-6;
    let geometry = SlitGeometry {
        source_y: half,
        slit1_y: half,
        slit2_y: -half,
        slit1_width: presets::SLIT_WIDTH.min(half),
        slit2_width: presets::SLIT_WIDTH.min(half),
        dist_source_slits: distance,
        dist_slits_screen: distance,
    };
    geometry.validate().map_err(js_error)?;
    if !(speed_m_per_s > 0.0 && speed_m_per_s.is_finite()) {
        return Err(JsError::new("speed must be positive"));
    }
    let timing = Timing::EqualTotalTime { duration: geometry.straight_path_length() / speed_m_per_s };
    let fringe = fringe_spacing(&geometry, timing, ELECTRON).map_err(js_error)?;
    let span = fringes * fringe;
    let screen = screen_grid(half - span, half + span, count).map_err(js_error)?;
    let run = |method| pattern(&geometry, timing, &screen, method, 1, ELECTRON, None).map_err(js_error);
    let intuitive = run(Method::Intuitive)?.probability;
    let stationary = run(Method::StationaryPhase)?.probability;
    Ok(Pattern {
        screen_nm: screen.iter().map(|y| y * 1e9).collect(),
        intuitive,
        stationary,
        fringe_nm: fringe * 1e9,
    })
}

/// Slit-time sums over growing windows, divided by `m / (2 pi i hbar)`.
#[wasm_bindgen]
pub struct Convergence {
    window_fs: Vec<f64>,
    re: Vec<f64>,
    im: Vec<f64>,
    limit_re: f64,
    limit_im: f64,
    stationary_phase: f64,
}

#[wasm_bindgen]
impl Convergence {
    #[wasm_bindgen(getter)]
    pub fn window_fs(&self) -> Vec<f64> {
        self.window_fs.clone()
    }

    #[wasm_bindgen(getter)]
    pub fn re(&self) -> Vec<f64> {
        self.re.clone()
    }

    #[wasm_bindgen(getter)]
    pub fn im(&self) -> Vec<f64> {
        self.im.clone()
    }

    /// The complete integral, which the series approaches.
    #[wasm_bindgen(getter)]
    pub fn limit_re(&self) -> f64 {
        self.limit_re
    }

    #[wasm_bindgen(getter)]
    pub fn limit_im(&self) -> f64 {
        self.limit_im
    }

    #[wasm_bindgen(getter)]
    pub fn stationary_phase(&self) -> f64 {
        self.stationary_phase
    }
}

/// Symmetric path with legs `leg_um`. With `align` the duration is nudged so
/// the stationary phase is an odd multiple of pi.
#[wasm_bindgen]
pub fn convergence_series(leg_um: f64, duration_fs: f64, align: bool, count: usize) -> Result<Convergence, JsError> {
    let leg = leg_um * 1e-6;
    let nominal = duration_fs * 1e-15;
    if count < 2 {
        return Err(JsError::new("need at least two windows"));
    }
    if !(leg > 0.0 && nominal > 0.0) {
        return Err(JsError::new("leg and duration must be positive"));
    }
    let duration = if align { odd_pi_aligned_duration(leg, nominal, ELECTRON) } else { nominal };
    let path = TwoLegPath::symmetric(leg, duration).map_err(js_error)?;
    let windows = geometric_windows(1e-4 * duration, 0.8 * duration, count);
    let series = convergence_study(path, &windows, QuadratureSettings::default(), ELECTRON).map_err(js_error)?;
    let prefactor = time_sum_prefactor(ELECTRON);
    let normalized: Vec<_> = series.amplitudes.iter().map(|a| a.value / prefactor).collect();
    let phi0 = stationary_phase(path, ELECTRON).raw();
    let limit = timesum_closed_form(phi0, ELECTRON).map_err(js_error)?.value / prefactor;
    Ok(Convergence {
        window_fs: windows.iter().map(|w| w * 1e15).collect(),
        re: normalized.iter().map(|z| z.re).collect(),
        im: normalized.iter().map(|z| z.im).collect(),
        limit_re: limit.re,
        limit_im: limit.im,
        stationary_phase: phi0,
    })
}

/// Real part and envelope of a Gaussian packet at one instant.
#[wasm_bindgen]
pub struct Packet {
    position_nm: Vec<f64>,
    re: Vec<f64>,
    envelope: Vec<f64>,
}

#[wasm_bindgen]
impl Packet {
    #[wasm_bindgen(getter)]
    pub fn position_nm(&self) -> Vec<f64> {
        self.position_nm.clone()
    }

    #[wasm_bindgen(getter)]
    pub fn re(&self) -> Vec<f64> {
        self.re.clone()
    }

    #[wasm_bindgen(getter)]
    pub fn envelope(&self) -> Vec<f64> {
        self.envelope.clone()
    }
}

#[wasm_bindgen]
pub fn packet_snapshot(
    speed_m_per_s: f64,
    relative_width: f64,
    time_as: f64,
    min_nm: f64,
    max_nm: f64,
    count: usize,
) -> Result<Packet, JsError> {
    let params = WavePacketParams::from_speed(ELECTRON, speed_m_per_s, relative_width).map_err(js_error)?;
    let positions = screen_grid(min_nm * 1e-9, max_nm * 1e-9, count).map_err(js_error)?;
    let t = time_as * 1e-18;
    let mut re = Vec::with_capacity(count);
    let mut envelope = Vec::with_capacity(count);
    for &x in &positions {
        let psi = packet_amplitude(params, x, t).map_err(js_error)?;
        re.push(psi.re);
        envelope.push(psi.norm());
    }
    Ok(Packet { position_nm: positions.iter().map(|x| x * 1e9).collect(), re, envelope })
}
