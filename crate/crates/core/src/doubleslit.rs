//! Screen patterns of a two-slit layout by three per-path amplitude rules,
//! and the near-field phase differences where the rules disagree.

use std::f64::consts::{FRAC_PI_4, PI};

use num_complex::Complex64;
#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::error::{require_positive, Error, Result};
use crate::faddeeva::time_sum_prefactor;
use crate::kinematics::{de_broglie_wavelength, ParticleSpecies, PhaseValue, HBAR};
use crate::propagator::{stationary_phase, TwoLegPath};
use crate::timesum::{time_sum, TimeSumConfig};

/// Two-slit layout in the plane. Transverse coordinates are `y`; the slits
/// sit `dist_source_slits` downstream of the source and the screen a further
/// `dist_slits_screen` beyond them. All lengths in metres.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SlitGeometry {
    pub source_y: f64,
    pub slit1_y: f64,
    pub slit2_y: f64,
    pub slit1_width: f64,
    pub slit2_width: f64,
    pub dist_source_slits: f64,
    pub dist_slits_screen: f64,
}

impl SlitGeometry {
    pub fn validate(&self) -> Result<()> {
        for (value, name) in [
            (self.source_y, "source_y"),
            (self.slit1_y, "slit1_y"),
            (self.slit2_y, "slit2_y"),
        ] {
            if !value.is_finite() {
                return Err(Error::Geometry(format!("{name} must be finite, got {value}")));
            }
        }
        for (value, name) in [
            (self.slit1_width, "slit1_width"),
            (self.slit2_width, "slit2_width"),
            (self.dist_source_slits, "dist_source_slits"),
            (self.dist_slits_screen, "dist_slits_screen"),
        ] {
            if !(value.is_finite() && value > 0.0) {
                return Err(Error::Geometry(format!("{name} must be positive, got {value}")));
            }
        }
        let half_widths = 0.5 * (self.slit1_width + self.slit2_width);
        if self.separation() <= half_widths {
            return Err(Error::Geometry(format!(
                "slit separation {} m must exceed the mean width {half_widths} m",
                self.separation()
            )));
        }
        Ok(())
    }

    pub fn separation(&self) -> f64 {
        (self.slit2_y - self.slit1_y).abs()
    }

    /// Length of the undeflected path from source to screen.
    pub fn straight_path_length(&self) -> f64 {
        self.dist_source_slits + self.dist_slits_screen
    }

    fn slits(&self) -> [(f64, f64); 2] {
        [(self.slit1_y, self.slit1_width), (self.slit2_y, self.slit2_width)]
    }

    fn is_open(&self, y: f64) -> bool {
        self.slits().iter().any(|&(center, width)| (y - center).abs() < 0.5 * width)
    }

    /// `samples` equally spaced transit points across slit `index` (0 or 1),
    /// at the midpoints of equal cells.
    pub fn transit_points(&self, index: usize, samples: usize) -> Vec<f64> {
        let (center, width) = self.slits()[index];
        let cell = width / samples as f64;
        (0..samples).map(|i| center - 0.5 * width + (i as f64 + 0.5) * cell).collect()
    }
}

/// Rule for the amplitude of one path through one transit point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    /// Unit phasor `exp(2 pi i (L1 + L2) / lambda)` at a common speed.
    Intuitive,
    /// Leading stationary-phase value `sqrt(pi/phi0) exp(i phi0 + i pi/4)`.
    StationaryPhase,
    /// Windowed slit-time sum, divided by `m / (2 pi i hbar)`.
    TimeSummed,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Intuitive, Method::StationaryPhase, Method::TimeSummed];

    pub fn name(self) -> &'static str {
        match self {
            Method::Intuitive => "intuitive",
            Method::StationaryPhase => "stationary_phase",
            Method::TimeSummed => "time_summed",
        }
    }
}

/// How paths of different length are timed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Timing {
    /// Every path takes the same time, in seconds.
    EqualTotalTime { duration: f64 },
    /// Every path moves at the same speed, in m/s.
    EqualSpeed { speed: f64 },
}

impl Timing {
    fn validate(&self) -> Result<()> {
        match *self {
            Timing::EqualTotalTime { duration } => require_positive(duration, "duration"),
            Timing::EqualSpeed { speed } => require_positive(speed, "speed"),
        }
    }

    /// Speed used for the intuitive wavelength: the straight-path speed when
    /// the time is fixed.
    pub fn reference_speed(&self, geom: &SlitGeometry) -> f64 {
        match *self {
            Timing::EqualTotalTime { duration } => geom.straight_path_length() / duration,
            Timing::EqualSpeed { speed } => speed,
        }
    }

    fn duration_for(&self, total_length: f64) -> f64 {
        match *self {
            Timing::EqualTotalTime { duration } => duration,
            Timing::EqualSpeed { speed } => total_length / speed,
        }
    }
}

/// Normalized intensity along the screen for one method.
#[derive(Debug, Clone, PartialEq)]
pub struct ScreenPattern {
    pub screen_y: Vec<f64>,
    /// `|A1 + A2|^2` scaled so that the largest value is exactly 1.
    pub probability: Vec<f64>,
    pub method: Method,
    /// Largest `|A1 + A2|^2` before normalization.
    pub peak_intensity: f64,
    /// Cost and accuracy of the slit-time quadratures, for the time-summed
    /// method only.
    pub quadrature: Option<QuadratureStats>,
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct QuadratureStats {
    /// Integrand evaluations over every path and screen point.
    pub nodes: usize,
    /// Largest summed error estimate of `A1 + A2` at any screen point, in the
    /// units of the amplitudes.
    pub max_error_estimate: f64,
}

impl QuadratureStats {
    fn add_path(self, nodes: usize, error: f64) -> Self {
        QuadratureStats { nodes: self.nodes + nodes, max_error_estimate: self.max_error_estimate + error }
    }

    fn merge_points(self, other: Self) -> Self {
        QuadratureStats {
            nodes: self.nodes + other.nodes,
            max_error_estimate: self.max_error_estimate.max(other.max_error_estimate),
        }
    }
}

impl ScreenPattern {
    pub fn from_amplitudes(screen_y: Vec<f64>, amplitudes: &[Complex64], method: Method) -> Self {
        let intensity: Vec<f64> = amplitudes.iter().map(|a| a.norm_sqr()).collect();
        let peak = intensity.iter().copied().fold(0.0, f64::max);
        let probability = if peak > 0.0 {
            intensity.iter().map(|i| i / peak).collect()
        } else {
            intensity
        };
        ScreenPattern { screen_y, probability, method, peak_intensity: peak, quadrature: None }
    }

    /// Index of the grid point closest to `y`.
    pub fn nearest_index(&self, y: f64) -> usize {
        let mut best = 0;
        for (i, &yi) in self.screen_y.iter().enumerate() {
            if (yi - y).abs() < (self.screen_y[best] - y).abs() {
                best = i;
            }
        }
        best
    }

    pub fn is_local_max(&self, index: usize) -> bool {
        self.is_extremum(index, |centre, side| centre >= side)
    }

    pub fn is_local_min(&self, index: usize) -> bool {
        self.is_extremum(index, |centre, side| centre <= side)
    }

    fn is_extremum(&self, index: usize, compare: impl Fn(f64, f64) -> bool) -> bool {
        let p = &self.probability;
        index > 0 && index + 1 < p.len() && compare(p[index], p[index - 1]) && compare(p[index], p[index + 1])
    }

    /// Position of the local maximum reached by climbing from the grid point
    /// nearest `guess`, refined by a parabola through the three top points.
    pub fn peak_near(&self, guess: f64) -> Option<f64> {
        let p = &self.probability;
        let mut i = self.nearest_index(guess);
        loop {
            if i > 0 && p[i - 1] > p[i] {
                i -= 1;
            } else if i + 1 < p.len() && p[i + 1] > p[i] {
                i += 1;
            } else {
                break;
            }
        }
        if !self.is_local_max(i) {
            return None;
        }
        let (y0, y1, y2) = (self.screen_y[i - 1], self.screen_y[i], self.screen_y[i + 1]);
        let (p0, p1, p2) = (p[i - 1], p[i], p[i + 1]);
        let curvature = p0 - 2.0 * p1 + p2;
        if curvature == 0.0 {
            return Some(y1);
        }
        // uniform spacing assumed around the vertex
        let h = 0.5 * (y2 - y0);
        Some(y1 + 0.5 * h * (p0 - p2) / curvature)
    }
}

/// Leg lengths of the path from the source through `slit_point_y` to `screen_y`.
pub fn leg_lengths(geom: &SlitGeometry, slit_point_y: f64, screen_y: f64) -> Result<(f64, f64)> {
    if !geom.is_open(slit_point_y) {
        return Err(Error::Geometry(format!("y = {slit_point_y} m is not inside either slit")));
    }
    let first = geom.dist_source_slits.hypot(slit_point_y - geom.source_y);
    let second = geom.dist_slits_screen.hypot(screen_y - slit_point_y);
    Ok((first, second))
}

/// Amplitude of the single path through `slit_point_y`, in the method's own
/// normalization.
pub fn path_amplitude(
    geom: &SlitGeometry,
    timing: Timing,
    method: Method,
    slit_point_y: f64,
    screen_y: f64,
    species: ParticleSpecies,
    timesum: Option<&TimeSumConfig>,
) -> Result<Complex64> {
    path_contribution(geom, timing, method, slit_point_y, screen_y, species, timesum).map(|(a, _)| a)
}

fn path_contribution(
    geom: &SlitGeometry,
    timing: Timing,
    method: Method,
    slit_point_y: f64,
    screen_y: f64,
    species: ParticleSpecies,
    timesum: Option<&TimeSumConfig>,
) -> Result<(Complex64, QuadratureStats)> {
    let (first, second) = leg_lengths(geom, slit_point_y, screen_y)?;
    let total = first + second;
    match method {
        Method::Intuitive => {
            let wavelength = de_broglie_wavelength(species, timing.reference_speed(geom))?;
            Ok((Complex64::from_polar(1.0, 2.0 * PI * total / wavelength), QuadratureStats::default()))
        }
        Method::StationaryPhase => {
            let path = TwoLegPath::new(first, second, timing.duration_for(total))?;
            let phi0 = stationary_phase(path, species).raw();
            let amplitude = Complex64::from_polar((PI / phi0).sqrt(), phi0 + FRAC_PI_4);
            Ok((amplitude, QuadratureStats::default()))
        }
        Method::TimeSummed => {
            let config = timesum.ok_or_else(|| {
                Error::Usage("the time-summed method needs a time-sum configuration".into())
            })?;
            let path = TwoLegPath::new(first, second, timing.duration_for(total))?;
            let result = time_sum(path, config, species)?;
            let prefactor = time_sum_prefactor(species);
            let stats = QuadratureStats {
                nodes: result.nodes,
                max_error_estimate: result.error_estimate / prefactor.norm(),
            };
            Ok((result.amplitude.value / prefactor, stats))
        }
    }
}

/// Coherent sums over the transit points of each slit, each point weighted
/// by `1 / samples_per_slit`.
pub fn slit_amplitudes(
    geom: &SlitGeometry,
    timing: Timing,
    method: Method,
    screen_y: f64,
    samples_per_slit: usize,
    species: ParticleSpecies,
    timesum: Option<&TimeSumConfig>,
) -> Result<[Complex64; 2]> {
    slit_sums(geom, timing, method, screen_y, samples_per_slit, species, timesum).map(|(sums, _)| sums)
}

fn slit_sums(
    geom: &SlitGeometry,
    timing: Timing,
    method: Method,
    screen_y: f64,
    samples_per_slit: usize,
    species: ParticleSpecies,
    timesum: Option<&TimeSumConfig>,
) -> Result<([Complex64; 2], QuadratureStats)> {
    let weight = 1.0 / samples_per_slit as f64;
    let mut sums = [Complex64::default(); 2];
    let mut stats = QuadratureStats::default();
    for (index, sum) in sums.iter_mut().enumerate() {
        for y in geom.transit_points(index, samples_per_slit) {
            let (amplitude, path) = path_contribution(geom, timing, method, y, screen_y, species, timesum)?;
            *sum += amplitude * weight;
            stats = stats.add_path(path.nodes, weight * path.max_error_estimate);
        }
    }
    Ok((sums, stats))
}

/// Normalized `|A1 + A2|^2` at each screen point.
pub fn pattern(
    geom: &SlitGeometry,
    timing: Timing,
    screen_points: &[f64],
    method: Method,
    samples_per_slit: usize,
    species: ParticleSpecies,
    timesum: Option<&TimeSumConfig>,
) -> Result<ScreenPattern> {
    geom.validate()?;
    timing.validate()?;
    if screen_points.is_empty() {
        return Err(Error::Domain("at least one screen point is required".into()));
    }
    if let Some(y) = screen_points.iter().find(|y| !y.is_finite()) {
        return Err(Error::Domain(format!("screen points must be finite, got {y}")));
    }
    if samples_per_slit == 0 {
        return Err(Error::Domain("samples_per_slit must be at least 1".into()));
    }
    match (method, timesum, timing) {
        (Method::TimeSummed, None, _) => {
            return Err(Error::Usage("the time-summed method needs a time-sum configuration".into()))
        }
        (Method::TimeSummed, Some(_), Timing::EqualSpeed { .. }) => {
            return Err(Error::Usage(
                "the time-summed method needs equal total time, not equal speed".into(),
            ))
        }
        (Method::Intuitive | Method::StationaryPhase, Some(_), _) => {
            return Err(Error::Usage(format!(
                "a time-sum configuration applies only to the time-summed method, not {}",
                method.name()
            )))
        }
        (_, Some(config), _) => config.validate()?,
        _ => {}
    }

    let at_point = |&y: &f64| -> Result<(Complex64, QuadratureStats)> {
        slit_sums(geom, timing, method, y, samples_per_slit, species, timesum)
            .map(|([first, second], stats)| (first + second, stats))
            .map_err(|source| Error::AtScreenPoint { y, source: Box::new(source) })
    };
    #[cfg(feature = "parallel")]
    let points: Result<Vec<_>> = screen_points.par_iter().map(at_point).collect();
    #[cfg(not(feature = "parallel"))]
    let points: Result<Vec<_>> = screen_points.iter().map(at_point).collect();
    let (amplitudes, stats): (Vec<Complex64>, Vec<QuadratureStats>) = points?.into_iter().unzip();
    let mut result = ScreenPattern::from_amplitudes(screen_points.to_vec(), &amplitudes, method);
    if method == Method::TimeSummed {
        result.quadrature = Some(stats.into_iter().fold(QuadratureStats::default(), QuadratureStats::merge_points));
    }
    Ok(result)
}

/// `count` evenly spaced points from `min_y` to `max_y` inclusive.
pub fn screen_grid(min_y: f64, max_y: f64, count: usize) -> Result<Vec<f64>> {
    if count < 2 {
        return Err(Error::Domain(format!("a screen grid needs at least 2 points, got {count}")));
    }
    if !(min_y.is_finite() && max_y.is_finite() && max_y > min_y) {
        return Err(Error::Domain(format!("screen grid needs min_y < max_y, got [{min_y}, {max_y}]")));
    }
    let step = (max_y - min_y) / (count - 1) as f64;
    Ok((0..count).map(|i| if i + 1 == count { max_y } else { min_y + i as f64 * step }).collect())
}

/// Small-angle fringe period `lambda * dist_slits_screen / d` at the
/// reference speed of `timing`.
pub fn fringe_spacing(geom: &SlitGeometry, timing: Timing, species: ParticleSpecies) -> Result<f64> {
    geom.validate()?;
    timing.validate()?;
    let wavelength = de_broglie_wavelength(species, timing.reference_speed(geom))?;
    Ok(wavelength * geom.dist_slits_screen / geom.separation())
}

/// Path-integral phase difference `2 m d^2 / (hbar dt)` between the straight
/// path and the path through the far slit, when both take `duration`.
pub fn near_field_phase_diff_path_integral(
    separation: f64,
    duration: f64,
    species: ParticleSpecies,
) -> Result<PhaseValue> {
    require_positive(separation, "slit separation")?;
    require_positive(duration, "duration")?;
    Ok(PhaseValue::new(2.0 * species.mass() * separation * separation / (HBAR * duration)))
}

/// Wavefront-counting phase difference, exact and to order `d^4`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntuitivePhaseDiff {
    pub exact: PhaseValue,
    pub expanded: PhaseValue,
}

/// `2 (m v / hbar)(sqrt(L^2 + d^2) - L)` with `v = 2L / duration`, and its
/// expansion `2 m d^2 / (hbar dt) - m d^4 / (2 hbar dt L^2)`.
pub fn near_field_phase_diff_intuitive(
    separation: f64,
    distance: f64,
    duration: f64,
    species: ParticleSpecies,
) -> Result<IntuitivePhaseDiff> {
    require_positive(separation, "slit separation")?;
    require_positive(distance, "distance")?;
    require_positive(duration, "duration")?;
    let m = species.mass();
    let speed = 2.0 * distance / duration;
    let d2 = separation * separation;
    let extra_length = d2 / (distance.hypot(separation) + distance);
    let exact = 2.0 * m * speed / HBAR * extra_length;
    let leading = 2.0 * m * d2 / (HBAR * duration);
    let correction = m * d2 * d2 / (2.0 * HBAR * duration * distance * distance);
    Ok(IntuitivePhaseDiff {
        exact: PhaseValue::new(exact),
        expanded: PhaseValue::new(leading - correction),
    })
}

/// Principal differences of this size or larger are reported as significant.
pub const SIGNIFICANCE_THRESHOLD: f64 = PI / 10.0;

/// Side-by-side phase differences of the two methods.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiscrepancyReport {
    pub path_integral: PhaseValue,
    pub intuitive_exact: PhaseValue,
    pub intuitive_expanded: PhaseValue,
    /// `intuitive_exact - path_integral`.
    pub difference: PhaseValue,
    pub significant: bool,
}

pub fn discrepancy_report(
    separation: f64,
    distance: f64,
    duration: f64,
    species: ParticleSpecies,
) -> Result<DiscrepancyReport> {
    let path_integral = near_field_phase_diff_path_integral(separation, duration, species)?;
    let intuitive = near_field_phase_diff_intuitive(separation, distance, duration, species)?;
    let difference = PhaseValue::new(intuitive.exact.raw() - path_integral.raw());
    Ok(DiscrepancyReport {
        path_integral,
        intuitive_exact: intuitive.exact,
        intuitive_expanded: intuitive.expanded,
        difference,
        significant: difference.principal().abs() >= SIGNIFICANCE_THRESHOLD,
    })
}
