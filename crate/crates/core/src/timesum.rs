//! Sum over the slit-crossing time of the two-step propagator product.
//!
//! With `a = t*` and `b = tau - t*` measured from the stationary time, the
//! slit phase is exactly `phi0 (1 + u^2)` in the variable
//! `u = s / sqrt((a + s)(b - s))`, `s = t_slit - t*`. Panel edges are placed on
//! level sets of `u^2`, so every panel advances the phase by at most the
//! configured cap in either integration variable. In `u` the integrand is
//! `g(u) exp(i phi0 u^2)` with a smooth weight `g` (equal to `1/(1 + u^2)` for
//! a symmetric path) and the endpoint singularities of the time integral are
//! gone.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI, SQRT_2};

use num_complex::Complex64;
#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::error::{require_positive, Error, Result};
use crate::faddeeva::time_sum_prefactor;
use crate::kinematics::{ParticleSpecies, HBAR};
use crate::propagator::{
    stationary_phase, stationary_slit_time, AmplitudeUnit, ComplexAmplitude, TwoLegPath,
};
use crate::quadrature::{
    gauss_kronrod_15, next_quadratic_level, PanelEstimate, PanelSum, NODES_PER_PANEL,
};

pub const DEFAULT_PHASE_STEP_CAP: f64 = FRAC_PI_4;
pub const DEFAULT_MAX_NODES: usize = 1 << 27;
pub const MIN_NODES: usize = 16;

// Phase (in units of pi) covered on the real axis before an unbounded side
// continues along a rotated ray.
const REAL_AXIS_ZONES: f64 = 64.0;
// The ray integrand has decayed by exp(-RAY_DECAY) where the ray is cut.
const RAY_DECAY: f64 = 45.0;

/// Integration variable for the slit-time sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum IntegrationDomain {
    /// Directly in the slit-crossing time.
    #[default]
    Time,
    /// In the tangent variable `u`, which removes the endpoint singularities.
    Tangent,
}

/// Resolution of the slit-time quadrature, independent of the window.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSettings {
    pub max_nodes: usize,
    pub domain: IntegrationDomain,
    /// Largest phase change across one panel, in radians.
    pub phase_step_cap: f64,
}

impl Default for QuadratureSettings {
    fn default() -> Self {
        QuadratureSettings {
            max_nodes: DEFAULT_MAX_NODES,
            domain: IntegrationDomain::Time,
            phase_step_cap: DEFAULT_PHASE_STEP_CAP,
        }
    }
}

impl QuadratureSettings {
    pub fn validate(&self) -> Result<()> {
        if self.max_nodes < MIN_NODES {
            return Err(Error::Domain(format!(
                "max_nodes must be at least {MIN_NODES}, got {}",
                self.max_nodes
            )));
        }
        if !(self.phase_step_cap > 0.0 && self.phase_step_cap <= FRAC_PI_2) {
            return Err(Error::Domain(format!(
                "phase_step_cap must lie in (0, pi/2], got {}",
                self.phase_step_cap
            )));
        }
        Ok(())
    }
}

/// Window and resolution of one slit-time sum. The window is the total
/// width in seconds, centered on the stationary time.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TimeSumConfig {
    pub window: f64,
    pub max_nodes: usize,
    pub domain: IntegrationDomain,
    pub phase_step_cap: f64,
}

impl TimeSumConfig {
    pub fn new(window: f64) -> Self {
        Self::with_settings(window, QuadratureSettings::default())
    }

    pub fn with_settings(window: f64, settings: QuadratureSettings) -> Self {
        TimeSumConfig {
            window,
            max_nodes: settings.max_nodes,
            domain: settings.domain,
            phase_step_cap: settings.phase_step_cap,
        }
    }

    pub fn settings(&self) -> QuadratureSettings {
        QuadratureSettings {
            max_nodes: self.max_nodes,
            domain: self.domain,
            phase_step_cap: self.phase_step_cap,
        }
    }

    /// Checks the invariants that do not depend on a path.
    pub fn validate(&self) -> Result<()> {
        require_positive(self.window, "time-sum window")?;
        self.settings().validate()
    }
}

/// An amplitude with the quadrature's own error estimate and cost.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TimeSumResult {
    pub amplitude: ComplexAmplitude,
    pub error_estimate: f64,
    pub nodes: usize,
}

/// Amplitudes of a sequence of growing windows.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceSeries {
    pub window_values: Vec<f64>,
    pub amplitudes: Vec<ComplexAmplitude>,
    pub error_estimates: Vec<f64>,
    /// Integrand evaluations behind each amplitude.
    pub nodes: Vec<usize>,
}

/// Slit-time integral over `config.window`, centered on the stationary time.
pub fn time_summed_amplitude(
    path: TwoLegPath,
    config: &TimeSumConfig,
    species: ParticleSpecies,
) -> Result<ComplexAmplitude> {
    time_sum(path, config, species).map(|r| r.amplitude)
}

/// As [`time_summed_amplitude`], with the error estimate and node count.
pub fn time_sum(
    path: TwoLegPath,
    config: &TimeSumConfig,
    species: ParticleSpecies,
) -> Result<TimeSumResult> {
    config.validate()?;
    let mut series = run_windows(path, &[config.window], config.settings(), species)?;
    Ok(series.pop().expect("one window in, one result out"))
}

/// Amplitudes for each window, in order. A study over one window reproduces
/// [`time_sum`] exactly.
pub fn convergence_study(
    path: TwoLegPath,
    windows: &[f64],
    settings: QuadratureSettings,
    species: ParticleSpecies,
) -> Result<ConvergenceSeries> {
    settings.validate()?;
    if windows.is_empty() {
        return Err(Error::Domain("convergence study needs at least one window".into()));
    }
    for w in windows {
        require_positive(*w, "time-sum window")?;
    }
    if windows.windows(2).any(|pair| pair[1] <= pair[0]) {
        return Err(Error::Domain("windows must be strictly increasing".into()));
    }
    let results = run_windows(path, windows, settings, species)?;
    Ok(ConvergenceSeries {
        window_values: windows.to_vec(),
        amplitudes: results.iter().map(|r| r.amplitude).collect(),
        error_estimates: results.iter().map(|r| r.error_estimate).collect(),
        nodes: results.iter().map(|r| r.nodes).collect(),
    })
}

/// `m/(2 pi i hbar) e^{i phi0} * integral of e^{i phi0 u^2} / (1 + u^2)` over
/// the whole real line, the complete slit-time sum of a symmetric path.
pub fn full_timesum_u_domain(
    phi0: f64,
    max_nodes: usize,
    species: ParticleSpecies,
) -> Result<ComplexAmplitude> {
    full_time_sum(phi0, max_nodes, species).map(|r| r.amplitude)
}

/// As [`full_timesum_u_domain`], with the error estimate and node count.
pub fn full_time_sum(phi0: f64, max_nodes: usize, species: ParticleSpecies) -> Result<TimeSumResult> {
    require_positive(phi0, "stationary phase phi0")?;
    let settings = QuadratureSettings {
        max_nodes,
        domain: IntegrationDomain::Tangent,
        phase_step_cap: DEFAULT_PHASE_STEP_CAP,
    };
    settings.validate()?;
    let sum = SlitTimeSum {
        map: SlitTimeMap::symmetric_unit(),
        phi0,
        settings,
        prefactor: time_sum_prefactor(species),
        slit_phase_scale: 0.0,
        legs: (0.0, 0.0),
    };
    let ends = SideEnds { negative: f64::INFINITY, positive: f64::INFINITY };
    Ok(sum.evaluate(&[ends])?.remove(0))
}

fn run_windows(
    path: TwoLegPath,
    windows: &[f64],
    settings: QuadratureSettings,
    species: ParticleSpecies,
) -> Result<Vec<TimeSumResult>> {
    let map = SlitTimeMap::for_path(path);
    let mut ends = Vec::with_capacity(windows.len());
    for &window in windows {
        if window > path.duration() {
            return Err(Error::Domain(format!(
                "window {window} s exceeds the path duration {} s",
                path.duration()
            )));
        }
        let half = 0.5 * window;
        let touches = half >= map.before || half >= map.after;
        if touches && settings.domain == IntegrationDomain::Time {
            return Err(Error::Singularity(format!(
                "a window of {window} s around t* = {:e} s reaches the slit-time endpoints \
                 0 or {:e} s; use the tangent domain for the full integral",
                map.before,
                path.duration()
            )));
        }
        let positive = if half >= map.after { f64::INFINITY } else { map.u_of_s(half) };
        let negative = if half >= map.before { f64::INFINITY } else { -map.u_of_s(-half) };
        ends.push(SideEnds { negative, positive });
    }
    let sum = SlitTimeSum {
        map,
        phi0: stationary_phase(path, species).raw(),
        settings,
        prefactor: time_sum_prefactor(species),
        slit_phase_scale: species.mass() / (2.0 * HBAR),
        legs: (path.source_leg(), path.screen_leg()),
    };
    sum.evaluate(&ends)
}

/// Change of variables between the slit time offset `s` and `u`.
#[derive(Debug, Clone, Copy, PartialEq)]
struct SlitTimeMap {
    /// Time from the start to the stationary time.
    before: f64,
    /// Time from the stationary time to the end.
    after: f64,
    duration: f64,
}

impl SlitTimeMap {
    fn for_path(path: TwoLegPath) -> Self {
        let before = stationary_slit_time(path);
        SlitTimeMap { before, after: path.duration() - before, duration: path.duration() }
    }

    fn symmetric_unit() -> Self {
        SlitTimeMap { before: 0.5, after: 0.5, duration: 1.0 }
    }

    fn u_of_s(&self, s: f64) -> f64 {
        s / ((self.before + s) * (self.after - s)).sqrt()
    }

    // Root of (1 + u^2) s^2 - u^2 (b - a) s - u^2 a b = 0 with the sign of u,
    // taken in whichever form avoids cancellation.
    fn s_of_u(&self, u: f64) -> f64 {
        let (a, b) = (self.before, self.after);
        let root = (u * u * self.duration * self.duration + 4.0 * a * b).sqrt();
        let skew = u * (b - a);
        if skew >= 0.0 {
            u * (skew + root) / (2.0 * (1.0 + u * u))
        } else {
            2.0 * u * a * b / (root - skew)
        }
    }

    fn s_of_u_complex(&self, u: Complex64) -> Complex64 {
        let (a, b) = (self.before, self.after);
        let root = (u * u * (self.duration * self.duration) + 4.0 * a * b).sqrt();
        let skew = u * (b - a);
        if skew.re >= 0.0 {
            u * (skew + root) / (2.0 * (1.0 + u * u))
        } else {
            2.0 * a * b * u / (root - skew)
        }
    }

    /// `g(u) = ds/du / sqrt((a + s)(b - s))`.
    fn weight(&self, u: f64) -> f64 {
        if u == 0.0 {
            return 1.0;
        }
        let (a, b) = (self.before, self.after);
        let s = self.s_of_u(u);
        // (a + s)(b - s) = s^2 / u^2 without the cancellation in b - s
        2.0 * s * s / (u * u * (2.0 * a * b + s * (b - a)))
    }

    fn weight_complex(&self, u: Complex64) -> Complex64 {
        let (a, b) = (self.before, self.after);
        let s = self.s_of_u_complex(u);
        2.0 * s * s / (u * u * (2.0 * a * b + s * (b - a)))
    }

    /// `u` at which the weight starts to vary for a lopsided path.
    fn u_scale(&self) -> f64 {
        (self.before.min(self.after) / self.before.max(self.after)).sqrt()
    }
}

/// Extent of one window in `u`, as magnitudes on each side of zero.
/// Infinity means the side runs to the endpoint of the slit-time interval.
#[derive(Debug, Clone, Copy, PartialEq)]
struct SideEnds {
    negative: f64,
    positive: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Side {
    Negative,
    Positive,
}

impl Side {
    fn sign(self) -> f64 {
        match self {
            Side::Negative => -1.0,
            Side::Positive => 1.0,
        }
    }
}

/// Panel edges from zero outward on one side, with the index of every
/// window end within them.
struct SideGrid {
    edges: Vec<f64>,
    end_index: Vec<usize>,
    ray_start: f64,
    ray_panels: usize,
    unbounded: Vec<bool>,
}

struct SlitTimeSum {
    map: SlitTimeMap,
    phi0: f64,
    settings: QuadratureSettings,
    prefactor: Complex64,
    // m / (2 hbar) and the legs, used only by the time-domain integrand
    slit_phase_scale: f64,
    legs: (f64, f64),
}

impl SlitTimeSum {
    fn max_width(&self, u: f64) -> f64 {
        0.125 * self.map.u_scale().max(u)
    }

    fn side_grid(&self, ends: &[f64]) -> SideGrid {
        let cap = self.settings.phase_step_cap;
        let largest_finite = ends.iter().copied().filter(|e| e.is_finite()).fold(0.0, f64::max);
        let real_axis_end = (REAL_AXIS_ZONES * PI / self.phi0)
            .sqrt()
            .max(self.map.u_scale())
            .max(largest_finite);
        let unbounded: Vec<bool> = ends.iter().map(|e| e.is_infinite()).collect();

        let mut edges = vec![0.0];
        let mut end_index = Vec::with_capacity(ends.len());
        let mut u = 0.0;
        for &end in ends {
            let target = if end.is_finite() { end } else { real_axis_end };
            while u < target {
                u = next_quadratic_level(u, self.phi0, cap, self.max_width(u), target);
                edges.push(u);
            }
            end_index.push(edges.len() - 1);
        }
        let ray_panels = if unbounded.iter().any(|&b| b) {
            self.ray_panel_count(real_axis_end)
        } else {
            0
        };
        SideGrid { edges, end_index, ray_start: real_axis_end, ray_panels, unbounded }
    }

    fn ray_geometry(&self, start: f64) -> (f64, f64) {
        let linear = SQRT_2 * self.phi0 * start;
        // phi0 r^2 + linear r = RAY_DECAY
        let length = 2.0 * RAY_DECAY
            / (linear + (linear * linear + 4.0 * self.phi0 * RAY_DECAY).sqrt());
        let decay_scale = (1.0 / self.phi0.sqrt()).min(1.0 / linear);
        let width = (0.5 * decay_scale).min(self.max_width(start));
        (length, width)
    }

    fn ray_panel_count(&self, start: f64) -> usize {
        let (length, width) = self.ray_geometry(start);
        (length / width).ceil() as usize
    }

    fn evaluate(&self, windows: &[SideEnds]) -> Result<Vec<TimeSumResult>> {
        let positive: Vec<f64> = windows.iter().map(|w| w.positive).collect();
        let negative: Vec<f64> = windows.iter().map(|w| w.negative).collect();
        let grids = [
            (Side::Positive, self.side_grid(&positive)),
            (Side::Negative, self.side_grid(&negative)),
        ];

        let panels_needed = |k: usize| -> usize {
            grids
                .iter()
                .map(|(_, g)| g.end_index[k] + if g.unbounded[k] { g.ray_panels } else { 0 })
                .sum()
        };
        let budget_panels = self.settings.max_nodes / NODES_PER_PANEL;
        if let Some(k) = (0..windows.len()).find(|&k| panels_needed(k) > budget_panels) {
            return Err(self.partial_estimate(&grids, k, panels_needed(k)));
        }

        let last = windows.len() - 1;
        let mut prefix: Vec<Vec<PanelSum>> = Vec::with_capacity(2);
        let mut rays: Vec<PanelSum> = Vec::with_capacity(2);
        for (side, grid) in &grids {
            let panels = self.side_panels(*side, &grid.edges[..=grid.end_index[last]]);
            let mut running = PanelSum::default();
            let mut at_ends = Vec::with_capacity(windows.len());
            let mut next = 0;
            for &index in &grid.end_index {
                while next < index {
                    running.add(panels[next]);
                    next += 1;
                }
                at_ends.push(running);
            }
            prefix.push(at_ends);
            rays.push(if grid.ray_panels > 0 {
                self.ray_tail(*side, grid.ray_start)
            } else {
                PanelSum::default()
            });
        }

        let rotation = match self.settings.domain {
            IntegrationDomain::Time => Complex64::new(1.0, 0.0),
            IntegrationDomain::Tangent => Complex64::from_polar(1.0, self.phi0),
        };
        let results = (0..windows.len())
            .map(|k| {
                let mut total = prefix[0][k];
                total.merge(&prefix[1][k]);
                for (side_index, (_, grid)) in grids.iter().enumerate() {
                    if grid.unbounded[k] {
                        total.merge(&rays[side_index]);
                    }
                }
                TimeSumResult {
                    amplitude: ComplexAmplitude::new(
                        self.prefactor * rotation * total.value,
                        AmplitudeUnit::Propagator1d,
                    ),
                    error_estimate: self.prefactor.norm() * total.error_estimate(),
                    nodes: panels_needed(k) * NODES_PER_PANEL,
                }
            })
            .collect();
        Ok(results)
    }

    fn side_panels(&self, side: Side, edges: &[f64]) -> Vec<PanelEstimate> {
        let sign = side.sign();
        match self.settings.domain {
            IntegrationDomain::Tangent => {
                let f = |u: f64| self.map.weight(u) * Complex64::from_polar(1.0, self.phi0 * u * u);
                integrate_panels(&f, edges, |u| sign * u)
            }
            IntegrationDomain::Time => {
                let (l1, l2) = self.legs;
                let (c1, c2) = (self.slit_phase_scale * l1 * l1, self.slit_phase_scale * l2 * l2);
                let tau = self.map.duration;
                let f = |t: f64| {
                    let rest = tau - t;
                    Complex64::from_polar(1.0 / (t * rest).sqrt(), c1 / t + c2 / rest)
                };
                let t_star = self.map.before;
                integrate_panels(&f, edges, |u| t_star + self.map.s_of_u(sign * u))
            }
        }
    }

    // Continues a side beyond `start` along u = start + r e^{i pi/4}, where
    // exp(i phi0 u^2) decays like exp(-phi0 r^2 - sqrt2 phi0 start r).
    fn ray_tail(&self, side: Side, start: f64) -> PanelSum {
        let direction = Complex64::from_polar(1.0, FRAC_PI_4);
        let sign = side.sign();
        let linear = SQRT_2 * self.phi0 * start;
        let base_phase = self.phi0 * start * start;
        let f = |r: f64| {
            let u = start + r * direction;
            let exponent = Complex64::new(-linear * r - self.phi0 * r * r, base_phase + linear * r);
            self.map.weight_complex(sign * u) * exponent.exp() * direction
        };
        let (length, width) = self.ray_geometry(start);
        let count = self.ray_panel_count(start);
        let mut sum = PanelSum::default();
        for i in 0..count {
            let lo = i as f64 * width;
            let hi = ((i + 1) as f64 * width).min(length);
            sum.add(gauss_kronrod_15(&f, lo, hi));
        }
        sum
    }

    fn partial_estimate(&self, grids: &[(Side, SideGrid); 2], k: usize, needed: usize) -> Error {
        let budget_panels = self.settings.max_nodes / NODES_PER_PANEL;
        let wanted = [grids[0].1.end_index[k], grids[1].1.end_index[k]];
        let first = wanted[0].min(budget_panels.div_ceil(2));
        let second = wanted[1].min(budget_panels - first);
        let first = wanted[0].min(budget_panels - second);
        let mut total = PanelSum::default();
        let mut tail_bound = 0.0;
        for ((side, grid), take) in grids.iter().zip([first, second]) {
            for panel in self.side_panels(*side, &grid.edges[..=take]) {
                total.add(panel);
            }
            let reached = grid.edges[take];
            if take < grid.end_index[k] || grid.unbounded[k] {
                tail_bound += self.tail_bound(side.sign() * reached);
            }
        }
        let rotation = match self.settings.domain {
            IntegrationDomain::Time => Complex64::new(1.0, 0.0),
            IntegrationDomain::Tangent => Complex64::from_polar(1.0, self.phi0),
        };
        Error::BudgetExceeded {
            budget: self.settings.max_nodes,
            needed: needed * NODES_PER_PANEL,
            estimate: self.prefactor * rotation * total.value,
            error_bound: self.prefactor.norm() * (total.error_estimate() + tail_bound),
        }
    }

    // |integral of g exp(i phi0 u^2) from |u| to the end| by the second mean
    // value theorem applied to g / u, which decreases beyond the origin.
    fn tail_bound(&self, u: f64) -> f64 {
        if u == 0.0 {
            return f64::INFINITY;
        }
        SQRT_2 * self.map.weight(u) / (self.phi0 * u.abs())
    }
}

fn integrate_panels<F, M>(f: &F, edges: &[f64], to_variable: M) -> Vec<PanelEstimate>
where
    F: Fn(f64) -> Complex64 + Sync,
    M: Fn(f64) -> f64 + Sync,
{
    let panel = |pair: &[f64]| {
        let x0 = to_variable(pair[0]);
        let x1 = to_variable(pair[1]);
        gauss_kronrod_15(f, x0.min(x1), x0.max(x1))
    };
    #[cfg(feature = "parallel")]
    {
        edges.par_windows(2).map(panel).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        edges.windows(2).map(panel).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::faddeeva::{timesum_closed_form, timesum_closed_form_relative};
    use crate::propagator::two_step_amplitude;
    use approx::assert_relative_eq;

    const E: ParticleSpecies = ParticleSpecies::ELECTRON;

    fn lopsided() -> SlitTimeMap {
        SlitTimeMap { before: 0.2, after: 0.8, duration: 1.0 }
    }

    #[test]
    fn panel_sums_are_linear_in_the_integrand() {
        let f = |x: f64| Complex64::from_polar(1.0 / (1.0 + x * x), 40.0 * x * x);
        let factor = Complex64::new(-0.3, 2.5);
        let scaled = |x: f64| factor * f(x);
        let edges: Vec<f64> = (0..=40).map(|i| -2.0 + 0.1 * i as f64).collect();
        let plain = integrate_panels(&f, &edges, |x| x);
        let times = integrate_panels(&scaled, &edges, |x| x);
        for (a, b) in plain.iter().zip(&times) {
            let bound = 64.0 * f64::EPSILON * factor.norm() * a.abs_value;
            assert!((b.value - factor * a.value).norm() <= bound);
        }
    }

    #[test]
    fn u_and_s_are_inverse() {
        for map in [SlitTimeMap::symmetric_unit(), lopsided(), SlitTimeMap { before: 0.9, after: 0.1, duration: 1.0 }] {
            for u in [-1e4, -30.0, -1.0, -0.05, 0.0, 1e-3, 0.7, 5.0, 2e3] {
                let s = map.s_of_u(u);
                assert!(s > -map.before && s < map.after);
                // b - s loses about u^2 eps
                assert_relative_eq!(map.u_of_s(s), u, max_relative = 1e-7, epsilon = 1e-300);
            }
        }
    }

    #[test]
    fn weight_is_the_jacobian_over_the_square_root() {
        let map = lopsided();
        for u in [-3.0f64, -0.4, 0.1, 0.9, 12.0] {
            let h = 1e-6 * u.abs();
            let ds = (map.s_of_u(u + h) - map.s_of_u(u - h)) / (2.0 * h);
            let s = map.s_of_u(u);
            let expected = ds / ((map.before + s) * (map.after - s)).sqrt();
            assert_relative_eq!(map.weight(u), expected, max_relative = 1e-7);
        }
        let sym = SlitTimeMap::symmetric_unit();
        for u in [-7.0, 0.0, 0.3, 100.0] {
            assert_relative_eq!(sym.weight(u), 1.0 / (1.0 + u * u), max_relative = 1e-14);
        }
    }

    #[test]
    fn weight_tails_follow_the_side_durations() {
        let map = lopsided();
        let u = 1e5;
        assert_relative_eq!(map.weight(u) * u * u, 2.0 * 0.8, max_relative = 1e-4);
        assert_relative_eq!(map.weight(-u) * u * u, 2.0 * 0.2, max_relative = 1e-4);
    }

    #[test]
    fn complex_weight_continues_the_real_one() {
        let map = lopsided();
        for u in [-2.0, 0.3, 4.0] {
            let z = map.weight_complex(Complex64::new(u, 0.0));
            assert_relative_eq!(z.re, map.weight(u), max_relative = 1e-13);
            assert!(z.im.abs() < 1e-15);
        }
    }

    #[test]
    fn full_sum_matches_closed_form() {
        for phi0 in [0.5, 3.0, 50.0, 200.0, 1e4, 2.9e5] {
            let exact = timesum_closed_form(phi0, E).unwrap().value;
            let got = full_time_sum(phi0, DEFAULT_MAX_NODES, E).unwrap();
            let rel = (got.amplitude.value - exact).norm() / exact.norm();
            assert!(rel <= 1e-9, "phi0={phi0} rel={rel}");
            assert!(got.error_estimate < 1e-6 * exact.norm());
        }
    }

    #[test]
    fn symmetric_sides_are_mirror_images() {
        let sum = SlitTimeSum {
            map: SlitTimeMap::symmetric_unit(),
            phi0: 37.0,
            settings: QuadratureSettings { domain: IntegrationDomain::Tangent, ..Default::default() },
            prefactor: Complex64::new(1.0, 0.0),
            slit_phase_scale: 0.0,
            legs: (0.0, 0.0),
        };
        let grid = sum.side_grid(&[6.0]);
        let total = |side| sum.side_panels(side, &grid.edges).iter().fold(Complex64::default(), |acc, p| acc + p.value);
        assert_eq!(total(Side::Positive), total(Side::Negative));
        assert_eq!(sum.ray_tail(Side::Positive, 2.0).value, sum.ray_tail(Side::Negative, 2.0).value);
    }

    #[test]
    fn tiny_window_takes_the_stationary_argument() {
        let path = TwoLegPath::new(3.37e-6, 3.5e-6, 6.72e-13).unwrap();
        let t_star = stationary_slit_time(path);
        let expected = two_step_amplitude(path, t_star, E).unwrap().argument();
        let got = time_summed_amplitude(path, &TimeSumConfig::new(1e-20), E).unwrap();
        assert!((got.argument() - expected).abs() < 1e-6);
    }

    #[test]
    fn endpoint_windows_are_refused_in_time() {
        let path = TwoLegPath::symmetric(3.37e-6, 6.72e-13).unwrap();
        let full = TimeSumConfig::new(6.72e-13);
        assert!(matches!(time_summed_amplitude(path, &full, E), Err(Error::Singularity(_))));
        let too_wide = TimeSumConfig::new(7e-13);
        assert!(matches!(time_summed_amplitude(path, &too_wide, E), Err(Error::Domain(_))));
        let tangent = TimeSumConfig { domain: IntegrationDomain::Tangent, ..full };
        assert!(time_summed_amplitude(path, &tangent, E).is_ok());
    }

    #[test]
    fn config_invariants() {
        let path = TwoLegPath::symmetric(1e-6, 1e-12).unwrap();
        for bad in [
            TimeSumConfig::new(0.0),
            TimeSumConfig { max_nodes: 15, ..TimeSumConfig::new(1e-13) },
            TimeSumConfig { phase_step_cap: 0.0, ..TimeSumConfig::new(1e-13) },
            TimeSumConfig { phase_step_cap: 1.6, ..TimeSumConfig::new(1e-13) },
        ] {
            assert!(matches!(time_summed_amplitude(path, &bad, E), Err(Error::Domain(_))));
        }
    }

    #[test]
    fn lopsided_full_integral_depends_only_on_phi0() {
        let phi0 = 1.6e5;
        let sum = SlitTimeSum {
            map: lopsided(),
            phi0,
            settings: QuadratureSettings { domain: IntegrationDomain::Tangent, ..Default::default() },
            prefactor: Complex64::new(1.0, 0.0),
            slit_phase_scale: 0.0,
            legs: (0.0, 0.0),
        };
        let ends = SideEnds { negative: f64::INFINITY, positive: f64::INFINITY };
        let got = sum.evaluate(&[ends]).unwrap()[0].amplitude.value;
        let exact = timesum_closed_form_relative(phi0).unwrap();
        assert!((got - exact).norm() <= 1e-9 * exact.norm(), "{got} {exact}");
    }

    #[test]
    fn budget_exhaustion_reports_a_bounded_estimate() {
        let phi0 = 200.0;
        let exact = timesum_closed_form(phi0, E).unwrap().value;
        match full_time_sum(phi0, 600, E) {
            Err(Error::BudgetExceeded { budget, needed, estimate, error_bound }) => {
                assert_eq!(budget, 600);
                assert!(needed > budget);
                assert!((estimate - exact).norm() <= error_bound);
                assert!(error_bound < exact.norm());
            }
            other => panic!("expected a budget error, got {other:?}"),
        }
    }

    #[test]
    fn study_rejects_unordered_windows() {
        let path = TwoLegPath::symmetric(3.37e-6, 6.72e-13).unwrap();
        let s = QuadratureSettings::default();
        assert!(convergence_study(path, &[], s, E).is_err());
        assert!(convergence_study(path, &[2e-14, 1e-14], s, E).is_err());
        assert!(convergence_study(path, &[1e-14, 1e-14], s, E).is_err());
    }

    #[test]
    fn closed_form_relative_is_consistent() {
        let phi0 = 123.0;
        let a = timesum_closed_form(phi0, E).unwrap().value;
        let r = timesum_closed_form_relative(phi0).unwrap();
        assert_relative_eq!((a / time_sum_prefactor(E) - r).norm(), 0.0, epsilon = 1e-12);
    }
}
