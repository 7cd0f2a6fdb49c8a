//! JSON run configurations. Every dimensional field carries its SI unit in
//! its name.

use std::f64::consts::FRAC_PI_2;

use matterwave::doubleslit::{screen_grid, Method, SlitGeometry, Timing};
use matterwave::timesum::{
    IntegrationDomain, QuadratureSettings, TimeSumConfig, DEFAULT_MAX_NODES, DEFAULT_PHASE_STEP_CAP,
    MIN_NODES,
};
use matterwave::wavepacket::{WavePacketParams, MAX_RELATIVE_WIDTH};
use matterwave::ParticleSpecies;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

/// Parses `text` as a config of type `T`, reporting the field path of the
/// first offending value.
pub fn parse<T: DeserializeOwned>(text: &str) -> Result<T, CliError> {
    let mut deserializer = serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(&mut deserializer).map_err(|err| {
        let path = match err.path().to_string().as_str() {
            "." => "<root>".to_string(),
            path => path.to_string(),
        };
        CliError::Validation { path, message: err.into_inner().to_string() }
    })
}

fn invalid(path: impl Into<String>, message: impl Into<String>) -> CliError {
    CliError::Validation { path: path.into(), message: message.into() }
}

fn positive(value: f64, path: &str) -> Result<f64, CliError> {
    if value.is_finite() && value > 0.0 {
        Ok(value)
    } else {
        Err(invalid(path, format!("must be positive and finite, got {value}")))
    }
}

fn finite(value: f64, path: &str) -> Result<f64, CliError> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(invalid(path, format!("must be finite, got {value}")))
    }
}

fn species(name: &str, path: &str) -> Result<ParticleSpecies, CliError> {
    ParticleSpecies::by_name(name)
        .ok_or_else(|| invalid(path, format!("unknown species `{name}`, expected electron, proton or neutron")))
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    #[default]
    Json,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputConfig {
    #[serde(default)]
    pub format: Format,
    /// Standard output when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub path: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeometryConfig {
    pub source_y_m: f64,
    pub slit1_y_m: f64,
    pub slit2_y_m: f64,
    pub slit1_width_m: f64,
    pub slit2_width_m: f64,
    pub dist_source_slits_m: f64,
    pub dist_slits_screen_m: f64,
}

impl GeometryConfig {
    fn resolve(&self, path: &str) -> Result<SlitGeometry, CliError> {
        let field = |name: &str| format!("{path}.{name}");
        let geometry = SlitGeometry {
            source_y: finite(self.source_y_m, &field("source_y_m"))?,
            slit1_y: finite(self.slit1_y_m, &field("slit1_y_m"))?,
            slit2_y: finite(self.slit2_y_m, &field("slit2_y_m"))?,
            slit1_width: positive(self.slit1_width_m, &field("slit1_width_m"))?,
            slit2_width: positive(self.slit2_width_m, &field("slit2_width_m"))?,
            dist_source_slits: positive(self.dist_source_slits_m, &field("dist_source_slits_m"))?,
            dist_slits_screen: positive(self.dist_slits_screen_m, &field("dist_slits_screen_m"))?,
        };
        geometry.validate().map_err(|err| invalid(path, err.to_string()))?;
        Ok(geometry)
    }
}

impl From<SlitGeometry> for GeometryConfig {
    fn from(g: SlitGeometry) -> Self {
        GeometryConfig {
            source_y_m: g.source_y,
            slit1_y_m: g.slit1_y,
            slit2_y_m: g.slit2_y,
            slit1_width_m: g.slit1_width,
            slit2_width_m: g.slit2_width,
            dist_source_slits_m: g.dist_source_slits,
            dist_slits_screen_m: g.dist_slits_screen,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "convention", rename_all = "snake_case", deny_unknown_fields)]
pub enum TimingConfig {
    /// Every path takes `duration_s`.
    EqualTotalTime { duration_s: f64 },
    /// Every path moves at `speed_m_per_s`.
    EqualSpeed { speed_m_per_s: f64 },
}

impl TimingConfig {
    fn resolve(&self, path: &str) -> Result<Timing, CliError> {
        Ok(match *self {
            TimingConfig::EqualTotalTime { duration_s } => Timing::EqualTotalTime {
                duration: positive(duration_s, &format!("{path}.duration_s"))?,
            },
            TimingConfig::EqualSpeed { speed_m_per_s } => Timing::EqualSpeed {
                speed: positive(speed_m_per_s, &format!("{path}.speed_m_per_s"))?,
            },
        })
    }
}

impl From<Timing> for TimingConfig {
    fn from(t: Timing) -> Self {
        match t {
            Timing::EqualTotalTime { duration } => TimingConfig::EqualTotalTime { duration_s: duration },
            Timing::EqualSpeed { speed } => TimingConfig::EqualSpeed { speed_m_per_s: speed },
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MethodTag {
    Intuitive,
    StationaryPhase,
    TimeSummed,
}

impl From<MethodTag> for Method {
    fn from(tag: MethodTag) -> Self {
        match tag {
            MethodTag::Intuitive => Method::Intuitive,
            MethodTag::StationaryPhase => Method::StationaryPhase,
            MethodTag::TimeSummed => Method::TimeSummed,
        }
    }
}

impl From<Method> for MethodTag {
    fn from(method: Method) -> Self {
        match method {
            Method::Intuitive => MethodTag::Intuitive,
            Method::StationaryPhase => MethodTag::StationaryPhase,
            Method::TimeSummed => MethodTag::TimeSummed,
        }
    }
}

/// Evenly spaced points with both ends included, or an explicit list.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum GridSpec {
    Grid { min_m: f64, max_m: f64, count: usize },
    Points { points_m: Vec<f64> },
}

impl GridSpec {
    pub fn resolve(&self, path: &str) -> Result<Vec<f64>, CliError> {
        match self {
            GridSpec::Grid { min_m, max_m, count } => {
                finite(*min_m, &format!("{path}.min_m"))?;
                finite(*max_m, &format!("{path}.max_m"))?;
                if *count < 2 {
                    return Err(invalid(format!("{path}.count"), format!("must be at least 2, got {count}")));
                }
                if max_m <= min_m {
                    return Err(invalid(format!("{path}.max_m"), format!("must exceed min_m = {min_m}")));
                }
                screen_grid(*min_m, *max_m, *count).map_err(|err| invalid(path, err.to_string()))
            }
            GridSpec::Points { points_m } => {
                if points_m.is_empty() {
                    return Err(invalid(format!("{path}.points_m"), "must not be empty"));
                }
                for (i, &y) in points_m.iter().enumerate() {
                    finite(y, &format!("{path}.points_m[{i}]"))?;
                }
                Ok(points_m.clone())
            }
        }
    }

    /// The grid spec that regenerates `points`, if they came from an even grid.
    pub fn from_points(points: &[f64]) -> Self {
        if points.len() >= 2 {
            let (min_m, max_m) = (points[0], points[points.len() - 1]);
            if screen_grid(min_m, max_m, points.len()).ok().as_deref() == Some(points) {
                return GridSpec::Grid { min_m, max_m, count: points.len() };
            }
        }
        GridSpec::Points { points_m: points.to_vec() }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DomainTag {
    #[default]
    Time,
    Tangent,
}

impl From<DomainTag> for IntegrationDomain {
    fn from(tag: DomainTag) -> Self {
        match tag {
            DomainTag::Time => IntegrationDomain::Time,
            DomainTag::Tangent => IntegrationDomain::Tangent,
        }
    }
}

impl From<IntegrationDomain> for DomainTag {
    fn from(domain: IntegrationDomain) -> Self {
        match domain {
            IntegrationDomain::Time => DomainTag::Time,
            IntegrationDomain::Tangent => DomainTag::Tangent,
        }
    }
}

fn default_max_nodes() -> usize {
    DEFAULT_MAX_NODES
}

fn default_phase_step_cap() -> f64 {
    DEFAULT_PHASE_STEP_CAP
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuadratureConfig {
    #[serde(default = "default_max_nodes")]
    pub max_nodes: usize,
    #[serde(default)]
    pub domain: DomainTag,
    #[serde(default = "default_phase_step_cap")]
    pub phase_step_cap_rad: f64,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureSettings::default().into()
    }
}

impl QuadratureConfig {
    fn resolve(&self, path: &str) -> Result<QuadratureSettings, CliError> {
        if self.max_nodes < MIN_NODES {
            return Err(invalid(
                format!("{path}.max_nodes"),
                format!("must be at least {MIN_NODES}, got {}", self.max_nodes),
            ));
        }
        let cap = self.phase_step_cap_rad;
        if !(cap > 0.0 && cap <= FRAC_PI_2) {
            return Err(invalid(format!("{path}.phase_step_cap_rad"), format!("must lie in (0, pi/2], got {cap}")));
        }
        Ok(QuadratureSettings { max_nodes: self.max_nodes, domain: self.domain.into(), phase_step_cap: cap })
    }
}

impl From<QuadratureSettings> for QuadratureConfig {
    fn from(s: QuadratureSettings) -> Self {
        QuadratureConfig { max_nodes: s.max_nodes, domain: s.domain.into(), phase_step_cap_rad: s.phase_step_cap }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TimeSumSettings {
    /// Width of the slit-time window centred on the stationary time.
    pub window_s: f64,
    #[serde(default = "default_max_nodes")]
    pub max_nodes: usize,
    #[serde(default)]
    pub domain: DomainTag,
    #[serde(default = "default_phase_step_cap")]
    pub phase_step_cap_rad: f64,
}

impl TimeSumSettings {
    fn quadrature(&self) -> QuadratureConfig {
        QuadratureConfig {
            max_nodes: self.max_nodes,
            domain: self.domain,
            phase_step_cap_rad: self.phase_step_cap_rad,
        }
    }
}

impl From<TimeSumConfig> for TimeSumSettings {
    fn from(c: TimeSumConfig) -> Self {
        TimeSumSettings {
            window_s: c.window,
            max_nodes: c.max_nodes,
            domain: c.domain.into(),
            phase_step_cap_rad: c.phase_step_cap,
        }
    }
}

fn default_samples_per_slit() -> usize {
    32
}

/// A screen pattern run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub species: String,
    pub geometry: GeometryConfig,
    pub timing: TimingConfig,
    pub methods: Vec<MethodTag>,
    pub screen: GridSpec,
    #[serde(default = "default_samples_per_slit")]
    pub samples_per_slit: usize,
    /// Required exactly when `methods` contains `time_summed`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timesum: Option<TimeSumSettings>,
    /// Screen points for the time-summed method; `screen` when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timesum_screen: Option<GridSpec>,
    #[serde(default)]
    pub output: OutputConfig,
}

/// An [`ExperimentConfig`] in library types, checked field by field.
#[derive(Debug, Clone, PartialEq)]
pub struct PatternPlan {
    pub species: ParticleSpecies,
    pub geometry: SlitGeometry,
    pub timing: Timing,
    /// Each requested method with its screen points.
    pub runs: Vec<(Method, Vec<f64>)>,
    pub samples_per_slit: usize,
    pub timesum: Option<TimeSumConfig>,
}

impl ExperimentConfig {
    pub fn resolve(&self) -> Result<PatternPlan, CliError> {
        let species = species(&self.species, "species")?;
        let geometry = self.geometry.resolve("geometry")?;
        let timing = self.timing.resolve("timing")?;
        if self.methods.is_empty() {
            return Err(invalid("methods", "at least one method is required"));
        }
        for (i, method) in self.methods.iter().enumerate() {
            if self.methods[..i].contains(method) {
                return Err(invalid(format!("methods[{i}]"), "listed twice"));
            }
        }
        let screen = self.screen.resolve("screen")?;
        if self.samples_per_slit == 0 {
            return Err(invalid("samples_per_slit", "must be at least 1"));
        }
        let wants_timesum = self.methods.contains(&MethodTag::TimeSummed);
        let timesum = match (&self.timesum, wants_timesum) {
            (None, true) => return Err(invalid("timesum", "required by the time_summed method")),
            (Some(_), false) => return Err(invalid("timesum", "given but time_summed is not requested")),
            (None, false) => None,
            (Some(settings), true) => {
                let Timing::EqualTotalTime { duration } = timing else {
                    return Err(invalid("timing", "the time_summed method needs equal_total_time"));
                };
                let window = positive(settings.window_s, "timesum.window_s")?;
                if window > duration {
                    return Err(invalid(
                        "timesum.window_s",
                        format!("{window} s exceeds the total time {duration} s"),
                    ));
                }
                let quadrature = settings.quadrature().resolve("timesum")?;
                let config = TimeSumConfig::with_settings(window, quadrature);
                config.validate().map_err(|err| invalid("timesum", err.to_string()))?;
                Some(config)
            }
        };
        let timesum_screen = match (&self.timesum_screen, wants_timesum) {
            (Some(_), false) => {
                return Err(invalid("timesum_screen", "given but time_summed is not requested"))
            }
            (Some(spec), true) => Some(spec.resolve("timesum_screen")?),
            (None, _) => None,
        };
        let runs = self
            .methods
            .iter()
            .map(|&tag| {
                let points = match (tag, &timesum_screen) {
                    (MethodTag::TimeSummed, Some(points)) => points.clone(),
                    _ => screen.clone(),
                };
                (Method::from(tag), points)
            })
            .collect();
        Ok(PatternPlan {
            species,
            geometry,
            timing,
            runs,
            samples_per_slit: self.samples_per_slit,
            timesum,
        })
    }
}

/// Windows of a convergence study.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum WindowSpec {
    /// `count` windows in geometric progression from `first_s` to `last_s`.
    Geometric { first_s: f64, last_s: f64, count: usize },
    List { windows_s: Vec<f64> },
}

/// A slit-time convergence study on one two-leg path.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConvergeConfig {
    pub species: String,
    pub source_leg_m: f64,
    pub screen_leg_m: f64,
    pub duration_s: f64,
    pub windows: WindowSpec,
    #[serde(default)]
    pub quadrature: QuadratureConfig,
    #[serde(default)]
    pub output: OutputConfig,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConvergePlan {
    pub species: ParticleSpecies,
    pub path: matterwave::TwoLegPath,
    pub windows: Vec<f64>,
    pub settings: QuadratureSettings,
}

impl ConvergeConfig {
    pub fn resolve(&self) -> Result<ConvergePlan, CliError> {
        let species = species(&self.species, "species")?;
        let first = positive(self.source_leg_m, "source_leg_m")?;
        let second = positive(self.screen_leg_m, "screen_leg_m")?;
        let duration = positive(self.duration_s, "duration_s")?;
        let path = matterwave::TwoLegPath::new(first, second, duration)
            .map_err(|err| invalid("duration_s", err.to_string()))?;
        let windows = match &self.windows {
            WindowSpec::Geometric { first_s, last_s, count } => {
                positive(*first_s, "windows.first_s")?;
                positive(*last_s, "windows.last_s")?;
                if *count < 2 {
                    return Err(invalid("windows.count", format!("must be at least 2, got {count}")));
                }
                if last_s <= first_s {
                    return Err(invalid("windows.last_s", format!("must exceed first_s = {first_s}")));
                }
                matterwave::presets::geometric_windows(*first_s, *last_s, *count)
            }
            WindowSpec::List { windows_s } => {
                if windows_s.is_empty() {
                    return Err(invalid("windows.windows_s", "must not be empty"));
                }
                for (i, &w) in windows_s.iter().enumerate() {
                    positive(w, &format!("windows.windows_s[{i}]"))?;
                    if i > 0 && w <= windows_s[i - 1] {
                        return Err(invalid(format!("windows.windows_s[{i}]"), "windows must be strictly increasing"));
                    }
                }
                windows_s.clone()
            }
        };
        if let Some(i) = windows.iter().position(|&w| w > duration) {
            return Err(invalid(
                "windows",
                format!("window {} s (index {i}) exceeds the duration {duration} s", windows[i]),
            ));
        }
        let settings = self.quadrature.resolve("quadrature")?;
        Ok(ConvergePlan { species, path, windows, settings })
    }
}

/// One value, a list, or an inclusive evenly spaced range.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Sweep {
    Value(f64),
    List(Vec<f64>),
    Range { min: f64, max: f64, count: usize },
}

impl Sweep {
    fn resolve(&self, path: &str) -> Result<Vec<f64>, CliError> {
        let values = match self {
            Sweep::Value(v) => vec![*v],
            Sweep::List(values) => values.clone(),
            Sweep::Range { min, max, count } => {
                if *count < 2 {
                    return Err(invalid(format!("{path}.count"), format!("must be at least 2, got {count}")));
                }
                if !(min.is_finite() && max.is_finite() && max > min) {
                    return Err(invalid(path, format!("needs finite min < max, got [{min}, {max}]")));
                }
                screen_grid(*min, *max, *count).map_err(|err| invalid(path, err.to_string()))?
            }
        };
        if values.is_empty() {
            return Err(invalid(path, "must not be empty"));
        }
        for (i, &v) in values.iter().enumerate() {
            positive(v, &format!("{path}[{i}]"))?;
        }
        Ok(values)
    }
}

/// Near-field phase differences over a grid of separations, distances and
/// durations.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PhaseDiffConfig {
    pub species: String,
    pub separation_m: Sweep,
    pub distance_m: Sweep,
    pub duration_s: Sweep,
    #[serde(default)]
    pub output: OutputConfig,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PhaseDiffPlan {
    pub species: ParticleSpecies,
    pub separations: Vec<f64>,
    pub distances: Vec<f64>,
    pub durations: Vec<f64>,
}

impl PhaseDiffConfig {
    pub fn resolve(&self) -> Result<PhaseDiffPlan, CliError> {
        Ok(PhaseDiffPlan {
            species: species(&self.species, "species")?,
            separations: self.separation_m.resolve("separation_m")?,
            distances: self.distance_m.resolve("distance_m")?,
            durations: self.duration_s.resolve("duration_s")?,
        })
    }
}

/// Snapshots of a Gaussian packet.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PacketConfig {
    pub species: String,
    pub speed_m_per_s: f64,
    /// Momentum width as a fraction of the carrier wavenumber.
    pub relative_width: f64,
    pub times_s: Vec<f64>,
    pub positions: GridSpec,
    #[serde(default)]
    pub output: OutputConfig,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PacketPlan {
    pub params: WavePacketParams,
    pub times: Vec<f64>,
    pub positions: Vec<f64>,
}

impl PacketConfig {
    pub fn resolve(&self) -> Result<PacketPlan, CliError> {
        let species = species(&self.species, "species")?;
        let speed = positive(self.speed_m_per_s, "speed_m_per_s")?;
        let width = positive(self.relative_width, "relative_width")?;
        if width >= MAX_RELATIVE_WIDTH {
            return Err(invalid("relative_width", format!("must be below {MAX_RELATIVE_WIDTH}, got {width}")));
        }
        let params = WavePacketParams::from_speed(species, speed, width)
            .map_err(|err| invalid("relative_width", err.to_string()))?;
        if self.times_s.is_empty() {
            return Err(invalid("times_s", "must not be empty"));
        }
        let limit = params.spreading_time();
        for (i, &t) in self.times_s.iter().enumerate() {
            finite(t, &format!("times_s[{i}]"))?;
            if t.abs() > limit {
                return Err(invalid(
                    format!("times_s[{i}]"),
                    format!("{t:e} s exceeds the spreading time {limit:e} s"),
                ));
            }
        }
        let positions = self.positions.resolve("positions")?;
        Ok(PacketPlan { params, times: self.times_s.clone(), positions })
    }
}

/// Configs that carry an output section.
pub trait HasOutput {
    fn output_mut(&mut self) -> &mut OutputConfig;
}

macro_rules! has_output {
    ($($ty:ty),*) => {$(
        impl HasOutput for $ty {
            fn output_mut(&mut self) -> &mut OutputConfig {
                &mut self.output
            }
        }
    )*};
}

has_output!(ExperimentConfig, ConvergeConfig, PhaseDiffConfig, PacketConfig);
