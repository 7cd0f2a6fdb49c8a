//! Built-in configurations, one set per subcommand.

use matterwave::presets;

use crate::config::{
    ConvergeConfig, ExperimentConfig, GridSpec, OutputConfig, PacketConfig, PhaseDiffConfig,
    QuadratureConfig, Sweep, WindowSpec,
};
use crate::error::CliError;

pub const PATTERN_PRESETS: [&str; 2] = ["fig6", "far_field"];
pub const CONVERGE_PRESETS: [&str; 1] = ["fig4"];
pub const PHASEDIFF_PRESETS: [&str; 1] = ["fig6"];
pub const PACKET_PRESETS: [&str; 1] = ["fig2"];

fn unknown(command: &'static str, name: &str, available: &[&str]) -> CliError {
    CliError::UnknownPreset { command, name: name.to_string(), available: available.join(", ") }
}

pub fn pattern(name: &str) -> Result<ExperimentConfig, CliError> {
    let preset = match name {
        "fig6" => presets::fig6(),
        "far_field" => presets::far_field(),
        _ => return Err(unknown("pattern", name, &PATTERN_PRESETS)),
    };
    let timesum_screen = (preset.timesum_screen != preset.screen).then(|| GridSpec::from_points(&preset.timesum_screen));
    Ok(ExperimentConfig {
        species: "electron".into(),
        geometry: preset.geometry.into(),
        timing: preset.timing.into(),
        methods: preset.methods.iter().map(|&m| m.into()).collect(),
        screen: GridSpec::from_points(&preset.screen),
        samples_per_slit: preset.samples_per_slit,
        timesum: preset.timesum.map(Into::into),
        timesum_screen,
        output: OutputConfig::default(),
    })
}

pub fn converge(name: &str) -> Result<ConvergeConfig, CliError> {
    if name != "fig4" {
        return Err(unknown("converge", name, &CONVERGE_PRESETS));
    }
    let preset = presets::fig4();
    let windows = &preset.windows;
    Ok(ConvergeConfig {
        species: "electron".into(),
        source_leg_m: preset.path.source_leg(),
        screen_leg_m: preset.path.screen_leg(),
        duration_s: preset.path.duration(),
        windows: WindowSpec::Geometric {
            first_s: windows[0],
            last_s: windows[windows.len() - 1],
            count: windows.len(),
        },
        quadrature: QuadratureConfig::from(preset.settings),
        output: OutputConfig::default(),
    })
}

pub fn phasediff(name: &str) -> Result<PhaseDiffConfig, CliError> {
    if name != "fig6" {
        return Err(unknown("phasediff", name, &PHASEDIFF_PRESETS));
    }
    let preset = presets::fig6();
    let duration = match preset.timing {
        matterwave::doubleslit::Timing::EqualTotalTime { duration } => duration,
        matterwave::doubleslit::Timing::EqualSpeed { .. } => unreachable!("fig6 fixes the total time"),
    };
    Ok(PhaseDiffConfig {
        species: "electron".into(),
        separation_m: Sweep::Value(preset.geometry.separation()),
        distance_m: Sweep::Value(preset.geometry.dist_source_slits),
        duration_s: Sweep::Value(duration),
        output: OutputConfig::default(),
    })
}

pub fn packet(name: &str) -> Result<PacketConfig, CliError> {
    if name != "fig2" {
        return Err(unknown("packet", name, &PACKET_PRESETS));
    }
    let preset = presets::fig2();
    Ok(PacketConfig {
        species: "electron".into(),
        speed_m_per_s: presets::STRAIGHT_PATH_SPEED,
        relative_width: presets::PACKET_RELATIVE_WIDTH,
        times_s: preset.times,
        positions: GridSpec::from_points(&preset.positions),
        output: OutputConfig::default(),
    })
}
