//! Configuration, presets and serialization for the `matterwave` command.

pub mod config;
pub mod error;
pub mod presets;
pub mod results;
pub mod run;

pub use config::{ConvergeConfig, ExperimentConfig, Format, OutputConfig, PacketConfig, PhaseDiffConfig};
pub use error::CliError;
pub use results::{CsvTable, ResultEnvelope};
pub use run::{render, run_converge, run_faddeeva, run_packet, run_pattern, run_phasediff};
