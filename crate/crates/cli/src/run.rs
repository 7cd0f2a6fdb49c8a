//! One function per subcommand, each turning a config into an envelope.

use matterwave::doubleslit::{discrepancy_report, pattern, QuadratureStats};
use matterwave::faddeeva::{faddeeva_w, region, time_sum_prefactor, timesum_closed_form, Region};
use matterwave::kinematics::{HBAR, PLANCK};
use matterwave::propagator::{stationary_phase, stationary_slit_time};
use matterwave::timesum::convergence_study;
use matterwave::wavepacket::{group_velocity, packet_amplitude, phase_velocity};
use matterwave::ParticleSpecies;
use num_complex::Complex64;
use serde::Serialize;

use crate::config::{ConvergeConfig, ExperimentConfig, Format, PacketConfig, PhaseDiffConfig};
use crate::error::CliError;
use crate::results::{
    Constants, ConvergeResults, ConvergeRow, CsvTable, FaddeevaArgs, FaddeevaResults, PacketResults,
    PacketRow, PatternRecord, PatternResults, PhaseDiffResults, PhaseDiffRow, Provenance,
    QuadratureRecord, ResultEnvelope,
};

pub const SOFTWARE: &str = env!("CARGO_PKG_NAME");
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

fn provenance(species: ParticleSpecies, quadrature: Option<QuadratureRecord>) -> Provenance {
    Provenance {
        software: SOFTWARE.to_string(),
        software_version: VERSION.to_string(),
        constants: Constants { hbar_j_s: HBAR, planck_j_s: PLANCK, particle_mass_kg: species.mass() },
        quadrature,
    }
}

fn envelope<C, R>(command: &str, config: C, results: R, provenance: Provenance) -> ResultEnvelope<C, R> {
    ResultEnvelope { command: command.to_string(), config, results, provenance }
}

pub fn run_pattern(config: &ExperimentConfig) -> Result<ResultEnvelope<ExperimentConfig, PatternResults>, CliError> {
    let plan = config.resolve()?;
    let mut patterns = Vec::with_capacity(plan.runs.len());
    let mut totals: Option<QuadratureStats> = None;
    for (method, points) in &plan.runs {
        let p = pattern(
            &plan.geometry,
            plan.timing,
            points,
            *method,
            plan.samples_per_slit,
            plan.species,
            plan.timesum.as_ref().filter(|_| *method == matterwave::doubleslit::Method::TimeSummed),
        )?;
        if let Some(stats) = p.quadrature {
            let sum = totals.get_or_insert_with(QuadratureStats::default);
            sum.nodes += stats.nodes;
            sum.max_error_estimate = sum.max_error_estimate.max(stats.max_error_estimate);
        }
        patterns.push(PatternRecord {
            method: (*method).into(),
            screen_y_m: p.screen_y,
            probability: p.probability,
            peak_intensity: p.peak_intensity,
            quadrature: p.quadrature.map(Into::into),
        });
    }
    let provenance = provenance(plan.species, totals.map(Into::into));
    Ok(envelope("pattern", config.clone(), PatternResults { patterns }, provenance))
}

pub fn run_converge(config: &ConvergeConfig) -> Result<ResultEnvelope<ConvergeConfig, ConvergeResults>, CliError> {
    let plan = config.resolve()?;
    let series = convergence_study(plan.path, &plan.windows, plan.settings, plan.species)?;
    let prefactor = time_sum_prefactor(plan.species);
    let phi0 = stationary_phase(plan.path, plan.species).raw();
    let closed_form = timesum_closed_form(phi0, plan.species)?.value;
    let rows: Vec<ConvergeRow> = (0..series.window_values.len())
        .map(|i| {
            let amplitude = series.amplitudes[i];
            let normalized = amplitude.relative_to(prefactor);
            ConvergeRow {
                window_s: series.window_values[i],
                amplitude_re: amplitude.value.re,
                amplitude_im: amplitude.value.im,
                normalized_re: normalized.value.re,
                normalized_im: normalized.value.im,
                normalized_argument_rad: normalized.argument(),
                error_estimate: series.error_estimates[i],
                nodes: series.nodes[i],
            }
        })
        .collect();
    let quadrature = QuadratureRecord {
        nodes: series.nodes.iter().copied().max().unwrap_or(0),
        max_error_estimate: series.error_estimates.iter().copied().fold(0.0, f64::max),
    };
    let results = ConvergeResults {
        stationary_phase_rad: phi0,
        stationary_slit_time_s: stationary_slit_time(plan.path),
        closed_form: closed_form.into(),
        closed_form_normalized: (closed_form / prefactor).into(),
        rows,
    };
    Ok(envelope("converge", config.clone(), results, provenance(plan.species, Some(quadrature))))
}

pub fn run_phasediff(config: &PhaseDiffConfig) -> Result<ResultEnvelope<PhaseDiffConfig, PhaseDiffResults>, CliError> {
    let plan = config.resolve()?;
    let mut rows = Vec::new();
    for &separation in &plan.separations {
        for &distance in &plan.distances {
            for &duration in &plan.durations {
                let report = discrepancy_report(separation, distance, duration, plan.species)?;
                rows.push(PhaseDiffRow {
                    separation_m: separation,
                    distance_m: distance,
                    duration_s: duration,
                    path_integral_rad: report.path_integral.raw(),
                    path_integral_turns: report.path_integral.raw() / std::f64::consts::TAU,
                    intuitive_exact_rad: report.intuitive_exact.raw(),
                    intuitive_expanded_rad: report.intuitive_expanded.raw(),
                    difference_rad: report.difference.raw(),
                    difference_principal_rad: report.difference.principal(),
                    significant: report.significant,
                });
            }
        }
    }
    Ok(envelope("phasediff", config.clone(), PhaseDiffResults { rows }, provenance(plan.species, None)))
}

pub fn run_packet(config: &PacketConfig) -> Result<ResultEnvelope<PacketConfig, PacketResults>, CliError> {
    let plan = config.resolve()?;
    let params = plan.params;
    let mut rows = Vec::with_capacity(plan.times.len() * plan.positions.len());
    for &t in &plan.times {
        for &x in &plan.positions {
            let psi = packet_amplitude(params, x, t)?;
            rows.push(PacketRow { time_s: t, position_m: x, re: psi.re, im: psi.im, envelope: psi.norm() });
        }
    }
    let results = PacketResults {
        k0_rad_per_m: params.k0(),
        delta_k_rad_per_m: params.delta_k(),
        group_velocity_m_per_s: group_velocity(params),
        phase_velocity_m_per_s: phase_velocity(params),
        spreading_time_s: params.spreading_time(),
        rows,
    };
    Ok(envelope("packet", config.clone(), results, provenance(params.species(), None)))
}

pub fn run_faddeeva(z_re: f64, z_im: f64) -> Result<ResultEnvelope<FaddeevaArgs, FaddeevaResults>, CliError> {
    for (value, path) in [(z_re, "z_re"), (z_im, "z_im")] {
        if !value.is_finite() {
            return Err(CliError::Validation { path: path.into(), message: format!("must be finite, got {value}") });
        }
    }
    let z = Complex64::new(z_re, z_im);
    let w = faddeeva_w(z)?;
    let region = match region(z) {
        Region::PowerSeries => "power_series",
        Region::TaylorContinuedFraction => "taylor_continued_fraction",
        Region::ContinuedFraction => "continued_fraction",
    };
    let results = FaddeevaResults { w_re: w.re, w_im: w.im, region: region.into() };
    Ok(envelope("faddeeva", FaddeevaArgs { z_re, z_im }, results, provenance(ParticleSpecies::ELECTRON, None)))
}

/// `re+imi` with the shortest decimals that round-trip.
pub fn complex_text(re: f64, im: f64) -> String {
    let sign = if im.is_sign_negative() { '-' } else { '+' };
    format!("{re}{sign}{}i", im.abs())
}

/// The envelope as one JSON object, or its results as a CSV table.
pub fn render<C, R>(envelope: &ResultEnvelope<C, R>, format: Format) -> String
where
    C: Serialize,
    R: Serialize + CsvTable,
{
    match format {
        Format::Json => {
            let mut text = serde_json::to_string_pretty(envelope).expect("envelopes serialize");
            text.push('\n');
            text
        }
        Format::Csv => envelope.results.to_csv(),
    }
}

/// Writes `text` to `path`, or to standard output.
pub fn emit(text: &str, path: Option<&str>) -> Result<(), CliError> {
    use std::io::Write;
    match path {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Io {
            action: "write",
            path: path.to_string(),
            source,
        }),
        None => std::io::stdout().write_all(text.as_bytes()).map_err(|source| CliError::Io {
            action: "write",
            path: "<stdout>".into(),
            source,
        }),
    }
}
