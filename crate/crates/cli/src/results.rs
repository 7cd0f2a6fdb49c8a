//! Result records, the envelope that carries them, and their CSV tables.

use matterwave::doubleslit::QuadratureStats;
use serde::{Deserialize, Serialize};

use crate::config::MethodTag;

/// One run: the effective configuration, its results and how they were made.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultEnvelope<C, R> {
    pub command: String,
    pub config: C,
    pub results: R,
    pub provenance: Provenance,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Provenance {
    pub software: String,
    pub software_version: String,
    pub constants: Constants,
    /// Totals over every slit-time quadrature of the run; null when none ran.
    pub quadrature: Option<QuadratureRecord>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Constants {
    pub hbar_j_s: f64,
    pub planck_j_s: f64,
    pub particle_mass_kg: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureRecord {
    pub nodes: usize,
    pub max_error_estimate: f64,
}

impl From<QuadratureStats> for QuadratureRecord {
    fn from(s: QuadratureStats) -> Self {
        QuadratureRecord { nodes: s.nodes, max_error_estimate: s.max_error_estimate }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ComplexRecord {
    pub re: f64,
    pub im: f64,
}

impl From<num_complex::Complex64> for ComplexRecord {
    fn from(z: num_complex::Complex64) -> Self {
        ComplexRecord { re: z.re, im: z.im }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PatternRecord {
    pub method: MethodTag,
    pub screen_y_m: Vec<f64>,
    /// Normalized so that the largest value is 1.
    pub probability: Vec<f64>,
    pub peak_intensity: f64,
    pub quadrature: Option<QuadratureRecord>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PatternResults {
    pub patterns: Vec<PatternRecord>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConvergeRow {
    pub window_s: f64,
    pub amplitude_re: f64,
    pub amplitude_im: f64,
    /// Amplitude divided by `m / (2 pi i hbar)`.
    pub normalized_re: f64,
    pub normalized_im: f64,
    pub normalized_argument_rad: f64,
    pub error_estimate: f64,
    pub nodes: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConvergeResults {
    pub stationary_phase_rad: f64,
    pub stationary_slit_time_s: f64,
    /// The complete slit-time integral, in the units of `amplitude_*`.
    pub closed_form: ComplexRecord,
    pub closed_form_normalized: ComplexRecord,
    pub rows: Vec<ConvergeRow>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhaseDiffRow {
    pub separation_m: f64,
    pub distance_m: f64,
    pub duration_s: f64,
    pub path_integral_rad: f64,
    /// `path_integral_rad / 2 pi`.
    pub path_integral_turns: f64,
    pub intuitive_exact_rad: f64,
    pub intuitive_expanded_rad: f64,
    pub difference_rad: f64,
    pub difference_principal_rad: f64,
    pub significant: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PhaseDiffResults {
    pub rows: Vec<PhaseDiffRow>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PacketRow {
    pub time_s: f64,
    pub position_m: f64,
    pub re: f64,
    pub im: f64,
    pub envelope: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PacketResults {
    pub k0_rad_per_m: f64,
    pub delta_k_rad_per_m: f64,
    pub group_velocity_m_per_s: f64,
    pub phase_velocity_m_per_s: f64,
    pub spreading_time_s: f64,
    pub rows: Vec<PacketRow>,
}

/// The point at which `w` was evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FaddeevaArgs {
    pub z_re: f64,
    pub z_im: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FaddeevaResults {
    pub w_re: f64,
    pub w_im: f64,
    pub region: String,
}

/// Full-precision decimal rendering that parses back to the same `f64`.
pub fn number(x: f64) -> String {
    format!("{x:.16e}")
}

/// Plot-ready table: a header row, then one row per record, LF endings.
pub trait CsvTable {
    fn header(&self) -> Vec<String>;
    fn rows(&self) -> Vec<Vec<String>>;

    fn to_csv(&self) -> String {
        let mut out = self.header().join(",");
        out.push('\n');
        for row in self.rows() {
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }
}

fn method_column(tag: MethodTag) -> String {
    let name = serde_json::to_value(tag).expect("method tags serialize");
    format!("p_{}", name.as_str().expect("method tags are strings"))
}

impl CsvTable for PatternResults {
    fn header(&self) -> Vec<String> {
        let mut header = vec!["screen_y_m".to_string()];
        header.extend(self.patterns.iter().map(|p| method_column(p.method)));
        header
    }

    /// Rows on the union of every method's screen points; a cell is empty
    /// where that method was not evaluated.
    fn rows(&self) -> Vec<Vec<String>> {
        let mut ys: Vec<f64> = self.patterns.iter().flat_map(|p| p.screen_y_m.iter().copied()).collect();
        ys.sort_by(f64::total_cmp);
        ys.dedup();
        let mut cursors = vec![0usize; self.patterns.len()];
        let mut sorted: Vec<Vec<(f64, f64)>> = self
            .patterns
            .iter()
            .map(|p| p.screen_y_m.iter().copied().zip(p.probability.iter().copied()).collect())
            .collect();
        for column in &mut sorted {
            column.sort_by(|a, b| a.0.total_cmp(&b.0));
        }
        ys.iter()
            .map(|&y| {
                let mut row = vec![number(y)];
                for (column, cursor) in sorted.iter().zip(cursors.iter_mut()) {
                    match column.get(*cursor) {
                        Some(&(cy, p)) if cy == y => {
                            row.push(number(p));
                            *cursor += 1;
                        }
                        _ => row.push(String::new()),
                    }
                }
                row
            })
            .collect()
    }
}

impl CsvTable for ConvergeResults {
    fn header(&self) -> Vec<String> {
        [
            "window_s",
            "amplitude_re",
            "amplitude_im",
            "normalized_re",
            "normalized_im",
            "normalized_argument_rad",
            "error_estimate",
            "nodes",
        ]
        .map(String::from)
        .to_vec()
    }

    fn rows(&self) -> Vec<Vec<String>> {
        self.rows
            .iter()
            .map(|r| {
                let mut row: Vec<String> = [
                    r.window_s,
                    r.amplitude_re,
                    r.amplitude_im,
                    r.normalized_re,
                    r.normalized_im,
                    r.normalized_argument_rad,
                    r.error_estimate,
                ]
                .map(number)
                .to_vec();
                row.push(r.nodes.to_string());
                row
            })
            .collect()
    }
}

impl CsvTable for PhaseDiffResults {
    fn header(&self) -> Vec<String> {
        [
            "separation_m",
            "distance_m",
            "duration_s",
            "path_integral_rad",
            "path_integral_turns",
            "intuitive_exact_rad",
            "intuitive_expanded_rad",
            "difference_rad",
            "difference_principal_rad",
            "significant",
        ]
        .map(String::from)
        .to_vec()
    }

    fn rows(&self) -> Vec<Vec<String>> {
        self.rows
            .iter()
            .map(|r| {
                let mut row: Vec<String> = [
                    r.separation_m,
                    r.distance_m,
                    r.duration_s,
                    r.path_integral_rad,
                    r.path_integral_turns,
                    r.intuitive_exact_rad,
                    r.intuitive_expanded_rad,
                    r.difference_rad,
                    r.difference_principal_rad,
                ]
                .map(number)
                .to_vec();
                row.push(r.significant.to_string());
                row
            })
            .collect()
    }
}

impl CsvTable for PacketResults {
    fn header(&self) -> Vec<String> {
        ["time_s", "position_m", "re", "im", "envelope"].map(String::from).to_vec()
    }

    fn rows(&self) -> Vec<Vec<String>> {
        self.rows
            .iter()
            .map(|r| [r.time_s, r.position_m, r.re, r.im, r.envelope].map(number).to_vec())
            .collect()
    }
}

impl CsvTable for FaddeevaResults {
    fn header(&self) -> Vec<String> {
        ["w_re", "w_im", "region"].map(String::from).to_vec()
    }

    fn rows(&self) -> Vec<Vec<String>> {
        vec![vec![number(self.w_re), number(self.w_im), self.region.clone()]]
    }
}
