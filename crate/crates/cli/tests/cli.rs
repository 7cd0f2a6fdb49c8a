use std::path::Path;
use std::process::{Command, Output};

use matterwave_cli::config::{parse, ConvergeConfig, ExperimentConfig, PacketConfig, PhaseDiffConfig};
use matterwave_cli::results::{ConvergeResults, PacketResults, PatternResults, PhaseDiffResults};
use matterwave_cli::{presets, render, run_converge, run_packet, run_pattern, run_phasediff, Format, ResultEnvelope};

fn matterwave(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_matterwave")).args(args).output().expect("binary runs")
}

fn path_str(path: &Path) -> &str {
    path.to_str().expect("temp paths are UTF-8")
}

#[test]
fn echoed_config_reproduces_the_run() {
    let config = presets::pattern("fig6").unwrap();
    let first = render(&run_pattern(&config).unwrap(), Format::Json);
    let echoed: ResultEnvelope<ExperimentConfig, PatternResults> = serde_json::from_str(&first).unwrap();
    let second = render(&run_pattern(&echoed.config).unwrap(), Format::Json);
    assert_eq!(first, second);

    let config = presets::phasediff("fig6").unwrap();
    let first = render(&run_phasediff(&config).unwrap(), Format::Json);
    let echoed: ResultEnvelope<PhaseDiffConfig, PhaseDiffResults> = serde_json::from_str(&first).unwrap();
    assert_eq!(first, render(&run_phasediff(&echoed.config).unwrap(), Format::Json));

    let config = presets::packet("fig2").unwrap();
    let first = render(&run_packet(&config).unwrap(), Format::Json);
    let echoed: ResultEnvelope<PacketConfig, PacketResults> = serde_json::from_str(&first).unwrap();
    assert_eq!(first, render(&run_packet(&echoed.config).unwrap(), Format::Json));
}

#[test]
fn converge_round_trip_and_provenance() {
    let mut config = presets::converge("fig4").unwrap();
    // a shorter series keeps the test quick
    config.windows = matterwave_cli::config::WindowSpec::List { windows_s: vec![1e-16, 1e-14, 2e-13] };
    let envelope = run_converge(&config).unwrap();
    let text = render(&envelope, Format::Json);
    let echoed: ResultEnvelope<ConvergeConfig, ConvergeResults> = serde_json::from_str(&text).unwrap();
    assert_eq!(echoed, envelope);
    assert_eq!(text, render(&run_converge(&echoed.config).unwrap(), Format::Json));
    let quadrature = envelope.provenance.quadrature.expect("converge reports its quadrature");
    assert!(quadrature.nodes > 0 && quadrature.max_error_estimate > 0.0);
    assert!(envelope.results.rows.windows(2).all(|w| w[1].nodes >= w[0].nodes));
}

#[test]
fn same_config_gives_byte_identical_files() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for target in [&a, &b] {
        let out = matterwave(&["pattern", "--preset", "fig6", "--output", path_str(target)]);
        assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn csv_and_json_carry_the_same_numbers() {
    let json = matterwave(&["pattern", "--preset", "fig6", "--format", "json"]);
    let csv = matterwave(&["pattern", "--preset", "fig6", "--format", "csv"]);
    assert!(json.status.success() && csv.status.success());
    let envelope: ResultEnvelope<ExperimentConfig, PatternResults> = serde_json::from_slice(&json.stdout).unwrap();
    let text = String::from_utf8(csv.stdout).unwrap();
    assert!(!text.contains('\r'));
    let mut lines = text.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(header, ["screen_y_m", "p_intuitive", "p_stationary_phase", "p_time_summed"]);
    let mut seen = [0usize; 3];
    for line in lines {
        let cells: Vec<&str> = line.split(',').collect();
        assert_eq!(cells.len(), 4);
        let y: f64 = cells[0].parse().unwrap();
        for (k, record) in envelope.results.patterns.iter().enumerate() {
            let Some(i) = record.screen_y_m.iter().position(|&v| v == y) else {
                assert!(cells[k + 1].is_empty());
                continue;
            };
            let value: f64 = cells[k + 1].parse().unwrap();
            let expected = record.probability[i];
            assert!((value - expected).abs() <= 1e-15 * expected.abs());
            seen[k] += 1;
        }
    }
    let sizes: Vec<usize> = envelope.results.patterns.iter().map(|p| p.screen_y_m.len()).collect();
    assert_eq!(seen.to_vec(), sizes);
}

#[test]
fn config_files_run_like_presets() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("phasediff.json");
    let config = presets::phasediff("fig6").unwrap();
    std::fs::write(&path, serde_json::to_string_pretty(&config).unwrap()).unwrap();
    let from_file = matterwave(&["phasediff", "--config", path_str(&path), "--format", "csv"]);
    let from_preset = matterwave(&["phasediff", "--preset", "fig6", "--format", "csv"]);
    assert!(from_file.status.success());
    assert_eq!(from_file.stdout, from_preset.stdout);
}

#[test]
fn config_errors_name_the_field() {
    let mut config = serde_json::to_value(presets::pattern("fig6").unwrap()).unwrap();
    config["geometry"]["slit1_width_m"] = serde_json::json!(-6.3e-8);
    let err = parse::<ExperimentConfig>(&config.to_string()).unwrap().resolve().unwrap_err();
    assert!(err.to_string().contains("geometry.slit1_width_m"), "{err}");

    config["geometry"]["slit1_width_m"] = serde_json::json!("wide");
    let err = parse::<ExperimentConfig>(&config.to_string()).unwrap_err();
    assert!(err.to_string().contains("geometry.slit1_width_m"), "{err}");

    let mut config = serde_json::to_value(presets::pattern("fig6").unwrap()).unwrap();
    config["timesum"]["window_s"] = serde_json::json!(1.0);
    let err = parse::<ExperimentConfig>(&config.to_string()).unwrap().resolve().unwrap_err();
    assert!(err.to_string().contains("`timesum.window_s`"), "{err}");

    let mut config = serde_json::to_value(presets::pattern("fig6").unwrap()).unwrap();
    config["methods"] = serde_json::json!(["intuitive"]);
    let err = parse::<ExperimentConfig>(&config.to_string()).unwrap().resolve().unwrap_err();
    assert!(err.to_string().contains("`timesum`"), "{err}");

    config["methods"] = serde_json::json!(["intuitive", "fourier"]);
    let err = parse::<ExperimentConfig>(&config.to_string()).unwrap_err();
    assert!(err.to_string().contains("methods[1]"), "{err}");
}

#[test]
fn exit_codes_follow_the_failure_kind() {
    assert_eq!(matterwave(&["faddeeva", "0", "0"]).status.code(), Some(0));
    assert_eq!(String::from_utf8(matterwave(&["faddeeva", "0", "0"]).stdout).unwrap(), "1+0i\n");
    // w(-30i) = 2 exp(900) - ... overflows
    assert_eq!(matterwave(&["faddeeva", "0", "-30"]).status.code(), Some(3));
    assert_eq!(matterwave(&["pattern", "--preset", "nope"]).status.code(), Some(2));
    assert_eq!(matterwave(&["pattern"]).status.code(), Some(2));
    assert_eq!(matterwave(&["converge", "--config", "/nonexistent/config.json"]).status.code(), Some(4));

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"species": "muon", "speed_m_per_s": 1e7, "relative_width": 0.05,
        "times_s": [0.0], "positions": {"kind": "grid", "min_m": 0.0, "max_m": 1e-9, "count": 3}}"#)
    .unwrap();
    let out = matterwave(&["packet", "--config", path_str(&bad)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("`species`"));

    let unwritable = dir.path().join("missing").join("out.csv");
    let out = matterwave(&["packet", "--preset", "fig2", "--output", path_str(&unwritable)]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn json_numbers_are_literals() {
    let out = matterwave(&["phasediff", "--preset", "fig6"]);
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let row = &value["results"]["rows"][0];
    assert!(row["path_integral_rad"].is_f64());
    assert!(row["significant"].is_boolean());
    assert!(value["provenance"]["constants"]["hbar_j_s"].is_f64());
    assert!(value["provenance"].get("quadrature").is_some());
}
