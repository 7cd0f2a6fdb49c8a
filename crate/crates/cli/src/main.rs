use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use matterwave_cli::config::{self, HasOutput};
use matterwave_cli::run::{complex_text, emit, render};
use matterwave_cli::{presets, CliError, Format};
use serde::de::DeserializeOwned;

#[derive(Parser)]
#[command(name = "matterwave", version, about = "Matter-wave double-slit interference calculations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Screen patterns by each requested method (presets: fig6, far_field)
    Pattern(RunArgs),
    /// Slit-time sums over growing windows (preset: fig4)
    Converge(RunArgs),
    /// Near-field phase differences of both methods (preset: fig6)
    Phasediff(RunArgs),
    /// Gaussian packet snapshots (preset: fig2)
    Packet(RunArgs),
    /// Faddeeva function w(z) at z = RE + i IM
    Faddeeva(FaddeevaArgs),
}

#[derive(Args)]
#[command(group(ArgGroup::new("source").required(true).args(["config", "preset"])))]
struct RunArgs {
    /// JSON configuration file
    #[arg(long, value_name = "PATH")]
    config: Option<PathBuf>,
    /// Built-in configuration
    #[arg(long, value_name = "NAME")]
    preset: Option<String>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct OutputArgs {
    /// Output file; standard output when omitted
    #[arg(long, value_name = "PATH")]
    output: Option<String>,
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
}

#[derive(Args)]
struct FaddeevaArgs {
    #[arg(allow_negative_numbers = true)]
    re: f64,
    #[arg(allow_negative_numbers = true)]
    im: f64,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Csv => Format::Csv,
            FormatArg::Json => Format::Json,
        }
    }
}

fn load<T>(args: &RunArgs, preset: fn(&str) -> Result<T, CliError>) -> Result<T, CliError>
where
    T: DeserializeOwned + HasOutput,
{
    let mut config = match (&args.config, &args.preset) {
        (Some(path), _) => {
            let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
                action: "read",
                path: path.display().to_string(),
                source,
            })?;
            config::parse(&text)?
        }
        (None, Some(name)) => preset(name)?,
        (None, None) => unreachable!("clap requires --config or --preset"),
    };
    let output = config.output_mut();
    if let Some(format) = args.output.format {
        output.format = format.into();
    }
    if let Some(path) = &args.output.output {
        output.path = Some(path.clone());
    }
    Ok(config)
}

macro_rules! run_command {
    ($args:expr, $preset:path, $run:path) => {{
        let mut config = load($args, $preset)?;
        // the destination is not part of the experiment, so it is not echoed
        let output = std::mem::take(config.output_mut());
        config.output_mut().format = output.format;
        let envelope = $run(&config)?;
        emit(&render(&envelope, output.format), output.path.as_deref())
    }};
}

fn execute(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Pattern(args) => run_command!(&args, presets::pattern, matterwave_cli::run_pattern),
        Command::Converge(args) => run_command!(&args, presets::converge, matterwave_cli::run_converge),
        Command::Phasediff(args) => run_command!(&args, presets::phasediff, matterwave_cli::run_phasediff),
        Command::Packet(args) => run_command!(&args, presets::packet, matterwave_cli::run_packet),
        Command::Faddeeva(args) => {
            let envelope = matterwave_cli::run_faddeeva(args.re, args.im)?;
            let text = match args.output.format {
                Some(format) => render(&envelope, format.into()),
                None => format!("{}\n", complex_text(envelope.results.w_re, envelope.results.w_im)),
            };
            emit(&text, args.output.output.as_deref())
        }
    }
}

fn main() -> ExitCode {
    match execute(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
