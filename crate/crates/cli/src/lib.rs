//! Command-line frontend for the `logradius` library.
//!
//! Exit codes: 0 on success, 1 for output failures, 2 for input errors
//! (bad flags, unreadable or malformed files), 3 for numeric-range errors and
//! 4 when the input cannot be represented (aperiodic, non-closing or
//! non-convex shapes, disjoint domains).

use std::ffi::OsString;
use std::fmt;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use logradius::angle::{angle_to_logradius, logradius_to_angle, AngleProfile};
use logradius::io::{
    document_kind, read_angle_profile, read_profile, read_samples_csv, write_angle_profile,
    write_curve_csv, write_profile, write_samples_csv, DocumentKind,
};
use logradius::spectrum::{
    decompose, decompose_grid, parseval_residual, reconstruct, sample_periodic, ShapeSpectrum,
};
use logradius::svg::{write_svg, GridLayout, Style};
use logradius::{closure_gap, normalize, ErrorKind, Frequency, Interval, LogRadiusProfile};

pub mod figures;

pub const EXIT_OUTPUT: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_NUMERIC: i32 = 3;
pub const EXIT_REPRESENTABILITY: i32 = 4;

#[derive(Debug)]
pub enum CliError {
    Lib(logradius::Error),
    Read(PathBuf, io::Error),
    Write(PathBuf, io::Error),
    Usage(String),
}

impl CliError {
    pub(crate) fn io(path: &Path, err: io::Error) -> Self {
        CliError::Write(path.to_path_buf(), err)
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Lib(e) => match e.kind() {
                ErrorKind::Input => EXIT_INPUT,
                ErrorKind::NumericRange => EXIT_NUMERIC,
                ErrorKind::Representability => EXIT_REPRESENTABILITY,
            },
            CliError::Read(..) | CliError::Usage(_) => EXIT_INPUT,
            CliError::Write(..) => EXIT_OUTPUT,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::Read(p, e) => write!(f, "cannot read {}: {e}", p.display()),
            CliError::Write(p, e) => write!(f, "cannot write {}: {e}", p.display()),
            CliError::Usage(msg) => write!(f, "{msg}"),
        }
    }
}

impl From<logradius::Error> for CliError {
    fn from(e: logradius::Error) -> Self {
        CliError::Lib(e)
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "logradius",
    version,
    about = "Log-radius profile calculus for convex plane curves"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write the profile of an elementary shape, a spiral or a circle.
    Gen(GenArgs),
    /// Write the weighted sum of several profiles.
    Mix(MixArgs),
    /// Render a profile (or the elementary-shape gallery) to SVG and/or CSV.
    Render(RenderArgs),
    /// Decompose a periodic profile or sampled log-radius into a shape spectrum.
    Spectrum(SpectrumArgs),
    /// Render single-component and summed angle profiles.
    AngleDemo(AngleDemoArgs),
    /// Convert between log-radius and angle-profile documents.
    Convert(ConvertArgs),
    /// Write every gallery into a directory.
    RegenFigures(RegenArgs),
}

#[derive(Debug, Args)]
pub struct GenArgs {
    /// Frequency ν as `m/n`, an integer, or a decimal; 0 gives no component.
    #[arg(long, default_value = "2")]
    pub nu: String,
    /// Amplitude ε of the component.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub eps: f64,
    /// Phase θ₀ in radians.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub theta0: f64,
    /// Constant term c₀ (log of the size).
    #[arg(long = "const", default_value_t = 0.0, allow_negative_numbers = true)]
    pub constant: f64,
    /// Spiral slope a of the linear term a·θ.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub slope: f64,
    /// Domain as `START,END` in radians [default: one period, or [0, 2π] if aperiodic].
    #[arg(long, value_parser = parse_pair, allow_negative_numbers = true)]
    pub domain: Option<(f64, f64)>,
    /// Output file [default: stdout].
    #[arg(short, long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct MixArgs {
    /// Profile documents to combine.
    #[arg(required = true)]
    pub inputs: Vec<PathBuf>,
    /// Comma-separated weights, one per input [default: all 1].
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub weights: Vec<f64>,
    /// Output file [default: stdout].
    #[arg(short, long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RenderArgs {
    /// Profile document to render (omit with --gallery).
    pub input: Option<PathBuf>,
    /// Render the 3×3 elementary-shape gallery instead of an input.
    #[arg(long)]
    pub gallery: bool,
    /// Samples per 2π of θ.
    #[arg(long, default_value_t = 4096)]
    pub samples: usize,
    /// Relative endpoint gap below which the curve is drawn closed.
    #[arg(long, default_value_t = 1e-6)]
    pub closure_tol: f64,
    /// SVG output [default: stdout when --csv is absent].
    #[arg(long)]
    pub svg: Option<PathBuf>,
    /// CSV output with columns theta,s,x,y.
    #[arg(long)]
    pub csv: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    /// Profile document, or CSV with columns theta,l covering one period.
    pub input: PathBuf,
    /// Highest bin index.
    #[arg(long, default_value_t = 32)]
    pub max_k: usize,
    /// Also report the truncation to the J largest bins.
    #[arg(long)]
    pub top_j: Option<usize>,
    /// Samples per 2π when sampling a profile document.
    #[arg(long, default_value_t = 4096)]
    pub samples: usize,
    /// Output file [default: stdout].
    #[arg(short, long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct AngleDemoArgs {
    /// Index k of the single cosine component.
    #[arg(long, default_value_t = 3)]
    pub k: u32,
    /// Comma-separated amplitudes a_k for the single-component row.
    #[arg(
        long,
        value_delimiter = ',',
        default_value = "0.1,0.2,0.4,0.8,1.2",
        allow_negative_numbers = true
    )]
    pub amplitudes: Vec<f64>,
    /// Components `k:a` summed in the angle domain (repeatable) [default: 2:0.4 and 5:0.4].
    #[arg(long = "mix", value_parser = parse_component)]
    pub mix: Vec<(u32, f64)>,
    /// Samples along the normalized arc length.
    #[arg(long, default_value_t = 4096)]
    pub samples: usize,
    /// Output SVG [default: stdout].
    #[arg(short, long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Representation {
    Angle,
    Logradius,
}

#[derive(Debug, Args)]
pub struct ConvertArgs {
    /// Profile or angle-profile document.
    pub input: PathBuf,
    /// Target representation [default: the other one].
    #[arg(long, value_enum)]
    pub to: Option<Representation>,
    /// Samples per 2π.
    #[arg(long, default_value_t = 4096)]
    pub samples: usize,
    /// Highest descriptor or spectral bin index kept.
    #[arg(long, default_value_t = 32)]
    pub max_k: usize,
    /// When converting to log-radius, also write the sampled l(θ) as CSV.
    #[arg(long)]
    pub samples_csv: Option<PathBuf>,
    /// Output file [default: stdout].
    #[arg(short, long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RegenArgs {
    /// Directory receiving the SVG files.
    #[arg(long, env = "LOGRADIUS_OUT_DIR", default_value = "figures")]
    pub out_dir: PathBuf,
    /// Samples per 2π used for every curve.
    #[arg(long, default_value_t = 4096)]
    pub samples: usize,
}

fn parse_pair(s: &str) -> Result<(f64, f64), String> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| format!("expected START,END, got {s:?}"))?;
    let a = a.trim().parse::<f64>().map_err(|e| e.to_string())?;
    let b = b.trim().parse::<f64>().map_err(|e| e.to_string())?;
    Ok((a, b))
}

fn parse_component(s: &str) -> Result<(u32, f64), String> {
    let (k, a) = s
        .split_once(':')
        .ok_or_else(|| format!("expected K:A, got {s:?}"))?;
    let k = k.trim().parse::<u32>().map_err(|e| e.to_string())?;
    let a = a.trim().parse::<f64>().map_err(|e| e.to_string())?;
    if k == 0 {
        return Err("k must be at least 1".into());
    }
    Ok((k, a))
}

fn read_text(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Read(path.to_path_buf(), e))
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| CliError::io(path, e)),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| CliError::io(Path::new("<stdout>"), e)),
    }
}

pub fn cmd_gen(args: &GenArgs) -> Result<String, CliError> {
    let nu: f64 = args.nu.parse().unwrap_or(f64::NAN);
    let mut profile = if nu == 0.0 {
        if args.eps != 0.0 {
            return Err(CliError::Usage(
                "ν = 0 is the spiral limit: give --slope instead of --eps".into(),
            ));
        }
        LogRadiusProfile::unit_circle()
    } else {
        let frequency: Frequency = args.nu.parse()?;
        LogRadiusProfile::elementary(frequency, args.eps, args.theta0)?
    };
    if args.constant != 0.0 || args.slope != 0.0 {
        let extra = LogRadiusProfile::new(args.constant, args.slope, Vec::new(), profile.domain())?;
        profile = profile.add(&extra)?;
    }
    if profile.components().is_empty() && profile.domain().length() != std::f64::consts::TAU {
        profile = profile.with_domain(Interval::from_zero(std::f64::consts::TAU)?);
    }
    if let Some((start, end)) = args.domain {
        profile = profile.with_domain(Interval::new(start, end)?);
    }
    Ok(write_profile(&profile))
}

pub fn cmd_mix(args: &MixArgs) -> Result<String, CliError> {
    let weights = if args.weights.is_empty() {
        vec![1.0; args.inputs.len()]
    } else if args.weights.len() == args.inputs.len() {
        args.weights.clone()
    } else {
        return Err(CliError::Usage(format!(
            "{} weights given for {} inputs",
            args.weights.len(),
            args.inputs.len()
        )));
    };
    let mut total: Option<LogRadiusProfile> = None;
    for (path, w) in args.inputs.iter().zip(weights) {
        let p = read_profile(&read_text(path)?)?.scalar_multiply(w);
        total = Some(match total {
            None => p,
            Some(acc) => acc.add(&p)?,
        });
    }
    Ok(write_profile(&total.expect("at least one input")))
}

/// Rendered output of `render`: SVG text, CSV text and a one-line summary.
pub struct RenderOutput {
    pub svg: String,
    pub csv: Option<String>,
    pub summary: String,
}

pub fn cmd_render(args: &RenderArgs) -> Result<RenderOutput, CliError> {
    if args.gallery {
        return Ok(RenderOutput {
            svg: figures::elementary_gallery(args.samples)?,
            csv: None,
            summary: format!(
                "gallery of {} elementary shapes",
                figures::GALLERY_FREQUENCIES.len()
            ),
        });
    }
    let input = args
        .input
        .as_ref()
        .ok_or_else(|| CliError::Usage("render needs an input profile or --gallery".into()))?;
    let profile = read_profile(&read_text(input)?)?;
    let curve = logradius::render::render_with_tolerance(&profile, args.samples, args.closure_tol)?;
    let gap = closure_gap(&curve)?;
    let normalized = normalize(&curve)?;
    let svg = write_svg(
        &[(normalized.clone(), Style::default())],
        &GridLayout::with_columns(1),
    );
    Ok(RenderOutput {
        svg,
        csv: args.csv.as_ref().map(|_| write_curve_csv(&normalized)),
        summary: format!(
            "{} samples, closure_gap = {gap:.3e}, closed = {}",
            curve.len(),
            normalized.is_closed()
        ),
    })
}

fn format_spectrum(
    spectrum: &ShapeSpectrum,
    residual: f64,
    top_j: Option<usize>,
) -> Result<String, CliError> {
    use std::fmt::Write as _;
    let mut out = String::new();
    let turns = spectrum.period() / std::f64::consts::TAU;
    let _ = writeln!(
        out,
        "period = {:.17e} ({turns:.6} turns)",
        spectrum.period()
    );
    let _ = writeln!(out, "mean = {:.17e}", spectrum.mean());
    let _ = writeln!(
        out,
        "{:>4}  {:>24}  {:>24}  {:>24}",
        "k", "nu", "epsilon", "theta0"
    );
    for b in spectrum.bins() {
        let _ = writeln!(
            out,
            "{:>4}  {:>24.17e}  {:>24.17e}  {:>24.17e}",
            b.k,
            spectrum.frequency_of(b.k),
            b.amplitude,
            b.phase
        );
    }
    let _ = writeln!(out, "parseval_residual = {residual:.3e}");
    if let Some(j) = top_j {
        let t = spectrum.truncate(j)?;
        let kept: Vec<String> = t.spectrum.bins().iter().map(|b| b.k.to_string()).collect();
        let _ = writeln!(out, "top_{j} = [{}]", kept.join(", "));
        let _ = writeln!(out, "discarded_norm = {:.17e}", t.discarded_norm);
    }
    Ok(out)
}

pub fn cmd_spectrum(args: &SpectrumArgs) -> Result<String, CliError> {
    let text = read_text(&args.input)?;
    let is_csv = args
        .input
        .extension()
        .is_some_and(|e| e.eq_ignore_ascii_case("csv"));
    let (values, spectrum) = if is_csv {
        let (thetas, values) = read_samples_csv(&text)?;
        let spectrum = decompose_grid(&thetas, &values, args.max_k)?;
        (values, spectrum)
    } else {
        let profile = read_profile(&text)?;
        let turns = profile.period_turns().ok_or(logradius::Error::Aperiodic)? as usize;
        let n = (args.samples * turns).max(4 * (2 * args.max_k + 1));
        let (values, period) = sample_periodic(&profile, n)?;
        (values.clone(), decompose(&values, period, args.max_k)?)
    };
    let residual = parseval_residual(&values, &spectrum);
    format_spectrum(&spectrum, residual, args.top_j)
}

pub fn cmd_angle_demo(args: &AngleDemoArgs) -> Result<String, CliError> {
    if args.k == 0 {
        return Err(CliError::Usage("k must be at least 1".into()));
    }
    let mix = if args.mix.is_empty() {
        figures::DEFAULT_ANGLE_MIX.to_vec()
    } else {
        args.mix.clone()
    };
    figures::angle_panel(args.k, &args.amplitudes, &mix, args.samples)
}

/// Converted document plus optional sample CSV and a summary line.
pub struct ConvertOutput {
    pub document: String,
    pub samples_csv: Option<String>,
    pub summary: String,
}

pub fn cmd_convert(args: &ConvertArgs) -> Result<ConvertOutput, CliError> {
    let text = read_text(&args.input)?;
    let kind = document_kind(&text)?;
    let target = args.to.unwrap_or(match kind {
        DocumentKind::LogRadius => Representation::Angle,
        DocumentKind::Angle => Representation::Logradius,
    });
    match (kind, target) {
        (DocumentKind::LogRadius, Representation::Angle) => {
            let profile = read_profile(&text)?;
            let conv = logradius_to_angle(&profile, args.samples, args.max_k)?;
            Ok(ConvertOutput {
                document: write_angle_profile(&conv.profile),
                samples_csv: None,
                summary: format!(
                    "{} descriptors, total arc length = {:.17e}",
                    conv.profile.descriptors().len(),
                    conv.length
                ),
            })
        }
        (DocumentKind::Angle, Representation::Logradius) => {
            let angle: AngleProfile = read_angle_profile(&text)?;
            let turns = (angle.total_turn() / std::f64::consts::TAU)
                .round()
                .max(1.0) as usize;
            let sampled = angle_to_logradius(&angle, args.samples * turns)?;
            let spectrum = decompose(&sampled.values, sampled.period, args.max_k)?;
            let residual = parseval_residual(&sampled.values, &spectrum);
            let margin = angle.convexity_margin((args.samples * turns).max(64))?;
            Ok(ConvertOutput {
                document: write_profile(&reconstruct(&spectrum)),
                samples_csv: Some(write_samples_csv(&sampled.thetas(), &sampled.values)),
                summary: format!(
                    "convexity margin = {margin:.6e}, parseval residual = {residual:.3e}"
                ),
            })
        }
        (kind, target) => Err(CliError::Usage(format!(
            "input is already a {kind:?} document; cannot convert to {target:?}"
        ))),
    }
}

fn dispatch(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Gen(args) => emit(args.out.as_deref(), &cmd_gen(&args)?),
        Command::Mix(args) => emit(args.out.as_deref(), &cmd_mix(&args)?),
        Command::Render(args) => {
            let out = cmd_render(&args)?;
            if let (Some(path), Some(csv)) = (&args.csv, &out.csv) {
                emit(Some(path), csv)?;
            }
            if args.svg.is_some() || args.csv.is_none() {
                emit(args.svg.as_deref(), &out.svg)?;
            }
            eprintln!("{}", out.summary);
            Ok(())
        }
        Command::Spectrum(args) => emit(args.out.as_deref(), &cmd_spectrum(&args)?),
        Command::AngleDemo(args) => emit(args.out.as_deref(), &cmd_angle_demo(&args)?),
        Command::Convert(args) => {
            let out = cmd_convert(&args)?;
            if let Some(path) = &args.samples_csv {
                match &out.samples_csv {
                    Some(csv) => emit(Some(path), csv)?,
                    None => {
                        return Err(CliError::Usage(
                            "--samples-csv only applies when converting to logradius".into(),
                        ))
                    }
                }
            }
            emit(args.out.as_deref(), &out.document)?;
            eprintln!("{}", out.summary);
            Ok(())
        }
        Command::RegenFigures(args) => {
            for path in figures::regenerate(&args.out_dir, args.samples)? {
                eprintln!("wrote {}", path.display());
            }
            Ok(())
        }
    }
}

/// Parses `args` and runs the selected subcommand, returning the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INPUT } else { 0 };
        }
    };
    match dispatch(cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn error_kinds_map_to_exit_codes() {
        assert_eq!(
            CliError::from(logradius::Error::NotClosing).exit_code(),
            EXIT_REPRESENTABILITY
        );
        assert_eq!(
            CliError::from(logradius::Error::NumericRange("x".into())).exit_code(),
            EXIT_NUMERIC
        );
        assert_eq!(
            CliError::from(logradius::Error::Parse("x".into())).exit_code(),
            EXIT_INPUT
        );
        assert_eq!(CliError::Usage("x".into()).exit_code(), EXIT_INPUT);
        let io_err = io::Error::other("disk full");
        assert_eq!(
            CliError::io(Path::new("a"), io_err).exit_code(),
            EXIT_OUTPUT
        );
    }

    #[test]
    fn value_parsers() {
        assert_eq!(parse_pair("0, 6.5"), Ok((0.0, 6.5)));
        assert!(parse_pair("1").is_err());
        assert_eq!(parse_component("5:0.4"), Ok((5, 0.4)));
        assert!(parse_component("0:0.4").is_err());
        assert!(parse_component("5").is_err());
    }

    #[test]
    fn gen_rejects_amplitude_without_frequency() {
        let cli = Cli::try_parse_from(["logradius", "gen", "--nu", "0", "--eps", "0.3"]).unwrap();
        let Command::Gen(args) = cli.command else {
            unreachable!()
        };
        assert!(matches!(cmd_gen(&args), Err(CliError::Usage(_))));
    }

    #[test]
    fn gen_applies_constant_and_domain() {
        let cli = Cli::try_parse_from([
            "logradius",
            "gen",
            "--nu",
            "3",
            "--eps",
            "0.1",
            "--const",
            "-0.5",
            "--domain",
            "0,3",
        ])
        .unwrap();
        let Command::Gen(args) = cli.command else {
            unreachable!()
        };
        let p = logradius::io::read_profile(&cmd_gen(&args).unwrap()).unwrap();
        assert_eq!(p.constant(), -0.5);
        assert_eq!(p.domain(), Interval::new(0.0, 3.0).unwrap());
    }

    #[test]
    fn mix_checks_weight_count() {
        let args = MixArgs {
            inputs: vec![PathBuf::from("a"), PathBuf::from("b")],
            weights: vec![1.0],
            out: None,
        };
        assert!(matches!(cmd_mix(&args), Err(CliError::Usage(_))));
    }
}
