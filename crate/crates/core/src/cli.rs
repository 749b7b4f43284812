//! Command-line driver.
//!
//! Exit codes: 0 success, 1 usage error, 2 collinear (or otherwise
//! degenerate) triangle, 3 failure writing an output file.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::Parser;
use serde::{Deserialize, Serialize};

use crate::conic::ConicCoefficients;
use crate::error::GeometryError;
use crate::plane::{Complex, Triangle};
use crate::render::{build_scene, fmt2, fmt2_complex, render, Which};
use crate::steiner::{steiner_report, EllipseGeometry, SteinerReport, TangencyPoints};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_COLLINEAR: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "marden",
    version,
    about = "Steiner in- and circum-ellipse of a triangle in the complex plane",
    after_help = "Exit codes: 0 ok, 1 usage error, 2 collinear input, 3 output write failure."
)]
struct Args {
    /// Three vertices as whitespace-separated `re,im` pairs, e.g. "0,0 4,0 2,3".
    #[arg(long, value_name = "\"x1,y1 x2,y2 x3,y3\"", conflicts_with = "input", allow_hyphen_values = true)]
    triangle: Option<String>,

    /// JSON file with {"z1":[re,im],"z2":[re,im],"z3":[re,im]} or a list of such objects.
    #[arg(long, value_name = "FILE")]
    input: Option<PathBuf>,

    /// Which ellipse(s) to draw and print: in, circum or both.
    #[arg(long, value_name = "in|circum|both", default_value = "both")]
    ellipse: Which,

    /// SVG output file; a directory in batch mode (triangle-000.svg, ...).
    #[arg(long, value_name = "PATH")]
    svg: Option<PathBuf>,

    /// JSON report output file.
    #[arg(long, value_name = "PATH")]
    json: Option<PathBuf>,

    /// Suppress the console report.
    #[arg(long)]
    quiet: bool,
}

/// The three input points, not yet checked for collinearity.
pub type RawTriangle = [Complex; 3];

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub triangles: Vec<RawTriangle>,
    /// Set when the input was a JSON list; outputs are then per entry.
    pub batch: bool,
    pub which: Which,
    pub svg_path: Option<PathBuf>,
    pub json_path: Option<PathBuf>,
    pub quiet: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    /// `--help` or `--version`: print and exit 0.
    Info(String),
    Usage(String),
}

/// Parses `"x1,y1 x2,y2 x3,y3"`.
pub fn parse_triangle_arg(text: &str) -> Result<RawTriangle, String> {
    let pairs: Vec<&str> = text.split_whitespace().collect();
    if pairs.len() != 3 {
        return Err(format!("expected three `re,im` pairs, got {}", pairs.len()));
    }
    let mut out = [Complex::new(0.0, 0.0); 3];
    for (slot, pair) in out.iter_mut().zip(pairs) {
        let (re, im) = pair
            .split_once(',')
            .ok_or_else(|| format!("malformed coordinate pair `{pair}`"))?;
        let parse = |s: &str| -> Result<f64, String> {
            let v: f64 = s.trim().parse().map_err(|_| format!("malformed number `{s}` in `{pair}`"))?;
            if v.is_finite() {
                Ok(v)
            } else {
                Err(format!("invalid coordinate `{s}` in `{pair}`"))
            }
        };
        *slot = Complex::new(parse(re)?, parse(im)?);
    }
    Ok(out)
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct TriangleInput {
    z1: [f64; 2],
    z2: [f64; 2],
    z3: [f64; 2],
}

impl TriangleInput {
    fn into_raw(self) -> Result<RawTriangle, String> {
        let pts = [self.z1, self.z2, self.z3];
        if pts.iter().flatten().any(|v| !v.is_finite()) {
            return Err("invalid coordinate".to_string());
        }
        Ok(pts.map(|p| Complex::new(p[0], p[1])))
    }
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum InputFile {
    Batch(Vec<TriangleInput>),
    Single(TriangleInput),
}

/// Parses input JSON text. Returns the triangles and whether the input was a list.
pub fn parse_input_json(text: &str) -> Result<(Vec<RawTriangle>, bool), String> {
    let parsed: InputFile = serde_json::from_str(text).map_err(|e| format!("malformed input JSON: {e}"))?;
    match parsed {
        InputFile::Single(t) => Ok((vec![t.into_raw()?], false)),
        InputFile::Batch(list) => {
            let raws = list.into_iter().map(TriangleInput::into_raw).collect::<Result<Vec<_>, _>>()?;
            Ok((raws, true))
        }
    }
}

pub fn parse_args<I, T>(argv: I) -> Result<RunConfig, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args = Args::try_parse_from(argv).map_err(|e| {
        use clap::error::ErrorKind;
        match e.kind() {
            ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => CliError::Info(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    })?;

    let (triangles, batch) = match (&args.triangle, &args.input) {
        (Some(text), None) => (vec![parse_triangle_arg(text).map_err(CliError::Usage)?], false),
        (None, Some(path)) => {
            let text = fs::read_to_string(path)
                .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
            parse_input_json(&text).map_err(CliError::Usage)?
        }
        (None, None) => return Err(CliError::Usage("missing triangle: pass --triangle or --input".to_string())),
        (Some(_), Some(_)) => unreachable!("clap enforces the conflict"),
    };
    if args.quiet && args.svg.is_none() && args.json.is_none() {
        return Err(CliError::Usage("--quiet without --svg or --json produces no output".to_string()));
    }
    Ok(RunConfig {
        triangles,
        batch,
        which: args.ellipse,
        svg_path: args.svg,
        json_path: args.json,
        quiet: args.quiet,
    })
}

fn pair(z: Complex) -> [f64; 2] {
    [z.re, z.im]
}

fn point(p: [f64; 2]) -> Complex {
    Complex::new(p[0], p[1])
}

/// One ellipse in the JSON report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EllipseJson {
    pub conic: [f64; 6],
    pub foci: [[f64; 2]; 2],
    pub center: [f64; 2],
    pub a: f64,
    pub b: f64,
    pub ecc: f64,
    pub theta: f64,
}

impl EllipseJson {
    fn new(conic: &ConicCoefficients, g: &EllipseGeometry) -> Self {
        Self {
            conic: conic.to_array(),
            foci: [pair(g.f1), pair(g.f2)],
            center: pair(g.center),
            a: g.a,
            b: g.b,
            ecc: g.ecc,
            theta: g.theta,
        }
    }

    fn split(&self) -> Result<(ConicCoefficients, EllipseGeometry), String> {
        let conic = ConicCoefficients::try_from(self.conic).map_err(str::to_string)?;
        let geom = EllipseGeometry {
            center: point(self.center),
            f1: point(self.foci[0]),
            f2: point(self.foci[1]),
            a: self.a,
            b: self.b,
            theta: self.theta,
            ecc: self.ecc,
        };
        Ok((conic, geom))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TangencyJson {
    #[serde(rename = "zE1")]
    pub ze1: [f64; 2],
    #[serde(rename = "zE2")]
    pub ze2: [f64; 2],
    #[serde(rename = "zE3")]
    pub ze3: [f64; 2],
    #[serde(rename = "zE1r")]
    pub ze1r: [f64; 2],
    #[serde(rename = "zE2r")]
    pub ze2r: [f64; 2],
    #[serde(rename = "zE3r")]
    pub ze3r: [f64; 2],
}

/// JSON form of a [`SteinerReport`]: the in/circum rows plus the points they came from.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportJson {
    pub triangle: Triangle,
    pub centroid: [f64; 2],
    #[serde(rename = "in")]
    pub in_ellipse: EllipseJson,
    pub circum: EllipseJson,
    pub tangency_points: TangencyJson,
    /// Images of zE1r and zE2r under the ratio −2 homothety, used for the circum fit.
    pub circum_points: [[f64; 2]; 2],
}

impl From<&SteinerReport> for ReportJson {
    fn from(r: &SteinerReport) -> Self {
        let t = &r.tangency;
        Self {
            triangle: r.triangle,
            centroid: pair(r.centroid),
            in_ellipse: EllipseJson::new(&r.in_conic, &r.in_geom),
            circum: EllipseJson::new(&r.circ_conic, &r.circ_geom),
            tangency_points: TangencyJson {
                ze1: pair(t.ze1),
                ze2: pair(t.ze2),
                ze3: pair(t.ze3),
                ze1r: pair(t.ze1r),
                ze2r: pair(t.ze2r),
                ze3r: pair(t.ze3r),
            },
            circum_points: r.circum_points.map(pair),
        }
    }
}

impl TryFrom<&ReportJson> for SteinerReport {
    type Error = String;

    fn try_from(j: &ReportJson) -> Result<Self, Self::Error> {
        let (in_conic, in_geom) = j.in_ellipse.split()?;
        let (circ_conic, circ_geom) = j.circum.split()?;
        let t = &j.tangency_points;
        Ok(SteinerReport {
            triangle: j.triangle,
            centroid: point(j.centroid),
            tangency: TangencyPoints {
                ze1: point(t.ze1),
                ze2: point(t.ze2),
                ze3: point(t.ze3),
                ze1r: point(t.ze1r),
                ze2r: point(t.ze2r),
                ze3r: point(t.ze3r),
            },
            circum_points: j.circum_points.map(point),
            in_conic,
            in_geom,
            circ_conic,
            circ_geom,
        })
    }
}

/// Per-entry failure in a batch report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ErrorRecord {
    pub index: usize,
    pub error: String,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BatchEntry {
    Report(Box<ReportJson>),
    Error(ErrorRecord),
}

fn print_ellipse(out: &mut dyn Write, heading: &str, conic: &ConicCoefficients, g: &EllipseGeometry) -> std::io::Result<()> {
    writeln!(out, "{heading}")?;
    for (name, v) in ["A", "B", "C", "D", "E", "F"].iter().zip(conic.to_array()) {
        writeln!(out, "\t{name} = {}", fmt2(v))?;
    }
    writeln!(out, "\tFoci zF1: {}", fmt2_complex(g.f1))?;
    writeln!(out, "\t     zF2: {}", fmt2_complex(g.f2))?;
    writeln!(out, "\tSemi-major axis a: {}", fmt2(g.a))?;
    writeln!(out, "\tSemi-minor axis b: {}", fmt2(g.b))?;
    writeln!(out, "\tEccentricity e: {}", fmt2(g.ecc))
}

/// Console report of one triangle, values at two decimals.
pub fn print_report(out: &mut dyn Write, r: &SteinerReport, which: Which) -> std::io::Result<()> {
    let [z1, z2, z3] = r.triangle.vertices().map(fmt2_complex);
    writeln!(out, "Triangle z1={z1}, z2={z2}, z3={z3}, centroid z0={}", fmt2_complex(r.centroid))?;
    if matches!(which, Which::In | Which::Both) {
        print_ellipse(out, "Steiner in-ellipse", &r.in_conic, &r.in_geom)?;
    }
    if matches!(which, Which::Circum | Which::Both) {
        print_ellipse(out, "Steiner circum-ellipse", &r.circ_conic, &r.circ_geom)?;
    }
    Ok(())
}

fn write_file(path: &Path, contents: &str) -> Result<(), String> {
    if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
        fs::create_dir_all(parent).map_err(|e| format!("cannot create {}: {e}", parent.display()))?;
    }
    fs::write(path, contents).map_err(|e| format!("cannot write {}: {e}", path.display()))
}

fn error_kind(e: &GeometryError) -> &'static str {
    match e {
        GeometryError::Collinear(_) => "collinear",
        GeometryError::InvalidCoordinate => "invalid coordinate",
        _ => "degenerate",
    }
}

/// Runs the pipeline for every triangle in `config` and writes the
/// requested outputs. Returns the process exit code.
pub fn run(config: &RunConfig, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let mut entries = Vec::with_capacity(config.triangles.len());
    let mut exit = EXIT_OK;

    if config.batch {
        if let Some(dir) = &config.svg_path {
            if let Err(e) = fs::create_dir_all(dir) {
                let _ = writeln!(stderr, "cannot create {}: {e}", dir.display());
                return EXIT_IO;
            }
        }
    }

    for (index, raw) in config.triangles.iter().enumerate() {
        let result = Triangle::new(raw[0], raw[1], raw[2]).and_then(|t| steiner_report(&t));
        let report = match result {
            Ok(r) => r,
            Err(e) => {
                let message = match &e {
                    GeometryError::Collinear(_) => e.to_string(),
                    other => format!("degenerate triangle: {other}"),
                };
                let _ = writeln!(stderr, "{message}");
                entries.push(BatchEntry::Error(ErrorRecord { index, error: error_kind(&e).to_string(), message }));
                exit = EXIT_COLLINEAR;
                continue;
            }
        };

        if !config.quiet {
            if config.batch {
                let _ = writeln!(stdout, "[{index}]");
            }
            let _ = print_report(stdout, &report, config.which);
        }

        if let Some(path) = &config.svg_path {
            let target = if config.batch { path.join(format!("triangle-{index:03}.svg")) } else { path.clone() };
            let svg = render(&build_scene(&report, config.which));
            if let Err(msg) = write_file(&target, &svg) {
                let _ = writeln!(stderr, "{msg}");
                return EXIT_IO;
            }
        }
        entries.push(BatchEntry::Report(Box::new(ReportJson::from(&report))));
    }

    if let Some(path) = &config.json_path {
        let text = if config.batch {
            serde_json::to_string_pretty(&entries)
        } else {
            match entries.first() {
                Some(BatchEntry::Report(r)) => serde_json::to_string_pretty(r),
                _ => return exit,
            }
        };
        let text = text.expect("report serialization is infallible");
        if let Err(msg) = write_file(path, &(text + "\n")) {
            let _ = writeln!(stderr, "{msg}");
            return EXIT_IO;
        }
    }
    exit
}

/// Parses `argv` and runs. Returns the process exit code.
pub fn main_with_args<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match parse_args(argv) {
        Ok(config) => run(&config, stdout, stderr),
        Err(CliError::Info(text)) => {
            let _ = write!(stdout, "{text}");
            EXIT_OK
        }
        Err(CliError::Usage(text)) => {
            let _ = writeln!(stderr, "{}", text.trim_end());
            EXIT_USAGE
        }
    }
}
