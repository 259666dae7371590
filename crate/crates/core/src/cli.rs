//! Command-line front end: argument parsing, output envelopes and rendering.
//!
//! Exit codes: 0 success, 1 usage, 2 numerical failure, 3 validation failure.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::analysis::{
    figure_data, find_crossing, generate_table, validate_reference_values, CrossingResult, FigureData, FigureId, Group,
    TableArtifact, TableId, ValidationReport, DEFAULT_COMPARISON_TOLERANCE,
};
use crate::entropy::{entropy_sum, uncertainty, EntropyReport, QuadratureSpec, TailRadius, UncertaintyReport};
use crate::error::Error;
use crate::systems::{QuantumState, System};

pub const SCHEMA_VERSION: &str = "1";
pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_NUMERIC: i32 = 2;
pub const EXIT_VALIDATION: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "qentropy", version, about = "Position and momentum information entropies of 1D quantum states")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    /// Output format (csv for table and figure, json otherwise).
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Decimal places in CSV output.
    #[arg(long, default_value_t = 4)]
    pub precision: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Entropies and uncertainty measures for one state.
    #[command(allow_negative_numbers = true)]
    State {
        /// ho | box
        system: System,
        #[arg(long)]
        n: u32,
        /// Oscillator frequency (atomic units).
        #[arg(long)]
        omega: Option<f64>,
        /// Box width (atomic units).
        #[arg(long)]
        xc: Option<f64>,
        /// Absolute quadrature tolerance.
        #[arg(long)]
        tolerance: Option<f64>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Entropy table over a parameter grid (1: oscillator, 2: box).
    #[command(allow_negative_numbers = true)]
    Table {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=2))]
        table: u8,
        /// Comma-separated parameter values replacing the default grid.
        #[arg(long, value_delimiter = ',')]
        grid: Option<Vec<f64>>,
        #[arg(long)]
        tolerance: Option<f64>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Plot-ready series for figures 2 to 8.
    Figure {
        #[arg(value_parser = clap::value_parser!(u8).range(2..=8))]
        figure: u8,
        #[arg(long)]
        tolerance: Option<f64>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Parameter at which the position and momentum entropies are equal.
    #[command(allow_negative_numbers = true)]
    Crossing {
        system: System,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        lo: f64,
        #[arg(long)]
        hi: f64,
        #[arg(long)]
        tolerance: Option<f64>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Recompute the published reference values and compare.
    #[command(allow_negative_numbers = true)]
    Validate {
        /// Absolute comparison tolerance.
        #[arg(long, default_value_t = DEFAULT_COMPARISON_TOLERANCE)]
        tolerance: f64,
        /// Restrict to one group: table1, table2, text, crossings.
        #[arg(long)]
        only: Option<Group>,
        /// Absolute quadrature tolerance.
        #[arg(long)]
        quad_tolerance: Option<f64>,
        #[command(flatten)]
        output: OutputArgs,
    },
}

/// One state's full report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StateReport {
    pub state: QuantumState,
    pub energy: f64,
    pub entropy: EntropyReport,
    pub uncertainty: UncertaintyReport,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Payload {
    State(StateReport),
    Table(TableArtifact),
    Figure(FigureData),
    Crossing(CrossingResult),
    Validation(ValidationReport),
}

/// Wrapper written around every result so a file is self-describing.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputEnvelope {
    pub schema_version: String,
    /// Canonical form of the invoking command.
    pub command: String,
    pub units: String,
    pub spec: QuadratureSpec,
    pub payload: Payload,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Numeric(Error),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => EXIT_USAGE,
            CliError::Numeric(_) => EXIT_NUMERIC,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e.root() {
            Error::Domain(_) | Error::Bracket { .. } => CliError::Usage(e.to_string()),
            _ => CliError::Numeric(e),
        }
    }
}

/// Rendered output plus the exit code it should produce.
#[derive(Debug, Clone, PartialEq)]
pub struct Rendered {
    pub body: String,
    pub exit_code: i32,
    pub out: Option<PathBuf>,
    /// Human-readable verdict for stderr (validation only).
    pub summary: Option<String>,
}

fn quadrature_spec(tolerance: Option<f64>) -> Result<QuadratureSpec, CliError> {
    let spec = match tolerance {
        Some(t) => QuadratureSpec::with_tolerance(t),
        None => QuadratureSpec::from_env(),
    };
    spec.map_err(|e| CliError::Usage(e.to_string()))
}

fn positive(name: &str, v: f64) -> Result<f64, CliError> {
    if v > 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(CliError::Usage(format!("--{name} must be a positive number, got {v}")))
    }
}

fn check_n(system: System, n: u32) -> Result<(), CliError> {
    if n < system.ground_n() {
        return Err(CliError::Usage(format!(
            "--n must be at least {} for the {system}",
            system.ground_n()
        )));
    }
    Ok(())
}

fn system_parameter(system: System, omega: Option<f64>, xc: Option<f64>) -> Result<f64, CliError> {
    match (system, omega, xc) {
        (System::Oscillator, Some(w), None) => positive("omega", w),
        (System::Box, None, Some(x)) => positive("xc", x),
        (System::Oscillator, _, _) => Err(CliError::Usage("the oscillator takes --omega (and not --xc)".into())),
        (System::Box, _, _) => Err(CliError::Usage("the box takes --xc (and not --omega)".into())),
    }
}

fn system_arg(system: System) -> &'static str {
    match system {
        System::Oscillator => "ho",
        System::Box => "box",
    }
}

fn output_args(cmd: &Command) -> &OutputArgs {
    match cmd {
        Command::State { output, .. }
        | Command::Table { output, .. }
        | Command::Figure { output, .. }
        | Command::Crossing { output, .. }
        | Command::Validate { output, .. } => output,
    }
}

/// Runs a parsed command and renders its output without touching the filesystem.
pub fn run(cli: &Cli) -> Result<Rendered, CliError> {
    let output = output_args(&cli.command);
    let (envelope, default_format) = match &cli.command {
        Command::State {
            system,
            n,
            omega,
            xc,
            tolerance,
            ..
        } => {
            let param = system_parameter(*system, *omega, *xc)?;
            check_n(*system, *n)?;
            let spec = quadrature_spec(*tolerance)?;
            let state = system.atomic_state(*n, param)?;
            let (entropy, unc) = rayon::join(|| entropy_sum(&state, &spec), || uncertainty(&state, &spec));
            let report = StateReport {
                state,
                energy: state.energy(),
                entropy: entropy?,
                uncertainty: unc?,
            };
            let command = format!(
                "state {} --n {n} --{} {param} --tolerance {:e}",
                system_arg(*system),
                system.parameter_name(),
                spec.abs_tolerance
            );
            (envelope(command, spec, Payload::State(report)), Format::Json)
        }
        Command::Table {
            table, grid, tolerance, ..
        } => {
            let id = TableId::from_number(*table).ok_or_else(|| CliError::Usage(format!("no table {table}")))?;
            let spec = quadrature_spec(*tolerance)?;
            let grid = match grid {
                Some(g) => {
                    for v in g {
                        positive("grid", *v)?;
                    }
                    g.clone()
                }
                None => id.grid(),
            };
            let artifact = generate_table(id.system(), &grid, &id.quantum_numbers(), &spec)?;
            let grid_echo: Vec<String> = grid.iter().map(f64::to_string).collect();
            let command = format!(
                "table {table} --grid {} --tolerance {:e}",
                grid_echo.join(","),
                spec.abs_tolerance
            );
            (envelope(command, spec, Payload::Table(artifact)), Format::Csv)
        }
        Command::Figure { figure, tolerance, .. } => {
            let id = FigureId::from_number(*figure).map_err(|e| CliError::Usage(e.to_string()))?;
            let spec = quadrature_spec(*tolerance)?;
            let data = figure_data(id, &spec)?;
            let command = format!("figure {figure} --tolerance {:e}", spec.abs_tolerance);
            (envelope(command, spec, Payload::Figure(data)), Format::Csv)
        }
        Command::Crossing {
            system,
            n,
            lo,
            hi,
            tolerance,
            ..
        } => {
            check_n(*system, *n)?;
            positive("lo", *lo)?;
            positive("hi", *hi)?;
            if lo >= hi {
                return Err(CliError::Usage(format!("--lo ({lo}) must be below --hi ({hi})")));
            }
            let spec = quadrature_spec(*tolerance)?;
            let result = find_crossing(*system, *n, (*lo, *hi), &spec)?;
            let command = format!(
                "crossing {} --n {n} --lo {lo} --hi {hi} --tolerance {:e}",
                system_arg(*system),
                spec.abs_tolerance
            );
            (envelope(command, spec, Payload::Crossing(result)), Format::Json)
        }
        Command::Validate {
            tolerance,
            only,
            quad_tolerance,
            ..
        } => {
            positive("tolerance", *tolerance)?;
            let spec = quadrature_spec(*quad_tolerance)?;
            let report = validate_reference_values(&spec, *tolerance, *only)?;
            let mut command = format!("validate --tolerance {tolerance:e}");
            if let Some(g) = only {
                command.push_str(&format!(" --only {g}"));
            }
            command.push_str(&format!(" --quad-tolerance {:e}", spec.abs_tolerance));
            (envelope(command, spec, Payload::Validation(report)), Format::Json)
        }
    };

    let body = match output.format.unwrap_or(default_format) {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&envelope).expect("envelope serializes");
            s.push('\n');
            s
        }
        Format::Csv => render_csv(&envelope, output.precision)?,
    };
    let (exit_code, summary) = match &envelope.payload {
        Payload::Validation(r) => (
            if r.passed { EXIT_OK } else { EXIT_VALIDATION },
            Some(validation_summary(r)),
        ),
        _ => (EXIT_OK, None),
    };
    Ok(Rendered {
        body,
        exit_code,
        out: output.out.clone(),
        summary,
    })
}

fn envelope(command: String, spec: QuadratureSpec, payload: Payload) -> OutputEnvelope {
    OutputEnvelope {
        schema_version: SCHEMA_VERSION.to_string(),
        command,
        units: "atomic".to_string(),
        spec,
        payload,
    }
}

/// Fixed-point formatting with negative zero folded to zero.
pub fn format_fixed(v: f64, precision: usize) -> String {
    let s = format!("{v:.precision$}");
    if s.starts_with('-') && s[1..].chars().all(|c| c == '0' || c == '.') {
        s[1..].to_string()
    } else {
        s
    }
}

fn render_csv(env: &OutputEnvelope, precision: usize) -> Result<String, CliError> {
    let f = |v: f64| format_fixed(v, precision);
    let opt = |v: Option<f64>| v.map(f).unwrap_or_default();
    let mut out = String::new();
    out.push_str(&format!("# schema_version: {}\n", env.schema_version));
    out.push_str(&format!("# command: {}\n", env.command));
    out.push_str(&format!("# units: {}\n", env.units));
    let tail = match env.spec.momentum_tail_radius {
        TailRadius::Auto => "auto".to_string(),
        TailRadius::Fixed(r) => r.to_string(),
    };
    out.push_str(&format!(
        "# quadrature: abs_tolerance={:e} max_subdivisions={} momentum_tail_radius={tail}\n",
        env.spec.abs_tolerance, env.spec.max_subdivisions
    ));

    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    let mut row = |fields: Vec<String>| w.write_record(&fields);
    match &env.payload {
        Payload::State(r) => {
            let s = &r.state;
            row(
                [
                    "system", "n", "parameter", "energy", "sx", "sp", "st", "bbm_margin", "dx", "dp", "product",
                    "kennard_margin",
                ]
                .map(String::from)
                .to_vec(),
            )
            .map_err(csv_err)?;
            let (e, u) = (&r.entropy, &r.uncertainty);
            row(vec![
                s.system().to_string(),
                s.n().to_string(),
                f(s.parameter()),
                f(r.energy),
                f(e.sx),
                f(e.sp),
                f(e.st),
                f(e.bbm_margin),
                f(u.dx),
                f(u.dp),
                f(u.product),
                f(u.kennard_margin),
            ])
            .map_err(csv_err)?;
        }
        Payload::Table(t) => {
            let mut header = vec![t.parameter_name.clone()];
            for q in ["sx", "sp", "st"] {
                header.extend(t.quantum_numbers.iter().map(|n| format!("{q}_n{n}")));
            }
            row(header).map_err(csv_err)?;
            for r in &t.rows {
                let mut fields = vec![f(r.parameter)];
                fields.extend(r.reports.iter().map(|e| f(e.sx)));
                fields.extend(r.reports.iter().map(|e| f(e.sp)));
                fields.extend(r.reports.iter().map(|e| f(e.st)));
                row(fields).map_err(csv_err)?;
            }
        }
        Payload::Figure(fig) => {
            row(vec!["series".into(), fig.x_label.clone(), fig.y_label.clone()]).map_err(csv_err)?;
            for s in &fig.series {
                for (x, y) in s.x.iter().zip(&s.y) {
                    row(vec![s.name.clone(), f(*x), f(*y)]).map_err(csv_err)?;
                }
            }
        }
        Payload::Crossing(c) => {
            row(["system", "n", "parameter", "entropy", "residual", "bracket_lo", "bracket_hi"]
                .map(String::from)
                .to_vec())
            .map_err(csv_err)?;
            row(vec![
                c.system.to_string(),
                c.n.to_string(),
                f(c.parameter_value),
                f(c.entropy_value),
                format!("{:e}", c.residual),
                f(c.bracket.0),
                f(c.bracket.1),
            ])
            .map_err(csv_err)?;
        }
        Payload::Validation(v) => {
            row(["id", "group", "quantity", "expected", "computed", "deviation", "gating", "pass"]
                .map(String::from)
                .to_vec())
            .map_err(csv_err)?;
            for e in &v.entries {
                row(vec![
                    e.id.clone(),
                    e.group.to_string(),
                    e.quantity.to_string(),
                    f(e.expected),
                    opt(e.computed),
                    e.deviation.map(|d| format!("{d:.2e}")).unwrap_or_default(),
                    e.gating.to_string(),
                    e.pass.to_string(),
                ])
                .map_err(csv_err)?;
            }
            for c in &v.checks {
                row(vec![
                    c.id.clone(),
                    "check".into(),
                    "ordering".into(),
                    String::new(),
                    String::new(),
                    String::new(),
                    "true".into(),
                    c.pass.to_string(),
                ])
                .map_err(csv_err)?;
            }
        }
    }
    let bytes = w.into_inner().map_err(|e| CliError::Io(e.into_error()))?;
    out.push_str(&String::from_utf8(bytes).expect("csv output is UTF-8"));
    Ok(out)
}

fn csv_err(e: csv::Error) -> CliError {
    CliError::Io(std::io::Error::other(e))
}

/// One-line-per-entry summary of a validation run, for stderr.
pub fn validation_summary(report: &ValidationReport) -> String {
    let mut s = String::new();
    for e in report.entries.iter().filter(|e| !e.pass) {
        let tag = if e.gating { "FAIL" } else { "note" };
        let got = e.computed.map(|v| format!("{v:.6}")).unwrap_or_else(|| "error".into());
        s.push_str(&format!("{tag} {} expected {} got {got}\n", e.id, e.expected));
    }
    for c in report.checks.iter().filter(|c| !c.pass) {
        s.push_str(&format!("FAIL {}: {}\n", c.id, c.description));
    }
    let verdict = if report.passed { "PASS" } else { "FAIL" };
    s.push_str(&format!(
        "{verdict}: {} of {} gating values within {:e}; {} of {} checks hold\n",
        report.gating_total - report.gating_failed,
        report.gating_total,
        report.tolerance,
        report.checks.iter().filter(|c| c.pass).count(),
        report.checks.len()
    ));
    s
}

/// Parses `args`, runs the command, writes the output and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let rendered = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            let kind = match e {
                CliError::Numeric(_) => "numerical failure",
                _ => "error",
            };
            eprintln!("qentropy: {kind}: {e}");
            return e.exit_code();
        }
    };
    let written = match &rendered.out {
        Some(path) => std::fs::write(path, &rendered.body),
        None => std::io::stdout().lock().write_all(rendered.body.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("qentropy: cannot write output: {e}");
        return EXIT_USAGE;
    }
    if let Some(summary) = &rendered.summary {
        eprint!("{summary}");
    }
    rendered.exit_code
}
