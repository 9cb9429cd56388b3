//! `hecke-bose`: runs the verification suites and the Bethe-ansatz
//! computations from the command line, with JSON or CSV output.

mod output;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use hecke_bose::bethe::{
    bethe_wave, eigen_defect, hall_littlewood_p, hall_littlewood_r, hl_defect, pi_defect,
    solve_bethe, v_lambda, HomotopyOptions, Partition,
};
use hecke_bose::scalar::{format_rational, parse_rational};
use hecke_bose::suites::{self, ParamsReport, Suite, VerifyConfig};
use hecke_bose::{Error, Params, Rational};
use num::complex::Complex64;
use serde::Serialize;

use output::{Emit, Format};

/// Eigenfunction and rotation defects at or above this fail `bethe`.
const DEFECT_TOLERANCE: f64 = 1e-8;

#[derive(Parser)]
#[command(
    name = "hecke-bose",
    version,
    about = "Exact checks for the discrete periodic delta Bose gas"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a named verification suite over a window of lattice points.
    Verify(VerifyArgs),
    /// Continue roots of unity to a Bethe root and check the wave function.
    Bethe(BetheArgs),
    /// Tabulate the Bethe wave function over a window.
    Wavefunction(WaveArgs),
    /// Evaluate a Hall-Littlewood polynomial exactly.
    HallLittlewood(HallLittlewoodArgs),
}

#[derive(Args, Clone)]
struct ModelArgs {
    /// Number of particles (at least 2).
    #[arg(long)]
    k: usize,
    /// System size (at least 1).
    #[arg(long = "L")]
    l: i64,
    /// Coupling α as "a" or "a/b".
    #[arg(long, allow_hyphen_values = true, default_value = "0")]
    alpha: String,
    /// Coupling β ≠ 0 as "a" or "a/b".
    #[arg(long, allow_hyphen_values = true, default_value = "1")]
    beta: String,
}

impl ModelArgs {
    fn params(&self) -> anyhow::Result<Params> {
        Ok(Params::parse(self.k, self.l, &self.alpha, &self.beta)?)
    }
}

#[derive(Args, Clone)]
struct OutputArgs {
    /// Write the result here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
        }
    }
}

#[derive(Args)]
struct VerifyArgs {
    /// One of hecke, duality, d-change, w-invariance, lemma-main, theorem, hl-identity.
    suite: Suite,
    #[command(flatten)]
    model: ModelArgs,
    #[arg(long, default_value_t = 3)]
    window: i64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Replace H by a deliberately broken operator.
    #[cfg(feature = "fault-injection")]
    #[arg(long, hide = true)]
    corrupt_d_plus: bool,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct BetheArgs {
    #[command(flatten)]
    model: ModelArgs,
    /// Exponents n_i of the starting roots e^{2πi n_i/L}, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    seeds: Vec<usize>,
    /// Nominal number of continuation steps.
    #[arg(long, default_value_t = 32)]
    steps: usize,
    /// Radius of the window for the eigenfunction and rotation checks.
    #[arg(long, default_value_t = 4)]
    window: i64,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct WaveArgs {
    #[command(flatten)]
    model: ModelArgs,
    /// Exact spectral parameters, comma separated rationals.
    #[arg(
        long,
        value_delimiter = ',',
        allow_hyphen_values = true,
        conflicts_with = "roots_file"
    )]
    p: Vec<String>,
    /// JSON output of `bethe`; its complex roots are used as p.
    #[arg(long)]
    roots_file: Option<PathBuf>,
    #[arg(long, default_value_t = 2)]
    window: i64,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct HallLittlewoodArgs {
    /// Partition parts, comma separated and weakly decreasing.
    #[arg(long, value_delimiter = ',', required = true)]
    lambda: Vec<i64>,
    /// Evaluation point, comma separated rationals.
    #[arg(
        long,
        value_delimiter = ',',
        allow_hyphen_values = true,
        required = true
    )]
    z: Vec<String>,
    #[arg(long, allow_hyphen_values = true)]
    t: String,
    #[command(flatten)]
    output: OutputArgs,
}

/// How a command finished once its output was written.
enum Status {
    Passed,
    Failed,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = configure_threads() {
        eprintln!("error: {e:#}");
        return ExitCode::from(2);
    }
    let result = match cli.command {
        Command::Verify(args) => verify(args),
        Command::Bethe(args) => bethe(args),
        Command::Wavefunction(args) => wavefunction(args),
        Command::HallLittlewood(args) => hall_littlewood(args),
    };
    match result {
        Ok(Status::Passed) => ExitCode::SUCCESS,
        Ok(Status::Failed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn configure_threads() -> anyhow::Result<()> {
    if let Ok(raw) = std::env::var("HECKE_BOSE_THREADS") {
        let n: usize = raw
            .parse()
            .with_context(|| format!("HECKE_BOSE_THREADS={raw:?} is not a count"))?;
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()?;
    }
    Ok(())
}

fn verify(args: VerifyArgs) -> anyhow::Result<Status> {
    if args.window < 0 {
        bail!("--window must be non-negative");
    }
    #[allow(unused_mut)]
    let mut config = VerifyConfig::new(args.suite, args.model.params()?, args.window, args.seed);
    #[cfg(feature = "fault-injection")]
    {
        config.corrupt_d_plus = args.corrupt_d_plus;
    }
    let report = suites::run(&config)?;
    let status = if report.passed() {
        Status::Passed
    } else {
        Status::Failed
    };
    let emit = Emit::new(args.output.format.into(), args.output.out);
    match emit.format {
        Format::Json => emit.json(&report)?,
        Format::Csv => emit.csv(
            &["x", "detail"],
            report
                .failures
                .iter()
                .map(|f| vec![output::point(&f.x), f.detail.clone()]),
        )?,
    }
    Ok(status)
}

#[derive(Serialize)]
struct BetheReport {
    schema: u32,
    command: &'static str,
    params: ParamsReport,
    seeds: Vec<usize>,
    steps: usize,
    window: i64,
    roots: Vec<[f64; 2]>,
    residual: f64,
    eigenvalue: [f64; 2],
    eigen_defect: f64,
    pi_defect: f64,
    /// Hall-Littlewood cross-check; only defined at α = 0.
    hl_defect: Option<f64>,
    passed: bool,
    elapsed_ms: u64,
}

#[derive(Serialize)]
struct ErrorReport {
    schema: u32,
    command: &'static str,
    params: ParamsReport,
    seeds: Vec<usize>,
    error: ContinuationError,
}

#[derive(Serialize)]
struct ContinuationError {
    kind: &'static str,
    s: f64,
    reason: String,
}

fn complex_pair(z: Complex64) -> [f64; 2] {
    [z.re, z.im]
}

fn bethe(args: BetheArgs) -> anyhow::Result<Status> {
    let params = args.model.params()?;
    let start = Instant::now();
    let emit = Emit::new(args.output.format.into(), args.output.out);
    let sol = match solve_bethe(
        &params,
        &args.seeds,
        args.steps,
        &HomotopyOptions::default(),
    ) {
        Ok(sol) => sol,
        Err(Error::Continuation { s, reason }) => {
            emit.json(&ErrorReport {
                schema: suites::SCHEMA_VERSION,
                command: "bethe",
                params: ParamsReport::from(&params),
                seeds: args.seeds,
                error: ContinuationError {
                    kind: "continuation",
                    s,
                    reason,
                },
            })?;
            return Ok(Status::Failed);
        }
        Err(e) => return Err(e.into()),
    };
    let eigen = eigen_defect(&sol.p, &params, args.window);
    let pi = pi_defect(&sol.p, &params, args.window);
    let hl = hl_defect(&sol.p, &params, args.window);
    let passed = eigen < DEFECT_TOLERANCE
        && pi < DEFECT_TOLERANCE
        && hl.is_none_or(|d| d < DEFECT_TOLERANCE);
    let report = BetheReport {
        schema: suites::SCHEMA_VERSION,
        command: "bethe",
        params: ParamsReport::from(&params),
        seeds: args.seeds,
        steps: args.steps,
        window: args.window,
        roots: sol.p.iter().copied().map(complex_pair).collect(),
        residual: sol.residual,
        eigenvalue: complex_pair(sol.eigenvalue()),
        eigen_defect: eigen,
        pi_defect: pi,
        hl_defect: hl,
        passed,
        elapsed_ms: start.elapsed().as_millis() as u64,
    };
    match emit.format {
        Format::Json => emit.json(&report)?,
        Format::Csv => emit.csv(
            &["index", "re", "im"],
            report
                .roots
                .iter()
                .enumerate()
                .map(|(i, [re, im])| vec![(i + 1).to_string(), re.to_string(), im.to_string()]),
        )?,
    }
    Ok(if passed {
        Status::Passed
    } else {
        Status::Failed
    })
}

#[derive(Serialize)]
struct WaveReport<V> {
    schema: u32,
    command: &'static str,
    params: ParamsReport,
    window: i64,
    p: Vec<V>,
    rows: Vec<WaveRow<V>>,
}

#[derive(Serialize)]
struct WaveRow<V> {
    x: Vec<i64>,
    value: V,
}

fn wavefunction(args: WaveArgs) -> anyhow::Result<Status> {
    if args.window < 0 {
        bail!("--window must be non-negative");
    }
    let params = args.model.params()?;
    let emit = Emit::new(args.output.format.into(), args.output.out);
    let points = params.lattice.window(args.window);
    let header: Vec<String> = (1..=params.k()).map(|i| format!("x{i}")).collect();

    if let Some(path) = &args.roots_file {
        let p = output::read_roots(path)?;
        if p.len() != params.k() {
            bail!(
                "{} holds {} roots, expected k = {}",
                path.display(),
                p.len(),
                params.k()
            );
        }
        let rows: Vec<WaveRow<[f64; 2]>> = points
            .iter()
            .map(|x| WaveRow {
                x: x.coords().to_vec(),
                value: complex_pair(bethe_wave(&p, x, &params)),
            })
            .collect();
        match emit.format {
            Format::Json => emit.json(&WaveReport {
                schema: suites::SCHEMA_VERSION,
                command: "wavefunction",
                params: ParamsReport::from(&params),
                window: args.window,
                p: p.iter().copied().map(complex_pair).collect(),
                rows,
            })?,
            Format::Csv => {
                let mut cols: Vec<&str> = header.iter().map(String::as_str).collect();
                cols.extend(["re", "im"]);
                emit.csv(
                    &cols,
                    rows.iter().map(|r| {
                        let mut line: Vec<String> = r.x.iter().map(i64::to_string).collect();
                        line.extend([r.value[0].to_string(), r.value[1].to_string()]);
                        line
                    }),
                )?
            }
        }
        return Ok(Status::Passed);
    }

    if args.p.len() != params.k() {
        bail!("--p needs k = {} values, got {}", params.k(), args.p.len());
    }
    let p: Vec<Rational> = args
        .p
        .iter()
        .map(|s| parse_rational(s))
        .collect::<Result<_, _>>()?;
    if let Some(i) = p
        .iter()
        .position(|v| *v == Rational::from_integer(0.into()))
    {
        bail!("p_{} must be nonzero", i + 1);
    }
    let rows: Vec<WaveRow<String>> = points
        .iter()
        .map(|x| WaveRow {
            x: x.coords().to_vec(),
            value: format_rational(&bethe_wave(&p, x, &params)),
        })
        .collect();
    match emit.format {
        Format::Json => emit.json(&WaveReport {
            schema: suites::SCHEMA_VERSION,
            command: "wavefunction",
            params: ParamsReport::from(&params),
            window: args.window,
            p: p.iter().map(format_rational).collect(),
            rows,
        })?,
        Format::Csv => {
            let mut cols: Vec<&str> = header.iter().map(String::as_str).collect();
            cols.push("value");
            emit.csv(
                &cols,
                rows.iter().map(|r| {
                    let mut line: Vec<String> = r.x.iter().map(i64::to_string).collect();
                    line.push(r.value.clone());
                    line
                }),
            )?
        }
    }
    Ok(Status::Passed)
}

#[derive(Serialize)]
struct HallLittlewoodReport {
    schema: u32,
    command: &'static str,
    lambda: Vec<i64>,
    z: Vec<String>,
    t: String,
    v_lambda: String,
    r: String,
    p: String,
}

fn hall_littlewood(args: HallLittlewoodArgs) -> anyhow::Result<Status> {
    let lambda = Partition::new(args.lambda)?;
    let z: Vec<Rational> = args
        .z
        .iter()
        .map(|s| parse_rational(s))
        .collect::<Result<_, _>>()?;
    let t = parse_rational(&args.t)?;
    let parts = lambda.padded(z.len())?;
    let report = HallLittlewoodReport {
        schema: suites::SCHEMA_VERSION,
        command: "hall-littlewood",
        lambda: parts.clone(),
        z: z.iter().map(format_rational).collect(),
        t: format_rational(&t),
        v_lambda: format_rational(&v_lambda(&parts, &t)),
        r: format_rational(&hall_littlewood_r(&parts, &z, &t)?),
        p: format_rational(&hall_littlewood_p(&lambda, &z, &t)?),
    };
    let emit = Emit::new(args.output.format.into(), args.output.out);
    match emit.format {
        Format::Json => emit.json(&report)?,
        Format::Csv => emit.csv(
            &["v_lambda", "r", "p"],
            std::iter::once(vec![
                report.v_lambda.clone(),
                report.r.clone(),
                report.p.clone(),
            ]),
        )?,
    }
    Ok(Status::Passed)
}
