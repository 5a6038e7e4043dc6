//! `ncps`: evaluate, scan and export quantumness / entanglement maps of the
//! two-party Gaussian family on noncommutative phase space.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use ncps_core::scan::{
    emit_fig1_data, emit_fig2_data, evaluate_point, scan_grid, write_records, write_spectrum_rows,
    AxisRange, OutputFormat, OutputTarget, Route, ScanConfig, FIG1_DEFAULT_THETAS,
};
use ncps_core::Error;

const EXIT_USAGE: u8 = 2;
const EXIT_DOMAIN: u8 = 3;

#[derive(Parser)]
#[command(name = "ncps", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a single (theta, eta, m, n) point and print it as JSON.
    Eval(EvalArgs),
    /// Classify every point of a (theta, eta) grid.
    Scan(ScanArgs),
    /// Full symplectic spectra along eta for a few theta values.
    Fig1(Fig1Args),
    /// Region map for a nominal radius R with n = R/3, m = sqrt(2) R/3.
    Fig2(Fig2Args),
}

#[derive(Args)]
#[command(allow_negative_numbers = true)]
struct EvalArgs {
    #[arg(long)]
    theta: f64,
    #[arg(long)]
    eta: f64,
    #[arg(long)]
    m: f64,
    #[arg(long)]
    n: f64,
    /// Also run the eigensolver route and report the agreement on stderr.
    #[arg(long, short)]
    verbose: bool,
}

#[derive(Args)]
struct Output {
    #[arg(long, default_value = "csv")]
    format: OutputFormat,
    /// Output file, or `-` for standard output.
    #[arg(long, default_value = "-")]
    out: String,
}

#[derive(Args)]
#[command(allow_negative_numbers = true)]
struct ScanArgs {
    /// MIN:MAX:STEPS
    #[arg(long, default_value = "0:2:101")]
    theta_range: AxisRange,
    /// MIN:MAX:STEPS
    #[arg(long, default_value = "0:2:101")]
    eta_range: AxisRange,
    #[arg(long)]
    m: f64,
    #[arg(long)]
    n: f64,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
#[command(allow_negative_numbers = true)]
struct Fig1Args {
    #[arg(long, value_delimiter = ',', default_values_t = FIG1_DEFAULT_THETAS.to_vec())]
    thetas: Vec<f64>,
    /// MIN:MAX:STEPS
    #[arg(long, default_value = "0:2:201")]
    eta_range: AxisRange,
    /// Defaults to sqrt(2)/6 (R = 1/2 in the region-map parameterization).
    #[arg(long)]
    m: Option<f64>,
    /// Defaults to 1/6.
    #[arg(long)]
    n: Option<f64>,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
#[command(allow_negative_numbers = true)]
struct Fig2Args {
    #[arg(long)]
    r: f64,
    /// Use n = sqrt(2) R/3, m = R/3 instead.
    #[arg(long)]
    swap: bool,
    /// MIN:MAX:STEPS
    #[arg(long, default_value = "0:2:101")]
    theta_range: AxisRange,
    /// MIN:MAX:STEPS
    #[arg(long, default_value = "0:2:101")]
    eta_range: AxisRange,
    #[command(flatten)]
    output: Output,
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        let code = match err {
            Error::InvalidFamily(_) | Error::InvalidDeformation { .. } | Error::InvalidRange(_) => {
                EXIT_USAGE
            }
            _ => EXIT_DOMAIN,
        };
        Failure {
            code,
            message: err.to_string(),
        }
    }
}

fn io_failure(target: &OutputTarget, err: io::Error) -> Failure {
    let place = match target {
        OutputTarget::Stdout => "standard output".to_string(),
        OutputTarget::File(p) => p.display().to_string(),
    };
    Failure {
        code: EXIT_USAGE,
        message: format!("cannot write {place}: {err}"),
    }
}

fn emit(
    target: &OutputTarget,
    write: impl FnOnce(&mut dyn Write) -> io::Result<()>,
) -> Result<(), Failure> {
    let result = match target {
        OutputTarget::Stdout => {
            let stdout = io::stdout();
            let mut lock = stdout.lock();
            write(&mut lock).and_then(|_| lock.flush())
        }
        OutputTarget::File(path) => {
            let file = File::create(path).map_err(|e| io_failure(target, e))?;
            let mut buf = BufWriter::new(file);
            write(&mut buf).and_then(|_| buf.flush())
        }
    };
    result.map_err(|e| io_failure(target, e))
}

fn run_eval(args: &EvalArgs) -> Result<(), Failure> {
    let eval = evaluate_point(args.theta, args.eta, args.m, args.n, args.verbose)?;
    if args.verbose {
        let route = match eval.route {
            Route::ClosedForm => "closed-form",
            Route::Spectral => "eigensolver",
            Route::None => "none",
        };
        eprintln!("route: {route}");
        if let Some((nu, nup)) = eval.spectral {
            eprintln!("eigensolver: nu_minus = {nu}, nu_minus_prime = {nup}");
        }
        if let Some(gap) = eval.route_gap() {
            eprintln!("max relative route gap: {gap:e}");
        }
    }
    let text = serde_json::to_string_pretty(&eval.record.rounded()).expect("record serializes");
    println!("{text}");
    Ok(())
}

fn run_scan(args: &ScanArgs) -> Result<(), Failure> {
    let config = ScanConfig {
        theta_range: args.theta_range,
        eta_range: args.eta_range,
        m: args.m,
        n: args.n,
        output_format: args.output.format,
        output_path: OutputTarget::from(args.output.out.as_str()),
    };
    let records = scan_grid(&config)?;
    emit(&config.output_path, |w| {
        write_records(&records, config.output_format, w)
    })
}

fn run_fig1(args: &Fig1Args) -> Result<(), Failure> {
    let m = args.m.unwrap_or(2f64.sqrt() / 6.0);
    let n = args.n.unwrap_or(1.0 / 6.0);
    let rows = emit_fig1_data(&args.thetas, &args.eta_range, m, n)?;
    let target = OutputTarget::from(args.output.out.as_str());
    emit(&target, |w| {
        write_spectrum_rows(&rows, args.output.format, w)
    })
}

fn run_fig2(args: &Fig2Args) -> Result<(), Failure> {
    let records = emit_fig2_data(args.r, args.swap, &args.theta_range, &args.eta_range)?;
    let target = OutputTarget::from(args.output.out.as_str());
    emit(&target, |w| write_records(&records, args.output.format, w))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Eval(args) => run_eval(args),
        Command::Scan(args) => run_scan(args),
        Command::Fig1(args) => run_fig1(args),
        Command::Fig2(args) => run_fig2(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
