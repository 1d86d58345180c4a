//! Command-line front end for sweeps and threshold tables.
//!
//! Exit codes: 0 success, 1 validation error, 2 oracle mismatch, 3 IO error.

use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use squeezekit::sweep::{
    emit_csv, emit_json, emit_plot, emit_thresholds, threshold_table, write_csv, write_json,
    write_thresholds_csv, write_thresholds_json, Format, SweepConfig, SweepTable,
};
use squeezekit::Error;

const OUT_DIR_ENV: &str = "SQUEEZEKIT_OUT_DIR";

#[derive(Parser)]
#[command(
    name = "squeezekit",
    version,
    about = "Spin squeezing sweeps over two-spinor symmetric states"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate ξ over an (N, k, a) grid.
    Sweep(SweepArgs),
    /// Lower squeezing threshold and minimum ξ per (N, k).
    Thresholds(CommonArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// key = value config file; flags override it.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Qubit counts, e.g. "4,8,20..24".
    #[arg(long = "N")]
    n: Option<String>,
    /// "all" or a list of k values.
    #[arg(long)]
    k: Option<String>,
    /// Cap for k = all ("none" removes the cap).
    #[arg(long)]
    k_max: Option<String>,
    /// Output file; defaults to $SQUEEZEKIT_OUT_DIR/<name>, else stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// csv or json.
    #[arg(long)]
    format: Option<String>,
    /// Worker threads (default: logical cores).
    #[arg(long)]
    jobs: Option<String>,
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// start:stop:steps.
    #[arg(long)]
    a_grid: Option<String>,
    /// closed, generic, scan or crosscheck.
    #[arg(long)]
    mode: Option<String>,
    /// Also write an SVG per N next to the output.
    #[arg(long)]
    plot: bool,
    /// Report ξ² instead of ξ.
    #[arg(long)]
    squared: bool,
    /// Golden-section tolerance of the direction scan.
    #[arg(long)]
    scan_tol: Option<String>,
    /// Largest oracle difference accepted in crosscheck mode.
    #[arg(long)]
    tolerance: Option<String>,
}

fn build_config(
    common: &CommonArgs,
    extra: &[(&str, Option<&String>)],
) -> Result<SweepConfig, Error> {
    let mut cfg = match &common.config {
        Some(path) => SweepConfig::from_file(path)?,
        None => SweepConfig::default(),
    };
    let out = common.out.as_ref().map(|p| p.display().to_string());
    let flags = [
        ("N", common.n.as_ref()),
        ("k", common.k.as_ref()),
        ("k_max", common.k_max.as_ref()),
        ("out", out.as_ref()),
        ("format", common.format.as_ref()),
        ("jobs", common.jobs.as_ref()),
    ];
    for (key, value) in flags.iter().chain(extra) {
        if let Some(v) = value {
            cfg.set(key, v, &format!("--{}", key.replace('_', "-")))?;
        }
    }
    Ok(cfg)
}

fn output_path(explicit: &Option<PathBuf>, stem: &str, format: Format) -> Option<PathBuf> {
    explicit.clone().or_else(|| {
        std::env::var_os(OUT_DIR_ENV)
            .map(|dir| PathBuf::from(dir).join(format!("{stem}.{}", format.extension())))
    })
}

fn plot_path(out: Option<&Path>, n: usize, many: bool) -> PathBuf {
    let base = match out {
        Some(p) => p.with_extension(""),
        None => std::env::var_os(OUT_DIR_ENV)
            .map(PathBuf::from)
            .unwrap_or_default()
            .join("sweep"),
    };
    let mut name = base.into_os_string();
    if many {
        name.push(format!("_N{n}"));
    }
    name.push(".svg");
    PathBuf::from(name)
}

fn stdout_err(e: io::Error) -> Error {
    Error::Io {
        path: PathBuf::from("<stdout>"),
        source: e,
    }
}

fn run_sweep_cmd(args: &SweepArgs) -> Result<(), Error> {
    let squared = args.squared.then(|| "true".to_string());
    let plot = args.plot.then(|| "true".to_string());
    let cfg = build_config(
        &args.common,
        &[
            ("a_grid", args.a_grid.as_ref()),
            ("mode", args.mode.as_ref()),
            ("scan_tol", args.scan_tol.as_ref()),
            ("tolerance", args.tolerance.as_ref()),
            ("squared", squared.as_ref()),
            ("plot", plot.as_ref()),
        ],
    )?;
    let table = squeezekit::sweep::run_sweep(&cfg)?;
    let out = output_path(&cfg.output, "sweep", cfg.format);
    match (&out, cfg.format) {
        (Some(p), Format::Csv) => write_csv(&table, p)?,
        (Some(p), Format::Json) => write_json(&table, p)?,
        (None, Format::Csv) => emit_csv(&table, io::stdout().lock()).map_err(stdout_err)?,
        (None, Format::Json) => emit_json(&table, io::stdout().lock()).map_err(stdout_err)?,
    }
    if cfg.emit_plot {
        let ns = table.n_values();
        for &n in &ns {
            let sub: SweepTable = table.for_n(n);
            emit_plot(&sub, &plot_path(out.as_deref(), n, ns.len() > 1))?;
        }
    }
    if let Some(d) = table.max_oracle_diff() {
        eprintln!("max oracle difference: {d:e}");
    }
    table.check_oracle(cfg.crosscheck_tolerance)
}

fn run_thresholds_cmd(args: &CommonArgs) -> Result<(), Error> {
    let cfg = build_config(args, &[])?;
    let rows = threshold_table(&cfg.pairs()?, cfg.jobs)?;
    match (
        output_path(&cfg.output, "thresholds", cfg.format),
        cfg.format,
    ) {
        (Some(p), Format::Csv) => write_thresholds_csv(&rows, &p),
        (Some(p), Format::Json) => write_thresholds_json(&rows, &p),
        (None, Format::Csv) => emit_thresholds(&rows, io::stdout().lock()).map_err(stdout_err),
        (None, Format::Json) => {
            let mut out = io::stdout().lock();
            serde_json::to_writer_pretty(&mut out, &rows)
                .map_err(io::Error::from)
                .and_then(|_| writeln!(out))
                .map_err(stdout_err)
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::OracleMismatch { .. } => 2,
        Error::Io { .. } => 3,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = match &cli.command {
        Command::Sweep(args) => run_sweep_cmd(args),
        Command::Thresholds(args) => run_thresholds_cmd(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("squeezekit: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
