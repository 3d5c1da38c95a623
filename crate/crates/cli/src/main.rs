//! `spherotrop`: tropical and spherical tropical computations with exact
//! rational arithmetic, JSON in, JSON/CSV/SVG out.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use spherotrop::{checks, commands, resolve_precision, CliError};

#[derive(Parser)]
#[command(
    name = "spherotrop",
    about = "Groebner fans, tropical varieties and spherical amoebas over exact Puiseux series",
    version
)]
struct Cli {
    /// Seed for every pseudo-random draw (estimators, bundled batteries).
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Series truncation depth as a rational, e.g. "20" or "41/2"
    /// (falls back to SPHEROTROP_PRECISION, then 20).
    #[arg(long, global = true)]
    precision: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the Groebner fan of a homogeneous ideal.
    Gfan {
        #[arg(long)]
        ideal: PathBuf,
    },
    /// Tropical hypersurfaces of the generators and membership of grid
    /// weights in the tropical variety.
    Trop {
        #[arg(long)]
        ideal: PathBuf,
        #[arg(long)]
        grid: Option<PathBuf>,
    },
    /// Tropicalize a Puiseux point on a model.
    TropPoint {
        /// sl2 | gl2 | gl<n> | torus:<n>
        #[arg(long)]
        model: String,
        #[arg(long)]
        point: PathBuf,
    },
    /// Spherical tropical set of a worked hypersurface (sl2 plane curve or
    /// a GL(2) Borel-chart hyperplane).
    SphTrop {
        /// sl2 | gl2
        #[arg(long)]
        example: String,
        #[arg(long)]
        input: PathBuf,
    },
    /// Spherical Groebner basis of a plane ideal with its initial ideal.
    SphGb {
        #[arg(long)]
        ideal: PathBuf,
    },
    /// Invariant factors of a series matrix by elimination.
    Snf {
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Compare exact invariant factors with numeric log singular values.
    SvdLimit {
        #[arg(long)]
        matrix: PathBuf,
        /// Comma-separated bases in (0, 1), e.g. 1e-1,1e-2,1e-3,1e-4
        #[arg(long)]
        ts: String,
    },
    /// Sample a spherical amoeba and write CSV/SVG.
    Amoeba {
        #[arg(long)]
        model: String,
        #[arg(long)]
        param: PathBuf,
        #[arg(long)]
        t: f64,
        /// Output paths, comma separated, ending in .csv and/or .svg
        #[arg(long, default_value = "cloud.csv,cloud.svg")]
        out: String,
        #[arg(long)]
        grid: Option<PathBuf>,
    },
    /// Fundamental-theorem cross-check (bundled line example by default).
    CheckFundamental {
        #[arg(long)]
        ideal: Option<PathBuf>,
        #[arg(long)]
        curves: Option<PathBuf>,
        #[arg(long)]
        grid: Option<PathBuf>,
    },
    /// Run the whole acceptance battery, one line per criterion.
    CheckAll,
}

fn emit<T: Serialize>(value: &T) -> Result<(), CliError> {
    println!("{}", serde_json::to_string(value)?);
    Ok(())
}

fn run(cli: Cli) -> Result<(), CliError> {
    let precision = resolve_precision(cli.precision.as_deref())?;
    match cli.command {
        Command::Gfan { ideal } => emit(&commands::cmd_gfan(&ideal)?),
        Command::Trop { ideal, grid } => emit(&commands::cmd_trop(&ideal, grid.as_deref())?),
        Command::TropPoint { model, point } => emit(&commands::cmd_trop_point(&model, &point)?),
        Command::SphTrop { example, input } => emit(&commands::cmd_sph_trop(&example, &input)?),
        Command::SphGb { ideal } => emit(&commands::cmd_sph_gb(&ideal)?),
        Command::Snf { matrix } => emit(&commands::cmd_snf(&matrix, &precision)?),
        Command::SvdLimit { matrix, ts } => emit(&commands::cmd_svd_limit(&matrix, &ts)?),
        Command::Amoeba {
            model,
            param,
            t,
            out,
            grid,
        } => emit(&commands::cmd_amoeba(
            &model,
            &param,
            t,
            grid.as_deref(),
            &out,
        )?),
        Command::CheckFundamental {
            ideal,
            curves,
            grid,
        } => {
            let report = commands::cmd_check_fundamental(
                ideal.as_deref(),
                curves.as_deref(),
                grid.as_deref(),
                &precision,
                cli.seed,
            )?;
            let pass = report.pass;
            emit(&report)?;
            if !pass {
                return Err(CliError::check_failed("fundamental-theorem check failed"));
            }
            Ok(())
        }
        Command::CheckAll => {
            checks::cmd_check_all()?;
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let diag = serde_json::json!({
                "error": e.kind(),
                "message": e.message(),
            });
            eprintln!("{diag}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
