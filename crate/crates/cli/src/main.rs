mod input;
mod report;
mod reproduce;
mod svg;

use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use palext::color::{delta_e2000, delta_e76};
use palext::optimize::{solve_ballistic, solve_joint_simplex, solve_monte_carlo, OptimizerConfig};
use palext::voronoi::greedy_sequence;
use palext::{DeltaE2000Weights, GreedyMode, LabColor, Metric};

use input::{load_config, load_gamut, load_palette, parse_triple};
use report::RunReport;

#[derive(Parser)]
#[command(name = "palext", version, about = "Extend a color palette with maximally distinct colors")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Color difference between two Lab colors given as L,a,b.
    Dist {
        #[arg(value_parser = parse_triple, allow_hyphen_values = true)]
        c1: LabColor,
        #[arg(value_parser = parse_triple, allow_hyphen_values = true)]
        c2: LabColor,
        #[arg(long, value_enum, default_value_t = MetricArg::De2000)]
        metric: MetricArg,
        #[arg(long, default_value_t = 1.0)]
        kl: f64,
        #[arg(long, default_value_t = 1.0)]
        kc: f64,
        #[arg(long, default_value_t = 1.0)]
        kh: f64,
    },
    /// Add new colors to a palette.
    Next {
        /// Palette file or built-in name.
        palette: String,
        #[arg(long, value_enum, default_value_t = NextMethod::Voronoi76)]
        method: NextMethod,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..=10_000))]
        count: u64,
        /// Objective metric for Monte-Carlo sampling.
        #[arg(long, value_enum, default_value_t = MetricArg::De76)]
        metric: MetricArg,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Place several colors simultaneously with the restarted slack search.
    Joint {
        palette: String,
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u64).range(1..=10_000))]
        m: u64,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Recompute a reference result and compare it with the published values.
    Reproduce {
        #[arg(value_enum)]
        target: reproduce::Target,
    },
}

#[derive(Args)]
struct CommonArgs {
    /// Gamut corner file; defaults to the Adobe RGB (1998) cube.
    #[arg(long)]
    gamut: Option<PathBuf>,
    /// `key = value` optimizer settings; flags override them.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    restarts: Option<usize>,
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long, default_value_t = 2.0)]
    kl: f64,
    #[arg(long, default_value_t = 1.0)]
    kc: f64,
    #[arg(long, default_value_t = 1.0)]
    kh: f64,
    #[arg(long)]
    json: bool,
    /// Write an SVG swatch sheet of the new colors.
    #[arg(long)]
    swatches: Option<PathBuf>,
    /// Report `duration_ms` as null so repeated runs are byte-identical.
    #[arg(long)]
    no_timing: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum MetricArg {
    De76,
    De2000,
}

#[derive(Clone, Copy, ValueEnum)]
enum NextMethod {
    Voronoi76,
    Combined,
    Mc,
    Ballistic,
}

/// Failure classes and their exit codes.
pub enum Failure {
    /// Bad input: exit 2.
    Usage(String),
    /// Solver error or a failed tolerance check: exit 1.
    Solver(String),
}

impl From<palext::Error> for Failure {
    fn from(e: palext::Error) -> Self {
        match e {
            palext::Error::Solver(m) => Failure::Solver(m),
            other => Failure::Usage(other.to_string()),
        }
    }
}

fn weights(kl: f64, kc: f64, kh: f64) -> Result<DeltaE2000Weights, Failure> {
    Ok(DeltaE2000Weights::new(kl, kc, kh)?)
}

fn optimizer_config(c: &CommonArgs) -> Result<OptimizerConfig, Failure> {
    let mut cfg = match &c.config {
        Some(p) => load_config(p)?,
        None => OptimizerConfig::default(),
    };
    if let Some(s) = c.seed {
        cfg.rng_seed = s;
    }
    if let Some(r) = c.restarts {
        cfg.restarts = r;
    }
    if let Some(s) = c.samples {
        cfg.mc_samples = s;
    }
    cfg.validate()?;
    Ok(cfg)
}

fn run_next(palette: &str, method: NextMethod, count: usize, metric: MetricArg, c: &CommonArgs) -> Result<(), Failure> {
    let pal = load_palette(palette)?;
    let gamut = load_gamut(c.gamut.as_deref())?;
    let w = weights(c.kl, c.kc, c.kh)?;
    let cfg = optimizer_config(c)?;
    let start = Instant::now();
    let (solution, converged) = match method {
        NextMethod::Voronoi76 => (greedy_sequence(&pal, &gamut, count, GreedyMode::Cie76, &w)?, None),
        NextMethod::Combined => (greedy_sequence(&pal, &gamut, count, GreedyMode::Combined, &w)?, None),
        NextMethod::Mc => {
            let metric = match metric {
                MetricArg::De76 => Metric::Cie76,
                MetricArg::De2000 => Metric::Ciede2000(w),
            };
            (solve_monte_carlo(&pal, &gamut, count, &metric, &cfg, &w)?, None)
        }
        NextMethod::Ballistic => {
            let out = solve_ballistic(&pal, &gamut, count, &cfg, &w)?;
            (out.solution, Some(out.converged))
        }
    };
    let elapsed = start.elapsed();
    let report = RunReport::new(palette, &gamut, &solution, converged, &cfg, &w, (!c.no_timing).then_some(elapsed));
    emit(&report, c)
}

fn run_joint(palette: &str, m: usize, c: &CommonArgs) -> Result<(), Failure> {
    let pal = load_palette(palette)?;
    let gamut = load_gamut(c.gamut.as_deref())?;
    let w = weights(c.kl, c.kc, c.kh)?;
    let cfg = optimizer_config(c)?;
    let start = Instant::now();
    let out = solve_joint_simplex(&pal, &gamut, m, &cfg, &w)?;
    let elapsed = start.elapsed();
    let report = RunReport::new(palette, &gamut, &out.solution, None, &cfg, &w, (!c.no_timing).then_some(elapsed));
    emit(&report, c)
}

fn emit(report: &RunReport, c: &CommonArgs) -> Result<(), Failure> {
    if let Some(path) = &c.swatches {
        std::fs::write(path, svg::swatches(&report.solution))
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
    }
    let text = if c.json {
        serde_json::to_string_pretty(report).expect("report serializes") + "\n"
    } else {
        report.human()
    };
    // A closed pipe (e.g. `| head`) is not an error worth reporting.
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Dist { c1, c2, metric, kl, kc, kh } => {
            let d = match metric {
                MetricArg::De76 => delta_e76(&c1, &c2),
                MetricArg::De2000 => delta_e2000(&c1, &c2, &weights(kl, kc, kh)?),
            };
            println!("{d:.4}");
            Ok(())
        }
        Command::Next { palette, method, count, metric, common } => {
            run_next(&palette, method, count as usize, metric, &common)
        }
        Command::Joint { palette, m, common } => run_joint(&palette, m as usize, &common),
        Command::Reproduce { target } => reproduce::run(target),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Solver(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}
