use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use hypgrowth::cache::{self, CacheOutcome, CACHE_ENV};
use hypgrowth::cayley::{Budget, Strategy};
use hypgrowth::report::{self, RunConfig};
use hypgrowth::Error;

const EXIT_INPUT: u8 = 2;
const EXIT_CAPABILITY: u8 = 3;
const EXIT_ASSERTION: u8 = 4;
const DEFAULT_CACHE_DIR: &str = ".hypgrowth-cache";

/// Growth, relative growth and boundary entropy of hyperbolic groups.
#[derive(Parser)]
#[command(name = "hypgrowth", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sphere counts and the exponential growth rate.
    Growth(Common),
    /// δ, c₀ and D estimates and the certificate for each grid triple.
    Constants(Common),
    /// Relative growth over the (λ, ε, m) grid.
    Relgrowth(Common),
    /// Separated and spanning counts on the boundary and the entropy slope.
    BoundaryEntropy(Common),
    /// All three growth quantities with the ordering check; exits 4 on failure.
    TheoremReport(Common),
    /// Growth and entropy for several generating sets, with their minimum.
    CompareGensets(Common),
    /// Build or extend the cached ball and print its summary.
    Cache(Common),
}

#[derive(Args)]
struct Common {
    /// Group: free:K, surface:G or abelian:K.
    #[arg(long)]
    spec: String,
    #[arg(long, default_value_t = 6)]
    radius: usize,
    /// Ray depth for boundary estimates.
    #[arg(long)]
    depth: Option<usize>,
    /// Geodesic extension required past the ray depth.
    #[arg(long)]
    buffer: Option<usize>,
    /// Visual metric parameter.
    #[arg(long)]
    eta: Option<f64>,
    /// Comma-separated λ values (rationals such as 1/2).
    #[arg(long, value_delimiter = ',')]
    lambda: Vec<String>,
    #[arg(long, value_delimiter = ',')]
    epsilon: Vec<u32>,
    #[arg(long, value_delimiter = ',')]
    m: Vec<u32>,
    /// Comma-separated θ values.
    #[arg(long = "theta-grid", value_delimiter = ',')]
    theta_grid: Vec<f64>,
    /// Radius window LO..HI (inclusive).
    #[arg(long, value_parser = parse_window)]
    window: Option<(usize, usize)>,
    /// greedy or exact.
    #[arg(long, default_value = "greedy")]
    strategy: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Exhaustive δ scan radius.
    #[arg(long)]
    delta_radius: Option<usize>,
    /// Sample this many quadruples for δ instead.
    #[arg(long)]
    delta_samples: Option<usize>,
    /// Override the suggested c₀.
    #[arg(long)]
    c0: Option<String>,
    /// Override the estimated D.
    #[arg(long = "d")]
    d: Option<String>,
    /// Treat every grid triple as admissible.
    #[arg(long)]
    force_admissible: bool,
    /// Stop enumerating past this many elements.
    #[arg(long)]
    max_elements: Option<usize>,
    /// Tolerance of the ordering checks, in log-rate units.
    #[arg(long, default_value_t = 0.1)]
    slack: f64,
    /// A generating set as comma-separated words; repeat for several sets.
    #[arg(long)]
    genset: Vec<String>,
    #[arg(long, env = CACHE_ENV)]
    cache_dir: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value = "csv")]
    format: String,
}

impl Command {
    fn common(&self) -> &Common {
        match self {
            Command::Growth(c)
            | Command::Constants(c)
            | Command::Relgrowth(c)
            | Command::BoundaryEntropy(c)
            | Command::TheoremReport(c)
            | Command::CompareGensets(c)
            | Command::Cache(c) => c,
        }
    }
}

fn parse_window(s: &str) -> Result<(usize, usize), String> {
    let (lo, hi) = s
        .split_once("..")
        .or_else(|| s.split_once(':'))
        .ok_or_else(|| format!("window {s:?} must look like 1..6"))?;
    let hi = hi.trim_start_matches('=');
    let lo = lo.parse().map_err(|_| format!("bad window start {lo:?}"))?;
    let hi = hi.parse().map_err(|_| format!("bad window end {hi:?}"))?;
    Ok((lo, hi))
}

impl Common {
    fn config(&self) -> Result<RunConfig, Error> {
        let strategy: Strategy = self.strategy.parse()?;
        Ok(RunConfig {
            spec: self.spec.clone(),
            radius: self.radius,
            depth: self.depth,
            buffer: self.buffer,
            eta: self.eta,
            lambdas: self.lambda.clone(),
            epsilons: self.epsilon.clone(),
            ms: self.m.clone(),
            thetas: self.theta_grid.clone(),
            window: self.window,
            strategy,
            seed: self.seed,
            delta_radius: self.delta_radius,
            delta_samples: self.delta_samples,
            c0: self.c0.clone(),
            d: self.d.clone(),
            force_admissible: self.force_admissible,
            max_elements: self.max_elements,
            slack: self.slack,
            gensets: self.genset.clone(),
            cache_dir: self.cache_dir.clone(),
            format: self.format.parse()?,
            ..RunConfig::default()
        })
    }
}

enum Failure {
    Error(Error),
    Assertion(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Error(e.into())
    }
}

fn write_output(out: Option<&Path>, text: &str) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    }
}

fn cache_summary(cfg: &RunConfig) -> Result<String, Error> {
    let dir = cfg.cache_dir.clone().unwrap_or_else(|| PathBuf::from(DEFAULT_CACHE_DIR));
    let spec = cfg.group()?;
    let (index, outcome) = cache::obtain_ball(&spec, cfg.radius, Budget::unlimited(), Some(&dir))?;
    let outcome = match outcome {
        CacheOutcome::Fresh => "enumerated".to_string(),
        CacheOutcome::Hit { cached_radius } => format!("loaded radius {cached_radius}"),
        CacheOutcome::Extended { cached_radius } => format!("extended from radius {cached_radius}"),
    };
    let counts: Vec<String> = index.sphere_counts().iter().map(usize::to_string).collect();
    Ok(format!(
        "path={}\nspec={spec}\nradius={}\noutcome={outcome}\nsphere_counts={}\n",
        cache::ball_path(&dir, &spec).display(),
        index.radius(),
        counts.join(" ")
    ))
}

fn run(cli: Cli) -> Result<(), Failure> {
    let command = &cli.command;
    let common = command.common();
    let cfg = common.config()?;
    let fmt = cfg.format;
    let text = match command {
        Command::Growth(_) => report::cmd_growth(&cfg)?.render(fmt),
        Command::Constants(_) => report::cmd_constants(&cfg)?.render(fmt),
        Command::Relgrowth(_) => report::cmd_relgrowth(&cfg)?.render(fmt),
        Command::BoundaryEntropy(_) => report::cmd_boundary_entropy(&cfg)?.render(fmt),
        Command::CompareGensets(_) => report::cmd_compare_gensets(&cfg)?.render(fmt),
        Command::Cache(_) => cache_summary(&cfg)?,
        Command::TheoremReport(_) => {
            let rep = report::cmd_theorem_report(&cfg)?;
            write_output(common.out.as_deref(), &rep.render(fmt))?;
            if !rep.pass() {
                return Err(Failure::Assertion(format!(
                    "ordering check failed (lower={}, upper={}, free={:?})",
                    rep.lower_ok, rep.upper_ok, rep.free_check
                )));
            }
            return Ok(());
        }
    };
    write_output(common.out.as_deref(), &text)?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Assertion(msg)) => {
            eprintln!("hypgrowth: {msg}");
            ExitCode::from(EXIT_ASSERTION)
        }
        Err(Failure::Error(e)) => {
            eprintln!("hypgrowth: {e}");
            match e {
                Error::Capability { .. } | Error::Budget { .. } => ExitCode::from(EXIT_CAPABILITY),
                _ => ExitCode::from(EXIT_INPUT),
            }
        }
    }
}
