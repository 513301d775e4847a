//! Run configuration and the end-to-end reports behind each CLI subcommand.
//!
//! Every `cmd_*` function takes a [`RunConfig`], does the enumeration and
//! estimation, and returns a typed result that renders as CSV or as a flat
//! `key=value` record.

use std::fmt::Write as _;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::boundary::{
    boundary_entropy_estimate, default_buffer, BoundaryMetricParams, EntropyEstimate,
};
use crate::cache::{obtain_ball, CacheOutcome};
use crate::cayley::{
    growth_rate_estimate, relative_growth_sup, BallIndex, Budget, GeneratingSet, GrowthEstimate,
    ParamGrid, Strategy, SupResult,
};
use crate::error::{Error, Result};
use crate::group::{GroupModel, GroupSpec, Letter, Word};
use crate::hyperbolicity::{
    compute_certificate, default_eta, estimate_c0, estimate_d, estimate_delta, C0Estimate,
    Certificate, DEstimate, DeltaEstimate, DeltaScope, HypConstants,
};
use crate::num::{format_rational, parse_rational, Rational};

/// Largest ball scanned by the default exhaustive δ estimate.
pub const DELTA_POINT_BUDGET: usize = 200;
/// Largest sphere used as the default ray depth.
pub const RAY_BUDGET: usize = 1500;
/// Segments sampled for the default D estimate.
pub const D_SAMPLES: usize = 200;
/// Radius at which a candidate generating set must reach every standard generator.
pub const GENERATION_CHECK_RADIUS: usize = 3;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Csv,
    Record,
}

impl FromStr for OutputFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "record" => Ok(OutputFormat::Record),
            _ => Err(Error::input(format!("unknown format {s:?} (csv or record)"))),
        }
    }
}

/// Everything a run depends on. Serializes to JSON so a report can be
/// reproduced from its configuration alone.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct RunConfig {
    pub spec: String,
    pub radius: usize,
    /// Ray depth; chosen from [`RAY_BUDGET`] when absent.
    pub depth: Option<usize>,
    pub buffer: Option<usize>,
    pub eta: Option<f64>,
    /// λ values as exact rationals (`"1/2"`, `"0.75"`).
    pub lambdas: Vec<String>,
    pub epsilons: Vec<u32>,
    pub ms: Vec<u32>,
    pub thetas: Vec<f64>,
    /// Inclusive radius window for slope fits.
    pub window: Option<(usize, usize)>,
    pub strategy: Strategy,
    pub seed: u64,
    /// Exhaustive δ scan over `B(r)`; defaults to the largest `r` within
    /// [`DELTA_POINT_BUDGET`].
    pub delta_radius: Option<usize>,
    /// Sample this many quadruples instead of scanning exhaustively.
    pub delta_samples: Option<usize>,
    pub c0: Option<String>,
    pub d: Option<String>,
    pub d_samples: usize,
    pub force_admissible: bool,
    pub max_elements: Option<usize>,
    /// Tolerance for the growth ordering checks.
    pub slack: f64,
    /// Candidate generating sets, each a comma-separated list of words.
    pub gensets: Vec<String>,
    pub cache_dir: Option<PathBuf>,
    pub format: OutputFormat,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            spec: "free:2".into(),
            radius: 6,
            depth: None,
            buffer: None,
            eta: None,
            lambdas: Vec::new(),
            epsilons: Vec::new(),
            ms: Vec::new(),
            thetas: Vec::new(),
            window: None,
            strategy: Strategy::Greedy,
            seed: 0,
            delta_radius: None,
            delta_samples: None,
            c0: None,
            d: None,
            d_samples: D_SAMPLES,
            force_admissible: false,
            max_elements: None,
            slack: 0.1,
            gensets: Vec::new(),
            cache_dir: None,
            format: OutputFormat::Csv,
        }
    }
}

impl RunConfig {
    pub fn new(spec: &str, radius: usize) -> RunConfig {
        RunConfig {
            spec: spec.into(),
            radius,
            ..RunConfig::default()
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("config serializes")
    }

    pub fn from_json(text: &str) -> Result<RunConfig> {
        serde_json::from_str(text).map_err(|e| Error::input(format!("bad config: {e}")))
    }

    pub fn group(&self) -> Result<GroupSpec> {
        self.spec.parse()
    }

    fn budget(&self) -> Budget {
        self.max_elements.map_or_else(Budget::unlimited, Budget::max_elements)
    }

    /// `B(R)` over the standard generators, through the cache when configured.
    pub fn ball(&self) -> Result<(BallIndex, CacheOutcome)> {
        obtain_ball(&self.group()?, self.radius, self.budget(), self.cache_dir.as_deref())
    }

    pub fn grid(&self) -> Result<ParamGrid> {
        let lambdas = if self.lambdas.is_empty() {
            vec![Rational::new(1, 2)]
        } else {
            self.lambdas.iter().map(|l| parse_rational(l)).collect::<Result<_>>()?
        };
        let epsilons = if self.epsilons.is_empty() { vec![2, 3] } else { self.epsilons.clone() };
        let ms = if self.ms.is_empty() { vec![1, 2] } else { self.ms.clone() };
        Ok(ParamGrid { lambdas, epsilons, ms })
    }

    fn window_or(&self, lo: usize, hi: usize) -> RangeInclusive<usize> {
        match self.window {
            Some((a, b)) => a..=b,
            None => lo..=hi,
        }
    }
}

/// Largest `r` with `2r ≤ R` and `|B(r)|` within [`DELTA_POINT_BUDGET`].
pub fn default_delta_radius(index: &BallIndex) -> usize {
    (0..=index.radius() / 2)
        .take_while(|&r| index.ball_count(r) <= DELTA_POINT_BUDGET)
        .last()
        .unwrap_or(0)
}

/// Measured δ, c₀ and D together with the estimates they came from.
#[derive(Clone, Debug)]
pub struct MeasuredConstants {
    pub consts: HypConstants,
    pub delta: DeltaEstimate,
    pub c0: C0Estimate,
    pub d: Option<DEstimate>,
}

pub fn measure_constants(index: &BallIndex, cfg: &RunConfig) -> Result<MeasuredConstants> {
    let scope = match cfg.delta_samples {
        Some(count) => DeltaScope::Sampled { count, seed: cfg.seed },
        None => DeltaScope::Exhaustive {
            r: cfg.delta_radius.unwrap_or_else(|| default_delta_radius(index)),
        },
    };
    let delta = estimate_delta(index, scope)?;
    let c0 = estimate_c0(index)?;
    let c0_override = cfg.c0.as_deref().map(parse_rational).transpose()?;
    let d_override = cfg.d.as_deref().map(parse_rational).transpose()?;
    let c = c0_override.unwrap_or(c0.suggested_c0);
    let (d_est, d_used) = match d_override {
        Some(d) => (None, d),
        None => {
            let est = estimate_d(index, c, cfg.d_samples, cfg.seed)?;
            let d = est.d;
            (Some(est), d)
        }
    };
    let placeholder = DEstimate {
        d: d_used,
        c,
        segment_length: 0,
        accepted: 0,
        rejected: 0,
        seed: cfg.seed,
    };
    let mut consts = HypConstants::from_estimates(
        &delta,
        &c0,
        d_est.as_ref().unwrap_or(&placeholder),
        c0_override,
        d_override,
    )?;
    if d_est.is_none() {
        consts.d_coverage = "user supplied".into();
    }
    Ok(MeasuredConstants { consts, delta, c0, d: d_est })
}

struct Record(String);

impl Record {
    fn new() -> Record {
        Record(String::new())
    }

    fn kv(&mut self, k: &str, v: impl std::fmt::Display) -> &mut Record {
        let _ = writeln!(self.0, "{k}={v}");
        self
    }
}

fn join<T: std::fmt::Display>(xs: &[T], sep: &str) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(sep)
}

fn opt_f64(v: Option<f64>) -> String {
    v.map_or_else(|| "-".into(), |v| format!("{v:?}"))
}

fn record_to_csv(record: &str) -> String {
    let mut out = String::from("key,value\n");
    for line in record.lines() {
        if let Some((k, v)) = line.split_once('=') {
            let v = if v.contains(',') { format!("\"{v}\"") } else { v.to_string() };
            let _ = writeln!(out, "{k},{v}");
        }
    }
    out
}

// ---------------------------------------------------------------- growth

#[derive(Clone, Debug)]
pub struct GrowthReport {
    pub spec: String,
    pub radius: usize,
    pub generators: String,
    pub estimate: GrowthEstimate,
    pub cache: CacheOutcome,
}

impl GrowthReport {
    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Csv => {
                let mut out = String::from("n,sphere,ball,ratio\n");
                let e = &self.estimate;
                for n in 0..e.sphere_counts.len() {
                    let ratio = match n {
                        0 => String::new(),
                        _ if e.sphere_counts[n - 1] == 0 => "-".into(),
                        _ => format!("{:?}", e.sphere_counts[n] as f64 / e.sphere_counts[n - 1] as f64),
                    };
                    let _ = writeln!(out, "{n},{},{},{ratio}", e.sphere_counts[n], e.ball_counts[n]);
                }
                out
            }
            OutputFormat::Record => self.record(),
        }
    }

    pub fn record(&self) -> String {
        let e = &self.estimate;
        let mut r = Record::new();
        r.kv("spec", &self.spec)
            .kv("radius", self.radius)
            .kv("generators", &self.generators)
            .kv("sphere_counts", join(&e.sphere_counts, " "))
            .kv("window", format!("{}..={}", e.window.start(), e.window.end()))
            .kv("log_slope", format!("{:?}", e.log_slope))
            .kv("last_ratio", format!("{:?}", e.last_ratio))
            .kv("growth_rate", format!("{:?}", e.rate))
            .kv("ratios_monotone", e.ratios_monotone);
        r.0
    }
}

fn growth_of(index: &BallIndex, cfg: &RunConfig) -> Result<GrowthEstimate> {
    growth_rate_estimate(index, cfg.window_or(0, index.radius()))
}

pub fn cmd_growth(cfg: &RunConfig) -> Result<GrowthReport> {
    let (index, cache) = cfg.ball()?;
    Ok(GrowthReport {
        spec: index.spec().to_string(),
        radius: index.radius(),
        generators: "standard".into(),
        estimate: growth_of(&index, cfg)?,
        cache,
    })
}

// ---------------------------------------------------------------- constants

#[derive(Clone, Debug)]
pub struct ConstantsReport {
    pub measured: MeasuredConstants,
    pub certificates: Vec<Certificate>,
}

impl ConstantsReport {
    pub fn render(&self, format: OutputFormat) -> String {
        let records: Vec<String> = self.certificates.iter().map(Certificate::to_record).collect();
        match format {
            OutputFormat::Record => records.join("\n"),
            OutputFormat::Csv => records.iter().map(|r| record_to_csv(r)).collect::<Vec<_>>().join("\n"),
        }
    }
}

pub fn cmd_constants(cfg: &RunConfig) -> Result<ConstantsReport> {
    let (index, _) = cfg.ball()?;
    index.spec().require_hyperbolic()?;
    let measured = measure_constants(&index, cfg)?;
    let eta = cfg.eta.unwrap_or_else(|| default_eta(measured.consts.delta));
    let grid = cfg.grid()?;
    let certificates = grid
        .triples()
        .map(|(l, e, m)| compute_certificate(&measured.consts, l, e, m, eta))
        .collect::<Result<_>>()?;
    Ok(ConstantsReport { measured, certificates })
}

// ---------------------------------------------------------------- relgrowth

#[derive(Clone, Debug)]
pub struct RelGrowthReport {
    pub consts: HypConstants,
    pub sup: SupResult,
}

impl RelGrowthReport {
    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Csv => {
                let mut out = String::from("lambda,epsilon,m,T,tau,mu,admissible,feasible,level_counts,rate\n");
                for e in &self.sup.entries {
                    let _ = writeln!(
                        out,
                        "{},{},{},{},{},{},{},{},{},{}",
                        format_rational(&e.lambda),
                        e.eps,
                        e.m,
                        e.t,
                        format_rational(&e.tau),
                        format_rational(&e.mu),
                        e.admissible,
                        e.feasible,
                        join(&e.level_counts, " "),
                        opt_f64(e.rate),
                    );
                }
                out
            }
            OutputFormat::Record => self.record(),
        }
    }

    pub fn record(&self) -> String {
        let mut r = Record::new();
        let best = self.sup.best.map(|i| &self.sup.entries[i]);
        r.kv("relative_growth", opt_f64(self.sup.rate))
            .kv("heuristic", self.sup.heuristic)
            .kv("strategy", self.sup.strategy)
            .kv("best_lambda", best.map_or("-".into(), |e| format_rational(&e.lambda)))
            .kv("best_epsilon", best.map_or("-".into(), |e| e.eps.to_string()))
            .kv("best_m", best.map_or("-".into(), |e| e.m.to_string()))
            .kv("best_level_counts", best.map_or("-".into(), |e| join(&e.level_counts, " ")));
        r.0
    }
}

pub fn cmd_relgrowth(cfg: &RunConfig) -> Result<RelGrowthReport> {
    let (index, _) = cfg.ball()?;
    index.spec().require_hyperbolic()?;
    let consts = measure_constants(&index, cfg)?.consts;
    let sup = relative_growth_sup(&index, &consts, &cfg.grid()?, cfg.strategy, cfg.force_admissible)?;
    Ok(RelGrowthReport { consts, sup })
}

// ---------------------------------------------------------------- boundary

/// Ray depth and `n`-window used when the configuration leaves them open.
pub fn default_depth_window(index: &BallIndex, cfg: &RunConfig) -> Result<(usize, RangeInclusive<usize>)> {
    let r = index.radius();
    if r < 2 {
        return Err(Error::capability("boundary entropy", 2, r));
    }
    let depth = match cfg.depth {
        Some(d) => d,
        None => (1..r)
            .take_while(|&d| index.sphere(d).len() <= RAY_BUDGET)
            .last()
            .unwrap_or(1),
    };
    if depth > r {
        return Err(Error::capability("ray depth", depth, r));
    }
    let n = (r - depth).min(depth.saturating_sub(1)).clamp(1, 3);
    Ok((depth, cfg.window_or(0, n)))
}

/// `θ_j = exp(−η(j + ½))` for `j = 0..=3`.
pub fn default_thetas(eta: f64) -> Vec<f64> {
    (0..4).map(|j| (-eta * (j as f64 + 0.5)).exp()).collect()
}

#[derive(Clone, Debug)]
pub struct BoundaryReport {
    pub consts: HypConstants,
    pub params: BoundaryMetricParams,
    pub estimate: EntropyEstimate,
}

impl BoundaryReport {
    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Csv => self.estimate.report.to_csv(),
            OutputFormat::Record => self.record(),
        }
    }

    pub fn record(&self) -> String {
        let e = &self.estimate;
        let mut r = Record::new();
        r.kv("boundary_entropy", format!("{:?}", e.estimate))
            .kv("best_theta", format!("{:?}", e.best_theta))
            .kv("spanning_entropy", format!("{:?}", e.spanning_estimate))
            .kv("interval", format!("{:?} {:?}", e.interval.0, e.interval.1))
            .kv("max_ambiguous_fraction", format!("{:?}", e.max_ambiguous_fraction))
            .kv("rays", e.report.rays)
            .kv("depth", e.report.depth)
            .kv("buffer", e.report.buffer)
            .kv("buffer_clamped", e.buffer_clamped)
            .kv("window", format!("{}..={}", e.window.start(), e.window.end()))
            .kv("eta", format!("{:?}", self.params.eta))
            .kv("eta_prime", format!("{:?}", self.params.eta_prime))
            .kv("delta", self.consts.delta)
            .kv("delta_coverage", &self.consts.delta_coverage);
        r.0
    }
}

fn boundary_of(index: &BallIndex, consts: &HypConstants, cfg: &RunConfig) -> Result<BoundaryReport> {
    let eta = cfg.eta.unwrap_or_else(|| default_eta(consts.delta));
    let params = BoundaryMetricParams::new(eta, consts.delta)?;
    let (depth, window) = default_depth_window(index, cfg)?;
    let buffer = cfg.buffer.unwrap_or_else(|| default_buffer(consts.delta));
    let thetas = if cfg.thetas.is_empty() { default_thetas(eta) } else { cfg.thetas.clone() };
    let estimate =
        boundary_entropy_estimate(index, &params, consts, depth, buffer, &thetas, window, cfg.strategy)?;
    Ok(BoundaryReport {
        consts: consts.clone(),
        params,
        estimate,
    })
}

pub fn cmd_boundary_entropy(cfg: &RunConfig) -> Result<BoundaryReport> {
    let (index, _) = cfg.ball()?;
    index.spec().require_hyperbolic()?;
    let consts = measure_constants(&index, cfg)?.consts;
    boundary_of(&index, &consts, cfg)
}

// ---------------------------------------------------------------- theorem

/// The three growth quantities side by side with the ordering checks.
#[derive(Clone, Debug)]
pub struct TheoremReport {
    pub config: RunConfig,
    pub growth: GrowthEstimate,
    pub relative: SupResult,
    pub boundary: BoundaryReport,
    pub certificate: Option<Certificate>,
    /// `gr_rel ≤ h_hi + slack`.
    pub lower_ok: bool,
    /// `h_lo ≤ gr + slack`.
    pub upper_ok: bool,
    /// For free groups: all three within 5% of `ln(2k − 1)`.
    pub free_check: Option<bool>,
    pub flags: Vec<String>,
}

impl TheoremReport {
    pub fn pass(&self) -> bool {
        self.lower_ok && self.upper_ok && self.free_check != Some(false)
    }

    pub fn record(&self) -> String {
        let c = &self.boundary.consts;
        let h = &self.boundary.estimate;
        let mut r = Record::new();
        r.kv("spec", &self.config.spec)
            .kv("radius", self.config.radius)
            .kv("growth_rate", format!("{:?}", self.growth.rate))
            .kv("growth_log_slope", format!("{:?}", self.growth.log_slope))
            .kv("growth_rate_tag", "two-sided:ln last sphere ratio and ball log-slope")
            .kv("relative_growth", opt_f64(self.relative.rate))
            .kv("relative_growth_params", self.relative_params())
            .kv(
                "relative_growth_tag",
                if self.relative.heuristic { "heuristic:no admissible grid triple" } else { "certified-lower" },
            )
            .kv("boundary_entropy", format!("{:?}", h.estimate))
            .kv("boundary_entropy_interval", format!("{:?} {:?}", h.interval.0, h.interval.1))
            .kv("boundary_entropy_tag", self.entropy_tag())
            .kv("delta", c.delta)
            .kv("delta_source", c.delta_source)
            .kv("delta_coverage", &c.delta_coverage)
            .kv("c0", format_rational(&c.c0))
            .kv("c0_source", c.c0_source)
            .kv("D", format_rational(&c.d))
            .kv("D_source", c.d_source)
            .kv("eta", format!("{:?}", self.boundary.params.eta))
            .kv(
                "certificate",
                self.certificate.as_ref().map_or("-".into(), |c| {
                    format!(
                        "T={} tau={} mu={} theta={:?} admissible={}",
                        c.t,
                        format_rational(&c.tau),
                        format_rational(&c.mu),
                        c.theta,
                        c.admissible()
                    )
                }),
            )
            .kv("slack", format!("{:?}", self.config.slack))
            .kv("lower_ordering", self.lower_ok)
            .kv("upper_ordering", self.upper_ok)
            .kv("free_check", self.free_check.map_or("-".into(), |b| b.to_string()))
            .kv("flags", if self.flags.is_empty() { "-".into() } else { self.flags.join(";") })
            .kv("pass", self.pass())
            .kv("config", self.config.to_json());
        r.0
    }

    fn relative_params(&self) -> String {
        match self.relative.best.map(|i| &self.relative.entries[i]) {
            Some(e) => format!(
                "lambda={} epsilon={} m={} admissible={}",
                format_rational(&e.lambda),
                e.eps,
                e.m,
                e.admissible
            ),
            None => "-".into(),
        }
    }

    fn entropy_tag(&self) -> &'static str {
        let c = &self.boundary.consts;
        if self.boundary.estimate.max_ambiguous_fraction > 0.0 || !c.delta_exhaustive {
            "heuristic:separated and spanning slopes"
        } else {
            "two-sided:separated and spanning slopes"
        }
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Record => self.record(),
            OutputFormat::Csv => record_to_csv(&self.record()),
        }
    }
}

fn within_pct(x: f64, target: f64, pct: f64) -> bool {
    (x - target).abs() <= pct * target.abs()
}

pub fn cmd_theorem_report(cfg: &RunConfig) -> Result<TheoremReport> {
    let spec = cfg.group()?;
    if !spec.is_hyperbolic() {
        return Err(Error::Unsupported(format!(
            "{spec}: boundary undefined for non-hyperbolic control"
        )));
    }
    let (index, _) = cfg.ball()?;
    let measured = measure_constants(&index, cfg)?;
    let consts = measured.consts.clone();
    let growth = growth_of(&index, cfg)?;
    let relative = relative_growth_sup(&index, &consts, &cfg.grid()?, cfg.strategy, cfg.force_admissible)?;
    let boundary = boundary_of(&index, &consts, cfg)?;

    let eta = boundary.params.eta;
    let certificate = relative
        .best
        .map(|i| &relative.entries[i])
        .map(|e| compute_certificate(&consts, e.lambda, e.eps, e.m, eta))
        .transpose()?;

    let mut flags = Vec::new();
    if !consts.delta_exhaustive || consts.delta_coverage.contains("sampled") {
        flags.push("delta sampled".to_string());
    }
    let delta_r = match measured.delta.scope {
        DeltaScope::Exhaustive { r } => r,
        DeltaScope::Sampled { .. } => measured.delta.point_radius,
    };
    if 2 * delta_r < index.radius() {
        flags.push(format!("delta scope-limited to B({delta_r})"));
    }
    if relative.heuristic {
        flags.push("relative growth heuristic".into());
    }
    if boundary.estimate.buffer_clamped {
        flags.push("ray buffer clamped".into());
    }
    if boundary.estimate.max_ambiguous_fraction > 0.0 {
        flags.push(format!(
            "ambiguous pairs up to {:.3}",
            boundary.estimate.max_ambiguous_fraction
        ));
    }

    let slack = cfg.slack;
    let gr_rel = relative.rate.unwrap_or(0.0);
    let (h_lo, h_hi) = boundary.estimate.interval;
    let lower_ok = gr_rel <= h_hi + slack;
    let upper_ok = h_lo <= growth.rate + slack;
    let free_check = match spec.model() {
        GroupModel::Free(k) if k >= 2 => {
            let target = ((2 * k - 1) as f64).ln();
            Some(
                relative.rate.is_some_and(|r| within_pct(r, target, 0.05))
                    && within_pct(boundary.estimate.estimate, target, 0.05)
                    && within_pct(growth.rate, target, 0.05),
            )
        }
        _ => None,
    };
    Ok(TheoremReport {
        config: cfg.clone(),
        growth,
        relative,
        boundary,
        certificate,
        lower_ok,
        upper_ok,
        free_check,
        flags,
    })
}

// ---------------------------------------------------------------- gensets

#[derive(Clone, Debug)]
pub struct GensetRow {
    pub generators: String,
    pub generates: bool,
    pub growth: Option<GrowthEstimate>,
    pub entropy: Option<f64>,
    pub note: String,
}

#[derive(Clone, Debug)]
pub struct GensetComparison {
    pub spec: String,
    pub radius: usize,
    pub rows: Vec<GensetRow>,
    /// Minimum over the supplied generating sets only; the infimum over all
    /// finite generating sets is not computed.
    pub min_growth: Option<f64>,
    pub min_entropy: Option<f64>,
}

impl GensetComparison {
    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Csv => {
                let mut out = String::from("generators,generates,sphere_counts,growth_rate,boundary_entropy,note\n");
                for row in &self.rows {
                    let _ = writeln!(
                        out,
                        "\"{}\",{},{},{},{},{}",
                        row.generators,
                        row.generates,
                        row.growth.as_ref().map_or("-".into(), |g| join(&g.sphere_counts, " ")),
                        opt_f64(row.growth.as_ref().map(|g| g.rate)),
                        opt_f64(row.entropy),
                        row.note
                    );
                }
                let _ = writeln!(
                    out,
                    "\"min over supplied sets\",-,-,{},{},",
                    opt_f64(self.min_growth),
                    opt_f64(self.min_entropy)
                );
                out
            }
            OutputFormat::Record => {
                let mut r = Record::new();
                r.kv("spec", &self.spec).kv("radius", self.radius);
                for (i, row) in self.rows.iter().enumerate() {
                    r.kv(&format!("set{i}"), &row.generators)
                        .kv(&format!("set{i}_generates"), row.generates)
                        .kv(&format!("set{i}_growth_rate"), opt_f64(row.growth.as_ref().map(|g| g.rate)))
                        .kv(&format!("set{i}_boundary_entropy"), opt_f64(row.entropy));
                }
                r.kv("min_over_supplied_sets_growth_rate", opt_f64(self.min_growth))
                    .kv("min_over_supplied_sets_boundary_entropy", opt_f64(self.min_entropy));
                r.0
            }
        }
    }
}

fn parse_genset(spec: &GroupSpec, text: &str) -> Result<Vec<Word>> {
    text.split(',')
        .map(|w| {
            let w: Word = w.trim().parse()?;
            spec.validate(&w)?;
            Ok(w)
        })
        .collect()
}

/// Whether every standard generator lies within radius `r` for `gens`.
fn generates(spec: &GroupSpec, gens: &GeneratingSet, r: usize) -> Result<bool> {
    let index = BallIndex::enumerate_with_gens(spec, gens.clone(), r, Budget::unlimited())?;
    Ok((0..spec.num_generators()).all(|g| {
        index
            .lookup(&Word::from_letters(vec![Letter::new(g, false)]))
            .is_some()
    }))
}

pub fn cmd_compare_gensets(cfg: &RunConfig) -> Result<GensetComparison> {
    let spec = cfg.group()?;
    let texts: Vec<String> = if cfg.gensets.is_empty() {
        let std: Vec<String> = (0..spec.alphabet_size())
            .map(|c| Letter::from_code(c).to_char().to_string())
            .collect();
        vec![std.join(",")]
    } else {
        cfg.gensets.clone()
    };
    let mut rows = Vec::new();
    for text in texts {
        let gens = GeneratingSet::from_words(&spec, &parse_genset(&spec, &text)?)?;
        let label = join(
            &gens.images().iter().map(|w| if w.is_empty() { "1".into() } else { w.to_string() }).collect::<Vec<_>>(),
            ",",
        );
        if !generates(&spec, &gens, GENERATION_CHECK_RADIUS)? {
            rows.push(GensetRow {
                generators: label,
                generates: false,
                growth: None,
                entropy: None,
                note: format!(
                    "does not generate: some standard generator is missing from the radius-{GENERATION_CHECK_RADIUS} ball"
                ),
            });
            continue;
        }
        let index = if gens.is_standard() {
            cfg.ball()?.0
        } else {
            BallIndex::enumerate_with_gens(&spec, gens, cfg.radius, cfg.budget())?
        };
        let growth = growth_of(&index, cfg)?;
        let (entropy, note) = if spec.is_hyperbolic() {
            match measure_constants(&index, cfg).and_then(|m| boundary_of(&index, &m.consts, cfg)) {
                Ok(b) => (Some(b.estimate.estimate), String::new()),
                Err(e) => (None, format!("entropy unavailable: {e}")),
            }
        } else {
            (None, "boundary undefined for non-hyperbolic control".into())
        };
        rows.push(GensetRow {
            generators: label,
            generates: true,
            growth: Some(growth),
            entropy,
            note,
        });
    }
    let min = |f: &dyn Fn(&GensetRow) -> Option<f64>| rows.iter().filter_map(f).reduce(f64::min);
    Ok(GensetComparison {
        spec: spec.to_string(),
        radius: cfg.radius,
        min_growth: min(&|r| r.growth.as_ref().map(|g| g.rate)),
        min_entropy: min(&|r| r.entropy),
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_json_round_trip() {
        let mut cfg = RunConfig::new("surface:2", 5);
        cfg.lambdas = vec!["3/4".into()];
        cfg.thetas = vec![0.5, 0.25];
        cfg.window = Some((1, 4));
        let back = RunConfig::from_json(&cfg.to_json()).unwrap();
        assert_eq!(back, cfg);
    }

    #[test]
    fn delta_radius_respects_budget() {
        let idx = BallIndex::enumerate(&GroupSpec::surface(2).unwrap(), 6, Budget::unlimited()).unwrap();
        assert_eq!(default_delta_radius(&idx), 2);
        let idx = BallIndex::enumerate(&GroupSpec::free(2).unwrap(), 12, Budget::unlimited()).unwrap();
        assert_eq!(default_delta_radius(&idx), 4);
    }

    #[test]
    fn growth_report_rows() {
        let rep = cmd_growth(&RunConfig::new("free:2", 3)).unwrap();
        assert_eq!(rep.render(OutputFormat::Csv), "n,sphere,ball,ratio\n0,1,1,\n1,4,5,4.0\n2,12,17,3.0\n3,36,53,3.0\n");
    }

    #[test]
    fn abelian_theorem_report_is_rejected() {
        let err = cmd_theorem_report(&RunConfig::new("abelian:2", 4)).unwrap_err();
        assert!(err.to_string().contains("boundary undefined for non-hyperbolic control"));
    }

    #[test]
    fn non_generating_set_is_flagged() {
        let mut cfg = RunConfig::new("free:2", 4);
        cfg.gensets = vec!["a,A".into()];
        let cmp = cmd_compare_gensets(&cfg).unwrap();
        assert!(!cmp.rows[0].generates);
        assert!(cmp.rows[0].note.contains("does not generate"));
    }
}
