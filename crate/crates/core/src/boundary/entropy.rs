use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt::Write as _;
use std::ops::RangeInclusive;

use rustc_hash::FxHashMap;

use crate::boundary::ray::{check_threshold, fellow_travel};
use crate::boundary::{enumerate_rays, BoundaryMetricParams, RayApprox};
use crate::cayley::{BallIndex, Strategy};
use crate::error::{Error, Result};
use crate::hyperbolicity::HypConstants;
use crate::mis::maximum_independent_set;
use crate::num::{lsq_slope, rational_to_f64, Rational};

/// Largest ray list the exact separated search accepts.
pub const EXACT_RAY_LIMIT: usize = 200;

/// For every pair of rays and every `n` up to `n_max`, the least Gromov
/// product estimate of the translated pair over `g ∈ B(n)`.
///
/// Both certified separation (some `g` pushes the lower bound to `θ`) and
/// certified closeness (every `g` keeps the upper bound below `θ`) depend on
/// the pair only through this minimum, since both bounds decrease with the
/// product.
#[derive(Clone, Debug)]
pub struct PairTable {
    rays: usize,
    min_product: Vec<Vec<u16>>,
    witness: Vec<Vec<u32>>,
    error_bar: f64,
}

fn pair_index(i: usize, j: usize, r: usize) -> usize {
    debug_assert!(i < j && j < r);
    i * (2 * r - i - 1) / 2 + (j - i - 1)
}

impl PairTable {
    pub fn build(index: &BallIndex, rays: &[RayApprox], n_max: usize, consts: &HypConstants) -> Result<PairTable> {
        index.spec().require_hyperbolic()?;
        let k = check_threshold(index, consts)?;
        let depth = rays.iter().map(|r| r.depth).max().unwrap_or(0);
        if depth + n_max > index.radius() {
            return Err(Error::capability("boundary pair table", depth + n_max, index.radius()));
        }
        let r = rays.len();
        let pairs = r * r.saturating_sub(1) / 2;
        let mut cur = vec![u16::MAX; pairs];
        let mut wit = vec![0u32; pairs];
        let mut min_product = Vec::with_capacity(n_max + 1);
        let mut witness = Vec::with_capacity(n_max + 1);
        let mut memo: FxHashMap<(u32, u32), bool> = FxHashMap::default();
        for n in 0..=n_max {
            for g in index.sphere(n) {
                let moved: Vec<Vec<u32>> = rays
                    .iter()
                    .map(|ray| {
                        index
                            .mul_ids(g, ray.id)
                            .map(|x| index.prefix_ids(x))
                            .ok_or_else(|| Error::capability("boundary pair table", n + ray.depth, index.radius()))
                    })
                    .collect::<Result<_>>()?;
                let mut p = 0;
                for i in 0..r {
                    for j in i + 1..r {
                        let v = if k == 0 {
                            fellow_travel(index, &moved[i], &moved[j], 0)
                        } else {
                            memo_fellow_travel(index, &moved[i], &moved[j], k, &mut memo)
                        } as u16;
                        if v < cur[p] {
                            cur[p] = v;
                            wit[p] = g;
                        }
                        p += 1;
                    }
                }
            }
            min_product.push(cur.clone());
            witness.push(wit.clone());
        }
        Ok(PairTable {
            rays: r,
            min_product,
            witness,
            error_bar: rational_to_f64(&(consts.delta.to_rational() * Rational::from_integer(2))),
        })
    }

    pub fn n_max(&self) -> usize {
        self.min_product.len() - 1
    }

    pub fn rays(&self) -> usize {
        self.rays
    }

    /// Least product estimate of rays `i ≠ j` over `B(n)`.
    pub fn min_product(&self, n: usize, i: usize, j: usize) -> usize {
        let (i, j) = (i.min(j), i.max(j));
        self.min_product[n][pair_index(i, j, self.rays)] as usize
    }

    /// A `g ∈ B(n)` attaining [`PairTable::min_product`].
    pub fn witness(&self, n: usize, i: usize, j: usize) -> u32 {
        let (i, j) = (i.min(j), i.max(j));
        self.witness[n][pair_index(i, j, self.rays)]
    }

    fn relation(&self, n: usize, theta: f64, params: &BoundaryMetricParams) -> Relation {
        let eb = self.error_bar;
        let mut sep = vec![false; self.min_product[n].len()];
        let mut close = vec![false; sep.len()];
        for (p, &m) in self.min_product[n].iter().enumerate() {
            sep[p] = params.lower(m as usize, eb) >= theta;
            close[p] = params.upper(m as usize, eb) < theta;
        }
        Relation { rays: self.rays, sep, close }
    }
}

fn memo_fellow_travel(
    index: &BallIndex,
    u: &[u32],
    v: &[u32],
    k: usize,
    memo: &mut FxHashMap<(u32, u32), bool>,
) -> usize {
    let top = u.len().min(v.len()) - 1;
    (0..=top)
        .rev()
        .find(|&t| {
            let (a, b) = (u[t].min(v[t]), u[t].max(v[t]));
            *memo.entry((a, b)).or_insert_with(|| index.within(a, b, k))
        })
        .unwrap_or(0)
}

struct Relation {
    rays: usize,
    sep: Vec<bool>,
    close: Vec<bool>,
}

impl Relation {
    fn sep(&self, i: usize, j: usize) -> bool {
        i != j && self.sep[pair_index(i.min(j), i.max(j), self.rays)]
    }

    fn close(&self, i: usize, j: usize) -> bool {
        i == j || self.close[pair_index(i.min(j), i.max(j), self.rays)]
    }

    fn ambiguous_pairs(&self) -> usize {
        self.sep.iter().zip(&self.close).filter(|(s, c)| !**s && !**c).count()
    }

    fn close_pairs(&self) -> usize {
        self.close.iter().filter(|c| **c).count()
    }

    fn separated_set(&self, strategy: Strategy) -> Result<Vec<usize>> {
        match strategy {
            Strategy::Greedy => {
                let mut kept: Vec<usize> = Vec::new();
                for i in 0..self.rays {
                    if kept.iter().all(|&k| self.sep(k, i)) {
                        kept.push(i);
                    }
                }
                Ok(kept)
            }
            Strategy::Exact => {
                if self.rays > EXACT_RAY_LIMIT {
                    return Err(Error::input(format!(
                        "exact search refused: {} rays (limit {EXACT_RAY_LIMIT})",
                        self.rays
                    )));
                }
                Ok(maximum_independent_set(self.rays, |i, j| !self.sep(i, j)))
            }
        }
    }

    /// The smaller of two certified covers: lazy greedy set cover, and the
    /// given maximal separated set topped up with every ray it does not
    /// certifiably cover. Every such ray sits in an ambiguous pair with a
    /// member, so the second cover has at most `|separated| + ambiguous`
    /// elements.
    fn spanning_set(&self, separated: &[usize]) -> Vec<usize> {
        let greedy = self.greedy_cover();
        let mut topped = separated.to_vec();
        for x in 0..self.rays {
            if !separated.iter().any(|&s| self.close(s, x)) {
                topped.push(x);
            }
        }
        if topped.len() < greedy.len() {
            topped.sort_unstable();
            topped
        } else {
            greedy
        }
    }

    /// Lazy greedy cover: each chosen ray covers the rays certified close to it.
    fn greedy_cover(&self) -> Vec<usize> {
        let r = self.rays;
        let words = r.div_ceil(64);
        let mut covers = vec![vec![0u64; words]; r];
        for (i, cover) in covers.iter_mut().enumerate() {
            for j in 0..r {
                if self.close(i, j) {
                    cover[j / 64] |= 1 << (j % 64);
                }
            }
        }
        let mut uncovered = vec![u64::MAX; words];
        if r % 64 != 0 {
            uncovered[words - 1] = (1u64 << (r % 64)) - 1;
        }
        let gain = |c: &[u64], u: &[u64]| c.iter().zip(u).map(|(a, b)| (a & b).count_ones() as usize).sum::<usize>();
        let mut heap: BinaryHeap<(usize, Reverse<usize>)> =
            (0..r).map(|i| (gain(&covers[i], &uncovered), Reverse(i))).collect();
        let mut chosen = Vec::new();
        let mut left = r;
        while left > 0 {
            let Some((stale, Reverse(i))) = heap.pop() else { break };
            let fresh = gain(&covers[i], &uncovered);
            if fresh == 0 {
                continue;
            }
            if fresh < stale {
                heap.push((fresh, Reverse(i)));
                continue;
            }
            chosen.push(i);
            for (u, c) in uncovered.iter_mut().zip(&covers[i]) {
                *u &= !c;
            }
            left -= fresh;
        }
        chosen.sort_unstable();
        chosen
    }
}

/// Smallest `k ≥ 0` with `exp(−ηk) < θ`.
pub fn covering_depth(eta: f64, theta: f64) -> usize {
    if theta > 1.0 {
        return 0;
    }
    (-theta.ln() / eta).floor() as usize + 1
}

/// One `(n, θ)` cell of a sweep.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepRow {
    pub n: usize,
    pub theta: f64,
    /// Size of a certified `(n, θ)`-separated set of rays.
    pub certified_separated: usize,
    /// Ray pairs neither certified separated nor certified close.
    pub ambiguous: usize,
    pub pairs: usize,
    /// Size of a set whose certified-close neighbourhoods cover all rays.
    pub spanning: usize,
    /// `#S(n + k)` with `k` the least integer such that `exp(−ηk) < θ`,
    /// when it lies inside the ball.
    pub spanning_bound: Option<usize>,
}

impl SweepRow {
    pub fn ambiguous_fraction(&self) -> f64 {
        if self.pairs == 0 {
            0.0
        } else {
            self.ambiguous as f64 / self.pairs as f64
        }
    }
}

/// Slopes of `log(count)` against `n` for one θ.
#[derive(Clone, Debug, PartialEq)]
pub struct ThetaSlope {
    pub theta: f64,
    pub separated: Option<f64>,
    pub spanning: Option<f64>,
}

/// Separated and spanning counts of boundary rays over a sweep of `(n, θ)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SeparationReport {
    pub rays: usize,
    pub depth: usize,
    pub buffer: usize,
    pub eta: f64,
    pub strategy: Strategy,
    pub rows: Vec<SweepRow>,
    pub slopes: Vec<ThetaSlope>,
}

impl SeparationReport {
    pub fn row(&self, n: usize, theta: f64) -> Option<&SweepRow> {
        self.rows.iter().find(|r| r.n == n && r.theta == theta)
    }

    /// Comma-separated table with one line per `(n, θ)`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,theta,certified_separated,ambiguous,spanning,slope\n");
        for row in &self.rows {
            let slope = self
                .slopes
                .iter()
                .find(|s| s.theta == row.theta)
                .and_then(|s| s.separated)
                .map_or_else(String::new, |s| format!("{s:?}"));
            let _ = writeln!(
                out,
                "{},{:?},{},{},{},{}",
                row.n, row.theta, row.certified_separated, row.ambiguous, row.spanning, slope
            );
        }
        out
    }
}

fn sweep(
    index: &BallIndex,
    table: &PairTable,
    rays: &[RayApprox],
    ns: RangeInclusive<usize>,
    thetas: &[f64],
    params: &BoundaryMetricParams,
    strategy: Strategy,
) -> Result<SeparationReport> {
    if thetas.iter().any(|&t| !(t > 0.0 && t.is_finite())) {
        return Err(Error::input("θ values must be positive"));
    }
    let mut rows = Vec::new();
    for &theta in thetas {
        for n in ns.clone() {
            let rel = table.relation(n, theta, params);
            let separated = rel.separated_set(strategy)?;
            let k = covering_depth(params.eta, theta);
            rows.push(SweepRow {
                n,
                theta,
                certified_separated: separated.len(),
                ambiguous: rel.ambiguous_pairs(),
                pairs: rel.sep.len(),
                spanning: rel.spanning_set(&separated).len(),
                spanning_bound: (n + k <= index.radius()).then(|| index.sphere(n + k).len()),
            });
            debug_assert!(rel.close_pairs() <= rel.sep.len());
        }
    }
    let slopes = thetas
        .iter()
        .map(|&theta| {
            let pts: Vec<&SweepRow> = rows.iter().filter(|r| r.theta == theta).collect();
            let xs: Vec<f64> = pts.iter().map(|r| r.n as f64).collect();
            let fit = |f: &dyn Fn(&SweepRow) -> usize| {
                let ys: Vec<f64> = pts.iter().map(|r| (f(r).max(1) as f64).ln()).collect();
                lsq_slope(&xs, &ys)
            };
            ThetaSlope {
                theta,
                separated: fit(&|r| r.certified_separated),
                spanning: fit(&|r| r.spanning),
            }
        })
        .collect();
    Ok(SeparationReport {
        rays: rays.len(),
        depth: rays.iter().map(|r| r.depth).max().unwrap_or(0),
        buffer: rays.iter().map(|r| r.buffer).min().unwrap_or(0),
        eta: params.eta,
        strategy,
        rows,
        slopes,
    })
}

/// Certified `(n, θ)`-separated count of a ray list, with the ambiguous pair
/// count and the spanning count alongside.
pub fn boundary_separated_count(
    rays: &[RayApprox],
    n: usize,
    theta: f64,
    index: &BallIndex,
    params: &BoundaryMetricParams,
    consts: &HypConstants,
    strategy: Strategy,
) -> Result<SeparationReport> {
    let table = PairTable::build(index, rays, n, consts)?;
    sweep(index, &table, rays, n..=n, &[theta], params, strategy)
}

/// Greedy `(n, θ)`-spanning count of a ray list, with the structural bound
/// `#S(n + k)`.
pub fn boundary_spanning_count(
    rays: &[RayApprox],
    n: usize,
    theta: f64,
    index: &BallIndex,
    params: &BoundaryMetricParams,
    consts: &HypConstants,
) -> Result<SeparationReport> {
    boundary_separated_count(rays, n, theta, index, params, consts, Strategy::Greedy)
}

/// Entropy of the boundary action read off a sweep.
#[derive(Clone, Debug, PartialEq)]
pub struct EntropyEstimate {
    pub report: SeparationReport,
    /// Largest separated-count slope over the θ grid.
    pub estimate: f64,
    pub best_theta: f64,
    /// Largest spanning-count slope over the θ grid.
    pub spanning_estimate: f64,
    /// Smallest and largest of the two estimates.
    pub interval: (f64, f64),
    /// Largest fraction of ambiguous pairs over the sweep.
    pub max_ambiguous_fraction: f64,
    /// The requested buffer did not fit and was shortened.
    pub buffer_clamped: bool,
    pub window: RangeInclusive<usize>,
}

/// Sweeps `θ` over `thetas` and `n` over `window` on the rays of the given
/// depth, then takes the largest slope over the grid.
#[allow(clippy::too_many_arguments)]
pub fn boundary_entropy_estimate(
    index: &BallIndex,
    params: &BoundaryMetricParams,
    consts: &HypConstants,
    depth: usize,
    buffer: usize,
    thetas: &[f64],
    window: RangeInclusive<usize>,
    strategy: Strategy,
) -> Result<EntropyEstimate> {
    if thetas.is_empty() {
        return Err(Error::input("empty θ grid"));
    }
    let (lo, hi) = (*window.start(), *window.end());
    if hi <= lo {
        return Err(Error::degenerate(format!("n-window {lo}..={hi} has fewer than 2 radii")));
    }
    if depth > index.radius() {
        return Err(Error::capability("boundary_entropy_estimate", depth, index.radius()));
    }
    let room = index.radius() - depth;
    let buffer_clamped = buffer > room;
    let rays = enumerate_rays(index, depth, buffer.min(room))?;
    let table = PairTable::build(index, &rays, hi, consts)?;
    let report = sweep(index, &table, &rays, window.clone(), thetas, params, strategy)?;
    let best = |f: &dyn Fn(&ThetaSlope) -> Option<f64>| {
        report
            .slopes
            .iter()
            .filter_map(|s| f(s).map(|v| (v, s.theta)))
            .fold(None::<(f64, f64)>, |acc, x| match acc {
                Some(a) if a.0 >= x.0 => Some(a),
                _ => Some(x),
            })
    };
    let (estimate, best_theta) = best(&|s| s.separated).ok_or_else(|| Error::degenerate("no slope"))?;
    let (spanning_estimate, _) = best(&|s| s.spanning).ok_or_else(|| Error::degenerate("no slope"))?;
    let max_ambiguous_fraction = report.rows.iter().map(SweepRow::ambiguous_fraction).fold(0.0, f64::max);
    Ok(EntropyEstimate {
        interval: (estimate.min(spanning_estimate), estimate.max(spanning_estimate)),
        report,
        estimate,
        best_theta,
        spanning_estimate,
        max_ambiguous_fraction,
        buffer_clamped,
        window,
    })
}
