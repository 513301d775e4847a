use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cayley::BallIndex;
use crate::error::{Error, Result};
use crate::hyperbolicity::DeltaEstimate;
use crate::num::{format_rational, HalfInt, Rational};

/// Where a constant came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Provenance {
    /// Measured on an enumerated ball; a lower bound for the true constant.
    Estimated,
    /// Supplied by the user.
    User,
    /// Derived from a measurement by a fixed rule.
    Suggested,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::Estimated => "estimated",
            Provenance::User => "user",
            Provenance::Suggested => "suggested",
        })
    }
}

impl FromStr for Provenance {
    type Err = Error;
    fn from_str(s: &str) -> Result<Provenance> {
        match s {
            "estimated" => Ok(Provenance::Estimated),
            "user" => Ok(Provenance::User),
            "suggested" => Ok(Provenance::Suggested),
            _ => Err(Error::input(format!("unknown provenance {s:?}"))),
        }
    }
}

/// Dead-end measurement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct C0Estimate {
    /// Largest distance from an element of `B(R−1)` to the nearest element
    /// one sphere further out.
    pub dead_end_step: u32,
    /// `max(dead_end_step, 1) + 1`.
    pub suggested_c0: Rational,
    /// An element attaining `dead_end_step`.
    pub witness: u32,
}

/// Measures how far one must travel from any `g` to reach `S(|g|+1)`.
pub fn estimate_c0(index: &BallIndex) -> Result<C0Estimate> {
    let r = index.radius();
    if r < 2 {
        return Err(Error::capability("estimate_c0", 2, r));
    }
    let gens = index.generating_set();
    let mut worst = (1u32, 0u32);
    for g in index.ball(r - 1) {
        let target = index.length(g) + 1;
        let one_step = (0..gens.alphabet_size()).any(|c| {
            let l = crate::group::Letter::from_code(c);
            index
                .neighbour(g, l)
                .or_else(|| index.mul_word(g, gens.image(l)))
                .is_some_and(|n| index.length(n) == target)
        });
        if one_step {
            continue;
        }
        let mut found = None;
        for len in 2..=r {
            if index.sphere(len).any(|h| index.mul_ids(g, h).is_some_and(|n| index.length(n) == target)) {
                found = Some(len as u32);
                break;
            }
        }
        let step = found.ok_or_else(|| Error::capability("estimate_c0", r + 1, r))?;
        if step > worst.0 {
            worst = (step, g);
        }
    }
    Ok(C0Estimate {
        dead_end_step: worst.0,
        suggested_c0: Rational::from_integer(worst.0.max(1) as i64 + 1),
        witness: worst.1,
    })
}

/// Empirical quasigeodesic stability constant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DEstimate {
    pub d: Rational,
    pub c: Rational,
    pub segment_length: usize,
    pub accepted: usize,
    pub rejected: usize,
    pub seed: u64,
}

/// Longest segment sampled by [`estimate_d`].
pub const MAX_SEGMENT: usize = 12;
/// Geodesics compared per segment.
const GEODESIC_CAP: usize = 64;
const TRIES_PER_STEP: usize = 32;

fn floor_rat(r: Rational) -> i64 {
    r.floor().to_integer()
}

/// Samples discrete `c`-quasigeodesic segments from the identity and
/// records their Hausdorff distance to the closest geodesic with the same
/// endpoints. A path `p₀, …, p_L` qualifies when every pair satisfies
/// `|s−t|/c − (c−1) ≤ d(p_s, p_t) ≤ c|s−t| + (c−1)`, so `c = 1` admits
/// exactly the geodesics. The maximum over samples is a lower bound for the
/// stability constant.
pub fn estimate_d(index: &BallIndex, c: Rational, samples: usize, seed: u64) -> Result<DEstimate> {
    let one = Rational::from_integer(1);
    if c < one {
        return Err(Error::input(format!("quasigeodesic constant c = {c} must be at least 1")));
    }
    let r = index.radius() as i64;
    let slack = c - one;
    // c·L + (c − 1) ≤ R keeps every pairwise distance inside the ball
    let mut len = 0usize;
    while len < MAX_SEGMENT && c * Rational::from_integer(len as i64 + 1) + slack <= Rational::from_integer(r) {
        len += 1;
    }
    if len == 0 {
        return Err(Error::capability("estimate_d", floor_rat(c + c + slack).max(1) as usize, r as usize));
    }
    let max_step = floor_rat(c + slack).max(1) as usize;
    let steps: Vec<u32> = index.ball(max_step).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best = 0usize;
    let mut accepted = 0;
    let mut rejected = 0;
    let ok = |path: &[u32], next: u32| {
        let t = path.len() as i64;
        path.iter().enumerate().all(|(s, &p)| {
            let gap = Rational::from_integer(t - s as i64);
            match index.dist(p, next) {
                Some(d) => {
                    let d = Rational::from_integer(d as i64);
                    gap / c - slack <= d && d <= c * gap + slack
                }
                None => false,
            }
        })
    };
    while accepted < samples {
        let mut path = vec![0u32];
        while path.len() <= len {
            let cur = *path.last().unwrap();
            let next = (0..TRIES_PER_STEP)
                .map(|_| steps[rng.random_range(0..steps.len())])
                .filter_map(|h| index.mul_ids(cur, h))
                .find(|&n| ok(&path, n));
            match next {
                Some(n) => path.push(n),
                None => break,
            }
        }
        if path.len() <= len {
            rejected += 1;
            if rejected > 100 * samples.max(1) {
                return Err(Error::degenerate(format!(
                    "no valid {c}-quasigeodesic segment after {rejected} rejections"
                )));
            }
            continue;
        }
        accepted += 1;
        best = best.max(hausdorff_to_geodesics(index, &path));
    }
    Ok(DEstimate {
        d: Rational::from_integer(best as i64),
        c,
        segment_length: len,
        accepted,
        rejected,
        seed,
    })
}

fn hausdorff_to_geodesics(index: &BallIndex, path: &[u32]) -> usize {
    let end = *path.last().unwrap();
    let is_geodesic = index.length(end) + 1 == path.len()
        && path.iter().enumerate().all(|(i, &p)| index.length(p) == i);
    if is_geodesic {
        return 0;
    }
    let cap = index.radius() + 1;
    let d = |a: u32, b: u32| index.dist(a, b).unwrap_or(cap);
    geodesics_to(index, end, GEODESIC_CAP)
        .iter()
        .map(|geo| {
            let one_way = |xs: &[u32], ys: &[u32]| {
                xs.iter().map(|&x| ys.iter().map(|&y| d(x, y)).min().unwrap()).max().unwrap()
            };
            one_way(path, geo).max(one_way(geo, path))
        })
        .min()
        .unwrap_or(0)
}

/// Up to `cap` geodesics from the identity to `end`, as vertex sequences.
fn geodesics_to(index: &BallIndex, end: u32, cap: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut stack = vec![vec![end]];
    while let Some(partial) = stack.pop() {
        if out.len() >= cap {
            break;
        }
        let head = *partial.last().unwrap();
        if head == 0 {
            let mut p = partial;
            p.reverse();
            out.push(p);
            continue;
        }
        for pred in index.predecessors(head).into_iter().rev() {
            let mut next = partial.clone();
            next.push(pred);
            stack.push(next);
        }
    }
    out
}

/// The constants feeding a [`Certificate`](crate::hyperbolicity::Certificate).
#[derive(Clone, Debug, PartialEq)]
pub struct HypConstants {
    pub delta: HalfInt,
    pub delta_source: Provenance,
    /// Human-readable description of the δ scan.
    pub delta_coverage: String,
    pub delta_exhaustive: bool,
    pub c0: Rational,
    pub c0_source: Provenance,
    pub dead_end_step: Option<u32>,
    pub d: Rational,
    pub d_source: Provenance,
    pub d_coverage: String,
}

impl HypConstants {
    /// Constants given directly, all marked as user-supplied.
    pub fn new(delta: HalfInt, c0: Rational, d: Rational) -> Result<HypConstants> {
        let consts = HypConstants {
            delta,
            delta_source: Provenance::User,
            delta_coverage: String::new(),
            delta_exhaustive: false,
            c0,
            c0_source: Provenance::User,
            dead_end_step: None,
            d,
            d_source: Provenance::User,
            d_coverage: String::new(),
        };
        consts.validate()?;
        Ok(consts)
    }

    /// Assembles measured constants. `c0` and `d` override the measurements
    /// when given.
    pub fn from_estimates(
        delta: &DeltaEstimate,
        c0: &C0Estimate,
        d: &DEstimate,
        c0_override: Option<Rational>,
        d_override: Option<Rational>,
    ) -> Result<HypConstants> {
        let consts = HypConstants {
            delta: delta.delta,
            delta_source: Provenance::Estimated,
            delta_coverage: delta.coverage(),
            delta_exhaustive: delta.is_exhaustive(),
            c0: c0_override.unwrap_or(c0.suggested_c0),
            c0_source: if c0_override.is_some() {
                Provenance::User
            } else {
                Provenance::Suggested
            },
            dead_end_step: Some(c0.dead_end_step),
            d: d_override.unwrap_or(d.d),
            d_source: if d_override.is_some() {
                Provenance::User
            } else {
                Provenance::Estimated
            },
            d_coverage: format!(
                "c = {}, {} segments of length {}, {} rejected, seed {}",
                format_rational(&d.c),
                d.accepted,
                d.segment_length,
                d.rejected,
                d.seed
            ),
        };
        consts.validate()?;
        Ok(consts)
    }

    pub fn validate(&self) -> Result<()> {
        if self.delta < HalfInt::ZERO {
            return Err(Error::input("δ must be nonnegative"));
        }
        if self.c0 <= Rational::from_integer(1) {
            return Err(Error::input(format!("c₀ = {} must exceed 1", format_rational(&self.c0))));
        }
        if self.d < Rational::from_integer(0) {
            return Err(Error::input("D must be nonnegative"));
        }
        Ok(())
    }
}
