use std::fmt;
use std::str::FromStr;

use crate::cayley::BallIndex;
use crate::error::{Error, Result};
use crate::mis::maximum_independent_set;

/// Largest sphere for which the exact search is attempted.
pub const EXACT_SPHERE_LIMIT: usize = 2000;

/// How a maximal separated family is chosen.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    /// Scan in shortlex order and keep each compatible point. Maximal, not
    /// necessarily maximum: a certified lower bound.
    #[default]
    Greedy,
    /// Branch and bound for a maximum family. Small instances only.
    Exact,
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::Greedy => "greedy",
            Strategy::Exact => "exact",
        })
    }
}

impl FromStr for Strategy {
    type Err = Error;
    fn from_str(s: &str) -> Result<Strategy> {
        match s {
            "greedy" => Ok(Strategy::Greedy),
            "exact" => Ok(Strategy::Exact),
            _ => Err(Error::input(format!("unknown strategy {s:?} (expected greedy or exact)"))),
        }
    }
}

/// An ε-separated subset of a sphere.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparatedSubset {
    pub ids: Vec<u32>,
    pub strategy: Strategy,
}

impl SeparatedSubset {
    pub fn count(&self) -> usize {
        self.ids.len()
    }
}

fn check_eps(index: &BallIndex, eps: u32) -> Result<()> {
    if eps == 0 {
        return Err(Error::input("separation ε must be at least 1"));
    }
    if eps as usize > index.radius() {
        return Err(Error::capability("separation threshold", eps as usize, index.radius()));
    }
    Ok(())
}

/// Picks pairwise ε-separated elements of `S(n)`. Two elements are separated
/// when their distance is not within `ε − 1`.
pub fn separated_subset_sphere(index: &BallIndex, n: usize, eps: u32, strategy: Strategy) -> Result<SeparatedSubset> {
    if n > index.radius() {
        return Err(Error::capability("separated_subset_sphere", n, index.radius()));
    }
    check_eps(index, eps)?;
    let sphere: Vec<u32> = index.sphere(n).collect();
    let close = |a: u32, b: u32| index.within(a, b, eps as usize - 1);
    let ids = match strategy {
        Strategy::Greedy => greedy_separated(&sphere, close),
        Strategy::Exact => {
            if sphere.len() > EXACT_SPHERE_LIMIT {
                return Err(Error::input(format!(
                    "exact search refused: sphere has {} elements (limit {EXACT_SPHERE_LIMIT})",
                    sphere.len()
                )));
            }
            maximum_independent_set(sphere.len(), |i, j| close(sphere[i], sphere[j]))
                .into_iter()
                .map(|i| sphere[i])
                .collect()
        }
    };
    Ok(SeparatedSubset { ids, strategy })
}

pub(crate) fn greedy_separated(candidates: &[u32], close: impl Fn(u32, u32) -> bool) -> Vec<u32> {
    let mut kept: Vec<u32> = Vec::new();
    for &c in candidates {
        if kept.iter().all(|&k| !close(k, c)) {
            kept.push(c);
        }
    }
    kept
}

/// Re-checks pairwise ε-separation from the distance queries alone.
pub fn verify_separated(index: &BallIndex, ids: &[u32], eps: u32) -> Result<bool> {
    check_eps(index, eps)?;
    for (i, &a) in ids.iter().enumerate() {
        for &b in &ids[i + 1..] {
            if a == b || index.within(a, b, eps as usize - 1) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
