use std::ops::RangeInclusive;

use crate::cayley::BallIndex;
use crate::error::{Error, Result};
use crate::num::lsq_slope;

/// Growth of a group read off an enumerated ball.
#[derive(Clone, Debug, PartialEq)]
pub struct GrowthEstimate {
    /// `#S(n)` for `n = 0..=R`.
    pub sphere_counts: Vec<usize>,
    /// `N(n) = #B(n)` for `n = 0..=R`.
    pub ball_counts: Vec<usize>,
    /// Radii used by both estimators.
    pub window: RangeInclusive<usize>,
    /// Least-squares slope of `log N(n)` against `n` over the window.
    pub log_slope: f64,
    /// `N₀(n)/N₀(n−1)` for each `n` in the window after its first radius.
    pub ratios: Vec<f64>,
    /// `N₀(hi)/N₀(hi−1)`, the growth constant at the end of the window.
    pub last_ratio: f64,
    /// `log(last_ratio)`: the reported exponential growth rate.
    pub rate: f64,
    /// Whether the ratios are nonincreasing across the window.
    pub ratios_monotone: bool,
}

/// Estimates the exponential growth rate from sphere counts over `window`.
///
/// The reported rate is the logarithm of the last sphere ratio; the
/// log-slope of the ball counts is kept as a second estimator. Both are
/// biased at finite radius, in different directions.
pub fn growth_rate_estimate(index: &BallIndex, window: RangeInclusive<usize>) -> Result<GrowthEstimate> {
    let (lo, hi) = (*window.start(), *window.end());
    if hi > index.radius() {
        return Err(Error::capability("growth_rate_estimate", hi, index.radius()));
    }
    if hi < lo || hi - lo < 2 {
        return Err(Error::degenerate(format!(
            "growth window {lo}..={hi} spans fewer than 3 radii"
        )));
    }
    let lo = lo.max(1);
    if hi - lo < 1 {
        return Err(Error::degenerate("growth window has no nontrivial sphere ratio"));
    }
    let sphere_counts = index.sphere_counts();
    let ball_counts: Vec<usize> = (0..=index.radius()).map(|n| index.ball_count(n)).collect();
    let xs: Vec<f64> = window.clone().map(|n| n as f64).collect();
    let ys: Vec<f64> = window.clone().map(|n| (ball_counts[n] as f64).ln()).collect();
    let log_slope = lsq_slope(&xs, &ys).ok_or_else(|| Error::degenerate("degenerate growth window"))?;
    let mut ratios = Vec::new();
    for n in lo + 1..=hi {
        if sphere_counts[n - 1] == 0 {
            return Err(Error::degenerate(format!("sphere {} is empty", n - 1)));
        }
        ratios.push(sphere_counts[n] as f64 / sphere_counts[n - 1] as f64);
    }
    let last_ratio = *ratios.last().unwrap();
    let ratios_monotone = ratios.windows(2).all(|w| w[1] <= w[0] + 1e-12);
    Ok(GrowthEstimate {
        sphere_counts,
        ball_counts,
        window,
        log_slope,
        ratios,
        last_ratio,
        rate: last_ratio.ln(),
        ratios_monotone,
    })
}
