use crate::boundary::{ray_gromov_product, RayApprox};
use crate::cayley::BallIndex;
use crate::error::{Error, Result};
use crate::hyperbolicity::{eta_prime, HypConstants};
use crate::num::{rational_to_f64, HalfInt};

/// Parameters of the visual metric `d_η`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoundaryMetricParams {
    pub eta: f64,
    pub delta: HalfInt,
    pub eta_prime: f64,
}

impl BoundaryMetricParams {
    /// Rejects η unless `1 − 2η′ > 0`, the condition for the two-sided
    /// bound on `d_η` to be nondegenerate.
    pub fn new(eta: f64, delta: HalfInt) -> Result<BoundaryMetricParams> {
        if !(eta > 0.0 && eta.is_finite()) {
            return Err(Error::input(format!("η = {eta} must be positive")));
        }
        let eta_prime = eta_prime(eta, delta);
        if 1.0 - 2.0 * eta_prime <= 0.0 {
            return Err(Error::input(format!(
                "η = {eta} is too large for δ = {delta}: 1 − 2η′ = {} ≤ 0",
                1.0 - 2.0 * eta_prime
            )));
        }
        Ok(BoundaryMetricParams { eta, delta, eta_prime })
    }

    /// `1 − 2η′`.
    pub fn sandwich_factor(&self) -> f64 {
        1.0 - 2.0 * self.eta_prime
    }

    /// Upper bound on `d_η` for a Gromov product estimate `g` with error bar
    /// `eb`: `exp(−η(g − eb))`, capped at 1 since products are nonnegative.
    pub fn upper(&self, g: usize, eb: f64) -> f64 {
        (-self.eta * (g as f64 - eb).max(0.0)).exp()
    }

    /// Lower bound `(1 − 2η′)·exp(−η(g + eb))`.
    pub fn lower(&self, g: usize, eb: f64) -> f64 {
        self.sandwich_factor() * (-self.eta * (g as f64 + eb)).exp()
    }
}

/// Two-sided bound on `d_η(u, v)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DistanceBounds {
    pub lower: f64,
    pub upper: f64,
    /// The rays end at the same element: at this depth they cannot be told
    /// apart, and the bounds only reflect the truncation.
    pub same_point: bool,
}

pub fn d_eta_bounds(
    u: &RayApprox,
    v: &RayApprox,
    params: &BoundaryMetricParams,
    index: &BallIndex,
    consts: &HypConstants,
) -> Result<DistanceBounds> {
    let p = ray_gromov_product(u, v, index, consts)?;
    let eb = rational_to_f64(&p.error_bar);
    Ok(DistanceBounds {
        lower: params.lower(p.value, eb),
        upper: params.upper(p.value, eb),
        same_point: u.id == v.id,
    })
}
