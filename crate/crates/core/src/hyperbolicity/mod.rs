//! Four-point δ, triangle thinness, the extension constant c₀, the
//! quasigeodesic stability constant D, and the thresholds derived from them.

mod certificate;
mod constants;
mod gromov;

pub use certificate::{compute_certificate, default_eta, eta_prime, mu, tau, Certificate};
pub use constants::{estimate_c0, estimate_d, C0Estimate, DEstimate, HypConstants, Provenance, MAX_SEGMENT};
pub use gromov::{estimate_delta, gromov_product, tripod_thinness, DeltaEstimate, DeltaScope, EXHAUSTIVE_POINT_LIMIT};
