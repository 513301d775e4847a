//! Boundary points as truncated geodesic rays, bounds on the visual metric,
//! and separated/spanning counts for the action of the group on its
//! boundary.

mod entropy;
mod metric;
mod ray;

pub use entropy::{
    boundary_entropy_estimate, boundary_separated_count, boundary_spanning_count, covering_depth, EntropyEstimate,
    PairTable, SeparationReport, SweepRow, ThetaSlope, EXACT_RAY_LIMIT,
};
pub use metric::{d_eta_bounds, BoundaryMetricParams, DistanceBounds};
pub use ray::{
    act_on_ray, default_buffer, enumerate_rays, fellow_threshold, ray_gromov_product, RayApprox, RayProduct,
};
