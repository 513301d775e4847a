//! Balls and spheres of Cayley graphs, growth rates, and separated families
//! of sphere elements.

mod ball;
mod growth;
mod relative;
mod separated;

pub use ball::{enumerate_ball, BallIndex, Budget, GeneratingSet};
pub use growth::{growth_rate_estimate, GrowthEstimate};
pub use relative::{
    relative_growth_rate, relative_growth_sup, relative_growth_tree, verify_condition_star, GridEntry,
    ParamGrid, RelativeRate, StarNode, StarTree, SupResult,
};
pub use separated::{separated_subset_sphere, verify_separated, SeparatedSubset, Strategy};
pub(crate) use relative::step_bound;
