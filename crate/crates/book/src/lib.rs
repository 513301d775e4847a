//! Guide listings, compiled as doctests. Each module is one chapter of the
//! mdbook under `book/src`.

#[doc = include_str!("../../../book/src/overview.md")]
pub mod overview {}

#[doc = include_str!("../../../book/src/groups.md")]
pub mod groups {}

#[doc = include_str!("../../../book/src/balls.md")]
pub mod balls {}

#[doc = include_str!("../../../book/src/hyperbolicity.md")]
pub mod hyperbolicity {}

#[doc = include_str!("../../../book/src/relative-growth.md")]
pub mod relative_growth {}

#[doc = include_str!("../../../book/src/boundary.md")]
pub mod boundary {}

#[doc = include_str!("../../../book/src/reports.md")]
pub mod reports {}

#[doc = include_str!("../../../book/src/caveats.md")]
pub mod caveats {}
