//! Growth, hyperbolicity and boundary entropy of finitely generated groups,
//! computed from finite balls of their Cayley graphs.
//!
//! ```
//! use hypgrowth::cayley::{enumerate_ball, growth_rate_estimate, Budget};
//! use hypgrowth::group::GroupSpec;
//!
//! let spec: GroupSpec = "free:2".parse().unwrap();
//! let ball = enumerate_ball(&spec, 6, Budget::unlimited()).unwrap();
//! assert_eq!(ball.sphere_counts(), vec![1, 4, 12, 36, 108, 324, 972]);
//! let growth = growth_rate_estimate(&ball, 1..=6).unwrap();
//! assert_eq!(growth.last_ratio, 3.0);
//! ```

pub mod boundary;
pub mod cache;
pub mod cayley;
pub mod error;
pub mod group;
pub mod hyperbolicity;
mod mis;
pub mod num;
pub mod report;

pub use error::{Error, Result};
