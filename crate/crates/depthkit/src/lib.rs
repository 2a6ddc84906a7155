//! Robust center-outward ranking built on the median absolute distance.
//!
//! The core object is the scale field `Med(‖X - v‖)`: the smallest radius a
//! ball at `v` needs in order to capture half of the sample. Evaluating it at
//! every observation induces a depth (the fraction of sample points with a
//! strictly larger scale value), central regions and quantile shells, and a
//! local boundary geometry (directional derivatives, a gradient, and an
//! angular measure on the half-mass sphere) that exposes directional
//! skewness classical depths reduce away.
//!
//! Alongside the scale-based depth the crate ships four classical depth
//! functions (Tukey/halfspace, simplicial, spatial, projection) with exact
//! bivariate algorithms, plus rank-agreement and region-overlap analytics
//! and seeded generators for the simulation models the analytics expect.
//!
//! Batch evaluation is data-parallel via rayon when the default `parallel`
//! feature is enabled; disabling it yields a dependency-light sequential
//! build with identical outputs.

pub mod analysis;
pub mod boundary;
pub mod classical;
pub mod datagen;
pub mod dataset;
pub mod density;
pub mod directions;
pub mod error;
pub mod exec;
pub mod metric;
pub mod mmad;
mod order;
pub mod univariate;

pub use dataset::Dataset;
pub use error::{DepthError, Result};
pub use metric::{sample_covariance, Metric};

/// Name of the RNG driving every seeded computation in this crate.
pub const RNG_ALGORITHM: &str = "ChaCha8";
