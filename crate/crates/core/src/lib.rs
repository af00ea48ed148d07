//! Two-sample Kolmogorov-Smirnov testing in two dimensions.
//!
//! Implements the Fasano-Franceschini quadrant-counting statistic with
//! fractional tie handling, the asymptotic p-value built on the Kolmogorov
//! limiting distribution, a deterministic parallel bootstrap p-value, and
//! Peacock's all-pairs statistic as the cubic-time baseline.

pub mod bootstrap;
pub mod error;
pub mod ff2d;
pub mod kolmogorov;
pub mod peacock;
pub mod report;
pub mod samples;
pub mod stream;

pub use bootstrap::{bootstrap_pvalue, resample_null, BootstrapConfig, BootstrapResult};
pub use error::{Error, Result};
pub use ff2d::{
    analytic_pvalue, d_one_direction, ff_statistic, ff_test, pearson_r, quadrant_fractions,
    Correlation, FfStatistic, Method, QuadrantFractions, TestOutcome,
};
pub use kolmogorov::{
    effective_n, ks1d_statistic, ks_survival, pvalue_1d_one_sample, pvalue_1d_two_sample,
};
pub use peacock::{peacock_statistic, PeacockStatistic};
pub use samples::{Point2D, Sample2D};
