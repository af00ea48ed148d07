//! Fasano-Franceschini two-sample statistic in two dimensions, with the
//! fractional tie-count rule, per-sample correlation, and the analytic
//! asymptotic p-value.

use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::kolmogorov::{effective_n, ks_survival};
use crate::samples::{Point2D, Sample2D};

/// Fraction of a sample falling in each of the four quadrants around an
/// origin. Points tied with the origin on one coordinate contribute half a
/// count to each adjacent quadrant; points tied on both contribute a quarter
/// to all four, so the fractions always sum to 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadrantFractions {
    /// x > X, y > Y
    pub q_pp: f64,
    /// x > X, y < Y
    pub q_pm: f64,
    /// x < X, y > Y
    pub q_mp: f64,
    /// x < X, y < Y
    pub q_mm: f64,
}

impl QuadrantFractions {
    pub fn as_array(&self) -> [f64; 4] {
        [self.q_pp, self.q_pm, self.q_mp, self.q_mm]
    }

    pub fn sum(&self) -> f64 {
        self.q_pp + self.q_pm + self.q_mp + self.q_mm
    }
}

/// The directional maxima and their average.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct FfStatistic {
    /// Maximum over origins drawn from sample 1.
    pub d1: f64,
    /// Maximum over origins drawn from sample 2.
    pub d2: f64,
    /// (d1 + d2) / 2, the reported statistic.
    pub d: f64,
}

/// Pearson correlation of a sample, with a degeneracy marker for samples
/// where one coordinate has zero variance (r is then reported as 0).
#[derive(Debug, Clone, Copy)]
pub struct Correlation {
    pub value: f64,
    pub degenerate: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Analytic,
    Bootstrap,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Method::Analytic => write!(f, "analytic"),
            Method::Bootstrap => write!(f, "bootstrap"),
        }
    }
}

/// Everything a test run reports.
#[derive(Debug, Clone, Serialize)]
pub struct TestOutcome {
    pub statistic: f64,
    pub d1: f64,
    pub d2: f64,
    pub p_value: f64,
    pub method: Method,
    pub n1: usize,
    pub n2: usize,
    pub r1: f64,
    pub r2: f64,
    pub runtime_seconds: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n_bootstrap: Option<usize>,
    #[serde(skip)]
    pub degenerate_correlation: bool,
}

/// Counts the fraction of `s` in each quadrant around `origin`, splitting
/// ties fractionally. Ties are detected by exact equality of the stored
/// floating-point values.
pub fn quadrant_fractions(origin: Point2D, s: &Sample2D) -> Result<QuadrantFractions> {
    if s.is_empty() {
        return Err(Error::EmptySample {
            label: s.label().to_string(),
        });
    }
    let (mut pp, mut pm, mut mp, mut mm) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
    for p in s.points() {
        let tie_x = p.x == origin.x;
        let tie_y = p.y == origin.y;
        match (tie_x, tie_y) {
            (true, true) => {
                pp += 0.25;
                pm += 0.25;
                mp += 0.25;
                mm += 0.25;
            }
            (true, false) => {
                if p.y > origin.y {
                    pp += 0.5;
                    mp += 0.5;
                } else {
                    pm += 0.5;
                    mm += 0.5;
                }
            }
            (false, true) => {
                if p.x > origin.x {
                    pp += 0.5;
                    pm += 0.5;
                } else {
                    mp += 0.5;
                    mm += 0.5;
                }
            }
            (false, false) => match (p.x > origin.x, p.y > origin.y) {
                (true, true) => pp += 1.0,
                (true, false) => pm += 1.0,
                (false, true) => mp += 1.0,
                (false, false) => mm += 1.0,
            },
        }
    }
    let n = s.len() as f64;
    Ok(QuadrantFractions {
        q_pp: pp / n,
        q_pm: pm / n,
        q_mp: mp / n,
        q_mm: mm / n,
    })
}

/// Maximum over origins and quadrants of the absolute difference between
/// the two samples' quadrant fractions. O(|origins| * (|s1| + |s2|)).
pub fn d_one_direction(origins: &Sample2D, s1: &Sample2D, s2: &Sample2D) -> Result<f64> {
    let mut d_max = 0.0f64;
    for &origin in origins.points() {
        let f1 = quadrant_fractions(origin, s1)?;
        let f2 = quadrant_fractions(origin, s2)?;
        for (a, b) in f1.as_array().into_iter().zip(f2.as_array()) {
            d_max = d_max.max((a - b).abs());
        }
    }
    Ok(d_max)
}

/// The two-sample statistic: directional maxima with origins from each
/// sample in turn, averaged.
pub fn ff_statistic(s1: &Sample2D, s2: &Sample2D) -> Result<FfStatistic> {
    let d1 = d_one_direction(s1, s1, s2)?;
    let d2 = d_one_direction(s2, s1, s2)?;
    Ok(FfStatistic {
        d1,
        d2,
        d: (d1 + d2) / 2.0,
    })
}

/// Pearson correlation coefficient of the sample's x and y coordinates,
/// clamped to [-1, 1]. Zero variance in either coordinate yields r = 0
/// with the degeneracy flag set.
pub fn pearson_r(s: &Sample2D) -> Result<Correlation> {
    if s.len() < 2 {
        return Err(Error::InvalidArgument(format!(
            "sample '{}' needs at least 2 points for correlation",
            s.label()
        )));
    }
    let n = s.len() as f64;
    let mean_x = s.xs().sum::<f64>() / n;
    let mean_y = s.ys().sum::<f64>() / n;
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for p in s.points() {
        let (dx, dy) = (p.x - mean_x, p.y - mean_y);
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if sxx == 0.0 || syy == 0.0 {
        return Ok(Correlation {
            value: 0.0,
            degenerate: true,
        });
    }
    Ok(Correlation {
        value: (sxy / (sxx.sqrt() * syy.sqrt())).clamp(-1.0, 1.0),
        degenerate: false,
    })
}

/// Asymptotic p-value for the two-sample statistic: the Kolmogorov survival
/// function at `d*sqrt(n) / (1 + sqrt(1-r^2) (0.25 - 0.75/sqrt(n)))` with
/// `n = n1*n2/(n1+n2)` and the two samples' correlations combined as
/// `r^2 = (r1^2 + r2^2)/2`.
pub fn analytic_pvalue(d: f64, n1: usize, n2: usize, r1: f64, r2: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&d) {
        return Err(Error::InvalidArgument(format!(
            "statistic must lie in [0,1], got {d}"
        )));
    }
    if n1 < 1 || n2 < 1 {
        return Err(Error::InvalidArgument("sample sizes must be >= 1".into()));
    }
    for r in [r1, r2] {
        if !(-1.0..=1.0).contains(&r) {
            return Err(Error::InvalidArgument(format!(
                "correlation must lie in [-1,1], got {r}"
            )));
        }
    }
    let n = effective_n(n1, n2);
    let sqrt_n = n.sqrt();
    let r_sq = (r1 * r1 + r2 * r2) / 2.0;
    let denom = 1.0 + (1.0 - r_sq).max(0.0).sqrt() * (0.25 - 0.75 / sqrt_n);
    ks_survival(d * sqrt_n / denom)
}

/// Runs the full analytic test: statistic, per-sample correlations, p-value,
/// and wall-clock runtime.
pub fn ff_test(s1: &Sample2D, s2: &Sample2D) -> Result<TestOutcome> {
    let start = Instant::now();
    s1.validate()?;
    s2.validate()?;
    let stat = ff_statistic(s1, s2)?;
    let c1 = pearson_r(s1)?;
    let c2 = pearson_r(s2)?;
    let p = analytic_pvalue(stat.d, s1.len(), s2.len(), c1.value, c2.value)?;
    Ok(TestOutcome {
        statistic: stat.d,
        d1: stat.d1,
        d2: stat.d2,
        p_value: p,
        method: Method::Analytic,
        n1: s1.len(),
        n2: s2.len(),
        r1: c1.value,
        r2: c2.value,
        runtime_seconds: start.elapsed().as_secs_f64(),
        seed: None,
        n_bootstrap: None,
        degenerate_correlation: c1.degenerate || c2.degenerate,
    })
}
