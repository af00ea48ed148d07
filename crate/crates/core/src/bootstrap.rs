//! Bootstrap estimation of the null distribution of the two-sample
//! statistic. Iterations are an order-insensitive parallel map over
//! per-index derived streams, so results are bit-identical for a fixed
//! master seed regardless of worker count.

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::ff2d::ff_statistic;
use crate::samples::{Point2D, Sample2D};
use crate::stream::derive_stream;

#[derive(Debug, Clone, Copy)]
pub struct BootstrapConfig {
    pub n_bootstrap: usize,
    pub master_seed: u64,
    pub workers: usize,
}

impl BootstrapConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n_bootstrap < 1 {
            return Err(Error::InvalidArgument("n_bootstrap must be >= 1".into()));
        }
        if self.workers < 1 {
            return Err(Error::InvalidArgument("workers must be >= 1".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct BootstrapResult {
    /// Add-one estimate: (1 + #{d* >= observed}) / (n_bootstrap + 1).
    pub p_value: f64,
    pub null_statistics: Vec<f64>,
    pub observed: f64,
}

/// Draws one pair of null replicates: n1 then n2 whole (x, y) points,
/// uniformly with replacement from the pooled sample.
pub fn resample_null(
    pooled: &Sample2D,
    n1: usize,
    n2: usize,
    rng: &mut ChaCha8Rng,
) -> Result<(Sample2D, Sample2D)> {
    if pooled.len() != n1 + n2 {
        return Err(Error::InvalidArgument(format!(
            "pooled size {} != n1 + n2 = {}",
            pooled.len(),
            n1 + n2
        )));
    }
    let points = pooled.points();
    let mut draw = |count: usize, label: &str| -> Result<Sample2D> {
        let picked: Vec<Point2D> = (0..count)
            .map(|_| points[rng.gen_range(0..points.len())])
            .collect();
        Sample2D::new(picked, label)
    };
    let r1 = draw(n1, "replicate1")?;
    let r2 = draw(n2, "replicate2")?;
    Ok((r1, r2))
}

/// Estimates the p-value of the observed statistic against the bootstrapped
/// null distribution. Ties (d* == observed) count against rejection.
pub fn bootstrap_pvalue(
    s1: &Sample2D,
    s2: &Sample2D,
    cfg: &BootstrapConfig,
) -> Result<BootstrapResult> {
    cfg.validate()?;
    s1.validate()?;
    s2.validate()?;
    let observed = ff_statistic(s1, s2)?.d;

    let mut pooled_points = s1.points().to_vec();
    pooled_points.extend_from_slice(s2.points());
    let pooled = Sample2D::new(pooled_points, "pooled")?;
    let (n1, n2) = (s1.len(), s2.len());

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.workers)
        .build()
        .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?;

    let null_statistics: Vec<f64> = pool.install(|| {
        (0..cfg.n_bootstrap as u64)
            .into_par_iter()
            .map(|i| {
                let mut rng = derive_stream(cfg.master_seed, i);
                let (r1, r2) = resample_null(&pooled, n1, n2, &mut rng)?;
                Ok(ff_statistic(&r1, &r2)?.d)
            })
            .collect::<Result<Vec<f64>>>()
    })?;

    let exceed = null_statistics.iter().filter(|&&d| d >= observed).count();
    let p_value = (1 + exceed) as f64 / (cfg.n_bootstrap + 1) as f64;
    Ok(BootstrapResult {
        p_value,
        null_statistics,
        observed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stream::standard_normal;

    fn sample(points: &[(f64, f64)]) -> Sample2D {
        Sample2D::new(
            points.iter().map(|&(x, y)| Point2D::new(x, y)).collect(),
            "test",
        )
        .unwrap()
    }

    fn normal_cloud(n: usize, center: (f64, f64), seed_index: u64) -> Sample2D {
        let mut rng = derive_stream(99, seed_index);
        let points: Vec<Point2D> = (0..n)
            .map(|_| {
                Point2D::new(
                    center.0 + standard_normal(&mut rng),
                    center.1 + standard_normal(&mut rng),
                )
            })
            .collect();
        Sample2D::new(points, "cloud").unwrap()
    }

    #[test]
    fn single_atom_pool() {
        let pooled = sample(&[(3.0, 4.0), (3.0, 4.0)]);
        let mut rng = derive_stream(0, 0);
        let (r1, r2) = resample_null(&pooled, 1, 1, &mut rng).unwrap();
        assert_eq!(r1.points(), &[Point2D::new(3.0, 4.0)]);
        assert_eq!(r2.points(), &[Point2D::new(3.0, 4.0)]);
    }

    #[test]
    fn replicates_drawn_from_pool_support() {
        let pooled = sample(&[(0.0, 1.0), (2.0, 3.0), (4.0, 5.0), (6.0, 7.0)]);
        let mut rng = derive_stream(5, 1);
        let (r1, r2) = resample_null(&pooled, 2, 2, &mut rng).unwrap();
        for p in r1.points().iter().chain(r2.points()) {
            assert!(pooled.points().contains(p));
        }
    }

    #[test]
    fn resample_is_deterministic_per_stream() {
        let pooled = sample(&[(0.0, 1.0), (2.0, 3.0), (4.0, 5.0)]);
        let (a1, a2) = resample_null(&pooled, 2, 1, &mut derive_stream(7, 3)).unwrap();
        let (b1, b2) = resample_null(&pooled, 2, 1, &mut derive_stream(7, 3)).unwrap();
        assert_eq!(a1.points(), b1.points());
        assert_eq!(a2.points(), b2.points());
    }

    #[test]
    fn size_mismatch_rejected() {
        let pooled = sample(&[(0.0, 0.0), (1.0, 1.0)]);
        assert!(resample_null(&pooled, 2, 2, &mut derive_stream(0, 0)).is_err());
    }

    #[test]
    fn identical_samples_give_p_one() {
        let s = sample(&[(0.0, 0.0), (1.0, 2.0), (2.0, 1.0), (3.0, -1.0)]);
        let cfg = BootstrapConfig {
            n_bootstrap: 99,
            master_seed: 11,
            workers: 1,
        };
        let res = bootstrap_pvalue(&s, &s, &cfg).unwrap();
        assert_eq!(res.observed, 0.0);
        assert_eq!(res.p_value, 1.0);
        assert!(res.null_statistics.iter().all(|&d| (0.0..=1.0).contains(&d)));
    }

    #[test]
    fn separated_clouds_hit_the_floor() {
        let s1 = normal_cloud(50, (0.0, 0.0), 0);
        let s2 = normal_cloud(50, (10.0, 10.0), 1);
        let cfg = BootstrapConfig {
            n_bootstrap: 999,
            master_seed: 4,
            workers: 1,
        };
        let res = bootstrap_pvalue(&s1, &s2, &cfg).unwrap();
        assert_eq!(res.p_value, 1.0 / 1000.0);
    }

    #[test]
    fn worker_count_does_not_change_results() {
        let s1 = normal_cloud(30, (0.0, 0.0), 2);
        let s2 = normal_cloud(30, (0.5, 0.0), 3);
        let base = BootstrapConfig {
            n_bootstrap: 50,
            master_seed: 21,
            workers: 1,
        };
        let ref_res = bootstrap_pvalue(&s1, &s2, &base).unwrap();
        for workers in [2, 4] {
            let cfg = BootstrapConfig { workers, ..base };
            let res = bootstrap_pvalue(&s1, &s2, &cfg).unwrap();
            assert_eq!(res.p_value, ref_res.p_value);
            assert_eq!(res.null_statistics, ref_res.null_statistics);
        }
    }
}
