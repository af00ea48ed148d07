//! Peacock's all-pairs two-sample statistic, the cubic-time baseline.
//!
//! The grid ranges over every pooled (x, y) coordinate pair from both
//! samples, not just observed points. Region boundaries are closed on both
//! sides (<= / >=) with no fractional tie-splitting; every boundary is
//! probed from both sides as the grid sweeps, so the max is unaffected.

use crate::error::{Error, Result};
use crate::samples::Sample2D;

#[derive(Debug, Clone, Copy)]
pub struct PeacockStatistic {
    pub d: f64,
}

/// Fractions of a sample in the four closed quadrant orientations around
/// (gx, gy): (<=, <=), (<=, >=), (>=, <=), (>=, >=).
fn orientation_fractions(s: &Sample2D, gx: f64, gy: f64) -> [f64; 4] {
    let mut counts = [0usize; 4];
    for p in s.points() {
        let (le_x, ge_x) = (p.x <= gx, p.x >= gx);
        let (le_y, ge_y) = (p.y <= gy, p.y >= gy);
        counts[0] += (le_x && le_y) as usize;
        counts[1] += (le_x && ge_y) as usize;
        counts[2] += (ge_x && le_y) as usize;
        counts[3] += (ge_x && ge_y) as usize;
    }
    let n = s.len() as f64;
    counts.map(|c| c as f64 / n)
}

/// Maximum absolute difference between the samples' region fractions over
/// all pooled coordinate pairs and all four orientations. Direct triple
/// loop, O(n^3).
pub fn peacock_statistic(s1: &Sample2D, s2: &Sample2D) -> Result<PeacockStatistic> {
    if s1.is_empty() || s2.is_empty() {
        return Err(Error::EmptySample {
            label: if s1.is_empty() { s1.label() } else { s2.label() }.to_string(),
        });
    }
    let xs: Vec<f64> = s1.xs().chain(s2.xs()).collect();
    let ys: Vec<f64> = s1.ys().chain(s2.ys()).collect();
    let mut d = 0.0f64;
    for &gx in &xs {
        for &gy in &ys {
            let f1 = orientation_fractions(s1, gx, gy);
            let f2 = orientation_fractions(s2, gx, gy);
            for k in 0..4 {
                d = d.max((f1[k] - f2[k]).abs());
            }
        }
    }
    Ok(PeacockStatistic { d })
}
