use alloc::vec::Vec;
#[allow(unused_imports)]
use num_traits::Float;

use super::Weight;
use crate::fit::line_fit;
use crate::{Error, Result};

/// Sampling grid for [`check_or_class`]: `t` runs over `[1, t_max]` in steps
/// of `t_step` (plus `t_max` itself), `λ` over `lambda_points` equispaced
/// values in `[1, a]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrGrid {
    pub t_step: f64,
    pub lambda_points: usize,
}

impl Default for OrGrid {
    fn default() -> Self {
        Self {
            t_step: 0.25,
            lambda_points: 33,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrClassReport {
    pub in_class: bool,
    pub max_ratio: f64,
    /// `(t, λ)` where the largest ratio occurred.
    pub max_at: (f64, f64),
    pub min_ratio: f64,
    pub min_at: (f64, f64),
}

impl OrClassReport {
    /// The sampled ratio farthest from 1 on a log scale.
    pub fn extremal_ratio(&self) -> f64 {
        if self.max_ratio.ln() >= -self.min_ratio.ln() {
            self.max_ratio
        } else {
            self.min_ratio
        }
    }
}

/// Samples `ω(λt)/ω(t)` and checks it stays in `[1/c, c]`.
pub fn check_or_class(
    weight: &Weight,
    a: f64,
    c: f64,
    t_max: f64,
    grid: OrGrid,
) -> Result<OrClassReport> {
    if !(a > 1.0) || !(c > 1.0) || !(t_max >= 1.0) || !t_max.is_finite() {
        return Err(Error::InvalidParameter(
            "OR class check needs a > 1, c > 1, 1 <= t_max < inf",
        ));
    }
    if !(grid.t_step > 0.0) || grid.lambda_points < 2 {
        return Err(Error::InvalidParameter(
            "OR grid needs t_step > 0 and at least two lambda points",
        ));
    }
    let steps = ((t_max - 1.0) / grid.t_step).floor() as usize;
    let mut ts: Vec<f64> = (0..=steps).map(|i| 1.0 + i as f64 * grid.t_step).collect();
    if *ts.last().unwrap() < t_max {
        ts.push(t_max);
    }
    let denom = (grid.lambda_points - 1) as f64;
    let mut report = OrClassReport {
        in_class: true,
        max_ratio: f64::MIN,
        max_at: (1.0, 1.0),
        min_ratio: f64::MAX,
        min_at: (1.0, 1.0),
    };
    for &t in &ts {
        let base = weight.at_real(t);
        for j in 0..grid.lambda_points {
            let lambda = 1.0 + (a - 1.0) * j as f64 / denom;
            let ratio = weight.at_real(lambda * t) / base;
            if ratio > report.max_ratio {
                report.max_ratio = ratio;
                report.max_at = (t, lambda);
            }
            if ratio < report.min_ratio {
                report.min_ratio = ratio;
                report.min_at = (t, lambda);
            }
        }
    }
    report.in_class = report.max_ratio <= c && report.min_ratio >= 1.0 / c;
    Ok(report)
}

/// Slope allowance for the log-log trend of the sandwich ratios.
pub const SANDWICH_SLOPE_TOLERANCE: f64 = 0.05;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SandwichReport {
    pub s: f64,
    pub k_max: usize,
    /// `min ω(k)/k^s` over `1 <= k <= k_max`.
    pub c_low: f64,
    pub c_low_at: usize,
    /// `max ω(k)/k^{1+s}` over `1 <= k <= k_max`.
    pub c_high: f64,
    pub c_high_at: usize,
    /// Log-log slope of the dyadic-block minima of `ω(k)/k^s`.
    pub lower_slope: Option<f64>,
    /// Log-log slope of the dyadic-block maxima of `ω(k)/k^{1+s}`.
    pub upper_slope: Option<f64>,
    pub pass: bool,
}

/// Finite-range look at `k^s ≪ ω(k) ≪ k^{1+s}`.
///
/// The constants are exact over the range. The trend slopes are fitted
/// over the dyadic blocks starting at or above `sqrt(k_max)` (all blocks
/// when that leaves fewer than two); a lower envelope falling faster than
/// `-SANDWICH_SLOPE_TOLERANCE` or an upper envelope rising faster than
/// `SANDWICH_SLOPE_TOLERANCE` counts as divergence.
pub fn check_sandwich(weight: &Weight, s: f64, k_max: usize) -> Result<SandwichReport> {
    if k_max < 2 {
        return Err(Error::InvalidParameter("sandwich check needs k_max >= 2"));
    }
    if !s.is_finite() || s < 0.0 {
        return Err(Error::NegativeExponent {
            kind: "sandwich",
            s,
        });
    }
    let lower = |k: usize| weight.at(k as i64) / (k as f64).powf(s);
    let upper = |k: usize| weight.at(k as i64) / (k as f64).powf(1.0 + s);

    let (mut c_low, mut c_low_at) = (f64::MAX, 1);
    let (mut c_high, mut c_high_at) = (f64::MIN, 1);
    // dyadic blocks [2^j, 2^{j+1}): (start, (argmin, min lower), (argmax, max upper))
    type Block = (usize, (usize, f64), (usize, f64));
    let mut blocks: Vec<Block> = Vec::new();
    for k in 1..=k_max {
        let (lo, hi) = (lower(k), upper(k));
        if lo < c_low {
            c_low = lo;
            c_low_at = k;
        }
        if hi > c_high {
            c_high = hi;
            c_high_at = k;
        }
        if k.is_power_of_two() {
            blocks.push((k, (k, lo), (k, hi)));
        } else {
            let last = blocks.last_mut().unwrap();
            if lo < last.1 .1 {
                last.1 = (k, lo);
            }
            if hi > last.2 .1 {
                last.2 = (k, hi);
            }
        }
    }

    let cut = (k_max as f64).sqrt();
    let mut tail: Vec<&Block> = blocks.iter().filter(|b| b.0 as f64 >= cut).collect();
    if tail.len() < 2 {
        tail = blocks.iter().collect();
    }
    let slope = |pick: fn(&Block) -> (usize, f64)| {
        let pts: Vec<(f64, f64)> = tail
            .iter()
            .map(|b| {
                let (k, v) = pick(b);
                ((k as f64).ln(), v.ln())
            })
            .collect();
        line_fit(&pts).map(|f| f.slope)
    };
    let lower_slope = slope(|b| b.1);
    let upper_slope = slope(|b| b.2);
    let pass = c_low > 0.0
        && lower_slope.is_none_or(|v| v >= -SANDWICH_SLOPE_TOLERANCE)
        && upper_slope.is_none_or(|v| v <= SANDWICH_SLOPE_TOLERANCE);
    Ok(SandwichReport {
        s,
        k_max,
        c_low,
        c_low_at,
        c_high,
        c_high_at,
        lower_slope,
        upper_slope,
        pass,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EmbeddingReport {
    /// `sup ω₂(k)/ω₁(k)` over `1 <= k <= k_max`.
    pub sup_ratio: f64,
    pub at_k: usize,
    pub k_max: usize,
}

/// Finite-range embedding constant of `h^{ω₁}` into `h^{ω₂}`: every
/// sequence supported in `[-k_max, k_max]` has
/// `‖a‖_{h^{ω₂}} <= max(1, sup_ratio)·‖a‖_{h^{ω₁}}` (the `k = 0` term has
/// ratio 1).
pub fn compare_weights(w1: &Weight, w2: &Weight, k_max: usize) -> Result<EmbeddingReport> {
    if k_max < 1 {
        return Err(Error::InvalidParameter("compare_weights needs k_max >= 1"));
    }
    let (mut sup_ratio, mut at_k) = (f64::MIN, 1);
    for k in 1..=k_max {
        let ratio = w2.at(k as i64) / w1.at(k as i64);
        if ratio > sup_ratio {
            sup_ratio = ratio;
            at_k = k;
        }
    }
    Ok(EmbeddingReport {
        sup_ratio,
        at_k,
        k_max,
    })
}
