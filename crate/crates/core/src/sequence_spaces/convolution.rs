use alloc::vec;
use alloc::vec::Vec;
#[allow(unused_imports)]
use num_traits::Float;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{weighted_norm, TwoSidedSeq, Weight};
use crate::{Error, Result};

/// Exact convolution `(a∗b)(k) = Σ_j a(k-j) b(j)` over the finite supports.
///
/// Terms are accumulated over unordered index pairs `{p, q}` with
/// `p + q = k`, `p <= q`, in ascending `p`, each pair contributing
/// `a(p)b(q) + a(q)b(p)`. The order does not depend on which argument
/// comes first, so `convolve(a, b) == convolve(b, a)` bit for bit.
pub fn convolve(a: &TwoSidedSeq, b: &TwoSidedSeq) -> TwoSidedSeq {
    let bound = a.bound() + b.bound();
    let reach = a.bound().max(b.bound()) as i64;
    TwoSidedSeq::from_fn(bound, |k| {
        let mut acc = Complex64::new(0.0, 0.0);
        let hi = k.div_euclid(2);
        let lo = (-reach).max(k - reach);
        for p in lo..=hi {
            let q = k - p;
            let term = if p == q {
                a.get(p) * b.get(p)
            } else {
                a.get(p) * b.get(q) + a.get(q) * b.get(p)
            };
            acc += term;
        }
        acc
    })
}

/// Indicator sequence of `[-n, n]`.
pub fn indicator(n: usize) -> TwoSidedSeq {
    TwoSidedSeq::from_fn(n, |_| Complex64::new(1.0, 0.0))
}

/// `‖a∗b‖_{h^t} / (‖a‖_{h^s} ‖b‖_{h^r})` with power weights.
pub fn convolution_ratio(a: &TwoSidedSeq, b: &TwoSidedSeq, s: f64, r: f64, t: f64) -> Result<f64> {
    let (ws, wr, wt) = (Weight::power(s)?, Weight::power(r)?, Weight::power(t)?);
    Ok(ratio_with(a, b, &ws, &wr, &wt))
}

fn ratio_with(a: &TwoSidedSeq, b: &TwoSidedSeq, ws: &Weight, wr: &Weight, wt: &Weight) -> f64 {
    weighted_norm(&convolve(a, b), wt) / (weighted_norm(a, ws) * weighted_norm(b, wr))
}

/// Upper bound on the ratio for all pairs supported in `[-K, K]`:
///
/// `C² = max_k w_t²(k) Σ_j 1 / (w_s²(k-j) w_r²(j))`
///
/// by Cauchy–Schwarz on each output entry, enumerated over the whole
/// finite instance.
pub fn finite_support_bound(s: f64, r: f64, t: f64, support: usize) -> f64 {
    let k_sup = support as i64;
    let w = |e: f64, k: i64| (1.0 + 2.0 * k.unsigned_abs() as f64).powf(e);
    let mut best = 0.0f64;
    for k in -2 * k_sup..=2 * k_sup {
        let lo = (-k_sup).max(k - k_sup);
        let hi = k_sup.min(k + k_sup);
        let inner: f64 = (lo..=hi)
            .map(|j| {
                let d = w(s, k - j) * w(r, j);
                1.0 / (d * d)
            })
            .sum();
        let wt = w(t, k);
        best = best.max(wt * wt * inner);
    }
    best.sqrt()
}

/// Where `(s, r, t)` falls relative to the convolution lemma threshold
/// `s + r - t = 1/2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    Bounded,
    Unbounded,
    Borderline,
}

impl Regime {
    pub fn classify(s: f64, r: f64, t: f64) -> Self {
        let excess = s + r - t - 0.5;
        if excess > 0.0 {
            Regime::Bounded
        } else if excess < 0.0 {
            Regime::Unbounded
        } else {
            Regime::Borderline
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Regime::Bounded => "bounded",
            Regime::Unbounded => "fails to hold",
            Regime::Borderline => "borderline",
        }
    }
}

/// Trial families for [`conv_lemma_report`].
#[derive(Debug, Clone, PartialEq)]
pub struct LemmaTrials {
    /// Number of random pairs.
    pub pairs: usize,
    /// Support bound `K` of the random pairs.
    pub support: usize,
    pub seed: u64,
    /// Half-widths `N` of the indicator witness family `𝟙_{[-N,N]}`.
    pub witness_sizes: Vec<usize>,
}

impl Default for LemmaTrials {
    fn default() -> Self {
        Self {
            pairs: 200,
            support: 16,
            seed: 0x5eed_0001,
            witness_sizes: vec![8, 16, 32],
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConvLemmaReport {
    pub s: f64,
    pub r: f64,
    pub t: f64,
    pub regime: Regime,
    /// Ratio for each random pair, in generation order.
    pub pair_ratios: Vec<f64>,
    pub max_pair_ratio: f64,
    /// Rigorous bound over the random-pair support, see [`finite_support_bound`].
    pub finite_support_bound: f64,
    /// Largest ratio found by alternating maximisation on the same support.
    pub ascent_estimate: f64,
    /// `(N, ratio)` for the indicator family.
    pub witness: Vec<(usize, f64)>,
    pub pairs_within_bound: bool,
    /// Bounded regime: ratios non-increasing in `N` up to 5%. Unbounded:
    /// strictly increasing. Borderline: not judged (`None`).
    pub witness_trend_ok: Option<bool>,
}

impl ConvLemmaReport {
    pub fn passed(&self) -> bool {
        self.pairs_within_bound && self.witness_trend_ok.unwrap_or(true)
    }
}

pub fn conv_lemma_report(s: f64, r: f64, t: f64, trials: &LemmaTrials) -> Result<ConvLemmaReport> {
    for v in [s, r, t] {
        if !v.is_finite() {
            return Err(Error::NonFinite("s, r, t"));
        }
    }
    if s < 0.0 || r < 0.0 || t > s.min(r) {
        return Err(Error::LemmaHypotheses { s, r, t });
    }
    let (ws, wr, wt) = (Weight::power(s)?, Weight::power(r)?, Weight::power(t)?);
    let regime = Regime::classify(s, r, t);

    let mut rng = ChaCha8Rng::seed_from_u64(trials.seed);
    let random_seq = |rng: &mut ChaCha8Rng| {
        TwoSidedSeq::from_fn(trials.support, |_| {
            Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
        })
    };
    let pair_ratios: Vec<f64> = (0..trials.pairs)
        .map(|_| {
            let a = random_seq(&mut rng);
            let b = random_seq(&mut rng);
            ratio_with(&a, &b, &ws, &wr, &wt)
        })
        .collect();
    let max_pair_ratio = pair_ratios.iter().copied().fold(0.0, f64::max);
    let bound = finite_support_bound(s, r, t, trials.support);
    let pairs_within_bound = pair_ratios.iter().all(|&q| q <= bound * (1.0 + 1e-9));

    let witness: Vec<(usize, f64)> = trials
        .witness_sizes
        .iter()
        .map(|&n| {
            let a = indicator(n);
            (n, ratio_with(&a, &a, &ws, &wr, &wt))
        })
        .collect();
    let witness_trend_ok = match regime {
        Regime::Bounded => Some(witness.windows(2).all(|w| w[1].1 <= w[0].1 * 1.05)),
        Regime::Unbounded => Some(witness.windows(2).all(|w| w[1].1 > w[0].1)),
        Regime::Borderline => None,
    };

    Ok(ConvLemmaReport {
        s,
        r,
        t,
        regime,
        pair_ratios,
        max_pair_ratio,
        finite_support_bound: bound,
        ascent_estimate: ascent_estimate(s, r, t, trials.support),
        witness,
        pairs_within_bound,
        witness_trend_ok,
    })
}

/// Alternating maximisation of the bilinear ratio over nonnegative real
/// pairs supported in `[-K, K]` (|a∗b| <= |a|∗|b| makes these extremal).
/// For fixed `b` the best `a` is the top singular vector of the weighted
/// convolution operator; the roles then swap.
fn ascent_estimate(s: f64, r: f64, t: f64, support: usize) -> f64 {
    let n = 2 * support + 1;
    let m = 4 * support + 1;
    let k_sup = support as i64;
    let w = |e: f64, k: i64| (1.0 + 2.0 * k.unsigned_abs() as f64).powf(e);
    let ws: Vec<f64> = (-k_sup..=k_sup).map(|k| w(s, k)).collect();
    let wr: Vec<f64> = (-k_sup..=k_sup).map(|k| w(r, k)).collect();
    let wt: Vec<f64> = (-2 * k_sup..=2 * k_sup).map(|k| w(t, k)).collect();

    // T[k][i] = w_t(k) fixed(k - i) / w_free(i); rows k in [-2K, 2K], cols i in [-K, K].
    let top_singular = |fixed: &[f64], w_free: &[f64]| -> (f64, Vec<f64>) {
        let apply = |x: &[f64]| -> Vec<f64> {
            let mut y = vec![0.0; m];
            for (row, yk) in y.iter_mut().enumerate() {
                let k = row as i64 - 2 * k_sup;
                let mut acc = 0.0;
                for (col, xi) in x.iter().enumerate() {
                    let i = col as i64 - k_sup;
                    let d = k - i;
                    if d.abs() <= k_sup {
                        acc += fixed[(d + k_sup) as usize] * xi / w_free[col];
                    }
                }
                *yk = wt[row] * acc;
            }
            y
        };
        let apply_t = |y: &[f64]| -> Vec<f64> {
            let mut x = vec![0.0; n];
            for (col, xi) in x.iter_mut().enumerate() {
                let i = col as i64 - k_sup;
                let mut acc = 0.0;
                for (row, yk) in y.iter().enumerate() {
                    let k = row as i64 - 2 * k_sup;
                    let d = k - i;
                    if d.abs() <= k_sup {
                        acc += wt[row] * fixed[(d + k_sup) as usize] * yk;
                    }
                }
                *xi = acc / w_free[col];
            }
            x
        };
        let mut x = vec![1.0 / (n as f64).sqrt(); n];
        let mut sigma = 0.0;
        for _ in 0..200 {
            let y = apply(&x);
            sigma = y.iter().map(|v| v * v).sum::<f64>().sqrt();
            let mut z = apply_t(&y);
            let norm = z.iter().map(|v| v * v).sum::<f64>().sqrt();
            if norm == 0.0 {
                break;
            }
            z.iter_mut().for_each(|v| *v /= norm);
            x = z;
        }
        // back from the unit-ℓ² variable to a sequence with unit weighted norm
        let seq: Vec<f64> = x.iter().zip(w_free).map(|(xi, wi)| xi / wi).collect();
        (sigma, seq)
    };

    let mut best = 0.0f64;
    for start in 0..2 {
        // start from δ₀ and from the flat sequence
        let mut b: Vec<f64> = (0..n)
            .map(|i| {
                if start == 0 {
                    f64::from(u8::from(i == support))
                } else {
                    1.0
                }
            })
            .collect();
        let nb = b
            .iter()
            .zip(&wr)
            .map(|(v, w)| v * v * w * w)
            .sum::<f64>()
            .sqrt();
        b.iter_mut().for_each(|v| *v /= nb);
        for _ in 0..30 {
            let (_, a) = top_singular(&b, &ws);
            let (sigma, b_new) = top_singular(&a, &wr);
            b = b_new;
            best = best.max(sigma);
        }
    }
    best
}
