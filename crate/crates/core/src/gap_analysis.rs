//! Gap lengths and their asymptotics.
//!
//! Gap sequences are one-sided: index 0 of every slice here is `n = 1`.
//! Infinite-dimensional statements (membership of a sequence in `h^ω`) are
//! never asserted; what finite data decides exactly (triangle inequalities
//! on partial sums, two summation routes for `ρ`) is checked, everything
//! else is reported as partial-sum tables and fitted slopes.

use alloc::vec::Vec;
use core::f64::consts::PI;
use core::ops::RangeInclusive;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::fit::line_fit;
use crate::hill_spectrum::{edge_tolerance, BandEdges};
use crate::potential::Potential;
use crate::sequence_spaces::{check_sandwich, convolve, SandwichReport, TwoSidedSeq, Weight};
use crate::{Error, Result};

/// An increment below this fraction of its partial sum counts as settled.
pub const PLATEAU_FRACTION: f64 = 1e-3;

/// Slack for partial-norm triangle inequalities: a few ulps of the summed
/// norms.
const TRIANGLE_ULPS: f64 = 8.0 * f64::EPSILON;

#[derive(Debug, Clone, PartialEq)]
pub struct GapSequence {
    /// `γ(n)` for `n = 1..=n_max`, negatives clamped to 0.
    pub values: Vec<f64>,
    /// Whether `γ(n)` came out negative (within the edge tolerance) and was
    /// clamped.
    pub clamped: Vec<bool>,
}

/// `γ(n) = λ_n^+ - λ_n^-`.
///
/// Valid edges have no gap below `-edge_tolerance`; smaller negative values
/// are rounding noise on a closed gap and are clamped to 0 with a flag.
pub fn gaps(edges: &BandEdges) -> GapSequence {
    let mut values = Vec::with_capacity(edges.pairs.len());
    let mut clamped = Vec::with_capacity(edges.pairs.len());
    for p in &edges.pairs {
        let g = p.gap();
        debug_assert!(g >= -edge_tolerance(p.plus), "gap {} below tolerance", p.n);
        clamped.push(g < 0.0);
        values.push(g.max(0.0));
    }
    GapSequence { values, clamped }
}

/// `ρ(n) = π⁻² Σ_{j ≠ ±n} q̂(n-j) q̂(n+j) / ((n-j)(n+j))`, summed over the
/// support of `q̂` in increasing `j`. Zero for `n > K`.
///
/// The excluded terms are the only ones touching `q̂(0)`, so the value does
/// not depend on the mean.
pub fn rho(q: &Potential, n: i64) -> Result<Complex64> {
    if n <= 0 {
        return Err(Error::SequenceIndex(n));
    }
    Ok(rho_signed(q, n))
}

/// The same sum for any nonzero `n`, including negative indices.
fn rho_signed(q: &Potential, n: i64) -> Complex64 {
    let k = q.cutoff() as i64;
    let reach = k - n.abs();
    let mut sum = Complex64::new(0.0, 0.0);
    if reach < 0 {
        return sum;
    }
    for j in -reach..=reach {
        if j == n || j == -n {
            continue;
        }
        let denom = ((n - j) * (n + j)) as f64;
        sum += q.coeff(n - j) * q.coeff(n + j) / denom;
    }
    sum / (PI * PI)
}

/// `ρ(n) = π⁻² (â ∗ â)(2n)` with `â(k) = q̂(k)/k`, `â(0) = 0`.
///
/// Only mean-free potentials are accepted: there the terms `j = ±n`
/// excluded from the direct sum are exactly the ones that vanish through
/// `â(0) = 0`.
pub fn rho_via_convolution(q: &Potential, n: i64) -> Result<Complex64> {
    if n <= 0 {
        return Err(Error::SequenceIndex(n));
    }
    if q.mean() != 0.0 {
        return Err(Error::NonZeroMean(q.mean()));
    }
    let scaled = scaled_coefficients(q);
    Ok(convolve(&scaled, &scaled).get(2 * n) / (PI * PI))
}

fn scaled_coefficients(q: &Potential) -> TwoSidedSeq {
    TwoSidedSeq::from_fn(q.cutoff(), |k| {
        if k == 0 {
            Complex64::new(0.0, 0.0)
        } else {
            q.coeff(k) / k as f64
        }
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GapEntry {
    pub n: usize,
    pub gamma: f64,
    /// `gamma` was clamped from a slightly negative value.
    pub clamped: bool,
    /// `2|q̂(n)|`.
    pub two_qhat: f64,
    pub rho: Complex64,
    /// `γ(n) - 2|q̂(n)|`.
    pub resid_plain: f64,
    /// `γ(n) - 2|q̂(n) + ρ(n)|`.
    pub resid_corrected: f64,
    /// `min_± |γ(n) ± 2·sqrt((q̂+ρ)(-n)·(q̂+ρ)(n))|` with the principal
    /// square root; equals `|resid_corrected|` for real potentials.
    pub paired_residual: f64,
}

impl GapEntry {
    fn new(q: &Potential, n: usize, gamma: f64, clamped: bool) -> Self {
        let ni = n as i64;
        let qhat = q.coeff(ni);
        let rho = rho_signed(q, ni);
        let two_qhat = 2.0 * qhat.norm();
        let plus = qhat + rho;
        let minus = q.coeff(-ni) + rho_signed(q, -ni);
        let root = 2.0 * (plus * minus).sqrt();
        let paired_residual = (gamma - root).norm().min((gamma + root).norm());
        Self {
            n,
            gamma,
            clamped,
            two_qhat,
            rho,
            resid_plain: gamma - two_qhat,
            resid_corrected: gamma - 2.0 * plus.norm(),
            paired_residual,
        }
    }
}

/// A partial-sum table `S(m) = Σ_{n <= m} ω²(n) r(n)²`.
#[derive(Debug, Clone, PartialEq)]
pub struct TailTable {
    pub weight: Weight,
    pub rows: Vec<TailRow>,
    /// First `m` of the table from which increments decrease monotonically.
    pub decreasing_from: Option<usize>,
    /// Last increment relative to the last partial sum.
    pub final_relative_increment: f64,
    /// Increments eventually decrease and the last one is below
    /// [`PLATEAU_FRACTION`] of the partial sum.
    pub plateau: bool,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TailRow {
    pub m: usize,
    pub partial_sum: f64,
    /// `ω²(m) r(m)²`.
    pub increment: f64,
    /// `increment(m) / increment(m - 1)`, if the previous one is nonzero.
    pub increment_ratio: Option<f64>,
}

/// Partial sums of `ω²(n) r(n)²` from `n = 1`, tabulated for `m` in
/// `n_range` (clipped to the length of `r`).
pub fn weighted_tail_report(
    r: &[f64],
    weight: &Weight,
    n_range: RangeInclusive<usize>,
) -> Result<TailTable> {
    if r.iter().any(|v| !v.is_finite()) {
        return Err(Error::NonFinite("tail sequence"));
    }
    let lo = (*n_range.start()).max(1);
    let hi = (*n_range.end()).min(r.len());
    let mut rows = Vec::new();
    let mut sum = 0.0;
    let mut prev = None;
    for m in 1..=hi {
        let w = weight.at(m as i64);
        let increment = w * w * r[m - 1] * r[m - 1];
        sum += increment;
        if m >= lo {
            let increment_ratio = prev.filter(|p: &f64| *p != 0.0).map(|p| increment / p);
            rows.push(TailRow {
                m,
                partial_sum: sum,
                increment,
                increment_ratio,
            });
        }
        prev = Some(increment);
    }

    let mut decreasing_from = rows.last().map(|r| r.m);
    for pair in rows.windows(2).rev() {
        if pair[1].increment <= pair[0].increment {
            decreasing_from = Some(pair[0].m);
        } else {
            break;
        }
    }
    let final_relative_increment = match rows.last() {
        Some(last) if last.partial_sum > 0.0 => last.increment / last.partial_sum,
        _ => 0.0,
    };
    let plateau = rows.len() >= 2
        && decreasing_from.is_some_and(|m| m < rows[rows.len() - 1].m)
        && final_relative_increment <= PLATEAU_FRACTION;
    Ok(TailTable {
        weight: weight.clone(),
        rows,
        decreasing_from,
        final_relative_increment,
        plateau,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DecayFit {
    /// Fitted exponent `p` in `|r(n)| ≈ C n^p`.
    pub slope: f64,
    pub intercept: f64,
    /// RMS residual of the log-log fit.
    pub rms: f64,
    pub n_lo: usize,
    pub n_hi: usize,
    pub used: usize,
    pub zeros_excluded: usize,
}

/// Least-squares slope of `ln|r(n)|` against `ln n` over `[n_lo, n_hi]`;
/// zero entries are skipped and counted.
pub fn decay_slope(r: &[f64], n_lo: usize, n_hi: usize) -> Result<DecayFit> {
    if n_lo < 1 || n_hi <= n_lo + 4 {
        return Err(Error::Range { lo: n_lo, hi: n_hi });
    }
    if n_hi > r.len() {
        return Err(Error::SequenceIndex(n_hi as i64));
    }
    let window = &r[n_lo - 1..n_hi];
    if window.iter().any(|v| !v.is_finite()) {
        return Err(Error::NonFinite("decay sequence"));
    }
    let points: Vec<(f64, f64)> = (n_lo..=n_hi)
        .zip(window)
        .filter(|(_, v)| **v != 0.0)
        .map(|(n, v)| ((n as f64).ln(), v.abs().ln()))
        .collect();
    if points.len() < 5 {
        return Err(Error::TooFewPoints {
            usable: points.len(),
            required: 5,
        });
    }
    let fit = line_fit(&points).ok_or(Error::TooFewPoints {
        usable: points.len(),
        required: 5,
    })?;
    Ok(DecayFit {
        slope: fit.slope,
        intercept: fit.intercept,
        rms: fit.rms,
        n_lo,
        n_hi,
        used: points.len(),
        zeros_excluded: window.len() - points.len(),
    })
}

/// Per-`n` gap data together with optional tail tables of `resid_plain`
/// and a decay fit of `|resid_plain|`.
#[derive(Debug, Clone, PartialEq)]
pub struct GapReport {
    pub entries: Vec<GapEntry>,
    pub tables: Vec<TailTable>,
    pub decay: Option<DecayFit>,
}

/// Builds the per-`n` columns from a potential and its band edges.
pub fn residuals(q: &Potential, edges: &BandEdges) -> GapReport {
    let g = gaps(edges);
    let entries = (1..=g.values.len())
        .map(|n| GapEntry::new(q, n, g.values[n - 1], g.clamped[n - 1]))
        .collect();
    GapReport {
        entries,
        tables: Vec::new(),
        decay: None,
    }
}

impl GapReport {
    pub fn gamma(&self) -> Vec<f64> {
        self.entries.iter().map(|e| e.gamma).collect()
    }

    pub fn two_qhat(&self) -> Vec<f64> {
        self.entries.iter().map(|e| e.two_qhat).collect()
    }

    pub fn resid_plain(&self) -> Vec<f64> {
        self.entries.iter().map(|e| e.resid_plain).collect()
    }

    pub fn resid_corrected(&self) -> Vec<f64> {
        self.entries.iter().map(|e| e.resid_corrected).collect()
    }

    /// Largest `|paired_residual - |resid_corrected||`.
    pub fn max_pairing_deviation(&self) -> f64 {
        self.entries
            .iter()
            .map(|e| (e.paired_residual - e.resid_corrected.abs()).abs())
            .fold(0.0, f64::max)
    }

    /// Whether both residual columns recompute bit-for-bit from the stored
    /// `γ`, `q̂` and `ρ`.
    pub fn residuals_consistent(&self, q: &Potential) -> bool {
        self.entries.iter().all(|e| {
            let qhat = q.coeff(e.n as i64);
            e.resid_plain == e.gamma - 2.0 * qhat.norm()
                && e.resid_corrected == e.gamma - 2.0 * (qhat + e.rho).norm()
        })
    }

    pub fn add_weight_table(
        &mut self,
        weight: &Weight,
        n_range: RangeInclusive<usize>,
    ) -> Result<&TailTable> {
        let table = weighted_tail_report(&self.resid_plain(), weight, n_range)?;
        self.tables.push(table);
        Ok(self.tables.last().unwrap())
    }

    pub fn fit_decay(&mut self, n_lo: usize, n_hi: usize) -> Result<DecayFit> {
        let fit = decay_slope(&self.resid_plain(), n_lo, n_hi)?;
        self.decay = Some(fit);
        Ok(fit)
    }

    /// `| ‖γ‖ - ‖2|q̂|‖ | <= ‖resid_plain‖` in the partial `h^ω` norm over
    /// `n_range`.
    pub fn triangle_check(&self, weight: &Weight, n_range: RangeInclusive<usize>) -> TriangleCheck {
        let window = |col: fn(&GapEntry) -> f64| {
            partial_norm(
                self.entries
                    .iter()
                    .filter(|e| n_range.contains(&e.n))
                    .map(|e| (e.n, col(e))),
                weight,
            )
        };
        TriangleCheck::new(
            window(|e| e.gamma),
            window(|e| e.two_qhat),
            window(|e| e.resid_plain),
        )
    }
}

/// `sqrt(Σ ω²(n) x(n)²)` over the given `(n, x(n))`.
fn partial_norm(values: impl Iterator<Item = (usize, f64)>, weight: &Weight) -> f64 {
    values
        .map(|(n, x)| {
            let w = weight.at(n as i64);
            w * w * x * x
        })
        .sum::<f64>()
        .sqrt()
}

/// The reverse triangle inequality `|A - B| <= C` for partial norms, with a
/// few ulps of slack.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TriangleCheck {
    pub gamma_norm: f64,
    pub two_qhat_norm: f64,
    pub resid_norm: f64,
    pub holds: bool,
}

impl TriangleCheck {
    fn new(gamma_norm: f64, two_qhat_norm: f64, resid_norm: f64) -> Self {
        let slack = TRIANGLE_ULPS * (gamma_norm + two_qhat_norm);
        let holds = (gamma_norm - two_qhat_norm).abs() <= resid_norm + slack;
        Self {
            gamma_norm,
            two_qhat_norm,
            resid_norm,
            holds,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MembershipReport {
    pub n_lo: usize,
    pub n_hi: usize,
    /// Running partial norms from `n_lo` to `m`: `(m, ‖γ‖, ‖q̂‖, ratio)`.
    pub rows: Vec<MembershipRow>,
    pub triangle: TriangleCheck,
    /// `‖γ‖ / ‖q̂‖` over the whole range (`None` when `‖q̂‖ = 0`).
    pub ratio: Option<f64>,
    pub sandwich: SandwichReport,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MembershipRow {
    pub m: usize,
    pub gamma_norm: f64,
    pub qhat_norm: f64,
    pub ratio: Option<f64>,
}

/// Partial `h^ω` norms of `{q̂(n)}` and `{γ(n)}` over `n_range`.
///
/// The weight's sandwich check against `k^s`, `k^{1+s}` is run (over `[1,
/// max(n_hi, 1024)]`) and attached. The triangle inequality is exact; the
/// norm ratio is a report.
pub fn verify_membership_consistency(
    q: &Potential,
    weight: &Weight,
    s: f64,
    edges: &BandEdges,
    n_range: RangeInclusive<usize>,
) -> Result<MembershipReport> {
    let (n_lo, n_hi) = checked_range(&n_range, edges.n_max())?;
    let sandwich = check_sandwich(weight, s, n_hi.max(1024))?;
    let report = residuals(q, edges);
    let triangle = report.triangle_check(weight, n_range);

    let mut rows = Vec::with_capacity(n_hi - n_lo + 1);
    let (mut g2, mut q2) = (0.0, 0.0);
    for e in &report.entries[n_lo - 1..n_hi] {
        let w2 = weight.at(e.n as i64).powi(2);
        g2 += w2 * e.gamma * e.gamma;
        q2 += w2 * q.coeff(e.n as i64).norm_sqr();
        let (gamma_norm, qhat_norm) = (g2.sqrt(), q2.sqrt());
        rows.push(MembershipRow {
            m: e.n,
            gamma_norm,
            qhat_norm,
            ratio: ratio(gamma_norm, qhat_norm),
        });
    }
    let ratio = rows.last().and_then(|r| r.ratio);
    Ok(MembershipReport {
        n_lo,
        n_hi,
        rows,
        triangle,
        ratio,
        sandwich,
    })
}

fn ratio(a: f64, b: f64) -> Option<f64> {
    (b > 0.0).then(|| a / b)
}

fn checked_range(n_range: &RangeInclusive<usize>, n_max: usize) -> Result<(usize, usize)> {
    let (lo, hi) = (*n_range.start(), *n_range.end());
    if lo < 1 || hi < lo || hi > n_max {
        return Err(Error::Range { lo, hi });
    }
    Ok((lo, hi))
}

#[derive(Debug, Clone, PartialEq)]
pub struct SobolevReport {
    pub s: u32,
    /// `(m, Σ_{n<=m} (1+2n)^{2s} γ²(n), ‖q‖²_{H^s} over |k| <= m)`.
    pub rows: Vec<SobolevRow>,
    pub gap_table: TailTable,
    pub potential_table: TailTable,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SobolevRow {
    pub m: usize,
    pub gap_sum: f64,
    pub potential_sum: f64,
}

/// `Σ (1+2n)^{2s} γ²(n)` next to `‖q‖²_{H^s}` truncated to `|k| <= m`
/// (`|q̂(0)|² + 2 Σ_{1<=n<=m} (1+2n)^{2s} |q̂(n)|²`), for `m` in `n_range`,
/// with plateau indicators for both.
pub fn verify_marchenko_ostrovskii(
    q: &Potential,
    s: u32,
    edges: &BandEdges,
    n_range: RangeInclusive<usize>,
) -> Result<SobolevReport> {
    checked_range(&n_range, edges.n_max())?;
    let weight = Weight::power(s as f64)?;
    let gamma = gaps(edges).values;
    let coeffs: Vec<f64> = (1..=edges.n_max())
        .map(|n| q.coeff(n as i64).norm())
        .collect();
    let gap_table = weighted_tail_report(&gamma, &weight, n_range.clone())?;
    let potential_table = weighted_tail_report(&coeffs, &weight, n_range)?;
    let mean2 = q.mean() * q.mean();
    let rows = gap_table
        .rows
        .iter()
        .zip(&potential_table.rows)
        .map(|(g, p)| SobolevRow {
            m: g.m,
            gap_sum: g.partial_sum,
            potential_sum: mean2 + 2.0 * p.partial_sum,
        })
        .collect();
    Ok(SobolevReport {
        s,
        rows,
        gap_table,
        potential_table,
    })
}

/// Default start of the asymptotic range, `max(4, 2⌈‖q‖_{L²}⌉)`.
pub fn default_n0(q: &Potential) -> usize {
    let norm = (q.mean() * q.mean() + q.l2_norm_mean_free().powi(2)).sqrt();
    4usize.max(2 * norm.ceil() as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hill_spectrum::{EdgePair, Method, Parity};
    use crate::potential::TestPotential;
    use alloc::vec;

    fn edges_with_gaps(gammas: &[f64]) -> BandEdges {
        let pairs = gammas
            .iter()
            .enumerate()
            .map(|(i, g)| {
                let n = i + 1;
                let mid = (n as f64 * PI).powi(2);
                EdgePair {
                    n,
                    parity: Parity::of_gap(n),
                    minus: mid - g / 2.0,
                    plus: mid + g / 2.0,
                }
            })
            .collect();
        BandEdges {
            lambda0: -1.0,
            pairs,
            method: Method::Galerkin { n_trunc: 64 },
        }
    }

    #[test]
    fn gaps_clamp_rounding_noise() {
        let mut edges = edges_with_gaps(&[0.5, 0.0, 0.25]);
        edges.pairs[1].plus = edges.pairs[1].minus - 1e-12;
        let g = gaps(&edges);
        assert_eq!(g.values[1], 0.0);
        assert_eq!(g.clamped, [false, true, false]);
        assert_eq!(g.values[0], edges.pairs[0].plus - edges.pairs[0].minus);
    }

    #[test]
    fn rho_mathieu_and_support() {
        let c = 0.3;
        let q = TestPotential::Mathieu { c }.sample().unwrap();
        assert_eq!(rho(&q, 1).unwrap(), Complex64::new(c * c / (PI * PI), 0.0));
        assert_eq!(rho(&q, 2).unwrap(), Complex64::new(0.0, 0.0));
        assert!(rho(&q, 0).is_err());
        assert!(rho(&Potential::zero(), 3).unwrap() == Complex64::new(0.0, 0.0));
    }

    #[test]
    fn rho_ignores_mean() {
        let q = TestPotential::TwoHarmonic { c1: 0.4, c2: -0.7 }
            .sample()
            .unwrap();
        for n in 1..4 {
            assert_eq!(rho(&q, n).unwrap(), rho(&q.shifted(2.5), n).unwrap());
        }
        assert!(matches!(
            rho_via_convolution(&q.shifted(1.0), 1),
            Err(Error::NonZeroMean(_))
        ));
    }

    #[test]
    fn rho_two_routes_brute_force() {
        let q = TestPotential::RandomHs {
            s: 0.5,
            cutoff: 6,
            seed: 9,
        }
        .sample()
        .unwrap();
        for n in 1..=8i64 {
            // unrestricted double loop over a generous j range
            let mut direct = Complex64::new(0.0, 0.0);
            for j in -20..=20i64 {
                if j.abs() != n {
                    direct += q.coeff(n - j) * q.coeff(n + j) / ((n - j) * (n + j)) as f64;
                }
            }
            direct /= PI * PI;
            let a = rho(&q, n).unwrap();
            let b = rho_via_convolution(&q, n).unwrap();
            assert!(
                (a - direct).norm() < 1e-15 && (a - b).norm() < 1e-15,
                "n={n}"
            );
        }
    }

    #[test]
    fn residual_columns() {
        let q = TestPotential::Mathieu { c: 0.1 }.sample().unwrap();
        let edges = edges_with_gaps(&[0.2, 0.01, 0.0]);
        let rep = residuals(&q, &edges);
        let e = rep.entries[0];
        assert_eq!(e.two_qhat, 0.2);
        assert_eq!(e.resid_plain, e.gamma - 0.2);
        assert!(rep.residuals_consistent(&q));
        assert!(rep.max_pairing_deviation() < 1e-15);
        assert_eq!(rep.entries[2].resid_plain, 0.0);
    }

    #[test]
    fn tail_table_p_series() {
        let r: Vec<f64> = (1..=200).map(|n| (n as f64).powi(-2)).collect();
        let t = weighted_tail_report(&r, &Weight::power(1.0).unwrap(), 1..=200).unwrap();
        assert_eq!(t.rows.len(), 200);
        assert_eq!(t.decreasing_from, Some(1));
        assert!(t.plateau, "{}", t.final_relative_increment);
        let last = t.rows[199];
        assert!((last.increment_ratio.unwrap() - 1.0).abs() < 0.02);

        let zero = weighted_tail_report(&[0.0; 10], &Weight::power(2.0).unwrap(), 1..=10).unwrap();
        assert!(zero
            .rows
            .iter()
            .all(|r| r.partial_sum == 0.0 && r.increment == 0.0));
        assert!(weighted_tail_report(&[f64::NAN], &Weight::power(0.0).unwrap(), 1..=1).is_err());
    }

    #[test]
    fn decay_slope_power_laws() {
        let r: Vec<f64> = (1..=40).map(|n| 7.0 * (n as f64).powf(-3.5)).collect();
        let fit = decay_slope(&r, 4, 30).unwrap();
        assert!((fit.slope + 3.5).abs() < 1e-6);
        assert_eq!(fit.used, 27);
        let mut holes = r.clone();
        holes[9] = 0.0;
        let fit = decay_slope(&holes, 4, 30).unwrap();
        assert_eq!(fit.zeros_excluded, 1);
        assert!(decay_slope(&r, 4, 8).is_err());
        assert!(matches!(
            decay_slope(&vec![0.0; 40], 4, 30),
            Err(Error::TooFewPoints { .. })
        ));
    }

    #[test]
    fn n0_default() {
        assert_eq!(default_n0(&Potential::zero()), 4);
        let q = TestPotential::Mathieu { c: 3.0 }.sample().unwrap();
        // ‖q‖ = sqrt(18)
        assert_eq!(default_n0(&q), 10);
    }
}
