use alloc::vec::Vec;
use core::f64::consts::PI;
#[allow(unused_imports)]
use num_traits::Float;

use super::{BandEdges, EdgePair, Method, Parity};
use crate::potential::Potential;
use crate::{Error, Result};

/// Wronskian drift that triggers a retry with twice the steps.
const WITNESS_RETRY: f64 = 1e-9;
/// Wronskian drift above which integration is reported as failed.
const WITNESS_FAIL: f64 = 1e-6;
const MAX_RETRIES: usize = 2;
/// Largest `h·sqrt(λ)` allowed, so sign changes of solutions are resolved
/// node to node.
const MAX_PHASE_PER_STEP: f64 = 0.5;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiscriminantConfig {
    /// Fixed integrator steps over one period.
    pub steps: usize,
    /// Factor by which a failed bracket is widened.
    pub bracket_expansion: f64,
    /// Maximum number of widenings per bracket.
    pub max_expansions: usize,
    /// Relative root tolerance: brackets are refined to `tol·(1 + |λ|)`.
    pub root_tolerance: f64,
    /// `|Δ(λ*) ∓ 2|` below which a gap whose extremum does not reach `±2`
    /// is reported as collapsed.
    pub collapse_tolerance: f64,
}

impl Default for DiscriminantConfig {
    fn default() -> Self {
        Self {
            steps: 8192,
            bracket_expansion: 2.0,
            max_expansions: 40,
            root_tolerance: 1e-13,
            collapse_tolerance: 1e-9,
        }
    }
}

impl DiscriminantConfig {
    pub fn with_steps(steps: usize) -> Self {
        Self {
            steps,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.steps < 256 {
            return Err(Error::InvalidParameter("discriminant steps must be >= 256"));
        }
        if !(self.root_tolerance > 0.0) {
            return Err(Error::InvalidParameter("root tolerance must be > 0"));
        }
        if !(self.bracket_expansion > 1.0) {
            return Err(Error::InvalidParameter(
                "bracket expansion factor must be > 1",
            ));
        }
        if !(self.collapse_tolerance >= 0.0) {
            return Err(Error::InvalidParameter("collapse tolerance must be >= 0"));
        }
        Ok(())
    }
}

/// Solutions of `-u'' + qu = λu` over one period with `u1(0) = 1, u1'(0) =
/// 0` and `u2(0) = 0, u2'(0) = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Monodromy {
    pub u1: f64,
    pub u1p: f64,
    pub u2: f64,
    pub u2p: f64,
    /// Sign changes of `u2` over the grid nodes in `(0, 1]`, i.e. the
    /// number of Dirichlet eigenvalues below `λ`.
    pub dirichlet_count: usize,
    pub steps: usize,
}

impl Monodromy {
    /// `Δ(λ) = u1(1) + u2'(1)`.
    pub fn trace(&self) -> f64 {
        self.u1 + self.u2p
    }

    /// `sign·Δ - 2`, evaluated for `sign·Δ > 0` as `(Δ² - 4)/(sign·Δ + 2)`
    /// with `Δ² - 4 = (u1 - u2')² + 4·u1'·u2` (from `W = 1`). Every term of
    /// that sum vanishes at a closed gap, so the value carries rounding
    /// error proportional to the distance from the gap instead of `ε·|Δ|`.
    pub fn edge_function(&self, sign: f64) -> f64 {
        let d = sign * self.trace();
        if d > 0.0 {
            let diff = self.u1 - self.u2p;
            (diff * diff + 4.0 * self.u1p * self.u2) / (d + 2.0)
        } else {
            d - 2.0
        }
    }

    pub fn wronskian(&self) -> f64 {
        self.u1 * self.u2p - self.u1p * self.u2
    }

    /// `|W - 1|` relative to the size of the two products forming `W`.
    pub fn wronskian_drift(&self) -> f64 {
        let scale = ((self.u1 * self.u2p).abs() + (self.u1p * self.u2).abs()).max(1.0);
        (self.wronskian() - 1.0).abs() / scale
    }
}

/// Mean-free potential sampled at the two Gauss points of every step.
#[derive(Debug)]
struct Sampler {
    steps: usize,
    gauss: Vec<(f64, f64)>,
}

impl Sampler {
    fn new(q0: &Potential, steps: usize) -> Self {
        let h = 1.0 / steps as f64;
        let offset = 3.0f64.sqrt() / 6.0;
        let gauss = (0..steps)
            .map(|i| {
                let mid = (i as f64 + 0.5) * h;
                (q0.evaluate(mid - offset * h), q0.evaluate(mid + offset * h))
            })
            .collect();
        Self { steps, gauss }
    }

    /// Fourth-order Magnus integrator for `y' = [[0, 1], [q - e, 0]] y`.
    ///
    /// Per step `Ω = h/2·(A₁ + A₂) + √3h²/12·[A₂, A₁]`, whose exponential
    /// is evaluated exactly, so the free oscillation is propagated without
    /// phase error at any energy and `det = 1` holds to rounding.
    fn integrate(&self, e: f64) -> Monodromy {
        let h = 1.0 / self.steps as f64;
        let skew = 3.0f64.sqrt() / 12.0 * h * h;
        let (mut u1, mut v1, mut u2, mut v2) = (1.0, 0.0, 0.0, 1.0);
        let mut positive = true;
        let mut count = 0;
        for &(qa, qb) in &self.gauss {
            let mean = 0.5 * (qa + qb) - e;
            let diag = skew * (qa - qb);
            let theta2 = diag * diag + h * h * mean;
            let (c, sinc) = exp_coefficients(theta2);
            let (m11, m12, m21, m22) =
                (c + sinc * diag, sinc * h, sinc * h * mean, c - sinc * diag);
            (u1, v1) = (m11 * u1 + m12 * v1, m21 * u1 + m22 * v1);
            (u2, v2) = (m11 * u2 + m12 * v2, m21 * u2 + m22 * v2);
            let now = u2 > 0.0;
            if now != positive {
                count += 1;
                positive = now;
            }
        }
        Monodromy {
            u1,
            u1p: v1,
            u2,
            u2p: v2,
            dirichlet_count: count,
            steps: self.steps,
        }
    }
}

/// `exp(Ω) = c·I + s·Ω` for traceless `Ω` with `Ω² = θ²·I`; returns
/// `(cosh θ, sinh θ / θ)` continued to `θ² < 0`.
fn exp_coefficients(theta2: f64) -> (f64, f64) {
    if theta2.abs() < 1e-6 {
        let t = theta2;
        return (
            1.0 + t / 2.0 * (1.0 + t / 12.0 * (1.0 + t / 30.0)),
            1.0 + t / 6.0 * (1.0 + t / 20.0 * (1.0 + t / 42.0)),
        );
    }
    if theta2 > 0.0 {
        let t = theta2.sqrt();
        (t.cosh(), t.sinh() / t)
    } else {
        let t = (-theta2).sqrt();
        (t.cos(), t.sin() / t)
    }
}

/// One fixed-step integration over a period, without the Wronskian retry
/// policy. `λ` is measured against the full potential (mean included).
pub fn integrate_period(q: &Potential, lambda: f64, steps: usize) -> Monodromy {
    Sampler::new(&q.mean_free(), steps).integrate(lambda - q.mean())
}

/// `Δ(λ)` with the Wronskian witness: on drift above `1e-9` the step count
/// doubles (at most twice); a final drift above `1e-6` is an error.
pub fn discriminant(q: &Potential, lambda: f64, cfg: &DiscriminantConfig) -> Result<f64> {
    cfg.validate()?;
    let mut floquet = Floquet::new(q, cfg.steps);
    Ok(floquet.eval(lambda - q.mean())?.trace())
}

/// Integrators at `steps`, `2·steps`, `4·steps`, built on demand.
struct Floquet {
    q0: Potential,
    levels: Vec<Sampler>,
    max_steps_used: usize,
}

impl Floquet {
    fn new(q: &Potential, steps: usize) -> Self {
        let q0 = q.mean_free();
        let base = Sampler::new(&q0, steps);
        Self {
            q0,
            levels: alloc::vec![base],
            max_steps_used: steps,
        }
    }

    /// Monodromy at energy `e` relative to the mean.
    fn eval(&mut self, e: f64) -> Result<Monodromy> {
        let mut level = 0;
        loop {
            if level == self.levels.len() {
                let steps = 2 * self.levels[level - 1].steps;
                self.levels.push(Sampler::new(&self.q0, steps));
            }
            let m = self.levels[level].integrate(e);
            self.max_steps_used = self.max_steps_used.max(m.steps);
            let drift = m.wronskian_drift();
            if drift <= WITNESS_RETRY {
                return Ok(m);
            }
            if level == MAX_RETRIES {
                if drift <= WITNESS_FAIL {
                    return Ok(m);
                }
                return Err(Error::Integration {
                    lambda: e + 0.0,
                    drift,
                    steps: m.steps,
                });
            }
            level += 1;
        }
    }

    fn trace(&mut self, e: f64) -> Result<f64> {
        Ok(self.eval(e)?.trace())
    }

    fn edge_function(&mut self, e: f64, sign: f64) -> Result<f64> {
        Ok(self.eval(e)?.edge_function(sign))
    }
}

/// Band edges as roots of `Δ(λ) = 2` (`λ_0` and even `n`) and `Δ(λ) = -2`
/// (odd `n`).
///
/// The Dirichlet eigenvalues `μ_n ∈ [λ_n^-, λ_n^+]` separate the gaps:
/// they are bracketed around the free values `(nπ)²` (widened by
/// `bracket_expansion` until the node counts fit), located by bisection on
/// the count and refined on `u2(1; λ)`. Each edge then has a bracket with
/// a sign change of `±Δ - 2` (`[μ_{n-1}, μ_n]` for `λ_n^-`, `[μ_n,
/// μ_{n+1}]` for `λ_n^+`) and is refined by Illinois regula falsi. If
/// `±Δ(μ_n) < 2` the maximum of `±Δ` near `μ_n` is used instead; when
/// that still misses `2` by less than `collapse_tolerance` the gap is
/// reported collapsed.
pub fn band_edges_discriminant(
    q: &Potential,
    n_max: usize,
    cfg: &DiscriminantConfig,
) -> Result<BandEdges> {
    cfg.validate()?;
    if n_max < 1 {
        return Err(Error::InvalidParameter("n_max must be >= 1"));
    }
    let spread = q.oscillation_bound();
    let top = ((n_max + 2) as f64 * PI).powi(2) + spread;
    if top.sqrt() / cfg.steps as f64 > MAX_PHASE_PER_STEP {
        return Err(Error::InvalidParameter(
            "too few integrator steps for the requested n_max",
        ));
    }
    let mut floquet = Floquet::new(q, cfg.steps);
    let shift = q.mean();

    let mut mus = Vec::with_capacity(n_max + 1);
    for n in 1..=n_max + 1 {
        mus.push(dirichlet_eigenvalue(&mut floquet, n, spread, cfg)?);
    }

    // λ_0: Δ > 2 strictly below min q.
    let mut lo = -spread - 1.0;
    let mut expansions = 0;
    while floquet.trace(lo)? <= 2.0 {
        expansions += 1;
        if expansions > cfg.max_expansions {
            return Err(Error::BracketNotFound {
                n: 0,
                parity: Parity::Periodic,
            });
        }
        lo = lo * cfg.bracket_expansion - 1.0;
    }
    let e0 = {
        let mut f = |e: f64| floquet.edge_function(e, 1.0);
        let (fa, fb) = (f(lo)?, f(mus[0])?);
        if fb >= 0.0 {
            return Err(Error::BracketNotFound {
                n: 0,
                parity: Parity::Periodic,
            });
        }
        illinois(&mut f, (lo, fa), (mus[0], fb), cfg.root_tolerance)?
    };

    let mut pairs = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let parity = Parity::of_gap(n);
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        let mut f = |e: f64| floquet.edge_function(e, sign);
        let left = if n == 1 { e0 } else { mus[n - 2] };
        let (mid, right) = (mus[n - 1], mus[n]);
        let (f_left, f_right) = (f(left)?, f(right)?);
        if f_left >= 0.0 || f_right >= 0.0 {
            return Err(Error::BracketNotFound { n, parity });
        }
        let mut split = (mid, f(mid)?);
        if split.1 < 0.0 {
            let radius = 1e-8 * (1.0 + mid.abs());
            split = golden_max(&mut f, mid - radius, mid + radius)?;
            if split.1 < 0.0 {
                if -split.1 <= cfg.collapse_tolerance {
                    pairs.push(EdgePair {
                        n,
                        parity,
                        minus: split.0 + shift,
                        plus: split.0 + shift,
                    });
                    continue;
                }
                return Err(Error::BracketNotFound { n, parity });
            }
        }
        let minus = illinois(&mut f, (left, f_left), split, cfg.root_tolerance)?;
        let plus = illinois(&mut f, split, (right, f_right), cfg.root_tolerance)?;
        pairs.push(EdgePair {
            n,
            parity,
            minus: minus + shift,
            plus: plus + shift,
        });
    }

    let edges = BandEdges {
        lambda0: e0 + shift,
        pairs,
        method: Method::Discriminant {
            steps: floquet.max_steps_used,
        },
    };
    edges.check_interlacing()?;
    Ok(edges)
}

/// `μ_n` (relative to the mean) for the Dirichlet problem on `[0, 1]`.
fn dirichlet_eigenvalue(
    floquet: &mut Floquet,
    n: usize,
    spread: f64,
    cfg: &DiscriminantConfig,
) -> Result<f64> {
    let parity = Parity::of_gap(n);
    let center = (n as f64 * PI).powi(2);
    let mut radius = spread + 1e-9 * (1.0 + center) + 1e-3;
    let mut expansions = 0;
    let (mut lo, mut hi);
    loop {
        lo = (center - radius, floquet.eval(center - radius)?);
        hi = (center + radius, floquet.eval(center + radius)?);
        if lo.1.dirichlet_count < n && hi.1.dirichlet_count >= n {
            break;
        }
        expansions += 1;
        if expansions > cfg.max_expansions {
            return Err(Error::BracketNotFound { n, parity });
        }
        radius *= cfg.bracket_expansion;
    }
    // isolate μ_n: count(lo) = n - 1, count(hi) = n
    let mut guard = 0;
    while lo.1.dirichlet_count != n - 1 || hi.1.dirichlet_count != n {
        guard += 1;
        if guard > 200 {
            return Err(Error::BracketNotFound { n, parity });
        }
        let mid = 0.5 * (lo.0 + hi.0);
        let m = floquet.eval(mid)?;
        if m.dirichlet_count >= n {
            hi = (mid, m);
        } else {
            lo = (mid, m);
        }
    }
    let mut f = |e: f64| floquet.eval(e).map(|m| m.u2);
    illinois(&mut f, (lo.0, lo.1.u2), (hi.0, hi.1.u2), cfg.root_tolerance)
}

/// Illinois regula falsi on a sign-changing bracket, with a bisection step
/// whenever two consecutive iterations fail to halve the bracket.
fn illinois<F>(f: &mut F, a: (f64, f64), b: (f64, f64), tol: f64) -> Result<f64>
where
    F: FnMut(f64) -> Result<f64>,
{
    let ((mut xa, mut fa), (mut xb, mut fb)) = (a, b);
    if fa == 0.0 {
        return Ok(xa);
    }
    if fb == 0.0 {
        return Ok(xb);
    }
    debug_assert!(fa.signum() != fb.signum(), "bracket without a sign change");
    let mut side = 0i8;
    let mut slow = 0;
    for _ in 0..400 {
        let width = (xb - xa).abs();
        if width <= tol * (1.0 + xa.abs().max(xb.abs())) {
            break;
        }
        let mut x = (xa * fb - xb * fa) / (fb - fa);
        if slow >= 2 || !(x > xa.min(xb) && x < xa.max(xb)) {
            x = 0.5 * (xa + xb);
            slow = 0;
        }
        let fx = f(x)?;
        if fx == 0.0 {
            return Ok(x);
        }
        if fx.signum() == fb.signum() {
            xb = x;
            fb = fx;
            if side == -1 {
                fa *= 0.5;
            }
            side = -1;
        } else {
            xa = x;
            fa = fx;
            if side == 1 {
                fb *= 0.5;
            }
            side = 1;
        }
        if (xb - xa).abs() > 0.5 * width {
            slow += 1;
        } else {
            slow = 0;
        }
    }
    // the endpoint closer to the root by |f|
    Ok(if fa.abs() < fb.abs() { xa } else { xb })
}

/// Golden-section search for the maximum of a unimodal `f` on `[a, b]`.
fn golden_max<F>(f: &mut F, mut a: f64, mut b: f64) -> Result<(f64, f64)>
where
    F: FnMut(f64) -> Result<f64>,
{
    let ratio = 0.5 * (5.0f64.sqrt() - 1.0);
    let mut c = b - ratio * (b - a);
    let mut d = a + ratio * (b - a);
    let (mut fc, mut fd) = (f(c)?, f(d)?);
    for _ in 0..80 {
        if fc > fd {
            b = d;
            d = c;
            fd = fc;
            c = b - ratio * (b - a);
            fc = f(c)?;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + ratio * (b - a);
            fd = f(d)?;
        }
    }
    Ok(if fc > fd { (c, fc) } else { (d, fd) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::potential::TestPotential;

    #[test]
    fn free_discriminant_closed_form() {
        let cfg = DiscriminantConfig::default();
        let zero = Potential::zero();
        assert!(discriminant(&zero, PI * PI / 4.0, &cfg).unwrap().abs() < 1e-12);
        assert!((discriminant(&zero, 0.0, &cfg).unwrap() - 2.0).abs() < 1e-14);
        assert!((discriminant(&zero, -1.0, &cfg).unwrap() - 2.0 * 1.0f64.cosh()).abs() < 1e-12);
        for lambda in [3.0, 40.0, 250.0] {
            let d = discriminant(&zero, lambda, &cfg).unwrap();
            assert!(
                (d - 2.0 * lambda.sqrt().cos()).abs() < 1e-10,
                "lambda={lambda}"
            );
        }
    }

    #[test]
    fn wronskian_is_one() {
        let q = TestPotential::TwoHarmonic { c1: 0.7, c2: -0.4 }
            .sample()
            .unwrap();
        for lambda in [-5.0, 1.0, 30.0, 400.0] {
            let m = integrate_period(&q, lambda, 4096);
            assert!(
                m.wronskian_drift() < 1e-9,
                "lambda={lambda}: {}",
                m.wronskian_drift()
            );
        }
    }

    #[test]
    fn mean_only_shifts_energy() {
        let q = TestPotential::Mathieu { c: 0.5 }.sample().unwrap();
        let cfg = DiscriminantConfig::default();
        let a = discriminant(&q, 12.0, &cfg).unwrap();
        let b = discriminant(&q.shifted(3.0), 15.0, &cfg).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn free_edges() {
        let edges =
            band_edges_discriminant(&Potential::zero(), 5, &DiscriminantConfig::default()).unwrap();
        assert!(edges.lambda0.abs() < 1e-11);
        for p in &edges.pairs {
            let expect = (p.n as f64 * PI).powi(2);
            assert!((p.minus - expect).abs() < 1e-9 * expect, "{p:?}");
            assert!((p.plus - expect).abs() < 1e-9 * expect, "{p:?}");
        }
    }

    #[test]
    fn config_validation() {
        assert!(DiscriminantConfig::with_steps(255).validate().is_err());
        let cfg = DiscriminantConfig {
            root_tolerance: 0.0,
            ..Default::default()
        };
        assert!(cfg.validate().is_err());
        let cfg = DiscriminantConfig::with_steps(256);
        assert!(matches!(
            band_edges_discriminant(&Potential::zero(), 60, &cfg),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn illinois_finds_simple_roots() {
        let mut f = |x: f64| Ok(x * x - 2.0);
        let r = illinois(&mut f, (0.0, -2.0), (2.0, 2.0), 1e-15).unwrap();
        assert!((r - 2.0f64.sqrt()).abs() < 1e-14);
        let mut g = |x: f64| Ok((x - 1.0).powi(3));
        let r = illinois(&mut g, (-3.0, -64.0), (2.0, 1.0), 1e-14).unwrap();
        assert!((r - 1.0).abs() < 1e-4);
    }
}
