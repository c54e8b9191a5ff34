//! 1-periodic real potentials `q(x) = Σ_k q̂(k) e^{i2πkx}` stored through
//! their mean `q̂(0)` and the coefficients `q̂(k)`, `k >= 1`. Negative
//! indices are never stored: `q̂(-k) = conj(q̂(k))`.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;
#[allow(unused_imports)]
use num_traits::Float;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::sequence_spaces::{weighted_norm, TwoSidedSeq, Weight};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct Potential {
    mean: f64,
    /// `coeffs[k - 1] = q̂(k)`; no trailing zeros.
    coeffs: Vec<Complex64>,
}

impl Potential {
    pub fn zero() -> Self {
        Self::constant(0.0)
    }

    pub fn constant(mean: f64) -> Self {
        Self {
            mean,
            coeffs: Vec::new(),
        }
    }

    pub fn from_fourier(mean: f64, coeffs: &[(i64, Complex64)]) -> Result<Self> {
        if !mean.is_finite() {
            return Err(Error::NonFinite("mean"));
        }
        let mut dense: Vec<Option<Complex64>> = Vec::new();
        for &(k, z) in coeffs {
            if k < 1 {
                return Err(Error::CoefficientIndex(k));
            }
            if !z.re.is_finite() || !z.im.is_finite() {
                return Err(Error::NonFinite("coefficient"));
            }
            let idx = (k - 1) as usize;
            if idx >= dense.len() {
                dense.resize(idx + 1, None);
            }
            if dense[idx].replace(z).is_some() {
                return Err(Error::DuplicateCoefficient(k));
            }
        }
        let coeffs = dense.into_iter().map(|z| z.unwrap_or_default()).collect();
        Ok(Self::from_dense(mean, coeffs))
    }

    /// `coeffs[k - 1] = q̂(k)`.
    pub fn from_dense(mean: f64, mut coeffs: Vec<Complex64>) -> Self {
        while coeffs
            .last()
            .is_some_and(|z| *z == Complex64::new(0.0, 0.0))
        {
            coeffs.pop();
        }
        Self { mean, coeffs }
    }

    pub fn mean(&self) -> f64 {
        self.mean
    }

    /// Cutoff `K`: `q̂(k) = 0` for `|k| > K`.
    pub fn cutoff(&self) -> usize {
        self.coeffs.len()
    }

    /// `q̂(k)` for any integer `k`.
    pub fn coeff(&self, k: i64) -> Complex64 {
        match k {
            0 => Complex64::new(self.mean, 0.0),
            k if k.unsigned_abs() as usize > self.coeffs.len() => Complex64::new(0.0, 0.0),
            k if k > 0 => self.coeffs[(k - 1) as usize],
            k => self.coeffs[(-k - 1) as usize].conj(),
        }
    }

    /// `q̂(k)` for `k = 1..=K`.
    pub fn positive_coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn mean_free(&self) -> Self {
        Self {
            mean: 0.0,
            coeffs: self.coeffs.clone(),
        }
    }

    /// `q + c`.
    pub fn shifted(&self, c: f64) -> Self {
        Self {
            mean: self.mean + c,
            coeffs: self.coeffs.clone(),
        }
    }

    /// `q̂(0) + 2 Σ_{k=1}^{K} Re(q̂(k) e^{i2πkx})`, with `x` and every `kx`
    /// reduced mod 1 first.
    pub fn evaluate(&self, x: f64) -> f64 {
        let x = x - x.floor();
        let mut acc = 0.0;
        for (i, z) in self.coeffs.iter().enumerate() {
            let kx = (i + 1) as f64 * x;
            let (sin, cos) = (2.0 * PI * (kx - kx.floor())).sin_cos();
            acc += z.re * cos - z.im * sin;
        }
        self.mean + 2.0 * acc
    }

    /// The full two-sided sum `Σ_{|k|<=K} q̂(k) e^{i2πkx}` in complex
    /// arithmetic; its imaginary part is rounding noise.
    pub fn evaluate_complex(&self, x: f64) -> Complex64 {
        let x = x - x.floor();
        let k_max = self.cutoff() as i64;
        (-k_max..=k_max)
            .map(|k| {
                let kx = k as f64 * x;
                let (sin, cos) = (2.0 * PI * (kx - kx.floor())).sin_cos();
                self.coeff(k) * Complex64::new(cos, sin)
            })
            .sum()
    }

    /// `{q̂(k)}_{k∈ℤ}` as a real-symmetric two-sided sequence.
    pub fn coefficient_sequence(&self) -> TwoSidedSeq {
        TwoSidedSeq::real_symmetric(self.mean, &self.coeffs)
    }

    /// `Σ_{k≠0} |q̂(k)|`, which bounds `sup |q - q̂(0)|`.
    pub fn oscillation_bound(&self) -> f64 {
        2.0 * self.coeffs.iter().map(|z| z.norm()).sum::<f64>()
    }

    /// `L²(𝕋)` norm of `q - q̂(0)`.
    pub fn l2_norm_mean_free(&self) -> f64 {
        (2.0 * self.coeffs.iter().map(|z| z.norm_sqr()).sum::<f64>()).sqrt()
    }

    /// Hörmander norm on the circle, `(Σ_{k∈ℤ} ω²(k)|q̂(k)|²)^{1/2}` with
    /// the `k = 0` term included at `ω(0) = 1`.
    pub fn hormander_norm(&self, weight: &Weight) -> f64 {
        weighted_norm(&self.coefficient_sequence(), weight)
    }
}

/// Named potentials used by the tests, the acceptance suite and the CLI.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TestPotential {
    /// `q̂(1) = c`, i.e. `q(x) = 2c cos(2πx)`.
    Mathieu { c: f64 },
    /// `q̂(1) = c1`, `q̂(2) = c2`.
    TwoHarmonic { c1: f64, c2: f64 },
    /// `q̂(k) = (1 + 2k)^{-p}` for `1 <= k <= K`.
    PowerDecay { p: f64, cutoff: usize },
    /// `q̂(k) = e^{iφ_k}(1 + 2k)^{-(s+1)}` for `1 <= k <= K`, phases drawn
    /// uniformly from a ChaCha8 stream seeded with `seed`.
    RandomHs { s: f64, cutoff: usize, seed: u64 },
}

impl TestPotential {
    pub fn sample(self) -> Result<Potential> {
        match self {
            TestPotential::Mathieu { c } => {
                Potential::from_fourier(0.0, &[(1, Complex64::new(c, 0.0))])
            }
            TestPotential::TwoHarmonic { c1, c2 } => Potential::from_fourier(
                0.0,
                &[(1, Complex64::new(c1, 0.0)), (2, Complex64::new(c2, 0.0))],
            ),
            TestPotential::PowerDecay { p, cutoff } => {
                if !(p > 0.5) || !p.is_finite() {
                    return Err(Error::InvalidParameter("power_decay needs p > 1/2"));
                }
                if cutoff < 1 {
                    return Err(Error::InvalidParameter("power_decay needs K >= 1"));
                }
                let coeffs = (1..=cutoff)
                    .map(|k| Complex64::new((1.0 + 2.0 * k as f64).powf(-p), 0.0))
                    .collect();
                Ok(Potential::from_dense(0.0, coeffs))
            }
            TestPotential::RandomHs { s, cutoff, seed } => {
                if !s.is_finite() || s < 0.0 {
                    return Err(Error::NegativeExponent {
                        kind: "random_hs",
                        s,
                    });
                }
                if cutoff < 1 {
                    return Err(Error::InvalidParameter("random_hs needs K >= 1"));
                }
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let mut coeffs = vec![Complex64::new(0.0, 0.0); cutoff];
                for (i, z) in coeffs.iter_mut().enumerate() {
                    let phase = rng.random_range(0.0..2.0 * PI);
                    *z =
                        Complex64::from_polar((1.0 + 2.0 * (i + 1) as f64).powf(-(s + 1.0)), phase);
                }
                Ok(Potential::from_dense(0.0, coeffs))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn re(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn mathieu_and_constant() {
        let q = Potential::from_fourier(0.0, &[(1, re(0.1))]).unwrap();
        assert!((q.evaluate(0.0) - 0.2).abs() < 1e-15);
        for x in [0.1, 0.37, 0.5, 0.9] {
            assert!((q.evaluate(x) - 0.2 * (2.0 * PI * x).cos()).abs() < 1e-15);
        }
        let c = Potential::constant(5.0);
        for x in [-3.2, 0.0, 0.7] {
            assert_eq!(c.evaluate(x), 5.0);
        }
        assert_eq!(TestPotential::Mathieu { c: 0.1 }.sample().unwrap(), q);
    }

    #[test]
    fn imaginary_coefficient_gives_sine() {
        let q = Potential::from_fourier(0.0, &[(1, Complex64::new(0.0, 0.3))]).unwrap();
        for x in [0.0, 0.125, 0.25, 0.6] {
            assert!((q.evaluate(x) + 0.6 * (2.0 * PI * x).sin()).abs() < 1e-15);
        }
        let q = Potential::from_fourier(0.0, &[(2, re(0.5))]).unwrap();
        assert!((q.evaluate(0.25) + 1.0).abs() < 1e-15);
    }

    #[test]
    fn conjugate_symmetric_reads() {
        let q = Potential::from_fourier(1.5, &[(2, Complex64::new(0.25, -0.5))]).unwrap();
        assert_eq!(q.coeff(-2), Complex64::new(0.25, 0.5));
        assert_eq!(q.coeff(1), re(0.0));
        assert_eq!(q.coeff(0), re(1.5));
        assert_eq!(q.coeff(3), re(0.0));
        assert_eq!(q.cutoff(), 2);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(
            Potential::from_fourier(0.0, &[(0, re(1.0))]),
            Err(Error::CoefficientIndex(0))
        );
        assert_eq!(
            Potential::from_fourier(0.0, &[(-2, re(1.0))]),
            Err(Error::CoefficientIndex(-2))
        );
        assert_eq!(
            Potential::from_fourier(0.0, &[(3, re(1.0)), (3, re(2.0))]),
            Err(Error::DuplicateCoefficient(3))
        );
        assert!(Potential::from_fourier(f64::NAN, &[]).is_err());
        assert!(Potential::from_fourier(0.0, &[(1, re(f64::INFINITY))]).is_err());
    }

    #[test]
    fn trailing_zeros_do_not_count() {
        let q = Potential::from_fourier(0.0, &[(1, re(1.0)), (5, re(0.0))]).unwrap();
        assert_eq!(q.cutoff(), 1);
    }

    #[test]
    fn power_decay_coefficients() {
        let q = TestPotential::PowerDecay { p: 2.0, cutoff: 4 }
            .sample()
            .unwrap();
        let expect = [1.0 / 9.0, 1.0 / 25.0, 1.0 / 49.0, 1.0 / 81.0];
        for (k, e) in expect.iter().enumerate() {
            assert!((q.coeff(k as i64 + 1).re - e).abs() < 1e-17);
        }
        assert!(TestPotential::PowerDecay { p: 0.5, cutoff: 4 }
            .sample()
            .is_err());
    }

    #[test]
    fn random_hs_is_reproducible() {
        let a = TestPotential::RandomHs {
            s: 1.0,
            cutoff: 64,
            seed: 7,
        }
        .sample()
        .unwrap();
        let b = TestPotential::RandomHs {
            s: 1.0,
            cutoff: 64,
            seed: 7,
        }
        .sample()
        .unwrap();
        let c = TestPotential::RandomHs {
            s: 1.0,
            cutoff: 64,
            seed: 8,
        }
        .sample()
        .unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
        for k in 1..=64 {
            let expect = (1.0 + 2.0 * k as f64).powi(-2);
            assert!((a.coeff(k).norm() - expect).abs() < 1e-15 * expect.max(1e-300) + 1e-18);
        }
    }

    #[test]
    fn hormander_norm_of_cosine() {
        let q = Potential::from_fourier(0.0, &[(1, re(1.0))]).unwrap();
        for s in [0.0, 0.5, 1.0, 2.0] {
            let w = Weight::power(s).unwrap();
            let expect = 2.0f64.sqrt() * 3.0f64.powf(s);
            assert!((q.hormander_norm(&w) - expect).abs() < 1e-12 * expect);
        }
        assert_eq!(
            Potential::zero().hormander_norm(&Weight::power(3.0).unwrap()),
            0.0
        );
    }
}
