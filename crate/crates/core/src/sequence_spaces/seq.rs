use alloc::vec;
use alloc::vec::Vec;
#[allow(unused_imports)]
use num_traits::Float;

use num_complex::Complex64;

use super::Weight;

/// A finitely supported complex sequence on ℤ: entries vanish for `|k| > K`.
///
/// When the real-symmetric flag is set, `a(-k) = conj(a(k))` holds and is
/// kept by [`TwoSidedSeq::set`].
#[derive(Debug, Clone, PartialEq)]
pub struct TwoSidedSeq {
    bound: usize,
    entries: Vec<Complex64>,
    real_symmetric: bool,
}

impl TwoSidedSeq {
    pub fn zeros(bound: usize) -> Self {
        Self {
            bound,
            entries: vec![Complex64::new(0.0, 0.0); 2 * bound + 1],
            real_symmetric: false,
        }
    }

    /// The unit sequence at index `k`.
    pub fn delta(k: i64) -> Self {
        let mut seq = Self::zeros(k.unsigned_abs() as usize);
        seq.set(k, Complex64::new(1.0, 0.0));
        seq
    }

    pub fn from_fn(bound: usize, mut f: impl FnMut(i64) -> Complex64) -> Self {
        let b = bound as i64;
        Self {
            bound,
            entries: (-b..=b).map(&mut f).collect(),
            real_symmetric: false,
        }
    }

    /// Builds `a` with `a(0) = center` and `a(k) = positive[k - 1]`,
    /// `a(-k) = conj(a(k))` for `k >= 1`.
    pub fn real_symmetric(center: f64, positive: &[Complex64]) -> Self {
        let bound = positive.len();
        let mut entries = Vec::with_capacity(2 * bound + 1);
        entries.extend(positive.iter().rev().map(|z| z.conj()));
        entries.push(Complex64::new(center, 0.0));
        entries.extend_from_slice(positive);
        Self {
            bound,
            entries,
            real_symmetric: true,
        }
    }

    /// Support bound `K`.
    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn is_real_symmetric(&self) -> bool {
        self.real_symmetric
    }

    pub fn get(&self, k: i64) -> Complex64 {
        if k.unsigned_abs() as usize > self.bound {
            return Complex64::new(0.0, 0.0);
        }
        self.entries[(k + self.bound as i64) as usize]
    }

    /// Sets `a(k)`, growing the support if needed. On a real-symmetric
    /// sequence the mirror entry is set to the conjugate (and `a(0)` is
    /// forced real).
    pub fn set(&mut self, k: i64, value: Complex64) {
        let need = k.unsigned_abs() as usize;
        if need > self.bound {
            let grow = need - self.bound;
            let zero = Complex64::new(0.0, 0.0);
            let mut entries = vec![zero; 2 * need + 1];
            entries[grow..grow + self.entries.len()].copy_from_slice(&self.entries);
            self.entries = entries;
            self.bound = need;
        }
        let off = self.bound as i64;
        if self.real_symmetric {
            if k == 0 {
                self.entries[off as usize] = Complex64::new(value.re, 0.0);
            } else {
                self.entries[(off + k) as usize] = value;
                self.entries[(off - k) as usize] = value.conj();
            }
        } else {
            self.entries[(off + k) as usize] = value;
        }
    }

    /// `(k, a(k))` for `k = -K..=K` in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = (i64, Complex64)> + '_ {
        let off = self.bound as i64;
        self.entries
            .iter()
            .enumerate()
            .map(move |(i, z)| (i as i64 - off, *z))
    }

    /// Smallest `K'` such that all entries with `|k| > K'` are zero.
    pub fn effective_bound(&self) -> usize {
        (0..=self.bound)
            .rev()
            .find(|&k| {
                let k = k as i64;
                self.get(k) != Complex64::new(0.0, 0.0) || self.get(-k) != Complex64::new(0.0, 0.0)
            })
            .unwrap_or(0)
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self {
            bound: self.bound,
            entries: self.entries.iter().map(|z| z * factor).collect(),
            real_symmetric: self.real_symmetric && factor.im == 0.0,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let bound = self.bound.max(other.bound);
        let mut out = Self::from_fn(bound, |k| self.get(k) + other.get(k));
        out.real_symmetric = self.real_symmetric && other.real_symmetric;
        out
    }
}

/// `(Σ_k ω²(k)|a(k)|²)^{1/2}`, summed in ascending `k`.
pub fn weighted_norm(a: &TwoSidedSeq, weight: &Weight) -> f64 {
    a.iter()
        .map(|(k, z)| {
            let w = weight.at(k);
            w * w * z.norm_sqr()
        })
        .sum::<f64>()
        .sqrt()
}
