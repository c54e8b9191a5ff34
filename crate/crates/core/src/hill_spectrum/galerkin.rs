use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;

use super::{BandEdges, EdgePair, Method, Parity};
use crate::eigen::hermitian_eigenvalues;
use crate::potential::Potential;
use crate::{Error, Result};

/// Dense Hermitian matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl HermitianMatrix {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.dim + j]
    }

    pub fn is_hermitian(&self) -> bool {
        (0..self.dim).all(|i| (0..=i).all(|j| self.get(i, j) == self.get(j, i).conj()))
    }

    pub fn as_slice(&self) -> &[Complex64] {
        &self.data
    }

    pub fn eigenvalues(&self) -> Vec<f64> {
        hermitian_eigenvalues(self.dim, &mut self.data.clone())
    }
}

/// Basis indices `j` and frequencies `ξ_j` (the `ξ` in `e^{iξx}`) for each
/// parity, ordered by increasing `|ξ|` (negative first on ties).
///
/// Periodic: `ξ_j = 2πj`, `-N <= j <= N`. Semiperiodic: `ξ_j = π(2j+1)`,
/// `-N-1 <= j <= N`, so both bases reach frequencies of about `2πN`.
pub fn basis_frequencies(parity: Parity, n_trunc: usize) -> Vec<(i64, f64)> {
    let n = n_trunc as i64;
    let mut basis: Vec<(i64, f64)> = match parity {
        Parity::Periodic => (-n..=n).map(|j| (j, 2.0 * PI * j as f64)).collect(),
        Parity::Semiperiodic => (-n - 1..=n).map(|j| (j, PI * (2 * j + 1) as f64)).collect(),
    };
    // graded order: the eigensolver keeps the low eigenvalues accurate to
    // rounding relative to their own scale instead of the largest diagonal
    basis.sort_by(|a, b| a.1.abs().total_cmp(&b.1.abs()).then(a.1.total_cmp(&b.1)));
    basis
}

/// `M[a,b] = ξ_a² δ_{ab} + q̂(j_a - j_b)` over [`basis_frequencies`].
pub fn galerkin_matrix(q: &Potential, parity: Parity, n_trunc: usize) -> Result<HermitianMatrix> {
    if n_trunc < q.cutoff() {
        return Err(Error::TruncationBelowCutoff {
            n_trunc,
            cutoff: q.cutoff(),
        });
    }
    let basis = basis_frequencies(parity, n_trunc);
    let dim = basis.len();
    let mut data = vec![Complex64::new(0.0, 0.0); dim * dim];
    for (a, &(ja, xa)) in basis.iter().enumerate() {
        for (b, &(jb, _)) in basis.iter().enumerate() {
            let mut entry = q.coeff(ja - jb);
            if a == b {
                entry += xa * xa;
            }
            data[a * dim + b] = entry;
        }
    }
    Ok(HermitianMatrix { dim, data })
}

/// How the Galerkin truncation is chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Truncation {
    /// `max(64, 4·n_max + 2K)`.
    #[default]
    Auto,
    Fixed(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct GalerkinConfig {
    pub truncation: Truncation,
}

impl GalerkinConfig {
    pub fn fixed(n_trunc: usize) -> Self {
        Self {
            truncation: Truncation::Fixed(n_trunc),
        }
    }

    /// Resolved truncation for a potential of cutoff `cutoff` and `n_max`
    /// gaps; enforces `N >= 2·n_max + 16` and `N >= K`.
    pub fn resolve(&self, n_max: usize, cutoff: usize) -> Result<usize> {
        let required = 2 * n_max + 16;
        let n_trunc = match self.truncation {
            Truncation::Auto => (4 * n_max + 2 * cutoff).max(64),
            Truncation::Fixed(n) => n,
        };
        if n_trunc < required {
            return Err(Error::TruncationTooSmall { n_trunc, required });
        }
        if n_trunc < cutoff {
            return Err(Error::TruncationBelowCutoff { n_trunc, cutoff });
        }
        Ok(n_trunc)
    }
}

/// Band edges from the two truncated eigenvalue problems.
///
/// Periodic eigenvalues `μ_0 <= μ_1 <= ..` and semiperiodic `ν_0 <= ν_1 <=
/// ..` are paired by counting: `λ_0 = μ_0`, `λ_{2m}^± = (μ_{2m-1}, μ_{2m})`,
/// `λ_{2m+1}^± = (ν_{2m}, ν_{2m+1})`. The mean is removed before the solve
/// and added back to every edge.
pub fn band_edges_galerkin(q: &Potential, n_max: usize, cfg: &GalerkinConfig) -> Result<BandEdges> {
    if n_max < 1 {
        return Err(Error::InvalidParameter("n_max must be >= 1"));
    }
    let n_trunc = cfg.resolve(n_max, q.cutoff())?;
    let q0 = q.mean_free();
    let periodic = galerkin_matrix(&q0, Parity::Periodic, n_trunc)?.eigenvalues();
    let semiperiodic = galerkin_matrix(&q0, Parity::Semiperiodic, n_trunc)?.eigenvalues();
    let shift = q.mean();

    let pairs = (1..=n_max)
        .map(|n| {
            let parity = Parity::of_gap(n);
            let ev = match parity {
                Parity::Periodic => &periodic,
                Parity::Semiperiodic => &semiperiodic,
            };
            EdgePair {
                n,
                parity,
                minus: ev[n - 1] + shift,
                plus: ev[n] + shift,
            }
        })
        .collect();
    let edges = BandEdges {
        lambda0: periodic[0] + shift,
        pairs,
        method: Method::Galerkin { n_trunc },
    };
    edges.check_interlacing()?;
    Ok(edges)
}
