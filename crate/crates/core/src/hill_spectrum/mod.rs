//! Band edges `λ_0 < λ_1^- <= λ_1^+ < λ_2^- <= ..` of `S(q) = -d²/dx² + q`.
//!
//! Two independent routes are provided: eigenvalues of truncated
//! Fourier–Galerkin matrices for the periodic and semiperiodic problems on
//! `[0, 1]` ([`band_edges_galerkin`]), and roots of `Δ(λ) = ±2` for the
//! Floquet discriminant `Δ` ([`band_edges_discriminant`]).

mod discriminant;
mod galerkin;

use alloc::vec::Vec;

pub use discriminant::{
    band_edges_discriminant, discriminant, integrate_period, DiscriminantConfig, Monodromy,
};
pub use galerkin::{
    band_edges_galerkin, basis_frequencies, galerkin_matrix, GalerkinConfig, HermitianMatrix,
    Truncation,
};

use crate::potential::Potential;
use crate::{Error, Result};

/// Boundary condition `u^{(j)}(0) = ±u^{(j)}(1)` the edge belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Periodic,
    Semiperiodic,
}

impl Parity {
    /// Even gaps are periodic eigenvalues, odd gaps semiperiodic ones.
    pub fn of_gap(n: usize) -> Self {
        if n.is_multiple_of(2) {
            Parity::Periodic
        } else {
            Parity::Semiperiodic
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Parity::Periodic => "periodic",
            Parity::Semiperiodic => "semiperiodic",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Galerkin { n_trunc: usize },
    Discriminant { steps: usize },
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Galerkin { .. } => "galerkin",
            Method::Discriminant { .. } => "discriminant",
        }
    }

    /// Truncation or integrator step count.
    pub fn resolution(self) -> usize {
        match self {
            Method::Galerkin { n_trunc } => n_trunc,
            Method::Discriminant { steps } => steps,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EdgePair {
    pub n: usize,
    pub parity: Parity,
    pub minus: f64,
    pub plus: f64,
}

impl EdgePair {
    /// `λ_n^+ - λ_n^-`, unclamped.
    pub fn gap(&self) -> f64 {
        self.plus - self.minus
    }
}

/// Edge tolerance `1e-10·(1 + |λ|)` used for interlacing and collapse
/// decisions.
pub fn edge_tolerance(lambda: f64) -> f64 {
    1e-10 * (1.0 + lambda.abs())
}

#[derive(Debug, Clone, PartialEq)]
pub struct BandEdges {
    pub lambda0: f64,
    /// Gap edges for `n = 1..=n_max`, in order.
    pub pairs: Vec<EdgePair>,
    pub method: Method,
}

impl BandEdges {
    pub fn n_max(&self) -> usize {
        self.pairs.len()
    }

    pub fn pair(&self, n: usize) -> Option<&EdgePair> {
        n.checked_sub(1).and_then(|i| self.pairs.get(i))
    }

    /// All edges in interlacing order: `λ_0, λ_1^-, λ_1^+, ..`.
    pub fn ordered(&self) -> Vec<f64> {
        let mut out = Vec::with_capacity(2 * self.pairs.len() + 1);
        out.push(self.lambda0);
        for p in &self.pairs {
            out.push(p.minus);
            out.push(p.plus);
        }
        out
    }

    /// `λ_0 < λ_1^- <= λ_1^+ < λ_2^- <= ..`: strict between bands, within
    /// [`edge_tolerance`] inside a gap.
    pub fn check_interlacing(&self) -> Result<()> {
        let mut prev = self.lambda0;
        for p in &self.pairs {
            if !(p.minus > prev) {
                return Err(Error::Interlacing {
                    n: p.n,
                    detail: "lambda_n^- does not exceed the previous edge",
                });
            }
            if p.gap() < -edge_tolerance(p.plus) {
                return Err(Error::Interlacing {
                    n: p.n,
                    detail: "negative gap beyond tolerance",
                });
            }
            prev = p.plus.max(p.minus);
        }
        Ok(())
    }

    /// `self` with every edge shifted by `c`.
    pub fn shifted(&self, c: f64) -> Self {
        let mut out = self.clone();
        out.lambda0 += c;
        for p in &mut out.pairs {
            p.minus += c;
            p.plus += c;
        }
        out
    }
}

/// `|a - b| / max(1, |a|, |b|)`: relative away from zero, absolute near it.
pub fn relative_discrepancy(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs()).max(1.0)
}

#[derive(Debug, Clone, PartialEq)]
pub struct CrossValidation {
    pub galerkin: BandEdges,
    pub discriminant: BandEdges,
    pub max_relative_discrepancy: f64,
    /// Position in [`BandEdges::ordered`] of the worst edge.
    pub worst_edge: usize,
}

/// Runs both methods and compares every edge.
pub fn cross_validate(
    q: &Potential,
    n_max: usize,
    galerkin: &GalerkinConfig,
    discriminant: &DiscriminantConfig,
) -> Result<CrossValidation> {
    let g = band_edges_galerkin(q, n_max, galerkin)?;
    let d = band_edges_discriminant(q, n_max, discriminant)?;
    Ok(compare_edges(g, d))
}

/// Compares two edge sets of the same length.
pub fn compare_edges(galerkin: BandEdges, discriminant: BandEdges) -> CrossValidation {
    let (mut worst, mut worst_edge) = (0.0, 0);
    for (i, (a, b)) in galerkin
        .ordered()
        .into_iter()
        .zip(discriminant.ordered())
        .enumerate()
    {
        let d = relative_discrepancy(a, b);
        if d > worst {
            worst = d;
            worst_edge = i;
        }
    }
    CrossValidation {
        galerkin,
        discriminant,
        max_relative_discrepancy: worst,
        worst_edge,
    }
}
