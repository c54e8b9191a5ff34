//! Band edges and spectral-gap asymptotics of Hill–Schrödinger operators
//! `S(q)u = -u'' + q(x)u` with 1-periodic real potentials.
//!
//! The crate is `no_std` (it needs `alloc`). It contains:
//!
//! * [`sequence_spaces`]: weights on ℤ, weighted two-sided sequence spaces,
//!   exact convolution and the finite-scale weight-class checks.
//! * [`potential`]: Fourier representation of real potentials, named test
//!   potentials and the circle Hörmander norm.
//! * [`hill_spectrum`]: band edges by Fourier–Galerkin truncation and by
//!   Floquet-discriminant root finding.
//! * [`gap_analysis`]: gap lengths, the second-order correction `ρ(n)`,
//!   residual sequences and the finite-sum verification reports.
//!
//! File formats and the command-line front end live in the `hillgaps` crate.

#![no_std]
#![warn(missing_debug_implementations)]
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod eigen;
mod error;
mod fit;
pub mod gap_analysis;
pub mod hill_spectrum;
pub mod potential;
pub mod sequence_spaces;

pub use error::{Error, Result};
pub use num_complex::Complex64;
