use thiserror::Error;

use crate::hill_spectrum::Parity;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("table weight value {value} at k={index} is not positive")]
    NonPositiveWeight { index: usize, value: f64 },
    #[error("weight exponent s={s} must be nonnegative for {kind} weights")]
    NegativeExponent { kind: &'static str, s: f64 },
    #[error("parameter `{0}` is not finite")]
    NonFinite(&'static str),
    #[error("invalid parameter: {0}")]
    InvalidParameter(&'static str),

    #[error("Fourier index {0} is not >= 1")]
    CoefficientIndex(i64),
    #[error("Fourier index {0} given more than once")]
    DuplicateCoefficient(i64),

    #[error("truncation {n_trunc} is below the potential cutoff {cutoff} (aliasing)")]
    TruncationBelowCutoff { n_trunc: usize, cutoff: usize },
    #[error("truncation {n_trunc} is too small for n_max; need at least {required}")]
    TruncationTooSmall { n_trunc: usize, required: usize },
    #[error("interlacing violated at n={n}: {detail}")]
    Interlacing { n: usize, detail: &'static str },
    #[error("Wronskian drift {drift:e} at lambda={lambda} after {steps} steps")]
    Integration {
        lambda: f64,
        drift: f64,
        steps: usize,
    },
    #[error("no {parity:?} bracket found for n={n} within the expansion budget")]
    BracketNotFound { n: usize, parity: Parity },

    #[error("(s, r, t) = ({s}, {r}, {t}) is outside the convolution lemma hypotheses")]
    LemmaHypotheses { s: f64, r: f64, t: f64 },

    #[error("potential mean {0} is not zero")]
    NonZeroMean(f64),
    #[error("sequence index {0} must be >= 1")]
    SequenceIndex(i64),
    #[error("range {lo}..={hi} is invalid")]
    Range { lo: usize, hi: usize },
    #[error("only {usable} usable points for the fit; need {required}")]
    TooFewPoints { usable: usize, required: usize },
}
