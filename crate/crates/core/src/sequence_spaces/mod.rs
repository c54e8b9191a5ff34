//! Weights on ℤ, the weighted Hilbert spaces `h^ω(ℤ)` of two-sided
//! sequences, exact convolution and weight-class predicates.

mod classes;
mod convolution;
mod seq;
mod weight;

pub use classes::{
    check_or_class, check_sandwich, compare_weights, EmbeddingReport, OrClassReport, OrGrid,
    SandwichReport, SANDWICH_SLOPE_TOLERANCE,
};
pub use convolution::{
    conv_lemma_report, convolution_ratio, convolve, finite_support_bound, indicator,
    ConvLemmaReport, LemmaTrials, Regime,
};
pub use seq::{weighted_norm, TwoSidedSeq};
pub use weight::{Weight, WeightKind};
