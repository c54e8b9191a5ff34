use alloc::vec::Vec;
#[allow(unused_imports)]
use num_traits::Float;

use crate::{Error, Result};

/// Shape of a weight on ℕ before its extension to ℤ.
#[derive(Debug, Clone, PartialEq)]
pub enum WeightKind {
    /// `(1 + 2|k|)^s`.
    Power { s: f64 },
    /// `(1 + 2k)^s · Π_i ℓ_i(k)^{r_i}` where `ℓ_1(k) = ln(1 + k)` and
    /// `ℓ_{i+1}(k) = ln(max(ℓ_i(k), e))` (iterated logarithms kept `>= 1`
    /// from the second level on so the weight stays positive at small `k`).
    LogPower { s: f64, exponents: Vec<f64> },
    /// `k^s ln(1 + k)` on even `k`, `k^s` on odd `k`. Not equivalent to any
    /// monotone weight.
    ParityLog { s: f64 },
    /// Tabulated values for `k = 1, 2, ..`; the last value is held beyond
    /// the end of the table.
    Table { values: Vec<f64> },
}

/// A positive weight on ℤ with `ω(0) = 1` and `ω(-k) = ω(k)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Weight {
    kind: WeightKind,
}

impl Weight {
    pub fn new(kind: WeightKind) -> Result<Self> {
        match &kind {
            WeightKind::Power { s } => finite("s", *s)?,
            WeightKind::LogPower { s, exponents } => {
                nonnegative("log_power", *s)?;
                for r in exponents {
                    finite("r", *r)?;
                }
            }
            WeightKind::ParityLog { s } => nonnegative("example_2_4", *s)?,
            WeightKind::Table { values } => {
                if values.is_empty() {
                    return Err(Error::InvalidParameter(
                        "table weight needs at least one value",
                    ));
                }
                for (i, &v) in values.iter().enumerate() {
                    if !(v > 0.0) || !v.is_finite() {
                        return Err(Error::NonPositiveWeight {
                            index: i + 1,
                            value: v,
                        });
                    }
                }
            }
        }
        Ok(Self { kind })
    }

    pub fn power(s: f64) -> Result<Self> {
        Self::new(WeightKind::Power { s })
    }

    pub fn log_power(s: f64, exponents: Vec<f64>) -> Result<Self> {
        Self::new(WeightKind::LogPower { s, exponents })
    }

    pub fn parity_log(s: f64) -> Result<Self> {
        Self::new(WeightKind::ParityLog { s })
    }

    /// Table indexed from `k = 1`.
    pub fn table(values: Vec<f64>) -> Result<Self> {
        Self::new(WeightKind::Table { values })
    }

    /// Table indexed from `k = 0`. The `k = 0` entry is dropped since the
    /// extension to ℤ fixes `ω(0) = 1`.
    pub fn table_from_zero(mut values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidParameter(
                "table weight needs at least one value",
            ));
        }
        let dropped = values.remove(0);
        if dropped != 1.0 {
            log::warn!("table weight value {dropped} at k=0 ignored; w(0) is fixed to 1");
        }
        Self::table(values)
    }

    pub fn kind(&self) -> &WeightKind {
        &self.kind
    }

    /// The power-scale order `s` the weight is built around, if it has one.
    pub fn nominal_order(&self) -> Option<f64> {
        match &self.kind {
            WeightKind::Power { s }
            | WeightKind::LogPower { s, .. }
            | WeightKind::ParityLog { s } => Some(*s),
            WeightKind::Table { .. } => None,
        }
    }

    /// `ω(k)` for any integer `k`.
    pub fn at(&self, k: i64) -> f64 {
        if k == 0 {
            return 1.0;
        }
        self.on_naturals(k.unsigned_abs())
    }

    /// Evaluation on the half-line used by the OR-class test. Continuous
    /// kinds use their closed form; parity and table weights are extended
    /// as step functions `ω(⌊t⌋)`. Below 1 the value is frozen at `ω(1)`.
    pub fn at_real(&self, t: f64) -> f64 {
        let t = if t < 1.0 { 1.0 } else { t };
        match &self.kind {
            WeightKind::Power { s } => (1.0 + 2.0 * t).powf(*s),
            WeightKind::LogPower { s, exponents } => log_power(t, *s, exponents),
            WeightKind::ParityLog { .. } | WeightKind::Table { .. } => {
                self.on_naturals(t.floor() as u64)
            }
        }
    }

    fn on_naturals(&self, k: u64) -> f64 {
        let kf = k as f64;
        match &self.kind {
            WeightKind::Power { s } => (1.0 + 2.0 * kf).powf(*s),
            WeightKind::LogPower { s, exponents } => log_power(kf, *s, exponents),
            WeightKind::ParityLog { s } => {
                let base = kf.powf(*s);
                if k.is_multiple_of(2) {
                    base * (1.0 + kf).ln()
                } else {
                    base
                }
            }
            WeightKind::Table { values } => {
                let idx = (k as usize).min(values.len()) - 1;
                values[idx]
            }
        }
    }
}

fn log_power(t: f64, s: f64, exponents: &[f64]) -> f64 {
    let mut value = (1.0 + 2.0 * t).powf(s);
    let mut level = (1.0 + t).ln();
    for (i, &r) in exponents.iter().enumerate() {
        if i > 0 {
            level = level.max(core::f64::consts::E).ln();
        }
        value *= level.powf(r);
    }
    value
}

fn finite(name: &'static str, v: f64) -> Result<()> {
    if v.is_finite() {
        Ok(())
    } else {
        Err(Error::NonFinite(name))
    }
}

fn nonnegative(kind: &'static str, s: f64) -> Result<()> {
    finite("s", s)?;
    if s < 0.0 {
        return Err(Error::NegativeExponent { kind, s });
    }
    Ok(())
}
