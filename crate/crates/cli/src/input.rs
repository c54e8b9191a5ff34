//! Potential and weight descriptor files.
//!
//! A potential file is either explicit Fourier data
//!
//! ```json
//! {"mean": 0.0, "coeffs": [{"k": 1, "re": 0.1, "im": 0.0}]}
//! ```
//!
//! or a named generator, optionally shifted by `mean`:
//!
//! ```json
//! {"generator": {"kind": "random_hs", "s": 1.0, "cutoff": 32, "seed": 7}}
//! ```
//!
//! A weight file holds one descriptor such as `{"kind": "power", "s": 1.5}`.

use std::fs;
use std::path::Path;

use hillgaps_core::potential::{Potential, TestPotential};
use hillgaps_core::sequence_spaces::{Weight, WeightKind};
use hillgaps_core::{Complex64, Error as CoreError};
use serde::Deserialize;

use crate::error::{CliError, CliResult};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct PotentialFile {
    #[serde(default)]
    mean: f64,
    coeffs: Option<Vec<CoeffEntry>>,
    generator: Option<Generator>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct CoeffEntry {
    k: i64,
    re: f64,
    #[serde(default)]
    im: f64,
}

#[derive(Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
enum Generator {
    Zero,
    Mathieu {
        c: f64,
    },
    TwoHarmonic {
        c1: f64,
        c2: f64,
    },
    PowerDecay {
        p: f64,
        cutoff: usize,
    },
    RandomHs {
        s: f64,
        cutoff: usize,
        seed: Option<u64>,
    },
}

#[derive(Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
enum WeightFile {
    Power {
        s: f64,
    },
    LogPower {
        s: f64,
        r: Vec<f64>,
    },
    #[serde(rename = "example_2_4", alias = "parity_log")]
    Example24 {
        s: f64,
    },
    Table {
        values: Vec<f64>,
    },
}

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| CliError::io(path, e))
}

fn parse<T: serde::de::DeserializeOwned>(path: &Path, text: &str) -> CliResult<T> {
    serde_json::from_str(text).map_err(|e| CliError::Parse {
        path: path.to_path_buf(),
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

/// Line of the `occurrence`-th (1-based) `"k": value` entry, if any.
fn line_of_index(text: &str, value: i64, occurrence: usize) -> Option<usize> {
    let mut seen = 0;
    for (i, line) in text.lines().enumerate() {
        let mut rest = line;
        while let Some(at) = rest.find("\"k\"") {
            rest = &rest[at + 3..];
            let after = rest.trim_start().strip_prefix(':').map(str::trim_start);
            let digits: String = after
                .unwrap_or("")
                .chars()
                .take_while(|c| *c == '-' || c.is_ascii_digit())
                .collect();
            if digits.parse::<i64>().ok() == Some(value) {
                seen += 1;
                if seen == occurrence {
                    return Some(i + 1);
                }
            }
        }
    }
    None
}

/// Reads a potential file; `seed` fills in a generator seed the file omits.
pub fn read_potential(path: &Path, seed: u64) -> CliResult<Potential> {
    let text = read(path)?;
    let file: PotentialFile = parse(path, &text)?;
    let at_line = |line: Option<usize>, e: CoreError| CliError::Parse {
        path: path.to_path_buf(),
        line: line.unwrap_or(0),
        column: 0,
        message: e.to_string(),
    };
    let base = match (file.coeffs, file.generator) {
        (Some(_), Some(_)) => {
            return Err(CliError::Input(format!(
                "{}: give either `coeffs` or `generator`, not both",
                path.display()
            )))
        }
        (Some(coeffs), None) => {
            let pairs: Vec<(i64, Complex64)> = coeffs
                .iter()
                .map(|c| (c.k, Complex64::new(c.re, c.im)))
                .collect();
            return Potential::from_fourier(file.mean, &pairs).map_err(|e| match e {
                CoreError::CoefficientIndex(k) => at_line(line_of_index(&text, k, 1), e),
                CoreError::DuplicateCoefficient(k) => at_line(line_of_index(&text, k, 2), e),
                other => at_line(None, other),
            });
        }
        (None, None) => Potential::zero(),
        (None, Some(generator)) => match generator {
            Generator::Zero => Potential::zero(),
            Generator::Mathieu { c } => TestPotential::Mathieu { c }.sample()?,
            Generator::TwoHarmonic { c1, c2 } => TestPotential::TwoHarmonic { c1, c2 }.sample()?,
            Generator::PowerDecay { p, cutoff } => {
                TestPotential::PowerDecay { p, cutoff }.sample()?
            }
            Generator::RandomHs {
                s,
                cutoff,
                seed: own,
            } => TestPotential::RandomHs {
                s,
                cutoff,
                seed: own.unwrap_or(seed),
            }
            .sample()?,
        },
    };
    if !file.mean.is_finite() {
        return Err(CliError::Input(format!(
            "{}: mean is not finite",
            path.display()
        )));
    }
    Ok(base.shifted(file.mean))
}

pub fn read_weight(path: &Path) -> CliResult<Weight> {
    let text = read(path)?;
    let kind = match parse(path, &text)? {
        WeightFile::Power { s } => WeightKind::Power { s },
        WeightFile::LogPower { s, r } => WeightKind::LogPower { s, exponents: r },
        WeightFile::Example24 { s } => WeightKind::ParityLog { s },
        WeightFile::Table { values } => WeightKind::Table { values },
    };
    Weight::new(kind).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// Short label for a weight, used in report keys.
pub fn describe_weight(w: &Weight) -> String {
    match w.kind() {
        WeightKind::Power { s } => format!("power({s})"),
        WeightKind::LogPower { s, exponents } => format!("log_power({s}, {exponents:?})"),
        WeightKind::ParityLog { s } => format!("example_2_4({s})"),
        WeightKind::Table { values } => format!("table[{}]", values.len()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    fn file(text: &str) -> tempfile::NamedTempFile {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        f.write_all(text.as_bytes()).unwrap();
        f
    }

    #[test]
    fn explicit_potential() {
        let f = file(r#"{"mean": 1.5, "coeffs": [{"k": 2, "re": 0.25, "im": -0.5}]}"#);
        let q = read_potential(f.path(), 0).unwrap();
        assert_eq!(q.mean(), 1.5);
        assert_eq!(q.coeff(2), Complex64::new(0.25, -0.5));
        assert_eq!(q.coeff(-2), Complex64::new(0.25, 0.5));
    }

    #[test]
    fn generators_and_seed() {
        let f = file(r#"{"generator": {"kind": "mathieu", "c": 0.1}}"#);
        assert_eq!(
            read_potential(f.path(), 0).unwrap(),
            TestPotential::Mathieu { c: 0.1 }.sample().unwrap()
        );
        let f = file(r#"{"generator": {"kind": "random_hs", "s": 1.0, "cutoff": 8}}"#);
        let a = read_potential(f.path(), 3).unwrap();
        let b = TestPotential::RandomHs {
            s: 1.0,
            cutoff: 8,
            seed: 3,
        }
        .sample()
        .unwrap();
        assert_eq!(a, b);
        assert_ne!(a, read_potential(f.path(), 4).unwrap());
        let f = file(r#"{"mean": -2.0}"#);
        assert_eq!(
            read_potential(f.path(), 0).unwrap(),
            Potential::constant(-2.0)
        );
    }

    #[test]
    fn errors_carry_lines() {
        let f = file("{\n  \"mean\": 0.0,\n  \"coeffs\": [\n    {\"k\": 1, \"re\": 0.1},\n    {\"k\": 1 \"re\": 0.2}\n  ]\n}\n");
        match read_potential(f.path(), 0) {
            Err(CliError::Parse { line, .. }) => assert_eq!(line, 5),
            other => panic!("{other:?}"),
        }
        let f = file("{\"coeffs\": [\n{\"k\": 1, \"re\": 0.1},\n{\"k\": 3, \"re\": 0.2},\n{\"k\": 1, \"re\": 0.3}\n]}");
        match read_potential(f.path(), 0) {
            Err(CliError::Parse { line, message, .. }) => {
                assert_eq!(line, 4);
                assert!(message.contains("more than once"));
            }
            other => panic!("{other:?}"),
        }
        let f = file("{\"coeffs\": [{\"k\": 0, \"re\": 1.0}]}");
        assert!(matches!(
            read_potential(f.path(), 0),
            Err(CliError::Parse { line: 1, .. })
        ));
        let f = file(r#"{"coeffs": [], "generator": {"kind": "zero"}}"#);
        assert!(matches!(
            read_potential(f.path(), 0),
            Err(CliError::Input(_))
        ));
    }

    #[test]
    fn weights() {
        let cases = [
            (r#"{"kind": "power", "s": 1.5}"#, "power(1.5)"),
            (
                r#"{"kind": "log_power", "s": 1.0, "r": [2.0, -1.0]}"#,
                "log_power(1, [2.0, -1.0])",
            ),
            (r#"{"kind": "example_2_4", "s": 0.0}"#, "example_2_4(0)"),
            (r#"{"kind": "table", "values": [2.0, 3.0]}"#, "table[2]"),
        ];
        for (text, label) in cases {
            let w = read_weight(file(text).path()).unwrap();
            assert_eq!(describe_weight(&w), label);
        }
        let w = read_weight(file(r#"{"kind": "table", "values": [2.0, 3.0]}"#).path()).unwrap();
        assert_eq!((w.at(1), w.at(-2), w.at(9)), (2.0, 3.0, 3.0));
        assert!(read_weight(file(r#"{"kind": "table", "values": [0.0]}"#).path()).is_err());
        assert!(matches!(
            read_weight(file(r#"{"kind": "cubic", "s": 1}"#).path()),
            Err(CliError::Parse { .. })
        ));
    }
}
