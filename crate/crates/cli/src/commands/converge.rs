use hillgaps_core::hill_spectrum::{
    band_edges_discriminant, band_edges_galerkin, integrate_period, BandEdges, DiscriminantConfig,
    GalerkinConfig,
};
use rayon::prelude::*;
use serde_json::{json, Value};

use super::potential_json;
use crate::config::{Format, MethodChoice, RunConfig};
use crate::error::{CliError, CliResult};
use crate::output::{emit, float, opt_float, pretty, Csv, SCHEMA};

/// Per-level edges and absolute differences to the previous level.
fn edge_sweep(cfg: &RunConfig, levels: &[usize], galerkin: bool) -> CliResult<Vec<EdgeLevel>> {
    let q = &cfg.potential;
    let solved = levels
        .par_iter()
        .map(|&level| {
            if galerkin {
                band_edges_galerkin(q, cfg.n_max, &GalerkinConfig::fixed(level))
            } else {
                let disc = DiscriminantConfig {
                    steps: level,
                    ..cfg.discriminant
                };
                band_edges_discriminant(q, cfg.n_max, &disc)
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    let mut out: Vec<EdgeLevel> = Vec::with_capacity(levels.len());
    for (&level, edges) in levels.iter().zip(solved) {
        let diffs = out.last().map(|prev| {
            prev.edges
                .ordered()
                .iter()
                .zip(edges.ordered())
                .map(|(a, b)| (b - a).abs())
                .collect()
        });
        out.push(EdgeLevel {
            level,
            edges,
            diffs,
        });
    }
    Ok(out)
}

struct EdgeLevel {
    level: usize,
    edges: BandEdges,
    /// Against the previous level, in [`BandEdges::ordered`] order.
    diffs: Option<Vec<f64>>,
}

impl EdgeLevel {
    fn max_diff(&self) -> Option<f64> {
        self.diffs
            .as_ref()
            .map(|d| d.iter().copied().fold(0.0, f64::max))
    }
}

struct DiscriminantRow {
    steps: usize,
    lambda: f64,
    value: f64,
    diff: Option<f64>,
    ratio: Option<f64>,
    wronskian_drift: f64,
}

fn discriminant_sweep(cfg: &RunConfig, levels: &[usize]) -> Vec<DiscriminantRow> {
    let mut rows = Vec::new();
    for &lambda in &cfg.lambdas {
        let values: Vec<_> = levels
            .par_iter()
            .map(|&steps| integrate_period(&cfg.potential, lambda, steps))
            .collect();
        let mut prev_value: Option<f64> = None;
        let mut prev_diff: Option<f64> = None;
        for (&steps, m) in levels.iter().zip(values) {
            let value = m.trace();
            let diff = prev_value.map(|p| (value - p).abs());
            let ratio = match (prev_diff, diff) {
                (Some(a), Some(b)) if b > 0.0 => Some(a / b),
                _ => None,
            };
            rows.push(DiscriminantRow {
                steps,
                lambda,
                value,
                diff,
                ratio,
                wronskian_drift: m.wronskian_drift(),
            });
            prev_value = Some(value);
            prev_diff = diff;
        }
    }
    rows
}

fn levels(cfg: &RunConfig) -> CliResult<(Vec<usize>, bool)> {
    let (levels, galerkin) = match cfg.method {
        MethodChoice::Galerkin => (cfg.trunc_levels.clone(), true),
        MethodChoice::Discriminant => (cfg.step_levels.clone(), false),
        MethodChoice::Both => {
            return Err(CliError::Input(
                "converge sweeps one method; pick galerkin (--trunc) or discriminant (--steps)"
                    .into(),
            ))
        }
    };
    if levels.is_empty() {
        return Err(CliError::Input(
            "converge needs a list of levels (--trunc for galerkin, --steps for discriminant)"
                .into(),
        ));
    }
    if !levels.windows(2).all(|w| w[0] < w[1]) {
        return Err(CliError::Input("sweep levels must be increasing".into()));
    }
    if !galerkin && levels[0] < 256 {
        return Err(CliError::Input("discriminant steps must be >= 256".into()));
    }
    Ok((levels, galerkin))
}

pub fn run(cfg: &RunConfig) -> CliResult<()> {
    let (levels, galerkin) = levels(cfg)?;
    let content = if !galerkin && !cfg.lambdas.is_empty() {
        let rows = discriminant_sweep(cfg, &levels);
        match cfg.format {
            Format::Csv => {
                let mut csv = Csv::new(&[
                    "steps",
                    "lambda",
                    "discriminant",
                    "diff",
                    "diff_ratio",
                    "wronskian_drift",
                ]);
                for r in &rows {
                    csv.row([
                        r.steps.to_string(),
                        float(r.lambda),
                        float(r.value),
                        opt_float(r.diff),
                        opt_float(r.ratio),
                        float(r.wronskian_drift),
                    ]);
                }
                csv.finish()
            }
            Format::Json => pretty(&json!({
                "schema": SCHEMA,
                "command": "converge",
                "sweep": "discriminant",
                "potential": potential_json(cfg),
                "rows": rows.iter().map(|r| json!({
                    "steps": r.steps,
                    "lambda": r.lambda,
                    "discriminant": r.value,
                    "diff": r.diff,
                    "diff_ratio": r.ratio,
                    "wronskian_drift": r.wronskian_drift,
                })).collect::<Vec<_>>(),
            })),
        }
    } else {
        let sweep = edge_sweep(cfg, &levels, galerkin)?;
        match cfg.format {
            Format::Csv => {
                let mut csv = Csv::new(&[
                    "n_trunc_or_steps",
                    "n",
                    "lambda_minus",
                    "lambda_plus",
                    "diff_minus",
                    "diff_plus",
                ]);
                for lvl in &sweep {
                    let level = lvl.level.to_string();
                    let diff = |i: usize| opt_float(lvl.diffs.as_ref().map(|d| d[i]));
                    let l0 = float(lvl.edges.lambda0);
                    csv.row([level.as_str(), "0", &l0, &l0, &diff(0), &diff(0)]);
                    for (i, p) in lvl.edges.pairs.iter().enumerate() {
                        csv.row([
                            level.clone(),
                            p.n.to_string(),
                            float(p.minus),
                            float(p.plus),
                            diff(2 * i + 1),
                            diff(2 * i + 2),
                        ]);
                    }
                }
                csv.finish()
            }
            Format::Json => pretty(&json!({
                "schema": SCHEMA,
                "command": "converge",
                "sweep": if galerkin { "galerkin" } else { "discriminant_edges" },
                "potential": potential_json(cfg),
                "n_max": cfg.n_max,
                "levels": sweep.iter().map(|l| json!({
                    "level": l.level,
                    "edges": l.edges.ordered(),
                    "diffs": l.diffs,
                    "max_diff": l.max_diff(),
                })).collect::<Vec<Value>>(),
            })),
        }
    };
    emit(cfg.out.as_deref(), &content)
}
