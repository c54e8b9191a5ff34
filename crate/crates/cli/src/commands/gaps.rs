use std::fs;

use hillgaps_core::gap_analysis::{decay_slope, default_n0, residuals, GapReport};
use serde_json::{json, Value};

use super::{potential_json, solve};
use crate::config::{Format, RunConfig};
use crate::error::{CliError, CliResult};
use crate::input::describe_weight;
use crate::output::{
    emit, fit_json, gap_csv, gap_rows_json, pretty, tail_csv, tail_summary, triangle_json, SCHEMA,
};

/// Fit window: `--range` or `[n0, n_max]`.
pub fn fit_window(cfg: &RunConfig) -> (usize, usize) {
    match &cfg.range {
        Some(r) => (*r.start(), *r.end()),
        None => (default_n0(&cfg.potential).min(cfg.n_max), cfg.n_max),
    }
}

fn summary(cfg: &RunConfig, report: &GapReport, cross: Value, with_rows: bool) -> Value {
    let (lo, hi) = fit_window(cfg);
    let q = &cfg.potential;
    let weights: Vec<Value> = cfg
        .weights
        .iter()
        .zip(&report.tables)
        .map(|(w, table)| {
            json!({
                "weight": describe_weight(w),
                "table": tail_summary(table, with_rows),
                "triangle": triangle_json(&report.triangle_check(w, 1..=cfg.n_max)),
                "triangle_window": triangle_json(&report.triangle_check(w, lo..=hi)),
            })
        })
        .collect();
    let rho1 = report.entries.first().map(|e| e.rho);
    let clamped: Vec<usize> = report
        .entries
        .iter()
        .filter(|e| e.clamped)
        .map(|e| e.n)
        .collect();
    json!({
        "schema": SCHEMA,
        "command": "gaps",
        "potential": potential_json(cfg),
        "method": report_method(cfg),
        "n_max": cfg.n_max,
        "fit_range": [lo, hi],
        "slopes": {
            "resid_plain": fit_json(decay_slope(&report.resid_plain(), lo, hi)),
            "gamma": fit_json(decay_slope(&report.gamma(), lo, hi)),
            "resid_corrected": fit_json(decay_slope(&report.resid_corrected(), lo, hi)),
        },
        "rho_1": rho1.map(|z| json!({"re": z.re, "im": z.im})),
        "max_pairing_deviation": report.max_pairing_deviation(),
        "residuals_consistent": report.residuals_consistent(q),
        "clamped": clamped,
        "cross_validation": cross,
        "weights": weights,
    })
}

fn report_method(cfg: &RunConfig) -> &'static str {
    match cfg.method {
        crate::config::MethodChoice::Discriminant => "discriminant",
        _ => "galerkin",
    }
}

pub fn run(cfg: &RunConfig) -> CliResult<()> {
    let solved = solve(cfg)?;
    let mut report = residuals(&cfg.potential, &solved.primary);
    for w in &cfg.weights {
        report.add_weight_table(w, 1..=cfg.n_max)?;
    }
    match (cfg.format, &cfg.out) {
        (Format::Json, out) => {
            let mut doc = summary(cfg, &report, solved.cross_json(), true);
            doc["entries"] = gap_rows_json(&report);
            emit(out.as_deref(), &pretty(&doc))
        }
        (Format::Csv, None) => emit(None, &gap_csv(&report)),
        (Format::Csv, Some(dir)) => {
            fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
            emit(Some(&dir.join("gaps.csv")), &gap_csv(&report))?;
            for (i, table) in report.tables.iter().enumerate() {
                emit(
                    Some(&dir.join(format!("weight_{}.csv", i + 1))),
                    &tail_csv(table),
                )?;
            }
            let doc = summary(cfg, &report, solved.cross_json(), false);
            emit(Some(&dir.join("summary.json")), &pretty(&doc))
        }
    }
}
