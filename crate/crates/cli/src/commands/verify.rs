use hillgaps_core::gap_analysis::{
    residuals, verify_marchenko_ostrovskii, verify_membership_consistency,
};
use hillgaps_core::sequence_spaces::{
    check_or_class, check_sandwich, conv_lemma_report, ConvLemmaReport, LemmaTrials, OrGrid,
    SandwichReport, Weight,
};
use rayon::prelude::*;
use serde_json::{json, Value};

use super::gaps::fit_window;
use super::{potential_json, solve};
use crate::config::RunConfig;
use crate::error::{CliError, CliResult};
use crate::input::describe_weight;
use crate::output::{emit, pretty, tail_summary, triangle_json, SCHEMA};

/// Cross-method agreement asserted when both methods run.
const CROSS_METHOD_TOLERANCE: f64 = 1e-8;
/// OR-class window `λ ∈ [1, 2]`, bound `c = 8`, `t <= 10³`.
const OR_WINDOW: (f64, f64, f64) = (2.0, 8.0, 1e3);
const SANDWICH_RANGE: usize = 10_000;
const SOBOLEV_ORDERS: [u32; 3] = [0, 1, 2];

struct Checks(Vec<Value>);

impl Checks {
    fn add(&mut self, name: impl Into<String>, pass: bool, detail: Value) {
        self.0
            .push(json!({ "name": name.into(), "pass": pass, "detail": detail }));
    }

    fn all_pass(&self) -> bool {
        self.0.iter().all(|c| c["pass"] == Value::Bool(true))
    }
}

fn sandwich_json(r: &SandwichReport) -> Value {
    json!({
        "s": r.s,
        "k_max": r.k_max,
        "c_low": r.c_low,
        "c_low_at": r.c_low_at,
        "c_high": r.c_high,
        "c_high_at": r.c_high_at,
        "lower_slope": r.lower_slope,
        "upper_slope": r.upper_slope,
        "pass": r.pass,
    })
}

fn lemma_json(r: &ConvLemmaReport) -> Value {
    json!({
        "s": r.s,
        "r": r.r,
        "t": r.t,
        "regime": r.regime.as_str(),
        "pairs": r.pair_ratios.len(),
        "max_pair_ratio": r.max_pair_ratio,
        "finite_support_bound": r.finite_support_bound,
        "ascent_estimate": r.ascent_estimate,
        "witness": r.witness.iter().map(|(n, v)| json!({"n": n, "ratio": v})).collect::<Vec<_>>(),
        "witness_trend_ok": r.witness_trend_ok,
    })
}

fn weight_blocks(cfg: &RunConfig, w: &Weight, edges: &super::Solved) -> CliResult<(Value, Value)> {
    let (lo, hi) = fit_window(cfg);
    let s = w.nominal_order().unwrap_or(0.0);
    let membership = verify_membership_consistency(&cfg.potential, w, s, &edges.primary, lo..=hi)?;
    let (a, c, t_max) = OR_WINDOW;
    let or = check_or_class(w, a, c, t_max, OrGrid::default())?;
    let sandwich = check_sandwich(w, s, SANDWICH_RANGE)?;
    let label = describe_weight(w);
    let check = json!({
        "weight": label,
        "range": [lo, hi],
        "triangle": triangle_json(&membership.triangle),
    });
    let report = json!({
        "weight": label,
        "membership": {
            "range": [membership.n_lo, membership.n_hi],
            "ratio": membership.ratio,
            "rows": membership.rows.iter().map(|r| json!({
                "m": r.m,
                "gamma_norm": r.gamma_norm,
                "qhat_norm": r.qhat_norm,
                "ratio": r.ratio,
            })).collect::<Vec<_>>(),
        },
        "or_class": {
            "a": a,
            "c": c,
            "t_max": t_max,
            "in_class": or.in_class,
            "max_ratio": or.max_ratio,
            "max_at": [or.max_at.0, or.max_at.1],
            "min_ratio": or.min_ratio,
            "min_at": [or.min_at.0, or.min_at.1],
            "extremal_ratio": or.extremal_ratio(),
        },
        "sandwich": sandwich_json(&sandwich),
    });
    Ok((check, report))
}

pub fn run(cfg: &RunConfig) -> CliResult<()> {
    let solved = solve(cfg)?;
    let q = &cfg.potential;
    let n_max = cfg.n_max;
    let mut checks = Checks(Vec::new());

    checks.add(
        "interlacing",
        solved
            .tables()
            .iter()
            .all(|e| e.check_interlacing().is_ok()),
        Value::Null,
    );
    if let Some(cv) = &solved.cross {
        checks.add(
            "cross_method",
            cv.max_relative_discrepancy < CROSS_METHOD_TOLERANCE,
            solved.cross_json(),
        );
    }
    let report = residuals(q, &solved.primary);
    checks.add(
        "residuals_consistent",
        report.residuals_consistent(q),
        Value::Null,
    );

    let default_weight;
    let weights: &[Weight] = if cfg.weights.is_empty() {
        default_weight = [Weight::power(1.0)?];
        &default_weight
    } else {
        &cfg.weights
    };
    for w in weights {
        let t = report.triangle_check(w, 1..=n_max);
        checks.add(
            format!("triangle {}", describe_weight(w)),
            t.holds,
            triangle_json(&t),
        );
    }
    let blocks = weights
        .par_iter()
        .map(|w| weight_blocks(cfg, w, &solved))
        .collect::<CliResult<Vec<_>>>()?;
    let mut weight_reports = Vec::new();
    for (check, block) in blocks {
        let holds = check["triangle"]["holds"] == Value::Bool(true);
        checks.add(
            format!(
                "membership triangle {}",
                check["weight"].as_str().unwrap_or("")
            ),
            holds,
            check,
        );
        weight_reports.push(block);
    }

    let trials = LemmaTrials {
        seed: LemmaTrials::default().seed.wrapping_add(cfg.seed),
        ..LemmaTrials::default()
    };
    let (unbounded, bounded) = rayon::join(
        || conv_lemma_report(0.0, 0.0, 0.0, &trials),
        || conv_lemma_report(1.0, 1.0, 1.0, &trials),
    );
    let (unbounded, bounded) = (unbounded?, bounded?);
    for r in [&bounded, &unbounded] {
        checks.add(
            format!("conv_lemma ({}, {}, {})", r.s, r.r, r.t),
            r.passed(),
            json!({
                "pairs_within_bound": r.pairs_within_bound,
                "witness_trend_ok": r.witness_trend_ok,
            }),
        );
    }

    let sobolev = SOBOLEV_ORDERS
        .iter()
        .map(|&s| {
            let r = verify_marchenko_ostrovskii(q, s, &solved.primary, 1..=n_max)?;
            let last = r.rows.last();
            Ok(json!({
                "s": s,
                "gap_sum": last.map(|l| l.gap_sum),
                "potential_sum": last.map(|l| l.potential_sum),
                "gap_table": tail_summary(&r.gap_table, false),
                "potential_table": tail_summary(&r.potential_table, false),
                "rows": r.rows.iter().map(|row| json!({
                    "m": row.m,
                    "gap_sum": row.gap_sum,
                    "potential_sum": row.potential_sum,
                })).collect::<Vec<_>>(),
            }))
        })
        .collect::<CliResult<Vec<_>>>()?;

    let passed = checks.all_pass();
    let doc = json!({
        "schema": SCHEMA,
        "command": "verify",
        "potential": potential_json(cfg),
        "n_max": n_max,
        "passed": passed,
        "asserted": checks.0,
        "reports": {
            "weights": weight_reports,
            "marchenko_ostrovskii": sobolev,
            "conv_lemma": [lemma_json(&unbounded), lemma_json(&bounded)],
            "max_pairing_deviation": report.max_pairing_deviation(),
        },
    });
    emit(cfg.out.as_deref(), &pretty(&doc))?;
    if passed {
        Ok(())
    } else {
        Err(CliError::Invariant(
            "at least one asserted check failed; see the `asserted` block".into(),
        ))
    }
}
