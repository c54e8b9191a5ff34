use std::fs;
use std::io::Write;
use std::path::Path;

use hillgaps_core::gap_analysis::{DecayFit, GapReport, TailTable, TriangleCheck};
use hillgaps_core::hill_spectrum::BandEdges;
use serde_json::{json, Value};

use crate::error::{CliError, CliResult};

pub const SCHEMA: &str = "hill-gaps/1";

/// 17 significant digits, round-trip exact.
pub fn float(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn opt_float(x: Option<f64>) -> String {
    x.map(float).unwrap_or_default()
}

pub struct Csv {
    writer: csv::Writer<Vec<u8>>,
}

impl Csv {
    pub fn new(header: &[&str]) -> Self {
        let mut writer = csv::Writer::from_writer(Vec::new());
        writer.write_record(header).expect("in-memory write");
        Self { writer }
    }

    pub fn row<I, S>(&mut self, fields: I)
    where
        I: IntoIterator<Item = S>,
        S: AsRef<[u8]>,
    {
        self.writer.write_record(fields).expect("in-memory write");
    }

    pub fn finish(self) -> String {
        let bytes = self.writer.into_inner().expect("in-memory flush");
        String::from_utf8(bytes).expect("CSV fields are UTF-8")
    }
}

pub const EDGE_HEADER: [&str; 7] = [
    "n",
    "parity",
    "lambda_minus",
    "lambda_plus",
    "gap",
    "method",
    "n_trunc_or_steps",
];

pub fn edge_rows(csv: &mut Csv, edges: &BandEdges) {
    let method = edges.method.name();
    let level = edges.method.resolution().to_string();
    let l0 = float(edges.lambda0);
    csv.row(["0", "periodic", &l0, &l0, &float(0.0), method, &level]);
    for p in &edges.pairs {
        csv.row([
            &p.n.to_string(),
            p.parity.as_str(),
            &float(p.minus),
            &float(p.plus),
            &float(p.gap()),
            method,
            &level,
        ]);
    }
}

pub fn edges_json(edges: &BandEdges) -> Value {
    json!({
        "method": edges.method.name(),
        "n_trunc_or_steps": edges.method.resolution(),
        "lambda0": edges.lambda0,
        "pairs": edges.pairs.iter().map(|p| json!({
            "n": p.n,
            "parity": p.parity.as_str(),
            "lambda_minus": p.minus,
            "lambda_plus": p.plus,
            "gap": p.gap(),
        })).collect::<Vec<_>>(),
    })
}

pub fn gap_csv(report: &GapReport) -> String {
    let mut csv = Csv::new(&[
        "n",
        "gamma",
        "two_qhat",
        "rho_re",
        "rho_im",
        "resid_plain",
        "resid_corrected",
    ]);
    for e in &report.entries {
        csv.row([
            e.n.to_string(),
            float(e.gamma),
            float(e.two_qhat),
            float(e.rho.re),
            float(e.rho.im),
            float(e.resid_plain),
            float(e.resid_corrected),
        ]);
    }
    csv.finish()
}

pub fn gap_rows_json(report: &GapReport) -> Value {
    report
        .entries
        .iter()
        .map(|e| {
            json!({
                "n": e.n,
                "gamma": e.gamma,
                "clamped": e.clamped,
                "two_qhat": e.two_qhat,
                "rho_re": e.rho.re,
                "rho_im": e.rho.im,
                "resid_plain": e.resid_plain,
                "resid_corrected": e.resid_corrected,
                "paired_residual": e.paired_residual,
            })
        })
        .collect()
}

pub fn tail_csv(table: &TailTable) -> String {
    let mut csv = Csv::new(&["m", "partial_sum", "increment"]);
    for r in &table.rows {
        csv.row([r.m.to_string(), float(r.partial_sum), float(r.increment)]);
    }
    csv.finish()
}

pub fn tail_summary(table: &TailTable, with_rows: bool) -> Value {
    let mut v = json!({
        "decreasing_from": table.decreasing_from,
        "final_relative_increment": table.final_relative_increment,
        "plateau": table.plateau,
    });
    if with_rows {
        v["rows"] = table
            .rows
            .iter()
            .map(|r| {
                json!({
                    "m": r.m,
                    "partial_sum": r.partial_sum,
                    "increment": r.increment,
                    "increment_ratio": r.increment_ratio,
                })
            })
            .collect();
    }
    v
}

pub fn fit_json(fit: Result<DecayFit, hillgaps_core::Error>) -> Value {
    match fit {
        Ok(f) => json!({
            "slope": f.slope,
            "intercept": f.intercept,
            "rms": f.rms,
            "n_lo": f.n_lo,
            "n_hi": f.n_hi,
            "used": f.used,
            "zeros_excluded": f.zeros_excluded,
        }),
        Err(e) => json!({ "error": e.to_string() }),
    }
}

pub fn triangle_json(t: &TriangleCheck) -> Value {
    json!({
        "gamma_norm": t.gamma_norm,
        "two_qhat_norm": t.two_qhat_norm,
        "resid_norm": t.resid_norm,
        "holds": t.holds,
    })
}

pub fn pretty(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("JSON values serialize");
    s.push('\n');
    s
}

/// Writes `content` to `out`, or to stdout when no path is given.
pub fn emit(out: Option<&Path>, content: &str) -> CliResult<()> {
    match out {
        Some(path) => fs::write(path, content).map_err(|e| CliError::io(path, e)),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(content.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| CliError::io("<stdout>", e))
        }
    }
}
