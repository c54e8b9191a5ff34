use serde_json::json;

use super::{potential_json, solve};
use crate::config::{Format, RunConfig};
use crate::error::CliResult;
use crate::output::{edge_rows, edges_json, emit, pretty, Csv, EDGE_HEADER, SCHEMA};

pub fn run(cfg: &RunConfig) -> CliResult<()> {
    let solved = solve(cfg)?;
    let content = match cfg.format {
        Format::Csv => {
            let mut csv = Csv::new(&EDGE_HEADER);
            for edges in solved.tables() {
                edge_rows(&mut csv, edges);
            }
            if let Some(cv) = &solved.cross {
                eprintln!(
                    "max_relative_discrepancy={:.3e} worst_edge={}",
                    cv.max_relative_discrepancy, cv.worst_edge
                );
            }
            csv.finish()
        }
        Format::Json => pretty(&json!({
            "schema": SCHEMA,
            "command": "spectrum",
            "potential": potential_json(cfg),
            "n_max": cfg.n_max,
            "tables": solved.tables().into_iter().map(edges_json).collect::<Vec<_>>(),
            "cross_validation": solved.cross_json(),
        })),
    };
    emit(cfg.out.as_deref(), &content)
}
