mod converge;
mod gaps;
mod spectrum;
mod verify;

pub use converge::run as converge;
pub use gaps::run as gaps;
pub use spectrum::run as spectrum;
pub use verify::run as verify;

use hillgaps_core::hill_spectrum::{
    band_edges_discriminant, band_edges_galerkin, compare_edges, BandEdges, CrossValidation,
};
use serde_json::{json, Value};

use crate::config::{MethodChoice, RunConfig};
use crate::error::CliResult;

/// Edges from the selected method(s). With `both`, Galerkin edges are the
/// primary set and the two solves run in parallel.
pub struct Solved {
    pub primary: BandEdges,
    pub cross: Option<CrossValidation>,
}

impl Solved {
    pub fn tables(&self) -> Vec<&BandEdges> {
        match &self.cross {
            Some(cv) => vec![&cv.galerkin, &cv.discriminant],
            None => vec![&self.primary],
        }
    }

    pub fn cross_json(&self) -> Value {
        match &self.cross {
            Some(cv) => json!({
                "max_relative_discrepancy": cv.max_relative_discrepancy,
                "worst_edge": cv.worst_edge,
            }),
            None => Value::Null,
        }
    }
}

pub fn solve(cfg: &RunConfig) -> CliResult<Solved> {
    let q = &cfg.potential;
    let started = std::time::Instant::now();
    let solved = match cfg.method {
        MethodChoice::Galerkin => Solved {
            primary: band_edges_galerkin(q, cfg.n_max, &cfg.galerkin)?,
            cross: None,
        },
        MethodChoice::Discriminant => Solved {
            primary: band_edges_discriminant(q, cfg.n_max, &cfg.discriminant)?,
            cross: None,
        },
        MethodChoice::Both => {
            let (g, d) = rayon::join(
                || band_edges_galerkin(q, cfg.n_max, &cfg.galerkin),
                || band_edges_discriminant(q, cfg.n_max, &cfg.discriminant),
            );
            let cv = compare_edges(g?, d?);
            Solved {
                primary: cv.galerkin.clone(),
                cross: Some(cv),
            }
        }
    };
    log::info!(
        "solved n_max={} with {:?} in {:.3} s",
        cfg.n_max,
        cfg.method,
        started.elapsed().as_secs_f64()
    );
    Ok(solved)
}

pub fn potential_json(cfg: &RunConfig) -> Value {
    json!({
        "mean": cfg.potential.mean(),
        "cutoff": cfg.potential.cutoff(),
    })
}
