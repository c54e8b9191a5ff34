use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hillgaps_core::hill_spectrum::{DiscriminantConfig, GalerkinConfig};
use hillgaps_core::potential::Potential;
use hillgaps_core::sequence_spaces::Weight;

use crate::error::{CliError, CliResult};
use crate::input;

#[derive(Debug, Parser)]
#[command(
    name = "hillgaps",
    version,
    about = "Band edges and gap asymptotics of Hill operators with periodic potentials"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Band edges as a table.
    Spectrum(Common),
    /// Gap lengths, residuals, weighted partial sums and decay fits.
    Gaps(Common),
    /// Finite-sum invariants and asymptotic report blocks as one JSON document.
    Verify(Common),
    /// Edge or discriminant values across truncations or step counts.
    Converge(Common),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodChoice {
    Galerkin,
    Discriminant,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Potential file (JSON).
    #[arg(long)]
    pub potential: PathBuf,
    /// Weight descriptor file (JSON); repeatable.
    #[arg(long)]
    pub weight: Vec<PathBuf>,
    /// Number of gaps.
    #[arg(long, default_value_t = 10)]
    pub nmax: usize,
    #[arg(long, value_enum, default_value_t = MethodChoice::Galerkin)]
    pub method: MethodChoice,
    /// Galerkin truncation; a comma-separated list for `converge`.
    #[arg(long, value_delimiter = ',')]
    pub trunc: Vec<usize>,
    /// Integrator steps per period; a comma-separated list for `converge`.
    #[arg(long, value_delimiter = ',')]
    pub steps: Vec<usize>,
    /// Asymptotic index range for fits and membership tables.
    #[arg(long, value_name = "LO:HI", value_parser = parse_range)]
    pub range: Option<(usize, usize)>,
    /// Energies for the discriminant sweep of `converge`.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub lambda: Vec<f64>,
    /// Output file (a directory for `gaps --format csv`).
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Seed for generated potentials and random trials.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let (lo, hi) = s
        .split_once(':')
        .ok_or_else(|| format!("expected LO:HI, got `{s}`"))?;
    let lo: usize = lo.trim().parse().map_err(|e| format!("LO: {e}"))?;
    let hi: usize = hi.trim().parse().map_err(|e| format!("HI: {e}"))?;
    if lo < 1 || hi < lo {
        return Err(format!("need 1 <= LO <= HI, got {lo}:{hi}"));
    }
    Ok((lo, hi))
}

/// Validated inputs for one run.
#[derive(Debug)]
pub struct RunConfig {
    pub potential: Potential,
    pub weights: Vec<Weight>,
    pub n_max: usize,
    pub method: MethodChoice,
    pub galerkin: GalerkinConfig,
    pub discriminant: DiscriminantConfig,
    pub trunc_levels: Vec<usize>,
    pub step_levels: Vec<usize>,
    pub range: Option<RangeInclusive<usize>>,
    pub lambdas: Vec<f64>,
    pub out: Option<PathBuf>,
    pub format: Format,
    pub seed: u64,
}

impl RunConfig {
    /// Reads input files and checks flag combinations. `sweep` allows lists
    /// for `--trunc` and `--steps`.
    pub fn load(args: Common, sweep: bool) -> CliResult<Self> {
        if args.nmax < 1 {
            return Err(CliError::Input("--nmax must be >= 1".into()));
        }
        if !sweep && (args.trunc.len() > 1 || args.steps.len() > 1) {
            return Err(CliError::Input(
                "--trunc and --steps take a single value outside `converge`".into(),
            ));
        }
        if let Some((_, hi)) = args.range {
            if hi > args.nmax {
                return Err(CliError::Input(format!(
                    "--range end {hi} exceeds --nmax {}",
                    args.nmax
                )));
            }
        }
        if args.lambda.iter().any(|l| !l.is_finite()) {
            return Err(CliError::Input("--lambda values must be finite".into()));
        }
        let potential = input::read_potential(&args.potential, args.seed)?;
        let weights = args
            .weight
            .iter()
            .map(|p| input::read_weight(p))
            .collect::<CliResult<Vec<_>>>()?;
        let galerkin = match args.trunc.first() {
            Some(&n) => GalerkinConfig::fixed(n),
            None => GalerkinConfig::default(),
        };
        let discriminant = match args.steps.first() {
            Some(&s) => DiscriminantConfig::with_steps(s),
            None => DiscriminantConfig::default(),
        };
        discriminant.validate()?;
        Ok(Self {
            potential,
            weights,
            n_max: args.nmax,
            method: args.method,
            galerkin,
            discriminant,
            trunc_levels: args.trunc,
            step_levels: args.steps,
            range: args.range.map(|(lo, hi)| lo..=hi),
            lambdas: args.lambda,
            out: args.out,
            format: args.format.unwrap_or(Format::Csv),
            seed: args.seed,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn cli_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("8:28"), Ok((8, 28)));
        assert!(parse_range("0:3").is_err());
        assert!(parse_range("5:4").is_err());
        assert!(parse_range("5").is_err());
    }

    #[test]
    fn lists_parse() {
        let cli = Cli::try_parse_from([
            "hillgaps",
            "converge",
            "--potential",
            "q.json",
            "--trunc",
            "32,64,128",
            "--lambda=-3.5,10",
        ])
        .unwrap();
        let Command::Converge(c) = cli.command else {
            panic!()
        };
        assert_eq!(c.trunc, [32, 64, 128]);
        assert_eq!(c.lambda, [-3.5, 10.0]);
        assert_eq!(c.seed, 0);
    }
}
