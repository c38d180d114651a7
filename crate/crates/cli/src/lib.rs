//! Library side of the `arcspace` command: argument definitions, the two
//! subcommands, and their JSON documents. `main.rs` only handles process
//! I/O and exit codes.

mod analyze;
mod census;
mod error;

use std::path::PathBuf;

use arcspace_core::exact::parse_rational;
use arcspace_core::{Candidate, RatPoly};
use clap::{Args, Parser, Subcommand, ValueEnum};

pub use analyze::{cmd_analyze, AnalysisDocument, InputEcho, ANALYSIS_SCHEMA_VERSION};
pub use census::cmd_census;
pub use error::CliError;

#[derive(Debug, Parser)]
#[command(
    name = "arcspace",
    version,
    about = "Exact arc-space and walk-operator analysis of graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Analyse a single graph.
    Analyze(AnalyzeArgs),
    /// Semi-simplicity census over all graphs of a given order.
    Census(CensusArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BasisChoice {
    Direct,
    H,
    Bipartite,
    All,
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("input").required(true).args(["graph6", "edges"])))]
pub struct AnalyzeArgs {
    /// Graph as a graph6 record.
    #[arg(long)]
    pub graph6: Option<String>,
    /// Graph as an edge-list file (`n m` header, then `u v` per line).
    #[arg(long)]
    pub edges: Option<PathBuf>,
    /// Bases of the arc-space kernel to construct.
    #[arg(long, value_enum, default_value = "direct")]
    pub basis: BasisChoice,
    /// Run the operator identity suite.
    #[arg(long)]
    pub identities: bool,
    /// Compute the minimal polynomial of T and test it for squarefreeness.
    #[arg(long)]
    pub semisimple: bool,
    #[command(flatten)]
    pub candidates: CandidateArgs,
    /// Write the JSON document here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CensusArgs {
    /// Vertex count of the graphs to examine.
    #[arg(long = "census-n")]
    pub n: usize,
    /// Examine connected graphs only (default).
    #[arg(long, conflicts_with = "all")]
    pub connected: bool,
    /// Examine all graphs, connected or not.
    #[arg(long)]
    pub all: bool,
    /// Skip graphs having a vertex of degree exactly 1.
    #[arg(long)]
    pub no_degree_one: bool,
    /// Skip graphs with a vertex of degree below this bound.
    #[arg(long, default_value_t = 0)]
    pub min_degree: usize,
    /// Keep only k-regular graphs.
    #[arg(long, value_name = "K")]
    pub regular: Option<usize>,
    /// Read graphs from a graph6 file instead of the built-in generator.
    #[arg(long)]
    pub source: Option<PathBuf>,
    /// Worker threads (0 = one per core).
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,
    #[command(flatten)]
    pub candidates: CandidateArgs,
    /// Write the JSON document here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Suppress progress and summary lines on stderr.
    #[arg(long)]
    pub quiet: bool,
}

#[derive(Debug, Args)]
pub struct CandidateArgs {
    /// Repeated factors to look for: `default`, or polynomials given by
    /// comma-separated coefficients from the leading one down (`1,1,2` is
    /// x^2 + x + 2), separated by `;` or by repeating the flag.
    #[arg(long = "candidates", value_name = "LIST")]
    pub specs: Vec<String>,
}

impl CandidateArgs {
    pub fn resolve(&self) -> Result<Vec<Candidate>, CliError> {
        if self.specs.is_empty() {
            return Ok(Candidate::defaults());
        }
        let mut out: Vec<Candidate> = Vec::new();
        for spec in &self.specs {
            for item in spec.split(';').map(str::trim).filter(|s| !s.is_empty()) {
                let new = if item == "default" {
                    Candidate::defaults()
                } else {
                    vec![Candidate::new(parse_candidate(item)?)]
                };
                for c in new {
                    if !out.iter().any(|o| o.poly == c.poly) {
                        out.push(c);
                    }
                }
            }
        }
        Ok(out)
    }
}

/// Parses descending coefficients such as `1,0,2` (x^2 + 2).
pub fn parse_candidate(text: &str) -> Result<RatPoly, CliError> {
    let mut coeffs = text
        .split(',')
        .map(|tok| {
            parse_rational(tok).ok_or_else(|| {
                CliError::Input(format!("bad coefficient `{}` in `{text}`", tok.trim()))
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    coeffs.reverse();
    let poly = RatPoly::new(coeffs);
    match poly.degree() {
        Some(d) if d >= 1 => Ok(poly),
        _ => Err(CliError::Input(format!(
            "candidate `{text}` must have degree at least 1"
        ))),
    }
}

/// Runs a parsed command line and returns the JSON document it produces.
pub fn run(cli: &Cli) -> Result<String, CliError> {
    match &cli.command {
        Command::Analyze(args) => {
            let doc = cmd_analyze(args)?;
            Ok(to_json(&doc))
        }
        Command::Census(args) => {
            let report = cmd_census(args)?;
            Ok(to_json(&report))
        }
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents serialise");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn candidate_syntax() {
        let p = parse_candidate("1,1,2").unwrap();
        assert_eq!(p, RatPoly::from_i64(&[2, 1, 1]));
        assert_eq!(
            parse_candidate(" 1 , 0 , -1/2 ").unwrap().to_string(),
            "x^2 - 1/2"
        );
        assert!(parse_candidate("1,x").is_err());
        assert!(parse_candidate("5").is_err());
        assert!(parse_candidate("0,0").is_err());
    }

    #[test]
    fn candidate_lists() {
        let args = CandidateArgs {
            specs: vec!["1,0,2;1,1,1".into(), "default".into()],
        };
        let names: Vec<String> = args
            .resolve()
            .unwrap()
            .into_iter()
            .map(|c| c.name)
            .collect();
        assert_eq!(names, ["x^2 + 2", "x^2 + x + 1", "x^2 + x + 2"]);
        let none = CandidateArgs { specs: vec![] };
        assert_eq!(none.resolve().unwrap(), Candidate::defaults());
    }

    #[test]
    fn clap_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }

    #[test]
    fn input_is_required_and_exclusive() {
        assert!(Cli::try_parse_from(["arcspace", "analyze"]).is_err());
        assert!(
            Cli::try_parse_from(["arcspace", "analyze", "--graph6", "C~", "--edges", "x"]).is_err()
        );
        assert!(Cli::try_parse_from([
            "arcspace",
            "census",
            "--census-n",
            "5",
            "--all",
            "--connected"
        ])
        .is_err());
    }
}
