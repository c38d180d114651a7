use std::fs;

use arcspace_core::census::{CensusOptions, Provenance, RecordError, SourceItem};
use arcspace_core::graph6::parse_graph6_stream;
use arcspace_core::{generate_nonisomorphic, run_census, CensusReport, GraphFilter};

use crate::{CensusArgs, CliError};

impl CensusArgs {
    pub fn filter(&self) -> GraphFilter {
        GraphFilter {
            n: self.n,
            connected_only: !self.all,
            min_degree: self.min_degree,
            exclude_degree_one: self.no_degree_one,
            regular_only: self.regular,
        }
    }
}

/// Runs the census over the built-in generator or a graph6 file.
pub fn cmd_census(args: &CensusArgs) -> Result<CensusReport, CliError> {
    let filter = args.filter();
    let candidates = args.candidates.resolve()?;

    let (items, provenance): (Vec<SourceItem>, _) = match &args.source {
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|source| CliError::Read {
                path: path.clone(),
                source,
            })?;
            let items = parse_graph6_stream(&text)
                .map(|(line, record, parsed)| {
                    parsed.map_err(|e| RecordError {
                        line,
                        record,
                        message: e.to_string(),
                    })
                })
                .collect();
            (items, Provenance::ExternalStream)
        }
        None => {
            let graphs = generate_nonisomorphic(&filter)?;
            (graphs.into_iter().map(Ok).collect(), Provenance::BuiltIn)
        }
    };

    let progress = |done: usize| eprintln!("census: {done} graphs evaluated");
    let options = CensusOptions {
        jobs: args.jobs,
        progress: if args.quiet { None } else { Some(&progress) },
    };
    let report = run_census(items, &candidates, &filter, provenance, options);

    if !args.quiet {
        let counts: Vec<String> = report
            .candidate_counts
            .iter()
            .map(|(name, k)| format!("{name}: {k}"))
            .collect();
        eprintln!(
            "census: n={} examined={} non-semisimple={} [{}] errors={}",
            filter.n,
            report.total_examined,
            report.non_semisimple_count,
            counts.join(", "),
            report.errors.len()
        );
    }
    Ok(report)
}
