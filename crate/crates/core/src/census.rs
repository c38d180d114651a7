//! Isomorph-free generation of small graphs and the semi-simplicity census
//! of their Bass–Hashimoto matrices.

use std::collections::{BTreeMap, HashMap};
use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;
use serde::Serialize;

use crate::canon::{canonical_bitgraph, BitGraph, CanonicalForm};
use crate::error::{CensusError, WalkError};
use crate::graph::Graph;
use crate::graph6::to_graph6;
use crate::walk::{semisimplicity_report, Candidate, SemisimplicityReport};

/// Largest `n` for the unrestricted built-in generator.
pub const GENERATOR_MAX_N: usize = 8;
/// Largest `n` when the filter asks for regular graphs (degree pruning keeps
/// the search small).
pub const GENERATOR_MAX_N_REGULAR: usize = 10;

pub const CENSUS_SCHEMA_VERSION: u32 = 1;

/// Conjunction of graph predicates used by the generator and the census.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphFilter {
    pub n: usize,
    pub connected_only: bool,
    pub min_degree: usize,
    /// Rejects graphs having some vertex of degree exactly 1 (isolated
    /// vertices are still allowed).
    pub exclude_degree_one: bool,
    pub regular_only: Option<usize>,
}

impl GraphFilter {
    /// Every graph on `n` vertices.
    pub fn all(n: usize) -> Self {
        GraphFilter {
            n,
            connected_only: false,
            min_degree: 0,
            exclude_degree_one: false,
            regular_only: None,
        }
    }

    pub fn connected(n: usize) -> Self {
        GraphFilter {
            connected_only: true,
            ..Self::all(n)
        }
    }

    pub fn accepts(&self, g: &Graph) -> bool {
        if g.n() != self.n {
            return false;
        }
        let degrees = g.degrees();
        if degrees.iter().any(|&d| d < self.min_degree) {
            return false;
        }
        if self.exclude_degree_one && degrees.contains(&1) {
            return false;
        }
        if let Some(k) = self.regular_only {
            if degrees.iter().any(|&d| d != k) {
                return false;
            }
        }
        !self.connected_only || g.is_connected()
    }

    // Degree window that every induced subgraph on `size` vertices of an
    // accepted graph must satisfy.
    fn degree_window(&self, size: usize) -> (usize, usize) {
        let missing = self.n - size;
        match self.regular_only {
            Some(k) => (k.saturating_sub(missing), k),
            None => (
                self.min_degree.saturating_sub(missing),
                self.n.saturating_sub(1),
            ),
        }
    }
}

/// One representative per isomorphism class of graphs accepted by `filter`,
/// sorted by graph6 string.
///
/// Graphs are grown one vertex at a time; every class on `i + 1` vertices
/// arises from some class on `i` vertices by adding a vertex, and the
/// canonical form removes duplicates at each size.
pub fn generate_nonisomorphic(filter: &GraphFilter) -> Result<Vec<Graph>, CensusError> {
    let limit = if filter.regular_only.is_some() {
        GENERATOR_MAX_N_REGULAR
    } else {
        GENERATOR_MAX_N
    };
    if filter.n > limit {
        return Err(CensusError::GeneratorLimit {
            n: filter.n,
            max: GENERATOR_MAX_N,
            max_regular: GENERATOR_MAX_N_REGULAR,
        });
    }
    let mut level: Vec<BitGraph> = vec![BitGraph::empty(0)];
    for size in 1..=filter.n {
        let (lo, hi) = filter.degree_window(size);
        let new_vertex = size - 1;
        let batches: Vec<Vec<(CanonicalForm, BitGraph)>> = level
            .par_iter()
            .map(|base| {
                let mut seen = HashMap::new();
                for subset in 0u32..(1 << new_vertex) {
                    let d = subset.count_ones() as usize;
                    if d < lo || d > hi {
                        continue;
                    }
                    let mut g = *base;
                    g.n = size;
                    for v in 0..new_vertex {
                        if subset >> v & 1 == 1 {
                            g.add_edge(v, new_vertex);
                        }
                    }
                    let ok = (0..size).all(|v| {
                        let d = g.degree(v) as usize;
                        lo <= d && d <= hi
                    });
                    if ok {
                        let (form, canon) = canonical_bitgraph(&g);
                        seen.entry(form).or_insert(canon);
                    }
                }
                seen.into_iter().collect()
            })
            .collect();
        let merged: BTreeMap<CanonicalForm, BitGraph> = batches.into_iter().flatten().collect();
        level = merged.into_values().collect();
    }
    let mut graphs: Vec<(String, Graph)> = level
        .iter()
        .map(BitGraph::to_graph)
        .filter(|g| filter.accepts(g))
        .map(|g| (to_graph6(&g).expect("small graph"), g))
        .collect();
    graphs.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(graphs.into_iter().map(|(_, g)| g).collect())
}

/// Where the census graphs came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    BuiltIn,
    ExternalStream,
}

/// A stream record that could not be turned into a graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RecordError {
    pub line: usize,
    pub record: String,
    pub message: String,
}

pub type SourceItem = Result<Graph, RecordError>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub schema_version: u32,
    pub filter: GraphFilter,
    pub provenance: Provenance,
    pub candidates: Vec<Candidate>,
    pub total_examined: usize,
    pub skipped_by_filter: usize,
    pub non_semisimple_count: usize,
    /// Per candidate `q`: offenders whose minimal polynomial is divisible by `q^2`.
    pub candidate_counts: BTreeMap<String, usize>,
    /// Offending graphs, sorted by graph6.
    pub offenders: Vec<SemisimplicityReport>,
    pub errors: Vec<RecordError>,
}

/// Census options beyond the graph source.
#[derive(Clone, Copy, Default)]
pub struct CensusOptions<'a> {
    /// Worker threads; 0 means the rayon default.
    pub jobs: usize,
    /// Called with the number of graphs finished so far, every 500 graphs.
    pub progress: Option<&'a (dyn Fn(usize) + Sync)>,
}

/// Evaluates the semi-simplicity of `T` for every accepted graph and
/// aggregates the results. Output does not depend on the order of `source`
/// or on the number of workers.
pub fn run_census<I>(
    source: I,
    candidates: &[Candidate],
    filter: &GraphFilter,
    provenance: Provenance,
    options: CensusOptions<'_>,
) -> CensusReport
where
    I: IntoIterator<Item = SourceItem>,
{
    let mut errors = Vec::new();
    let mut graphs = Vec::new();
    let mut skipped = 0;
    for item in source {
        match item {
            Ok(g) if filter.accepts(&g) => graphs.push(g),
            Ok(_) => skipped += 1,
            Err(e) => errors.push(e),
        }
    }

    let done = AtomicUsize::new(0);
    let evaluate = |g: &Graph| -> Result<Option<SemisimplicityReport>, String> {
        let result = match semisimplicity_report(g, candidates) {
            Ok(r) => Ok((!r.is_semisimple).then_some(r)),
            // no arcs: T is the empty matrix, trivially semi-simple
            Err(WalkError::NoEdges) => Ok(None),
            Err(e) => Err(e.to_string()),
        };
        let count = done.fetch_add(1, Ordering::Relaxed) + 1;
        if let Some(cb) = options.progress {
            if count.is_multiple_of(500) {
                cb(count);
            }
        }
        result
    };
    let results: Vec<Result<Option<SemisimplicityReport>, String>> = if options.jobs == 1 {
        graphs.iter().map(evaluate).collect()
    } else {
        let mut builder = rayon::ThreadPoolBuilder::new();
        if options.jobs > 1 {
            builder = builder.num_threads(options.jobs);
        }
        let pool = builder.build().expect("thread pool");
        pool.install(|| graphs.par_iter().map(evaluate).collect())
    };

    let mut offenders = Vec::new();
    for (g, result) in graphs.iter().zip(results) {
        match result {
            Ok(Some(report)) => offenders.push(report),
            Ok(None) => {}
            Err(message) => errors.push(RecordError {
                line: 0,
                record: to_graph6(g).unwrap_or_default(),
                message,
            }),
        }
    }
    offenders.sort_by(|a, b| a.graph6.cmp(&b.graph6));
    errors.sort_by(|a, b| (a.line, &a.record).cmp(&(b.line, &b.record)));

    let candidate_counts = candidates
        .iter()
        .map(|c| {
            let count = offenders
                .iter()
                .filter(|r| r.matched_candidates.contains(&c.name))
                .count();
            (c.name.clone(), count)
        })
        .collect();

    CensusReport {
        schema_version: CENSUS_SCHEMA_VERSION,
        filter: filter.clone(),
        provenance,
        candidates: candidates.to_vec(),
        total_examined: graphs.len(),
        skipped_by_filter: skipped,
        non_semisimple_count: offenders.len(),
        candidate_counts,
        offenders,
        errors,
    }
}
