use std::fs;

use arcspace_core::arcspace::{arc_space_dimensions, ArcSpaceDimensions};
use arcspace_core::walk::{IdentityOutcome, IdentityReport};
use arcspace_core::{
    bipartite_cycle_basis, check_block_diagonalization, default_arc_system, kernel_l_direct,
    operator_identity_suite, parse_graph6, semisimplicity_report, structure_summary,
    theorem_basis_l, to_graph6, Graph, SemisimplicityReport, SubspaceBasis,
};
use serde::Serialize;

use crate::{AnalyzeArgs, BasisChoice, CliError};

pub const ANALYSIS_SCHEMA_VERSION: u32 = 1;

/// The graph as read, plus its component counts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InputEcho {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    /// Bipartite components.
    pub b: usize,
    /// Connected components.
    pub c: usize,
    pub degrees: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnalysisDocument {
    pub schema_version: u32,
    pub input: InputEcho,
    /// `(tail, head)` of every arc, in coordinate order: the `m` edges
    /// oriented from the smaller endpoint, then their reverses.
    pub arcs: Vec<(usize, usize)>,
    pub dimensions: ArcSpaceDimensions,
    pub block_diagonalization: bool,
    pub bases: Vec<SubspaceBasis>,
    pub identities: Option<IdentityReport>,
    pub semisimplicity: Option<SemisimplicityReport>,
}

fn read_graph(args: &AnalyzeArgs) -> Result<Graph, CliError> {
    match (&args.graph6, &args.edges) {
        (Some(text), None) => Ok(parse_graph6(text)?),
        (None, Some(path)) => {
            let text = fs::read_to_string(path).map_err(|source| CliError::Read {
                path: path.clone(),
                source,
            })?;
            Ok(Graph::parse_edge_list(&text)?)
        }
        _ => Err(CliError::Input(
            "exactly one of --graph6 and --edges is required".into(),
        )),
    }
}

/// Builds the analysis document for one graph. Every exact identity is
/// verified on the way; a failure is reported as [`CliError::Invariant`].
pub fn cmd_analyze(args: &AnalyzeArgs) -> Result<AnalysisDocument, CliError> {
    let g = read_graph(args)?;
    let summary = structure_summary(&g);
    let arcs = default_arc_system(&g);
    let (want_identities, want_semisimple) = match (args.identities, args.semisimple) {
        (false, false) => (true, true),
        flags => flags,
    };

    if args.basis == BasisChoice::Bipartite {
        if let Some(cycle) = summary.odd_cycle() {
            return Err(CliError::Precondition(format!(
                "bipartite basis needs a bipartite graph; odd cycle {cycle:?}"
            )));
        }
    }
    if args.semisimple && g.m() == 0 {
        return Err(CliError::Precondition(
            "semi-simplicity of T needs at least one edge".into(),
        ));
    }

    let dimensions = arc_space_dimensions(&g, &arcs);
    let theory = [
        (
            "dim L = 2m - 2n + b + c",
            dimensions.dim_l == dimensions.expected_dim_l,
        ),
        ("rank B = n - b", dimensions.rank_b + summary.b == g.n()),
        ("rank N = n - c", dimensions.rank_n + summary.c == g.n()),
        (
            "dim K = 2m - dim L",
            dimensions.dim_k + dimensions.dim_l == 2 * g.m(),
        ),
    ];
    if let Some((name, _)) = theory.iter().find(|(_, ok)| !ok) {
        return Err(CliError::Invariant((*name).into()));
    }
    let block_diagonalization = check_block_diagonalization(&g, &arcs);
    if !block_diagonalization {
        return Err(CliError::Invariant(
            "H' [D_out; D_in] H' = 2 diag(B, N)".into(),
        ));
    }

    let direct = kernel_l_direct(&g);
    let mut bases = Vec::new();
    let include = |choice: BasisChoice| args.basis == choice || args.basis == BasisChoice::All;
    if include(BasisChoice::Direct) {
        bases.push(direct.clone());
    }
    if include(BasisChoice::H) {
        bases.push(theorem_basis_l(&g, &arcs));
    }
    if include(BasisChoice::Bipartite) && summary.is_bipartite() {
        bases.push(bipartite_cycle_basis(&g)?);
    }
    for basis in &bases {
        let aligned = basis.reindexed(&arcs)?;
        if !aligned.is_independent() || !aligned.same_span(&direct) {
            return Err(CliError::Invariant(format!(
                "{} basis does not span ker D_out ∩ ker D_in",
                basis.label.as_str()
            )));
        }
    }

    let identities = if want_identities {
        let report = operator_identity_suite(&g, &arcs);
        if let Some((name, _)) = report
            .iter()
            .find(|(_, outcome)| matches!(outcome, IdentityOutcome::Violated))
        {
            return Err(CliError::Invariant(name.clone()));
        }
        Some(report)
    } else {
        None
    };

    let semisimplicity = if want_semisimple && g.m() > 0 {
        let candidates = args.candidates.resolve()?;
        let report = semisimplicity_report(&g, &candidates)
            .map_err(|e| CliError::Invariant(e.to_string()))?;
        Some(report)
    } else {
        None
    };

    Ok(AnalysisDocument {
        schema_version: ANALYSIS_SCHEMA_VERSION,
        input: InputEcho {
            graph6: to_graph6(&g)?,
            n: g.n(),
            m: g.m(),
            b: summary.b,
            c: summary.c,
            degrees: summary.degrees.clone(),
        },
        arcs: arcs.arcs().collect(),
        dimensions,
        block_diagonalization,
        bases,
        identities,
        semisimplicity,
    })
}
