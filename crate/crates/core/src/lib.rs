//! Exact computations on the arc space of a graph's digraph.
//!
//! For a simple graph `G` with `n` vertices and `m` edges, the digraph `X`
//! replaces every edge by two opposite arcs. This crate builds the head and
//! tail incidence matrices of `X` over the rationals, computes the subspace
//! `L = ker(D_out) ∩ ker(D_in)` of `Q^{2m}` in several independent ways,
//! constructs the walk operators indexed by arcs (reversal `P`, the
//! arc-reversal transition matrix `U`, the Bass–Hashimoto matrix `T` and the
//! positive support `S⁺(U)`), and decides whether `T` is semi-simple from
//! the squarefreeness of its minimal polynomial.
//!
//! All arithmetic is exact; identities are checked with `==`.

pub mod arcspace;
pub mod canon;
pub mod census;
pub mod error;
pub mod exact;
pub mod graph;
pub mod graph6;
pub mod walk;

pub use arcspace::{
    bipartite_cycle_basis, build_incidences, check_block_diagonalization, kernel_l_direct,
    signed_cycle_vector, subspace_k, theorem_basis_l, IncidenceBundle, SubspaceBasis,
};
pub use census::{generate_nonisomorphic, run_census, CensusReport, GraphFilter};
pub use error::{CensusError, ExactError, GraphError, WalkError};
pub use exact::{RatMatrix, RatPoly, Rational};
pub use graph::{
    default_arc_system, fundamental_cycles, structure_summary, ArcSystem, Graph, OrientationKind,
    OrientedCycle, StructureSummary,
};
pub use graph6::{parse_graph6, to_graph6};
pub use walk::{
    build_walk_operators, operator_identity_suite, semisimplicity_report, Candidate,
    SemisimplicityReport, WalkOperators,
};
