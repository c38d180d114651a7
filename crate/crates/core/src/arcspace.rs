//! Incidence matrices of a graph's digraph and the arc-space subspace
//! `L = ker(D_out) ∩ ker(D_in)`.
//!
//! Three constructions of `L` are provided and are expected to agree:
//! a direct kernel of the stacked incidence matrix, the image of
//! `ker B ⊕ ker N` under the unnormalised transform `(I I; I -I)`, and, for
//! bipartite graphs, the lifts of fundamental cycles.

use num_traits::{One, Zero};
use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::error::GraphError;
use crate::exact::{format_rational, rank_and_kernel, rat, RatMatrix, Rational};
use crate::graph::{
    default_arc_system, fundamental_cycles, structure_summary, ArcSystem, Graph, OrientationKind,
    OrientedCycle, StructureSummary,
};

/// All incidence-type matrices of a graph under one arc ordering.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidenceBundle {
    /// `n x 2m`: entry 1 when the vertex is the head of the arc.
    pub din_x: RatMatrix,
    /// `n x 2m`: entry 1 when the vertex is the tail of the arc.
    pub dout_x: RatMatrix,
    /// `n x m` head incidence of the orientation.
    pub dh: RatMatrix,
    /// `n x m` tail incidence of the orientation.
    pub dt: RatMatrix,
    /// Signless incidence `Dt + Dh`.
    pub b: RatMatrix,
    /// Signed incidence `Dt - Dh`.
    pub n: RatMatrix,
    pub adjacency: RatMatrix,
}

impl IncidenceBundle {
    /// `[D_out ; D_in]`, the `2n x 2m` matrix whose kernel is `L`.
    pub fn stacked(&self) -> RatMatrix {
        self.dout_x.vstack(&self.din_x)
    }
}

pub fn build_incidences(g: &Graph, arcs: &ArcSystem) -> IncidenceBundle {
    let n = g.n();
    let m = arcs.m();
    let indicator = |b: bool| if b { Rational::one() } else { Rational::zero() };
    let din_x = RatMatrix::from_fn(n, 2 * m, |v, j| indicator(arcs.head(j) == v));
    let dout_x = RatMatrix::from_fn(n, 2 * m, |v, j| indicator(arcs.tail(j) == v));
    let dh = RatMatrix::from_fn(n, m, |v, j| indicator(arcs.head(j) == v));
    let dt = RatMatrix::from_fn(n, m, |v, j| indicator(arcs.tail(j) == v));
    let adj = g.adjacency();
    IncidenceBundle {
        b: dt.add(&dh),
        n: dt.sub(&dh),
        adjacency: RatMatrix::from_fn(n, n, |i, j| indicator(adj[i][j])),
        din_x,
        dout_x,
        dh,
        dt,
    }
}

/// Which construction produced a [`SubspaceBasis`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisLabel {
    DirectKernel,
    HTransform,
    BipartiteCycles,
    KComplement,
}

impl BasisLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            BasisLabel::DirectKernel => "direct-kernel",
            BasisLabel::HTransform => "h-transform",
            BasisLabel::BipartiteCycles => "bipartite-cycles",
            BasisLabel::KComplement => "K-complement",
        }
    }
}

/// A basis of a subspace of the arc space, stored as the columns of a
/// `2m x k` matrix, together with the arc ordering its coordinates refer to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceBasis {
    pub label: BasisLabel,
    /// `(tail, head)` of each coordinate.
    pub arcs: Vec<(usize, usize)>,
    pub vectors: RatMatrix,
}

impl SubspaceBasis {
    fn new(label: BasisLabel, arcs: &ArcSystem, vectors: RatMatrix) -> Self {
        debug_assert_eq!(vectors.rows(), arcs.num_arcs());
        SubspaceBasis {
            label,
            arcs: arcs.arcs().collect(),
            vectors,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.vectors.rows()
    }

    pub fn dim(&self) -> usize {
        self.vectors.cols()
    }

    pub fn is_independent(&self) -> bool {
        self.vectors.rank() == self.dim()
    }

    /// Same vectors with coordinates permuted into the ordering of `target`.
    pub fn reindexed(&self, target: &ArcSystem) -> Result<SubspaceBasis, GraphError> {
        let mut position = Vec::with_capacity(self.arcs.len());
        for &(t, h) in &self.arcs {
            position.push(
                target
                    .arc_index(t, h)
                    .ok_or(GraphError::MissingEdge(t, h))?,
            );
        }
        if target.num_arcs() != self.arcs.len() {
            return Err(GraphError::InvalidCycle(
                "arc systems have different sizes".into(),
            ));
        }
        let mut vectors = RatMatrix::zeros(self.ambient_dim(), self.dim());
        for (i, &p) in position.iter().enumerate() {
            for j in 0..self.dim() {
                vectors[(p, j)] = self.vectors[(i, j)].clone();
            }
        }
        Ok(SubspaceBasis::new(self.label, target, vectors))
    }

    /// `true` when both bases span the same subspace (same arc ordering assumed).
    pub fn same_span(&self, other: &SubspaceBasis) -> bool {
        same_column_span(&self.vectors, &other.vectors)
    }
}

/// Column spans agree iff both ranks equal the rank of the concatenation.
pub fn same_column_span(a: &RatMatrix, b: &RatMatrix) -> bool {
    if a.rows() != b.rows() {
        return false;
    }
    let ra = a.rank();
    ra == b.rank() && ra == a.hstack(b).rank()
}

/// `true` when every column of `inner` lies in the column span of `outer`.
pub fn column_span_contains(outer: &RatMatrix, inner: &RatMatrix) -> bool {
    outer.rank() == outer.hstack(inner).rank()
}

impl Serialize for SubspaceBasis {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let vectors: Vec<Vec<String>> = (0..self.dim())
            .map(|j| self.vectors.column(j).iter().map(format_rational).collect())
            .collect();
        let mut st = s.serialize_struct("SubspaceBasis", 5)?;
        st.serialize_field("label", self.label.as_str())?;
        st.serialize_field("ambient_dim", &self.ambient_dim())?;
        st.serialize_field("dim", &self.dim())?;
        st.serialize_field("arcs", &self.arcs)?;
        st.serialize_field("vectors", &vectors)?;
        st.end()
    }
}

/// `2m - 2n + b + c`.
pub fn expected_dim_l(g: &Graph, summary: &StructureSummary) -> usize {
    let value = 2 * g.m() + summary.b + summary.c;
    value
        .checked_sub(2 * g.n())
        .expect("2m - 2n + b + c is never negative")
}

/// `L` as the kernel of `[D_out ; D_in]`, under the lexicographic arc order.
pub fn kernel_l_direct(g: &Graph) -> SubspaceBasis {
    kernel_l_for(g, &default_arc_system(g))
}

/// `L` as the kernel of `[D_out ; D_in]` under a given arc order.
pub fn kernel_l_for(g: &Graph, arcs: &ArcSystem) -> SubspaceBasis {
    let inc = build_incidences(g, arcs);
    let (_, kernel) = rank_and_kernel(&inc.stacked());
    SubspaceBasis::new(BasisLabel::DirectKernel, arcs, kernel)
}

/// `L` from kernels of `B` and `N`: each `v ∈ ker B` gives `(v; v)` and each
/// `w ∈ ker N` gives `(w; -w)` on the (forward; reverse) arc blocks.
pub fn theorem_basis_l(g: &Graph, arcs: &ArcSystem) -> SubspaceBasis {
    let inc = build_incidences(g, arcs);
    let m = arcs.m();
    let (_, ker_b) = rank_and_kernel(&inc.b);
    let (_, ker_n) = rank_and_kernel(&inc.n);
    let kb = ker_b.cols();
    let kn = ker_n.cols();
    let vectors = RatMatrix::from_fn(2 * m, kb + kn, |i, j| {
        let (block, row) = if i < m { (false, i) } else { (true, i - m) };
        if j < kb {
            ker_b[(row, j)].clone()
        } else {
            let w = &ker_n[(row, j - kb)];
            if block {
                -w.clone()
            } else {
                w.clone()
            }
        }
    });
    SubspaceBasis::new(BasisLabel::HTransform, arcs, vectors)
}

/// Signed characteristic vector of a cycle in `Q^m`: +1 on edges traversed
/// along their orientation, -1 on edges traversed against it.
pub fn signed_cycle_vector(
    cycle: &OrientedCycle,
    arcs: &ArcSystem,
) -> Result<Vec<Rational>, GraphError> {
    let m = arcs.m();
    let mut z = vec![Rational::zero(); m];
    for (u, v) in cycle.arcs() {
        let idx = arcs.arc_index(u, v).ok_or(GraphError::MissingEdge(u, v))?;
        if idx < m {
            z[idx] = rat(1);
        } else {
            z[idx - m] = rat(-1);
        }
    }
    Ok(z)
}

/// Basis `{y_C, w_C}` of `L` for a bipartite graph, one pair per fundamental
/// cycle, under the orientation with every tail in `Y` and every head in `Z`.
///
/// With `z` the signed vector of `C`: `y_C = (z; -z)` and `w_C = (z; z)`.
pub fn bipartite_cycle_basis(g: &Graph) -> Result<SubspaceBasis, GraphError> {
    let arcs = ArcSystem::new(g, OrientationKind::Bipartite)?;
    let m = arcs.m();
    let mut columns = Vec::new();
    for cycle in fundamental_cycles(g, &arcs) {
        let z = signed_cycle_vector(&cycle, &arcs)?;
        let y: Vec<Rational> = z.iter().cloned().chain(z.iter().map(|x| -x)).collect();
        let w: Vec<Rational> = z.iter().cloned().chain(z.iter().cloned()).collect();
        columns.push(y);
        columns.push(w);
    }
    let vectors = RatMatrix::from_columns(2 * m, &columns);
    Ok(SubspaceBasis::new(
        BasisLabel::BipartiteCycles,
        &arcs,
        vectors,
    ))
}

/// Row space of `D_in` plus row space of `D_out`, inside `Q^{2m}`.
pub fn subspace_k(g: &Graph, arcs: &ArcSystem) -> SubspaceBasis {
    let inc = build_incidences(g, arcs);
    let vectors = inc.din_x.vstack(&inc.dout_x).row_space_basis();
    SubspaceBasis::new(BasisLabel::KComplement, arcs, vectors)
}

/// `H' [D_out; D_in] H' = 2 diag(B, N)` with `H' = (I I; I -I)` sized `2n`
/// on the left and `2m` on the right.
pub fn check_block_diagonalization(g: &Graph, arcs: &ArcSystem) -> bool {
    let inc = build_incidences(g, arcs);
    let h_left = h_transform(g.n());
    let h_right = h_transform(arcs.m());
    let lhs = h_left.mul(&inc.stacked()).mul(&h_right);
    let rhs = inc.b.block_diag(&inc.n).scale(&rat(2));
    lhs == rhs
}

/// Unnormalised `(I I; I -I)` of size `2k`.
pub fn h_transform(k: usize) -> RatMatrix {
    RatMatrix::from_fn(2 * k, 2 * k, |i, j| {
        if i % k != j % k {
            Rational::zero()
        } else if i >= k && j >= k {
            rat(-1)
        } else {
            rat(1)
        }
    })
}

/// Convenience bundle of the dimensions that appear throughout.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct ArcSpaceDimensions {
    pub rank_b: usize,
    pub rank_n: usize,
    pub dim_l: usize,
    pub dim_k: usize,
    pub expected_dim_l: usize,
}

pub fn arc_space_dimensions(g: &Graph, arcs: &ArcSystem) -> ArcSpaceDimensions {
    let summary = structure_summary(g);
    let inc = build_incidences(g, arcs);
    let stacked_rank = inc.stacked().rank();
    ArcSpaceDimensions {
        rank_b: inc.b.rank(),
        rank_n: inc.n.rank(),
        dim_l: 2 * arcs.m() - stacked_rank,
        dim_k: stacked_rank,
        expected_dim_l: expected_dim_l(g, &summary),
    }
}
