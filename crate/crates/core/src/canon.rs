//! Canonical labelling of small graphs by partition refinement and
//! individualisation.
//!
//! The search tree is built from label-invariant steps only (degree
//! partition, iterated neighbour-count refinement with cells split in sorted
//! signature order, individualisation inside the first smallest non-trivial
//! cell), so the largest leaf certificate is an isomorphism invariant.

use crate::graph::Graph;

/// Largest vertex count the bitset representation handles.
pub const CANON_MAX_N: usize = 16;

/// Graph on at most 16 vertices stored as adjacency bitmasks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BitGraph {
    pub n: usize,
    pub adj: [u16; CANON_MAX_N],
}

impl BitGraph {
    pub fn empty(n: usize) -> Self {
        assert!(n <= CANON_MAX_N, "at most {CANON_MAX_N} vertices");
        BitGraph {
            n,
            adj: [0; CANON_MAX_N],
        }
    }

    pub fn from_graph(g: &Graph) -> Self {
        let mut b = Self::empty(g.n());
        for &(u, v) in g.edges() {
            b.add_edge(u, v);
        }
        b
    }

    pub fn to_graph(&self) -> Graph {
        let mut edges = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.has_edge(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_sorted_unchecked(self.n, edges)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> u32 {
        self.adj[v].count_ones()
    }

    /// Upper-triangle bits in the vertex order `order` (position -> vertex).
    pub fn certificate(&self, order: &[usize]) -> u128 {
        let mut cert = 0u128;
        for j in 1..self.n {
            let row = self.adj[order[j]];
            for &oi in &order[..j] {
                cert = (cert << 1) | u128::from(row >> oi & 1);
            }
        }
        cert
    }
}

/// Canonical form: vertex count plus the best certificate. Two graphs are
/// isomorphic iff their canonical forms are equal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub n: usize,
    pub certificate: u128,
}

/// Ordered partition of the vertex set; each cell is a bitmask.
type Partition = Vec<u16>;

fn refine(g: &BitGraph, mut cells: Partition) -> Partition {
    loop {
        let mut next = Vec::with_capacity(g.n);
        for &cell in &cells {
            if cell.count_ones() == 1 {
                next.push(cell);
                continue;
            }
            let mut groups: Vec<(Vec<u8>, u16)> = Vec::new();
            let mut rest = cell;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let sig: Vec<u8> = cells
                    .iter()
                    .map(|&w| (g.adj[v] & w).count_ones() as u8)
                    .collect();
                match groups.iter_mut().find(|(s, _)| *s == sig) {
                    Some((_, mask)) => *mask |= 1 << v,
                    None => groups.push((sig, 1 << v)),
                }
            }
            groups.sort_unstable_by(|a, b| a.0.cmp(&b.0));
            next.extend(groups.into_iter().map(|(_, mask)| mask));
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn initial_partition(g: &BitGraph) -> Partition {
    let all: u16 = if g.n == 16 { u16::MAX } else { (1 << g.n) - 1 };
    if g.n == 0 {
        return Vec::new();
    }
    refine(g, vec![all])
}

struct Search<'a> {
    g: &'a BitGraph,
    best: Option<(u128, Vec<usize>)>,
}

impl Search<'_> {
    fn run(&mut self, cells: Partition) {
        let target = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.count_ones() > 1)
            .min_by_key(|(i, c)| (c.count_ones(), *i))
            .map(|(i, _)| i);
        let Some(t) = target else {
            let order: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
            let cert = self.g.certificate(&order);
            if self.best.as_ref().is_none_or(|(b, _)| cert > *b) {
                self.best = Some((cert, order));
            }
            return;
        };
        let cell = cells[t];
        let mut rest = cell;
        while rest != 0 {
            let v = rest.trailing_zeros();
            rest &= rest - 1;
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..t]);
            child.push(1 << v);
            child.push(cell & !(1 << v));
            child.extend_from_slice(&cells[t + 1..]);
            self.run(refine(self.g, child));
        }
    }
}

/// Canonical form and a canonical ordering (`order[i]` is the vertex placed
/// at position `i`).
pub fn canonical_labeling(g: &BitGraph) -> (CanonicalForm, Vec<usize>) {
    let mut search = Search { g, best: None };
    search.run(initial_partition(g));
    let (certificate, order) = search.best.unwrap_or((0, Vec::new()));
    (
        CanonicalForm {
            n: g.n,
            certificate,
        },
        order,
    )
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_labeling(&BitGraph::from_graph(g)).0
}

/// The canonical representative of `g`'s isomorphism class.
pub fn canonical_graph(g: &Graph) -> Graph {
    canonical_bitgraph(&BitGraph::from_graph(g)).1.to_graph()
}

pub(crate) fn canonical_bitgraph(g: &BitGraph) -> (CanonicalForm, BitGraph) {
    let (form, order) = canonical_labeling(g);
    let mut out = BitGraph::empty(g.n);
    // position[v] = new label of v
    let mut position = vec![0; g.n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    for u in 0..g.n {
        for v in u + 1..g.n {
            if g.has_edge(u, v) {
                out.add_edge(position[u], position[v]);
            }
        }
    }
    (form, out)
}
