//! Simple undirected graphs, component structure, arc orderings and
//! fundamental cycles.

use std::collections::VecDeque;
use std::fmt;

use crate::error::GraphError;

/// A simple undirected graph on vertices `0..n`.
///
/// Edges are stored as pairs `(u, v)` with `u < v`, sorted strictly
/// lexicographically. The position of an edge in this list is its edge index.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    neighbors: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an arbitrary collection of undirected edges.
    ///
    /// Endpoints may be given in either order; the list is normalised and
    /// sorted. Loops, repeated edges and out-of-range endpoints are rejected.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        for w in list.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
            }
        }
        Ok(Self::from_sorted_unchecked(n, list))
    }

    pub(crate) fn from_sorted_unchecked(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut neighbors = vec![Vec::new(); n];
        for &(u, v) in &edges {
            neighbors[u].push(v);
            neighbors[v].push(u);
        }
        for list in &mut neighbors {
            list.sort_unstable();
        }
        Graph {
            n,
            edges,
            neighbors,
        }
    }

    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Self::from_sorted_unchecked(n, Vec::new())
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Self::from_sorted_unchecked(n, edges)
    }

    /// The cycle `0 - 1 - ... - (n-1) - 0`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        Self::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle edges are valid")
    }

    pub fn path(n: usize) -> Self {
        Self::new(n, (1..n).map(|i| (i - 1, i))).expect("path edges are valid")
    }

    /// The Petersen graph: outer 5-cycle, inner pentagram, spokes `i - (i+5)`.
    pub fn petersen() -> Self {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        Self::new(10, outer.chain(inner).chain(spokes)).expect("Petersen edges are valid")
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Self {
        let shift = self.n;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        Self::new(self.n + other.n, edges).expect("union of valid graphs is valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Neighbours of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.neighbors.iter().map(Vec::len).collect()
    }

    pub fn min_degree(&self) -> usize {
        self.neighbors.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.neighbors.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// `Some(k)` when every vertex has degree `k` (the null graph counts as 0-regular).
    pub fn regular_valency(&self) -> Option<usize> {
        let k = self.neighbors.first().map_or(0, Vec::len);
        self.neighbors.iter().all(|l| l.len() == k).then_some(k)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_index(u, v).is_some()
    }

    /// Index of the undirected edge `{u, v}` in the sorted edge list.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    /// Dense 0/1 adjacency matrix as rows of booleans.
    pub fn adjacency(&self) -> Vec<Vec<bool>> {
        let mut a = vec![vec![false; self.n]; self.n];
        for &(u, v) in &self.edges {
            a[u][v] = true;
            a[v][u] = true;
        }
        a
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || structure_summary(self).c == 1
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n);
        Self::new(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
            .expect("relabelling by a permutation keeps the graph simple")
    }

    /// Parses the plain edge-list format: a header line `n m` followed by
    /// `m` lines `u v` (0-indexed). Blank lines and `#` comments are ignored.
    pub fn parse_edge_list(text: &str) -> Result<Self, GraphError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let (line_no, header) = lines.next().ok_or(GraphError::EdgeList {
            line: 1,
            message: "missing `n m` header".into(),
        })?;
        let (n, m) = parse_pair(header, line_no)?;
        let mut edges = Vec::with_capacity(m);
        for (line_no, line) in lines {
            edges.push(parse_pair(line, line_no)?);
        }
        if edges.len() != m {
            return Err(GraphError::EdgeList {
                line: 1,
                message: format!("header declares {m} edges but {} were listed", edges.len()),
            });
        }
        Graph::new(n, edges)
    }

    /// Inverse of [`Graph::parse_edge_list`].
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.m());
        for &(u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

fn parse_pair(line: &str, line_no: usize) -> Result<(usize, usize), GraphError> {
    let bad = |message: String| GraphError::EdgeList {
        line: line_no,
        message,
    };
    let mut fields = line.split_whitespace();
    let mut next = || -> Result<usize, GraphError> {
        let tok = fields
            .next()
            .ok_or_else(|| bad("expected two integers".into()))?;
        tok.parse()
            .map_err(|_| bad(format!("`{tok}` is not a non-negative integer")))
    };
    let a = next()?;
    let b = next()?;
    if fields.next().is_some() {
        return Err(bad("expected exactly two integers".into()));
    }
    Ok((a, b))
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

/// One connected component of a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    /// Vertices in ascending order.
    pub vertices: Vec<usize>,
    /// `(Y, Z)` colour classes when the component is bipartite; `Y` holds the
    /// smallest vertex of the component.
    pub bipartition: Option<(Vec<usize>, Vec<usize>)>,
    /// A closed odd walk witnessing non-bipartiteness (vertex sequence of an
    /// odd cycle, first vertex not repeated).
    pub odd_cycle: Option<Vec<usize>>,
}

/// Components, bipartiteness and degree data of a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureSummary {
    /// Number of connected components.
    pub c: usize,
    /// Number of bipartite components (isolated vertices count).
    pub b: usize,
    pub component_id: Vec<usize>,
    /// Components ordered by their smallest vertex.
    pub components: Vec<Component>,
    pub degrees: Vec<usize>,
    pub min_degree: usize,
    pub max_degree: usize,
}

impl StructureSummary {
    pub fn is_bipartite(&self) -> bool {
        self.b == self.c
    }

    /// First odd cycle found, scanning components in order.
    pub fn odd_cycle(&self) -> Option<&[usize]> {
        self.components
            .iter()
            .find_map(|comp| comp.odd_cycle.as_deref())
    }

    /// `Some(true)` for vertices in a `Y` class, `Some(false)` for `Z`,
    /// `None` when the vertex lies in a non-bipartite component.
    pub fn color(&self, v: usize) -> Option<bool> {
        let comp = &self.components[self.component_id[v]];
        comp.bipartition
            .as_ref()
            .map(|(y, _)| y.binary_search(&v).is_ok())
    }
}

/// Components by breadth-first search, with a 2-colouring attempt per
/// component.
pub fn structure_summary(g: &Graph) -> StructureSummary {
    let n = g.n();
    const UNSEEN: usize = usize::MAX;
    let mut component_id = vec![UNSEEN; n];
    let mut color = vec![false; n];
    let mut parent = vec![UNSEEN; n];
    let mut depth = vec![0usize; n];
    let mut components = Vec::new();

    for root in 0..n {
        if component_id[root] != UNSEEN {
            continue;
        }
        let id = components.len();
        let mut vertices = Vec::new();
        let mut conflict: Option<(usize, usize)> = None;
        let mut queue = VecDeque::from([root]);
        component_id[root] = id;
        while let Some(u) = queue.pop_front() {
            vertices.push(u);
            for &w in g.neighbors(u) {
                if component_id[w] == UNSEEN {
                    component_id[w] = id;
                    color[w] = !color[u];
                    parent[w] = u;
                    depth[w] = depth[u] + 1;
                    queue.push_back(w);
                } else if color[w] == color[u] && conflict.is_none() {
                    conflict = Some((u, w));
                }
            }
        }
        vertices.sort_unstable();
        let (bipartition, odd_cycle) = match conflict {
            None => {
                let (y, z): (Vec<usize>, Vec<usize>) =
                    vertices.iter().partition(|&&v| color[v] == color[root]);
                (Some((y, z)), None)
            }
            Some((u, w)) => (None, Some(odd_cycle_from(u, w, &parent, &depth))),
        };
        components.push(Component {
            vertices,
            bipartition,
            odd_cycle,
        });
    }

    let degrees = g.degrees();
    StructureSummary {
        c: components.len(),
        b: components
            .iter()
            .filter(|comp| comp.bipartition.is_some())
            .count(),
        component_id,
        components,
        min_degree: degrees.iter().copied().min().unwrap_or(0),
        max_degree: degrees.iter().copied().max().unwrap_or(0),
        degrees,
    }
}

// Joins two same-coloured adjacent vertices through their BFS-tree ancestors.
fn odd_cycle_from(u: usize, w: usize, parent: &[usize], depth: &[usize]) -> Vec<usize> {
    let (mut a, mut b) = (u, w);
    let mut left = vec![a];
    let mut right = vec![b];
    while a != b {
        if depth[a] >= depth[b] {
            a = parent[a];
            left.push(a);
        } else {
            b = parent[b];
            right.push(b);
        }
    }
    // both paths end at the common ancestor
    right.pop();
    left.extend(right.into_iter().rev());
    left
}

/// Which orientation of the edges an [`ArcSystem`] uses for its forward block.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrientationKind {
    /// Edge `(u, v)` with `u < v` is directed `u -> v`.
    Lexicographic,
    /// Every edge is directed from its `Y` endpoint to its `Z` endpoint.
    Bipartite,
}

/// An orientation of the edges together with the arc ordering of the digraph:
/// arc `i < m` is the oriented edge `e_i`, arc `m + i` is its reverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArcSystem {
    n: usize,
    orientation: Vec<(usize, usize)>,
    edges: Vec<(usize, usize)>,
}

impl ArcSystem {
    pub fn new(g: &Graph, kind: OrientationKind) -> Result<Self, GraphError> {
        let orientation = match kind {
            OrientationKind::Lexicographic => g.edges().to_vec(),
            OrientationKind::Bipartite => {
                let summary = structure_summary(g);
                if let Some(cycle) = summary.odd_cycle() {
                    return Err(GraphError::NotBipartite {
                        odd_cycle: cycle.to_vec(),
                    });
                }
                g.edges()
                    .iter()
                    .map(|&(u, v)| {
                        if summary.color(u) == Some(true) {
                            (u, v)
                        } else {
                            (v, u)
                        }
                    })
                    .collect()
            }
        };
        Ok(ArcSystem {
            n: g.n(),
            orientation,
            edges: g.edges().to_vec(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of undirected edges.
    pub fn m(&self) -> usize {
        self.orientation.len()
    }

    pub fn num_arcs(&self) -> usize {
        2 * self.m()
    }

    /// The oriented edges `e_0 .. e_{m-1}` as `(tail, head)`.
    pub fn orientation(&self) -> &[(usize, usize)] {
        &self.orientation
    }

    /// `(tail, head)` of arc `i`.
    pub fn arc(&self, i: usize) -> (usize, usize) {
        let m = self.m();
        if i < m {
            self.orientation[i]
        } else {
            let (t, h) = self.orientation[i - m];
            (h, t)
        }
    }

    pub fn tail(&self, i: usize) -> usize {
        self.arc(i).0
    }

    pub fn head(&self, i: usize) -> usize {
        self.arc(i).1
    }

    /// Index of the reverse arc.
    pub fn reverse(&self, i: usize) -> usize {
        let m = self.m();
        if i < m {
            i + m
        } else {
            i - m
        }
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.num_arcs()).map(move |i| self.arc(i))
    }

    /// Index of the arc `tail -> head`, if that arc exists.
    pub fn arc_index(&self, tail: usize, head: usize) -> Option<usize> {
        let e = self
            .edges
            .binary_search(&(tail.min(head), tail.max(head)))
            .ok()?;
        if self.orientation[e].0 == tail {
            Some(e)
        } else {
            Some(e + self.m())
        }
    }

    /// Underlying undirected edge list, recovered by forgetting direction.
    pub fn undirected_edges(&self) -> Vec<(usize, usize)> {
        let mut edges: Vec<_> = self
            .orientation
            .iter()
            .map(|&(t, h)| (t.min(h), t.max(h)))
            .collect();
        edges.sort_unstable();
        edges
    }
}

/// The default arc system: lexicographic orientation.
pub fn default_arc_system(g: &Graph) -> ArcSystem {
    ArcSystem::new(g, OrientationKind::Lexicographic)
        .expect("lexicographic orientation always exists")
}

/// A cycle of the graph traversed in a fixed direction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientedCycle {
    vertices: Vec<usize>,
}

impl OrientedCycle {
    /// `vertices` lists the cycle once around, without repeating the start;
    /// the closing arc runs from the last vertex back to the first.
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Result<Self, GraphError> {
        if vertices.len() < 3 {
            return Err(GraphError::InvalidCycle(format!(
                "a cycle needs at least 3 vertices, got {vertices:?}"
            )));
        }
        let mut seen = vec![false; g.n()];
        for &v in &vertices {
            if v >= g.n() || std::mem::replace(&mut seen[v], true) {
                return Err(GraphError::InvalidCycle(format!(
                    "vertex {v} is out of range or repeated in {vertices:?}"
                )));
            }
        }
        let cycle = OrientedCycle { vertices };
        for (u, v) in cycle.arcs() {
            if !g.has_edge(u, v) {
                return Err(GraphError::MissingEdge(u, v));
            }
        }
        Ok(cycle)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Directed edges `(u, v)` in traversal order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let k = self.vertices.len();
        (0..k).map(move |i| (self.vertices[i], self.vertices[(i + 1) % k]))
    }

    /// The same cycle traversed the other way round, from the same start.
    pub fn reversed(&self) -> Self {
        let mut vertices = self.vertices.clone();
        vertices[1..].reverse();
        OrientedCycle { vertices }
    }
}

/// Fundamental cycles of a depth-first spanning forest.
///
/// Each component is rooted at its smallest vertex and children are visited
/// in ascending order. One cycle is produced per non-tree edge (in edge
/// order), starting along that edge in its direction under `arcs`, then
/// returning through the tree. There are exactly `m - n + c` of them.
pub fn fundamental_cycles(g: &Graph, arcs: &ArcSystem) -> Vec<OrientedCycle> {
    let n = g.n();
    const NONE: usize = usize::MAX;
    let mut parent = vec![NONE; n];
    let mut depth = vec![0usize; n];
    let mut visited = vec![false; n];
    let mut tree_edge = vec![false; g.m()];

    for root in 0..n {
        if visited[root] {
            continue;
        }
        visited[root] = true;
        // (vertex, position in its neighbour list)
        let mut stack = vec![(root, 0usize)];
        while let Some(top) = stack.last_mut() {
            let (u, pos) = *top;
            if let Some(&w) = g.neighbors(u).get(pos) {
                top.1 += 1;
                if !visited[w] {
                    visited[w] = true;
                    parent[w] = u;
                    depth[w] = depth[u] + 1;
                    tree_edge[g.edge_index(u, w).expect("neighbour edge")] = true;
                    stack.push((w, 0));
                }
            } else {
                stack.pop();
            }
        }
    }

    let mut cycles = Vec::new();
    for (e, &(tail, head)) in arcs.orientation().iter().enumerate() {
        let edge_index = g
            .edge_index(tail, head)
            .expect("arc system belongs to the graph");
        debug_assert_eq!(edge_index, e);
        if tree_edge[edge_index] {
            continue;
        }
        // tail -> head, then head back up/down the tree to tail
        let (mut a, mut b) = (tail, head);
        let mut from_tail = vec![a];
        let mut from_head = vec![b];
        while a != b {
            if depth[a] >= depth[b] {
                a = parent[a];
                from_tail.push(a);
            } else {
                b = parent[b];
                from_head.push(b);
            }
        }
        let mut vertices = vec![tail];
        if from_tail.len() == 1 {
            // tail is the common ancestor and closes the cycle
            from_head.pop();
            vertices.extend_from_slice(&from_head);
        } else {
            vertices.extend_from_slice(&from_head);
            // from_tail = [tail, ..., lca]; skip both ends
            vertices.extend(from_tail[1..from_tail.len() - 1].iter().rev());
        }
        cycles.push(OrientedCycle { vertices });
    }
    cycles
}
