//! Simple undirected graphs on vertices `0..n`, their structural predicates
//! and transforms.

mod family;
mod io;

pub use family::{build_family, FamilySpec};
pub use io::{emit_graph, parse_graph, parse_graph_stream, GraphFormat};

use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// An immutable simple graph. Vertices are the integers `0..n`; `adj[v]` is
/// the open neighbourhood of `v`. The adjacency is symmetric and loop-free.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::ResourceLimit {
                what: "vertex count",
                limit: MAX_VERTICES,
                actual: n,
            });
        }
        Ok(Graph {
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    /// Builds a graph from an edge list, rejecting loops, duplicate edges
    /// and out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Parameter(format!(
                    "edge {{{u}, {v}}} has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::Parameter(format!("loop at vertex {u}")));
            }
            if g.adj[u].contains(v) {
                return Err(Error::Parameter(format!("duplicate edge {{{u}, {v}}}")));
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    /// Builds a graph from neighbourhood sets. Loops are dropped and the
    /// relation is symmetrised. Crate-internal: callers guarantee `adj.len()
    /// <= MAX_VERTICES` and that no set reaches beyond `adj.len()`.
    pub(crate) fn from_adjacency(mut adj: Vec<VertexSet>) -> Self {
        let n = adj.len();
        debug_assert!(n <= MAX_VERTICES);
        for (v, nb) in adj.iter_mut().enumerate() {
            nb.remove(v);
            debug_assert!(nb.is_subset(VertexSet::full(n)));
        }
        for u in 0..n {
            for v in adj[u].iter() {
                adj[v].insert(u);
            }
        }
        Graph { adj }
    }

    /// Complete graph `K_s`.
    pub fn complete(s: usize) -> Result<Self> {
        let mut g = Graph::empty(s)?;
        for v in 0..s {
            g.adj[v] = VertexSet::full(s).without(v);
        }
        Ok(g)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].contains(v)
    }

    pub fn adjacency(&self) -> &[VertexSet] {
        &self.adj
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, nb)| {
            nb.iter().filter(move |&v| v > u).map(move |v| (u, v))
        })
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(|a| a.len()).collect()
    }

    /// True if `set` is a vertex cover (meets every edge).
    pub fn is_vertex_cover(&self, set: VertexSet) -> bool {
        let rest = self.vertices().difference(set);
        rest.iter().all(|v| self.adj[v].is_subset(set))
    }

    /// True if no two vertices of `set` are adjacent.
    pub fn is_independent(&self, set: VertexSet) -> bool {
        set.iter().all(|v| self.adj[v].is_disjoint(set))
    }

    pub fn is_edgeless(&self) -> bool {
        self.adj.iter().all(|a| a.is_empty())
    }

    pub fn complement(&self) -> Graph {
        let full = self.vertices();
        let adj = (0..self.n())
            .map(|v| full.difference(self.adj[v]).without(v))
            .collect();
        Graph { adj }
    }

    /// Places `h` after `self`: vertex `v` of `h` becomes `self.n() + v`.
    pub fn disjoint_union(&self, h: &Graph) -> Result<Graph> {
        let n = self.n() + h.n();
        if n > MAX_VERTICES {
            return Err(Error::ResourceLimit {
                what: "vertex count",
                limit: MAX_VERTICES,
                actual: n,
            });
        }
        let offset = self.n();
        let mut adj = self.adj.clone();
        adj.extend(
            h.adj
                .iter()
                .map(|nb| VertexSet::from_bits(nb.bits() << offset)),
        );
        Ok(Graph { adj })
    }

    /// The subgraph induced on `w`, relabelled `0..|w|` in increasing order
    /// of the original labels.
    pub fn induced_subgraph(&self, w: VertexSet) -> Result<Graph> {
        if !w.is_subset(self.vertices()) {
            return Err(Error::Parameter(format!(
                "vertex set {w:?} is not contained in 0..{}",
                self.n()
            )));
        }
        Ok(self.induced_unchecked(w))
    }

    pub(crate) fn induced_unchecked(&self, w: VertexSet) -> Graph {
        let verts = w.to_vec();
        let mut pos = [0usize; MAX_VERTICES];
        for (i, &v) in verts.iter().enumerate() {
            pos[v] = i;
        }
        let adj = verts
            .iter()
            .map(|&v| {
                self.adj[v]
                    .intersection(w)
                    .iter()
                    .map(|u| pos[u])
                    .collect::<VertexSet>()
            })
            .collect();
        Graph { adj }
    }

    /// Relabels so that old vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.n();
        let mut seen = VertexSet::EMPTY;
        if perm.len() != n {
            return Err(Error::Parameter(format!(
                "permutation has length {}, expected {n}",
                perm.len()
            )));
        }
        for &p in perm {
            if p >= n || seen.contains(p) {
                return Err(Error::Parameter("not a permutation".into()));
            }
            seen.insert(p);
        }
        let mut adj = vec![VertexSet::EMPTY; n];
        for v in 0..n {
            adj[perm[v]] = self.adj[v].iter().map(|u| perm[u]).collect();
        }
        Ok(Graph { adj })
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        (0..self.n()).filter(|&v| self.adj[v].is_empty()).collect()
    }

    pub fn has_isolated_vertices(&self) -> bool {
        self.adj.iter().any(|a| a.is_empty())
    }

    /// Vertex sets of the connected components, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        components_within(&self.adj, self.vertices())
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn is_bipartite(&self) -> bool {
        let n = self.n();
        let mut side = vec![u8::MAX; n];
        let mut stack = Vec::new();
        for start in 0..n {
            if side[start] != u8::MAX {
                continue;
            }
            side[start] = 0;
            stack.push(start);
            while let Some(v) = stack.pop() {
                for u in self.adj[v].iter() {
                    if side[u] == u8::MAX {
                        side[u] = 1 - side[v];
                        stack.push(u);
                    } else if side[u] == side[v] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Vertex order produced by lexicographic breadth-first search, starting
    /// from vertex 0 and breaking ties by smallest label.
    pub fn lex_bfs(&self) -> Vec<usize> {
        let n = self.n();
        let mut cells: Vec<Vec<usize>> = if n == 0 { vec![] } else { vec![(0..n).collect()] };
        let mut order = Vec::with_capacity(n);
        while let Some(first) = cells.first_mut() {
            let v = first.remove(0);
            if first.is_empty() {
                cells.remove(0);
            }
            order.push(v);
            let nb = self.adj[v];
            let mut next = Vec::with_capacity(cells.len() * 2);
            for cell in cells.drain(..) {
                let (inside, outside): (Vec<usize>, Vec<usize>) =
                    cell.into_iter().partition(|&u| nb.contains(u));
                if !inside.is_empty() {
                    next.push(inside);
                }
                if !outside.is_empty() {
                    next.push(outside);
                }
            }
            cells = next;
        }
        order
    }

    /// True iff every cycle of length at least four has a chord, decided by
    /// checking that the reverse of a LexBFS order is a perfect elimination
    /// ordering.
    pub fn is_chordal(&self) -> bool {
        let order = self.lex_bfs();
        let mut rank = vec![0usize; self.n()];
        for (i, &v) in order.iter().enumerate() {
            rank[v] = i;
        }
        let mut earlier = VertexSet::EMPTY;
        for &v in &order {
            let back = self.adj[v].intersection(earlier);
            if let Some(parent) = back.iter().max_by_key(|&u| rank[u]) {
                if !back.without(parent).is_subset(self.adj[parent]) {
                    return false;
                }
            }
            earlier.insert(v);
        }
        true
    }

    /// True iff no two vertex-disjoint edges are joined by no edge (no
    /// induced `2K_2`).
    pub fn is_gap_free(&self) -> bool {
        let edges: Vec<(usize, usize)> = self.edges().collect();
        for (i, &(a, b)) in edges.iter().enumerate() {
            let reach = self.adj[a].union(self.adj[b]).with(a).with(b);
            for &(c, d) in &edges[i + 1..] {
                if !reach.contains(c) && !reach.contains(d) {
                    return false;
                }
            }
        }
        true
    }
}

pub(crate) fn components_within(adj: &[VertexSet], within: VertexSet) -> Vec<VertexSet> {
    let mut out = Vec::new();
    let mut left = within;
    while let Some(start) = left.first() {
        let mut comp = VertexSet::singleton(start);
        let mut frontier = comp;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier.iter() {
                next = next.union(adj[v]);
            }
            next = next.intersection(within).difference(comp);
            comp = comp.union(next);
            frontier = next;
        }
        left = left.difference(comp);
        out.push(comp);
    }
    out
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n())?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}
