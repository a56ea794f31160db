//! Minimal vertex covers, MAX MIN vertex cover, minimum maximal independent
//! sets, and the (induced) matching numbers.
//!
//! Minimal vertex covers are exactly the complements of maximal independent
//! sets, so everything here is driven by one maximal-independent-set
//! enumerator: Bron–Kerbosch with pivoting run on the complement graph,
//! expressed directly in terms of the original adjacency.

use serde::Serialize;

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Summary of the cover structure of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverReport {
    /// Largest size of a minimal vertex cover.
    pub tau_max: usize,
    /// Smallest size of a maximal independent set.
    pub i_min: usize,
    /// Lexicographically first minimal cover of size `tau_max`.
    pub witness_cover: VertexSet,
    /// Complement of `witness_cover`; a maximal independent set of size `i_min`.
    pub witness_independent: VertexSet,
    pub num_minimal_covers: u64,
}

/// Calls `visit` once for every maximal independent set of `g`.
pub fn for_each_maximal_independent_set<F: FnMut(VertexSet)>(g: &Graph, mut visit: F) {
    let closed: Vec<VertexSet> = (0..g.n()).map(|v| g.closed_neighbors(v)).collect();
    bk(&closed, VertexSet::EMPTY, g.vertices(), VertexSet::EMPTY, &mut visit);
}

// In the complement graph the neighbourhood of v is V \ N[v]; `closed`
// holds N[v] so that P ∩ N_comp(v) = P \ N[v].
fn bk<F: FnMut(VertexSet)>(
    closed: &[VertexSet],
    r: VertexSet,
    mut p: VertexSet,
    mut x: VertexSet,
    visit: &mut F,
) {
    if p.is_empty() {
        if x.is_empty() {
            visit(r);
        }
        return;
    }
    // Pivot maximising |P ∩ N_comp(u)|, i.e. minimising |P ∩ N[u]|.
    let pivot = p
        .union(x)
        .iter()
        .min_by_key(|&u| p.intersection(closed[u]).len())
        .expect("p is nonempty");
    let branch = p.intersection(closed[pivot]);
    for v in branch.iter() {
        bk(
            closed,
            r.with(v),
            p.difference(closed[v]),
            x.difference(closed[v]),
            visit,
        );
        p.remove(v);
        x.insert(v);
    }
}

/// All minimal vertex covers of `g`, ordered lexicographically by their
/// sorted vertex lists. The edgeless graph has the single cover `{}`.
pub fn enumerate_minimal_covers(g: &Graph) -> Vec<VertexSet> {
    let all = g.vertices();
    let mut covers = Vec::new();
    for_each_maximal_independent_set(g, |s| covers.push(all.difference(s)));
    covers.sort_by(|a, b| a.lex_cmp(*b));
    covers
}

/// All maximal independent sets, in the same lexicographic order.
pub fn enumerate_maximal_independent_sets(g: &Graph) -> Vec<VertexSet> {
    let mut sets = Vec::new();
    for_each_maximal_independent_set(g, |s| sets.push(s));
    sets.sort_by(|a, b| a.lex_cmp(*b));
    sets
}

/// Computes `tau_max`, `i_min`, witnesses and the number of minimal covers.
pub fn tau_max(g: &Graph) -> CoverReport {
    let all = g.vertices();
    let mut best: Option<VertexSet> = None;
    let mut count = 0u64;
    for_each_maximal_independent_set(g, |s| {
        count += 1;
        let cover = all.difference(s);
        let better = match best {
            None => true,
            Some(b) => {
                cover.len() > b.len()
                    || (cover.len() == b.len() && cover.lex_cmp(b).is_lt())
            }
        };
        if better {
            best = Some(cover);
        }
    });
    let cover = best.expect("every graph has a maximal independent set");
    CoverReport {
        tau_max: cover.len(),
        i_min: g.n() - cover.len(),
        witness_cover: cover,
        witness_independent: all.difference(cover),
        num_minimal_covers: count,
    }
}

/// Whether `g` has a maximal independent set with fewer than `k` vertices,
/// i.e. whether `τ_max(g) > n − k`. Stops at the first witness.
pub fn has_maximal_independent_set_smaller_than(g: &Graph, k: usize) -> bool {
    let closed: Vec<VertexSet> = (0..g.n()).map(|v| g.closed_neighbors(v)).collect();
    small_dominating(&closed, g.vertices(), k)
}

// A maximal independent set is an independent dominating set. `free` holds
// the vertices not yet dominated; any of them may still join the set, and
// the undominated vertex with the fewest options decides the branch.
fn small_dominating(closed: &[VertexSet], free: VertexSet, budget: usize) -> bool {
    if free.is_empty() {
        return budget > 0;
    }
    if budget <= 1 {
        return false;
    }
    let u = free
        .iter()
        .min_by_key(|&u| closed[u].intersection(free).len())
        .expect("free is nonempty");
    closed[u]
        .intersection(free)
        .iter()
        .any(|v| small_dominating(closed, free.difference(closed[v]), budget - 1))
}

/// True if `set` covers every edge and removing any one of its vertices
/// breaks that.
pub fn is_minimal_vertex_cover(g: &Graph, set: VertexSet) -> bool {
    // A cover is minimal iff each member has a neighbour outside the cover.
    g.is_vertex_cover(set) && set.iter().all(|v| !g.neighbors(v).is_subset(set))
}

/// True if `set` is independent and no vertex can be added to it.
pub fn is_maximal_independent_set(g: &Graph, set: VertexSet) -> bool {
    g.is_independent(set)
        && g
            .vertices()
            .difference(set)
            .iter()
            .all(|v| !g.neighbors(v).is_disjoint(set))
}

/// Largest number of pairwise disjoint edges.
pub fn matching_number(g: &Graph) -> usize {
    let mut best = 0;
    matching_search(g.adjacency(), non_isolated(g.adjacency(), g.vertices()), 0, &mut best);
    best
}

fn non_isolated(adj: &[VertexSet], alive: VertexSet) -> VertexSet {
    alive
        .iter()
        .filter(|&v| !adj[v].is_disjoint(alive))
        .collect()
}

fn matching_search(adj: &[VertexSet], alive: VertexSet, size: usize, best: &mut usize) {
    if size > *best {
        *best = size;
    }
    if size + alive.len() / 2 <= *best {
        return;
    }
    let Some(v) = alive.iter().min_by_key(|&v| adj[v].intersection(alive).len()) else {
        return;
    };
    let nbrs = adj[v].intersection(alive);
    if nbrs.len() == 1 {
        // Matching a leaf to its only neighbour is always safe.
        let u = nbrs.first().unwrap();
        let rest = non_isolated(adj, alive.without(u).without(v));
        matching_search(adj, rest, size + 1, best);
        return;
    }
    for u in nbrs.iter() {
        let rest = non_isolated(adj, alive.without(u).without(v));
        matching_search(adj, rest, size + 1, best);
    }
    matching_search(adj, non_isolated(adj, alive.without(v)), size, best);
}

/// Largest number of edges no two of which share a vertex or are joined by
/// an edge.
pub fn induced_matching_number(g: &Graph) -> usize {
    let mut best = 0;
    let adj = g.adjacency();
    induced_search(adj, non_isolated(adj, g.vertices()), 0, &mut best);
    best
}

fn induced_search(adj: &[VertexSet], alive: VertexSet, size: usize, best: &mut usize) {
    if size > *best {
        *best = size;
    }
    if size + alive.len() / 2 <= *best {
        return;
    }
    let Some(v) = alive.first() else {
        return;
    };
    let nv = adj[v].with(v);
    for u in adj[v].intersection(alive).iter() {
        let removed = nv.union(adj[u]).with(u);
        induced_search(adj, non_isolated(adj, alive.difference(removed)), size + 1, best);
    }
    induced_search(adj, non_isolated(adj, alive.without(v)), size, best);
}
