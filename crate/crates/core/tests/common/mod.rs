//! Deliberately naive reference implementations used as test oracles. Nothing
//! here shares code with the library beyond the `Graph` accessors: complexes
//! are plain lists of sorted vertex vectors, ranks come from dense GF(2)
//! elimination, and Betti numbers visit every subset with no memoisation
//! or simplification.

#![allow(dead_code)]

use std::collections::BTreeMap;

use maxmin::Graph;

/// Every independent subset of `w` (given as a sorted list), grouped by size.
pub fn naive_independence_faces(g: &Graph, w: &[usize]) -> Vec<Vec<Vec<usize>>> {
    let mut by_size: Vec<Vec<Vec<usize>>> = vec![Vec::new(); w.len() + 1];
    for mask in 0u32..(1 << w.len()) {
        let face: Vec<usize> = (0..w.len()).filter(|&i| mask >> i & 1 == 1).map(|i| w[i]).collect();
        let independent = face
            .iter()
            .enumerate()
            .all(|(a, &u)| face[a + 1..].iter().all(|&v| !g.has_edge(u, v)));
        if independent {
            by_size[face.len()].push(face);
        }
    }
    while by_size.last().is_some_and(|l| l.is_empty()) {
        by_size.pop();
    }
    by_size
}

/// Rank of a dense 0/1 matrix over GF(2) by textbook row reduction.
pub fn naive_rank_gf2(mut rows: Vec<Vec<bool>>) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][c]) else {
            continue;
        };
        rows.swap(rank, pivot);
        for r in 0..rows.len() {
            if r != rank && rows[r][c] {
                let src = rows[rank].clone();
                for (x, y) in rows[r].iter_mut().zip(src) {
                    *x ^= y;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Reduced homology over GF(2) of a complex given by its faces grouped by
/// size (`faces[0] = [[]]`). Entry `k + 1` is `dim H̃_k`, untrimmed.
pub fn naive_reduced_homology_gf2(faces: &[Vec<Vec<usize>>]) -> Vec<u64> {
    let boundary_rank = |size: usize| -> usize {
        // Boundary from faces of `size` vertices to faces of `size - 1`.
        if size == 0 || size >= faces.len() || faces[size - 1].is_empty() {
            return 0;
        }
        let rows: Vec<Vec<bool>> = faces[size - 1]
            .iter()
            .map(|low| {
                faces[size]
                    .iter()
                    .map(|high| low.iter().all(|v| high.contains(v)))
                    .collect()
            })
            .collect();
        naive_rank_gf2(rows)
    };
    (0..faces.len())
        .map(|size| (faces[size].len() - boundary_rank(size) - boundary_rank(size + 1)) as u64)
        .collect()
}

/// Betti table of `S/I(G)` over GF(2) by summing naive homology over all
/// `2^n` vertex subsets.
pub fn naive_betti_gf2(g: &Graph) -> BTreeMap<(usize, usize), u64> {
    let n = g.n();
    let mut table = BTreeMap::new();
    for mask in 0u32..(1 << n) {
        let w: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let j = w.len();
        let faces = naive_independence_faces(g, &w);
        for (slot, d) in naive_reduced_homology_gf2(&faces).into_iter().enumerate() {
            if d > 0 {
                *table.entry((j - slot, j)).or_insert(0) += d;
            }
        }
    }
    table
}

/// Minimal vertex covers by checking every subset, sorted as sorted vectors.
pub fn brute_minimal_covers(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let covers = |mask: u32| edges.iter().all(|&(u, v)| mask >> u & 1 == 1 || mask >> v & 1 == 1);
    let mut out: Vec<Vec<usize>> = (0u32..(1 << n))
        .filter(|&m| covers(m) && (0..n).all(|v| m >> v & 1 == 0 || !covers(m & !(1 << v))))
        .map(|m| (0..n).filter(|&v| m >> v & 1 == 1).collect())
        .collect();
    out.sort();
    out
}

/// Largest matching by exhaustive search over edge subsets (small graphs).
pub fn brute_matching_number(g: &Graph, induced: bool) -> usize {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut best = 0;
    for mask in 0u64..(1 << edges.len()) {
        let chosen: Vec<(usize, usize)> =
            (0..edges.len()).filter(|&i| mask >> i & 1 == 1).map(|i| edges[i]).collect();
        if chosen.len() <= best {
            continue;
        }
        let ok = chosen.iter().enumerate().all(|(a, &(u, v))| {
            chosen[a + 1..].iter().all(|&(x, y)| {
                let disjoint = u != x && u != y && v != x && v != y;
                let separated = !induced
                    || !(g.has_edge(u, x) || g.has_edge(u, y) || g.has_edge(v, x) || g.has_edge(v, y));
                disjoint && separated
            })
        });
        if ok {
            best = chosen.len();
        }
    }
    best
}

/// Graph on `n` vertices whose edges are the set bits of `mask`, pairs taken
/// in graph6 column order.
pub fn graph_from_mask(n: usize, mask: u128) -> Graph {
    let mut edges = Vec::new();
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if mask >> idx & 1 == 1 {
                edges.push((i, j));
            }
            idx += 1;
        }
    }
    Graph::from_edges(n, edges).unwrap()
}
