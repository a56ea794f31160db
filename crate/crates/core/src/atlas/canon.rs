//! Canonical forms for small graphs.
//!
//! The form is the lexicographically smallest upper-triangle adjacency
//! string (graph6 column order) over all vertex orders that list the colour
//! classes of the stable degree refinement in increasing colour. Because the
//! refinement and its colour order are isomorphism invariants, so is the
//! minimum. The search places one vertex per position, prunes any prefix
//! already larger than the best string found, and skips a candidate when an
//! earlier candidate is its twin (swapping twins is an automorphism that
//! fixes everything placed so far).

use std::cmp::Ordering;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Largest vertex count [`canonical_form`] accepts.
pub const CANON_MAX_N: usize = 12;

/// A canonical adjacency string. Equal forms are exactly isomorphic graphs.
///
/// `bits` holds the `n(n-1)/2` upper-triangle bits in graph6 column order,
/// first bit most significant, so integer order is string order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CanonicalForm {
    n: u8,
    bits: u128,
}

impl CanonicalForm {
    pub(crate) fn from_parts(n: usize, bits: u128) -> Self {
        CanonicalForm { n: n as u8, bits }
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn bits(&self) -> u128 {
        self.bits
    }

    /// The canonically labelled representative.
    pub fn to_graph(&self) -> Graph {
        let n = self.n();
        let adj = adj_from_bits(n, self.bits);
        Graph::from_adjacency(
            adj.iter()
                .map(|&a| VertexSet::from_bits(a as u128))
                .collect(),
        )
    }

    pub fn graph6(&self) -> String {
        crate::graph::emit_graph(&self.to_graph(), crate::graph::GraphFormat::Graph6)
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    let n = g.n();
    if n > CANON_MAX_N {
        return Err(Error::ResourceLimit {
            what: "canonical form vertex count",
            limit: CANON_MAX_N,
            actual: n,
        });
    }
    let adj: Vec<u16> = g.adjacency().iter().map(|a| a.bits() as u16).collect();
    Ok(CanonicalForm {
        n: n as u8,
        bits: canon_bits(&adj),
    })
}

/// Canonical bits of a graph given as `u16` adjacency masks (`n <= 12`).
pub(crate) fn canon_bits(adj: &[u16]) -> u128 {
    let n = adj.len();
    if n <= 1 {
        return 0;
    }
    let colors = refine(adj);
    let mut pos_color = colors.clone();
    pos_color.sort_unstable();
    let mut search = Search {
        adj,
        colors: &colors,
        pos_color: &pos_color,
        cur: [0; CANON_MAX_N],
        best: [u16::MAX; CANON_MAX_N],
        placed: [0; CANON_MAX_N],
    };
    search.descend(0, 0);
    let mut bits = 0u128;
    for k in 1..n {
        bits = (bits << k) | search.best[k] as u128;
    }
    bits
}

pub(crate) fn adj_from_bits(n: usize, bits: u128) -> Vec<u16> {
    let mut adj = vec![0u16; n];
    let total = n * n.saturating_sub(1) / 2;
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if (bits >> (total - 1 - idx)) & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            idx += 1;
        }
    }
    adj
}

/// Stable colour refinement starting from degrees. Colours are ranks of
/// (previous colour, neighbour-colour histogram) signatures, so they depend
/// only on the isomorphism type of the rooted structure.
fn refine(adj: &[u16]) -> Vec<u8> {
    let n = adj.len();
    let mut colors: Vec<u8> = adj.iter().map(|a| a.count_ones() as u8).collect();
    let mut classes = relabel_ranks(&mut colors);
    loop {
        let mut sigs: Vec<([u8; CANON_MAX_N + 1], usize)> = (0..n)
            .map(|v| {
                let mut sig = [0u8; CANON_MAX_N + 1];
                sig[0] = colors[v];
                let mut a = adj[v];
                while a != 0 {
                    let u = a.trailing_zeros() as usize;
                    a &= a - 1;
                    sig[1 + colors[u] as usize] += 1;
                }
                (sig, v)
            })
            .collect();
        sigs.sort_unstable();
        let mut next = vec![0u8; n];
        let mut rank = 0u8;
        for i in 0..n {
            if i > 0 && sigs[i].0 != sigs[i - 1].0 {
                rank += 1;
            }
            next[sigs[i].1] = rank;
        }
        let count = rank as usize + 1;
        colors = next;
        if count == classes {
            return colors;
        }
        classes = count;
    }
}

fn relabel_ranks(colors: &mut [u8]) -> usize {
    let mut distinct: Vec<u8> = colors.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    for c in colors.iter_mut() {
        *c = distinct.binary_search(c).unwrap() as u8;
    }
    distinct.len()
}

struct Search<'a> {
    adj: &'a [u16],
    colors: &'a [u8],
    pos_color: &'a [u8],
    cur: [u16; CANON_MAX_N],
    best: [u16; CANON_MAX_N],
    placed: [u8; CANON_MAX_N],
}

impl Search<'_> {
    fn descend(&mut self, depth: usize, used: u16) {
        let n = self.adj.len();
        if depth == n {
            if self.cur[..n] < self.best[..n] {
                self.best[..n].copy_from_slice(&self.cur[..n]);
            }
            return;
        }
        let want = self.pos_color[depth];
        let mut tried: u16 = 0;
        for v in 0..n {
            if used >> v & 1 == 1 || self.colors[v] != want {
                continue;
            }
            let vbit = 1u16 << v;
            if self.is_twin_of_tried(v, tried) {
                continue;
            }
            tried |= vbit;
            let mut col = 0u16;
            for i in 0..depth {
                col = (col << 1) | (self.adj[v] >> self.placed[i] & 1);
            }
            self.cur[depth] = col;
            match self.cur[..=depth].cmp(&self.best[..=depth]) {
                Ordering::Greater => continue,
                _ => {
                    self.placed[depth] = v as u8;
                    self.descend(depth + 1, used | vbit);
                }
            }
        }
    }

    fn is_twin_of_tried(&self, v: usize, mut tried: u16) -> bool {
        while tried != 0 {
            let u = tried.trailing_zeros() as usize;
            tried &= tried - 1;
            let mask = !((1u16 << u) | (1u16 << v));
            if self.adj[u] & mask == self.adj[v] & mask {
                return true;
            }
        }
        false
    }
}
