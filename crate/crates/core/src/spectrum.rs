//! Explicit graphs realising a prescribed projective dimension with
//! regularity one, and prescribed `(pd, reg)` pairs via disjoint unions
//! with copies of `K_2`.

use serde::Serialize;

use crate::atlas::{lower_bound, meets_bound};
use crate::error::{Error, Result};
use crate::graph::{FamilySpec, Graph};
use crate::vertex_set::VertexSet;

/// Block arithmetic for the clique-with-pendants construction.
///
/// The graph is `K_s` on `0..s`, then for each clique vertex `i` a block
/// `W_i` of `t - 1` pendants, then for each `i` a block `B_i` of
/// `b_sizes[i]` pendants, all attached to clique vertex `i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpectrumPlan {
    pub n: usize,
    pub p: usize,
    pub s: usize,
    #[serde(rename = "T")]
    pub big_t: usize,
    pub t: usize,
    pub a: usize,
    pub pendant_block: usize,
    pub b_sizes: Vec<usize>,
}

impl SpectrumPlan {
    /// Rechecks every arithmetic identity the construction relies on.
    pub fn audit(&self) -> bool {
        let (n, p, s, tt, t, a) = (self.n, self.p, self.s, self.big_t, self.t, self.a);
        s == p.div_ceil(2) + 1
            && tt == p / 2 + 1
            && t >= 1
            && t <= tt
            && (s - 1) * t + tt <= n
            && (s - 1) * (t + 1) + tt > n
            && a == tt - t
            && a + s + t == p + 2
            && self.pendant_block == t - 1
            && self.b_sizes.len() == s
            && self.b_sizes[0] == a
            && self.b_sizes.iter().all(|&b| b <= a)
            && self.b_sizes.iter().sum::<usize>() == n - s * t
            && (s - 1) + (t - 1) + a == p
            && s * tt == (p + 2) * (p + 2) / 4
            && s * tt >= n
    }
}

fn spectrum_range_error(n: usize, lo: usize, hi: usize, p: usize) -> Error {
    Error::Parameter(format!("p = {p} outside the legal interval [{lo}, {hi}] for n = {n}"))
}

pub fn plan_spectrum(n: usize, p: usize) -> Result<SpectrumPlan> {
    if n < 2 {
        return Err(Error::Parameter(format!("spectrum construction needs n >= 2, got {n}")));
    }
    let lo = lower_bound(n);
    if p < lo || p > n - 2 {
        return Err(spectrum_range_error(n, lo, n - 2, p));
    }
    let s = p.div_ceil(2) + 1;
    let big_t = p / 2 + 1;
    // s + T = p + 2 <= n guarantees t >= 1.
    let t = (n - big_t) / (s - 1);
    let t = t.min(big_t);
    let a = big_t - t;
    let mut b_sizes = vec![0; s];
    let mut rest = n - s * t;
    for b in b_sizes.iter_mut() {
        let take = rest.min(a);
        *b = take;
        rest -= take;
    }
    let plan = SpectrumPlan {
        n,
        p,
        s,
        big_t,
        t,
        a,
        pendant_block: t - 1,
        b_sizes,
    };
    debug_assert!(rest == 0 && plan.audit(), "{plan:?}");
    Ok(plan)
}

/// A graph on `n` vertices with `τ_max = pd = p` and `reg = 1`.
pub fn build_spectrum_graph(n: usize, p: usize) -> Result<Graph> {
    if n >= 2 && p == n - 1 {
        return crate::graph::build_family(FamilySpec::CompleteBipartite(1, n - 1));
    }
    let plan = plan_spectrum(n, p)?;
    let s = plan.s;
    let mut adj = vec![VertexSet::EMPTY; n];
    for (v, nb) in adj.iter_mut().enumerate().take(s) {
        *nb = VertexSet::full(s).without(v);
    }
    let mut next = s;
    let w_blocks = std::iter::repeat_n(plan.pendant_block, s);
    for (i, k) in w_blocks.enumerate().chain(plan.b_sizes.iter().copied().enumerate()) {
        for _ in 0..k {
            adj[i].insert(next);
            next += 1;
        }
    }
    debug_assert_eq!(next, n);
    Ok(Graph::from_adjacency(adj))
}

/// Whether `(p, r)` lies in the disjoint-union construction's range:
/// `r >= 1`, `2r <= n`, `2√(n − 2(r − 1)) + r − 3 <= p <= n − r`.
pub fn pdr_in_range(n: usize, p: usize, r: usize) -> bool {
    if r == 0 || 2 * r > n || p > n - r || p + 1 < r {
        return false;
    }
    meets_bound(p + 1 - r, n + 2 - 2 * r)
}

/// The spectrum graph on `n − 2(r − 1)` vertices with `pd = p − (r − 1)`,
/// followed by `r − 1` disjoint edges.
pub fn build_pdr_graph(n: usize, p: usize, r: usize) -> Result<Graph> {
    if !pdr_in_range(n, p, r) {
        return Err(Error::Parameter(format!(
            "(p, r) = ({p}, {r}) outside the realisable range for n = {n}: \
             need 1 <= r <= n/2 and 2*sqrt(n - 2(r-1)) + r - 3 <= p <= n - r"
        )));
    }
    let mut g = build_spectrum_graph(n + 2 - 2 * r, p + 1 - r)?;
    let k2 = Graph::complete(2)?;
    for _ in 1..r {
        g = g.disjoint_union(&k2)?;
    }
    Ok(g)
}
