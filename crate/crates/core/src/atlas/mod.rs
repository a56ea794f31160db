//! Isomorph-free enumeration, canonical forms, random graphs, family
//! recognition, and the verification harnesses built on them.

pub mod canon;
mod harness;

use std::sync::{Arc, Mutex, OnceLock};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

pub use canon::{canonical_form, CanonicalForm, CANON_MAX_N};
pub use harness::{
    lower_bound, meets_bound, pdr_spectrum, pdr_spectrum_csv, search_exotic_extremal,
    verify_bound, verify_classification, BoundMode, BoundRecord, ClassificationRecord,
    ExoticRecord, PdrPoint, PdrReport,
};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Largest `n` for which [`enumerate_graphs`] builds the full atlas.
pub const ENUM_MAX_N: usize = 9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GraphFilter {
    All,
    NoIsolated,
    Connected,
}

impl GraphFilter {
    pub fn accepts(self, g: &Graph) -> bool {
        match self {
            GraphFilter::All => true,
            GraphFilter::NoIsolated => !g.has_isolated_vertices(),
            GraphFilter::Connected => g.is_connected(),
        }
    }
}

type Level = Arc<Vec<u128>>;

fn atlas_cache() -> &'static Mutex<Vec<Level>> {
    static CACHE: OnceLock<Mutex<Vec<Level>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(vec![Arc::new(vec![0]), Arc::new(vec![0])]))
}

/// Canonical bits of every isomorphism class on `n` vertices, ascending.
/// Level `n` is built from level `n - 1` by adding a vertex with every
/// possible neighbourhood and deduplicating canonical forms; levels are
/// cached for the life of the process.
fn atlas_level(n: usize) -> Level {
    let mut cache = atlas_cache().lock().unwrap_or_else(|e| e.into_inner());
    while cache.len() <= n {
        let m = cache.len();
        let parents = cache[m - 1].clone();
        let mut forms = Vec::with_capacity(parents.len() << (m - 1));
        let mut adj = vec![0u16; m];
        for &bits in parents.iter() {
            let base = canon::adj_from_bits(m - 1, bits);
            for nb in 0u16..(1 << (m - 1)) {
                adj[..m - 1].copy_from_slice(&base);
                for (v, a) in adj.iter_mut().enumerate().take(m - 1) {
                    *a |= ((nb >> v) & 1) << (m - 1);
                }
                adj[m - 1] = nb;
                forms.push(canon::canon_bits(&adj));
            }
        }
        forms.sort_unstable();
        forms.dedup();
        cache.push(Arc::new(forms));
    }
    cache[n].clone()
}

/// One canonical representative per isomorphism class on `n` vertices
/// passing `filter`, in increasing canonical order.
pub fn enumerate_classes(n: usize, filter: GraphFilter) -> Result<Vec<CanonicalForm>> {
    if n > ENUM_MAX_N {
        return Err(Error::ResourceLimit {
            what: "enumeration vertex count",
            limit: ENUM_MAX_N,
            actual: n,
        });
    }
    let level = atlas_level(n);
    Ok(level
        .iter()
        .map(|&bits| CanonicalForm::from_parts(n, bits))
        .filter(|f| filter.accepts(&f.to_graph()))
        .collect())
}

pub fn enumerate_graphs(n: usize, filter: GraphFilter) -> Result<Vec<Graph>> {
    Ok(enumerate_classes(n, filter)?
        .into_iter()
        .map(|f| f.to_graph())
        .collect())
}

/// Erdős–Rényi `G(n, p)`: every pair `(i, j)`, `i < j`, visited in graph6
/// column order, becomes an edge with probability `edge_prob`. Randomness is
/// ChaCha8 seeded with `seed`, so samples are reproducible across platforms.
pub fn random_graph(n: usize, edge_prob: f64, seed: u64) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_graph_from(n, edge_prob, &mut rng)
}

pub(crate) fn random_graph_from(n: usize, edge_prob: f64, rng: &mut ChaCha8Rng) -> Result<Graph> {
    if !(0.0..=1.0).contains(&edge_prob) {
        return Err(Error::Parameter(format!(
            "edge probability must lie in [0, 1], got {edge_prob}"
        )));
    }
    let mut adj = Graph::empty(n)?.adjacency().to_vec();
    for j in 1..n {
        for i in 0..j {
            if rng.gen_bool(edge_prob) {
                adj[i].insert(j);
                adj[j].insert(i);
            }
        }
    }
    Ok(Graph::from_adjacency(adj))
}

/// Draws `G(n, p)` samples from `rng` until one has no isolated vertices.
pub fn random_isolate_free(n: usize, edge_prob: f64, rng: &mut ChaCha8Rng) -> Result<Graph> {
    if n < 2 || edge_prob <= 0.0 {
        return Err(Error::Parameter(format!(
            "no isolate-free G({n}, {edge_prob}) samples exist"
        )));
    }
    loop {
        let g = random_graph_from(n, edge_prob, rng)?;
        if !g.has_isolated_vertices() {
            return Ok(g);
        }
    }
}

/// Structural family of the extremal graphs for `τ_max = 2√n - 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum FamilyTag {
    TwoK2,
    C4,
    Hs(usize),
    Other,
}

/// Recognises `2K_2`, `C_4` and `H_s` from degrees and adjacency alone.
pub fn recognize_family(g: &Graph) -> FamilyTag {
    let n = g.n();
    let deg = g.degrees();
    if n == 4 && g.m() == 2 && deg.iter().all(|&d| d == 1) {
        return FamilyTag::TwoK2;
    }
    if n == 4 && g.m() == 4 && deg.iter().all(|&d| d == 2) && g.is_bipartite() {
        return FamilyTag::C4;
    }
    let s = n.isqrt();
    if s == 0 || s * s != n {
        return FamilyTag::Other;
    }
    if s == 1 {
        return if g.m() == 0 { FamilyTag::Hs(1) } else { FamilyTag::Other };
    }
    let core: VertexSet = (0..n).filter(|&v| deg[v] == 2 * s - 2).collect();
    if core.len() != s {
        return FamilyTag::Other;
    }
    for v in core.iter() {
        let nb = g.neighbors(v);
        if !core.without(v).is_subset(nb) {
            return FamilyTag::Other;
        }
        let pendants = nb.difference(core);
        if pendants.len() != s - 1 || pendants.iter().any(|p| deg[p] != 1) {
            return FamilyTag::Other;
        }
    }
    // s cliques vertices with s-1 private leaves each account for all s^2.
    FamilyTag::Hs(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_family, FamilySpec};

    #[test]
    fn small_class_counts() {
        let expected = [1, 1, 2, 4, 11, 34, 156, 1044];
        for (n, &c) in expected.iter().enumerate() {
            assert_eq!(enumerate_classes(n, GraphFilter::All).unwrap().len(), c, "n={n}");
        }
        assert_eq!(enumerate_classes(4, GraphFilter::NoIsolated).unwrap().len(), 7);
        assert_eq!(enumerate_classes(4, GraphFilter::Connected).unwrap().len(), 6);
        assert!(enumerate_classes(10, GraphFilter::All).is_err());
    }

    #[test]
    fn random_graph_extremes_and_determinism() {
        assert_eq!(random_graph(6, 0.0, 1).unwrap().m(), 0);
        assert_eq!(random_graph(6, 1.0, 1).unwrap().m(), 15);
        assert_eq!(random_graph(9, 0.5, 42).unwrap(), random_graph(9, 0.5, 42).unwrap());
        assert!(random_graph(3, 1.5, 0).is_err());
        assert!(random_graph(3, f64::NAN, 0).is_err());
    }

    #[test]
    fn recognizer() {
        for s in 1..=10 {
            let g = build_family(FamilySpec::Hs(s)).unwrap();
            assert_eq!(recognize_family(&g), FamilyTag::Hs(s));
        }
        let p3 = build_family(FamilySpec::Path(3)).unwrap();
        assert_eq!(recognize_family(&p3), FamilyTag::Hs(2));
        assert_eq!(recognize_family(&build_family(FamilySpec::TwoK2).unwrap()), FamilyTag::TwoK2);
        assert_eq!(recognize_family(&build_family(FamilySpec::Cycle(4)).unwrap()), FamilyTag::C4);
        assert_eq!(recognize_family(&build_family(FamilySpec::Cycle(5)).unwrap()), FamilyTag::Other);
        let star = build_family(FamilySpec::CompleteBipartite(1, 3)).unwrap();
        assert_eq!(recognize_family(&star), FamilyTag::Other);
        assert_eq!(recognize_family(&Graph::complete(4).unwrap()), FamilyTag::Other);
    }
}
