//! Graded Betti numbers of `S/I(G)` for edge ideals, via Hochster's formula
//!
//! ```text
//! β_{i,j}(S/I(G)) = Σ_{|W| = j} dim H̃_{j-i-1}(Ind(G[W]); K)
//! ```
//!
//! The per-subset homology is computed after exact simplifications that
//! preserve homotopy type: a vertex `v` is deleted whenever some other vertex
//! `u` has `N(u) ⊆ N(v)` (then `Ind(G) ≃ Ind(G - v)`); an isolated vertex
//! makes the complex a cone; and a disconnected graph has an independence
//! complex that is the join of its components' complexes, whose homology is
//! the convolution of theirs. What remains is computed from boundary ranks
//! and memoised by canonical form.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use serde::{Serialize, Serializer};

use crate::atlas::canon::{canon_bits, CANON_MAX_N};
use crate::covers;
use crate::error::{Error, Result};
use crate::graph::{components_within, Graph};
use crate::homology::{self, FieldSpec, SimplicialComplex};
use crate::vertex_set::VertexSet;

/// Default cap on the vertex count for Betti computations (`2^16` subsets).
pub const DEFAULT_MAX_N: usize = 16;

/// Hard ceiling for a configured cap; subsets are indexed by `u64`.
pub const ABSOLUTE_MAX_N: usize = 40;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BettiOptions {
    pub max_n: usize,
}

impl Default for BettiOptions {
    fn default() -> Self {
        BettiOptions {
            max_n: DEFAULT_MAX_N,
        }
    }
}

impl BettiOptions {
    fn check(&self, n: usize) -> Result<()> {
        let limit = self.max_n.min(ABSOLUTE_MAX_N);
        if n > limit {
            return Err(Error::ResourceLimit {
                what: "Betti table vertex count",
                limit,
                actual: n,
            });
        }
        Ok(())
    }
}

/// Graded Betti numbers `β_{i,j}` of `S/I(G)` over a fixed field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    n: usize,
    field: FieldSpec,
    entries: BTreeMap<(usize, usize), u64>,
    pd: usize,
    reg: usize,
}

impl BettiTable {
    pub(crate) fn from_entries(
        n: usize,
        field: FieldSpec,
        entries: BTreeMap<(usize, usize), u64>,
    ) -> Self {
        let entries: BTreeMap<_, _> = entries.into_iter().filter(|(_, b)| *b != 0).collect();
        let pd = entries.keys().map(|&(i, _)| i).max().unwrap_or(0);
        let reg = entries.keys().map(|&(i, j)| j - i).max().unwrap_or(0);
        BettiTable {
            n,
            field,
            entries,
            pd,
            reg,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries keyed by `(i, j)`, in `(i, j)` order.
    pub fn entries(&self) -> &BTreeMap<(usize, usize), u64> {
        &self.entries
    }

    /// Projective dimension: largest `i` with a nonzero `β_{i,j}`.
    pub fn pd(&self) -> usize {
        self.pd
    }

    /// Castelnuovo–Mumford regularity: largest `j - i` with `β_{i,j} != 0`.
    pub fn reg(&self) -> usize {
        self.reg
    }

    /// Total Betti number in homological degree `i`.
    pub fn total(&self, i: usize) -> u64 {
        self.entries
            .iter()
            .filter(|((a, _), _)| *a == i)
            .map(|(_, b)| b)
            .sum()
    }

    /// Standard Betti diagram: columns are `i`, rows are `j - i`.
    pub fn render_ascii(&self) -> String {
        let cols: Vec<usize> = (0..=self.pd).collect();
        let cell = |s: String| format!("{s:>6}");
        let mut out = String::new();
        out.push_str(&" ".repeat(7));
        for &i in &cols {
            out.push_str(&cell(i.to_string()));
        }
        out.push('\n');
        out.push_str("total:");
        out.push(' ');
        for &i in &cols {
            out.push_str(&cell(self.total(i).to_string()));
        }
        out.push('\n');
        for r in 0..=self.reg {
            let _ = write!(out, "{r:>5}: ");
            for &i in &cols {
                let b = self.get(i, i + r);
                out.push_str(&cell(if b == 0 { ".".into() } else { b.to_string() }));
            }
            out.push('\n');
        }
        out
    }
}

#[derive(Serialize)]
struct EntryJson {
    i: usize,
    j: usize,
    beta: u64,
}

#[derive(Serialize)]
struct TableJson {
    n: usize,
    char: u64,
    entries: Vec<EntryJson>,
    pd: usize,
    reg: usize,
}

impl Serialize for BettiTable {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        TableJson {
            n: self.n,
            char: self.field.characteristic(),
            entries: self
                .entries
                .iter()
                .map(|(&(i, j), &beta)| EntryJson { i, j, beta })
                .collect(),
            pd: self.pd,
            reg: self.reg,
        }
        .serialize(serializer)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
enum Key {
    Canonical(u8, u128),
    Labeled(Vec<u128>),
}

/// Reduced homology of independence complexes of induced subgraphs, with a
/// memo keyed by the isomorphism type of each irreducible component.
pub struct HochsterEngine<'g> {
    adj: &'g [VertexSet],
    field: FieldSpec,
    memo: HashMap<Key, Vec<u64>>,
}

impl<'g> HochsterEngine<'g> {
    pub fn new(g: &'g Graph, field: FieldSpec) -> Self {
        HochsterEngine {
            adj: g.adjacency(),
            field,
            memo: HashMap::new(),
        }
    }

    /// `dim H̃_k(Ind(G[w]))` in slot `k + 1`, trailing zeros trimmed.
    pub fn summand(&mut self, w: VertexSet) -> Vec<u64> {
        if w.is_empty() {
            return vec![1];
        }
        let Some(core) = fold(self.adj, w) else {
            return Vec::new();
        };
        let mut acc = vec![1u64];
        for comp in components_within(self.adj, core) {
            let h = self.component_homology(comp);
            if h.is_empty() {
                return Vec::new();
            }
            acc = convolve(&acc, &h);
        }
        acc
    }

    fn component_homology(&mut self, comp: VertexSet) -> Vec<u64> {
        let verts = comp.to_vec();
        if verts.len() == 2 {
            // A single edge: two points.
            return vec![0, 1];
        }
        let local: Vec<u128> = verts
            .iter()
            .map(|&v| {
                verts
                    .iter()
                    .enumerate()
                    .filter(|(_, &u)| self.adj[v].contains(u))
                    .fold(0u128, |a, (i, _)| a | 1 << i)
            })
            .collect();
        let key = if verts.len() <= CANON_MAX_N {
            let small: Vec<u16> = local.iter().map(|&a| a as u16).collect();
            Key::Canonical(verts.len() as u8, canon_bits(&small))
        } else {
            Key::Labeled(local.clone())
        };
        if let Some(h) = self.memo.get(&key) {
            return h.clone();
        }
        let sub = Graph::from_adjacency(local.iter().map(|&a| VertexSet::from_bits(a)).collect());
        let cx = SimplicialComplex::independence(&sub);
        let h = homology::reduced_homology(&cx, self.field);
        self.memo.insert(key, h.clone());
        h
    }
}

/// Repeatedly deletes a vertex `v` for which another vertex `u` has
/// `N(u) ⊆ N(v)` inside `alive`. Returns `None` when the complex is
/// contractible (a single vertex survives, which happens exactly when an
/// isolated vertex is present).
fn fold(adj: &[VertexSet], mut alive: VertexSet) -> Option<VertexSet> {
    'restart: loop {
        if alive.len() <= 1 {
            return if alive.is_empty() { Some(alive) } else { None };
        }
        for u in alive.iter() {
            let nu = adj[u].intersection(alive);
            if nu.is_empty() {
                return None;
            }
            // Candidates v must be adjacent to every neighbour of u.
            let mut cand = alive.without(u);
            for x in nu.iter() {
                cand = cand.intersection(adj[x]);
                if cand.is_empty() {
                    break;
                }
            }
            if let Some(v) = cand.last() {
                alive.remove(v);
                continue 'restart;
            }
        }
        return Some(alive);
    }
}

fn convolve(a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    homology::trim(&mut out);
    out
}

/// Subsets of `0..n` with exactly `k` elements, as `u64` masks (Gosper).
fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = u64> {
    let limit = 1u64 << n;
    let mut cur = if k == 0 { Some(0u64) } else if k > n { None } else { Some((1u64 << k) - 1) };
    std::iter::from_fn(move || {
        let c = cur?;
        cur = if c == 0 {
            None
        } else {
            let low = c & c.wrapping_neg();
            let ripple = c + low;
            let next = (((c ^ ripple) >> 2) / low) | ripple;
            (next < limit).then_some(next)
        };
        Some(c)
    })
}

pub fn betti_table(g: &Graph, field: FieldSpec) -> Result<BettiTable> {
    betti_table_with(g, field, BettiOptions::default())
}

pub fn betti_table_with(g: &Graph, field: FieldSpec, opts: BettiOptions) -> Result<BettiTable> {
    let n = g.n();
    opts.check(n)?;
    let mut engine = HochsterEngine::new(g, field);
    let mut entries = BTreeMap::new();
    for mask in 0..(1u64 << n) {
        let w = VertexSet::from_bits(mask as u128);
        let j = w.len();
        for (slot, &d) in engine.summand(w).iter().enumerate() {
            if d != 0 {
                *entries.entry((j - slot, j)).or_insert(0) += d;
            }
        }
    }
    Ok(BettiTable::from_entries(n, field, entries))
}

/// `pd(S/I(G))`. Scans subsets from largest to smallest and stops once no
/// smaller subset can raise the maximum; agrees with [`betti_table`].
pub fn proj_dim(g: &Graph, field: FieldSpec) -> Result<usize> {
    proj_dim_with(g, field, BettiOptions::default())
}

pub fn proj_dim_with(g: &Graph, field: FieldSpec, opts: BettiOptions) -> Result<usize> {
    let n = g.n();
    opts.check(n)?;
    let mut engine = HochsterEngine::new(g, field);
    let mut best = 0;
    for j in (1..=n).rev() {
        // Nonempty W has no H̃_{-1}, so i = j - (k + 1) <= j - 1.
        if j - 1 <= best {
            break;
        }
        for mask in subsets_of_size(n, j) {
            let h = engine.summand(VertexSet::from_bits(mask as u128));
            if let Some(slot) = h.iter().position(|&d| d != 0) {
                best = best.max(j - slot);
            }
        }
    }
    Ok(best)
}

/// `reg(S/I(G))`. Skips subsets whose independence number cannot beat the
/// running maximum (homology of `Ind(H)` lives in degrees below `α(H)`);
/// agrees with [`betti_table`].
pub fn regularity(g: &Graph, field: FieldSpec) -> Result<usize> {
    regularity_with(g, field, BettiOptions::default())
}

pub fn regularity_with(g: &Graph, field: FieldSpec, opts: BettiOptions) -> Result<usize> {
    let n = g.n();
    opts.check(n)?;
    let mut engine = HochsterEngine::new(g, field);
    let adj = g.adjacency();
    let mut best = 0;
    for j in (1..=n).rev() {
        if j <= best {
            break;
        }
        for mask in subsets_of_size(n, j) {
            let w = VertexSet::from_bits(mask as u128);
            if independence_number(adj, w) <= best {
                continue;
            }
            let h = engine.summand(w);
            if !h.is_empty() {
                best = best.max(h.len() - 1);
            }
        }
    }
    Ok(best)
}

fn independence_number(adj: &[VertexSet], alive: VertexSet) -> usize {
    fn go(adj: &[VertexSet], alive: VertexSet) -> usize {
        let Some(v) = alive
            .iter()
            .max_by_key(|&v| adj[v].intersection(alive).len())
        else {
            return 0;
        };
        let d = adj[v].intersection(alive).len();
        if d == 0 {
            return alive.len();
        }
        let take = 1 + go(adj, alive.difference(adj[v]).without(v));
        let skip = go(adj, alive.without(v));
        take.max(skip)
    }
    go(adj, alive)
}

/// `dim H̃_k(Ind(G[w]))` for every `k` with a nonzero value.
pub fn hochster_summand(g: &Graph, w: VertexSet, field: FieldSpec) -> Result<BTreeMap<isize, u64>> {
    if !w.is_subset(g.vertices()) {
        return Err(Error::Parameter(format!(
            "vertex set {w:?} is not contained in 0..{}",
            g.n()
        )));
    }
    let mut engine = HochsterEngine::new(g, field);
    Ok(engine
        .summand(w)
        .into_iter()
        .enumerate()
        .filter(|(_, d)| *d != 0)
        .map(|(slot, d)| (slot as isize - 1, d))
        .collect())
}

/// Betti table of `S/J` where `J = I(G)^∨` is the cover ideal, computed by
/// Hochster's formula on the Alexander dual of `Ind(G)`: a set `F` is a face
/// iff `V \ F` contains an edge.
pub fn cover_ideal_betti_table(g: &Graph, field: FieldSpec, opts: BettiOptions) -> Result<BettiTable> {
    let n = g.n();
    opts.check(n)?;
    let all = g.vertices();
    let mut entries = BTreeMap::new();
    for mask in 0..(1u64 << n) {
        let w = VertexSet::from_bits(mask as u128);
        let cx = SimplicialComplex::from_oracle(w, |f| !g.is_independent(all.difference(f)));
        let j = w.len();
        for (slot, d) in homology::reduced_homology(&cx, field).into_iter().enumerate() {
            if d != 0 {
                *entries.entry((j - slot, j)).or_insert(0) += d;
            }
        }
    }
    Ok(BettiTable::from_entries(n, field, entries))
}

/// Both sides of the identity `reg(I(G)^∨) = pd(S/I(G))` and the bound
/// `reg(I(G)^∨) >= τ_max(G)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DualReport {
    /// Regularity of the cover ideal `I(G)^∨` (one more than that of its
    /// quotient ring).
    pub reg_dual: usize,
    pub pd_primal: usize,
    pub tau_max: usize,
}

impl DualReport {
    pub fn identity_holds(&self) -> bool {
        self.reg_dual == self.pd_primal
    }

    pub fn bound_holds(&self) -> bool {
        self.reg_dual >= self.tau_max
    }
}

pub fn dual_check(g: &Graph, field: FieldSpec) -> Result<DualReport> {
    dual_check_with(g, field, BettiOptions::default())
}

pub fn dual_check_with(g: &Graph, field: FieldSpec, opts: BettiOptions) -> Result<DualReport> {
    if g.has_isolated_vertices() {
        return Err(Error::Precondition(format!(
            "dual check needs a graph without isolated vertices; isolated: {:?}",
            g.isolated_vertices()
        )));
    }
    let dual = cover_ideal_betti_table(g, field, opts)?;
    let primal = betti_table_with(g, field, opts)?;
    Ok(DualReport {
        reg_dual: dual.reg() + 1,
        pd_primal: primal.pd(),
        tau_max: covers::tau_max(g).tau_max,
    })
}
