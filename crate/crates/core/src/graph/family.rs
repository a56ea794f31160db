//! Named graph families.
//!
//! Labelling is fixed so that witnesses are reproducible: clique (core)
//! vertices first, then pendant blocks in order of the clique vertex they
//! hang from, then any extra leaves in the order they are added.

use std::fmt;
use std::str::FromStr;

use super::Graph;
use crate::error::{Error, Result};
use crate::spectrum;
use crate::vertex_set::{VertexSet, MAX_VERTICES};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    /// `K_s` with `s - 1` private pendant vertices on every clique vertex
    /// (`s^2` vertices). `H_1 = K_1`, `H_2 = P_3`.
    Hs(usize),
    /// The `n`-vertex graph built from `H_a` (`a^2 <= n < (a+1)^2`) by
    /// hanging up to two rounds of leaves on the clique vertices in order.
    Gn(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    /// Cycle on `len >= 3` vertices.
    Cycle(usize),
    /// Path with `len` edges (`len + 1` vertices).
    Path(usize),
    TwoK2,
    /// Chordal gap-free graph on `n` vertices with `pd = p`, `reg = 1`.
    Spectrum { n: usize, p: usize },
    /// Spectrum graph plus `r - 1` disjoint edges, with `pd = p`, `reg = r`.
    Pdr { n: usize, p: usize, r: usize },
}

pub fn build_family(spec: FamilySpec) -> Result<Graph> {
    match spec {
        FamilySpec::Hs(s) => hs(s),
        FamilySpec::Gn(n) => gn(n),
        FamilySpec::Complete(s) => {
            if s == 0 {
                return Err(Error::Parameter("K_s requires s >= 1".into()));
            }
            Graph::complete(s)
        }
        FamilySpec::CompleteBipartite(r, s) => {
            if r == 0 || s == 0 {
                return Err(Error::Parameter("K_{r,s} requires r, s >= 1".into()));
            }
            check_size(r + s)?;
            Graph::from_edges(r + s, (0..r).flat_map(|i| (r..r + s).map(move |j| (i, j))))
        }
        FamilySpec::Cycle(len) => {
            if len < 3 {
                return Err(Error::Parameter(format!("C_{len}: a cycle needs at least 3 vertices")));
            }
            check_size(len)?;
            Graph::from_edges(len, (0..len).map(|i| (i, (i + 1) % len)))
        }
        FamilySpec::Path(len) => {
            check_size(len + 1)?;
            Graph::from_edges(len + 1, (0..len).map(|i| (i, i + 1)))
        }
        FamilySpec::TwoK2 => Graph::from_edges(4, [(0, 1), (2, 3)]),
        FamilySpec::Spectrum { n, p } => spectrum::build_spectrum_graph(n, p),
        FamilySpec::Pdr { n, p, r } => spectrum::build_pdr_graph(n, p, r),
    }
}

fn check_size(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        return Err(Error::ResourceLimit {
            what: "vertex count",
            limit: MAX_VERTICES,
            actual: n,
        });
    }
    Ok(())
}

/// `K_s` on `0..s` with blocks of pendants attached to each clique vertex.
/// `blocks[i]` pendants hang from clique vertex `i`, numbered consecutively.
pub(crate) fn clique_with_pendants(s: usize, blocks: &[usize]) -> Result<Graph> {
    debug_assert!(blocks.len() <= s);
    let n = s + blocks.iter().sum::<usize>();
    check_size(n)?;
    let mut adj = vec![VertexSet::EMPTY; n];
    for (v, nb) in adj.iter_mut().enumerate().take(s) {
        *nb = VertexSet::full(s).without(v);
    }
    let mut next = s;
    for (i, &k) in blocks.iter().enumerate() {
        for _ in 0..k {
            adj[i].insert(next);
            next += 1;
        }
    }
    Ok(Graph::from_adjacency(adj))
}

fn hs(s: usize) -> Result<Graph> {
    if s == 0 {
        return Err(Error::Parameter("H_s requires s >= 1".into()));
    }
    check_size(s * s)?;
    clique_with_pendants(s, &vec![s - 1; s])
}

fn gn(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::Parameter(format!("G_n requires n >= 2, got {n}")));
    }
    check_size(n)?;
    let a = n.isqrt();
    let extra = n - a * a;
    let mut adj = hs(a)?.adj;
    // First round hangs a leaf on x_1..x_k with k = min(extra, a); the
    // second round starts again from x_1.
    for i in 0..extra {
        adj.push(VertexSet::EMPTY);
        adj[i % a].insert(a * a + i);
    }
    Ok(Graph::from_adjacency(adj))
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Hs(s) => write!(f, "hs:{s}"),
            FamilySpec::Gn(n) => write!(f, "gn:{n}"),
            FamilySpec::Complete(s) => write!(f, "k:{s}"),
            FamilySpec::CompleteBipartite(r, s) => write!(f, "kb:{r},{s}"),
            FamilySpec::Cycle(l) => write!(f, "cycle:{l}"),
            FamilySpec::Path(l) => write!(f, "path:{l}"),
            FamilySpec::TwoK2 => write!(f, "2k2"),
            FamilySpec::Spectrum { n, p } => write!(f, "spectrum:{n},{p}"),
            FamilySpec::Pdr { n, p, r } => write!(f, "pdr:{n},{p},{r}"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Accepts `kind:a[,b[,c]]` (as printed by `Display`), the same with
    /// whitespace in place of `:` and `,`, and the short forms `2k2`, `c4`,
    /// `p3`, `k5`, `h3`.
    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        let bad = || Error::Parameter(format!("unrecognised family `{s}`"));
        let mut parts = lower.split([':', ',', ' ']).filter(|p| !p.is_empty());
        let head = parts.next().ok_or_else(bad)?;
        let args = parts
            .map(|p| p.parse::<usize>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;

        if head == "2k2" && args.is_empty() {
            return Ok(FamilySpec::TwoK2);
        }
        let (name, args) = match head.find(|c: char| c.is_ascii_digit()) {
            Some(i) if args.is_empty() => {
                let num = head[i..].parse::<usize>().map_err(|_| bad())?;
                (&head[..i], vec![num])
            }
            _ => (head, args),
        };
        let spec = match (name, args.as_slice()) {
            ("hs" | "h", [s]) => FamilySpec::Hs(*s),
            ("gn" | "g", [n]) => FamilySpec::Gn(*n),
            ("k" | "complete", [s]) => FamilySpec::Complete(*s),
            ("kb" | "bipartite", [r, s]) => FamilySpec::CompleteBipartite(*r, *s),
            ("star", [n]) if *n >= 2 => FamilySpec::CompleteBipartite(1, n - 1),
            ("c" | "cycle", [l]) => FamilySpec::Cycle(*l),
            ("p" | "path", [l]) => FamilySpec::Path(*l),
            ("spectrum", [n, p]) => FamilySpec::Spectrum { n: *n, p: *p },
            ("pdr", [n, p, r]) => FamilySpec::Pdr { n: *n, p: *p, r: *r },
            _ => return Err(bad()),
        };
        Ok(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn h5_size() {
        let g = build_family(FamilySpec::Hs(5)).unwrap();
        assert_eq!(g.n(), 25);
        assert_eq!(g.m(), 30);
    }

    #[test]
    fn h1_is_single_vertex() {
        let g = build_family(FamilySpec::Hs(1)).unwrap();
        assert_eq!(g.n(), 1);
        assert_eq!(g.m(), 0);
        assert!(build_family(FamilySpec::Hs(0)).is_err());
    }

    #[test]
    fn h2_is_p3() {
        let h2 = build_family(FamilySpec::Hs(2)).unwrap();
        // 0-1 clique, 2 hangs from 0, 3 hangs from 1.
        assert_eq!(h2, Graph::from_edges(4, [(0, 1), (0, 2), (1, 3)]).unwrap());
    }

    #[test]
    fn hs_degrees() {
        for s in 2..=8 {
            let g = build_family(FamilySpec::Hs(s)).unwrap();
            let d = g.degrees();
            assert_eq!(d.iter().filter(|&&x| x == 2 * s - 2).count(), s);
            assert_eq!(d.iter().filter(|&&x| x == 1).count(), s * (s - 1));
            assert_eq!(g.m(), s * (s - 1) / 2 + s * (s - 1));
        }
    }

    #[test]
    fn g27_is_h5_plus_two_leaves() {
        let g = build_family(FamilySpec::Gn(27)).unwrap();
        assert_eq!(g.n(), 27);
        assert_eq!(g.m(), 32);
        assert!(g.has_edge(0, 25));
        assert!(g.has_edge(1, 26));
    }

    #[test]
    fn g31_second_round_of_leaves() {
        let g = build_family(FamilySpec::Gn(31)).unwrap();
        assert_eq!(g.n(), 31);
        assert_eq!(g.m(), 36);
        assert!(g.has_edge(0, 30));
        assert_eq!(g.degree(0), 8 + 2);
        assert_eq!(g.degree(1), 8 + 1);
    }

    #[test]
    fn small_gn() {
        assert_eq!(build_family(FamilySpec::Gn(2)).unwrap(), Graph::complete(2).unwrap());
        assert_eq!(
            build_family(FamilySpec::Gn(3)).unwrap(),
            Graph::from_edges(3, [(0, 1), (0, 2)]).unwrap()
        );
        assert!(build_family(FamilySpec::Gn(1)).is_err());
    }

    #[test]
    fn family_chordal_and_gap_free() {
        for s in 1..=8 {
            let g = build_family(FamilySpec::Hs(s)).unwrap();
            assert!(g.is_chordal() && g.is_gap_free(), "H_{s}");
        }
        for n in 2..=40 {
            let g = build_family(FamilySpec::Gn(n)).unwrap();
            assert_eq!(g.n(), n);
            assert!(g.is_chordal() && g.is_gap_free(), "G_{n}");
        }
    }

    #[test]
    fn parse_specs() {
        assert_eq!("hs:5".parse::<FamilySpec>().unwrap(), FamilySpec::Hs(5));
        assert_eq!("hs 5".parse::<FamilySpec>().unwrap(), FamilySpec::Hs(5));
        assert_eq!("h3".parse::<FamilySpec>().unwrap(), FamilySpec::Hs(3));
        assert_eq!("c4".parse::<FamilySpec>().unwrap(), FamilySpec::Cycle(4));
        assert_eq!("2K2".parse::<FamilySpec>().unwrap(), FamilySpec::TwoK2);
        assert_eq!(
            "pdr:8,5,2".parse::<FamilySpec>().unwrap(),
            FamilySpec::Pdr { n: 8, p: 5, r: 2 }
        );
        assert_eq!(
            "star:5".parse::<FamilySpec>().unwrap(),
            FamilySpec::CompleteBipartite(1, 4)
        );
        assert!("hs".parse::<FamilySpec>().is_err());
        assert!("wheel:5".parse::<FamilySpec>().is_err());
        for spec in [
            FamilySpec::Hs(3),
            FamilySpec::Gn(27),
            FamilySpec::CompleteBipartite(2, 3),
            FamilySpec::Spectrum { n: 10, p: 5 },
        ] {
            assert_eq!(spec.to_string().parse::<FamilySpec>().unwrap(), spec);
        }
    }

    #[test]
    fn parameter_errors() {
        assert!(build_family(FamilySpec::Cycle(2)).is_err());
        assert!(build_family(FamilySpec::Complete(0)).is_err());
        assert!(build_family(FamilySpec::CompleteBipartite(0, 3)).is_err());
        assert!(build_family(FamilySpec::Hs(12)).is_err());
    }
}
