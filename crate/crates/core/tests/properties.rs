//! Property tests over random small graphs.

mod common;

use maxmin::atlas::canonical_form;
use maxmin::betti::{betti_table, proj_dim, regularity};
use maxmin::covers::{
    enumerate_minimal_covers, induced_matching_number, is_minimal_vertex_cover, matching_number,
    tau_max,
};
use maxmin::graph::{emit_graph, parse_graph, GraphFormat};
use maxmin::homology::{reduced_homology, SimplicialComplex};
use maxmin::{FieldSpec, Graph};
use proptest::prelude::*;

use common::graph_from_mask;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        any::<u128>().prop_map(move |m| {
            let mask = if pairs >= 128 { m } else { m & ((1u128 << pairs) - 1) };
            graph_from_mask(n, mask)
        })
    })
}

fn isolate_free(max_n: usize) -> impl Strategy<Value = Graph> {
    graph(max_n).prop_filter("isolated vertex", |g| g.n() >= 2 && !g.has_isolated_vertices())
}

/// Chordal graphs grown by perfect elimination: each new vertex is joined to
/// a clique of the graph built so far (a random vertex and some of its
/// earlier neighbours that are pairwise adjacent).
fn chordal(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n, proptest::collection::vec((any::<u16>(), any::<u16>()), max_n - 1)).prop_map(
        |(n, choices)| {
            let mut edges: Vec<(usize, usize)> = Vec::new();
            let adj = |edges: &[(usize, usize)], a: usize, b: usize| {
                edges.iter().any(|&(x, y)| (x, y) == (a.min(b), a.max(b)))
            };
            for (i, &(pick, extra)) in choices.iter().enumerate().take(n - 1) {
                let v = i + 1;
                let anchor = pick as usize % v;
                let mut clique = vec![anchor];
                for u in 0..v {
                    if u != anchor
                        && extra >> (u % 16) & 1 == 1
                        && clique.iter().all(|&c| adj(&edges, c, u))
                    {
                        clique.push(u);
                    }
                }
                for c in clique {
                    edges.push((c, v));
                }
            }
            Graph::from_edges(n, edges).unwrap()
        },
    )
}

fn brute_chordal(g: &Graph) -> bool {
    // Chordal iff no induced cycle of length >= 4: search every vertex subset
    // of size >= 4 for one inducing a cycle.
    let n = g.n();
    (0u32..(1 << n)).all(|mask| {
        let vs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if vs.len() < 4 {
            return true;
        }
        let deg = |v: usize| vs.iter().filter(|&&u| g.has_edge(u, v)).count();
        let two_regular = vs.iter().all(|&v| deg(v) == 2);
        !(two_regular && g.induced_subgraph(vs.iter().copied().collect()).unwrap().is_connected())
    })
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 128,
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn complement_is_an_involution(g in graph(12)) {
        prop_assert_eq!(g.complement().complement(), g.clone());
        prop_assert_eq!(g.m() + g.complement().m(), g.n() * g.n().saturating_sub(1) / 2);
    }

    #[test]
    fn graph6_round_trip(g in graph(12)) {
        prop_assert_eq!(parse_graph(&emit_graph(&g, GraphFormat::Graph6)).unwrap(), g.clone());
        prop_assert_eq!(parse_graph(&emit_graph(&g, GraphFormat::EdgeList)).unwrap(), g);
    }

    #[test]
    fn canonical_form_is_relabeling_invariant(
        g in graph(10),
        perm in Just((0..10).collect::<Vec<usize>>()).prop_shuffle()
    ) {
        let perm: Vec<usize> = perm.into_iter().filter(|&v| v < g.n()).collect();
        let h = g.relabel(&perm).unwrap();
        let f = canonical_form(&g).unwrap();
        prop_assert_eq!(canonical_form(&h).unwrap(), f);
        prop_assert_eq!(canonical_form(&f.to_graph()).unwrap(), f);
    }

    #[test]
    fn euler_poincare(g in graph(9), c in prop_oneof![Just(0u64), Just(2), Just(3), Just(5)]) {
        let cx = SimplicialComplex::independence(&g);
        let h = reduced_homology(&cx, FieldSpec::new(c).unwrap());
        let alternating: i64 = h.iter().enumerate()
            .map(|(slot, &d)| if slot % 2 == 0 { -(d as i64) } else { d as i64 })
            .sum();
        prop_assert_eq!(alternating, cx.reduced_euler_characteristic());
    }

    #[test]
    fn homology_agrees_across_fields_for_independence_complexes(g in graph(8)) {
        // Independence complexes of graphs this small are torsion-free.
        let cx = SimplicialComplex::independence(&g);
        let gf2 = reduced_homology(&cx, FieldSpec::gf2());
        prop_assert_eq!(&reduced_homology(&cx, FieldSpec::new(3).unwrap()), &gf2);
        prop_assert_eq!(&reduced_homology(&cx, FieldSpec::rationals()), &gf2);
    }

    #[test]
    fn minimal_covers_are_minimal_and_tau_max_is_their_max(g in graph(10)) {
        let covers = enumerate_minimal_covers(&g);
        let report = tau_max(&g);
        prop_assert_eq!(covers.len() as u64, report.num_minimal_covers);
        prop_assert!(covers.iter().all(|&c| is_minimal_vertex_cover(&g, c)));
        prop_assert_eq!(covers.iter().map(|c| c.len()).max().unwrap(), report.tau_max);
        prop_assert_eq!(report.tau_max + report.i_min, g.n());
        prop_assert!(is_minimal_vertex_cover(&g, report.witness_cover));
    }

    #[test]
    fn matching_chain(g in graph(10)) {
        let nu = induced_matching_number(&g);
        let beta = matching_number(&g);
        prop_assert!(nu <= beta);
        prop_assert!(2 * beta <= g.n());
        prop_assert_eq!(g.is_gap_free(), nu <= 1);
    }

    #[test]
    fn regularity_between_matching_numbers(g in graph(8)) {
        let t = betti_table(&g, FieldSpec::gf2()).unwrap();
        prop_assert!(induced_matching_number(&g) <= t.reg());
        prop_assert!(t.reg() <= matching_number(&g));
        prop_assert_eq!(proj_dim(&g, FieldSpec::gf2()).unwrap(), t.pd());
        prop_assert_eq!(regularity(&g, FieldSpec::gf2()).unwrap(), t.reg());
    }

    #[test]
    fn pd_bounded_by_tau_max_and_n(g in isolate_free(8)) {
        let pd = proj_dim(&g, FieldSpec::gf2()).unwrap();
        prop_assert!(tau_max(&g).tau_max <= pd);
        prop_assert!(pd < g.n());
    }

    #[test]
    fn chordal_equalities(g in chordal(10)) {
        prop_assert!(g.is_chordal());
        let t = betti_table(&g, FieldSpec::gf2()).unwrap();
        prop_assert_eq!(t.reg(), induced_matching_number(&g));
        if !g.has_isolated_vertices() {
            prop_assert_eq!(t.pd(), tau_max(&g).tau_max);
        }
    }

    #[test]
    fn chordality_matches_brute_force(g in graph(7)) {
        prop_assert_eq!(g.is_chordal(), brute_chordal(&g));
    }

    #[test]
    fn disjoint_union_is_additive(g in graph(6), h in graph(6)) {
        let u = g.disjoint_union(&h).unwrap();
        let f = FieldSpec::gf2();
        let (tg, th, tu) = (
            betti_table(&g, f).unwrap(),
            betti_table(&h, f).unwrap(),
            betti_table(&u, f).unwrap(),
        );
        prop_assert_eq!(tu.pd(), tg.pd() + th.pd());
        prop_assert_eq!(tu.reg(), tg.reg() + th.reg());
        prop_assert_eq!(tau_max(&u).tau_max, tau_max(&g).tau_max + tau_max(&h).tau_max);
    }
}
