//! Exhaustive and sampled checks of the `τ_max` lower bound, the extremal
//! classification at perfect squares, and the `(pd, reg)` spectrum.

use std::collections::{BTreeMap, BTreeSet};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::canon::{self, canonical_form, CanonicalForm};
use super::{atlas_level, enumerate_classes, random_isolate_free, recognize_family, FamilyTag};
use super::{GraphFilter, ENUM_MAX_N};
use crate::betti::{self, BettiOptions};
use crate::covers;
use crate::error::{Error, Result};
use crate::graph::{emit_graph, Graph, GraphFormat};
use crate::homology::FieldSpec;
use crate::spectrum;
use crate::vertex_set::VertexSet;

/// `⌈2√n − 2⌉` for `n >= 1` (and 0 for `n = 0`), in exact integer
/// arithmetic: the least `t >= 0` with `(t + 2)^2 >= 4n`.
pub fn lower_bound(n: usize) -> usize {
    if n == 0 {
        return 0;
    }
    // Least m with m^2 >= 4n.
    let m = (4 * n - 1).isqrt() + 1;
    m - 2
}

/// `tau >= 2√n − 2`, decided without floating point.
pub fn meets_bound(tau: usize, n: usize) -> bool {
    (tau + 2) * (tau + 2) >= 4 * n
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BoundMode {
    /// Every isolate-free isomorphism class (requires `n <= 9`).
    Exhaustive,
    /// `samples` isolate-free `G(n, edge_prob)` draws from a ChaCha8 stream
    /// seeded with `seed`.
    Sampled {
        samples: usize,
        seed: u64,
        edge_prob: f64,
    },
}

/// One line of the bound report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundRecord {
    pub n: usize,
    pub classes_visited: usize,
    /// graph6 of every graph with `τ_max < ⌈2√n − 2⌉`.
    pub violations: Vec<String>,
    /// graph6 of every visited graph attaining the bound.
    pub equality_class: Vec<String>,
}

pub fn verify_bound(n: usize, mode: BoundMode) -> Result<BoundRecord> {
    if n < 2 {
        return Err(Error::Parameter(format!("bound check needs n >= 2, got {n}")));
    }
    let target = lower_bound(n);
    let mut record = BoundRecord {
        n,
        classes_visited: 0,
        violations: Vec::new(),
        equality_class: Vec::new(),
    };
    match mode {
        BoundMode::Exhaustive => {
            for form in enumerate_classes(n, GraphFilter::NoIsolated)? {
                let g = form.to_graph();
                let tau = covers::tau_max(&g).tau_max;
                record.classes_visited += 1;
                if !meets_bound(tau, n) {
                    record.violations.push(form.graph6());
                }
                if tau == target {
                    record.equality_class.push(form.graph6());
                }
            }
        }
        BoundMode::Sampled {
            samples,
            seed,
            edge_prob,
        } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut equal = BTreeSet::new();
            let mut bad = BTreeSet::new();
            for _ in 0..samples {
                let g = random_isolate_free(n, edge_prob, &mut rng)?;
                let tau = covers::tau_max(&g).tau_max;
                record.classes_visited += 1;
                let key = || match canonical_form(&g) {
                    Ok(f) => f.graph6(),
                    Err(_) => emit_graph(&g, GraphFormat::Graph6),
                };
                if !meets_bound(tau, n) {
                    bad.insert(key());
                }
                if tau == target {
                    equal.insert(key());
                }
            }
            record.violations = bad.into_iter().collect();
            record.equality_class = equal.into_iter().collect();
        }
    }
    Ok(record)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassMember {
    pub graph6: String,
    pub tag: FamilyTag,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationRecord {
    pub n: usize,
    pub classes_visited: usize,
    pub equality_class: Vec<ClassMember>,
    /// Classes where "attains `2√n − 2`" and "is `2K_2`, `C_4` or `H_s`"
    /// disagree, in either direction.
    pub mismatches: Vec<String>,
}

/// Checks both directions of the characterisation of graphs with
/// `τ_max = 2√n − 2` over every isolate-free class on `n` vertices.
pub fn verify_classification(n: usize) -> Result<ClassificationRecord> {
    let s = n.isqrt();
    if s < 2 || s * s != n || n > ENUM_MAX_N {
        return Err(Error::Parameter(format!(
            "classification check needs a perfect square 4 <= n <= {ENUM_MAX_N}, got {n}"
        )));
    }
    let target = 2 * s - 2;
    let mut record = ClassificationRecord {
        n,
        classes_visited: 0,
        equality_class: Vec::new(),
        mismatches: Vec::new(),
    };
    for form in enumerate_classes(n, GraphFilter::NoIsolated)? {
        let g = form.to_graph();
        record.classes_visited += 1;
        let attains = covers::tau_max(&g).tau_max == target;
        let tag = recognize_family(&g);
        let member = match tag {
            FamilyTag::TwoK2 | FamilyTag::C4 => n == 4,
            FamilyTag::Hs(t) => t == s,
            FamilyTag::Other => false,
        };
        if attains != member {
            record.mismatches.push(form.graph6());
        }
        if attains {
            record.equality_class.push(ClassMember {
                graph6: form.graph6(),
                tag,
            });
        }
    }
    Ok(record)
}

/// A realised `(pd, reg)` pair with the first witness in canonical order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PdrPoint {
    pub p: usize,
    pub r: usize,
    pub witness: CanonicalForm,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PdrReport {
    pub n: usize,
    pub field: FieldSpec,
    pub classes_visited: usize,
    /// Sorted by `(p, r)`.
    pub points: Vec<PdrPoint>,
    /// `pd` values realised together with `reg = 1`.
    pub reg_one_row: Vec<usize>,
    /// Whether that row is exactly `[⌈2√n − 2⌉, n − 1]`.
    pub reg_one_row_complete: bool,
    /// `(p, r)` with `r >= 2` realised while `(p, r − 1)` is not.
    pub downward_closure_violations: Vec<(usize, usize)>,
    /// Pairs in the disjoint-union construction's range that were not found.
    pub construction_missing: Vec<(usize, usize)>,
}

/// All `(pd, reg)` pairs of isolate-free graphs on `n` vertices.
pub fn pdr_spectrum(n: usize, field: FieldSpec) -> Result<PdrReport> {
    if !(2..=8).contains(&n) {
        return Err(Error::Parameter(format!("pdr spectrum supports 2 <= n <= 8, got {n}")));
    }
    let mut points: BTreeMap<(usize, usize), CanonicalForm> = BTreeMap::new();
    let mut visited = 0;
    for form in enumerate_classes(n, GraphFilter::NoIsolated)? {
        let t = betti::betti_table_with(&form.to_graph(), field, BettiOptions::default())?;
        visited += 1;
        points.entry((t.pd(), t.reg())).or_insert(form);
    }
    let reg_one_row: Vec<usize> = points.keys().filter(|k| k.1 == 1).map(|k| k.0).collect();
    let expected: Vec<usize> = (lower_bound(n)..n).collect();
    let downward_closure_violations = points
        .keys()
        .filter(|&&(p, r)| r >= 2 && !points.contains_key(&(p, r - 1)))
        .copied()
        .collect();
    let mut construction_missing = Vec::new();
    for r in 1..=n / 2 {
        for p in 0..n {
            if spectrum::pdr_in_range(n, p, r) && !points.contains_key(&(p, r)) {
                construction_missing.push((p, r));
            }
        }
    }
    Ok(PdrReport {
        n,
        field,
        classes_visited: visited,
        points: points
            .into_iter()
            .map(|((p, r), witness)| PdrPoint { p, r, witness })
            .collect(),
        reg_one_row_complete: reg_one_row == expected,
        reg_one_row,
        downward_closure_violations,
        construction_missing,
    })
}

/// CSV rows `n,p,r,witness_graph6` with a header line.
pub fn pdr_spectrum_csv(report: &PdrReport) -> String {
    let mut out = String::from("n,p,r,witness_graph6\n");
    for pt in &report.points {
        out.push_str(&format!("{},{},{},{}\n", report.n, pt.p, pt.r, pt.witness.graph6()));
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExoticRecord {
    pub n: usize,
    pub tau_target: usize,
    pub candidates_examined: u64,
    /// Isolate-free classes with `τ_max = ⌈2√n − 2⌉` that are neither
    /// chordal nor gap-free, as canonical graph6.
    pub classes: Vec<String>,
}

/// Finds every isolate-free class on `n <= 10` vertices that attains the
/// bound while being neither chordal nor gap-free. For `n <= 9` the atlas is
/// filtered; for `n = 10` each 9-vertex class is extended by one vertex in
/// every way and only survivors of the filters are canonicalised.
pub fn search_exotic_extremal(n: usize) -> Result<ExoticRecord> {
    if !(2..=ENUM_MAX_N + 1).contains(&n) {
        return Err(Error::Parameter(format!(
            "exotic search supports 2 <= n <= {}, got {n}",
            ENUM_MAX_N + 1
        )));
    }
    let target = lower_bound(n);
    let passes = |g: &Graph| {
        !g.has_isolated_vertices()
            && !g.is_gap_free()
            && !covers::has_maximal_independent_set_smaller_than(g, n - target)
            && !g.is_chordal()
    };
    let mut found = BTreeSet::new();
    let mut examined = 0u64;
    if n <= ENUM_MAX_N {
        for form in enumerate_classes(n, GraphFilter::All)? {
            examined += 1;
            if passes(&form.to_graph()) {
                found.insert(form);
            }
        }
    } else {
        let parents = atlas_level(n - 1);
        let mut adj = vec![VertexSet::EMPTY; n];
        for &bits in parents.iter() {
            let base = canon::adj_from_bits(n - 1, bits);
            for nb in 1u128..(1 << (n - 1)) {
                for v in 0..n - 1 {
                    adj[v] = VertexSet::from_bits(base[v] as u128 | ((nb >> v) & 1) << (n - 1));
                }
                adj[n - 1] = VertexSet::from_bits(nb);
                examined += 1;
                let g = Graph::from_adjacency(adj.clone());
                if passes(&g) {
                    found.insert(canonical_form(&g)?);
                }
            }
        }
    }
    Ok(ExoticRecord {
        n,
        tau_target: target,
        candidates_examined: examined,
        classes: found.into_iter().map(|f| f.graph6()).collect(),
    })
}
