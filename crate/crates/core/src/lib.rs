//! Exact computation of MAX MIN vertex cover numbers, minimal covers, and
//! graded Betti tables of edge ideals for small graphs, together with
//! exhaustive and sampled checks of the `2√n − 2` lower bound, the
//! classification of graphs attaining it, and the `(pd, reg)` spectrum.
//!
//! Betti numbers are computed from reduced homology of independence
//! complexes of induced subgraphs:
//! `β_{i,j} = Σ_{|W| = j} dim H̃_{j−i−1}(Ind(G[W]); k)`.

pub mod atlas;
pub mod betti;
pub mod covers;
pub mod error;
pub mod graph;
pub mod homology;
pub mod linalg;
pub mod spectrum;
pub mod vertex_set;

pub use betti::{betti_table, proj_dim, regularity, BettiOptions, BettiTable};
pub use covers::{tau_max, CoverReport};
pub use error::{Error, Result};
pub use graph::{build_family, emit_graph, parse_graph, FamilySpec, Graph, GraphFormat};
pub use homology::{FieldSpec, SimplicialComplex};
pub use vertex_set::VertexSet;
