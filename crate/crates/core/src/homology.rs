//! Finite simplicial complexes and their reduced homology over a field.
//!
//! Conventions: the *empty complex* `{∅}` has `H̃_{-1}` of dimension 1 and
//! nothing else; the *void complex* (no faces, not even `∅`) has zero
//! reduced homology everywhere. Homology vectors are indexed by `k + 1`, so
//! slot 0 holds `H̃_{-1}`.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{self, SparseColumn};
use crate::vertex_set::VertexSet;

/// Coefficient field: the rationals (characteristic 0) or GF(p).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct FieldSpec {
    characteristic: u64,
}

impl FieldSpec {
    pub const fn gf2() -> Self {
        FieldSpec { characteristic: 2 }
    }

    pub const fn rationals() -> Self {
        FieldSpec { characteristic: 0 }
    }

    /// `0` for the rationals, otherwise a prime below `2^31`.
    pub fn new(characteristic: u64) -> Result<Self> {
        if characteristic == 0 || (characteristic < (1 << 31) && is_prime(characteristic)) {
            Ok(FieldSpec { characteristic })
        } else {
            Err(Error::Parameter(format!(
                "field characteristic must be 0 or a prime below 2^31, got {characteristic}"
            )))
        }
    }

    pub fn characteristic(self) -> u64 {
        self.characteristic
    }
}

impl Default for FieldSpec {
    fn default() -> Self {
        FieldSpec::gf2()
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.characteristic {
            0 => write!(f, "QQ"),
            p => write!(f, "GF({p})"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// A simplicial complex stored as lists of faces by dimension.
///
/// `faces[k + 1]` holds the `k`-faces in lexicographic order of their sorted
/// vertex tuples; `faces[0]` is `[∅]` unless the complex is void.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: VertexSet,
    faces: Vec<Vec<VertexSet>>,
}

impl SimplicialComplex {
    /// The void complex on no vertices.
    pub fn void() -> Self {
        SimplicialComplex {
            vertices: VertexSet::EMPTY,
            faces: Vec::new(),
        }
    }

    /// The independence complex: faces are the independent sets of `g`.
    pub fn independence(g: &Graph) -> Self {
        let mut faces: Vec<Vec<VertexSet>> = vec![vec![VertexSet::EMPTY]];
        let adj = g.adjacency();
        fn grow(
            adj: &[VertexSet],
            face: VertexSet,
            allowed: VertexSet,
            faces: &mut Vec<Vec<VertexSet>>,
        ) {
            for v in allowed.iter() {
                let next = face.with(v);
                let d = next.len();
                if faces.len() <= d {
                    faces.push(Vec::new());
                }
                faces[d].push(next);
                grow(adj, next, allowed.above(v).difference(adj[v]), faces);
            }
        }
        grow(adj, VertexSet::EMPTY, g.vertices(), &mut faces);
        SimplicialComplex {
            vertices: g.vertices(),
            faces,
        }
    }

    /// Builds the complex on `vertices` whose faces are the sets accepted by
    /// `is_face`. The predicate must be closed under taking subsets; only
    /// one-vertex extensions of accepted sets are ever queried.
    pub fn from_oracle<F: Fn(VertexSet) -> bool>(vertices: VertexSet, is_face: F) -> Self {
        if !is_face(VertexSet::EMPTY) {
            return SimplicialComplex::void();
        }
        let mut faces = vec![vec![VertexSet::EMPTY]];
        loop {
            let top = faces.last().unwrap();
            let mut next = Vec::new();
            for &f in top {
                let candidates = match f.last() {
                    Some(m) => vertices.above(m),
                    None => vertices,
                };
                for v in candidates.iter() {
                    let g = f.with(v);
                    if is_face(g) {
                        next.push(g);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            faces.push(next);
        }
        let support = faces.get(1).map_or(VertexSet::EMPTY, |vs| {
            vs.iter().fold(VertexSet::EMPTY, |a, &v| a.union(v))
        });
        SimplicialComplex {
            vertices: support,
            faces,
        }
    }

    /// Vertices that are themselves faces.
    pub fn vertices(&self) -> VertexSet {
        self.vertices
    }

    pub fn is_void(&self) -> bool {
        self.faces.is_empty()
    }

    /// Largest face dimension; `-1` for `{∅}` and `-2` for the void complex.
    pub fn dimension(&self) -> isize {
        self.faces.len() as isize - 2
    }

    /// The `k`-faces, `k >= -1`.
    pub fn faces(&self, k: isize) -> &[VertexSet] {
        if k < -1 {
            return &[];
        }
        self.faces
            .get((k + 1) as usize)
            .map_or(&[][..], |v| v.as_slice())
    }

    pub fn face_count(&self, k: isize) -> usize {
        self.faces(k).len()
    }

    /// Face counts `f_{-1}, f_0, f_1, ...`.
    pub fn f_vector(&self) -> Vec<usize> {
        self.faces.iter().map(Vec::len).collect()
    }

    pub fn contains(&self, face: VertexSet) -> bool {
        self.faces
            .get(face.len())
            .is_some_and(|fs| fs.binary_search_by(|f| f.lex_cmp(face)).is_ok())
    }

    /// Reduced Euler characteristic `Σ_{k >= -1} (-1)^k f_k`.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.faces
            .iter()
            .enumerate()
            .map(|(i, fs)| {
                let sign = if i % 2 == 0 { -1 } else { 1 };
                sign * fs.len() as i64
            })
            .sum()
    }

    /// Boundary map `∂_k : C_k -> C_{k-1}` as sparse columns indexed by
    /// `k`-faces, rows by `(k-1)`-faces. `∂_0` sends each vertex to `∅`.
    pub fn boundary(&self, k: isize) -> (Vec<SparseColumn>, usize) {
        let rows = self.faces(k - 1);
        let cols = self.faces(k);
        if rows.is_empty() || cols.is_empty() {
            return (vec![Vec::new(); cols.len()], rows.len());
        }
        let index: HashMap<VertexSet, usize> =
            rows.iter().enumerate().map(|(i, &f)| (f, i)).collect();
        let columns = cols
            .iter()
            .map(|&face| {
                face.iter()
                    .enumerate()
                    .map(|(pos, v)| {
                        let sign = if pos % 2 == 0 { 1 } else { -1 };
                        (index[&face.without(v)], sign)
                    })
                    .collect()
            })
            .collect();
        (columns, rows.len())
    }

    pub fn boundary_rank(&self, k: isize, field: FieldSpec) -> usize {
        if k < 0 {
            return 0;
        }
        let (cols, nrows) = self.boundary(k);
        if cols.is_empty() || nrows == 0 {
            return 0;
        }
        linalg::rank(&cols, nrows, field)
    }
}

/// `dim H̃_k(cx; field)`; zero for `k` outside the complex's range.
pub fn reduced_homology_dim(cx: &SimplicialComplex, k: isize, field: FieldSpec) -> u64 {
    if k < -1 || k > cx.dimension() {
        return 0;
    }
    let f = cx.face_count(k);
    let r = cx.boundary_rank(k, field) + cx.boundary_rank(k + 1, field);
    (f - r) as u64
}

/// All reduced homology dimensions, slot `k + 1` holding `dim H̃_k`.
/// Trailing zero slots are trimmed; the result is empty for acyclic and
/// void complexes.
pub fn reduced_homology(cx: &SimplicialComplex, field: FieldSpec) -> Vec<u64> {
    let top = cx.dimension();
    let ranks: Vec<usize> = (0..=top + 1).map(|k| cx.boundary_rank(k, field)).collect();
    let mut dims: Vec<u64> = (-1..=top)
        .map(|k| {
            let below = if k >= 0 { ranks[k as usize] } else { 0 };
            let above = ranks[(k + 1) as usize];
            (cx.face_count(k) - below - above) as u64
        })
        .collect();
    trim(&mut dims);
    dims
}

pub(crate) fn trim(dims: &mut Vec<u64>) {
    while dims.last() == Some(&0) {
        dims.pop();
    }
}
