//! Finite abstract simplicial complexes on a vertex set `[m]`, stored as a
//! list of facets plus a membership bitmap over all `2^m` subsets.

mod generators;
mod io;
mod predicates;
mod top;
mod vertex_set;

pub use generators::{
    boundary_simplex, cycle, cycle_with_filled_triangle, disjoint_points, flag_complex, from_spec,
    iterated_attachment, random_attachment, random_complex, rp2_minimal, simplex, square_edge,
    two_squares, two_triangles, zoo, ZooEntry,
};
pub use io::{parse_json, parse_text, to_json, to_text};
pub use predicates::{reachable_by_attachment, Wedge};
pub use top::{top_classes, TopClass};
pub use vertex_set::VertexSet;

use std::fmt;

/// Hard cap on the number of vertices; subsets are `u32` bitmasks and the
/// membership table has `2^m` entries.
pub const MAX_VERTICES: usize = 24;

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum ComplexError {
    #[error("{0} vertices exceeds the cap of {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("vertex {vertex} is out of range for m = {m}")]
    VertexOutOfRange { vertex: usize, m: usize },
    #[error("ghost vertices (not faces): {0:?}")]
    GhostVertices(Vec<usize>),
    #[error("{0} is not a face")]
    NotAFace(VertexSet),
    #[error("cannot attach: {0}")]
    BadAttachment(String),
    #[error("parse error: {0}")]
    Parse(String),
}

#[derive(Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    m: usize,
    /// Maximal faces in ascending bitmask order.
    facets: Vec<VertexSet>,
    /// Bit `s` set iff subset `s` is a face.
    member: Vec<u64>,
    /// Original label of each vertex; identity except for full subcomplexes.
    labels: Vec<usize>,
}

impl SimplicialComplex {
    /// The downward closure of `faces` on `[m]` (0-based vertices). Every
    /// vertex must lie in some face.
    pub fn from_maximal_faces(
        m: usize,
        faces: impl IntoIterator<Item = VertexSet>,
    ) -> Result<SimplicialComplex, ComplexError> {
        let k = SimplicialComplex::with_ghosts(m, faces)?;
        let ghosts: Vec<usize> = (0..m)
            .filter(|&i| !k.is_face(VertexSet::singleton(i)))
            .collect();
        if !ghosts.is_empty() {
            return Err(ComplexError::GhostVertices(ghosts));
        }
        Ok(k)
    }

    /// Like [`from_maximal_faces`](Self::from_maximal_faces) but allows
    /// vertices that are not faces.
    pub(crate) fn with_ghosts(
        m: usize,
        faces: impl IntoIterator<Item = VertexSet>,
    ) -> Result<SimplicialComplex, ComplexError> {
        if m > MAX_VERTICES {
            return Err(ComplexError::TooManyVertices(m));
        }
        let full = VertexSet::full(m);
        let mut given = Vec::new();
        for f in faces {
            if !f.is_subset(full) {
                let v = f.minus(full).iter().next().unwrap();
                return Err(ComplexError::VertexOutOfRange { vertex: v, m });
            }
            given.push(f);
        }
        given.sort();
        given.dedup();
        let mut facets: Vec<VertexSet> = given
            .iter()
            .copied()
            .filter(|&f| !given.iter().any(|&g| g != f && f.is_subset(g)))
            .collect();
        if facets.is_empty() {
            facets.push(VertexSet::EMPTY);
        }
        let member = closure(m, &facets);
        Ok(SimplicialComplex {
            m,
            facets,
            member,
            labels: (0..m).collect(),
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.m)
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    /// Original labels (0-based) of the vertices, in order.
    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn is_face(&self, s: VertexSet) -> bool {
        let b = s.bits() as usize;
        if !s.is_subset(self.vertices()) {
            return false;
        }
        self.member[b >> 6] >> (b & 63) & 1 == 1
    }

    /// All faces in ascending bitmask order, including the empty face.
    pub fn faces(&self) -> Vec<VertexSet> {
        self.faces_within(self.vertices())
    }

    /// Faces contained in `i`, ascending.
    pub fn faces_within(&self, i: VertexSet) -> Vec<VertexSet> {
        i.subsets().filter(|&s| self.is_face(s)).collect()
    }

    pub fn dimension(&self) -> isize {
        self.facets
            .iter()
            .map(|f| f.len() as isize - 1)
            .max()
            .unwrap_or(-1)
    }

    /// f-vector `(f_{-1}, f_0, f_1, ...)`.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut f = vec![0; (self.dimension() + 2) as usize];
        for s in self.faces() {
            f[s.len()] += 1;
        }
        f
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.m {
            for j in i + 1..self.m {
                if self.is_face(VertexSet::from_iter([i, j])) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// `K_I`, re-indexed onto `[|I|]` in increasing order; original labels
    /// are kept.
    pub fn full_subcomplex(&self, i: VertexSet) -> SimplicialComplex {
        let i = i.intersection(self.vertices());
        let verts: Vec<usize> = i.iter().collect();
        let faces = self
            .facets
            .iter()
            .map(|f| f.intersection(i).compress(i))
            .collect::<Vec<_>>();
        let mut k = SimplicialComplex::with_ghosts(verts.len(), faces)
            .expect("a full subcomplex of a valid complex is valid");
        k.labels = verts.iter().map(|&v| self.labels[v]).collect();
        k
    }

    /// Simplicial join; the vertices of `other` follow those of `self`.
    pub fn join(&self, other: &SimplicialComplex) -> Result<SimplicialComplex, ComplexError> {
        let m = self.m + other.m;
        if m > MAX_VERTICES {
            return Err(ComplexError::TooManyVertices(m));
        }
        let mut faces = Vec::new();
        for &a in &self.facets {
            for &b in &other.facets {
                faces.push(a.union(b.shift(self.m)));
            }
        }
        SimplicialComplex::from_maximal_faces(m, faces)
    }

    /// Glues an `n`-simplex to `self` along the face `sigma`, adding
    /// `n + 1 - |sigma|` new vertices after the existing ones.
    pub fn attach_simplex(
        &self,
        sigma: VertexSet,
        n: usize,
    ) -> Result<SimplicialComplex, ComplexError> {
        if !self.is_face(sigma) {
            return Err(ComplexError::NotAFace(sigma));
        }
        if n + 1 < sigma.len() {
            return Err(ComplexError::BadAttachment(format!(
                "an {n}-simplex cannot contain the face {sigma}"
            )));
        }
        let fresh = n + 1 - sigma.len();
        let m = self.m + fresh;
        if m > MAX_VERTICES {
            return Err(ComplexError::TooManyVertices(m));
        }
        let new = sigma.union(VertexSet::full(m).minus(self.vertices()));
        let faces = self.facets.iter().copied().chain(std::iter::once(new));
        SimplicialComplex::from_maximal_faces(m, faces)
    }

    /// The same complex with vertex `i` relabelled `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> SimplicialComplex {
        assert_eq!(perm.len(), self.m);
        let faces = self
            .facets
            .iter()
            .map(|f| f.iter().map(|v| perm[v]).collect::<VertexSet>());
        SimplicialComplex::with_ghosts(self.m, faces).expect("relabelling preserves validity")
    }

    /// Facets as 1-based vertex lists, for display and serialization.
    pub fn facet_lists(&self) -> Vec<Vec<usize>> {
        self.facets
            .iter()
            .map(|f| f.iter().map(|v| v + 1).collect())
            .collect()
    }
}

fn closure(m: usize, facets: &[VertexSet]) -> Vec<u64> {
    let size = 1usize << m;
    let mut member = vec![0u64; size.div_ceil(64)];
    let set = |member: &mut Vec<u64>, s: usize| member[s >> 6] |= 1 << (s & 63);
    let enumerate_cost: usize = facets.iter().map(|f| 1usize << f.len()).sum();
    if enumerate_cost <= m.max(1) * size {
        for f in facets {
            for s in f.subsets() {
                set(&mut member, s.bits() as usize);
            }
        }
    } else {
        for f in facets {
            set(&mut member, f.bits() as usize);
        }
        for b in 0..m {
            for s in 0..size {
                if s >> b & 1 == 1 && member[s >> 6] >> (s & 63) & 1 == 1 {
                    set(&mut member, s ^ (1 << b));
                }
            }
        }
    }
    member
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K(m={}, facets={:?})", self.m, self.facet_lists())
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let facets: Vec<String> = self.facets.iter().map(|s| s.to_string()).collect();
        write!(f, "m = {}: {}", self.m, facets.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(v: &[usize]) -> VertexSet {
        v.iter().map(|x| x - 1).collect()
    }

    #[test]
    fn closure_is_downward() {
        let k = rp2_minimal();
        for f in k.facets() {
            for s in f.subsets() {
                assert!(k.is_face(s));
            }
        }
        assert_eq!(k.f_vector(), vec![1, 6, 15, 10]);
    }

    #[test]
    fn redundant_faces_dropped_and_ghosts_rejected() {
        let k =
            SimplicialComplex::from_maximal_faces(3, [vs(&[1, 2]), vs(&[1]), vs(&[2, 3])]).unwrap();
        assert_eq!(k.facets(), &[vs(&[1, 2]), vs(&[2, 3])]);
        let err = SimplicialComplex::from_maximal_faces(3, [vs(&[1, 2])]).unwrap_err();
        assert_eq!(err, ComplexError::GhostVertices(vec![2]));
        assert!(SimplicialComplex::from_maximal_faces(2, [vs(&[3])]).is_err());
        assert!(SimplicialComplex::from_maximal_faces(25, []).is_err());
    }

    #[test]
    fn full_subcomplex_restricts_and_reindexes() {
        let c = cycle(5);
        let k = c.full_subcomplex(vs(&[1, 2, 4]));
        assert_eq!(k.m(), 3);
        assert_eq!(k.facets(), &[vs(&[1, 2]), vs(&[3])]);
        assert_eq!(k.labels(), &[0, 1, 3]);
        assert_eq!(c.full_subcomplex(c.vertices()), c);
        let e = simplex(3).full_subcomplex(vs(&[1, 3]));
        assert_eq!(e.facets(), &[vs(&[1, 2])]);
    }

    #[test]
    fn join_of_two_point_pairs_is_square() {
        let s0 = disjoint_points(2);
        let j = s0.join(&s0).unwrap();
        // parts {1,2} and {3,4}: relabel to the cycle 1-2-3-4 with parts {1,3},{2,4}
        assert_eq!(j.relabel(&[0, 2, 1, 3]), cycle(4));
        let pt = simplex(1);
        assert_eq!(pt.join(&pt).unwrap(), simplex(2));
    }

    #[test]
    fn attach_examples() {
        assert_eq!(cycle(4).attach_simplex(vs(&[4]), 1).unwrap(), square_edge());
        let k = cycle(3).attach_simplex(VertexSet::EMPTY, 0).unwrap();
        assert_eq!(k.facets().len(), 4);
        assert_eq!(cycle(3).attach_simplex(vs(&[1, 2]), 1).unwrap(), cycle(3));
        assert!(cycle(3).attach_simplex(vs(&[1, 2, 3]), 2).is_err());
    }
}
