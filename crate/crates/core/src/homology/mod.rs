//! Reduced simplicial (co)chain complexes of full subcomplexes, their
//! (co)homology with representatives, and the maps induced by inclusions.
//!
//! Faces are always stored by their global vertex labels, so the sign
//! `ε(j, L)` of the coboundary is computed from the ambient order.

use crate::complex::{SimplicialComplex, VertexSet};
use crate::linalg::{
    homology_of_pair, GroupMorphism, GroupSummary, LinalgError, Matrix, PresentedGroup, Ring,
    Subquotient,
};

/// The augmented cochain complex of `K_I`: degree `p` has one basis element
/// per face with `p + 1` vertices, starting from the empty face in degree `-1`.
#[derive(Clone, Debug, PartialEq)]
pub struct CochainComplex {
    pub support: VertexSet,
    /// `basis[p + 1]`: faces of dimension `p`, ascending bitmask order.
    basis: Vec<Vec<VertexSet>>,
}

impl CochainComplex {
    pub fn new(k: &SimplicialComplex, support: VertexSet) -> CochainComplex {
        let mut basis: Vec<Vec<VertexSet>> = vec![Vec::new(); support.len() + 1];
        for f in k.faces_within(support) {
            basis[f.len()].push(f);
        }
        while basis.len() > 1 && basis.last().is_some_and(|b| b.is_empty()) {
            basis.pop();
        }
        CochainComplex { support, basis }
    }

    /// Largest degree with a nonzero cochain group.
    pub fn top_degree(&self) -> isize {
        self.basis.len() as isize - 2
    }

    pub fn basis(&self, p: isize) -> &[VertexSet] {
        if p < -1 || p > self.top_degree() {
            return &[];
        }
        &self.basis[(p + 1) as usize]
    }

    pub fn index_of(&self, p: isize, face: VertexSet) -> Option<usize> {
        self.basis(p).binary_search(&face).ok()
    }

    /// Coboundary `d_p : C^p -> C^{p+1}`, entries `ε(j, L)` at `(L ∪ j, L)`.
    pub fn coboundary<R: Ring>(&self, ring: &R, p: isize) -> Matrix<R::Elem> {
        let src = self.basis(p);
        let tgt = self.basis(p + 1);
        let mut d = Matrix::filled(tgt.len(), src.len(), ring.zero());
        for (c, &l) in src.iter().enumerate() {
            for j in self.support.minus(l).iter() {
                if let Ok(r) = tgt.binary_search(&l.with(j)) {
                    d[(r, c)] = ring.sign(l.epsilon_negative(j));
                }
            }
        }
        d
    }

    /// Boundary `∂_p : C_p -> C_{p-1}`, the transpose of `d_{p-1}`.
    pub fn boundary<R: Ring>(&self, ring: &R, p: isize) -> Matrix<R::Elem> {
        self.coboundary(ring, p - 1).transpose()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variance {
    Cohomology,
    Homology,
}

/// Reduced (co)homology of one full subcomplex in every degree, each group
/// with representative (co)cycles and lifting data.
#[derive(Clone, Debug)]
pub struct SubsetHomology<E> {
    pub complex: CochainComplex,
    pub variance: Variance,
    /// `groups[p + 1]` for `p = -1 ..= top_degree`.
    groups: Vec<Subquotient<E>>,
}

impl<E: Clone + PartialEq + std::fmt::Debug> SubsetHomology<E> {
    pub fn support(&self) -> VertexSet {
        self.complex.support
    }

    pub fn group(&self, p: isize) -> Option<&Subquotient<E>> {
        if p < -1 {
            return None;
        }
        self.groups.get((p + 1) as usize)
    }

    /// Number of generators in degree `p` (0 outside the computed range).
    pub fn gens(&self, p: isize) -> usize {
        self.group(p).map_or(0, |g| g.len())
    }

    pub fn summary<R: Ring<Elem = E>>(&self, ring: &R, p: isize) -> GroupSummary {
        self.group(p)
            .map_or_else(GroupSummary::zero, |g| g.summary(ring))
    }

    pub fn presented<R: Ring<Elem = E>>(&self, ring: &R, p: isize) -> PresentedGroup<E> {
        self.group(p).map_or_else(
            || PresentedGroup::free(0, ring.zero()),
            |g| g.group(ring.zero()),
        )
    }

    /// Representative of generator `g` in degree `p`, as `(face, coefficient)` pairs.
    pub fn representative<R: Ring<Elem = E>>(
        &self,
        ring: &R,
        p: isize,
        g: usize,
    ) -> Vec<(VertexSet, E)> {
        let grp = self.group(p).expect("degree in range");
        self.complex
            .basis(p)
            .iter()
            .enumerate()
            .filter(|(r, _)| !ring.is_zero(&grp.reps[(*r, g)]))
            .map(|(r, &f)| (f, grp.reps[(r, g)].clone()))
            .collect()
    }

    /// Coordinates of the class of a (co)cycle given on faces.
    pub fn express<R: Ring<Elem = E>>(
        &self,
        ring: &R,
        p: isize,
        chain: &[(VertexSet, E)],
    ) -> Result<Vec<E>, LinalgError> {
        let Some(grp) = self.group(p) else {
            return Ok(Vec::new());
        };
        let mut v = vec![ring.zero(); self.complex.basis(p).len()];
        for (f, c) in chain {
            let i = self.complex.index_of(p, *f).ok_or_else(|| {
                LinalgError::ContractViolation(format!("{f} is not a face of the support"))
            })?;
            v[i] = ring.add(&v[i], c);
        }
        grp.lift(ring, &v)
    }
}

/// Reduced cohomology (`Variance::Cohomology`) or homology of `K_I`.
pub fn subset_homology<R: Ring>(
    ring: &R,
    k: &SimplicialComplex,
    support: VertexSet,
    variance: Variance,
) -> SubsetHomology<R::Elem> {
    let complex = CochainComplex::new(k, support);
    let top = complex.top_degree();
    let mut groups = Vec::with_capacity((top + 2) as usize);
    for p in -1..=top {
        let (f, g) = match variance {
            Variance::Cohomology => (complex.coboundary(ring, p - 1), complex.coboundary(ring, p)),
            Variance::Homology => (complex.boundary(ring, p + 1), complex.boundary(ring, p)),
        };
        let h = homology_of_pair(
            ring,
            &GroupMorphism::free(ring, f),
            &GroupMorphism::free(ring, g),
        )
        .expect("d^2 = 0 for a simplicial complex");
        groups.push(h);
    }
    SubsetHomology {
        complex,
        variance,
        groups,
    }
}

pub fn cohomology<R: Ring>(
    ring: &R,
    k: &SimplicialComplex,
    support: VertexSet,
) -> SubsetHomology<R::Elem> {
    subset_homology(ring, k, support, Variance::Cohomology)
}

pub fn homology<R: Ring>(
    ring: &R,
    k: &SimplicialComplex,
    support: VertexSet,
) -> SubsetHomology<R::Elem> {
    subset_homology(ring, k, support, Variance::Homology)
}

/// Matrix (target generators x source generators) of the map in degree `p`
/// that sends each representative face-by-face into the target complex,
/// dropping faces the target does not have. For cohomology with
/// `to ⊂ from` this is restriction; for homology with `from ⊂ to` it is
/// the pushforward along the inclusion.
pub fn transfer<R: Ring>(
    ring: &R,
    from: &SubsetHomology<R::Elem>,
    to: &SubsetHomology<R::Elem>,
    p: isize,
) -> Result<Matrix<R::Elem>, LinalgError> {
    let n_src = from.gens(p);
    let n_tgt = to.gens(p);
    let mut m = Matrix::filled(n_tgt, n_src, ring.zero());
    if n_src == 0 || n_tgt == 0 {
        return Ok(m);
    }
    let src_basis = from.complex.basis(p);
    let tgt_basis = to.complex.basis(p);
    let reps = &from.group(p).expect("nonempty").reps;
    let tgt_group = to.group(p).expect("nonempty");
    for g in 0..n_src {
        let mut v = vec![ring.zero(); tgt_basis.len()];
        for (r, f) in src_basis.iter().enumerate() {
            let c = &reps[(r, g)];
            if ring.is_zero(c) {
                continue;
            }
            if let Ok(t) = tgt_basis.binary_search(f) {
                v[t] = c.clone();
            }
        }
        for (i, x) in tgt_group.lift(ring, &v)?.into_iter().enumerate() {
            m[(i, g)] = x;
        }
    }
    Ok(m)
}

/// `ψ_{p;i,I} : H̃^p(K_I) -> H̃^p(K_{I∖i})` as a morphism of presented groups.
pub fn restriction_map<R: Ring>(
    ring: &R,
    k: &SimplicialComplex,
    support: VertexSet,
    i: usize,
    p: isize,
) -> Result<GroupMorphism<R::Elem>, LinalgError> {
    if !support.contains(i) {
        return Err(LinalgError::ContractViolation(format!(
            "vertex {} not in {support}",
            i + 1
        )));
    }
    let from = cohomology(ring, k, support);
    let to = cohomology(ring, k, support.without(i));
    let m = transfer(ring, &from, &to, p)?;
    GroupMorphism::new(
        ring,
        from.presented(ring, p),
        to.presented(ring, p),
        m,
        cfg!(debug_assertions),
    )
}

/// `φ_{p;I,j} : H̃_p(K_I) -> H̃_p(K_{I∪j})` as a morphism of presented groups.
pub fn inclusion_map<R: Ring>(
    ring: &R,
    k: &SimplicialComplex,
    support: VertexSet,
    j: usize,
    p: isize,
) -> Result<GroupMorphism<R::Elem>, LinalgError> {
    if support.contains(j) {
        return Err(LinalgError::ContractViolation(format!(
            "vertex {} already in {support}",
            j + 1
        )));
    }
    let from = homology(ring, k, support);
    let to = homology(ring, k, support.with(j));
    let m = transfer(ring, &from, &to, p)?;
    GroupMorphism::new(
        ring,
        from.presented(ring, p),
        to.presented(ring, p),
        m,
        cfg!(debug_assertions),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::*;
    use crate::linalg::{Int, Integers, MatrixOps};

    fn h(k: &SimplicialComplex, p: isize) -> GroupSummary {
        cohomology(&Integers, k, k.vertices()).summary(&Integers, p)
    }

    #[test]
    fn basic_groups() {
        let pt = simplex(1);
        for p in -1..=0 {
            assert!(h(&pt, p).is_zero());
        }
        let empty = cohomology(&Integers, &pt, VertexSet::EMPTY);
        assert_eq!(empty.summary(&Integers, -1), GroupSummary::free(1));
        assert_eq!(h(&boundary_simplex(2), 0), GroupSummary::free(1));
        assert_eq!(h(&cycle(3), 1), GroupSummary::free(1));
        let k = rp2_minimal();
        assert!(h(&k, 1).is_zero());
        assert_eq!(
            h(&k, 2),
            GroupSummary {
                rank: 0,
                torsion: vec![Int::from(2)]
            }
        );
        let path = cycle(6).attach_simplex(VertexSet::EMPTY, 0).unwrap();
        let path = path.full_subcomplex(VertexSet::full(6).without(0));
        for p in -1..=1 {
            assert!(h(&path, p).is_zero());
        }
    }

    #[test]
    fn coboundary_squares_to_zero() {
        let k = rp2_minimal();
        let c = CochainComplex::new(&k, k.vertices());
        for p in -1..2 {
            let dd = c
                .coboundary(&Integers, p + 1)
                .mul(&Integers, &c.coboundary(&Integers, p));
            assert!(MatrixOps::<Integers>::is_zero(&dd, &Integers));
        }
    }

    #[test]
    fn rp2_restrictions() {
        let k = rp2_minimal();
        for i in 0..6 {
            let r = restriction_map(&Integers, &k, k.vertices(), i, 2).unwrap();
            assert_eq!(r.matrix.cols(), 1);
            assert_eq!(r.matrix.rows(), 0);
            let sub = k.vertices().without(i);
            assert_eq!(h(&k.full_subcomplex(sub), 1), GroupSummary::free(1));
            // H_1 of the Möbius band surjects onto Z/2
            let inc = inclusion_map(&Integers, &k, sub, i, 1).unwrap();
            assert_eq!(inc.matrix.rows(), 1);
            assert_eq!(inc.matrix.cols(), 1);
            assert_eq!(inc.matrix[(0, 0)], Int::ONE);
        }
    }

    #[test]
    fn small_maps() {
        let s0 = boundary_simplex(2);
        let r = restriction_map(&Integers, &s0, s0.vertices(), 1, 0).unwrap();
        assert_eq!((r.matrix.rows(), r.matrix.cols()), (0, 1));
        let pts = disjoint_points(2);
        let hom = homology(&Integers, &pts, pts.vertices());
        let one = homology(&Integers, &pts, VertexSet::singleton(0));
        assert_eq!(transfer(&Integers, &hom, &one, 0).unwrap().rows(), 0);
        let c = cycle(5);
        for i in 0..5 {
            let r = restriction_map(&Integers, &c, c.vertices(), i, 1).unwrap();
            assert_eq!((r.matrix.rows(), r.matrix.cols()), (0, 1));
        }
        let inc = inclusion_map(&Integers, &c, VertexSet::full(4), 4, 1).unwrap();
        assert_eq!((inc.matrix.rows(), inc.matrix.cols()), (1, 0));
    }
}
