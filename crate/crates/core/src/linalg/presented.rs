//! Finitely presented modules over a Euclidean ring and the subquotient
//! `ker g / im f` of a three-term sequence of them.

use std::fmt;

use serde::Serialize;

use super::int::Int;
use super::matrix::{Matrix, MatrixOps};
use super::ring::Ring;
use super::snf::reduce;
use super::LinalgError;

/// `R^gens / (column span of relations)`.
#[derive(Clone, Debug, PartialEq)]
pub struct PresentedGroup<E> {
    pub gens: usize,
    /// `gens x r`, one relator per column.
    pub relations: Matrix<E>,
}

impl<E: Clone> PresentedGroup<E> {
    pub fn free(gens: usize, zero: E) -> PresentedGroup<E> {
        PresentedGroup {
            gens,
            relations: Matrix::filled(gens, 0, zero),
        }
    }

    /// `R/(o_1) + ... + R/(o_n)`; `None` stands for a free summand.
    pub fn from_orders(orders: &[Option<E>], zero: E) -> PresentedGroup<E> {
        let n = orders.len();
        let torsion: Vec<(usize, &E)> = orders
            .iter()
            .enumerate()
            .filter_map(|(i, o)| o.as_ref().map(|o| (i, o)))
            .collect();
        let mut rel = Matrix::filled(n, torsion.len(), zero);
        for (c, (i, o)) in torsion.into_iter().enumerate() {
            rel[(i, c)] = o.clone();
        }
        PresentedGroup {
            gens: n,
            relations: rel,
        }
    }

    pub fn invariants<R: Ring<Elem = E>>(&self, ring: &R) -> GroupSummary {
        let f = reduce(ring, &self.relations, false, false);
        let mut torsion = Vec::new();
        for i in 0..f.rank {
            let d = &f.s[(i, i)];
            if !ring.is_unit(d) {
                torsion.push(
                    ring.to_int(d)
                        .expect("torsion only occurs over the integers"),
                );
            }
        }
        GroupSummary {
            rank: self.gens - f.rank,
            torsion,
        }
    }
}

impl<E: Clone + PartialEq + fmt::Debug> PresentedGroup<E> {
    /// Whether each column of `m` represents zero, i.e. lies in the relation lattice.
    pub fn columns_vanish<R: Ring<Elem = E>>(&self, ring: &R, m: &Matrix<E>) -> bool {
        if m.cols() == 0 || MatrixOps::<R>::is_zero(m, ring) {
            return true;
        }
        let lattice = Lattice::new(ring, &self.relations);
        (0..m.cols()).all(|j| lattice.coords(ring, &m.column(j)).is_ok())
    }
}

/// Block-diagonal direct sum of presentations.
pub fn direct_sum<R: Ring>(ring: &R, parts: &[PresentedGroup<R::Elem>]) -> PresentedGroup<R::Elem> {
    let gens: usize = parts.iter().map(|p| p.gens).sum();
    let rels: usize = parts.iter().map(|p| p.relations.cols()).sum();
    let mut m = Matrix::filled(gens, rels, ring.zero());
    let (mut r0, mut c0) = (0, 0);
    for p in parts {
        for i in 0..p.gens {
            for j in 0..p.relations.cols() {
                m[(r0 + i, c0 + j)] = p.relations[(i, j)].clone();
            }
        }
        r0 += p.gens;
        c0 += p.relations.cols();
    }
    PresentedGroup { gens, relations: m }
}

/// Normalized isomorphism type: free rank plus invariant factors `> 1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct GroupSummary {
    pub rank: usize,
    pub torsion: Vec<Int>,
}

impl GroupSummary {
    pub fn zero() -> GroupSummary {
        GroupSummary::default()
    }

    pub fn free(rank: usize) -> GroupSummary {
        GroupSummary {
            rank,
            torsion: Vec::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    pub fn is_free(&self) -> bool {
        self.torsion.is_empty()
    }
}

impl fmt::Display for GroupSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for t in &self.torsion {
            parts.push(format!("Z/{t}"));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// A homomorphism given by its matrix on generators.
#[derive(Clone, Debug)]
pub struct GroupMorphism<E> {
    pub source: PresentedGroup<E>,
    pub target: PresentedGroup<E>,
    /// `target.gens x source.gens`.
    pub matrix: Matrix<E>,
}

impl<E: Clone + PartialEq + fmt::Debug> GroupMorphism<E> {
    /// Builds the morphism. With `check`, verifies that source relators land
    /// in the target relation lattice.
    pub fn new<R: Ring<Elem = E>>(
        ring: &R,
        source: PresentedGroup<E>,
        target: PresentedGroup<E>,
        matrix: Matrix<E>,
        check: bool,
    ) -> Result<GroupMorphism<E>, LinalgError> {
        if matrix.rows() != target.gens || matrix.cols() != source.gens {
            return Err(LinalgError::Shape(format!(
                "{}x{} matrix for a map from {} to {} generators",
                matrix.rows(),
                matrix.cols(),
                source.gens,
                target.gens
            )));
        }
        let m = GroupMorphism {
            source,
            target,
            matrix,
        };
        if check {
            let images = m.matrix.mul(ring, &m.source.relations);
            let lattice = Lattice::new(ring, &m.target.relations);
            for j in 0..images.cols() {
                if lattice.coords(ring, &images.column(j)).is_err() {
                    return Err(LinalgError::ContractViolation(
                        "a source relator does not map into the target relations".into(),
                    ));
                }
            }
        }
        Ok(m)
    }

    pub fn free<R: Ring<Elem = E>>(ring: &R, matrix: Matrix<E>) -> GroupMorphism<E> {
        GroupMorphism {
            source: PresentedGroup::free(matrix.cols(), ring.zero()),
            target: PresentedGroup::free(matrix.rows(), ring.zero()),
            matrix,
        }
    }
}

/// A sublattice of `R^n` with a basis adapted by Smith form, so that
/// membership and coordinates are cheap to compute.
#[derive(Clone, Debug)]
struct Lattice<E> {
    /// `U` from `U W V = S`; row `i < rank` gives `s_i` times the i-th coordinate.
    u: Matrix<E>,
    s: Vec<E>,
    /// Basis vectors as columns: `U^{-1}[:, i] * s_i`.
    basis: Matrix<E>,
}

impl<E: Clone + PartialEq + fmt::Debug> Lattice<E> {
    fn new<R: Ring<Elem = E>>(ring: &R, spanning: &Matrix<E>) -> Lattice<E> {
        let p = reduce(ring, spanning, true, false);
        let ui = p.u_inv.expect("tracked");
        let s: Vec<E> = (0..p.rank).map(|i| p.s[(i, i)].clone()).collect();
        let mut basis = Matrix::filled(spanning.rows(), p.rank, ring.zero());
        for (j, sj) in s.iter().enumerate() {
            for i in 0..spanning.rows() {
                basis[(i, j)] = ring.mul(&ui[(i, j)], sj);
            }
        }
        Lattice {
            u: p.u.expect("tracked"),
            s,
            basis,
        }
    }

    fn rank(&self) -> usize {
        self.s.len()
    }

    fn coords<R: Ring<Elem = E>>(&self, ring: &R, x: &[E]) -> Result<Vec<E>, LinalgError> {
        let y = self.u.apply(ring, x);
        let r = self.rank();
        if y[r..].iter().any(|v| !ring.is_zero(v)) {
            return Err(LinalgError::NotInSubgroup);
        }
        let mut c = Vec::with_capacity(r);
        for (yi, si) in y.iter().zip(&self.s) {
            let (q, rem) = ring.div_rem(yi, si);
            if !ring.is_zero(&rem) {
                return Err(LinalgError::NotInSubgroup);
            }
            c.push(q);
        }
        Ok(c)
    }
}

/// `ker g / im f` as a presented group, together with representatives in
/// the middle term and the map expressing middle-term elements in the
/// chosen generators.
#[derive(Clone, Debug)]
pub struct Subquotient<E> {
    /// Generator orders: `Some(d)` for a cyclic torsion summand, `None` for a free one.
    pub orders: Vec<Option<E>>,
    /// One representative per generator, as columns in the middle term.
    pub reps: Matrix<E>,
    kernel: Lattice<E>,
    /// Rows of the quotient change of basis for the kept generators.
    p_kept: Matrix<E>,
}

impl<E: Clone + PartialEq + fmt::Debug> Subquotient<E> {
    pub fn len(&self) -> usize {
        self.orders.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orders.is_empty()
    }

    pub fn summary<R: Ring<Elem = E>>(&self, ring: &R) -> GroupSummary {
        let mut torsion: Vec<Int> = self
            .orders
            .iter()
            .flatten()
            .map(|d| {
                ring.to_int(d)
                    .expect("torsion only occurs over the integers")
            })
            .collect();
        torsion.sort();
        GroupSummary {
            rank: self.orders.iter().filter(|o| o.is_none()).count(),
            torsion,
        }
    }

    pub fn group(&self, zero: E) -> PresentedGroup<E> {
        PresentedGroup::from_orders(&self.orders, zero)
    }

    /// Coordinates of the class of `x` (an element of the middle term that
    /// lies in the kernel), torsion coordinates reduced to canonical residues.
    pub fn lift<R: Ring<Elem = E>>(&self, ring: &R, x: &[E]) -> Result<Vec<E>, LinalgError> {
        let c = self.kernel.coords(ring, x)?;
        let mut z = self.p_kept.apply(ring, &c);
        for (zi, o) in z.iter_mut().zip(&self.orders) {
            if let Some(d) = o {
                *zi = ring.reduce(zi, d);
            }
        }
        Ok(z)
    }

    /// Lifts each column of `m`, returning the coordinate matrix.
    pub fn lift_columns<R: Ring<Elem = E>>(
        &self,
        ring: &R,
        m: &Matrix<E>,
    ) -> Result<Matrix<E>, LinalgError> {
        let mut out = Matrix::filled(self.len(), m.cols(), ring.zero());
        for j in 0..m.cols() {
            for (i, v) in self.lift(ring, &m.column(j))?.into_iter().enumerate() {
                out[(i, j)] = v;
            }
        }
        Ok(out)
    }
}

/// Homology at the middle of `A --f--> B --g--> C`, computed by lifting to
/// free covers: the preimage of the relation lattice of `C` under `g` is a
/// sublattice of `R^{B.gens}`, the image of `f` together with the relations
/// of `B` is expressed in its basis, and the Smith form of that
/// presentation gives the answer.
pub fn homology_of_pair<R: Ring>(
    ring: &R,
    f: &GroupMorphism<R::Elem>,
    g: &GroupMorphism<R::Elem>,
) -> Result<Subquotient<R::Elem>, LinalgError> {
    let n1 = g.source.gens;
    if f.target.gens != n1 {
        return Err(LinalgError::Shape(format!(
            "f lands in {} generators but g starts from {}",
            f.target.gens, n1
        )));
    }
    let zero = ring.zero();

    // x with g x in span(R_C): kernel of [g | R_C], projected to the first n1 coordinates
    let stacked = g.matrix.hstack(&g.target.relations);
    let kernel_gens = if stacked.rows() == 0 {
        <Matrix<R::Elem> as MatrixOps<R>>::identity(ring, n1)
    } else {
        let p = reduce(ring, &stacked, false, true);
        let v = p.v.expect("tracked");
        let idx: Vec<usize> = (p.rank..stacked.cols()).collect();
        v.select_cols(&idx).select_rows(0..n1)
    };
    let kernel = Lattice::new(ring, &kernel_gens);
    let r = kernel.rank();

    let boundaries = f.matrix.hstack(&f.target.relations);
    let mut c = Matrix::filled(r, boundaries.cols(), zero.clone());
    for j in 0..boundaries.cols() {
        let col = kernel.coords(ring, &boundaries.column(j)).map_err(|_| {
            LinalgError::ContractViolation("image of f is not contained in ker g".into())
        })?;
        for (i, v) in col.into_iter().enumerate() {
            c[(i, j)] = v;
        }
    }

    let q = reduce(ring, &c, true, false);
    let p = q.u.expect("tracked");
    let p_inv = q.u_inv.expect("tracked");
    let mut kept = Vec::new();
    let mut orders = Vec::new();
    for i in 0..r {
        if i < q.rank {
            let d = &q.s[(i, i)];
            if !ring.is_unit(d) {
                kept.push(i);
                orders.push(Some(d.clone()));
            }
        } else {
            kept.push(i);
            orders.push(None);
        }
    }
    let reps = kernel.basis.mul(ring, &p_inv.select_cols(&kept));
    let p_kept = p.select_rows(kept.iter().copied());
    Ok(Subquotient {
        orders,
        reps,
        kernel,
        p_kept,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int::Int;
    use crate::linalg::matrix::IntMatrix;
    use crate::linalg::ring::{Integers, Rationals};

    fn zmap(rows: usize, cols: usize) -> GroupMorphism<Int> {
        GroupMorphism::free(&Integers, IntMatrix::filled(rows, cols, Int::ZERO))
    }

    #[test]
    fn zero_maps_on_free_module() {
        let h = homology_of_pair(&Integers, &zmap(3, 0), &zmap(0, 3)).unwrap();
        assert_eq!(h.summary(&Integers), GroupSummary::free(3));
    }

    #[test]
    fn times_two_gives_z2() {
        let f = GroupMorphism::free(&Integers, IntMatrix::from_i64_rows(&[&[2]]));
        let h = homology_of_pair(&Integers, &f, &zmap(0, 1)).unwrap();
        assert_eq!(
            h.summary(&Integers),
            GroupSummary {
                rank: 0,
                torsion: vec![Int::from(2)]
            }
        );
        assert_eq!(h.lift(&Integers, &[Int::from(3)]).unwrap(), vec![Int::ONE]);
        assert_eq!(h.lift(&Integers, &[Int::from(4)]).unwrap(), vec![Int::ZERO]);
    }

    #[test]
    fn composition_must_vanish() {
        let id = GroupMorphism::free(&Integers, IntMatrix::from_i64_rows(&[&[1]]));
        let err = homology_of_pair(&Integers, &id, &id).unwrap_err();
        assert!(matches!(err, LinalgError::ContractViolation(_)));
    }

    #[test]
    fn pentagon_middle_of_d_prime() {
        let d = IntMatrix::from_i64_rows(&[
            &[0, 0, 1, -1, 0],
            &[0, 0, 0, 1, -1],
            &[-1, 0, 0, 0, 1],
            &[1, -1, 0, 0, 0],
            &[0, 1, -1, 0, 0],
        ]);
        let f = GroupMorphism::free(&Integers, d);
        let h = homology_of_pair(&Integers, &f, &zmap(0, 5)).unwrap();
        assert_eq!(h.summary(&Integers), GroupSummary::free(1));
    }

    #[test]
    fn presented_invariants() {
        let g = PresentedGroup {
            gens: 2,
            relations: IntMatrix::from_i64_rows(&[&[2], &[0]]),
        };
        assert_eq!(
            g.invariants(&Integers),
            GroupSummary {
                rank: 1,
                torsion: vec![Int::from(2)]
            }
        );
    }

    #[test]
    fn torsion_source_and_target() {
        // Z/4 --x2--> Z/4 --x2--> Z/4 : ker = {0,2}, im = {0,2}, homology 0
        let g4 = PresentedGroup::from_orders(&[Some(Int::from(4))], Int::ZERO);
        let two = IntMatrix::from_i64_rows(&[&[2]]);
        let m = GroupMorphism::new(&Integers, g4.clone(), g4.clone(), two, true).unwrap();
        let h = homology_of_pair(&Integers, &m, &m).unwrap();
        assert!(h.summary(&Integers).is_zero());
        // Z/4 --0--> Z/4 --x2--> Z/4 : ker = {0,2} = Z/2
        let zero = GroupMorphism::new(
            &Integers,
            g4.clone(),
            g4.clone(),
            IntMatrix::from_i64_rows(&[&[0]]),
            true,
        )
        .unwrap();
        let h = homology_of_pair(&Integers, &zero, &m).unwrap();
        assert_eq!(h.summary(&Integers).torsion, vec![Int::from(2)]);
    }

    #[test]
    fn invalid_morphism_rejected() {
        let g2 = PresentedGroup::from_orders(&[Some(Int::from(2))], Int::ZERO);
        let g3 = PresentedGroup::from_orders(&[Some(Int::from(3))], Int::ZERO);
        let one = IntMatrix::from_i64_rows(&[&[1]]);
        assert!(GroupMorphism::new(&Integers, g2, g3, one, true).is_err());
    }

    #[test]
    fn rationals_have_no_torsion() {
        let q = Rationals;
        let f = GroupMorphism::free(&q, Matrix::from_rows(vec![vec![q.from_i64(2)]], 1));
        let g = GroupMorphism::free(&q, Matrix::filled(0, 1, q.zero()));
        let h = homology_of_pair(&q, &f, &g).unwrap();
        assert!(h.summary(&q).is_zero());
    }
}
