//! Bigraded cohomology of the moment-angle complex through the full
//! subcomplex decomposition
//!
//! `H^{-k,2l}(Z_K) = ⊕_{|I|=l} H̃^{l-k-1}(K_I)`,
//!
//! the differential `d′` built from signed restrictions (and its homology
//! mirror `∂′` built from signed inclusions), and double (co)homology.

use std::collections::BTreeMap;

use crate::bigraded::{Bidegree, BigradedModule};
use crate::complex::{SimplicialComplex, VertexSet};
use crate::error::Error;
use crate::homology::{subset_homology, transfer, SubsetHomology, Variance};
use crate::linalg::{
    direct_sum, homology_of_pair, GroupMorphism, GroupSummary, LinalgError, Matrix, MatrixOps,
    PresentedGroup, Ring, Subquotient,
};
use crate::par;

/// One subset's contribution to a bidegree: generators
/// `offset .. offset + len` of the direct sum come from `H̃^p(K_I)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Summand {
    pub subset: VertexSet,
    pub offset: usize,
    pub len: usize,
}

/// `(H^*(Z_K), d′)` or `(H_*(Z_K), ∂′)` with every group tracked down to
/// subset summands and (co)cycle representatives.
#[derive(Clone, Debug)]
pub struct ChComplex<R: Ring> {
    ring: R,
    m: usize,
    variance: Variance,
    /// Indexed by subset bitmask.
    subsets: Vec<SubsetHomology<R::Elem>>,
    summands: BTreeMap<Bidegree, Vec<Summand>>,
    /// Keyed by source bidegree; rows index the target bidegree's generators.
    differentials: BTreeMap<Bidegree, Matrix<R::Elem>>,
    /// Flip the sign of one block; only for exercising the fault detection.
    sign_fault: bool,
}

/// `(-1)^{p+1} ε(j, I)` as a parity: true means `-1`.
fn block_sign(p: isize, subset: VertexSet, j: usize) -> bool {
    ((p + 1).rem_euclid(2) == 1) ^ subset.epsilon_negative(j)
}

impl<R: Ring> ChComplex<R> {
    pub fn cohomology(ring: &R, k: &SimplicialComplex) -> Result<ChComplex<R>, Error> {
        ChComplex::build(ring, k, Variance::Cohomology, false)
    }

    pub fn homology(ring: &R, k: &SimplicialComplex) -> Result<ChComplex<R>, Error> {
        ChComplex::build(ring, k, Variance::Homology, false)
    }

    /// Like [`cohomology`](Self::cohomology) but with one block of `d′`
    /// negated, so that `d′² ≠ 0` whenever that block matters.
    pub fn with_injected_sign_fault(
        ring: &R,
        k: &SimplicialComplex,
    ) -> Result<ChComplex<R>, Error> {
        ChComplex::build(ring, k, Variance::Cohomology, true)
    }

    fn build(
        ring: &R,
        k: &SimplicialComplex,
        variance: Variance,
        sign_fault: bool,
    ) -> Result<ChComplex<R>, Error> {
        let m = k.m();
        let subsets = par::map_range(1 << m, |s| {
            subset_homology(ring, k, VertexSet::from_bits(s as u32), variance)
        });
        let mut summands: BTreeMap<Bidegree, Vec<Summand>> = BTreeMap::new();
        for h in &subsets {
            let i = h.support();
            for p in -1..=h.complex.top_degree() {
                let n = h.gens(p);
                if n == 0 {
                    continue;
                }
                let list = summands
                    .entry(Bidegree::from_subset(i.len(), p))
                    .or_default();
                let offset = list.last().map_or(0, |s| s.offset + s.len);
                list.push(Summand {
                    subset: i,
                    offset,
                    len: n,
                });
            }
        }
        let mut ch = ChComplex {
            ring: ring.clone(),
            m,
            variance,
            subsets,
            summands,
            differentials: BTreeMap::new(),
            sign_fault,
        };
        let sources: Vec<Bidegree> = ch.summands.keys().copied().collect();
        let mats = par::map_slice(&sources, |&b| ch.assemble(b));
        for (b, mat) in sources.into_iter().zip(mats) {
            ch.differentials.insert(b, mat?);
        }
        ch.check_square_zero()?;
        Ok(ch)
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn variance(&self) -> Variance {
        self.variance
    }

    pub fn subset(&self, s: VertexSet) -> &SubsetHomology<R::Elem> {
        &self.subsets[s.bits() as usize]
    }

    pub fn summands(&self, b: Bidegree) -> &[Summand] {
        self.summands.get(&b).map_or(&[], |v| v.as_slice())
    }

    pub fn bidegrees(&self) -> Vec<Bidegree> {
        self.summands.keys().copied().collect()
    }

    /// Number of generators of the direct sum at `b`.
    pub fn gens(&self, b: Bidegree) -> usize {
        self.summands(b).last().map_or(0, |s| s.offset + s.len)
    }

    /// Bidegree the differential goes to from `b`, if it is in range.
    pub fn target_of(&self, b: Bidegree) -> Option<Bidegree> {
        match self.variance {
            Variance::Cohomology => (b.k >= 1 && b.l >= 1).then(|| Bidegree::new(b.k - 1, b.l - 1)),
            Variance::Homology => (b.l < self.m).then(|| Bidegree::new(b.k + 1, b.l + 1)),
        }
    }

    /// Bidegree the differential comes from into `b`, if it is in range.
    pub fn source_of(&self, b: Bidegree) -> Option<Bidegree> {
        match self.variance {
            Variance::Cohomology => (b.l < self.m).then(|| Bidegree::new(b.k + 1, b.l + 1)),
            Variance::Homology => (b.k >= 1 && b.l >= 1).then(|| Bidegree::new(b.k - 1, b.l - 1)),
        }
    }

    /// The presented group at `b`, a direct sum over its summands.
    pub fn group(&self, b: Bidegree) -> PresentedGroup<R::Elem> {
        let p = b.simplicial_degree();
        let parts: Vec<PresentedGroup<R::Elem>> = self
            .summands(b)
            .iter()
            .map(|s| self.subset(s.subset).presented(&self.ring, p))
            .collect();
        direct_sum(&self.ring, &parts)
    }

    pub fn group_summary(&self, b: Bidegree) -> GroupSummary {
        self.group(b).invariants(&self.ring)
    }

    /// The bigraded group `H^*(Z_K)` (or `H_*`).
    pub fn module(&self) -> BigradedModule {
        let mut out = BigradedModule::new();
        for b in self.bidegrees() {
            out.insert(b, self.group_summary(b));
        }
        out
    }

    /// Matrix of the differential leaving `b` (rows: generators at the
    /// target bidegree). Empty when `b` has no generators.
    pub fn differential(&self, b: Bidegree) -> Matrix<R::Elem> {
        match self.differentials.get(&b) {
            Some(d) => d.clone(),
            None => {
                let rows = self.target_of(b).map_or(0, |t| self.gens(t));
                Matrix::filled(rows, 0, self.ring.zero())
            }
        }
    }

    fn assemble(&self, b: Bidegree) -> Result<Matrix<R::Elem>, Error> {
        let ring = &self.ring;
        let p = b.simplicial_degree();
        let Some(t) = self.target_of(b) else {
            return Ok(Matrix::filled(0, self.gens(b), ring.zero()));
        };
        let mut d = Matrix::filled(self.gens(t), self.gens(b), ring.zero());
        let target_index: BTreeMap<VertexSet, Summand> =
            self.summands(t).iter().map(|s| (s.subset, *s)).collect();
        let mut first_block = true;
        for src in self.summands(b) {
            let moves: Vec<(usize, VertexSet)> = match self.variance {
                Variance::Cohomology => src
                    .subset
                    .iter()
                    .map(|i| (i, src.subset.without(i)))
                    .collect(),
                Variance::Homology => VertexSet::full(self.m)
                    .minus(src.subset)
                    .iter()
                    .map(|j| (j, src.subset.with(j)))
                    .collect(),
            };
            for (v, dst) in moves {
                let Some(tgt) = target_index.get(&dst) else {
                    continue;
                };
                let block = transfer(ring, self.subset(src.subset), self.subset(dst), p)?;
                let mut negative = block_sign(p, src.subset, v);
                if self.sign_fault && first_block && !block.is_zero(ring) {
                    negative = !negative;
                    first_block = false;
                }
                for r in 0..tgt.len {
                    for c in 0..src.len {
                        let x = &block[(r, c)];
                        if ring.is_zero(x) {
                            continue;
                        }
                        let x = if negative { ring.neg(x) } else { x.clone() };
                        let cell = &mut d[(tgt.offset + r, src.offset + c)];
                        *cell = ring.add(cell, &x);
                    }
                }
            }
        }
        Ok(d)
    }

    fn check_square_zero(&self) -> Result<(), Error> {
        for b in self.bidegrees() {
            let Some(t) = self.target_of(b) else {
                continue;
            };
            let Some(t2) = self.target_of(t) else {
                continue;
            };
            if self.gens(t2) == 0 {
                continue;
            }
            let dd = self.differential(t).mul(&self.ring, &self.differential(b));
            if !self.group(t2).columns_vanish(&self.ring, &dd) {
                return Err(Error::SignConventionFault(format!(
                    "differential squares to a nonzero map from {b}"
                )));
            }
        }
        Ok(())
    }

    /// Homology of the differential at every bidegree, with lifting data.
    pub fn double(&self) -> Result<DoubleCohomology<R::Elem>, Error> {
        let ring = &self.ring;
        let bs = self.bidegrees();
        let parts = par::map_slice(&bs, |&b| -> Result<Subquotient<R::Elem>, Error> {
            let here = self.group(b);
            let incoming = match self.source_of(b) {
                Some(s) if self.gens(s) > 0 => GroupMorphism {
                    source: self.group(s),
                    target: here.clone(),
                    matrix: self.differential(s),
                },
                _ => GroupMorphism {
                    source: PresentedGroup::free(0, ring.zero()),
                    target: here.clone(),
                    matrix: Matrix::filled(here.gens, 0, ring.zero()),
                },
            };
            let outgoing = GroupMorphism {
                source: here,
                target: self
                    .target_of(b)
                    .map_or_else(|| PresentedGroup::free(0, ring.zero()), |t| self.group(t)),
                matrix: self.differential(b),
            };
            homology_of_pair(ring, &incoming, &outgoing).map_err(|e| match e {
                LinalgError::ContractViolation(_) => {
                    Error::SignConventionFault(format!("differential squares to nonzero at {b}"))
                }
                other => other.into(),
            })
        });
        let mut module = BigradedModule::new();
        let mut map = BTreeMap::new();
        for (b, part) in bs.into_iter().zip(parts) {
            let part = part?;
            module.insert(b, part.summary(ring));
            map.insert(b, part);
        }
        Ok(DoubleCohomology { module, parts: map })
    }

    /// Element of the group at `b` given by a class of a single summand.
    pub fn embed(
        &self,
        b: Bidegree,
        subset: VertexSet,
        coords: &[R::Elem],
    ) -> Option<Vec<R::Elem>> {
        let s = self.summands(b).iter().find(|s| s.subset == subset)?;
        let mut v = vec![self.ring.zero(); self.gens(b)];
        for (i, c) in coords.iter().enumerate() {
            v[s.offset + i] = c.clone();
        }
        Some(v)
    }

    /// Maps `src` into `self` bidegree by bidegree. Each generator's
    /// representative is moved face by face through `face_map` (faces the
    /// target subset lacks are dropped) and expressed in the target summand
    /// for `face_map(I)`. The result is checked to commute with both
    /// differentials.
    pub fn morphism_from(
        &self,
        src: &ChComplex<R>,
        face_map: impl Fn(VertexSet) -> VertexSet,
    ) -> Result<ChMorphism<R::Elem>, Error> {
        let ring = &self.ring;
        let mut blocks = BTreeMap::new();
        for b in src.bidegrees() {
            let p = b.simplicial_degree();
            let mut mat = Matrix::filled(self.gens(b), src.gens(b), ring.zero());
            for s in src.summands(b) {
                let t_subset = face_map(s.subset);
                let Some(t) = self.summands(b).iter().find(|t| t.subset == t_subset) else {
                    continue;
                };
                let from = src.subset(s.subset);
                let to = self.subset(t_subset);
                for g in 0..s.len {
                    let chain: Vec<(VertexSet, R::Elem)> = from
                        .representative(ring, p, g)
                        .into_iter()
                        .map(|(f, c)| (face_map(f), c))
                        .filter(|(f, _)| to.complex.index_of(p, *f).is_some())
                        .collect();
                    let coords = to.express(ring, p, &chain)?;
                    for (r, x) in coords.into_iter().enumerate() {
                        mat[(t.offset + r, s.offset + g)] = x;
                    }
                }
            }
            blocks.insert(b, mat);
        }
        let f = ChMorphism { blocks };
        for b in src.bidegrees() {
            let Some(t) = src.target_of(b) else {
                continue;
            };
            if self.gens(t) == 0 {
                continue;
            }
            let lhs = self.differential(b).mul(ring, &f.block(ring, self, src, b));
            let rhs = f.block(ring, self, src, t).mul(ring, &src.differential(b));
            let diff = lhs.add(ring, &rhs.scaled(ring, &ring.neg(&ring.one())));
            if !self.group(t).columns_vanish(ring, &diff) {
                return Err(Error::CommutationFailure(format!("at source bidegree {b}")));
            }
        }
        Ok(f)
    }
}

/// A degreewise map between two `CH` complexes.
#[derive(Clone, Debug)]
pub struct ChMorphism<E> {
    pub blocks: BTreeMap<Bidegree, Matrix<E>>,
}

impl<E: Clone> ChMorphism<E> {
    /// Block at `b`, zero-filled when the source has no generators there.
    pub fn block<R: Ring<Elem = E>>(
        &self,
        ring: &R,
        target: &ChComplex<R>,
        source: &ChComplex<R>,
        b: Bidegree,
    ) -> Matrix<E> {
        self.blocks
            .get(&b)
            .cloned()
            .unwrap_or_else(|| Matrix::filled(target.gens(b), source.gens(b), ring.zero()))
    }
}

/// `HH` at every bidegree together with the subquotient data needed to
/// lift elements of `CH` into it.
#[derive(Clone, Debug)]
pub struct DoubleCohomology<E> {
    pub module: BigradedModule,
    pub parts: BTreeMap<Bidegree, Subquotient<E>>,
}

impl<E: Clone + PartialEq + std::fmt::Debug> DoubleCohomology<E> {
    /// Class in `HH` at `b` of a cycle of `CH` at `b`.
    pub fn class_of<R: Ring<Elem = E>>(
        &self,
        ring: &R,
        b: Bidegree,
        element: &[E],
    ) -> Result<Vec<E>, LinalgError> {
        match self.parts.get(&b) {
            Some(p) => p.lift(ring, element),
            None => Ok(Vec::new()),
        }
    }
}

/// `H^{-k,2l}(Z_K)` from full subcomplexes.
pub fn hochster_cohomology<R: Ring>(
    ring: &R,
    k: &SimplicialComplex,
) -> Result<BigradedModule, Error> {
    Ok(ChComplex::cohomology(ring, k)?.module())
}

/// `HH^*(Z_K) = H(H^*(Z_K), d′)`.
pub fn double_cohomology<R: Ring>(
    ring: &R,
    k: &SimplicialComplex,
) -> Result<BigradedModule, Error> {
    Ok(ChComplex::cohomology(ring, k)?.double()?.module)
}

/// `HH_*(Z_K) = H(H_*(Z_K), ∂′)`.
pub fn double_homology<R: Ring>(ring: &R, k: &SimplicialComplex) -> Result<BigradedModule, Error> {
    Ok(ChComplex::homology(ring, k)?.double()?.module)
}

pub fn euler_characteristic(hh: &BigradedModule) -> i64 {
    hh.euler_characteristic()
}

/// The inclusion of summands `CH^*(Z_{K_I}) -> CH^*(Z_K)`, computed from the
/// two complexes independently and checked to commute with `d′`.
pub fn ch_restriction_morphism<R: Ring>(
    ring: &R,
    k: &SimplicialComplex,
    subset: VertexSet,
) -> Result<(ChComplex<R>, ChComplex<R>, ChMorphism<R::Elem>), Error> {
    let sub = k.full_subcomplex(subset);
    let source = ChComplex::cohomology(ring, &sub)?;
    let target = ChComplex::cohomology(ring, k)?;
    let f = target.morphism_from(&source, |s| s.expand(subset))?;
    Ok((source, target, f))
}

/// For a subcomplex `L ⊂ K` on the same vertex set, the map
/// `CH_*(Z_L) -> CH_*(Z_K)` induced on homology of every full subcomplex.
pub fn ch_subcomplex_homology_map<R: Ring>(
    ring: &R,
    l: &SimplicialComplex,
    k: &SimplicialComplex,
) -> Result<(ChComplex<R>, ChComplex<R>, ChMorphism<R::Elem>), Error> {
    assert_eq!(l.m(), k.m(), "same vertex set");
    let source = ChComplex::homology(ring, l)?;
    let target = ChComplex::homology(ring, k)?;
    let f = target.morphism_from(&source, |s| s)?;
    Ok((source, target, f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::*;
    use crate::linalg::{Int, Integers};

    #[test]
    fn pentagon_table() {
        let ch = ChComplex::cohomology(&Integers, &cycle(5)).unwrap();
        let h = ch.module();
        assert_eq!(
            h,
            BigradedModule::free_from(&[(0, 0, 1), (1, 2, 5), (2, 3, 5), (3, 5, 1)])
        );
        let d = ch.differential(Bidegree::new(2, 3));
        assert_eq!((d.rows(), d.cols()), (5, 5));
        assert_eq!(crate::linalg::rank_over_rationals(&d), 4);
        let hh = ch.double().unwrap().module;
        assert_eq!(
            hh,
            BigradedModule::free_from(&[(0, 0, 1), (1, 2, 1), (2, 3, 1), (3, 5, 1)])
        );
    }

    #[test]
    fn rp2_torsion_is_asymmetric() {
        let k = rp2_minimal();
        let hh = double_cohomology(&Integers, &k).unwrap();
        assert_eq!(
            hh.get(Bidegree::new(3, 6)),
            GroupSummary {
                rank: 0,
                torsion: vec![Int::from(2)]
            }
        );
        let hh_hom = double_homology(&Integers, &k).unwrap();
        assert!(hh_hom.get(Bidegree::new(3, 6)).is_zero());
        assert!(hh_hom.get(Bidegree::new(4, 6)).is_zero());
    }

    #[test]
    fn injected_fault_is_caught() {
        let err = ChComplex::with_injected_sign_fault(&Integers, &rp2_minimal()).unwrap_err();
        assert!(matches!(err, Error::SignConventionFault(_)));
    }

    #[test]
    fn restriction_to_everything_is_identity() {
        let k = cycle(5);
        let (src, _, f) = ch_restriction_morphism(&Integers, &k, k.vertices()).unwrap();
        for b in src.bidegrees() {
            let id = <Matrix<Int> as crate::linalg::MatrixOps<Integers>>::identity(
                &Integers,
                src.gens(b),
            );
            assert_eq!(f.blocks[&b], id);
        }
        let (src, tgt, f) = ch_restriction_morphism(&Integers, &k, VertexSet::EMPTY).unwrap();
        assert_eq!(src.bidegrees(), vec![Bidegree::new(0, 0)]);
        assert_eq!(
            f.blocks[&Bidegree::new(0, 0)].rows(),
            tgt.gens(Bidegree::new(0, 0))
        );
    }
}
