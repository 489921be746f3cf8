use super::SimplicialComplex;
use crate::homology::{cohomology, transfer, SubsetHomology};
use crate::linalg::{
    direct_sum, homology_of_pair, GroupMorphism, LinalgError, Matrix, PresentedGroup, Ring,
};

/// A class in `H̃^p(K)` given by its coordinates in the generators of the
/// cohomology it was computed from.
#[derive(Clone, Debug, PartialEq)]
pub struct TopClass<E> {
    pub degree: isize,
    pub coords: Vec<E>,
    /// `Some(d)` when the class generates a cyclic summand of order `d`.
    pub order: Option<E>,
}

/// Generators of the subgroup of `H̃^*(K)` killed by every restriction to a
/// full subcomplex on `m - 1` vertices (hence by every proper restriction).
pub fn top_classes<R: Ring>(
    ring: &R,
    k: &SimplicialComplex,
    h: &SubsetHomology<R::Elem>,
) -> Result<Vec<TopClass<R::Elem>>, LinalgError> {
    let full = k.vertices();
    let subs: Vec<SubsetHomology<R::Elem>> = (0..k.m())
        .map(|i| cohomology(ring, k, full.without(i)))
        .collect();
    let mut out = Vec::new();
    for p in -1..=h.complex.top_degree() {
        let n = h.gens(p);
        if n == 0 {
            continue;
        }
        let source = h.presented(ring, p);
        let mut stacked: Option<Matrix<R::Elem>> = None;
        let mut target_rel: Vec<PresentedGroup<R::Elem>> = Vec::new();
        for s in &subs {
            let m = transfer(ring, h, s, p)?;
            stacked = Some(match stacked {
                None => m,
                Some(acc) => acc.vstack(&m),
            });
            target_rel.push(s.presented(ring, p));
        }
        let stacked = stacked.unwrap_or_else(|| Matrix::filled(0, n, ring.zero()));
        let target = direct_sum(ring, &target_rel);
        let g = GroupMorphism::new(
            ring,
            source.clone(),
            target,
            stacked,
            cfg!(debug_assertions),
        )?;
        let f = GroupMorphism {
            source: PresentedGroup::free(0, ring.zero()),
            target: source,
            matrix: Matrix::filled(n, 0, ring.zero()),
        };
        let ker = homology_of_pair(ring, &f, &g)?;
        for (c, order) in ker.orders.iter().enumerate() {
            out.push(TopClass {
                degree: p,
                coords: ker.reps.column(c),
                order: order.clone(),
            });
        }
    }
    Ok(out)
}
