use std::collections::{BTreeMap, BTreeSet};

use super::{d_prime_terms, d_terms, RComplex, RMonomial};
use crate::complex::{SimplicialComplex, VertexSet};
use crate::error::Error;

/// What the cochain-level comparison covered.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IsoReport {
    pub basis_elements: usize,
    pub d_checks: usize,
    pub d_prime_checks: usize,
}

type Sparse = BTreeMap<RMonomial, i64>;

fn push(acc: &mut Sparse, negative: bool, x: RMonomial, scale: i64) {
    let e = acc.entry(x).or_insert(0);
    *e += if negative { -scale } else { scale };
    if *e == 0 {
        acc.remove(&x);
    }
}

/// The basis cochain `α_{L,I}` of `C^{|L|-1}(K_I)` goes to `ε(L,I) u_{I∖L} v_L`.
pub fn basis_image(l: VertexSet, i: VertexSet) -> (bool, RMonomial) {
    let neg = l.iter().filter(|&x| i.epsilon_negative(x)).count() % 2 == 1;
    (neg, RMonomial::new(i.minus(l), l))
}

/// Checks on every basis cochain that `α_{L,I} ↦ ε(L,I) u_{I∖L} v_L` is a
/// bijection onto the monomial basis of `R*(K)` intertwining the simplicial
/// coboundary with `d` and the signed restrictions with `d′`.
pub fn hochster_to_koszul_iso(k: &SimplicialComplex) -> Result<IsoReport, Error> {
    let rc = RComplex::new(k);
    let mut seen = BTreeSet::new();
    let mut report = IsoReport {
        basis_elements: 0,
        d_checks: 0,
        d_prime_checks: 0,
    };
    for i in k.vertices().subsets() {
        for l in k.faces_within(i) {
            let (neg, x) = basis_image(l, i);
            if rc.index_of(x).is_none() || !seen.insert(x) {
                return Err(Error::SignConventionFault(format!(
                    "α_({l},{i}) has no distinct image"
                )));
            }
            report.basis_elements += 1;
            let scale = if neg { -1 } else { 1 };

            // coboundary: Σ_{j ∈ I∖L, L∪j ∈ K} ε(j,L) α_{L∪j,I}
            let mut lhs = Sparse::new();
            for j in i.minus(l).iter().filter(|&j| k.is_face(l.with(j))) {
                let (n2, y) = basis_image(l.with(j), i);
                push(&mut lhs, l.epsilon_negative(j) ^ n2, y, 1);
            }
            let mut rhs = Sparse::new();
            for (n2, y) in d_terms(k, x) {
                push(&mut rhs, n2, y, scale);
            }
            if lhs != rhs {
                return Err(Error::SignConventionFault(format!(
                    "d square fails on α_({l},{i})"
                )));
            }
            report.d_checks += 1;

            // restrictions: (-1)^{|L|} Σ_{t ∈ I∖L} ε(t,I) α_{L,I∖t}
            let mut lhs = Sparse::new();
            for t in i.minus(l).iter() {
                let (n2, y) = basis_image(l, i.without(t));
                push(
                    &mut lhs,
                    (l.len() % 2 == 1) ^ i.epsilon_negative(t) ^ n2,
                    y,
                    1,
                );
            }
            let mut rhs = Sparse::new();
            for (n2, y) in d_prime_terms(x) {
                push(&mut rhs, n2, y, scale);
            }
            if lhs != rhs {
                return Err(Error::SignConventionFault(format!(
                    "d' square fails on α_({l},{i})"
                )));
            }
            report.d_prime_checks += 1;
        }
    }
    if seen.len() != rc.dim() {
        return Err(Error::SignConventionFault(format!(
            "{} cochains against {} monomials",
            seen.len(),
            rc.dim()
        )));
    }
    Ok(report)
}
