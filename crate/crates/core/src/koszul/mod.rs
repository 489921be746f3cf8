//! The finite bicomplex `R*(K)`: exterior generators `u_j`, face-ring
//! generators `v_i` with `v_i² = u_i v_i = 0`, basis `u_J v_I` for disjoint
//! `J`, `I` with `I ∈ K`, and the two anticommuting differentials
//!
//! `d(u_J v_I) = Σ_{k∈J} ε(k,J) u_{J∖k} v_{I∪k}` (terms with `I∪k ∉ K` vanish),
//! `d′(u_J v_I) = Σ_{j∈J} ε(j,J) u_{J∖j} v_I`.

mod iso;
mod product;

pub use iso::{basis_image, hochster_to_koszul_iso, IsoReport};
pub use product::{monomial_product, Class, KoszulCohomology};

use std::collections::BTreeMap;
use std::fmt;

use crate::bigraded::{Bidegree, BigradedModule};
use crate::complex::{SimplicialComplex, VertexSet};
use crate::error::Error;
use crate::linalg::{homology_of_pair, GroupMorphism, Matrix, MatrixOps, Ring};
use crate::par;

/// The monomial `u_J v_I`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RMonomial {
    pub j: VertexSet,
    pub i: VertexSet,
}

impl RMonomial {
    pub fn new(j: VertexSet, i: VertexSet) -> RMonomial {
        RMonomial { j, i }
    }

    pub fn bidegree(self) -> Bidegree {
        Bidegree::new(self.j.len(), self.i.len() + self.j.len())
    }

    pub fn total_degree(self) -> usize {
        2 * self.i.len() + self.j.len()
    }
}

impl fmt::Display for RMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.j.is_empty() && self.i.is_empty() {
            return write!(f, "1");
        }
        for x in self.j.iter() {
            write!(f, "u{}", x + 1)?;
        }
        for x in self.i.iter() {
            write!(f, "v{}", x + 1)?;
        }
        Ok(())
    }
}

impl fmt::Debug for RMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Sparse image of a monomial: `(negative sign, monomial)` terms.
pub type Terms = Vec<(bool, RMonomial)>;

pub fn d_terms(k: &SimplicialComplex, x: RMonomial) -> Terms {
    x.j.iter()
        .filter(|&c| k.is_face(x.i.with(c)))
        .map(|c| {
            (
                x.j.epsilon_negative(c),
                RMonomial::new(x.j.without(c), x.i.with(c)),
            )
        })
        .collect()
}

pub fn d_prime_terms(x: RMonomial) -> Terms {
    x.j.iter()
        .map(|c| (x.j.epsilon_negative(c), RMonomial::new(x.j.without(c), x.i)))
        .collect()
}

/// `ι_i(u_J v_I) = ε(i,J) u_{J∖i} v_I` if `i ∈ J`, else 0.
pub fn iota_terms(i: usize, x: RMonomial) -> Terms {
    if x.j.contains(i) {
        vec![(x.j.epsilon_negative(i), RMonomial::new(x.j.without(i), x.i))]
    } else {
        Vec::new()
    }
}

/// Monomial bases of `R*(K)` grouped by bidegree, each sorted by `(J, I)`.
#[derive(Clone, Debug)]
pub struct RComplex {
    complex: SimplicialComplex,
    basis: BTreeMap<Bidegree, Vec<RMonomial>>,
}

impl RComplex {
    pub fn new(k: &SimplicialComplex) -> RComplex {
        let mut basis: BTreeMap<Bidegree, Vec<RMonomial>> = BTreeMap::new();
        let all = k.vertices();
        for i in k.faces() {
            for j in all.minus(i).subsets() {
                let x = RMonomial::new(j, i);
                basis.entry(x.bidegree()).or_default().push(x);
            }
        }
        for v in basis.values_mut() {
            v.sort();
        }
        RComplex {
            complex: k.clone(),
            basis,
        }
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn bidegrees(&self) -> Vec<Bidegree> {
        self.basis.keys().copied().collect()
    }

    pub fn basis(&self, b: Bidegree) -> &[RMonomial] {
        self.basis.get(&b).map_or(&[], |v| v.as_slice())
    }

    pub fn dim(&self) -> usize {
        self.basis.values().map(|v| v.len()).sum()
    }

    pub fn index_of(&self, x: RMonomial) -> Option<usize> {
        self.basis(x.bidegree()).binary_search(&x).ok()
    }

    fn matrix_of<R: Ring>(
        &self,
        ring: &R,
        b: Bidegree,
        target: Option<Bidegree>,
        f: impl Fn(RMonomial) -> Terms,
    ) -> Matrix<R::Elem> {
        let src = self.basis(b);
        let tgt = target.map_or(&[][..], |t| self.basis(t));
        let mut m = Matrix::filled(tgt.len(), src.len(), ring.zero());
        if tgt.is_empty() {
            return m;
        }
        for (c, &x) in src.iter().enumerate() {
            for (neg, y) in f(x) {
                let r = tgt
                    .binary_search(&y)
                    .expect("image lies in the target basis");
                m[(r, c)] = ring.add(&m[(r, c)], &ring.sign(neg));
            }
        }
        m
    }

    /// `d : (-k, 2l) -> (-k+1, 2l)`.
    pub fn d<R: Ring>(&self, ring: &R, b: Bidegree) -> Matrix<R::Elem> {
        let t = (b.k >= 1).then(|| Bidegree::new(b.k - 1, b.l));
        self.matrix_of(ring, b, t, |x| d_terms(&self.complex, x))
    }

    /// `d′ : (-k, 2l) -> (-k+1, 2l-2)`.
    pub fn d_prime<R: Ring>(&self, ring: &R, b: Bidegree) -> Matrix<R::Elem> {
        let t = (b.k >= 1).then(|| Bidegree::new(b.k - 1, b.l - 1));
        self.matrix_of(ring, b, t, d_prime_terms)
    }

    /// `ι_i`, same bidegree shift as `d′`.
    pub fn iota<R: Ring>(&self, ring: &R, i: usize, b: Bidegree) -> Matrix<R::Elem> {
        let t = (b.k >= 1).then(|| Bidegree::new(b.k - 1, b.l - 1));
        self.matrix_of(ring, b, t, |x| iota_terms(i, x))
    }

    /// Checks `d² = 0`, `d′² = 0`, `dd′ = -d′d` and `d′ = Σ ι_i` at every bidegree.
    pub fn check_identities<R: Ring>(&self, ring: &R) -> Result<(), Error> {
        let results = par::map_slice(&self.bidegrees(), |&b| self.check_at(ring, b));
        results.into_iter().collect()
    }

    fn check_at<R: Ring>(&self, ring: &R, b: Bidegree) -> Result<(), Error> {
        let fault = |what: &str| Err(Error::SignConventionFault(format!("{what} fails at {b}")));
        if b.k >= 1 {
            let down = Bidegree::new(b.k - 1, b.l);
            if !self.d(ring, down).mul(ring, &self.d(ring, b)).is_zero(ring) {
                return fault("d^2 = 0");
            }
            let diag = Bidegree::new(b.k - 1, b.l - 1);
            if !self
                .d_prime(ring, diag)
                .mul(ring, &self.d_prime(ring, b))
                .is_zero(ring)
            {
                return fault("d'^2 = 0");
            }
            let dd1 = self.d(ring, diag).mul(ring, &self.d_prime(ring, b));
            let dd2 = self.d_prime(ring, down).mul(ring, &self.d(ring, b));
            if !dd1.add(ring, &dd2).is_zero(ring) {
                return fault("dd' = -d'd");
            }
        }
        let mut sum = self.d_prime(ring, b).scaled(ring, &ring.zero());
        for i in 0..self.complex.m() {
            sum = sum.add(ring, &self.iota(ring, i, b));
        }
        if sum != self.d_prime(ring, b) {
            return fault("d' = sum of iota");
        }
        Ok(())
    }

    /// Plain-text dump of the bases and differentials.
    pub fn dump<R: Ring>(&self, ring: &R) -> String
    where
        R::Elem: fmt::Display,
    {
        let mut out = String::new();
        for b in self.bidegrees() {
            let names: Vec<String> = self.basis(b).iter().map(|x| x.to_string()).collect();
            out.push_str(&format!("{b}: {}\n", names.join(" ")));
            out.push_str(&format!(
                "d from {b}:\n{}",
                crate::linalg::grid(&self.d(ring, b))
            ));
            out.push_str(&format!(
                "d' from {b}:\n{}",
                crate::linalg::grid(&self.d_prime(ring, b))
            ));
        }
        out
    }
}

/// `H*(Z_K)` as the cohomology of `(R*(K), d)`.
pub fn cohomology_via_koszul<R: Ring>(
    ring: &R,
    k: &SimplicialComplex,
) -> Result<BigradedModule, Error> {
    Ok(KoszulCohomology::new(ring, k)?.module())
}

/// `HH*(Z_K)` from `d′` induced on `H(R*(K), d)`.
pub fn hh_via_koszul<R: Ring>(ring: &R, k: &SimplicialComplex) -> Result<BigradedModule, Error> {
    Ok(KoszulCohomology::new(ring, k)?.double()?.module)
}

/// `H(R*(K), d′)` with a representative for each generator.
#[derive(Clone, Debug)]
pub struct AcyclicityReport<E> {
    pub module: BigradedModule,
    pub generators: Vec<(Bidegree, Vec<(RMonomial, E)>)>,
}

pub fn d_prime_acyclicity<R: Ring>(
    ring: &R,
    k: &SimplicialComplex,
) -> Result<AcyclicityReport<R::Elem>, Error> {
    let rc = RComplex::new(k);
    let bs = rc.bidegrees();
    let parts = par::map_slice(&bs, |&b| {
        let incoming = Bidegree::new(b.k + 1, b.l + 1);
        let f = rc.d_prime(ring, incoming);
        let f = if f.rows() == rc.basis(b).len() {
            f
        } else {
            Matrix::filled(rc.basis(b).len(), 0, ring.zero())
        };
        let g = rc.d_prime(ring, b);
        homology_of_pair(
            ring,
            &GroupMorphism::free(ring, f),
            &GroupMorphism::free(ring, g),
        )
    });
    let mut module = BigradedModule::new();
    let mut generators = Vec::new();
    for (b, part) in bs.into_iter().zip(parts) {
        let part = part?;
        module.insert(b, part.summary(ring));
        for g in 0..part.len() {
            let rep = rc
                .basis(b)
                .iter()
                .enumerate()
                .filter(|(r, _)| !ring.is_zero(&part.reps[(*r, g)]))
                .map(|(r, &x)| (x, part.reps[(r, g)].clone()))
                .collect();
            generators.push((b, rep));
        }
    }
    Ok(AcyclicityReport { module, generators })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::*;
    use crate::linalg::{Int, Integers};

    fn vs(v: &[usize]) -> VertexSet {
        v.iter().map(|x| x - 1).collect()
    }

    #[test]
    fn formulas_on_two_points() {
        let k = boundary_simplex(2);
        let rc = RComplex::new(&k);
        assert_eq!(rc.dim(), 8);
        let x = RMonomial::new(vs(&[1, 2]), VertexSet::EMPTY);
        let d = d_terms(&k, x);
        assert_eq!(
            d,
            vec![
                (false, RMonomial::new(vs(&[2]), vs(&[1]))),
                (true, RMonomial::new(vs(&[1]), vs(&[2])))
            ]
        );
        let dp = d_prime_terms(x);
        assert_eq!(
            dp,
            vec![
                (false, RMonomial::new(vs(&[2]), VertexSet::EMPTY)),
                (true, RMonomial::new(vs(&[1]), VertexSet::EMPTY))
            ]
        );
        let y = RMonomial::new(vs(&[1]), vs(&[2]));
        assert_eq!(
            iota_terms(0, y),
            vec![(false, RMonomial::new(VertexSet::EMPTY, vs(&[2])))]
        );
        assert!(iota_terms(1, y).is_empty());
    }

    #[test]
    fn identities_hold() {
        for k in [rp2_minimal(), cycle(5), two_squares(), simplex(3)] {
            RComplex::new(&k).check_identities(&Integers).unwrap();
        }
    }

    #[test]
    fn square_cohomology() {
        let h = cohomology_via_koszul(&Integers, &cycle(4)).unwrap();
        assert_eq!(
            h,
            BigradedModule::free_from(&[(0, 0, 1), (1, 2, 2), (2, 4, 1)])
        );
    }

    #[test]
    fn acyclicity() {
        let r = d_prime_acyclicity(&Integers, &cycle(5)).unwrap();
        assert!(r.module.is_empty());
        let r = d_prime_acyclicity(&Integers, &simplex(3)).unwrap();
        assert_eq!(r.module, BigradedModule::free_from(&[(0, 3, 1)]));
        let (b, rep) = &r.generators[0];
        assert_eq!(*b, Bidegree::new(0, 3));
        assert_eq!(rep.len(), 1);
        assert_eq!(rep[0].0, RMonomial::new(VertexSet::EMPTY, vs(&[1, 2, 3])));
        assert_eq!(rep[0].1.abs(), Int::ONE);
    }
}
