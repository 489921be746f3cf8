use std::collections::BTreeMap;

use super::{RComplex, RMonomial};
use crate::bigraded::{Bidegree, BigradedModule};
use crate::complex::SimplicialComplex;
use crate::error::Error;
use crate::hochster::DoubleCohomology;
use crate::linalg::{
    homology_of_pair, Coefficients, GroupMorphism, LinalgError, Matrix, MatrixOps, PresentedGroup,
    Ring, Subquotient,
};
use crate::par;

/// A cohomology class of `(R*(K), d)`, in the generators of its bidegree.
#[derive(Clone, Debug, PartialEq)]
pub struct Class<E> {
    pub coefficients: Coefficients,
    pub bidegree: Bidegree,
    pub coords: Vec<E>,
}

/// `H(R*(K), d)` at every bidegree, with representatives, the induced `d′`
/// and products.
#[derive(Clone, Debug)]
pub struct KoszulCohomology<R: Ring> {
    ring: R,
    rc: RComplex,
    parts: BTreeMap<Bidegree, Subquotient<R::Elem>>,
}

fn contract_to_fault(b: Bidegree) -> impl Fn(LinalgError) -> Error {
    move |e| match e {
        LinalgError::ContractViolation(_) => {
            Error::SignConventionFault(format!("differential squares to nonzero at {b}"))
        }
        other => other.into(),
    }
}

/// `u_J v_I · u_J′ v_I′` in `R*(K)`, or `None` when it vanishes.
pub fn monomial_product(
    k: &SimplicialComplex,
    x: RMonomial,
    y: RMonomial,
) -> Option<(bool, RMonomial)> {
    let j = x.j.union(y.j);
    let i = x.i.union(y.i);
    if !x.j.is_disjoint(y.j) || !x.i.is_disjoint(y.i) || !j.is_disjoint(i) || !k.is_face(i) {
        return None;
    }
    // u_J u_J′ = (-1)^{#{(a, b) ∈ J × J′ : a > b}} u_{J ∪ J′}
    let swaps: usize = y.j.iter().map(|b| x.j.len() - x.j.count_below(b)).sum();
    Some((swaps % 2 == 1, RMonomial::new(j, i)))
}

impl<R: Ring> KoszulCohomology<R> {
    pub fn new(ring: &R, k: &SimplicialComplex) -> Result<KoszulCohomology<R>, Error> {
        let rc = RComplex::new(k);
        let bs = rc.bidegrees();
        let parts = par::map_slice(&bs, |&b| {
            let n = rc.basis(b).len();
            let up = Bidegree::new(b.k + 1, b.l);
            let f = if rc.basis(up).is_empty() {
                Matrix::filled(n, 0, ring.zero())
            } else {
                rc.d(ring, up)
            };
            let g = rc.d(ring, b);
            homology_of_pair(
                ring,
                &GroupMorphism::free(ring, f),
                &GroupMorphism::free(ring, g),
            )
            .map_err(contract_to_fault(b))
        });
        let mut map = BTreeMap::new();
        for (b, part) in bs.into_iter().zip(parts) {
            map.insert(b, part?);
        }
        Ok(KoszulCohomology {
            ring: ring.clone(),
            rc,
            parts: map,
        })
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn r_complex(&self) -> &RComplex {
        &self.rc
    }

    pub fn bidegrees(&self) -> Vec<Bidegree> {
        self.parts.keys().copied().collect()
    }

    pub fn gens(&self, b: Bidegree) -> usize {
        self.parts.get(&b).map_or(0, |p| p.len())
    }

    pub fn group(&self, b: Bidegree) -> PresentedGroup<R::Elem> {
        match self.parts.get(&b) {
            Some(p) => p.group(self.ring.zero()),
            None => PresentedGroup::free(0, self.ring.zero()),
        }
    }

    pub fn module(&self) -> BigradedModule {
        let mut out = BigradedModule::new();
        for (b, p) in &self.parts {
            out.insert(*b, p.summary(&self.ring));
        }
        out
    }

    /// Cocycle in `R*(K)` representing the given combination of generators.
    pub fn representative(&self, b: Bidegree, coords: &[R::Elem]) -> Vec<R::Elem> {
        let ring = &self.ring;
        let Some(p) = self.parts.get(&b) else {
            return Vec::new();
        };
        let mut out = vec![ring.zero(); p.reps.rows()];
        for (g, c) in coords.iter().enumerate() {
            if ring.is_zero(c) {
                continue;
            }
            for (r, o) in out.iter_mut().enumerate() {
                *o = ring.add(o, &ring.mul(&p.reps[(r, g)], c));
            }
        }
        out
    }

    /// Coordinates of the class of a cocycle at `b`.
    pub fn express(&self, b: Bidegree, cocycle: &[R::Elem]) -> Result<Vec<R::Elem>, Error> {
        match self.parts.get(&b) {
            Some(p) => Ok(p.lift(&self.ring, cocycle)?),
            None => Ok(Vec::new()),
        }
    }

    pub fn class(&self, b: Bidegree, coords: Vec<R::Elem>) -> Class<R::Elem> {
        Class {
            coefficients: self.ring.coefficients(),
            bidegree: b,
            coords,
        }
    }

    fn target_of(&self, b: Bidegree) -> Option<Bidegree> {
        (b.k >= 1).then(|| Bidegree::new(b.k - 1, b.l - 1))
    }

    /// Matrix of `d′` induced on cohomology, leaving `b`.
    pub fn induced_d_prime(&self, b: Bidegree) -> Result<Matrix<R::Elem>, Error> {
        let ring = &self.ring;
        let n = self.gens(b);
        let Some(t) = self.target_of(b) else {
            return Ok(Matrix::filled(0, n, ring.zero()));
        };
        let rows = self.gens(t);
        if rows == 0 || n == 0 {
            return Ok(Matrix::filled(rows, n, ring.zero()));
        }
        let image = self.rc.d_prime(ring, b).mul(ring, &self.parts[&b].reps);
        let cols = self.parts[&t].lift_columns(ring, &image).map_err(|_| {
            Error::SignConventionFault(format!("d' does not send d-cocycles to d-cocycles at {b}"))
        })?;
        Ok(cols)
    }

    /// `HH` computed from the induced `d′`.
    pub fn double(&self) -> Result<DoubleCohomology<R::Elem>, Error> {
        let ring = &self.ring;
        let bs = self.bidegrees();
        let parts = par::map_slice(&bs, |&b| -> Result<Subquotient<R::Elem>, Error> {
            let here = self.group(b);
            let up = Bidegree::new(b.k + 1, b.l + 1);
            let incoming = if self.gens(up) > 0 {
                GroupMorphism {
                    source: self.group(up),
                    target: here.clone(),
                    matrix: self.induced_d_prime(up)?,
                }
            } else {
                GroupMorphism {
                    source: PresentedGroup::free(0, ring.zero()),
                    target: here.clone(),
                    matrix: Matrix::filled(here.gens, 0, ring.zero()),
                }
            };
            let outgoing = GroupMorphism {
                source: here,
                target: self
                    .target_of(b)
                    .map_or_else(|| PresentedGroup::free(0, ring.zero()), |t| self.group(t)),
                matrix: self.induced_d_prime(b)?,
            };
            homology_of_pair(ring, &incoming, &outgoing).map_err(contract_to_fault(b))
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

    /// `d′` applied to a class.
    pub fn apply_d_prime(&self, a: &Class<R::Elem>) -> Result<Class<R::Elem>, Error> {
        self.check_coefficients(a)?;
        let ring = &self.ring;
        let Some(t) = self.target_of(a.bidegree) else {
            return Ok(self.class(a.bidegree, Vec::new()));
        };
        let d = self.induced_d_prime(a.bidegree)?;
        Ok(self.class(t, d.apply(ring, &a.coords)))
    }

    fn check_coefficients(&self, a: &Class<R::Elem>) -> Result<(), Error> {
        let here = self.ring.coefficients();
        if a.coefficients != here {
            return Err(Error::MixedCoefficients(format!(
                "class over {} used with {here}",
                a.coefficients
            )));
        }
        Ok(())
    }

    /// Product of two classes. Only defined over a field.
    pub fn product(&self, a: &Class<R::Elem>, b: &Class<R::Elem>) -> Result<Class<R::Elem>, Error> {
        self.check_coefficients(a)?;
        self.check_coefficients(b)?;
        let ring = &self.ring;
        if ring.coefficients() == Coefficients::Integers {
            return Err(Error::MixedCoefficients(
                "products are computed over a field only".into(),
            ));
        }
        let target = Bidegree::new(a.bidegree.k + b.bidegree.k, a.bidegree.l + b.bidegree.l);
        let k = self.rc.complex();
        let ta = self.rc.basis(target).len();
        let mut out = vec![ring.zero(); ta];
        let ra = self.representative(a.bidegree, &a.coords);
        let rb = self.representative(b.bidegree, &b.coords);
        let xs = self.rc.basis(a.bidegree);
        let ys = self.rc.basis(b.bidegree);
        for (x, ca) in xs.iter().zip(&ra) {
            if ring.is_zero(ca) {
                continue;
            }
            for (y, cb) in ys.iter().zip(&rb) {
                if ring.is_zero(cb) {
                    continue;
                }
                let Some((neg, z)) = monomial_product(k, *x, *y) else {
                    continue;
                };
                let idx = self
                    .rc
                    .basis(target)
                    .binary_search(&z)
                    .expect("product lies in the basis");
                let c = ring.mul(ca, cb);
                let c = if neg { ring.neg(&c) } else { c };
                out[idx] = ring.add(&out[idx], &c);
            }
        }
        if ta == 0 {
            return Ok(self.class(target, Vec::new()));
        }
        Ok(self.class(target, self.express(target, &out)?))
    }

    /// Products of the `HH` generators at `a` and `b`: entry `[i][j]` holds
    /// the `HH` coordinates of `x_i · y_j`.
    pub fn hh_products(
        &self,
        hh: &DoubleCohomology<R::Elem>,
        a: Bidegree,
        b: Bidegree,
    ) -> Result<(Bidegree, Vec<Vec<Vec<R::Elem>>>), Error> {
        let ring = &self.ring;
        let target = Bidegree::new(a.k + b.k, a.l + b.l);
        let gens = |d: Bidegree| -> Vec<Vec<R::Elem>> {
            hh.parts.get(&d).map_or_else(Vec::new, |p| {
                (0..p.len()).map(|g| p.reps.column(g)).collect()
            })
        };
        let mut out = Vec::new();
        for x in gens(a) {
            let mut row = Vec::new();
            for y in gens(b) {
                let z = self.product(&self.class(a, x.clone()), &self.class(b, y))?;
                let hz = if self.gens(target) == 0 {
                    Vec::new()
                } else {
                    hh.class_of(ring, target, &z.coords)?
                };
                row.push(hz);
            }
            out.push(row);
        }
        Ok((target, out))
    }
}
