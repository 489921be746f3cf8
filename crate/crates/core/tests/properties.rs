use std::collections::BTreeMap;

use hhzk::complex::{parse_json, random_complex, to_json, SimplicialComplex, VertexSet};
use hhzk::hochster::{double_cohomology, hochster_cohomology};
use hhzk::homology::CochainComplex;
use hhzk::koszul::{monomial_product, Class, KoszulCohomology, RMonomial};
use hhzk::linalg::{
    homology_of_pair, rank_over_rationals, smith_normal_form, GroupMorphism, Int, IntMatrix,
    Integers, Matrix, MatrixOps, Rationals,
};
use hhzk::Bidegree;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn complex_from_seed(seed: u64, m_max: usize) -> SimplicialComplex {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = rand::Rng::gen_range(&mut rng, 1..=m_max);
    random_complex(&mut rng, m)
}

fn small_matrix() -> impl Strategy<Value = IntMatrix> {
    (1usize..=6, 1usize..=6).prop_flat_map(|(r, c)| {
        proptest::collection::vec(-5i64..=5, r * c).prop_map(move |v| {
            let rows: Vec<Vec<Int>> = v
                .chunks(c)
                .map(|row| row.iter().map(|&x| Int::from(x)).collect())
                .collect();
            Matrix::from_rows(rows, c)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn smith_form_invariants(a in small_matrix()) {
        let d = smith_normal_form(&Integers, &a);
        prop_assert_eq!(d.u.mul(&Integers, &a).mul(&Integers, &d.v), d.s.clone());
        prop_assert_eq!(d.u_inv.mul(&Integers, &d.u), <IntMatrix as MatrixOps<Integers>>::identity(&Integers, a.rows()));
        prop_assert_eq!(d.rank, rank_over_rationals(&a));
        let f = d.invariant_factors();
        for w in f.windows(2) {
            prop_assert!(w[1].is_divisible_by(&w[0]));
        }
        for (i, x) in f.iter().enumerate() {
            prop_assert!(x.signum() > 0);
            prop_assert_eq!(&d.s[(i, i)], x);
        }
        for i in 0..a.rows() {
            for j in 0..a.cols() {
                if i != j || i >= d.rank {
                    prop_assert!(d.s[(i, j)].is_zero());
                }
            }
        }
    }

    #[test]
    fn free_rank_matches_rank_nullity(seed in any::<u64>()) {
        let k = complex_from_seed(seed, 6);
        let c = CochainComplex::new(&k, k.vertices());
        for p in -1..=c.top_degree() {
            let f = c.coboundary(&Integers, p - 1);
            let g = c.coboundary(&Integers, p);
            let h = homology_of_pair(&Integers, &GroupMorphism::free(&Integers, f.clone()), &GroupMorphism::free(&Integers, g.clone())).unwrap();
            let expected = c.basis(p).len() - rank_over_rationals(&g) - rank_over_rationals(&f);
            prop_assert_eq!(h.summary(&Integers).rank, expected);
        }
    }

    #[test]
    fn relabelling_preserves_tables(seed in any::<u64>(), shuffle in any::<u64>()) {
        let k = complex_from_seed(seed, 6);
        let mut perm: Vec<usize> = (0..k.m()).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(shuffle);
        rand::seq::SliceRandom::shuffle(perm.as_mut_slice(), &mut rng);
        let r = k.relabel(&perm);
        prop_assert_eq!(hochster_cohomology(&Integers, &k).unwrap(), hochster_cohomology(&Integers, &r).unwrap());
        prop_assert_eq!(double_cohomology(&Integers, &k).unwrap(), double_cohomology(&Integers, &r).unwrap());
    }

    #[test]
    fn json_roundtrip(seed in any::<u64>()) {
        let k = complex_from_seed(seed, 8);
        prop_assert_eq!(parse_json(&to_json(&k)).unwrap(), k.clone());
        for f in k.faces() {
            for v in f.iter() {
                prop_assert!(k.is_face(f.without(v)));
            }
        }
    }

    #[test]
    fn cochain_leibniz_in_koszul_algebra(seed in any::<u64>(), coeffs in proptest::collection::vec(-3i64..=3, 16)) {
        let k = complex_from_seed(seed, 5);
        let kc = KoszulCohomology::new(&Rationals, &k).unwrap();
        let bs: Vec<Bidegree> = kc.bidegrees().into_iter().filter(|&b| kc.gens(b) > 0).collect();
        let pick = |i: usize| bs[i % bs.len()];
        let (ba, bb) = (pick(coeffs[0].unsigned_abs() as usize), pick(coeffs[1].unsigned_abs() as usize + 1));
        let a = element(&kc, ba, &coeffs[2..]);
        let b = element(&kc, bb, &coeffs[5..]);
        let lhs = d_prime(&mul(&k, &a, &b));
        let sign = if ba.k % 2 == 0 { 1 } else { -1 };
        let rhs = add(&mul(&k, &d_prime(&a), &b), &scale(&mul(&k, &a, &d_prime(&b)), sign));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn leibniz_and_commutativity_on_classes(seed in any::<u64>(), coeffs in proptest::collection::vec(-2i64..=2, 16)) {
        let k = complex_from_seed(seed, 5);
        let kc = KoszulCohomology::new(&Rationals, &k).unwrap();
        let bs: Vec<Bidegree> = kc.bidegrees().into_iter().filter(|&b| kc.gens(b) > 0).collect();
        let pick = |i: usize| bs[i % bs.len()];
        let a = class(&kc, pick(coeffs[0].unsigned_abs() as usize), &coeffs[2..]);
        let b = class(&kc, pick(coeffs[1].unsigned_abs() as usize + 3), &coeffs[7..]);
        let ab = kc.product(&a, &b).unwrap();
        let ba = kc.product(&b, &a).unwrap();
        let sign = if (a.bidegree.k * b.bidegree.k) % 2 == 0 { 1 } else { -1 };
        prop_assert_eq!(&ab.coords, &scaled(&ba.coords, sign));

        let lhs = kc.apply_d_prime(&ab).unwrap();
        let t1 = kc.product(&kc.apply_d_prime(&a).unwrap(), &b).unwrap();
        let t2 = kc.product(&a, &kc.apply_d_prime(&b).unwrap()).unwrap();
        let s = if a.bidegree.k % 2 == 0 { 1 } else { -1 };
        let n = lhs.coords.len();
        let rhs: Vec<BigRational> = at(&t1, lhs.bidegree, n)
            .iter()
            .zip(scaled(&at(&t2, lhs.bidegree, n), s))
            .map(|(x, y)| x + y)
            .collect();
        prop_assert_eq!(lhs.coords, rhs);
    }
}

/// Coordinates of `c` at `b`; a class anywhere else must be zero.
fn at(c: &Class<BigRational>, b: Bidegree, n: usize) -> Vec<BigRational> {
    if c.bidegree == b && c.coords.len() == n {
        c.coords.clone()
    } else {
        assert!(c.coords.iter().all(|x| x.is_zero()));
        vec![q(0); n]
    }
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn scaled(v: &[BigRational], s: i64) -> Vec<BigRational> {
    v.iter().map(|x| x * q(s)).collect()
}

fn class(kc: &KoszulCohomology<Rationals>, b: Bidegree, coeffs: &[i64]) -> Class<BigRational> {
    let coords = (0..kc.gens(b))
        .map(|i| q(coeffs[i % coeffs.len()]))
        .collect();
    kc.class(b, coords)
}

/// Elements of the full Koszul algebra `Λ[u] ⊗ Q[K]`: exterior part and a
/// vector of `v` exponents, whose support must be a face.
type Element = BTreeMap<(u32, Vec<u8>), BigRational>;

/// A cocycle representative of a random class, viewed inside the full algebra.
fn element(kc: &KoszulCohomology<Rationals>, b: Bidegree, coeffs: &[i64]) -> Element {
    let c = class(kc, b, coeffs);
    let rep = kc.representative(b, &c.coords);
    let m = kc.r_complex().complex().m();
    let mut out = Element::new();
    for (x, v) in kc.r_complex().basis(b).iter().zip(rep) {
        if !v.is_zero() {
            out.insert(
                (
                    x.j.bits(),
                    (0..m).map(|i| u8::from(x.i.contains(i))).collect(),
                ),
                v,
            );
        }
    }
    out
}

fn support(e: &[u8]) -> VertexSet {
    e.iter()
        .enumerate()
        .filter(|(_, &x)| x > 0)
        .map(|(i, _)| i)
        .collect()
}

fn mul(k: &SimplicialComplex, a: &Element, b: &Element) -> Element {
    let mut out = Element::new();
    for ((ja, ea), ca) in a {
        for ((jb, eb), cb) in b {
            let e: Vec<u8> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            // reuse the exterior sign of the R* product on the u-parts alone
            let Some((neg, z)) = monomial_product(
                k,
                RMonomial::new(VertexSet::from_bits(*ja), VertexSet::EMPTY),
                RMonomial::new(VertexSet::from_bits(*jb), VertexSet::EMPTY),
            ) else {
                continue;
            };
            if !k.is_face(support(&e)) {
                continue;
            }
            let c = ca * cb;
            let c = if neg { -c } else { c };
            *out.entry((z.j.bits(), e)).or_insert_with(BigRational::zero) += c;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn d_prime(a: &Element) -> Element {
    let mut out = Element::new();
    for ((j, e), c) in a {
        let js = VertexSet::from_bits(*j);
        for x in js.iter() {
            let term = if js.epsilon_negative(x) {
                -c.clone()
            } else {
                c.clone()
            };
            *out.entry((js.without(x).bits(), e.clone()))
                .or_insert_with(BigRational::zero) += term;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn add(a: &Element, b: &Element) -> Element {
    let mut out = a.clone();
    for (key, c) in b {
        *out.entry(key.clone()).or_insert_with(BigRational::zero) += c;
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn scale(a: &Element, s: i64) -> Element {
    a.iter().map(|(key, c)| (key.clone(), c * q(s))).collect()
}

#[test]
fn the_quotient_alone_breaks_leibniz() {
    // a = u1, b = v1 on a point: ab = u1 v1 vanishes in R*, yet d'(a) b = v1
    let k = hhzk::complex::simplex(1);
    let u1 = RMonomial::new(VertexSet::singleton(0), VertexSet::EMPTY);
    let v1 = RMonomial::new(VertexSet::EMPTY, VertexSet::singleton(0));
    assert_eq!(monomial_product(&k, u1, v1), None);
    let a: Element = [((1, vec![0]), q(1))].into_iter().collect();
    let b: Element = [((0, vec![1]), q(1))].into_iter().collect();
    let lhs = d_prime(&mul(&k, &a, &b));
    let rhs = add(
        &mul(&k, &d_prime(&a), &b),
        &scale(&mul(&k, &a, &d_prime(&b)), -1),
    );
    assert_eq!(lhs, rhs);
    assert!(!lhs.is_empty() && lhs.values().all(|c| c.is_positive()));
}
