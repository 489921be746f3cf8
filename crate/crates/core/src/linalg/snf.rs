//! Smith normal form over a Euclidean domain by row/column reduction with
//! smallest-pivot selection.

use std::cmp::Ordering;

use super::matrix::{Matrix, MatrixOps};
use super::ring::Ring;

/// `S = U A V` with `U`, `V` invertible over the ring and `S` diagonal,
/// `d_1 | d_2 | ... | d_rank`, each `d_i` in canonical form (positive over the integers).
#[derive(Clone, Debug)]
pub struct SmithDecomposition<E> {
    pub u: Matrix<E>,
    pub s: Matrix<E>,
    pub v: Matrix<E>,
    pub u_inv: Matrix<E>,
    pub rank: usize,
}

impl<E: Clone> SmithDecomposition<E> {
    /// The nonzero diagonal entries.
    pub fn invariant_factors(&self) -> Vec<E> {
        (0..self.rank).map(|i| self.s[(i, i)].clone()).collect()
    }
}

pub fn smith_normal_form<R: Ring>(ring: &R, a: &Matrix<R::Elem>) -> SmithDecomposition<R::Elem> {
    let p = reduce(ring, a, true, true);
    SmithDecomposition {
        u: p.u.expect("tracked"),
        s: p.s,
        v: p.v.expect("tracked"),
        u_inv: p.u_inv.expect("tracked"),
        rank: p.rank,
    }
}

/// Invariant factors only; no transforms are tracked.
pub fn invariant_factors<R: Ring>(ring: &R, a: &Matrix<R::Elem>) -> Vec<R::Elem> {
    let p = reduce(ring, a, false, false);
    (0..p.rank).map(|i| p.s[(i, i)].clone()).collect()
}

pub(crate) struct SnfParts<E> {
    pub s: Matrix<E>,
    pub rank: usize,
    pub u: Option<Matrix<E>>,
    pub u_inv: Option<Matrix<E>>,
    pub v: Option<Matrix<E>>,
}

struct State<'r, R: Ring> {
    ring: &'r R,
    a: Matrix<R::Elem>,
    u: Option<Matrix<R::Elem>>,
    u_inv: Option<Matrix<R::Elem>>,
    v: Option<Matrix<R::Elem>>,
}

impl<R: Ring> State<'_, R> {
    /// row_dst += c * row_src, on columns >= from.
    fn add_row(&mut self, dst: usize, src: usize, c: &R::Elem, from: usize) {
        let ring = self.ring;
        add_row_in(ring, &mut self.a, dst, src, c, from);
        if let Some(u) = self.u.as_mut() {
            add_row_in(ring, u, dst, src, c, 0);
        }
        if let Some(ui) = self.u_inv.as_mut() {
            let neg = ring.neg(c);
            add_col_in(ring, ui, src, dst, &neg, 0);
        }
    }

    /// col_dst += c * col_src, on rows >= from.
    fn add_col(&mut self, dst: usize, src: usize, c: &R::Elem, from: usize) {
        let ring = self.ring;
        add_col_in(ring, &mut self.a, dst, src, c, from);
        if let Some(v) = self.v.as_mut() {
            add_col_in(ring, v, dst, src, c, 0);
        }
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        if let Some(u) = self.u.as_mut() {
            u.swap_rows(i, j);
        }
        if let Some(ui) = self.u_inv.as_mut() {
            ui.swap_cols(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        if let Some(v) = self.v.as_mut() {
            v.swap_cols(i, j);
        }
    }

    fn scale_row(&mut self, i: usize, unit: &R::Elem) {
        let ring = self.ring;
        let cols = self.a.cols();
        for k in 0..cols {
            let x = ring.mul(&self.a[(i, k)], unit);
            self.a[(i, k)] = x;
        }
        if let Some(u) = self.u.as_mut() {
            for k in 0..u.cols() {
                let x = ring.mul(&u[(i, k)], unit);
                u[(i, k)] = x;
            }
        }
        if let Some(ui) = self.u_inv.as_mut() {
            let inv = ring.unit_inverse(unit);
            for k in 0..ui.rows() {
                let x = ring.mul(&ui[(k, i)], &inv);
                ui[(k, i)] = x;
            }
        }
    }
}

fn add_row_in<R: Ring>(
    ring: &R,
    m: &mut Matrix<R::Elem>,
    dst: usize,
    src: usize,
    c: &R::Elem,
    from: usize,
) {
    if ring.is_zero(c) {
        return;
    }
    for k in from..m.cols() {
        let s = &m[(src, k)];
        if ring.is_zero(s) {
            continue;
        }
        let t = ring.mul(s, c);
        let x = ring.add(&m[(dst, k)], &t);
        m[(dst, k)] = x;
    }
}

fn add_col_in<R: Ring>(
    ring: &R,
    m: &mut Matrix<R::Elem>,
    dst: usize,
    src: usize,
    c: &R::Elem,
    from: usize,
) {
    if ring.is_zero(c) {
        return;
    }
    for k in from..m.rows() {
        let s = &m[(k, src)];
        if ring.is_zero(s) {
            continue;
        }
        let t = ring.mul(s, c);
        let x = ring.add(&m[(k, dst)], &t);
        m[(k, dst)] = x;
    }
}

pub(crate) fn reduce<R: Ring>(
    ring: &R,
    a: &Matrix<R::Elem>,
    track_left: bool,
    track_right: bool,
) -> SnfParts<R::Elem> {
    let (rows, cols) = (a.rows(), a.cols());
    let mut st = State {
        ring,
        a: a.clone(),
        u: track_left.then(|| <Matrix<R::Elem> as MatrixOps<R>>::identity(ring, rows)),
        u_inv: track_left.then(|| <Matrix<R::Elem> as MatrixOps<R>>::identity(ring, rows)),
        v: track_right.then(|| <Matrix<R::Elem> as MatrixOps<R>>::identity(ring, cols)),
    };
    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pi, pj)) = best_pivot(ring, &st.a, t) else {
            break;
        };
        st.swap_rows(t, pi);
        st.swap_cols(t, pj);
        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if ring.is_zero(&st.a[(i, t)]) {
                    continue;
                }
                let (q, r) = ring.div_rem(&st.a[(i, t)], &st.a[(t, t)]);
                st.add_row(i, t, &ring.neg(&q), t);
                dirty |= !ring.is_zero(&r);
            }
            for j in t + 1..cols {
                if ring.is_zero(&st.a[(t, j)]) {
                    continue;
                }
                let (q, r) = ring.div_rem(&st.a[(t, j)], &st.a[(t, t)]);
                st.add_col(j, t, &ring.neg(&q), t);
                dirty |= !ring.is_zero(&r);
            }
            if dirty {
                // a remainder is now smaller than the pivot; bring the smallest in
                let mut best: Option<(bool, usize)> = None;
                let mut best_val: Option<R::Elem> = None;
                for i in t + 1..rows {
                    let x = &st.a[(i, t)];
                    if !ring.is_zero(x)
                        && best_val
                            .as_ref()
                            .is_none_or(|b| ring.size_cmp(x, b) == Ordering::Less)
                    {
                        best = Some((true, i));
                        best_val = Some(x.clone());
                    }
                }
                for j in t + 1..cols {
                    let x = &st.a[(t, j)];
                    if !ring.is_zero(x)
                        && best_val
                            .as_ref()
                            .is_none_or(|b| ring.size_cmp(x, b) == Ordering::Less)
                    {
                        best = Some((false, j));
                        best_val = Some(x.clone());
                    }
                }
                match best {
                    Some((true, i)) => st.swap_rows(t, i),
                    Some((false, j)) => st.swap_cols(t, j),
                    None => {}
                }
                continue;
            }
            if ring.is_unit(&st.a[(t, t)]) {
                break;
            }
            let pivot = st.a[(t, t)].clone();
            let offender = (t + 1..rows)
                .find(|&i| (t + 1..cols).any(|j| !ring.divides(&pivot, &st.a[(i, j)])));
            match offender {
                Some(i) => {
                    let one = ring.one();
                    st.add_row(t, i, &one, t);
                }
                None => break,
            }
        }
        let unit = ring.canonical_unit(&st.a[(t, t)]);
        if unit != ring.one() {
            st.scale_row(t, &unit);
        }
        t += 1;
    }
    SnfParts {
        s: st.a,
        rank: t,
        u: st.u,
        u_inv: st.u_inv,
        v: st.v,
    }
}

fn best_pivot<R: Ring>(ring: &R, a: &Matrix<R::Elem>, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..a.rows() {
        for j in t..a.cols() {
            let x = &a[(i, j)];
            if ring.is_zero(x) {
                continue;
            }
            if ring.is_unit(x) {
                return Some((i, j));
            }
            match best {
                Some((bi, bj)) if ring.size_cmp(x, &a[(bi, bj)]) != Ordering::Less => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int::Int;
    use crate::linalg::matrix::IntMatrix;
    use crate::linalg::ring::{Integers, PrimeField};

    fn check(a: &IntMatrix) -> SmithDecomposition<Int> {
        let z = Integers;
        let d = smith_normal_form(&z, a);
        let uav = d.u.mul(&z, a).mul(&z, &d.v);
        assert_eq!(uav, d.s);
        let id = <IntMatrix as MatrixOps<Integers>>::identity(&z, a.rows());
        assert_eq!(d.u_inv.mul(&z, &d.u), id);
        for i in 0..d.s.rows() {
            for j in 0..d.s.cols() {
                if i != j || i >= d.rank {
                    assert!(d.s[(i, j)].is_zero());
                }
            }
        }
        let f = d.invariant_factors();
        for w in f.windows(2) {
            assert!(w[1].is_divisible_by(&w[0]));
        }
        assert!(f.iter().all(|x| x.signum() > 0));
        d
    }

    #[test]
    fn diag_2_3_becomes_1_6() {
        let d = check(&IntMatrix::from_i64_rows(&[&[2, 0], &[0, 3]]));
        assert_eq!(d.invariant_factors(), vec![Int::from(1), Int::from(6)]);
    }

    #[test]
    fn zero_and_empty_matrices() {
        let d = check(&IntMatrix::filled(2, 3, Int::ZERO));
        assert_eq!(d.rank, 0);
        let e = check(&IntMatrix::filled(0, 4, Int::ZERO));
        assert_eq!(e.rank, 0);
        assert_eq!(e.v.rows(), 4);
        let e = check(&IntMatrix::filled(3, 0, Int::ZERO));
        assert_eq!(e.rank, 0);
    }

    #[test]
    fn pentagon_d_prime_has_four_unit_factors() {
        let a = IntMatrix::from_i64_rows(&[
            &[0, 0, 1, -1, 0],
            &[0, 0, 0, 1, -1],
            &[-1, 0, 0, 0, 1],
            &[1, -1, 0, 0, 0],
            &[0, 1, -1, 0, 0],
        ]);
        let d = check(&a);
        assert_eq!(d.invariant_factors(), vec![Int::ONE; 4]);
    }

    #[test]
    fn torsion_example() {
        // Z^3 / <(2,4,4), (-6,6,12), (10,-4,-16)> = Z/2 + Z/6 + Z/12
        let a = IntMatrix::from_i64_rows(&[&[2, -6, 10], &[4, 6, -4], &[4, 12, -16]]);
        let d = check(&a);
        assert_eq!(
            d.invariant_factors(),
            vec![Int::from(2), Int::from(6), Int::from(12)]
        );
    }

    #[test]
    fn over_prime_field() {
        let f = PrimeField::new(2).unwrap();
        let a = Matrix::from_rows(vec![vec![1u64, 1], vec![1, 1]], 2);
        assert_eq!(invariant_factors(&f, &a).len(), 1);
    }
}
