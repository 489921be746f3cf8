//! Independent dimension oracle over F_p, written from the definitions and
//! sharing nothing with the library beyond the facet lists it reads.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashSet};

use hhzk::complex::SimplicialComplex;

pub const P: u64 = 1_000_003;

fn inv(a: u64) -> u64 {
    let (mut r, mut e, mut b) = (1u64, P - 2, a % P);
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % P;
        }
        b = b * b % P;
        e >>= 1;
    }
    r
}

/// Row-reduces in place; returns pivot columns.
fn eliminate(m: &mut [Vec<u64>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for c in 0..cols {
        let Some(p) = (row..m.len()).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(row, p);
        let s = inv(m[row][c]);
        for x in m[row].iter_mut() {
            *x = *x * s % P;
        }
        for r in 0..m.len() {
            if r != row && m[r][c] != 0 {
                let f = m[r][c];
                for j in 0..cols {
                    m[r][j] = (m[r][j] + P - f * m[row][j] % P) % P;
                }
            }
        }
        pivots.push(c);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    pivots
}

pub fn rank(m: &[Vec<u64>], cols: usize) -> usize {
    let mut a = m.to_vec();
    eliminate(&mut a, cols).len()
}

/// Basis of the null space, as vectors of length `cols`.
pub fn nullspace(m: &[Vec<u64>], cols: usize) -> Vec<Vec<u64>> {
    let mut a = m.to_vec();
    let pivots = eliminate(&mut a, cols);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0; cols];
            v[f] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = (P - a[r][f]) % P;
            }
            v
        })
        .collect()
}

pub fn reduce_i64(x: i64) -> u64 {
    x.rem_euclid(P as i64) as u64
}

fn sign(j: u32, c: u32) -> u64 {
    if (j & ((1 << c) - 1)).count_ones() % 2 == 0 {
        1
    } else {
        P - 1
    }
}

/// Faces of `k` as bitmasks, recomputed from the facet lists.
pub struct Oracle {
    pub m: usize,
    faces: HashSet<u32>,
}

impl Oracle {
    pub fn new(k: &SimplicialComplex) -> Oracle {
        let mut faces = HashSet::new();
        for f in k.facet_lists() {
            let mask: u32 = f.iter().map(|v| 1u32 << (v - 1)).sum();
            let mut s = mask;
            loop {
                faces.insert(s);
                if s == 0 {
                    break;
                }
                s = (s - 1) & mask;
            }
        }
        Oracle { m: k.m(), faces }
    }

    pub fn is_face(&self, s: u32) -> bool {
        self.faces.contains(&s)
    }

    /// `dim H̃^p(K_I; F_p)` for `p = -1 ..`.
    pub fn reduced_cohomology(&self, subset: u32) -> BTreeMap<i64, usize> {
        let mut by_dim: BTreeMap<i64, Vec<u32>> = BTreeMap::new();
        for &f in &self.faces {
            if f & !subset == 0 {
                by_dim.entry(f.count_ones() as i64 - 1).or_default().push(f);
            }
        }
        let coboundary = |p: i64| -> (Vec<Vec<u64>>, usize) {
            let src = by_dim.get(&p).cloned().unwrap_or_default();
            let tgt = by_dim.get(&(p + 1)).cloned().unwrap_or_default();
            let mut mat = vec![vec![0; src.len()]; tgt.len()];
            for (r, &t) in tgt.iter().enumerate() {
                for (c, &s) in src.iter().enumerate() {
                    if s & !t == 0 {
                        let v = (t & !s).trailing_zeros();
                        mat[r][c] = sign(s, v);
                    }
                }
            }
            (mat, src.len())
        };
        let mut out = BTreeMap::new();
        let top = by_dim.keys().max().copied().unwrap_or(-1);
        for p in -1..=top {
            let (dp, n) = coboundary(p);
            let (dm, nm) = coboundary(p - 1);
            let dim = n - rank(&dp, n) - rank(&dm, nm);
            if dim > 0 {
                out.insert(p, dim);
            }
        }
        out
    }

    /// `dim H^{-k,2l}(Z_K; F_p)` summed over full subcomplexes.
    pub fn h_dims(&self) -> BTreeMap<(usize, usize), usize> {
        let mut out = BTreeMap::new();
        for s in 0u32..1 << self.m {
            let l = s.count_ones() as i64;
            for (p, d) in self.reduced_cohomology(s) {
                *out.entry(((l - p - 1) as usize, l as usize)).or_default() += d;
            }
        }
        out
    }

    /// Monomials `(J, I)` of `R*(K)` at `(-k, 2l)`.
    pub fn basis(&self, k: usize, l: usize) -> Vec<(u32, u32)> {
        let mut out = Vec::new();
        if k > l {
            return out;
        }
        for &i in &self.faces {
            if i.count_ones() as usize != l - k {
                continue;
            }
            for j in 0u32..1 << self.m {
                if j & i == 0 && j.count_ones() as usize == k {
                    out.push((j, i));
                }
            }
        }
        out.sort();
        out
    }

    fn matrix(
        &self,
        src: &[(u32, u32)],
        tgt: &[(u32, u32)],
        f: impl Fn(u32, u32) -> Vec<(u64, (u32, u32))>,
    ) -> Vec<Vec<u64>> {
        let mut mat = vec![vec![0; src.len()]; tgt.len()];
        for (c, &(j, i)) in src.iter().enumerate() {
            for (s, y) in f(j, i) {
                let r = tgt.binary_search(&y).expect("target monomial");
                mat[r][c] = (mat[r][c] + s) % P;
            }
        }
        mat
    }

    /// `d` from `(-k, 2l)`.
    pub fn d(&self, k: usize, l: usize) -> Vec<Vec<u64>> {
        let src = self.basis(k, l);
        let tgt = if k == 0 {
            Vec::new()
        } else {
            self.basis(k - 1, l)
        };
        self.matrix(&src, &tgt, |j, i| {
            (0..self.m as u32)
                .filter(|&c| j >> c & 1 == 1 && self.is_face(i | 1 << c))
                .map(|c| (sign(j, c), (j & !(1 << c), i | 1 << c)))
                .collect()
        })
    }

    /// `d′` from `(-k, 2l)`.
    pub fn d_prime(&self, k: usize, l: usize) -> Vec<Vec<u64>> {
        let src = self.basis(k, l);
        let tgt = if k == 0 {
            Vec::new()
        } else {
            self.basis(k - 1, l - 1)
        };
        self.matrix(&src, &tgt, |j, i| {
            (0..self.m as u32)
                .filter(|&c| j >> c & 1 == 1)
                .map(|c| (sign(j, c), (j & !(1 << c), i)))
                .collect()
        })
    }

    fn dim(&self, k: usize, l: usize) -> usize {
        self.basis(k, l).len()
    }

    /// `dim HH^{-k,2l}` computed inside `R*(K)`: classes `x` with `dx = 0`
    /// and `d′x ∈ im d`, modulo `im d + d′(ker d)`.
    pub fn hh_dims(&self) -> BTreeMap<(usize, usize), usize> {
        let mut out = BTreeMap::new();
        for l in 0..=self.m {
            for k in 0..=l {
                let n = self.dim(k, l);
                if n == 0 {
                    continue;
                }
                let d_up = self.d(k + 1, l);
                let n_up = self.dim(k + 1, l);
                let b = rank(&d_up, n_up);
                let cycles_ok = if k == 0 {
                    n - rank(&self.d(k, l), n)
                } else {
                    let db = self.d(k, l);
                    let dp = self.d_prime(k, l);
                    let dt = self.d(k, l - 1);
                    let nt = self.dim(k, l - 1);
                    let rows_top = db.len();
                    let mut block: Vec<Vec<u64>> = Vec::new();
                    for r in 0..rows_top {
                        let mut row = db[r].clone();
                        row.extend(std::iter::repeat(0).take(nt));
                        block.push(row);
                    }
                    for r in 0..dp.len() {
                        let mut row = dp[r].clone();
                        row.extend(dt[r].iter().map(|x| (P - x) % P));
                        block.push(row);
                    }
                    (n + nt - rank(&block, n + nt)) - (nt - rank(&dt, nt))
                };
                let ns = self.dim(k + 1, l + 1);
                let image = if ns == 0 {
                    0
                } else {
                    let z = nullspace(&self.d(k + 1, l + 1), ns);
                    let dp = self.d_prime(k + 1, l + 1);
                    let cat: Vec<Vec<u64>> = (0..n)
                        .map(|r| {
                            let mut row: Vec<u64> = z
                                .iter()
                                .map(|v| {
                                    v.iter()
                                        .zip(&dp[r])
                                        .fold(0, |acc, (a, b)| (acc + a * b) % P)
                                })
                                .collect();
                            if n_up > 0 {
                                row.extend(d_up[r].iter().copied());
                            }
                            row
                        })
                        .collect();
                    let w = z.len() + if n_up > 0 { n_up } else { 0 };
                    let r = rank(&cat, w);
                    r - b
                };
                let dim = cycles_ok - b - image;
                if dim > 0 {
                    out.insert((k, l), dim);
                }
            }
        }
        out
    }

    /// `dim H(R*(K), d′)` by bidegree.
    pub fn d_prime_homology(&self) -> BTreeMap<(usize, usize), usize> {
        let mut out = BTreeMap::new();
        for l in 0..=self.m {
            for k in 0..=l {
                let n = self.dim(k, l);
                if n == 0 {
                    continue;
                }
                let z = n - rank(&self.d_prime(k, l), n);
                let b = rank(&self.d_prime(k + 1, l + 1), self.dim(k + 1, l + 1));
                if z > b {
                    out.insert((k, l), z - b);
                }
            }
        }
        out
    }

    /// Checks the four bicomplex identities with the oracle's own matrices.
    pub fn identities_hold(&self) -> bool {
        let mul =
            |a: &Vec<Vec<u64>>, b: &Vec<Vec<u64>>, inner: usize, cols: usize| -> Vec<Vec<u64>> {
                a.iter()
                    .map(|row| {
                        (0..cols)
                            .map(|c| (0..inner).fold(0, |acc, t| (acc + row[t] * b[t][c]) % P))
                            .collect()
                    })
                    .collect()
            };
        let zero = |m: &Vec<Vec<u64>>| m.iter().all(|r| r.iter().all(|&x| x == 0));
        for l in 0..=self.m {
            for k in 2..=l {
                let n = self.dim(k, l);
                let dd = mul(&self.d(k - 1, l), &self.d(k, l), self.dim(k - 1, l), n);
                let pp = mul(
                    &self.d_prime(k - 1, l - 1),
                    &self.d_prime(k, l),
                    self.dim(k - 1, l - 1),
                    n,
                );
                let a = mul(
                    &self.d(k - 1, l - 1),
                    &self.d_prime(k, l),
                    self.dim(k - 1, l - 1),
                    n,
                );
                let b = mul(
                    &self.d_prime(k - 1, l),
                    &self.d(k, l),
                    self.dim(k - 1, l),
                    n,
                );
                let sum: Vec<Vec<u64>> = a
                    .iter()
                    .zip(&b)
                    .map(|(x, y)| x.iter().zip(y).map(|(p, q)| (p + q) % P).collect())
                    .collect();
                if !zero(&dd) || !zero(&pp) || !zero(&sum) {
                    return false;
                }
            }
        }
        true
    }
}

/// Converts a library table of free ranks to the oracle's keying.
pub fn ranks_of(m: &hhzk::BigradedModule) -> BTreeMap<(usize, usize), usize> {
    m.ranks()
        .into_iter()
        .map(|(b, r)| ((b.k, b.l), r))
        .collect()
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (1..=k).fold(1, |acc, i| acc * (n + 1 - i) / i)
}
