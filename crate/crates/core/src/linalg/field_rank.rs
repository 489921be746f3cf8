//! Matrix rank over a field, computed without going through Smith form.

use super::int::Int;
use super::matrix::IntMatrix;
use super::ring::is_prime;
use super::LinalgError;

/// Rank over the rationals by fraction-free (Bareiss) elimination.
pub fn rank_over_rationals(a: &IntMatrix) -> usize {
    let (rows, cols) = (a.rows(), a.cols());
    let mut m: Vec<Vec<Int>> = (0..rows).map(|i| a.row(i).to_vec()).collect();
    let mut prev = Int::ONE;
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for i in rank + 1..rows {
            for j in c + 1..cols {
                let num = &(&m[rank][c] * &m[i][j]) - &(&m[i][c] * &m[rank][j]);
                m[i][j] = num.div_rem(&prev).0;
            }
            m[i][c] = Int::ZERO;
        }
        prev = m[rank][c].clone();
        rank += 1;
    }
    rank
}

/// Rank over the prime field with `p` elements.
pub fn rank_mod_p(a: &IntMatrix, p: u64) -> Result<usize, LinalgError> {
    if !is_prime(p) || p >= 1 << 32 {
        return Err(LinalgError::NotPrime(p));
    }
    let modulus = Int::from(p as i64);
    let (rows, cols) = (a.rows(), a.cols());
    let mut m: Vec<Vec<u64>> = (0..rows)
        .map(|i| {
            a.row(i)
                .iter()
                .map(|v| v.mod_floor(&modulus).to_i64().unwrap() as u64)
                .collect()
        })
        .collect();
    let inv = |x: u64| {
        let (mut base, mut e, mut acc) = (x, p - 2, 1u64);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        acc
    };
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(piv) = (rank..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let s = inv(m[rank][c]);
        for j in c..cols {
            m[rank][j] = m[rank][j] * s % p;
        }
        for i in rank + 1..rows {
            let f = m[i][c];
            if f == 0 {
                continue;
            }
            for j in c..cols {
                m[i][j] = (m[i][j] + (p - f) * m[rank][j]) % p;
            }
        }
        rank += 1;
    }
    Ok(rank)
}
