//! Small exact linear algebra helpers: elimination modulo a large prime with
//! exact integer verification of the lifted answer.

use crate::error::{Error, Result};

/// The Mersenne prime `2^61 - 1`.
pub const BIG_PRIME: u64 = (1u64 << 61) - 1;

#[inline]
pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

#[inline]
pub fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

#[inline]
pub fn to_mod(x: i64, p: u64) -> u64 {
    let r = (x as i128).rem_euclid(p as i128);
    r as u64
}

#[inline]
pub fn lift(x: u64, p: u64) -> i64 {
    if x > p / 2 {
        -((p - x) as i64)
    } else {
        x as i64
    }
}

/// Solve `sum_k x_k * columns[k] = target` for a unique integer vector `x`.
///
/// Uniqueness is certified by full column rank modulo a prime; the lifted
/// solution is then checked exactly, so a returned answer is always correct.
pub fn solve_integral(columns: &[Vec<i64>], target: &[i64]) -> Result<Vec<i64>> {
    let k = columns.len();
    let rows = target.len();
    if columns.iter().any(|c| c.len() != rows) {
        return Err(Error::Consistency("column length mismatch".into()));
    }
    let p = BIG_PRIME;
    // Row-major augmented matrix restricted to rows that matter.
    let mut m: Vec<Vec<u64>> = (0..rows)
        .filter(|&r| target[r] != 0 || columns.iter().any(|c| c[r] != 0))
        .map(|r| {
            let mut row: Vec<u64> = columns.iter().map(|c| to_mod(c[r], p)).collect();
            row.push(to_mod(target[r], p));
            row
        })
        .collect();
    let mut pivot_row = 0;
    let mut pivots = Vec::with_capacity(k);
    for col in 0..k {
        let Some(r) = (pivot_row..m.len()).find(|&r| m[r][col] != 0) else {
            return Err(Error::Consistency(
                "target generators are linearly dependent".into(),
            ));
        };
        m.swap(pivot_row, r);
        let inv = inv_mod(m[pivot_row][col], p);
        for x in m[pivot_row].iter_mut() {
            *x = mul_mod(*x, inv, p);
        }
        let prow = m[pivot_row].clone();
        for (r2, row) in m.iter_mut().enumerate() {
            if r2 != pivot_row && row[col] != 0 {
                let f = row[col];
                for (x, &y) in row.iter_mut().zip(&prow) {
                    *x = (*x + p - mul_mod(f, y, p)) % p;
                }
            }
        }
        pivots.push(pivot_row);
        pivot_row += 1;
    }
    if m[pivot_row..].iter().any(|row| row[k] != 0) {
        return Err(Error::Consistency("image is not in the span of the targets".into()));
    }
    let x: Vec<i64> = pivots.iter().map(|&r| lift(m[r][k], p)).collect();
    for r in 0..rows {
        let got: i128 = columns
            .iter()
            .zip(&x)
            .map(|(c, &xi)| c[r] as i128 * xi as i128)
            .sum();
        if got != target[r] as i128 {
            return Err(Error::Consistency("solution is not integral".into()));
        }
    }
    Ok(x)
}

/// Rank of a dense integer matrix modulo `p`.
pub fn dense_rank_mod(rows: &[Vec<i64>], p: u64) -> usize {
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| to_mod(x, p)).collect())
        .collect();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(r) = (rank..m.len()).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, r);
        let inv = inv_mod(m[rank][col], p);
        let prow: Vec<u64> = m[rank].iter().map(|&x| mul_mod(x, inv, p)).collect();
        for row in m.iter_mut().skip(rank + 1) {
            if row[col] != 0 {
                let f = row[col];
                for (x, &y) in row.iter_mut().zip(&prow) {
                    *x = (*x + p - mul_mod(f, y, p)) % p;
                }
            }
        }
        m[rank] = prow;
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solves_small_system() {
        let cols = vec![vec![1, 0, 1], vec![0, 1, 1]];
        assert_eq!(solve_integral(&cols, &[2, -3, -1]).unwrap(), vec![2, -3]);
        assert!(solve_integral(&cols, &[1, 1, 0]).is_err());
        let halves = vec![vec![2, 0], vec![0, 2]];
        assert!(solve_integral(&halves, &[1, 0]).is_err());
    }

    #[test]
    fn rank_mod() {
        let m = vec![vec![2, 4], vec![1, 2]];
        assert_eq!(dense_rank_mod(&m, 7), 1);
        assert_eq!(dense_rank_mod(&[vec![2, 0], vec![0, 2]], 2), 0);
    }
}
