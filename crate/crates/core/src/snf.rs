//! Smith normal form over the integers and ranks over prime fields.
//!
//! Both run the same sparse elimination: repeatedly pick a unit pivot in a
//! short column (and, within it, a short row), clear its column with row
//! operations and drop the pivot row and column. Over a field every nonzero
//! entry is a unit, so this computes the rank. Over the integers it peels
//! off invariant factors equal to 1; whatever is left has no unit entry and
//! is finished by dense big-integer elimination.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::linalg::{inv_mod, mul_mod, to_mod};
use crate::sparse::SparseMatrix;

trait PivotRing {
    type E: Clone;
    fn is_zero(&self, x: &Self::E) -> bool;
    fn is_unit(&self, x: &Self::E) -> bool;
    /// The factor `f` with `a + f * u = 0`.
    fn cancel(&self, a: &Self::E, u: &Self::E) -> Self::E;
    /// `x + f * y`, or `None` on overflow.
    fn fma(&self, x: &Self::E, f: &Self::E, y: &Self::E) -> Option<Self::E>;
    /// `f * y`, or `None` on overflow.
    fn mul(&self, f: &Self::E, y: &Self::E) -> Option<Self::E>;
}

struct SmallZ;

impl PivotRing for SmallZ {
    type E = i64;
    fn is_zero(&self, x: &i64) -> bool {
        *x == 0
    }
    fn is_unit(&self, x: &i64) -> bool {
        *x == 1 || *x == -1
    }
    fn cancel(&self, a: &i64, u: &i64) -> i64 {
        -a * u
    }
    fn fma(&self, x: &i64, f: &i64, y: &i64) -> Option<i64> {
        f.checked_mul(*y).and_then(|p| x.checked_add(p)).filter(|v| v.abs() < 1 << 62)
    }
    fn mul(&self, f: &i64, y: &i64) -> Option<i64> {
        f.checked_mul(*y).filter(|v| v.abs() < 1 << 62)
    }
}

struct BigZ;

impl PivotRing for BigZ {
    type E = BigInt;
    fn is_zero(&self, x: &BigInt) -> bool {
        x.is_zero()
    }
    fn is_unit(&self, x: &BigInt) -> bool {
        x.abs().is_one()
    }
    fn cancel(&self, a: &BigInt, u: &BigInt) -> BigInt {
        -(a * u)
    }
    fn fma(&self, x: &BigInt, f: &BigInt, y: &BigInt) -> Option<BigInt> {
        Some(x + f * y)
    }
    fn mul(&self, f: &BigInt, y: &BigInt) -> Option<BigInt> {
        Some(f * y)
    }
}

struct Fp(u64);

impl PivotRing for Fp {
    type E = u64;
    fn is_zero(&self, x: &u64) -> bool {
        *x == 0
    }
    fn is_unit(&self, x: &u64) -> bool {
        *x != 0
    }
    fn cancel(&self, a: &u64, u: &u64) -> u64 {
        let q = mul_mod(*a, inv_mod(*u, self.0), self.0);
        (self.0 - q) % self.0
    }
    fn fma(&self, x: &u64, f: &u64, y: &u64) -> Option<u64> {
        Some(((*x as u128 + *f as u128 * *y as u128) % self.0 as u128) as u64)
    }
    fn mul(&self, f: &u64, y: &u64) -> Option<u64> {
        Some(mul_mod(*f, *y, self.0))
    }
}

struct Overflow;

/// Result of unit-pivot elimination: the number of pivots and the rows left
/// over (only nonzero rows, every entry a non-unit).
struct Peeled<E> {
    pivots: usize,
    rest: Vec<Vec<(u32, E)>>,
}

fn peel_units<R: PivotRing>(
    ring: &R,
    mut rows: Vec<Vec<(u32, R::E)>>,
    ncols: usize,
) -> Result<Peeled<R::E>, Overflow> {
    let nrows = rows.len();
    let mut active = vec![true; nrows];
    let mut col_rows: Vec<Vec<u32>> = vec![Vec::new(); ncols];
    let mut col_count = vec![0u32; ncols];
    let mut col_done = vec![false; ncols];
    for (r, row) in rows.iter().enumerate() {
        for (c, _) in row {
            col_rows[*c as usize].push(r as u32);
            col_count[*c as usize] += 1;
        }
    }
    let mut heap: BinaryHeap<Reverse<(u32, u32)>> = (0..ncols)
        .filter(|&c| col_count[c] > 0)
        .map(|c| Reverse((col_count[c], c as u32)))
        .collect();
    let mut pivots = 0;
    let mut touched: Vec<u32> = Vec::new();

    while let Some(Reverse((cnt, c))) = heap.pop() {
        let c = c as usize;
        if col_done[c] || col_count[c] == 0 || cnt != col_count[c] {
            continue;
        }
        // Compact the row list and look for the shortest unit row.
        let mut best: Option<(usize, usize)> = None;
        let mut live = Vec::with_capacity(col_rows[c].len());
        for &r in &col_rows[c] {
            let ru = r as usize;
            if !active[ru] {
                continue;
            }
            if let Ok(k) = rows[ru].binary_search_by_key(&(c as u32), |e| e.0) {
                live.push(r);
                if ring.is_unit(&rows[ru][k].1) {
                    let len = rows[ru].len();
                    if best.map_or(true, |(_, l)| len < l) {
                        best = Some((ru, len));
                    }
                }
            }
        }
        live.sort_unstable();
        live.dedup();
        col_rows[c] = live;
        let Some((pr, _)) = best else {
            continue;
        };

        let prow = std::mem::take(&mut rows[pr]);
        active[pr] = false;
        col_done[c] = true;
        let u = prow
            .iter()
            .find(|e| e.0 as usize == c)
            .map(|e| e.1.clone())
            .unwrap();
        for (c2, _) in &prow {
            col_count[*c2 as usize] -= 1;
        }
        let others: Vec<u32> = col_rows[c].iter().copied().filter(|&r| r as usize != pr).collect();
        for r in others {
            let ru = r as usize;
            let row = std::mem::take(&mut rows[ru]);
            let a = match row.binary_search_by_key(&(c as u32), |e| e.0) {
                Ok(k) => row[k].1.clone(),
                Err(_) => {
                    rows[ru] = row;
                    continue;
                }
            };
            let f = ring.cancel(&a, &u);
            let mut merged = Vec::with_capacity(row.len() + prow.len());
            let (mut i, mut j) = (0, 0);
            while i < row.len() || j < prow.len() {
                let ci = row.get(i).map_or(u32::MAX, |e| e.0);
                let cj = prow.get(j).map_or(u32::MAX, |e| e.0);
                if ci < cj {
                    merged.push(row[i].clone());
                    i += 1;
                } else if cj < ci {
                    if cj as usize != c {
                        let v = ring.mul(&f, &prow[j].1).ok_or(Overflow)?;
                        if !ring.is_zero(&v) {
                            col_rows[cj as usize].push(r);
                            col_count[cj as usize] += 1;
                            touched.push(cj);
                            merged.push((cj, v));
                        }
                    }
                    j += 1;
                } else {
                    if ci as usize != c {
                        let v = ring.fma(&row[i].1, &f, &prow[j].1).ok_or(Overflow)?;
                        touched.push(ci);
                        if ring.is_zero(&v) {
                            col_count[ci as usize] -= 1;
                        } else {
                            merged.push((ci, v));
                        }
                    } else {
                        col_count[c] -= 1;
                    }
                    i += 1;
                    j += 1;
                }
            }
            rows[ru] = merged;
        }
        for (c2, _) in &prow {
            touched.push(*c2);
        }
        touched.sort_unstable();
        touched.dedup();
        for &t in &touched {
            let t = t as usize;
            if !col_done[t] && col_count[t] > 0 {
                heap.push(Reverse((col_count[t], t as u32)));
            }
        }
        touched.clear();
        pivots += 1;
    }
    let rest = rows
        .into_iter()
        .zip(active)
        .filter(|(row, a)| *a && !row.is_empty())
        .map(|(row, _)| row)
        .collect();
    Ok(Peeled { pivots, rest })
}

fn sparse_rows<E, F: Fn(i64) -> E>(m: &SparseMatrix, conv: F) -> Vec<Vec<(u32, E)>> {
    m.to_rows()
        .into_iter()
        .map(|r| r.into_iter().map(|(c, v)| (c, conv(v))).collect())
        .collect()
}

/// Rank over `GF(p)`.
pub fn rank_mod_p(m: &SparseMatrix, p: u64) -> usize {
    let ring = Fp(p);
    let rows: Vec<Vec<(u32, u64)>> = m
        .to_rows()
        .into_iter()
        .map(|r| {
            r.into_iter()
                .map(|(c, v)| (c, to_mod(v, p)))
                .filter(|e| e.1 != 0)
                .collect()
        })
        .collect();
    match peel_units(&ring, rows, m.cols()) {
        Ok(peeled) => {
            debug_assert!(peeled.rest.is_empty());
            peeled.pivots
        }
        Err(Overflow) => unreachable!("field arithmetic cannot overflow"),
    }
}

/// Invariant factors of an integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub rows: usize,
    pub cols: usize,
    pub rank: usize,
    /// Number of invariant factors equal to 1.
    pub ones: usize,
    /// Invariant factors greater than 1, in divisibility order.
    pub torsion: Vec<BigInt>,
}

impl SmithForm {
    /// All nonzero invariant factors, ones included.
    pub fn factors(&self) -> Vec<BigInt> {
        let mut v = vec![BigInt::one(); self.ones];
        v.extend(self.torsion.iter().cloned());
        v
    }

    /// How many invariant factors are divisible by `p`.
    pub fn count_divisible(&self, p: u64) -> usize {
        let p = BigInt::from(p);
        self.torsion.iter().filter(|d| (*d % &p).is_zero()).count()
    }
}

pub fn smith_normal_form(m: &SparseMatrix) -> SmithForm {
    let (pivots, diag) = match peel_units(&SmallZ, sparse_rows(m, |v| v), m.cols()) {
        Ok(p) => {
            let diag = match gcd_phase(p.rest.clone()) {
                Ok(d) => d,
                Err(Overflow) => {
                    let big = p
                        .rest
                        .into_iter()
                        .map(|r| r.into_iter().map(|(c, v)| (c, BigInt::from(v))).collect())
                        .collect();
                    gcd_phase(big).unwrap_or_else(|_| unreachable!("big integers cannot overflow"))
                }
            };
            (p.pivots, diag)
        }
        Err(Overflow) => {
            let p = peel_units(&BigZ, sparse_rows(m, BigInt::from), m.cols())
                .unwrap_or_else(|_| unreachable!("big integers cannot overflow"));
            let diag = gcd_phase(p.rest).unwrap_or_else(|_| unreachable!("big integers cannot overflow"));
            (p.pivots, diag)
        }
    };
    let diag = divisibility_chain(diag);
    let mut ones = pivots;
    let mut torsion = Vec::new();
    for d in diag {
        if d.is_one() {
            ones += 1;
        } else {
            torsion.push(d);
        }
    }
    SmithForm {
        rows: m.rows(),
        cols: m.cols(),
        rank: ones + torsion.len(),
        ones,
        torsion,
    }
}

/// Integer arithmetic for the gcd phase, with overflow reported as `None`.
trait Euclid: Clone {
    fn is_nil(&self) -> bool;
    fn abs_lt(&self, other: &Self) -> bool;
    fn divides(&self, a: &Self) -> bool;
    /// `a / self`, exact.
    fn quotient(&self, a: &Self) -> Self;
    /// Nearest-integer quotient `round(a / self)`.
    fn near_quotient(&self, a: &Self) -> Self;
    /// `(g, x, y)` with `g = x * self + y * b = gcd`.
    fn ext_gcd(&self, b: &Self) -> (Self, Self, Self);
    /// `x * a + y * b`.
    fn lin(x: &Self, a: &Self, y: &Self, b: &Self) -> Option<Self>;
    fn neg(&self) -> Self;
    fn unit() -> Self;
    fn nil() -> Self;
    fn to_big(&self) -> BigInt;
}

impl Euclid for i64 {
    fn is_nil(&self) -> bool {
        *self == 0
    }
    fn abs_lt(&self, other: &i64) -> bool {
        self.unsigned_abs() < other.unsigned_abs()
    }
    fn divides(&self, a: &i64) -> bool {
        a % self == 0
    }
    fn quotient(&self, a: &i64) -> i64 {
        a / self
    }
    fn near_quotient(&self, a: &i64) -> i64 {
        let q = a.div_euclid(*self);
        let r = a.rem_euclid(*self);
        if 2 * (r as i128) > self.unsigned_abs() as i128 {
            q + self.signum()
        } else {
            q
        }
    }
    fn ext_gcd(&self, b: &i64) -> (i64, i64, i64) {
        let e = self.extended_gcd(b);
        (e.gcd, e.x, e.y)
    }
    fn lin(x: &i64, a: &i64, y: &i64, b: &i64) -> Option<i64> {
        let v = (*x as i128) * (*a as i128) + (*y as i128) * (*b as i128);
        (v.unsigned_abs() < 1 << 62).then_some(v as i64)
    }
    fn neg(&self) -> i64 {
        -self
    }
    fn unit() -> i64 {
        1
    }
    fn nil() -> i64 {
        0
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Euclid for BigInt {
    fn is_nil(&self) -> bool {
        Zero::is_zero(self)
    }
    fn abs_lt(&self, other: &BigInt) -> bool {
        self.magnitude() < other.magnitude()
    }
    fn divides(&self, a: &BigInt) -> bool {
        Zero::is_zero(&(a % self))
    }
    fn quotient(&self, a: &BigInt) -> BigInt {
        a / self
    }
    fn near_quotient(&self, a: &BigInt) -> BigInt {
        let (q, r) = a.div_mod_floor(self);
        if (&r * 2u32).magnitude() > self.magnitude() {
            q + self.signum()
        } else {
            q
        }
    }
    fn ext_gcd(&self, b: &BigInt) -> (BigInt, BigInt, BigInt) {
        let e = self.extended_gcd(b);
        (e.gcd, e.x, e.y)
    }
    fn lin(x: &BigInt, a: &BigInt, y: &BigInt, b: &BigInt) -> Option<BigInt> {
        Some(x * a + y * b)
    }
    fn neg(&self) -> BigInt {
        -self
    }
    fn unit() -> BigInt {
        One::one()
    }
    fn nil() -> BigInt {
        Zero::zero()
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

fn entry<E>(row: &[(u32, E)], c: u32) -> Option<&E> {
    row.binary_search_by_key(&c, |e| e.0).ok().map(|k| &row[k].1)
}

/// `x * a + y * b` for sparse rows.
fn combine<E: Euclid>(x: &E, a: &[(u32, E)], y: &E, b: &[(u32, E)]) -> Result<Vec<(u32, E)>, Overflow> {
    let zero = E::nil();
    let mut out = Vec::with_capacity(a.len().max(b.len()));
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ci = a.get(i).map_or(u32::MAX, |e| e.0);
        let cj = b.get(j).map_or(u32::MAX, |e| e.0);
        let (c, v) = if ci < cj {
            i += 1;
            (ci, E::lin(x, &a[i - 1].1, &zero, &zero))
        } else if cj < ci {
            j += 1;
            (cj, E::lin(&zero, &zero, y, &b[j - 1].1))
        } else {
            i += 1;
            j += 1;
            (ci, E::lin(x, &a[i - 1].1, y, &b[j - 1].1))
        };
        let v = v.ok_or(Overflow)?;
        if !v.is_nil() {
            out.push((c, v));
        }
    }
    Ok(out)
}

/// Smith diagonal of a sparse matrix without unit entries: pivot on an entry
/// of least absolute value, clear its column with Euclid row steps, reduce
/// its row by column operations (which touch only the pivot row once the
/// column is clear), and retire the pivot when its row is clear too.
fn gcd_phase<E: Euclid>(mut rows: Vec<Vec<(u32, E)>>) -> Result<Vec<BigInt>, Overflow> {
    rows.retain(|r| !r.is_empty());
    let mut diag = Vec::new();
    loop {
        let mut best: Option<(usize, usize)> = None;
        for (r, row) in rows.iter().enumerate() {
            for (k, e) in row.iter().enumerate() {
                let better = match best {
                    None => true,
                    Some((br, bk)) => {
                        let b = &rows[br][bk].1;
                        e.1.abs_lt(b) || (!b.abs_lt(&e.1) && row.len() < rows[br].len())
                    }
                };
                if better {
                    best = Some((r, k));
                }
            }
        }
        let Some((r0, k0)) = best else { break };
        let c0 = rows[r0][k0].0;
        for r in 0..rows.len() {
            if r == r0 {
                continue;
            }
            let Some(a) = entry(&rows[r], c0).cloned() else { continue };
            let p = entry(&rows[r0], c0).cloned().expect("pivot entry");
            if p.divides(&a) {
                let q = p.quotient(&a).neg();
                rows[r] = combine(&E::unit(), &rows[r], &q, &rows[r0])?;
            } else {
                let (g, x, y) = p.ext_gcd(&a);
                let new0 = combine(&x, &rows[r0], &y, &rows[r])?;
                let newr = combine(&g.quotient(&a).neg(), &rows[r0], &g.quotient(&p), &rows[r])?;
                rows[r0] = new0;
                rows[r] = newr;
            }
        }
        let p = entry(&rows[r0], c0).cloned().expect("pivot entry");
        let mut reduced = Vec::with_capacity(rows[r0].len());
        for (c, v) in std::mem::take(&mut rows[r0]) {
            if c == c0 {
                reduced.push((c, v));
                continue;
            }
            let q = p.near_quotient(&v);
            let w = E::lin(&E::unit(), &v, &q.neg(), &p).ok_or(Overflow)?;
            if !w.is_nil() {
                reduced.push((c, w));
            }
        }
        if reduced.len() == 1 {
            diag.push(p.to_big().abs());
            rows.swap_remove(r0);
        } else {
            rows[r0] = reduced;
        }
        rows.retain(|r| !r.is_empty());
    }
    Ok(diag)
}

/// Rearrange a diagonal into a divisibility chain (gcd/lcm exchanges).
fn divisibility_chain(mut diag: Vec<BigInt>) -> Vec<BigInt> {
    for i in 0..diag.len() {
        for j in i + 1..diag.len() {
            let g = diag[i].gcd(&diag[j]);
            if g != diag[i] {
                let l = &diag[i] / &g * &diag[j];
                diag[i] = g;
                diag[j] = l;
            }
        }
    }
    diag.sort();
    diag
}

/// Exact rank over the rationals.
pub fn rank_q(m: &SparseMatrix) -> usize {
    smith_normal_form(m).rank
}

/// Nonzero invariant factors of a dense matrix, sorted into a divisibility
/// chain.
pub fn dense_smith_diagonal(mut a: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let nrows = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    let mut t = 0;
    while t < nrows.min(ncols) {
        // Smallest nonzero entry in the trailing block.
        let mut best: Option<(usize, usize)> = None;
        for i in t..nrows {
            for j in t..ncols {
                if !a[i][j].is_zero()
                    && best.map_or(true, |(bi, bj)| a[i][j].abs() < a[bi][bj].abs())
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        a.swap(t, bi);
        for row in a.iter_mut() {
            row.swap(t, bj);
        }
        loop {
            let mut clean = true;
            for i in t + 1..nrows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                let (top, rest) = a.split_at_mut(i);
                let (pivot_row, row) = (&top[t], &mut rest[0]);
                for j in t..ncols {
                    if !pivot_row[j].is_zero() {
                        row[j] -= &q * &pivot_row[j];
                    }
                }
                if !a[i][t].is_zero() {
                    clean = false;
                    if a[i][t].abs() < a[t][t].abs() {
                        a.swap(i, t);
                    }
                }
            }
            for j in t + 1..ncols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                for row in a.iter_mut().skip(t) {
                    if !row[t].is_zero() {
                        let d = &q * &row[t];
                        row[j] -= d;
                    }
                }
                if !a[t][j].is_zero() {
                    clean = false;
                    if a[t][j].abs() < a[t][t].abs() {
                        for row in a.iter_mut() {
                            row.swap(t, j);
                        }
                    }
                }
            }
            if clean {
                break;
            }
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    divisibility_chain(diag)
}

/// Whether `h` lies in the integer column span of `a`, by column echelon
/// reduction with unimodular column operations.
pub fn in_integer_column_span(a: &SparseMatrix, h: &[i64]) -> bool {
    assert_eq!(h.len(), a.rows());
    let mut cols: Vec<Vec<BigInt>> = (0..a.cols())
        .map(|c| {
            let mut v = vec![BigInt::zero(); a.rows()];
            for &(r, x) in a.column(c) {
                v[r as usize] = BigInt::from(x);
            }
            v
        })
        .collect();
    let mut target: Vec<BigInt> = h.iter().map(|&x| BigInt::from(x)).collect();
    let mut free: Vec<usize> = (0..cols.len()).collect();
    for r in 0..a.rows() {
        // Combine the free columns until at most one is nonzero in row r.
        loop {
            let nz: Vec<usize> = free.iter().copied().filter(|&c| !cols[c][r].is_zero()).collect();
            if nz.len() <= 1 {
                break;
            }
            let p = *nz.iter().min_by_key(|&&c| cols[c][r].abs()).unwrap();
            for &c in &nz {
                if c == p {
                    continue;
                }
                let q = cols[c][r].div_floor(&cols[p][r]);
                let pc = cols[p].clone();
                for (x, y) in cols[c].iter_mut().zip(&pc) {
                    if !y.is_zero() {
                        *x -= &q * y;
                    }
                }
            }
        }
        let pivot = free.iter().copied().find(|&c| !cols[c][r].is_zero());
        match pivot {
            Some(p) => {
                let (q, rem) = target[r].div_rem(&cols[p][r]);
                if !rem.is_zero() {
                    return false;
                }
                for (x, y) in target.iter_mut().zip(&cols[p]) {
                    if !y.is_zero() {
                        *x -= &q * y;
                    }
                }
                free.retain(|&c| c != p);
            }
            None => {
                if !target[r].is_zero() {
                    return false;
                }
            }
        }
    }
    target.iter().all(Zero::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(d: &[&[i64]]) -> SparseMatrix {
        SparseMatrix::from_dense(&d.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
    }

    #[test]
    fn identity_and_diagonal() {
        let s = smith_normal_form(&m(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]));
        assert_eq!((s.rank, s.ones, s.torsion.len()), (3, 3, 0));
        let s = smith_normal_form(&m(&[&[2, 0], &[0, 0]]));
        assert_eq!(s.rank, 1);
        assert_eq!(s.torsion, vec![BigInt::from(2)]);
        let s = smith_normal_form(&SparseMatrix::zeros(0, 0));
        assert_eq!(s.rank, 0);
    }

    #[test]
    fn chain_is_normalized() {
        let s = smith_normal_form(&m(&[&[2, 0], &[0, 3]]));
        assert_eq!(s.factors(), vec![BigInt::from(1), BigInt::from(6)]);
        let s = smith_normal_form(&m(&[&[4, 6], &[6, 9]]));
        assert_eq!(s.factors(), vec![BigInt::from(1)]);
    }

    #[test]
    fn prime_ranks() {
        let a = m(&[&[2, 0], &[0, 3]]);
        assert_eq!(rank_mod_p(&a, 2), 1);
        assert_eq!(rank_mod_p(&a, 3), 1);
        assert_eq!(rank_mod_p(&a, 5), 2);
    }

    #[test]
    fn span_membership() {
        let a = m(&[&[2, 0], &[0, 1], &[0, 0]]);
        assert!(in_integer_column_span(&a, &[2, 5, 0]));
        assert!(!in_integer_column_span(&a, &[1, 0, 0]));
        assert!(!in_integer_column_span(&a, &[0, 0, 1]));
        assert!(in_integer_column_span(&a, &[0, 0, 0]));
    }
}
