//! Straightening of polytabloids: rewrite `v_S` (relative to a fixed
//! reference numbering) as an integer combination of `v_U` with `U`
//! standard.
//!
//! The rewriting sorts rows (which leaves `v_S` unchanged) and then applies
//! the exchange relation
//!
//! ```text
//! v_S = (-1)^j * sum_{U in Xi_{i,j}(S)} v_U
//! ```
//!
//! at the bottom-most, right-most column decrease, where `Xi_{i,j}(S)`
//! exchanges the first `j` entries of row `i+1` with each `j`-subset of row
//! `i`. Results are memoized per row-sorted numbering.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Arc, OnceLock, RwLock};

use crate::error::{Error, Result};
use crate::group_algebra::v_element;
use crate::linalg::solve_integral;
use crate::tableau::{standard_tableaux, Numbering, Partition};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StraightenedExpression {
    pub shape: Partition,
    pub coeffs: BTreeMap<Numbering, i64>,
}

impl StraightenedExpression {
    pub fn zero(shape: Partition) -> Self {
        StraightenedExpression {
            shape,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn unit(s: &Numbering) -> Self {
        let mut e = Self::zero(s.shape());
        e.coeffs.insert(s.clone(), 1);
        e
    }

    pub fn get(&self, u: &Numbering) -> i64 {
        self.coeffs.get(u).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_scaled(&mut self, other: &StraightenedExpression, k: i64) {
        for (u, &c) in &other.coeffs {
            let slot = self.coeffs.entry(u.clone()).or_insert(0);
            *slot += k * c;
            if *slot == 0 {
                self.coeffs.remove(u);
            }
        }
    }

    pub fn scaled(&self, k: i64) -> Self {
        let mut e = Self::zero(self.shape.clone());
        e.add_scaled(self, k);
        e
    }

    /// Coordinates against an ordered list of standard tableaux.
    pub fn to_vector(&self, basis: &[Numbering]) -> Vec<i64> {
        basis.iter().map(|u| self.get(u)).collect()
    }
}

impl fmt::Display for StraightenedExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        // Smallest tableau first.
        for (k, (u, &c)) in self.coeffs.iter().enumerate() {
            let sign = if c < 0 { "-" } else { "+" };
            if k == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if c.abs() != 1 {
                write!(f, "{}", c.abs())?;
            }
            write!(f, "{}", u.bracket())?;
        }
        Ok(())
    }
}

/// Sort each row ascending, then bring equal-length rows into order of
/// their first entries. Returns the numbering and the sign of
/// `v_result = sign * v_input`: each swap of two rows of length `l`
/// contributes `(-1)^l`.
pub fn row_normalize(s: &Numbering) -> (Numbering, i64) {
    let mut rows: Vec<Vec<u8>> = s.row_sorted().rows().to_vec();
    let mut sign = 1;
    let len = rows.len();
    for pass in 0..len {
        let mut swapped = false;
        for r in 0..len.saturating_sub(1 + pass) {
            if rows[r].len() == rows[r + 1].len() && rows[r][0] > rows[r + 1][0] {
                rows.swap(r, r + 1);
                if rows[r].len() % 2 == 1 {
                    sign = -sign;
                }
                swapped = true;
            }
        }
        if !swapped {
            break;
        }
    }
    (Numbering::new(rows).expect("row permutation of a numbering"), sign)
}

/// Exchange the first `j` entries of row `i + 1` with each `j`-subset of row
/// `i` (rows counted from 1), keeping the order inside each subset.
pub fn xi_expand(s: &Numbering, i: usize, j: usize) -> Result<Vec<Numbering>> {
    let rows = s.rows();
    if i == 0 || i >= rows.len() {
        return Err(Error::Domain(format!("row index {i} out of range")));
    }
    if j == 0 || j > rows[i].len() {
        return Err(Error::Domain(format!(
            "prefix length {j} out of range 1..={}",
            rows[i].len()
        )));
    }
    Ok(xi_expand_unchecked(rows, i - 1, j))
}

fn xi_expand_unchecked(rows: &[Vec<u8>], a: usize, j: usize) -> Vec<Numbering> {
    let top = &rows[a];
    let bottom = &rows[a + 1];
    let mut out = Vec::new();
    for pick in index_subsets(top.len(), j) {
        let mut new_rows = rows.to_vec();
        for (k, &pos) in pick.iter().enumerate() {
            new_rows[a][pos] = bottom[k];
            new_rows[a + 1][k] = top[pos];
        }
        out.push(Numbering::from_rows_unchecked(new_rows));
    }
    out
}

fn index_subsets(len: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, len: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for p in start..len {
            if len - p < k - cur.len() {
                break;
            }
            cur.push(p);
            rec(p + 1, len, k, cur, out);
            cur.pop();
        }
    }
    rec(0, len, k, &mut cur, &mut out);
    out
}

/// Bottom-most pair of rows with a column decrease, then the right-most
/// decreasing column. Returns `(upper row index, column)`, both 0-based.
fn find_decrease(s: &Numbering) -> Option<(usize, usize)> {
    let rows = s.rows();
    for a in (0..rows.len().saturating_sub(1)).rev() {
        for j in (0..rows[a + 1].len()).rev() {
            if rows[a][j] > rows[a + 1][j] {
                return Some((a, j));
            }
        }
    }
    None
}

/// Memoizing straightening engine. Safe to share across threads.
#[derive(Default)]
pub struct Straightener {
    memo: RwLock<HashMap<Numbering, Arc<StraightenedExpression>>>,
    oracle_fallbacks: AtomicUsize,
}

impl Straightener {
    pub fn new() -> Self {
        Self::default()
    }

    /// The process-wide shared engine.
    pub fn global() -> &'static Straightener {
        static ENGINE: OnceLock<Straightener> = OnceLock::new();
        ENGINE.get_or_init(Straightener::new)
    }

    /// How many times a rewriting cycle forced the dense oracle.
    pub fn oracle_fallbacks(&self) -> usize {
        self.oracle_fallbacks.load(Ordering::Relaxed)
    }

    pub fn cache_len(&self) -> usize {
        self.memo.read().unwrap().len()
    }

    pub fn straighten(&self, s: &Numbering) -> StraightenedExpression {
        let mut active = HashSet::new();
        (*self.rec(&s.row_sorted(), &mut active)).clone()
    }

    fn rec(&self, s: &Numbering, active: &mut HashSet<Numbering>) -> Arc<StraightenedExpression> {
        if let Some(e) = self.memo.read().unwrap().get(s) {
            return e.clone();
        }
        let result = match find_decrease(s) {
            None => StraightenedExpression::unit(s),
            Some(_) if active.contains(s) => {
                self.oracle_fallbacks.fetch_add(1, Ordering::Relaxed);
                oracle_straighten(s).expect("rewriting cycle and no oracle available")
            }
            Some((a, j)) => {
                active.insert(s.clone());
                let prefix = j + 1;
                let sign = if prefix % 2 == 0 { 1 } else { -1 };
                let mut acc = StraightenedExpression::zero(s.shape());
                for u in xi_expand_unchecked(s.rows(), a, prefix) {
                    let e = self.rec(&u.row_sorted(), active);
                    acc.add_scaled(&e, sign);
                }
                active.remove(s);
                acc
            }
        };
        let result = Arc::new(result);
        self.memo
            .write()
            .unwrap()
            .insert(s.clone(), result.clone());
        result
    }
}

/// Straighten with the shared engine.
pub fn straighten(s: &Numbering) -> StraightenedExpression {
    Straightener::global().straighten(s)
}

/// Dense check: expand `v_S` and every `v_U` (`U` standard) against the
/// reference `Y_1` in the regular representation and solve exactly.
pub fn oracle_straighten(s: &Numbering) -> Result<StraightenedExpression> {
    if s.n() > 7 {
        return Err(Error::Capacity(format!(
            "dense oracle needs n <= 7, got {}",
            s.n()
        )));
    }
    let shape = s.shape();
    let syt = standard_tableaux(&shape);
    let reference = &syt[0];
    let target = v_element(s, reference)?.to_dense();
    let columns: Vec<Vec<i64>> = syt
        .iter()
        .map(|u| v_element(u, reference).map(|v| v.to_dense()))
        .collect::<Result<_>>()?;
    let x = solve_integral(&columns, &target)?;
    let mut e = StraightenedExpression::zero(shape);
    for (u, c) in syt.into_iter().zip(x) {
        if c != 0 {
            e.coeffs.insert(u, c);
        }
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn num(s: &str) -> Numbering {
        Numbering::parse(s).unwrap()
    }

    #[test]
    fn worked_example() {
        let e = straighten(&num("136|245"));
        assert_eq!(e.to_string(), "-[135/246] - [134/256] - [123/456]");
        assert_eq!(straighten(&num("23|1")).to_string(), "-[13/2] - [12/3]");
    }

    #[test]
    fn example_222() {
        let ys = standard_tableaux(&Partition::new(vec![2, 2, 2]).unwrap());
        let e = straighten(&num("12|36|45"));
        assert_eq!(e.to_vector(&ys), vec![-1, 0, -1, 0, 0]);
        assert_eq!(straighten(&num("14|25|36")).to_vector(&ys), vec![0, 0, 0, 0, 1]);
    }

    #[test]
    fn xi_examples() {
        let s = num("136|245");
        assert_eq!(xi_expand(&s, 1, 3).unwrap(), vec![num("245|136")]);
        let got: Vec<String> = xi_expand(&num("245|136"), 1, 2)
            .unwrap()
            .iter()
            .map(|t| t.to_string())
            .collect();
        assert_eq!(got, ["135|246", "143|256", "213|456"]);
        assert!(xi_expand(&s, 1, 4).is_err());
        assert!(xi_expand(&s, 2, 1).is_err());
    }

    #[test]
    fn row_normalize_examples() {
        assert_eq!(row_normalize(&num("21|3")), (num("12|3"), 1));
        assert_eq!(row_normalize(&num("45|36|1|2")), (num("36|45|1|2"), 1));
        assert_eq!(row_normalize(&num("12|4|3")), (num("12|3|4"), -1));
    }

    #[test]
    fn oracle_agrees_on_examples() {
        for s in ["23|1", "136|245", "12|36|45", "31|2"] {
            assert_eq!(oracle_straighten(&num(s)).unwrap(), straighten(&num(s)), "{s}");
        }
    }
}
