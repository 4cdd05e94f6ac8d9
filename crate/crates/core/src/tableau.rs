//! Partitions, numberings of Ferrers diagrams, the total order on numberings,
//! standard and semistandard tableaux, and standardization.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{parse_err, Error, Result};
use crate::graph::SpanningSubgraph;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Partition> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::Domain(format!("partition {parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Domain(format!("partition {parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    /// Sort arbitrary positive parts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Partition {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// `(2^k, 1^(n-2k))`.
    pub fn two_column(n: usize, k: usize) -> Partition {
        assert!(2 * k <= n);
        let mut parts = vec![2; k];
        parts.extend(std::iter::repeat_n(1, n - 2 * k));
        Partition(parts)
    }

    pub fn parse(text: &str) -> Result<Partition> {
        let parts = text
            .split(',')
            .map(|s| s.trim())
            .filter(|s| !s.is_empty())
            .map(|s| {
                s.parse::<usize>()
                    .map_err(|_| Error::Domain(format!("bad shape part {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if parts.is_empty() {
            return Err(Error::Domain("empty shape".into()));
        }
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.0.first().copied().unwrap_or(0);
        Partition((0..width).map(|j| self.0.iter().filter(|&&p| p > j).count()).collect())
    }

    /// Dominance order `self >= other`.
    pub fn dominates(&self, other: &Partition) -> bool {
        let (mut a, mut b) = (0, 0);
        for k in 0..self.len().max(other.len()) {
            a += self.0.get(k).copied().unwrap_or(0);
            b += other.0.get(k).copied().unwrap_or(0);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Number of standard tableaux, by removing corners recursively.
    pub fn dim(&self) -> u64 {
        fn rec(parts: &[usize], memo: &mut std::collections::HashMap<Vec<usize>, u64>) -> u64 {
            if parts.iter().sum::<usize>() <= 1 {
                return 1;
            }
            if let Some(&v) = memo.get(parts) {
                return v;
            }
            let mut total = 0;
            for i in 0..parts.len() {
                if i + 1 == parts.len() || parts[i + 1] < parts[i] {
                    let mut p = parts.to_vec();
                    p[i] -= 1;
                    if p[i] == 0 {
                        p.pop();
                    }
                    total += rec(&p, memo);
                }
            }
            memo.insert(parts.to_vec(), total);
            total
        }
        rec(&self.0, &mut Default::default())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// All partitions of `n`, in decreasing lexicographic order: `(n)` first.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=max.min(rest)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// A bijective filling of a Ferrers diagram with `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Numbering {
    rows: Vec<Vec<u8>>,
}

impl Numbering {
    pub fn new(rows: Vec<Vec<u8>>) -> Result<Numbering> {
        if rows.iter().any(|r| r.is_empty()) {
            return Err(Error::Domain("numbering has an empty row".into()));
        }
        if rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return Err(Error::Domain("row lengths must weakly decrease".into()));
        }
        let n: usize = rows.iter().map(Vec::len).sum();
        let mut seen = vec![false; n + 1];
        for &x in rows.iter().flatten() {
            let x = x as usize;
            if x == 0 || x > n || seen[x] {
                return Err(Error::Domain(format!(
                    "entries are not a permutation of 1..={n}"
                )));
            }
            seen[x] = true;
        }
        Ok(Numbering { rows })
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<u8>>) -> Numbering {
        debug_assert!(Numbering::new(rows.clone()).is_ok());
        Numbering { rows }
    }

    /// Parse `r1|r2|...`; rows are digit strings, or comma-separated
    /// numbers when an entry exceeds 9. Also accepts `/` as row separator
    /// and surrounding brackets.
    pub fn parse(text: &str) -> Result<Numbering> {
        let t = text.trim().trim_start_matches('[').trim_end_matches(']');
        let mut rows = Vec::new();
        for (k, row) in t.split(['|', '/']).enumerate() {
            let row = row.trim();
            let entries: Vec<u8> = if row.contains(',') {
                row.split(',')
                    .map(|s| s.trim().parse::<u8>().map_err(|_| parse_err(k, format!("bad entry {s:?}"))))
                    .collect::<Result<_>>()?
            } else {
                row.chars()
                    .map(|c| {
                        c.to_digit(10)
                            .map(|d| d as u8)
                            .ok_or_else(|| parse_err(k, format!("bad digit {c:?}")))
                    })
                    .collect::<Result<_>>()?
            };
            rows.push(entries);
        }
        Numbering::new(rows)
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn n(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn shape(&self) -> Partition {
        Partition(self.rows.iter().map(Vec::len).collect())
    }

    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.rows[i][j]
    }

    /// Row-by-row reading word, left to right, top to bottom.
    pub fn word(&self) -> Vec<u8> {
        self.rows.iter().flatten().copied().collect()
    }

    pub fn is_standard(&self) -> bool {
        self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]))
            && self
                .rows
                .windows(2)
                .all(|w| w[1].iter().zip(&w[0]).all(|(b, a)| a < b))
    }

    pub fn has_increasing_rows(&self) -> bool {
        self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]))
    }

    /// The same numbering with each row sorted ascending.
    pub fn row_sorted(&self) -> Numbering {
        let mut rows = self.rows.clone();
        for r in &mut rows {
            r.sort_unstable();
        }
        Numbering { rows }
    }

    /// `[12/3]` style rendering.
    pub fn bracket(&self) -> String {
        format!("[{}]", self.render('/'))
    }

    fn render(&self, sep: char) -> String {
        let wide = self.n() > 9;
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                let parts: Vec<String> = r.iter().map(|x| x.to_string()).collect();
                parts.join(if wide { "," } else { "" })
            })
            .collect();
        rows.join(&sep.to_string())
    }
}

impl fmt::Display for Numbering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render('|'))
    }
}

/// Total order on numberings of one shape: at the lowest row where they
/// differ, look at the rightmost differing column; the larger entry wins.
pub fn compare(t: &Numbering, s: &Numbering) -> Result<Ordering> {
    if t.shape() != s.shape() {
        return Err(Error::Domain(format!(
            "cannot compare numberings of shapes {} and {}",
            t.shape(),
            s.shape()
        )));
    }
    Ok(paper_order(t, s))
}

fn paper_order(t: &Numbering, s: &Numbering) -> Ordering {
    for i in (0..t.rows.len()).rev() {
        for j in (0..t.rows[i].len()).rev() {
            match t.rows[i][j].cmp(&s.rows[i][j]) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
    }
    Ordering::Equal
}

/// Orders by shape first, then by the total order; used for map keys.
impl Ord for Numbering {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b) = (self.shape(), other.shape());
        a.cmp(&b).then_with(|| paper_order(self, other))
    }
}

impl PartialOrd for Numbering {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sort numberings of one shape largest first.
pub fn sort_descending(list: &mut [Numbering]) {
    list.sort_by(|a, b| paper_order(b, a));
}

/// Standard tableaux of shape `lambda`, largest first (`Y_1` is the row
/// reading filling).
pub fn standard_tableaux(lambda: &Partition) -> Vec<Numbering> {
    let n = lambda.n();
    let mut out = Vec::new();
    let mut rows: Vec<Vec<u8>> = vec![Vec::new(); lambda.len()];
    fn rec(next: usize, n: usize, shape: &[usize], rows: &mut Vec<Vec<u8>>, out: &mut Vec<Numbering>) {
        if next > n {
            out.push(Numbering { rows: rows.clone() });
            return;
        }
        for i in 0..shape.len() {
            let len = rows[i].len();
            if len < shape[i] && (i == 0 || rows[i - 1].len() > len) {
                rows[i].push(next as u8);
                rec(next + 1, n, shape, rows, out);
                rows[i].pop();
            }
        }
    }
    rec(1, n, lambda.parts(), &mut rows, &mut out);
    sort_descending(&mut out);
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SemistandardTableau {
    pub shape: Partition,
    pub weight: Partition,
    pub rows: Vec<Vec<u8>>,
}

impl SemistandardTableau {
    pub fn bracket(&self) -> String {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect())
            .collect();
        format!("[{}]", rows.join("/"))
    }
}

/// Semistandard tableaux of shape `lambda` and content `mu`.
pub fn semistandard_tableaux(lambda: &Partition, mu: &Partition) -> Result<Vec<SemistandardTableau>> {
    if lambda.n() != mu.n() {
        return Err(Error::Domain(format!(
            "shape {lambda} and weight {mu} have different sizes"
        )));
    }
    let mut out = Vec::new();
    let mut rows: Vec<Vec<u8>> = vec![Vec::new(); lambda.len()];
    // Letter k fills a horizontal strip of size mu_k.
    fn place(
        letter: usize,
        mu: &[usize],
        lambda: &[usize],
        rows: &mut Vec<Vec<u8>>,
        out: &mut Vec<Vec<Vec<u8>>>,
    ) {
        if letter == mu.len() {
            out.push(rows.clone());
            return;
        }
        let before: Vec<usize> = rows.iter().map(Vec::len).collect();
        strip(0, mu[letter], letter, &before, mu, lambda, rows, out);
    }
    #[allow(clippy::too_many_arguments)]
    fn strip(
        i: usize,
        left: usize,
        letter: usize,
        before: &[usize],
        mu: &[usize],
        lambda: &[usize],
        rows: &mut Vec<Vec<u8>>,
        out: &mut Vec<Vec<Vec<u8>>>,
    ) {
        if i == lambda.len() {
            if left == 0 {
                place(letter + 1, mu, lambda, rows, out);
            }
            return;
        }
        let cap = if i == 0 { lambda[0] } else { before[i - 1].min(lambda[i]) };
        let room = cap.saturating_sub(before[i]);
        for add in (0..=room.min(left)).rev() {
            for _ in 0..add {
                rows[i].push(letter as u8 + 1);
            }
            strip(i + 1, left - add, letter, before, mu, lambda, rows, out);
            for _ in 0..add {
                rows[i].pop();
            }
        }
    }
    let mut raw = Vec::new();
    place(0, mu.parts(), lambda.parts(), &mut rows, &mut raw);
    for r in raw {
        out.push(SemistandardTableau {
            shape: lambda.clone(),
            weight: mu.clone(),
            rows: r,
        });
    }
    Ok(out)
}

pub fn kostka(lambda: &Partition, mu: &Partition) -> Result<usize> {
    Ok(semistandard_tableaux(lambda, mu)?.len())
}

/// The numbering `T(F)` whose rows are the components of `F`.
pub fn numbering_of(f: &SpanningSubgraph) -> Numbering {
    Numbering::from_rows_unchecked(
        f.blocks
            .iter()
            .map(|b| b.iter().map(|&v| v as u8).collect())
            .collect(),
    )
}

/// Replace the occurrences of letter `k` in `Y` (in reading order) by the
/// entries of row `k` of `T` (in reading order).
pub fn standardize(y: &SemistandardTableau, t: &Numbering) -> Result<Numbering> {
    if t.shape() != y.weight {
        return Err(Error::Domain(format!(
            "numbering of shape {} does not match weight {}",
            t.shape(),
            y.weight
        )));
    }
    let mut next = vec![0usize; t.rows.len()];
    let mut rows = Vec::with_capacity(y.rows.len());
    for r in &y.rows {
        let mut row = Vec::with_capacity(r.len());
        for &letter in r {
            let k = letter as usize - 1;
            let entry = *t.rows.get(k).and_then(|tr| tr.get(next[k])).ok_or_else(|| {
                Error::Domain(format!("letter {letter} occurs more often than row {k} of T allows"))
            })?;
            next[k] += 1;
            row.push(entry);
        }
        rows.push(row);
    }
    Numbering::new(rows)
}
