//! Column-compressed sparse integer matrices.

use std::io::{BufRead, Write};

use crate::error::{parse_err, Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    /// Per column, `(row, value)` sorted by row, no zeros.
    columns: Vec<Vec<(u32, i64)>>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            columns: vec![Vec::new(); cols],
        }
    }

    /// Build from columns; entries are sorted and duplicates summed.
    pub fn from_columns(rows: usize, columns: Vec<Vec<(u32, i64)>>) -> Self {
        let cols = columns.len();
        let columns = columns
            .into_iter()
            .map(|mut c| {
                c.sort_unstable_by_key(|e| e.0);
                let mut out: Vec<(u32, i64)> = Vec::with_capacity(c.len());
                for (r, v) in c {
                    assert!((r as usize) < rows, "row {r} out of range {rows}");
                    match out.last_mut() {
                        Some(last) if last.0 == r => last.1 += v,
                        _ => out.push((r, v)),
                    }
                }
                out.retain(|e| e.1 != 0);
                out
            })
            .collect();
        SparseMatrix {
            rows,
            cols,
            columns,
        }
    }

    pub fn from_dense(rows: &[Vec<i64>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut columns = vec![Vec::new(); ncols];
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), ncols, "ragged dense matrix");
            for (c, &v) in row.iter().enumerate() {
                if v != 0 {
                    columns[c].push((r as u32, v));
                }
            }
        }
        SparseMatrix {
            rows: nrows,
            cols: ncols,
            columns,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn column(&self, c: usize) -> &[(u32, i64)] {
        &self.columns[c]
    }

    pub fn columns(&self) -> &[Vec<(u32, i64)>] {
        &self.columns
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        let col = &self.columns[c];
        match col.binary_search_by_key(&(r as u32), |e| e.0) {
            Ok(k) => col[k].1,
            Err(_) => 0,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut d = vec![vec![0; self.cols]; self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for &(r, v) in col {
                d[r as usize][c] = v;
            }
        }
        d
    }

    /// Row-major copy: per row, `(col, value)` sorted by column.
    pub fn to_rows(&self) -> Vec<Vec<(u32, i64)>> {
        let mut rows = vec![Vec::new(); self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for &(r, v) in col {
                rows[r as usize].push((c as u32, v));
            }
        }
        rows
    }

    pub fn transpose(&self) -> SparseMatrix {
        SparseMatrix {
            rows: self.cols,
            cols: self.rows,
            columns: self.to_rows(),
        }
    }

    pub fn mul_vec(&self, x: &[i64]) -> Vec<i64> {
        assert_eq!(x.len(), self.cols);
        let mut y = vec![0i64; self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            if x[c] != 0 {
                for &(r, v) in col {
                    y[r as usize] += v * x[c];
                }
            }
        }
        y
    }

    /// `self * rhs`.
    pub fn mul(&self, rhs: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut scratch = vec![0i64; self.rows];
        let mut touched = Vec::new();
        let mut columns = Vec::with_capacity(rhs.cols);
        for col in &rhs.columns {
            for &(k, b) in col {
                for &(r, a) in &self.columns[k as usize] {
                    if scratch[r as usize] == 0 {
                        touched.push(r);
                    }
                    scratch[r as usize] += a * b;
                }
            }
            touched.sort_unstable();
            touched.dedup();
            let mut out = Vec::new();
            for &r in &touched {
                let v = std::mem::take(&mut scratch[r as usize]);
                if v != 0 {
                    out.push((r, v));
                }
            }
            touched.clear();
            columns.push(out);
        }
        SparseMatrix {
            rows: self.rows,
            cols: rhs.cols,
            columns,
        }
    }

    /// True when `self * rhs` is the zero matrix.
    pub fn composes_to_zero(&self, rhs: &SparseMatrix) -> bool {
        self.mul(rhs).is_zero()
    }

    /// MatrixMarket coordinate integer format, 1-based indices.
    pub fn write_matrix_market(&self, out: &mut impl Write) -> std::io::Result<()> {
        writeln!(out, "%%MatrixMarket matrix coordinate integer general")?;
        writeln!(out, "{} {} {}", self.rows, self.cols, self.nnz())?;
        for (c, col) in self.columns.iter().enumerate() {
            for &(r, v) in col {
                writeln!(out, "{} {} {}", r + 1, c + 1, v)?;
            }
        }
        Ok(())
    }

    pub fn to_matrix_market(&self) -> String {
        let mut buf = Vec::new();
        self.write_matrix_market(&mut buf).unwrap();
        String::from_utf8(buf).unwrap()
    }

    pub fn read_matrix_market(input: impl BufRead) -> Result<SparseMatrix> {
        let mut lines = input.lines().enumerate().filter(|(_, l)| {
            l.as_ref().map_or(true, |s| !s.starts_with('%') && !s.trim().is_empty())
        });
        let (ln, header) = lines
            .next()
            .ok_or_else(|| parse_err(0, "missing size line"))?;
        let header = header?;
        let dims: Vec<usize> = header
            .split_whitespace()
            .map(|s| s.parse().map_err(|_| parse_err(ln, "bad size line")))
            .collect::<Result<_>>()?;
        if dims.len() != 3 {
            return Err(parse_err(ln, "size line needs rows cols nnz"));
        }
        let mut columns = vec![Vec::new(); dims[1]];
        for (ln, line) in lines {
            let line = line?;
            let f: Vec<&str> = line.split_whitespace().collect();
            if f.len() != 3 {
                return Err(parse_err(ln, "entry line needs row col value"));
            }
            let r: usize = f[0].parse().map_err(|_| parse_err(ln, "bad row"))?;
            let c: usize = f[1].parse().map_err(|_| parse_err(ln, "bad col"))?;
            let v: i64 = f[2].parse().map_err(|_| parse_err(ln, "bad value"))?;
            if r == 0 || r > dims[0] || c == 0 || c > dims[1] {
                return Err(Error::Domain(format!("entry ({r},{c}) out of range")));
            }
            columns[c - 1].push(((r - 1) as u32, v));
        }
        Ok(SparseMatrix::from_columns(dims[0], columns))
    }
}
