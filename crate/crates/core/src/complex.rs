//! Chain complexes of a graph in q-degree zero: the full complex in tabloid
//! bases, and the complexes restricted to Specht modules of two-column shape.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::path::Path;
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{components_of, lattice_sign, subsets_of_size, EdgeMask, Graph, SpanningSubgraph};
use crate::linalg::solve_integral;
use crate::sparse::SparseMatrix;
use crate::straighten::straighten;
use crate::tableau::{
    numbering_of, semistandard_tableaux, sort_descending, standard_tableaux, standardize,
    Numbering, Partition,
};

/// Largest vertex count accepted by the full builder.
pub const FULL_MAX_VERTICES: usize = 8;

/// Tabloids of a fixed sequence of block sizes, encoded as words: label `x`
/// (1-based) sits in block `(word >> 4(x-1)) & 15`. Sorted, so a tabloid's
/// index is its position in lexicographic order of `(block of 1, block of 2, ..)`.
#[derive(Debug)]
pub struct TabloidSet {
    pub sizes: Vec<usize>,
    pub words: Vec<u32>,
    keys: Vec<u64>,
}

fn lex_key(word: u32, n: usize) -> u64 {
    // Reverse nibble order so that integer order is lexicographic from label 1.
    let mut k = 0u64;
    for x in 0..n {
        k = (k << 4) | ((word >> (4 * x)) & 15) as u64;
    }
    k
}

impl TabloidSet {
    fn build(sizes: &[usize]) -> TabloidSet {
        let n: usize = sizes.iter().sum();
        let mut left = sizes.to_vec();
        let mut words = Vec::new();
        fn rec(x: usize, n: usize, word: u32, left: &mut [usize], out: &mut Vec<u32>) {
            if x == n {
                out.push(word);
                return;
            }
            for b in 0..left.len() {
                if left[b] > 0 {
                    left[b] -= 1;
                    rec(x + 1, n, word | (b as u32) << (4 * x), left, out);
                    left[b] += 1;
                }
            }
        }
        rec(0, n, 0, &mut left, &mut words);
        let keys = words.iter().map(|&w| lex_key(w, n)).collect();
        TabloidSet {
            sizes: sizes.to_vec(),
            words,
            keys,
        }
    }

    /// Shared instance per size sequence.
    pub fn of(sizes: &[usize]) -> Arc<TabloidSet> {
        static CACHE: OnceLock<Mutex<HashMap<Vec<usize>, Arc<TabloidSet>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(t) = cache.lock().unwrap().get(sizes) {
            return t.clone();
        }
        let t = Arc::new(TabloidSet::build(sizes));
        cache.lock().unwrap().entry(sizes.to_vec()).or_insert(t).clone()
    }

    pub fn n(&self) -> usize {
        self.sizes.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn index_of(&self, word: u32) -> usize {
        self.keys
            .binary_search(&lex_key(word, self.n()))
            .expect("word is a tabloid of this shape")
    }

    /// The blocks of tabloid `k`, as sorted label lists.
    pub fn blocks(&self, k: usize) -> Vec<Vec<usize>> {
        let w = self.words[k];
        let mut blocks = vec![Vec::new(); self.sizes.len()];
        for x in 0..self.n() {
            blocks[((w >> (4 * x)) & 15) as usize].push(x + 1);
        }
        blocks
    }
}

/// One permutation-module summand `M_F` of a chain group.
#[derive(Clone, Debug)]
pub struct TabloidBasis {
    pub subgraph: SpanningSubgraph,
    /// Position of the first tabloid in the chain group.
    pub offset: usize,
    pub tabloids: Arc<TabloidSet>,
}

impl TabloidBasis {
    pub fn len(&self) -> usize {
        self.tabloids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tabloids.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ComplexKind {
    Full,
    Restricted(Partition),
}

/// A bounded chain complex `C_top -> ... -> C_0` of free abelian groups.
#[derive(Clone, Debug)]
pub struct IntegerChainComplex {
    pub kind: ComplexKind,
    /// `dims[i] = rank C_i` for the built degrees.
    pub dims: Vec<usize>,
    /// `boundaries[i - 1]` is `d_i : C_i -> C_{i-1}` (rows index `C_{i-1}`).
    pub boundaries: Vec<SparseMatrix>,
    /// Whether `C_{top+1} = 0`, so the top homology group is known too.
    pub complete: bool,
    /// Per degree, the permutation-module summands (full complexes only).
    pub summands: Vec<Vec<TabloidBasis>>,
    /// Per degree, generator names (restricted complexes only).
    pub labels: Vec<Vec<String>>,
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl IntegerChainComplex {
    pub fn top_degree(&self) -> usize {
        self.dims.len() - 1
    }

    /// `d_i`, or a zero map when `i` is 0 or beyond the top of a complete
    /// complex.
    pub fn boundary(&self, i: usize) -> Option<SparseMatrix> {
        if i == 0 {
            return Some(SparseMatrix::zeros(0, self.dims[0]));
        }
        if i <= self.top_degree() {
            return Some(self.boundaries[i - 1].clone());
        }
        if i == self.top_degree() + 1 && self.complete {
            return Some(SparseMatrix::zeros(self.dims[i - 1], 0));
        }
        None
    }

    pub fn boundary_ref(&self, i: usize) -> Option<&SparseMatrix> {
        if i >= 1 && i <= self.top_degree() {
            Some(&self.boundaries[i - 1])
        } else {
            None
        }
    }

    /// Degrees whose homology is determined by the built boundaries.
    pub fn homology_degrees(&self) -> std::ops::Range<usize> {
        if self.complete {
            0..self.dims.len()
        } else {
            0..self.top_degree()
        }
    }

    pub fn total_rank(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.dims
            .iter()
            .enumerate()
            .map(|(i, &d)| if i % 2 == 0 { d as i64 } else { -(d as i64) })
            .sum()
    }

    /// Check `d_i * d_{i+1} = 0` and the matrix shapes.
    pub fn check(&self) -> Result<()> {
        for (k, d) in self.boundaries.iter().enumerate() {
            let i = k + 1;
            if d.rows() != self.dims[i - 1] || d.cols() != self.dims[i] {
                return Err(Error::Consistency(format!(
                    "d_{i} is {}x{}, expected {}x{}",
                    d.rows(),
                    d.cols(),
                    self.dims[i - 1],
                    self.dims[i]
                )));
            }
        }
        for k in 1..self.boundaries.len() {
            if !self.boundaries[k - 1].composes_to_zero(&self.boundaries[k]) {
                return Err(Error::Consistency(format!("d_{} d_{} != 0", k, k + 1)));
            }
        }
        Ok(())
    }

    /// Name of basis element `k` of `C_i`.
    pub fn label(&self, i: usize, k: usize) -> String {
        if let Some(l) = self.labels.get(i).and_then(|v| v.get(k)) {
            return l.clone();
        }
        let Some(summands) = self.summands.get(i) else {
            return format!("c{i}_{k}");
        };
        let s = summands.partition_point(|b| b.offset <= k) - 1;
        let b = &summands[s];
        let mut out = String::from("F{");
        let mut first = true;
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            if b.subgraph.edge_mask >> e & 1 == 1 {
                if !first {
                    out.push(',');
                }
                first = false;
                let _ = write!(out, "{u}{v}");
            }
        }
        out.push_str("}:");
        let blocks = b.tabloids.blocks(k - b.offset);
        let parts: Vec<String> = blocks
            .iter()
            .map(|blk| {
                let sep = if self.n > 9 { "," } else { "" };
                blk.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
            })
            .collect();
        out.push_str(&parts.join("|"));
        out
    }

    pub fn labels_of(&self, i: usize) -> Vec<String> {
        (0..self.dims[i]).map(|k| self.label(i, k)).collect()
    }

    /// Write `d_i` to `<dir>/<stem>.mtx` and its row and column labels to
    /// `<dir>/<stem>.labels`.
    pub fn dump_boundary(&self, i: usize, dir: &Path, stem: &str) -> Result<()> {
        let d = self
            .boundary_ref(i)
            .ok_or_else(|| Error::Domain(format!("d_{i} was not built")))?;
        std::fs::create_dir_all(dir)?;
        std::fs::write(dir.join(format!("{stem}.mtx")), d.to_matrix_market())?;
        let mut text = String::new();
        for (r, l) in self.labels_of(i - 1).iter().enumerate() {
            let _ = writeln!(text, "row {} {l}", r + 1);
        }
        for (c, l) in self.labels_of(i).iter().enumerate() {
            let _ = writeln!(text, "col {} {l}", c + 1);
        }
        std::fs::write(dir.join(format!("{stem}.labels")), text)?;
        Ok(())
    }
}

fn word_of(t: &TabloidSet, k: usize) -> u32 {
    t.words[k]
}

/// Columns of the part of `d` starting at summand `src` and ending in the
/// chain group laid out as `targets`.
fn summand_columns(
    g: &Graph,
    src: &TabloidBasis,
    targets: &HashMap<EdgeMask, TabloidBasis>,
) -> Vec<Vec<(u32, i64)>> {
    let n = g.n();
    let f = &src.subgraph;
    let mut cols: Vec<Vec<(u32, i64)>> = vec![Vec::new(); src.len()];
    for e in 0..g.m() {
        if f.edge_mask >> e & 1 == 0 {
            continue;
        }
        let sign = lattice_sign(f.edge_mask, e).unwrap();
        let tgt = &targets[&(f.edge_mask & !(1u64 << e))];
        let fp = &tgt.subgraph;
        // Where each block of F goes in F - e. A block either survives
        // verbatim or breaks into two blocks of F - e.
        let block_of_vertex = |v: usize| fp.blocks.iter().position(|b| b.contains(&v)).unwrap();
        let mut image: Vec<u32> = Vec::with_capacity(f.blocks.len());
        let mut broken: Option<(usize, u32, u32)> = None;
        for (k, b) in f.blocks.iter().enumerate() {
            let a = block_of_vertex(b[0]);
            if fp.blocks[a].len() == b.len() {
                image.push(a as u32);
            } else {
                let other = b.iter().map(|&v| block_of_vertex(v)).find(|&x| x != a).unwrap();
                broken = Some((k, a as u32, other as u32));
                image.push(u32::MAX);
            }
        }
        for (col, out) in cols.iter_mut().enumerate() {
            let w = word_of(&src.tabloids, col);
            let mut base = 0u32;
            let mut labels_in_broken = Vec::new();
            for x in 0..n {
                let blk = ((w >> (4 * x)) & 15) as usize;
                if image[blk] == u32::MAX {
                    labels_in_broken.push(x);
                } else {
                    base |= image[blk] << (4 * x);
                }
            }
            match broken {
                None => {
                    let r = tgt.offset + tgt.tabloids.index_of(base);
                    out.push((r as u32, sign));
                }
                Some((_, a, b)) => {
                    let size_a = fp.blocks[a as usize].len();
                    let nl = labels_in_broken.len();
                    for pick in 0u32..(1 << nl) {
                        if pick.count_ones() as usize != size_a {
                            continue;
                        }
                        let mut word = base;
                        for (bit, &x) in labels_in_broken.iter().enumerate() {
                            let target = if pick >> bit & 1 == 1 { a } else { b };
                            word |= target << (4 * x);
                        }
                        let r = tgt.offset + tgt.tabloids.index_of(word);
                        out.push((r as u32, sign));
                    }
                }
            }
        }
    }
    cols
}

fn degree_layout(g: &Graph, i: usize) -> (Vec<TabloidBasis>, usize) {
    let mut offset = 0;
    let mut out = Vec::new();
    for mask in subsets_of_size(g.m(), i) {
        let sub = components_of(g, mask);
        let tabloids = TabloidSet::of(&sub.shape());
        let len = tabloids.len();
        out.push(TabloidBasis {
            subgraph: sub,
            offset,
            tabloids,
        });
        offset += len;
    }
    (out, offset)
}

/// The full chain complex in tabloid bases, degrees `0..=max_degree`
/// (default: all edges).
pub fn build_full_complex(g: &Graph, max_degree: Option<usize>) -> Result<IntegerChainComplex> {
    build_full_complex_capped(g, max_degree, usize::MAX)
}

/// As [`build_full_complex`], refusing when the basis would exceed `budget`
/// elements in total.
pub fn build_full_complex_capped(
    g: &Graph,
    max_degree: Option<usize>,
    budget: usize,
) -> Result<IntegerChainComplex> {
    if g.n() > FULL_MAX_VERTICES {
        return Err(Error::Capacity(format!(
            "full complex needs n <= {FULL_MAX_VERTICES}, got n = {}",
            g.n()
        )));
    }
    let top = max_degree.map_or(g.m(), |d| d.min(g.m()));
    let mut layouts = Vec::with_capacity(top + 1);
    let mut total = 0usize;
    for i in 0..=top {
        let (summands, dim) = degree_layout(g, i);
        total = total.saturating_add(dim);
        if total > budget {
            return Err(Error::Capacity(format!(
                "chain group C_{i} has rank {dim}, total basis {total} exceeds the budget {budget}"
            )));
        }
        layouts.push((summands, dim));
    }
    let mut boundaries = Vec::with_capacity(top);
    for i in 1..=top {
        let targets: HashMap<EdgeMask, TabloidBasis> = layouts[i - 1]
            .0
            .iter()
            .map(|b| (b.subgraph.edge_mask, b.clone()))
            .collect();
        let cols: Vec<Vec<Vec<(u32, i64)>>> = layouts[i]
            .0
            .par_iter()
            .map(|src| summand_columns(g, src, &targets))
            .collect();
        let cols: Vec<Vec<(u32, i64)>> = cols.into_iter().flatten().collect();
        boundaries.push(SparseMatrix::from_columns(layouts[i - 1].1, cols));
    }
    let dims = layouts.iter().map(|l| l.1).collect();
    let summands = layouts.into_iter().map(|l| l.0).collect();
    Ok(IntegerChainComplex {
        kind: ComplexKind::Full,
        dims,
        boundaries,
        complete: top == g.m(),
        summands,
        labels: Vec::new(),
        n: g.n(),
        edges: g.edges().to_vec(),
    })
}

/// `(2^k, 1^(n-2k))` with `k >= 1`, or an unsupported-shape error.
pub fn two_column_k(lambda: &Partition) -> Result<usize> {
    let parts = lambda.parts();
    let k = parts.iter().filter(|&&p| p == 2).count();
    if k == 0 || parts.iter().any(|&p| p > 2) {
        return Err(Error::UnsupportedShape(lambda.to_string()));
    }
    Ok(k)
}

fn hex_index(i: usize) -> String {
    format!("{:x}", i)
}

/// How generators of one module are listed.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum GeneratorOrder {
    /// Decreasing in the total order on numberings (`Y_1` = row reading
    /// filling).
    #[default]
    Numbering,
    /// Increasing lexicographic order of the row words.
    RowWord,
}

impl GeneratorOrder {
    fn sort(self, v: &mut [Numbering]) {
        match self {
            GeneratorOrder::Numbering => sort_descending(v),
            GeneratorOrder::RowWord => v.sort_by_key(Numbering::word),
        }
    }
}

/// Generators of the restricted chain groups, with their target modules.
#[derive(Clone, Debug)]
pub struct RestrictedGenerators {
    pub shape: Partition,
    /// `Y_1, Y_2, ...`
    pub y: Vec<Numbering>,
    /// Per edge `e_i`, the numberings `X_i^1, X_i^2, ...`.
    pub x: Vec<Vec<Numbering>>,
    /// Per disjoint edge pair `(a, b)`, `a < b`, the numberings `W_{ab}^l`.
    pub w: Vec<((usize, usize), Vec<Numbering>)>,
}

impl RestrictedGenerators {
    pub fn new(g: &Graph, lambda: &Partition) -> Result<RestrictedGenerators> {
        Self::with_order(g, lambda, GeneratorOrder::Numbering)
    }

    pub fn with_order(
        g: &Graph,
        lambda: &Partition,
        order: GeneratorOrder,
    ) -> Result<RestrictedGenerators> {
        two_column_k(lambda)?;
        let n = g.n();
        if lambda.n() != n {
            return Err(Error::Domain(format!(
                "shape {lambda} is not a partition of n = {n}"
            )));
        }
        let mut y = standard_tableaux(lambda);
        order.sort(&mut y);
        let generators = |mask: EdgeMask| -> Result<Vec<Numbering>> {
            let f = components_of(g, mask);
            let t = numbering_of(&f);
            let mu = Partition::new(f.shape())?;
            let mut v = semistandard_tableaux(lambda, &mu)?
                .iter()
                .map(|ssyt| standardize(ssyt, &t))
                .collect::<Result<Vec<_>>>()?;
            order.sort(&mut v);
            Ok(v)
        };
        let x = (0..g.m())
            .map(|i| generators(1u64 << i))
            .collect::<Result<Vec<_>>>()?;
        let mut w = Vec::new();
        for a in 0..g.m() {
            for b in a + 1..g.m() {
                let (p, q) = g.edge(a);
                let (r, s) = g.edge(b);
                if p == r || p == s || q == r || q == s {
                    continue;
                }
                w.push(((a, b), generators(1u64 << a | 1u64 << b)?));
            }
        }
        Ok(RestrictedGenerators {
            shape: lambda.clone(),
            y,
            x,
            w,
        })
    }

    pub fn y_labels(&self) -> Vec<String> {
        (1..=self.y.len()).map(|k| format!("Y_{k}")).collect()
    }

    pub fn x_labels(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (i, gens) in self.x.iter().enumerate() {
            for j in 1..=gens.len() {
                if gens.len() == 1 {
                    out.push(format!("X_{}", i + 1));
                } else {
                    out.push(format!("X_{}^{}", i + 1, j));
                }
            }
        }
        out
    }

    pub fn w_labels(&self) -> Vec<String> {
        let mut out = Vec::new();
        for ((a, b), gens) in &self.w {
            let name = format!("W_{{{}{}}}", hex_index(a + 1), hex_index(b + 1));
            for l in 1..=gens.len() {
                if gens.len() == 1 {
                    out.push(name.clone());
                } else {
                    out.push(format!("{name}^{l}"));
                }
            }
        }
        out
    }

    /// Position of the first `X_i^1` in the `C_1` basis.
    pub fn x_offset(&self, edge: usize) -> usize {
        self.x[..edge].iter().map(Vec::len).sum()
    }
}

/// Integer coefficients `c` with `v_gen = sum_l c_l v_{targets[l]}` (all
/// relative to `Y_1`), found by straightening both sides.
pub fn coefficients_of_image(gen: &Numbering, targets: &[Numbering]) -> Result<Vec<i64>> {
    let shape = gen.shape();
    let syt = standard_tableaux(&shape);
    let lhs = straighten(gen).to_vector(&syt);
    let cols: Vec<Vec<i64>> = targets
        .iter()
        .map(|t| straighten(t).to_vector(&syt))
        .collect();
    solve_integral(&cols, &lhs).map_err(|e| {
        Error::Consistency(format!("image of {} in the target generators: {e}", gen.bracket()))
    })
}

/// The complex `C_2 -> C_1 -> C_0` restricted to the `lambda`-isotypic part,
/// in the generators `W`, `X`, `Y`.
pub fn build_restricted_complex(g: &Graph, lambda: &Partition) -> Result<IntegerChainComplex> {
    build_restricted_complex_with(&RestrictedGenerators::new(g, lambda)?, g)
}

/// The restricted complex in the given generators of `g`.
pub fn build_restricted_complex_with(
    gens: &RestrictedGenerators,
    g: &Graph,
) -> Result<IntegerChainComplex> {
    let lambda = &gens.shape;
    let syt = &gens.y;
    let dim0 = syt.len();
    let dim1: usize = gens.x.iter().map(Vec::len).sum();
    let dim2: usize = gens.w.iter().map(|(_, v)| v.len()).sum();

    // d_1: one removal, sign +.
    let mut d1_cols = Vec::with_capacity(dim1);
    for xs in &gens.x {
        for x in xs {
            let v = straighten(x).to_vector(syt);
            d1_cols.push(
                v.iter()
                    .enumerate()
                    .filter(|(_, &c)| c != 0)
                    .map(|(r, &c)| (r as u32, c))
                    .collect(),
            );
        }
    }

    // d_2: removing e_a keeps e_b (sign +), removing e_b keeps e_a (sign -).
    let w_cols: Vec<Result<Vec<Vec<(u32, i64)>>>> = gens
        .w
        .par_iter()
        .map(|((a, b), ws)| {
            let mut cols = Vec::with_capacity(ws.len());
            for w in ws {
                let mut col = Vec::new();
                for (kept, sign) in [(*b, 1i64), (*a, -1i64)] {
                    let c = coefficients_of_image(w, &gens.x[kept])?;
                    let off = gens.x_offset(kept);
                    for (l, &v) in c.iter().enumerate() {
                        if v != 0 {
                            col.push(((off + l) as u32, sign * v));
                        }
                    }
                }
                cols.push(col);
            }
            Ok(cols)
        })
        .collect();
    let mut d2_cols = Vec::with_capacity(dim2);
    for c in w_cols {
        d2_cols.extend(c?);
    }

    Ok(IntegerChainComplex {
        kind: ComplexKind::Restricted(lambda.clone()),
        dims: vec![dim0, dim1, dim2],
        boundaries: vec![
            SparseMatrix::from_columns(dim0, d1_cols),
            SparseMatrix::from_columns(dim1, d2_cols),
        ],
        complete: false,
        summands: Vec::new(),
        labels: vec![gens.y_labels(), gens.x_labels(), gens.w_labels()],
        n: g.n(),
        edges: g.edges().to_vec(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k3_dimensions() {
        let c = build_full_complex(&Graph::complete(3), None).unwrap();
        assert_eq!(c.dims, vec![6, 9, 3, 1]);
        assert_eq!(c.euler_characteristic(), -1);
        c.check().unwrap();
    }

    #[test]
    fn k3_restricted() {
        let c = build_restricted_complex(&Graph::complete(3), &Partition::new(vec![2, 1]).unwrap())
            .unwrap();
        assert_eq!(c.boundaries[0].to_dense(), vec![vec![1, 0, -1], vec![0, 1, -1]]);
        assert_eq!(c.labels[1], ["X_1", "X_2", "X_3"]);
        assert_eq!(c.dims[2], 0);
    }

    #[test]
    fn tabloid_indexing() {
        let t = TabloidSet::of(&[2, 1]);
        assert_eq!(t.len(), 3);
        assert_eq!(t.blocks(0), vec![vec![1, 2], vec![3]]);
        for k in 0..t.len() {
            assert_eq!(t.index_of(t.words[k]), k);
        }
    }

    #[test]
    fn example_images() {
        let ys = standard_tableaux(&Partition::new(vec![2, 2, 2]).unwrap());
        let c = coefficients_of_image(&Numbering::parse("12|36|45").unwrap(), &ys).unwrap();
        assert_eq!(c, vec![-1, 0, -1, 0, 0]);
        let c = coefficients_of_image(&Numbering::parse("14|25|36").unwrap(), &ys).unwrap();
        assert_eq!(c, vec![0, 0, 0, 0, 1]);
    }

    #[test]
    fn unsupported_shape() {
        let g = Graph::complete(4);
        assert!(matches!(
            build_restricted_complex(&g, &Partition::new(vec![3, 1]).unwrap()),
            Err(Error::UnsupportedShape(_))
        ));
    }

    #[test]
    fn cap() {
        assert!(matches!(
            build_full_complex(&Graph::complete(9), Some(1)),
            Err(Error::Capacity(_))
        ));
        assert!(build_full_complex_capped(&Graph::complete(5), None, 100).is_err());
    }
}
