//! Homology of integer chain complexes: free ranks and torsion from Smith
//! forms, prime-field shortcuts, isotypic multiplicities over the rationals
//! and torsion witnesses.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::{ComplexKind, IntegerChainComplex};
use crate::error::{Error, Result};
use crate::group_algebra::{young_c, Permutation};
use crate::linalg::{inv_mod, mul_mod, to_mod, BIG_PRIME};
use crate::snf::{in_integer_column_span, rank_mod_p, smith_normal_form, SmithForm};
use crate::sparse::SparseMatrix;
use crate::tableau::{kostka, partitions, standard_tableaux, Partition};

/// `Z^free` plus `Z/d` for each listed factor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyGroup {
    #[serde(rename = "i")]
    pub degree: usize,
    #[serde(rename = "free")]
    pub free_rank: usize,
    pub torsion: Vec<u64>,
}

impl HomologyGroup {
    pub fn count_torsion(&self, p: u64) -> usize {
        self.torsion.iter().filter(|&&d| d % p == 0).count()
    }

    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

impl std::fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts = Vec::new();
        if self.free_rank > 0 {
            parts.push(format!("Z^{}", self.free_rank));
        }
        let mut t = self.torsion.clone();
        t.dedup();
        for d in t {
            let k = self.torsion.iter().filter(|&&x| x == d).count();
            parts.push(format!("Z_{d}^{k}"));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// The homology JSON record: `{"graph": [[u,v],..], "H": [..]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologySignature {
    pub graph: Vec<[usize; 2]>,
    #[serde(rename = "H")]
    pub groups: Vec<HomologyGroup>,
}

impl HomologySignature {
    pub fn degree(&self, i: usize) -> Option<&HomologyGroup> {
        self.groups.iter().find(|h| h.degree == i)
    }
}

fn small_factors(s: &SmithForm) -> Result<Vec<u64>> {
    s.torsion
        .iter()
        .map(|d| {
            d.to_u64()
                .ok_or_else(|| Error::Capacity(format!("invariant factor {d} exceeds 64 bits")))
        })
        .collect()
}

/// Integral homology in every degree fixed by the built boundaries.
pub fn homology(c: &IntegerChainComplex) -> Result<Vec<HomologyGroup>> {
    c.check()?;
    let degrees = c.homology_degrees();
    let top = degrees.end;
    // Smith forms of d_1 .. d_top (those that feed some H_i).
    let forms: Vec<SmithForm> = (1..=top.min(c.top_degree()))
        .into_par_iter()
        .map(|i| smith_normal_form(&c.boundaries[i - 1]))
        .collect();
    let rank = |i: usize| if i == 0 || i > forms.len() { 0 } else { forms[i - 1].rank };
    degrees
        .map(|i| {
            let free = c.dims[i] - rank(i) - rank(i + 1);
            let torsion = if i < forms.len() {
                small_factors(&forms[i])?
            } else {
                Vec::new()
            };
            Ok(HomologyGroup {
                degree: i,
                free_rank: free,
                torsion,
            })
        })
        .collect()
}

/// Rank over the rationals, computed modulo `2^61 - 1`. A lower bound that is
/// exact unless that prime divides an invariant factor.
pub fn rank_q_fast(m: &SparseMatrix) -> usize {
    rank_mod_p(m, BIG_PRIME)
}

/// The number of invariant factors of `d_{i+1}` divisible by `p`, namely the
/// number of cyclic `p`-power summands of `H_i`, as the rank drop of
/// `d_{i+1}` modulo `p`.
pub fn torsion_signature_fast(c: &IntegerChainComplex, p: u64, i: usize) -> Result<usize> {
    let d = c
        .boundary(i + 1)
        .ok_or_else(|| Error::Precondition(format!("d_{} was not built", i + 1)))?;
    let q = rank_q_fast(&d);
    let r = rank_mod_p(&d, p);
    Ok(q - r)
}

/// `dim H_i(C; GF(p))`.
pub fn betti_mod_p(c: &IntegerChainComplex, p: u64, i: usize) -> Result<usize> {
    let rank = |k: usize| -> Result<usize> {
        c.boundary(k)
            .map(|d| rank_mod_p(&d, p))
            .ok_or_else(|| Error::Precondition(format!("d_{k} was not built")))
    };
    Ok(c.dims[i] - rank(i)? - rank(i + 1)?)
}

/// Generators of the `lambda`-isotypic part of each summand of `C_i`, as
/// columns of a sparse matrix over `C_i`.
fn symmetrized_basis(
    c: &IntegerChainComplex,
    i: usize,
    lambda: &Partition,
    perms: &[(Permutation, i64)],
) -> Result<SparseMatrix> {
    let n = c.n;
    let cols: Vec<Result<Vec<Vec<(u32, i64)>>>> = c.summands[i]
        .par_iter()
        .map(|s| {
            let mu = Partition::from_unsorted(s.subgraph.shape());
            let want = kostka(lambda, &mu)?;
            let mut echelon: Vec<(usize, Vec<u64>)> = Vec::new();
            let mut out = Vec::new();
            let len = s.len();
            for t in 0..len {
                if out.len() == want {
                    break;
                }
                let w = s.tabloids.words[t];
                let mut v = vec![0i64; len];
                for (sigma, chi) in perms {
                    if *chi == 0 {
                        continue;
                    }
                    // sigma . t sends label sigma(x) to the block of x.
                    let mut moved = 0u32;
                    for x in 0..n {
                        let b = (w >> (4 * x)) & 15;
                        let y = sigma.apply(x as u8 + 1) as usize - 1;
                        moved |= b << (4 * y);
                    }
                    v[s.tabloids.index_of(moved)] += chi;
                }
                // Independence modulo a large prime.
                let mut r: Vec<u64> = v.iter().map(|&x| to_mod(x, BIG_PRIME)).collect();
                for (piv, row) in &echelon {
                    if r[*piv] != 0 {
                        let f = r[*piv];
                        for (a, &b) in r.iter_mut().zip(row) {
                            *a = (*a + BIG_PRIME - mul_mod(f, b, BIG_PRIME)) % BIG_PRIME;
                        }
                    }
                }
                if let Some(piv) = r.iter().position(|&x| x != 0) {
                    let inv = inv_mod(r[piv], BIG_PRIME);
                    for a in r.iter_mut() {
                        *a = mul_mod(*a, inv, BIG_PRIME);
                    }
                    echelon.push((piv, r));
                    out.push(
                        v.iter()
                            .enumerate()
                            .filter(|(_, &x)| x != 0)
                            .map(|(k, &x)| ((s.offset + k) as u32, x))
                            .collect(),
                    );
                }
            }
            if out.len() != want {
                return Err(Error::Consistency(format!(
                    "symmetrized summand has rank {} instead of {want}",
                    out.len()
                )));
            }
            Ok(out)
        })
        .collect();
    let mut all = Vec::new();
    for c in cols {
        all.extend(c?);
    }
    Ok(SparseMatrix::from_columns(c.dims[i], all))
}

/// Multiplicities of every Specht module in each `H_i(C; Q)` of a full
/// complex, over the degrees fixed by the built boundaries, indexed like
/// `partitions(n)`.
///
/// `rank_lambda(d_i)` is the rank modulo `2^61 - 1` of `d_i` on `c_T C_i`,
/// with `c_T` the Young symmetrizer of a tableau of shape `lambda`. Each is a
/// lower bound for the rational rank, and the rational ranks satisfy
/// `sum_lambda f^lambda rank_lambda(d_i) = rank_Q(d_i)`, so equality of that
/// sum with the exact rank of `d_i` proves every term exact.
pub fn isotype_decomposition(c: &IntegerChainComplex) -> Result<Vec<(Partition, Vec<usize>)>> {
    if c.kind != ComplexKind::Full {
        return Err(Error::Precondition("isotypic multiplicities need the full complex".into()));
    }
    if c.n > 6 {
        return Err(Error::Capacity(format!("isotypic multiplicities need n <= 6, got {}", c.n)));
    }
    let shapes = partitions(c.n);
    let degrees: Vec<usize> = c.homology_degrees().collect();
    let top_needed = (degrees.last().copied().unwrap_or(0) + 1).min(c.top_degree());
    let per_shape: Vec<(Vec<usize>, Vec<usize>)> = shapes
        .par_iter()
        .map(|lambda| -> Result<(Vec<usize>, Vec<usize>)> {
            let t = &standard_tableaux(lambda)[0];
            let perms: Vec<(Permutation, i64)> = young_c(t)
                .terms()
                .iter()
                .map(|(p, x)| (p.clone(), x.to_i64().expect("coefficient is a sign")))
                .collect();
            let chain_mult: Vec<usize> = (0..=c.top_degree())
                .map(|i| {
                    c.summands[i]
                        .iter()
                        .map(|s| kostka(lambda, &Partition::from_unsorted(s.subgraph.shape())))
                        .sum::<Result<usize>>()
                })
                .collect::<Result<_>>()?;
            let ranks = (1..=top_needed)
                .map(|i| -> Result<usize> {
                    if chain_mult[i] == 0 || chain_mult[i - 1] == 0 {
                        return Ok(0);
                    }
                    let basis = symmetrized_basis(c, i, lambda, &perms)?;
                    Ok(rank_mod_p(&c.boundaries[i - 1].mul(&basis), BIG_PRIME))
                })
                .collect::<Result<_>>()?;
            Ok((chain_mult, ranks))
        })
        .collect::<Result<_>>()?;
    for i in 1..=top_needed {
        let total: usize = shapes
            .iter()
            .zip(&per_shape)
            .map(|(lambda, (_, ranks))| lambda.dim() as usize * ranks[i - 1])
            .sum();
        let exact = smith_normal_form(&c.boundaries[i - 1]).rank;
        if total != exact {
            return Err(Error::Consistency(format!(
                "isotypic ranks of d_{i} sum to {total}, rank over Q is {exact}"
            )));
        }
    }
    Ok(shapes
        .into_iter()
        .zip(per_shape)
        .map(|(lambda, (chain_mult, ranks))| {
            let rank = |i: usize| if i == 0 || i > ranks.len() { 0 } else { ranks[i - 1] };
            let mult = degrees.iter().map(|&i| chain_mult[i] - rank(i) - rank(i + 1)).collect();
            (lambda, mult)
        })
        .collect())
}

/// Multiplicity of the Specht module `S_lambda` in each `H_i(C; Q)` of a full
/// complex, over the degrees fixed by the built boundaries.
pub fn isotype_multiplicities(c: &IntegerChainComplex, lambda: &Partition) -> Result<Vec<usize>> {
    if lambda.n() != c.n {
        return Err(Error::Domain(format!("shape {lambda} is not a partition of {}", c.n)));
    }
    isotype_decomposition(c)?
        .into_iter()
        .find(|(mu, _)| mu == lambda)
        .map(|(_, m)| m)
        .ok_or_else(|| Error::Domain(format!("unknown shape {lambda}")))
}

/// Whether `d_2 g = 2h`, `d_1 h = 0` and `h` is not a boundary: then `h`
/// represents an element of order two in `H_1`.
pub fn verify_torsion_witness(c: &IntegerChainComplex, g: &[i64], h: &[i64]) -> Result<bool> {
    verify_torsion_witness_of_order(c, g, h, 2)
}

pub fn verify_torsion_witness_of_order(
    c: &IntegerChainComplex,
    g: &[i64],
    h: &[i64],
    order: i64,
) -> Result<bool> {
    let (d1, d2) = match (c.boundary_ref(1), c.boundary_ref(2)) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(Error::Precondition("witness needs d_1 and d_2".into())),
    };
    if g.len() != c.dims[2] || h.len() != c.dims[1] {
        return Err(Error::Domain(format!(
            "witness has lengths ({}, {}), chain groups have ranks ({}, {})",
            g.len(),
            h.len(),
            c.dims[2],
            c.dims[1]
        )));
    }
    let dg = d2.mul_vec(g);
    if dg.iter().zip(h).any(|(&a, &b)| a != order * b) {
        return Ok(false);
    }
    if d1.mul_vec(h).iter().any(|&x| x != 0) {
        return Ok(false);
    }
    Ok(!in_integer_column_span(d2, h))
}

/// Parse `"X_2^1 - X_7^2 + 2W_{49}"` style chains against basis labels.
/// Braces are ignored on both sides.
pub fn parse_chain(text: &str, labels: &[String]) -> Result<Vec<i64>> {
    let norm = |s: &str| s.replace(['{', '}', ' '], "");
    let names: Vec<String> = labels.iter().map(|l| norm(l)).collect();
    let mut v = vec![0i64; labels.len()];
    let compact = norm(text);
    if compact.is_empty() || compact == "0" {
        return Ok(v);
    }
    let mut terms = Vec::new();
    let mut cur = String::new();
    for ch in compact.chars() {
        if (ch == '+' || ch == '-') && !cur.is_empty() && !cur.ends_with('^') {
            terms.push(std::mem::take(&mut cur));
        }
        cur.push(ch);
    }
    terms.push(cur);
    for t in terms {
        let (sign, body) = match t.strip_prefix('-') {
            Some(b) => (-1, b),
            None => (1, t.strip_prefix('+').unwrap_or(&t)),
        };
        let digits: String = body.chars().take_while(|c| c.is_ascii_digit()).collect();
        let coeff: i64 = if digits.is_empty() { 1 } else { digits.parse().unwrap() };
        let name = &body[digits.len()..];
        let k = names
            .iter()
            .position(|l| l == name)
            .ok_or_else(|| Error::Domain(format!("unknown generator {name}")))?;
        v[k] += sign * coeff;
    }
    Ok(v)
}

/// Render an integer vector as a signed sum of labels.
pub fn format_chain(v: &[i64], labels: &[String]) -> String {
    let mut out = String::new();
    for (k, &c) in v.iter().enumerate() {
        if c == 0 {
            continue;
        }
        if out.is_empty() {
            if c < 0 {
                out.push('-');
            }
        } else {
            out.push_str(if c < 0 { " - " } else { " + " });
        }
        if c.abs() != 1 {
            out.push_str(&c.abs().to_string());
        }
        out.push_str(&labels[k]);
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

/// Integer vectors in `ker d_1` whose classes form a basis of `H_1 (x) Q`,
/// in reduced form: the rows of the reduced echelon form of
/// `ker d_1 + im d_2` (columns in basis order) whose pivots are not pivots of
/// `im d_2`, each scaled to a primitive integer vector.
pub fn homology_generators(c: &IntegerChainComplex) -> Result<Vec<Vec<i64>>> {
    let (d1, d2) = match (c.boundary_ref(1), c.boundary_ref(2)) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(Error::Precondition("generators need d_1 and d_2".into())),
    };
    let image: Vec<Vec<BigInt>> = (0..d2.cols())
        .map(|j| {
            let mut v = vec![BigInt::zero(); d2.rows()];
            for &(r, x) in d2.column(j) {
                v[r as usize] = BigInt::from(x);
            }
            v
        })
        .collect();
    let (_, image_pivots) = integer_rref(image.clone());
    let mut rows = image;
    rows.extend(
        integer_kernel(d1)
            .into_iter()
            .map(|v| v.into_iter().map(BigInt::from).collect()),
    );
    let (reduced, pivots) = integer_rref(rows);
    reduced
        .into_iter()
        .zip(pivots)
        .filter(|(_, p)| !image_pivots.contains(p))
        .map(|(row, _)| {
            row.iter()
                .map(|x| {
                    x.to_i64()
                        .ok_or_else(|| Error::Capacity("generator coefficient exceeds 64 bits".into()))
                })
                .collect()
        })
        .collect()
}

/// Reduced row echelon form over the rationals, each row stored as a
/// primitive integer vector with positive pivot. Returns the nonzero rows and
/// their pivot columns.
fn integer_rref(mut rows: Vec<Vec<BigInt>>) -> (Vec<Vec<BigInt>>, Vec<usize>) {
    let cols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut done = 0;
    for col in 0..cols {
        let Some(k) = (done..rows.len()).find(|&k| !rows[k][col].is_zero()) else {
            continue;
        };
        rows.swap(done, k);
        let piv = rows[done].clone();
        for (k, row) in rows.iter_mut().enumerate() {
            if k == done || row[col].is_zero() {
                continue;
            }
            let a = piv[col].clone();
            let b = row[col].clone();
            for (x, y) in row.iter_mut().zip(&piv) {
                *x = &*x * &a - &b * y;
            }
            primitive(row);
        }
        primitive(&mut rows[done]);
        pivots.push(col);
        done += 1;
    }
    rows.truncate(done);
    (rows, pivots)
}

fn primitive(row: &mut [BigInt]) {
    let g = row.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() {
        return;
    }
    let lead_negative = row.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
    let g = if lead_negative { -g } else { g };
    for x in row.iter_mut() {
        *x = &*x / &g;
    }
}

/// A basis of the integer kernel of `m`, by column reduction of `[m; I]`.
pub fn integer_kernel(m: &SparseMatrix) -> Vec<Vec<i64>> {
    let rows = m.rows();
    let cols = m.cols();
    let mut a: Vec<Vec<BigInt>> = (0..cols)
        .map(|j| {
            let mut v = vec![BigInt::from(0); rows + cols];
            for &(r, x) in m.column(j) {
                v[r as usize] = BigInt::from(x);
            }
            v[rows + j] = BigInt::from(1);
            v
        })
        .collect();
    let mut done = vec![false; cols];
    for r in 0..rows {
        loop {
            let nz: Vec<usize> = (0..cols).filter(|&j| !done[j] && !a[j][r].is_zero()).collect();
            if nz.len() <= 1 {
                if let Some(&p) = nz.first() {
                    done[p] = true;
                }
                break;
            }
            let p = *nz.iter().min_by_key(|&&j| a[j][r].abs()).unwrap();
            let pc = a[p].clone();
            for &j in &nz {
                if j != p {
                    let q = a[j][r].div_floor(&pc[r]);
                    for (x, y) in a[j].iter_mut().zip(&pc) {
                        if !y.is_zero() {
                            *x -= &q * y;
                        }
                    }
                }
            }
        }
    }
    a.into_iter()
        .zip(done)
        .filter(|(v, d)| !d && v[..rows].iter().all(Zero::is_zero))
        .map(|(v, _)| v[rows..].iter().map(|x| x.to_i64().expect("kernel entry fits")).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{build_full_complex, build_restricted_complex};
    use crate::graph::Graph;

    #[test]
    fn triangle() {
        let c = build_full_complex(&Graph::complete(3), None).unwrap();
        let h = homology(&c).unwrap();
        assert_eq!(h[0], HomologyGroup { degree: 0, free_rank: 1, torsion: vec![] });
        assert_eq!(h[1].free_rank, 2);
        assert!(h[1].torsion.is_empty());
        assert!(h[2].is_zero() && h[3].is_zero());
        let lambda = Partition::new(vec![2, 1]).unwrap();
        assert_eq!(isotype_multiplicities(&c, &lambda).unwrap(), vec![0, 1, 0, 0]);
    }

    #[test]
    fn triangle_generator() {
        let c = build_restricted_complex(&Graph::complete(3), &Partition::new(vec![2, 1]).unwrap())
            .unwrap();
        let gens = homology_generators(&c).unwrap();
        assert_eq!(gens, vec![vec![1, 1, 1]]);
        assert_eq!(format_chain(&gens[0], &c.labels[1]), "X_1 + X_2 + X_3");
    }

    #[test]
    fn chain_parsing() {
        let labels: Vec<String> = ["X_1^1", "X_1^2", "W_{1a}"].iter().map(|s| s.to_string()).collect();
        assert_eq!(parse_chain("X_1^1 - 2W_{1a}", &labels).unwrap(), vec![1, 0, -2]);
        assert_eq!(parse_chain("-X_1^2+W_1a", &labels).unwrap(), vec![0, -1, 1]);
        assert!(parse_chain("X_9", &labels).is_err());
    }

    #[test]
    fn kernel_basis() {
        let m = SparseMatrix::from_dense(&[vec![1, 1, 0], vec![0, 0, 2]]);
        assert_eq!(integer_kernel(&m), vec![vec![-1, 1, 0]]);
    }
}
