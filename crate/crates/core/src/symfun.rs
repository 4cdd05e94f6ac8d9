//! Characters of the symmetric group and the chromatic symmetric function in
//! the Schur basis.

use std::collections::{BTreeMap, HashMap};
use std::sync::{OnceLock, RwLock};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{components_of, Graph};
use crate::tableau::{kostka, partitions, Partition};

type CharKey = (Vec<usize>, Vec<usize>);

fn char_memo() -> &'static RwLock<HashMap<CharKey, i64>> {
    static MEMO: OnceLock<RwLock<HashMap<CharKey, i64>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// `chi^lambda` on the class of cycle type `mu`, by removing border strips
/// of length `mu_1` recursively.
pub fn mn_character(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.n() != mu.n() {
        return Err(Error::Domain(format!(
            "character of {lambda} on class {mu}: sizes differ"
        )));
    }
    Ok(character(lambda.parts(), mu.parts()))
}

fn character(lambda: &[usize], mu: &[usize]) -> i64 {
    if mu.is_empty() {
        return 1;
    }
    let key = (lambda.to_vec(), mu.to_vec());
    if let Some(&v) = char_memo().read().unwrap().get(&key) {
        return v;
    }
    let r = mu[0];
    let rest = &mu[1..];
    // Beta set: beta_i = lambda_i + (len - 1 - i), strictly decreasing.
    let len = lambda.len();
    let beta: Vec<usize> = (0..len).map(|i| lambda[i] + len - 1 - i).collect();
    let mut total = 0;
    for i in 0..len {
        if beta[i] < r {
            continue;
        }
        let target = beta[i] - r;
        if beta.contains(&target) {
            continue;
        }
        let height = beta.iter().filter(|&&b| b > target && b < beta[i]).count();
        let mut nb = beta.clone();
        nb[i] = target;
        nb.sort_unstable_by(|a, b| b.cmp(a));
        let shape: Vec<usize> = (0..len)
            .map(|k| nb[k] - (len - 1 - k))
            .filter(|&p| p > 0)
            .collect();
        let sign = if height % 2 == 0 { 1 } else { -1 };
        total += sign * character(&shape, rest);
    }
    char_memo().write().unwrap().insert(key, total);
    total
}

/// Character table of `S_n`: rows indexed by `partitions(n)` (irreducibles),
/// columns by `partitions(n)` (classes).
pub fn character_table(n: usize) -> Vec<Vec<i64>> {
    let ps = partitions(n);
    ps.iter()
        .map(|l| ps.iter().map(|m| character(l.parts(), m.parts())).collect())
        .collect()
}

/// Size of the conjugacy class of cycle type `mu`.
pub fn class_size(mu: &Partition) -> u128 {
    let n = mu.n();
    let mut denom: u128 = 1;
    let mut counts: BTreeMap<usize, u32> = BTreeMap::new();
    for &p in mu.parts() {
        denom *= p as u128;
        *counts.entry(p).or_default() += 1;
    }
    for &c in counts.values() {
        denom *= (1..=c as u128).product::<u128>();
    }
    (1..=n as u128).product::<u128>() / denom
}

/// A symmetric function of degree `n` in the Schur basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurExpansion {
    pub n: usize,
    pub coeffs: BTreeMap<Partition, i64>,
}

#[derive(Serialize, Deserialize)]
struct SchurTerm {
    shape: Vec<usize>,
    coeff: i64,
}

#[derive(Serialize, Deserialize)]
struct SchurJson {
    n: usize,
    terms: Vec<SchurTerm>,
}

impl Serialize for SchurExpansion {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.json_form().serialize(s)
    }
}

impl SchurExpansion {
    pub fn coeff(&self, lambda: &[usize]) -> i64 {
        Partition::new(lambda.to_vec())
            .ok()
            .and_then(|p| self.coeffs.get(&p).copied())
            .unwrap_or(0)
    }

    fn json_form(&self) -> SchurJson {
        SchurJson {
            n: self.n,
            terms: self
                .coeffs
                .iter()
                .map(|(p, &c)| SchurTerm {
                    shape: p.parts().to_vec(),
                    coeff: c,
                })
                .collect(),
        }
    }

    /// `{"n":..,"terms":[{"shape":[..],"coeff":..},..]}`, shapes in
    /// increasing lexicographic order, zero terms omitted.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.json_form()).unwrap()
    }

    pub fn from_json(text: &str) -> Result<SchurExpansion> {
        let j: SchurJson = serde_json::from_str(text)?;
        let mut coeffs = BTreeMap::new();
        for t in j.terms {
            coeffs.insert(Partition::new(t.shape)?, t.coeff);
        }
        Ok(SchurExpansion { n: j.n, coeffs })
    }

    /// Value at `x_1 = ... = x_k = 1`, the rest zero. For a chromatic
    /// symmetric function this counts proper `k`-colorings.
    pub fn principal_specialization(&self, k: usize) -> i128 {
        let mut total: i128 = 0;
        for (lambda, &c) in &self.coeffs {
            let mut s: i128 = 0;
            for mu in partitions(self.n) {
                let kk = kostka(lambda, &mu).unwrap() as i128;
                if kk != 0 {
                    s += kk * monomial_at_ones(&mu, k);
                }
            }
            total += c as i128 * s;
        }
        total
    }
}

/// `m_mu(1^k)`: distinct arrangements of `mu` padded with zeros to length `k`.
pub fn monomial_at_ones(mu: &Partition, k: usize) -> i128 {
    let l = mu.len();
    if l > k {
        return 0;
    }
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for &p in mu.parts() {
        *counts.entry(p).or_default() += 1;
    }
    counts.insert(0, k - l);
    let mut r: i128 = (1..=k as i128).product();
    for &c in counts.values() {
        r /= (1..=c as i128).product::<i128>();
    }
    r
}

/// Signed count `sum_{S subset E, type(S) = mu} (-1)^|S|` for each type.
pub fn signed_type_counts(g: &Graph) -> BTreeMap<Partition, i64> {
    let m = g.m();
    let total: u64 = 1u64 << m;
    let chunk = 1u64 << m.min(12);
    let parts: Vec<HashMap<Vec<usize>, i64>> = (0..total.div_ceil(chunk))
        .into_par_iter()
        .map(|c| {
            let mut local = HashMap::new();
            for mask in c * chunk..((c + 1) * chunk).min(total) {
                let f = components_of(g, mask);
                let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
                *local.entry(f.shape()).or_insert(0) += sign;
            }
            local
        })
        .collect();
    let mut out: BTreeMap<Partition, i64> = BTreeMap::new();
    for local in parts {
        for (shape, c) in local {
            *out.entry(Partition::from_unsorted(shape)).or_insert(0) += c;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// Chromatic symmetric function in the Schur basis via the edge-subset
/// power-sum expansion and `<p_mu, s_lambda> = chi^lambda(mu)`.
pub fn csf_schur(g: &Graph) -> Result<SchurExpansion> {
    if g.n() > 10 {
        return Err(Error::Capacity(format!("csf_schur needs n <= 10, got {}", g.n())));
    }
    let types = signed_type_counts(g);
    let mut coeffs = BTreeMap::new();
    for lambda in partitions(g.n()) {
        let c: i64 = types
            .iter()
            .map(|(mu, &k)| k * character(lambda.parts(), mu.parts()))
            .sum();
        if c != 0 {
            coeffs.insert(lambda, c);
        }
    }
    Ok(SchurExpansion { n: g.n(), coeffs })
}

/// Monomial coefficients from proper colorings using at most `bound` colors:
/// the coefficient of `m_mu` is the number of proper colorings in which
/// color `i` is used exactly `mu_i` times. Only `mu` with at most `bound`
/// parts are reported.
pub fn csf_from_colorings(g: &Graph, bound: usize) -> Result<BTreeMap<Partition, i64>> {
    if g.n() > 7 || bound > g.n().max(1) {
        return Err(Error::Capacity("coloring oracle needs n <= 7 and bound <= n".into()));
    }
    let n = g.n();
    let adj = g.neighbours();
    let mut colors = vec![0usize; n + 1];
    let mut tally: HashMap<Vec<usize>, i64> = HashMap::new();
    fn rec(
        v: usize,
        n: usize,
        bound: usize,
        adj: &[Vec<usize>],
        colors: &mut Vec<usize>,
        tally: &mut HashMap<Vec<usize>, i64>,
    ) {
        if v > n {
            let mut counts = vec![0usize; bound];
            for &c in &colors[1..] {
                counts[c] += 1;
            }
            *tally.entry(counts).or_insert(0) += 1;
            return;
        }
        for c in 0..bound {
            if adj[v].iter().all(|&u| u > v || colors[u] != c) {
                colors[v] = c;
                rec(v + 1, n, bound, adj, colors, tally);
            }
        }
    }
    if n > 0 && bound > 0 {
        rec(1, n, bound, &adj, &mut colors, &mut tally);
    }
    let mut out = BTreeMap::new();
    for (counts, c) in tally {
        // Keep only weakly decreasing count vectors: these are the m_mu
        // coefficients.
        if counts.windows(2).all(|w| w[0] >= w[1]) {
            let mu = Partition::from_unsorted(counts);
            out.insert(mu, c);
        }
    }
    Ok(out)
}

/// Convert monomial coefficients to Schur coefficients with the
/// unitriangular Kostka matrix.
pub fn monomial_to_schur(n: usize, mono: &BTreeMap<Partition, i64>) -> SchurExpansion {
    let ps = partitions(n);
    let mut coeffs: BTreeMap<Partition, i64> = BTreeMap::new();
    for lambda in &ps {
        let mut c = mono.get(lambda).copied().unwrap_or(0);
        for (nu, &d) in &coeffs {
            c -= d * kostka(nu, lambda).unwrap() as i64;
        }
        if c != 0 {
            coeffs.insert(lambda.clone(), c);
        }
    }
    SchurExpansion { n, coeffs }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn small_characters() {
        assert_eq!(mn_character(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), 2);
        assert_eq!(mn_character(&p(&[2, 1]), &p(&[3])).unwrap(), -1);
        assert_eq!(mn_character(&p(&[1, 1, 1]), &p(&[2, 1])).unwrap(), -1);
        assert_eq!(mn_character(&p(&[3, 1]), &p(&[2, 2])).unwrap(), -1);
        assert!(mn_character(&p(&[2]), &p(&[1])).is_err());
    }

    #[test]
    fn single_edge() {
        let g = Graph::complete(2);
        let x = csf_schur(&g).unwrap();
        assert_eq!(x.coeffs.len(), 1);
        assert_eq!(x.coeff(&[1, 1]), 2);
    }

    #[test]
    fn triangle_colorings() {
        let x = csf_schur(&Graph::complete(3)).unwrap();
        assert_eq!(x.principal_specialization(3), 6);
        let mono = csf_from_colorings(&Graph::complete(3), 3).unwrap();
        assert_eq!(monomial_to_schur(3, &mono), x);
    }

    #[test]
    fn json_round_trip() {
        let x = csf_schur(&Graph::cycle(4)).unwrap();
        assert_eq!(SchurExpansion::from_json(&x.to_json()).unwrap(), x);
    }
}
