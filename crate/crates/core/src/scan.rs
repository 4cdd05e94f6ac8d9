//! Corpus scans for the torsion/planarity conjecture, and the
//! homology-profile conjecture checks.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cache::{cache_key, cached, Cache};
use crate::complex::build_full_complex_capped;
use crate::error::{Error, Result};
use crate::graph::{encode_graph6, Graph};
use crate::homology::{homology, rank_q_fast, torsion_signature_fast, HomologyGroup};
use crate::snf::smith_normal_form;

/// Default cap on the total number of basis elements of a full complex.
pub const DEFAULT_BUDGET: usize = 200_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Consistent,
    Counterexample,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Consistent => "consistent",
            Verdict::Counterexample => "counterexample",
        })
    }
}

/// One scanned graph. The free rank and torsion count refer to the scanned
/// degree and prime (by default `H_1` and `p = 2`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRecord {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub planar: bool,
    pub h1_free: usize,
    pub h1_2torsion: usize,
    pub verdict: Verdict,
    /// Whether the torsion count was confirmed by a full Smith form.
    pub confirmed: bool,
}

impl ScanRecord {
    pub fn csv_header(prime: u64, degree: usize) -> String {
        format!("graph6,n,m,planar,h{degree}_free,h{degree}_{prime}torsion,verdict")
    }

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{}",
            self.graph6, self.n, self.m, self.planar, self.h1_free, self.h1_2torsion, self.verdict
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScanOptions {
    pub prime: u64,
    pub degree: usize,
    pub budget: usize,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions {
            prime: 2,
            degree: 1,
            budget: DEFAULT_BUDGET,
        }
    }
}

/// Scan one graph: fast rank drop modulo `p` for the torsion count, then a
/// full Smith form of the relevant boundaries whenever torsion is found.
pub fn scan_graph(g: &Graph, opts: &ScanOptions, cache: Option<&Cache>) -> Result<ScanRecord> {
    let key = cache_key("scan", &format!("p{}-i{}", opts.prime, opts.degree), g);
    cached(cache, &key, || scan_uncached(g, opts))
}

fn scan_uncached(g: &Graph, opts: &ScanOptions) -> Result<ScanRecord> {
    let i = opts.degree;
    let planar = g.is_planar();
    let record = |free, torsion, confirmed| ScanRecord {
        graph6: encode_graph6(g),
        n: g.n(),
        m: g.m(),
        planar,
        h1_free: free,
        h1_2torsion: torsion,
        verdict: if planar == (torsion == 0) {
            Verdict::Consistent
        } else {
            Verdict::Counterexample
        },
        confirmed,
    };
    if i > g.m() {
        // C_i = 0.
        return Ok(record(0, 0, true));
    }
    let c = build_full_complex_capped(g, Some(i + 1), opts.budget)?;
    let d_in = c.boundary(i).expect("built");
    let d_out = c.boundary(i + 1).expect("built");
    let mut torsion = torsion_signature_fast(&c, opts.prime, i)?;
    let mut free = c.dims[i] - rank_q_fast(&d_in) - rank_q_fast(&d_out);
    let mut confirmed = false;
    if torsion > 0 {
        let s_out = smith_normal_form(&d_out);
        let s_in = smith_normal_form(&d_in);
        let exact_torsion = s_out.count_divisible(opts.prime);
        let exact_free = c.dims[i] - s_in.rank - s_out.rank;
        if (exact_torsion, exact_free) != (torsion, free) {
            return Err(Error::Consistency(format!(
                "fast path gave free {free}, torsion {torsion}; Smith form gives {exact_free}, {exact_torsion}"
            )));
        }
        torsion = exact_torsion;
        free = exact_free;
        confirmed = true;
    }
    Ok(record(free, torsion, confirmed))
}

/// Scan many graphs in parallel; results keep the input order.
pub fn scan_graphs(
    graphs: &[Graph],
    opts: &ScanOptions,
    cache: Option<&Cache>,
) -> Vec<Result<ScanRecord>> {
    graphs.par_iter().map(|g| scan_graph(g, opts, cache)).collect()
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanSummary {
    pub graphs: usize,
    pub with_torsion: usize,
    pub nonplanar: usize,
    pub counterexamples: usize,
    pub errors: usize,
}

impl ScanSummary {
    pub fn of(results: &[Result<ScanRecord>]) -> ScanSummary {
        let mut s = ScanSummary::default();
        for r in results {
            match r {
                Ok(rec) => {
                    s.graphs += 1;
                    s.with_torsion += (rec.h1_2torsion > 0) as usize;
                    s.nonplanar += (!rec.planar) as usize;
                    s.counterexamples += (rec.verdict == Verdict::Counterexample) as usize;
                }
                Err(_) => s.errors += 1,
            }
        }
        s
    }
}

// ---------------------------------------------------------------------------
// conjecture checks

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureReport {
    pub graph6: String,
    pub n: usize,
    pub blocks: usize,
    pub span: usize,
    pub homology: Vec<HomologyGroup>,
    pub checks: Vec<Check>,
}

/// Whether `g` is the cycle on its vertex set.
pub fn is_cycle(g: &Graph) -> bool {
    g.n() >= 3 && g.m() == g.n() && g.is_connected() && (1..=g.n()).all(|v| g.degree(v) == 2)
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// `k + 1` for the largest `k` with `H_k != 0`.
pub fn span0(h: &[HomologyGroup]) -> usize {
    h.iter().rposition(|g| !g.is_zero()).map_or(0, |k| h[k].degree + 1)
}

/// Free ranks rise weakly, then fall weakly.
pub fn is_unimodal(ranks: &[usize]) -> bool {
    if ranks.is_empty() {
        return true;
    }
    let peak = ranks
        .iter()
        .enumerate()
        .max_by_key(|&(k, &r)| (r, std::cmp::Reverse(k)))
        .map_or(0, |(k, _)| k);
    ranks[..=peak].windows(2).all(|w| w[0] <= w[1])
        && ranks[peak..].windows(2).all(|w| w[0] >= w[1])
}

fn check(name: &str, ok: bool, detail: String) -> Check {
    Check {
        name: name.into(),
        status: if ok { Status::Pass } else { Status::Fail },
        detail,
    }
}

/// Evaluate the homology-profile conjectures on a complete homology list.
///
/// The cycle formula is tested in the range `0 <= i <= n - 2` with `H_i = 0`
/// above: at `i = n - 1` the binomial formula contradicts the Euler
/// characteristic of the chain complex.
pub fn evaluate_conjectures(g: &Graph, h: &[HomologyGroup]) -> ConjectureReport {
    let n = g.n();
    let blocks = g.block_count();
    let span = span0(h);
    let free: Vec<usize> = h.iter().map(|x| x.free_rank).collect();
    let mut checks = Vec::new();
    if is_cycle(g) {
        let ok = h.iter().all(|x| {
            let want = if x.degree + 1 < n { binomial(n - 1, x.degree) } else { 0 };
            x.torsion.is_empty() && x.free_rank == want
        });
        checks.push(check("cycle_ranks", ok, format!("free ranks {free:?}")));
    } else {
        checks.push(Check {
            name: "cycle_ranks".into(),
            status: Status::Skip,
            detail: "not a cycle".into(),
        });
    }
    let gaps: Vec<usize> = h[..span.min(h.len())]
        .iter()
        .filter(|x| x.free_rank == 0)
        .map(|x| x.degree)
        .collect();
    checks.push(check(
        "nonvanishing",
        gaps.is_empty(),
        if gaps.is_empty() {
            format!("H_i(G;Q) != 0 for 0 <= i < {span}")
        } else {
            format!("rational homology vanishes in degrees {gaps:?}")
        },
    ));
    let lower = n.saturating_sub(blocks);
    checks.push(check(
        "span_bounds",
        lower <= span && span < n,
        format!("n - b = {lower}, span = {span}, n - 1 = {}", n as i64 - 1),
    ));
    let head = &free[..span.min(free.len())];
    checks.push(check("unimodal", is_unimodal(head), format!("free ranks {head:?}")));
    ConjectureReport {
        graph6: encode_graph6(g),
        n,
        blocks,
        span,
        homology: h.to_vec(),
        checks,
    }
}

/// Complete homology (through the top degree) under the size budget.
pub fn full_homology(g: &Graph, budget: usize, cache: Option<&Cache>) -> Result<Vec<HomologyGroup>> {
    let key = cache_key("homology", "full", g);
    cached(cache, &key, || {
        let c = build_full_complex_capped(g, None, budget)?;
        homology(&c)
    })
}

pub fn conjecture_report(g: &Graph, budget: usize, cache: Option<&Cache>) -> Result<ConjectureReport> {
    Ok(evaluate_conjectures(g, &full_homology(g, budget, cache)?))
}
