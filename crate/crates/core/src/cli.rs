//! The `csh` command line.

use std::io::{BufRead, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::cache::{cache_key, cached, Cache};
use crate::complex::{build_full_complex_capped, build_restricted_complex_with, GeneratorOrder, RestrictedGenerators};
use crate::corpus;
use crate::error::{Error, Result};
use crate::graph::{builtin, family_base, orellana_scott_pair, parse_edge_list, parse_graph6, Graph, BUILTIN_NAMES, FAMILY_QUAD};
use crate::homology::{betti_mod_p, format_chain, homology, homology_generators, rank_q_fast, torsion_signature_fast, HomologyGroup, HomologySignature};
use crate::scan::{conjecture_report, scan_graphs, ConjectureReport, ScanOptions, ScanRecord, ScanSummary, Status, DEFAULT_BUDGET};
use crate::snf::rank_q;
use crate::symfun::csf_schur;
use crate::tableau::Partition;

/// Vertex cap for full homology from the command line.
pub const CLI_MAX_VERTICES: usize = 7;

#[derive(Parser, Debug)]
#[command(name = "csh", version, about = "Chromatic symmetric homology of graphs in q-degree zero")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Result cache directory; the CSH_CACHE environment variable overrides it.
    #[arg(long, global = true)]
    pub cache: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Args, Debug, Clone, Default)]
#[group(required = false, multiple = false)]
pub struct GraphInput {
    /// A builtin graph (K1-K6, K33, C3-C7, star4-star7, G1-G8).
    #[arg(long)]
    pub builtin: Option<String>,
    /// A graph6 string.
    #[arg(long)]
    pub g6: Option<String>,
    /// Edge-list file: `n` on the first line, then `i j` per line.
    #[arg(long)]
    pub edges: Option<PathBuf>,
}

impl GraphInput {
    pub fn is_given(&self) -> bool {
        self.builtin.is_some() || self.g6.is_some() || self.edges.is_some()
    }

    pub fn load(&self) -> Result<Graph> {
        if let Some(name) = &self.builtin {
            return builtin(name).ok_or_else(|| {
                Error::Domain(format!("unknown builtin {name}; known: {}", BUILTIN_NAMES.join(", ")))
            });
        }
        if let Some(s) = &self.g6 {
            return parse_graph6(s);
        }
        if let Some(path) = &self.edges {
            return parse_edge_list(&std::fs::read_to_string(path)?);
        }
        Err(Error::Domain("no graph given: use --builtin, --g6 or --edges".into()))
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Integral homology of the full complex.
    Homology {
        #[command(flatten)]
        graph: GraphInput,
        /// Build only C_0..C_D (reports H_0..H_{D-1}).
        #[arg(long)]
        max_degree: Option<usize>,
        /// Largest total basis size of the full complex.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
        /// Count p-torsion by rank drop modulo P instead of Smith forms.
        #[arg(long, value_name = "P")]
        fast_torsion: Option<u64>,
        /// Also report Betti numbers over GF(P).
        #[arg(long, value_name = "P")]
        prime: Option<u64>,
        /// Only this degree.
        #[arg(long)]
        degree: Option<usize>,
    },
    /// The complex restricted to copies of a two-column Specht module.
    Restrict {
        #[command(flatten)]
        graph: GraphInput,
        /// Shape as comma-separated parts, e.g. 2,2,1,1.
        #[arg(long)]
        shape: String,
        /// Generator order within each summand.
        #[arg(long, value_enum, default_value_t = Order::Numbering)]
        order: Order,
        /// Write d1/d2 as MatrixMarket plus label files into DIR.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Print the labeled matrices.
        #[arg(long)]
        matrices: bool,
    },
    /// Chromatic symmetric function in the Schur basis.
    Csf {
        #[command(flatten)]
        graph: GraphInput,
    },
    /// Torsion/planarity scan over a graph6 file (one graph per line, `-` for stdin).
    Scan {
        file: PathBuf,
        #[arg(long, default_value_t = 2)]
        prime: u64,
        #[arg(long, default_value_t = 1)]
        degree: usize,
        /// Exit nonzero when a counterexample is found.
        #[arg(long)]
        strict: bool,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Build an Orellana-Scott pair and compare the two sides.
    Family {
        /// Base graph (default: the builtin G7/G8 base).
        #[command(flatten)]
        graph: GraphInput,
        /// Vertices u,v,w,z.
        #[arg(long, value_name = "U,V,W,Z")]
        quad: Option<String>,
        /// Write first.g6 and second.g6 into DIR.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate the homology-profile conjectures.
    Conjectures {
        #[command(flatten)]
        graph: GraphInput,
        /// graph6 file to evaluate instead of a single graph.
        #[arg(long)]
        corpus: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Print connected graphs (or trees) up to isomorphism in graph6.
    Corpus {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[arg(long)]
        trees: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Order {
    Numbering,
    RowWord,
}

/// Outcome of a command: text for stdout and the exit code.
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Outcome {
        Outcome { stdout, code: 0 }
    }
}

fn to_json<T: Serialize>(v: &T) -> Result<String> {
    Ok(serde_json::to_string(v)? + "\n")
}

fn check_size(g: &Graph) -> Result<()> {
    if g.n() > CLI_MAX_VERTICES {
        return Err(Error::Capacity(format!(
            "full homology is limited to n <= {CLI_MAX_VERTICES} (got n = {}); larger graphs need \
             the broken-circuit or discrete Morse reductions, which are out of scope",
            g.n()
        )));
    }
    Ok(())
}

#[derive(Serialize, serde::Deserialize)]
struct FastGroup {
    i: usize,
    free: usize,
    p_torsion: usize,
}

#[derive(Serialize)]
struct FastSignature {
    graph: Vec<[usize; 2]>,
    prime: u64,
    #[serde(rename = "H")]
    groups: Vec<FastGroup>,
}

#[derive(Serialize)]
struct BettiReport {
    graph: Vec<[usize; 2]>,
    prime: u64,
    betti: Vec<usize>,
}

fn cmd_homology(
    g: &Graph,
    max_degree: Option<usize>,
    budget: usize,
    fast_torsion: Option<u64>,
    prime: Option<u64>,
    degree: Option<usize>,
    format: Format,
    cache: Option<&Cache>,
) -> Result<String> {
    check_size(g)?;
    let max_degree = match (max_degree, degree) {
        (Some(d), _) => Some(d),
        (None, Some(i)) => Some(i + 1),
        (None, None) => None,
    };
    let keep = |i: usize| degree.map_or(true, |d| d == i);
    let params = format!("max{}", max_degree.map_or("all".to_string(), |d| d.to_string()));
    if let Some(p) = fast_torsion {
        let key = cache_key("fast", &format!("{params}-p{p}"), g);
        let groups: Vec<FastGroup> = cached(cache, &key, || {
            let c = build_full_complex_capped(g, max_degree, budget)?;
            c.homology_degrees()
                .map(|i| {
                    let r = |k: usize| c.boundary(k).map_or(0, |d| rank_q_fast(&d));
                    Ok(FastGroup {
                        i,
                        free: c.dims[i] - r(i) - r(i + 1),
                        p_torsion: torsion_signature_fast(&c, p, i)?,
                    })
                })
                .collect()
        })?;
        let groups = groups.into_iter().filter(|h| keep(h.i)).collect::<Vec<_>>();
        return match format {
            Format::Json => to_json(&FastSignature {
                graph: g.edge_list(),
                prime: p,
                groups,
            }),
            Format::Csv => Ok(std::iter::once(format!("i,free,{p}_torsion\n"))
                .chain(groups.iter().map(|h| format!("{},{},{}\n", h.i, h.free, h.p_torsion)))
                .collect()),
        };
    }
    let key = cache_key("homology", &params, g);
    let groups: Vec<HomologyGroup> = cached(cache, &key, || {
        let c = build_full_complex_capped(g, max_degree, budget)?;
        homology(&c)
    })?;
    let groups: Vec<HomologyGroup> = groups.into_iter().filter(|h| keep(h.degree)).collect();
    let mut out = match format {
        Format::Json => to_json(&HomologySignature {
            graph: g.edge_list(),
            groups: groups.clone(),
        })?,
        Format::Csv => std::iter::once("i,free,torsion\n".to_string())
            .chain(groups.iter().map(|h| {
                let t: Vec<String> = h.torsion.iter().map(u64::to_string).collect();
                format!("{},{},{}\n", h.degree, h.free_rank, t.join(" "))
            }))
            .collect(),
    };
    if let Some(p) = prime {
        let c = build_full_complex_capped(g, max_degree, budget)?;
        let betti = c
            .homology_degrees()
            .filter(|&i| keep(i))
            .map(|i| betti_mod_p(&c, p, i))
            .collect::<Result<Vec<_>>>()?;
        out.push_str(&to_json(&BettiReport {
            graph: g.edge_list(),
            prime: p,
            betti,
        })?);
    }
    Ok(out)
}

#[derive(Serialize)]
struct RestrictReport {
    graph: Vec<[usize; 2]>,
    shape: Vec<usize>,
    dims: Vec<usize>,
    ker_d1: usize,
    rank_d2: usize,
    multiplicity: usize,
    generators: Vec<String>,
}

fn render_matrix(title: &str, m: &crate::sparse::SparseMatrix, rows: &[String], cols: &[String]) -> String {
    let mut s = format!("{title} ({} x {})\n", m.rows(), m.cols());
    s.push_str(&format!("{:>8}", ""));
    for c in cols {
        s.push_str(&format!(" {c:>7}"));
    }
    s.push('\n');
    let dense = m.to_dense();
    for (r, row) in dense.iter().enumerate() {
        s.push_str(&format!("{:>8}", rows[r]));
        for v in row {
            s.push_str(&format!(" {v:>7}"));
        }
        s.push('\n');
    }
    s
}

fn cmd_restrict(
    g: &Graph,
    shape: &str,
    order: Order,
    out: Option<&PathBuf>,
    matrices: bool,
    format: Format,
) -> Result<String> {
    let shape = Partition::parse(shape)?;
    if shape.n() != g.n() {
        return Err(Error::Domain(format!("shape {shape} is not a partition of n = {}", g.n())));
    }
    let order = match order {
        Order::Numbering => GeneratorOrder::Numbering,
        Order::RowWord => GeneratorOrder::RowWord,
    };
    let gens = RestrictedGenerators::with_order(g, &shape, order)?;
    let c = build_restricted_complex_with(&gens, g)?;
    c.check()?;
    let d1 = c.boundary_ref(1).expect("d1");
    let d2 = c.boundary_ref(2).expect("d2");
    let rank_d1 = rank_q(d1);
    let rank_d2 = rank_q(d2);
    let ker_d1 = c.dims[1] - rank_d1;
    let multiplicity = ker_d1 - rank_d2;
    let x_labels = c.labels_of(1);
    let generators = if multiplicity > 0 {
        homology_generators(&c)?
            .iter()
            .map(|v| format_chain(v, &x_labels))
            .collect()
    } else {
        Vec::new()
    };
    if let Some(dir) = out {
        std::fs::create_dir_all(dir)?;
        c.dump_boundary(1, dir, "d1")?;
        c.dump_boundary(2, dir, "d2")?;
    }
    let report = RestrictReport {
        graph: g.edge_list(),
        shape: shape.parts().to_vec(),
        dims: c.dims.clone(),
        ker_d1,
        rank_d2,
        multiplicity,
        generators,
    };
    let mut s = match format {
        Format::Json => to_json(&report)?,
        Format::Csv => format!(
            "shape,ker_d1,rank_d2,multiplicity\n{},{},{},{}\n",
            shape.parts().iter().map(usize::to_string).collect::<Vec<_>>().join(" "),
            ker_d1,
            rank_d2,
            multiplicity
        ),
    };
    if matrices {
        s.push_str(&render_matrix("d1", d1, &c.labels_of(0), &x_labels));
        s.push_str(&render_matrix("d2", d2, &x_labels, &c.labels_of(2)));
    }
    Ok(s)
}

fn read_graph6_lines(path: &PathBuf) -> Result<(Vec<Graph>, Vec<String>)> {
    let reader: Box<dyn BufRead> = if path.as_os_str() == "-" {
        Box::new(std::io::BufReader::new(std::io::stdin()))
    } else {
        Box::new(std::io::BufReader::new(std::fs::File::open(path)?))
    };
    let mut graphs = Vec::new();
    let mut warnings = Vec::new();
    for (ln, line) in reader.lines().enumerate() {
        let line = line?;
        let t = line.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        match parse_graph6(t) {
            Ok(g) => graphs.push(g),
            Err(e) => warnings.push(format!("line {}: {e}", ln + 1)),
        }
    }
    Ok((graphs, warnings))
}

#[derive(Serialize)]
struct ScanOutput<'a> {
    records: Vec<&'a ScanRecord>,
    summary: &'a ScanSummary,
}

fn cmd_scan(
    file: &PathBuf,
    opts: &ScanOptions,
    strict: bool,
    format: Format,
    cache: Option<&Cache>,
) -> Result<Outcome> {
    let (graphs, warnings) = read_graph6_lines(file)?;
    for w in &warnings {
        eprintln!("warning: skipped {w}");
    }
    let results = scan_graphs(&graphs, opts, cache);
    let mut summary = ScanSummary::of(&results);
    summary.errors += warnings.len();
    let mut records = Vec::new();
    for (g, r) in graphs.iter().zip(&results) {
        match r {
            Ok(rec) => records.push(rec),
            Err(e) => eprintln!("warning: {}: {e}", g.to_graph6()),
        }
    }
    let stdout = match format {
        Format::Csv => {
            let mut s = ScanRecord::csv_header(opts.prime, opts.degree) + "\n";
            for r in &records {
                s.push_str(&r.csv_row());
                s.push('\n');
            }
            eprintln!(
                "scanned {} graphs: {} with torsion, {} nonplanar, {} counterexamples, {} errors",
                summary.graphs, summary.with_torsion, summary.nonplanar, summary.counterexamples, summary.errors
            );
            s
        }
        Format::Json => to_json(&ScanOutput {
            records,
            summary: &summary,
        })?,
    };
    let code = if strict && summary.counterexamples > 0 { 2 } else { 0 };
    Ok(Outcome { stdout, code })
}

#[derive(Serialize)]
struct FamilySide {
    graph6: String,
    edges: Vec<[usize; 2]>,
    planar: bool,
}

#[derive(Serialize)]
struct FamilyReport {
    base: Vec<[usize; 2]>,
    quad: [usize; 4],
    first: FamilySide,
    second: FamilySide,
    csf_equal: bool,
    csf: crate::symfun::SchurExpansion,
}

fn parse_quad(s: &str) -> Result<[usize; 4]> {
    let v: Vec<usize> = s
        .split(',')
        .map(|x| x.trim().parse().map_err(|_| Error::Domain(format!("bad vertex {x:?} in --quad"))))
        .collect::<Result<_>>()?;
    v.try_into()
        .map_err(|_| Error::Domain("--quad needs exactly four vertices u,v,w,z".into()))
}

fn cmd_family(base: &Graph, quad: [usize; 4], out: Option<&PathBuf>) -> Result<String> {
    let [u, v, w, z] = quad;
    let (a, b) = orellana_scott_pair(base, u, v, w, z)?;
    let (ca, cb) = (csf_schur(&a)?, csf_schur(&b)?);
    let side = |g: &Graph| FamilySide {
        graph6: g.to_graph6(),
        edges: g.edge_list(),
        planar: g.is_planar(),
    };
    let report = FamilyReport {
        base: base.edge_list(),
        quad,
        first: side(&a),
        second: side(&b),
        csf_equal: ca == cb,
        csf: ca.clone(),
    };
    if !report.csf_equal {
        return Err(Error::Consistency("the pair has different chromatic symmetric functions".into()));
    }
    if let Some(dir) = out {
        std::fs::create_dir_all(dir)?;
        std::fs::write(dir.join("first.g6"), a.to_graph6() + "\n")?;
        std::fs::write(dir.join("second.g6"), b.to_graph6() + "\n")?;
    }
    to_json(&report)
}

fn render_reports(reports: &[ConjectureReport], format: Format) -> Result<String> {
    match format {
        Format::Json => to_json(&reports),
        Format::Csv => {
            let mut s = String::from("graph6,n,blocks,span,check,status,detail\n");
            for r in reports {
                for c in &r.checks {
                    let status = match c.status {
                        Status::Pass => "pass",
                        Status::Fail => "fail",
                        Status::Skip => "skip",
                    };
                    s.push_str(&format!(
                        "{},{},{},{},{},{},\"{}\"\n",
                        r.graph6, r.n, r.blocks, r.span, c.name, status, c.detail
                    ));
                }
            }
            Ok(s)
        }
    }
}

fn cmd_conjectures(
    graph: &GraphInput,
    corpus_file: Option<&PathBuf>,
    budget: usize,
    format: Format,
    cache: Option<&Cache>,
) -> Result<String> {
    use rayon::prelude::*;
    let graphs = match corpus_file {
        Some(path) => {
            let (graphs, warnings) = read_graph6_lines(path)?;
            for w in &warnings {
                eprintln!("warning: skipped {w}");
            }
            graphs
        }
        None => vec![graph.load()?],
    };
    let results: Vec<Result<ConjectureReport>> = graphs
        .par_iter()
        .map(|g| {
            check_size(g)?;
            conjecture_report(g, budget, cache)
        })
        .collect();
    let mut reports = Vec::new();
    for (g, r) in graphs.iter().zip(results) {
        match r {
            Ok(rep) => reports.push(rep),
            Err(e) if corpus_file.is_some() => eprintln!("warning: {}: {e}", g.to_graph6()),
            Err(e) => return Err(e),
        }
    }
    render_reports(&reports, format)
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    let cache = Cache::resolve(cli.cache.as_deref());
    let cache = cache.as_ref();
    match &cli.command {
        Command::Homology {
            graph,
            max_degree,
            budget,
            fast_torsion,
            prime,
            degree,
        } => cmd_homology(&graph.load()?, *max_degree, *budget, *fast_torsion, *prime, *degree, cli.format, cache)
            .map(Outcome::ok),
        Command::Restrict {
            graph,
            shape,
            order,
            out,
            matrices,
        } => cmd_restrict(&graph.load()?, shape, *order, out.as_ref(), *matrices, cli.format).map(Outcome::ok),
        Command::Csf { graph } => {
            let g = graph.load()?;
            let key = cache_key("csf", "schur", &g);
            let json: String = cached(cache, &key, || Ok(csf_schur(&g)?.to_json()))?;
            Ok(Outcome::ok(json + "\n"))
        }
        Command::Scan {
            file,
            prime,
            degree,
            strict,
            budget,
        } => {
            let opts = ScanOptions {
                prime: *prime,
                degree: *degree,
                budget: *budget,
            };
            cmd_scan(file, &opts, *strict, cli.format, cache)
        }
        Command::Family { graph, quad, out } => {
            let base = if graph.is_given() { graph.load()? } else { family_base() };
            let quad = match quad {
                Some(q) => parse_quad(q)?,
                None if !graph.is_given() => {
                    let (u, v, w, z) = FAMILY_QUAD;
                    [u, v, w, z]
                }
                None => return Err(Error::Domain("a custom base needs --quad u,v,w,z".into())),
            };
            cmd_family(&base, quad, out.as_ref()).map(Outcome::ok)
        }
        Command::Conjectures { graph, corpus, budget } => {
            cmd_conjectures(graph, corpus.as_ref(), *budget, cli.format, cache).map(Outcome::ok)
        }
        Command::Corpus { max_n, trees } => {
            if !(1..=7).contains(max_n) {
                return Err(Error::Domain("--max-n must be between 1 and 7".into()));
            }
            let graphs = if *trees { corpus::trees(*max_n) } else { corpus::connected_graphs(*max_n) };
            Ok(Outcome::ok(corpus::to_graph6_lines(&graphs)))
        }
    }
}

/// Entry point for the binary; returns the process exit code.
pub fn main() -> i32 {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: {e}");
            return 1;
        }
    }
    match run(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.stdout.as_bytes()).is_err() {
                return 1;
            }
            out.code
        }
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

