//! Simple graphs on the vertex set `1..=n` with a lexicographically ordered
//! edge list, plus the Boolean lattice of spanning subgraphs.
//!
//! Edge subsets are stored as `u64` bitmasks over edge indices, so a graph
//! may have at most 64 edges. Every computation in this crate that walks the
//! whole lattice is far below that bound.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{parse_err, Error, Result};

/// Bitmask over the edge indices of a [`Graph`].
pub type EdgeMask = u64;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Build a graph from unordered vertex pairs. Pairs are normalized to
    /// `(i, j)` with `i < j` and sorted; loops and repeated edges are errors.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
        let mut list = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::InvalidGraph(format!("loop at vertex {a}")));
            }
            let (i, j) = if a < b { (a, b) } else { (b, a) };
            if i < 1 || j > n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({a},{b}) outside vertex range 1..={n}"
                )));
            }
            list.push((i, j));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidGraph(format!(
                "repeated edge ({},{})",
                w[0].0, w[0].1
            )));
        }
        if list.len() > 64 {
            return Err(Error::InvalidGraph(format!(
                "{} edges; at most 64 are supported",
                list.len()
            )));
        }
        Ok(Graph { n, edges: list })
    }

    pub fn complete(n: usize) -> Graph {
        let edges = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j)));
        Graph::new(n, edges).expect("complete graph")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        let edges = (1..n).map(|i| (i, i + 1)).chain(std::iter::once((1, n)));
        Graph::new(n, edges).expect("cycle graph")
    }

    /// The star with `n` vertices, centered at vertex 1.
    pub fn star(n: usize) -> Graph {
        Graph::new(n, (2..=n).map(|j| (1, j))).expect("star graph")
    }

    pub fn complete_bipartite(left: &[usize], right: &[usize]) -> Graph {
        let n = left.iter().chain(right).copied().max().unwrap_or(0);
        let edges = left.iter().flat_map(|&a| right.iter().map(move |&b| (a, b)));
        Graph::new(n, edges).expect("complete bipartite graph")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> (usize, usize) {
        self.edges[index]
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = if u < v { (u, v) } else { (v, u) };
        self.edges.binary_search(&key).ok()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_index(u, v).is_some()
    }

    pub fn full_mask(&self) -> EdgeMask {
        if self.m() == 64 {
            u64::MAX
        } else {
            (1u64 << self.m()) - 1
        }
    }

    /// Neighbour lists, 1-indexed (entry 0 is unused).
    pub fn neighbours(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n + 1];
        for &(i, j) in &self.edges {
            adj[i].push(j);
            adj[j].push(i);
        }
        adj
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(i, j)| i == v || j == v).count()
    }

    /// The same graph with extra edges added.
    pub fn with_edges(&self, extra: &[(usize, usize)]) -> Result<Graph> {
        Graph::new(self.n, self.edges.iter().copied().chain(extra.iter().copied()))
    }

    /// Relabel vertices: vertex `v` becomes `perm[v - 1]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        Graph::new(
            self.n,
            self.edges.iter().map(|&(i, j)| (perm[i - 1], perm[j - 1])),
        )
        .expect("relabeling a valid graph")
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        components_of(self, self.full_mask()).blocks
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Edge list as `[[i, j], ...]`, the canonical JSON form.
    pub fn edge_list(&self) -> Vec<[usize; 2]> {
        self.edges.iter().map(|&(i, j)| [i, j]).collect()
    }

    /// Canonical cache key: vertex count plus the sorted edge list.
    pub fn canonical_key(&self) -> String {
        let mut s = format!("n{}", self.n);
        for &(i, j) in &self.edges {
            s.push_str(&format!("_{i}-{j}"));
        }
        s
    }

    /// Edge-list text format: `n` on the first line, then `i j` per line.
    pub fn to_edge_list_text(&self) -> String {
        let mut s = format!("{}\n", self.n);
        for &(i, j) in &self.edges {
            s.push_str(&format!("{i} {j}\n"));
        }
        s
    }

    /// Number of blocks (maximal 2-connected pieces, bridges included).
    /// Isolated vertices contribute no block.
    pub fn block_count(&self) -> usize {
        biconnected_components(self).len()
    }

    pub fn is_planar(&self) -> bool {
        is_planar(self)
    }

    pub fn to_graph6(&self) -> String {
        encode_graph6(self)
    }
}

impl std::fmt::Display for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "n={} [", self.n)?;
        for (k, (i, j)) in self.edges.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{i}{j}")?;
        }
        write!(f, "]")
    }
}

/// A spanning subgraph: an edge subset together with its component structure.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SpanningSubgraph {
    pub edge_mask: EdgeMask,
    /// Components, each sorted ascending, ordered by size descending and then
    /// by minimum element ascending.
    pub blocks: Vec<Vec<usize>>,
}

impl SpanningSubgraph {
    pub fn shape(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }

    pub fn size(&self) -> usize {
        self.edge_mask.count_ones() as usize
    }
}

/// Order blocks by size descending, then by minimum ascending.
pub fn canonical_block_order(blocks: &mut [Vec<usize>]) {
    for b in blocks.iter_mut() {
        b.sort_unstable();
    }
    blocks.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));
}

pub fn components_of(g: &Graph, edge_mask: EdgeMask) -> SpanningSubgraph {
    let n = g.n();
    let mut parent: Vec<usize> = (0..=n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for (k, &(i, j)) in g.edges().iter().enumerate() {
        if edge_mask >> k & 1 == 1 {
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut groups: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for v in 1..=n {
        let r = find(&mut parent, v);
        groups[r].push(v);
    }
    let mut blocks: Vec<Vec<usize>> = groups.into_iter().filter(|b| !b.is_empty()).collect();
    canonical_block_order(&mut blocks);
    SpanningSubgraph { edge_mask, blocks }
}

/// Sign of removing edge `e` from `F`: `(-1)` to the number of edges of `F`
/// smaller than `e`.
pub fn lattice_sign(edge_mask: EdgeMask, e: usize) -> Result<i64> {
    if e >= 64 || edge_mask >> e & 1 == 0 {
        return Err(Error::Domain(format!("edge {e} is not in the subgraph")));
    }
    let below = edge_mask & ((1u64 << e) - 1);
    Ok(if below.count_ones() % 2 == 0 { 1 } else { -1 })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LatticeEdge {
    pub from: EdgeMask,
    pub to: EdgeMask,
    pub removed_edge: usize,
    pub sign: i64,
}

/// All covering relations `F -> F - e` out of `F`, in increasing edge order.
pub fn lattice_edges(edge_mask: EdgeMask) -> Vec<LatticeEdge> {
    (0..64)
        .filter(|&e| edge_mask >> e & 1 == 1)
        .map(|e| LatticeEdge {
            from: edge_mask,
            to: edge_mask & !(1u64 << e),
            removed_edge: e,
            sign: lattice_sign(edge_mask, e).unwrap(),
        })
        .collect()
}

/// All edge masks with exactly `k` edges out of `m`, in lexicographic order of
/// their sorted edge index tuples.
pub fn subsets_of_size(m: usize, k: usize) -> Vec<EdgeMask> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    if k > m {
        return out;
    }
    loop {
        out.push(idx.iter().fold(0u64, |acc, &i| acc | 1u64 << i));
        let mut p = k;
        loop {
            if p == 0 {
                return out;
            }
            p -= 1;
            if idx[p] < m - k + p {
                idx[p] += 1;
                for q in p + 1..k {
                    idx[q] = idx[q - 1] + 1;
                }
                break;
            }
        }
    }
}

// ---------------------------------------------------------------------------
// graph6

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    assert!(n <= 62, "graph6 short form needs n <= 62");
    let mut out = vec![(n as u8) + 63];
    let mut bits = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(i + 1, j + 1));
        }
    }
    for chunk in bits.chunks(6) {
        let mut v = 0u8;
        for (k, &b) in chunk.iter().enumerate() {
            if b {
                v |= 1 << (5 - k);
            }
        }
        out.push(v + 63);
    }
    String::from_utf8(out).unwrap()
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let mut s = text.trim_end_matches(['\n', '\r']);
    let mut base = 0;
    if let Some(rest) = s.strip_prefix(">>graph6<<") {
        s = rest;
        base = 10;
    }
    let bytes = s.as_bytes();
    let first = *bytes
        .first()
        .ok_or_else(|| parse_err(base, "empty graph6 string"))?;
    if first == 126 {
        return Err(parse_err(
            base,
            "extended graph6 size field (n >= 63) is not supported",
        ));
    }
    if !(63..=125).contains(&first) {
        return Err(parse_err(base, format!("invalid size byte {first}")));
    }
    let n = (first - 63) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let need = nbits.div_ceil(6);
    let body = &bytes[1..];
    if body.len() < need {
        return Err(parse_err(
            base + 1 + body.len(),
            format!("truncated bit field: need {need} bytes, got {}", body.len()),
        ));
    }
    if body.len() > need {
        return Err(parse_err(base + 1 + need, "trailing bytes after bit field"));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for (pos, &c) in body.iter().enumerate() {
        if !(63..=126).contains(&c) {
            return Err(parse_err(base + 1 + pos, format!("invalid character {c}")));
        }
        let v = c - 63;
        for b in 0..6 {
            if k >= nbits {
                if v >> (5 - b) & 1 == 1 {
                    return Err(parse_err(base + 1 + pos, "nonzero padding bits"));
                }
                continue;
            }
            if v >> (5 - b) & 1 == 1 {
                // bit k is x(i,j) in column-major upper-triangle order
                let mut j = 1;
                while j * (j + 1) / 2 <= k {
                    j += 1;
                }
                let i = k - j * (j - 1) / 2;
                edges.push((i + 1, j + 1));
            }
            k += 1;
        }
    }
    Graph::new(n, edges)
}

/// Parse the edge-list format: first line `n`, then one `i j` per line.
/// Blank lines and `#` comments are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut n = None;
    let mut edges = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let content = line.split('#').next().unwrap().trim();
        if !content.is_empty() {
            let fields: Vec<&str> = content.split_whitespace().collect();
            let num = |s: &str| {
                s.parse::<usize>()
                    .map_err(|_| parse_err(offset, format!("not a vertex number: {s:?}")))
            };
            match (n, fields.len()) {
                (None, 1) => n = Some(num(fields[0])?),
                (None, _) => return Err(parse_err(offset, "first line must hold only n")),
                (Some(_), 2) => edges.push((num(fields[0])?, num(fields[1])?)),
                (Some(_), _) => return Err(parse_err(offset, "expected an `i j` pair")),
            }
        }
        offset += line.len();
    }
    let n = n.ok_or_else(|| parse_err(0, "missing vertex count"))?;
    Graph::new(n, edges)
}

// ---------------------------------------------------------------------------
// blocks and planarity

/// Biconnected components as lists of edges (1-indexed vertex pairs).
pub fn biconnected_components(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    struct State<'a> {
        adj: &'a [Vec<usize>],
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<(usize, usize)>,
        out: Vec<Vec<(usize, usize)>>,
    }
    fn dfs(s: &mut State, u: usize, parent: usize) {
        s.time += 1;
        s.disc[u] = s.time;
        s.low[u] = s.time;
        for k in 0..s.adj[u].len() {
            let v = s.adj[u][k];
            if s.disc[v] == 0 {
                s.stack.push((u, v));
                dfs(s, v, u);
                s.low[u] = s.low[u].min(s.low[v]);
                if s.low[v] >= s.disc[u] {
                    let mut comp = Vec::new();
                    while let Some(e) = s.stack.pop() {
                        comp.push((e.0.min(e.1), e.0.max(e.1)));
                        if e == (u, v) {
                            break;
                        }
                    }
                    comp.sort_unstable();
                    s.out.push(comp);
                }
            } else if v != parent && s.disc[v] < s.disc[u] {
                s.stack.push((u, v));
                s.low[u] = s.low[u].min(s.disc[v]);
            }
        }
    }
    let adj = g.neighbours();
    let mut s = State {
        adj: &adj,
        disc: vec![0; g.n() + 1],
        low: vec![0; g.n() + 1],
        time: 0,
        stack: Vec::new(),
        out: Vec::new(),
    };
    for v in 1..=g.n() {
        if s.disc[v] == 0 {
            dfs(&mut s, v, 0);
        }
    }
    s.out
}

/// Planarity by path addition on each biconnected component.
pub fn is_planar(g: &Graph) -> bool {
    if g.n() >= 3 && g.m() > 3 * g.n() - 6 {
        return false;
    }
    biconnected_components(g).iter().all(|block| block_is_planar(block))
}

/// Path-addition test for a biconnected edge set: embed a cycle, then keep
/// embedding a path from a fragment into an admissible face, preferring
/// fragments with a single admissible face.
fn block_is_planar(block: &[(usize, usize)]) -> bool {
    let mut verts: Vec<usize> = block.iter().flat_map(|&(a, b)| [a, b]).collect();
    verts.sort_unstable();
    verts.dedup();
    let k = verts.len();
    if k <= 4 {
        return true;
    }
    if block.len() > 3 * k - 6 {
        return false;
    }
    let local = |v: usize| verts.binary_search(&v).unwrap();
    let mut adj = vec![Vec::new(); k];
    for &(a, b) in block {
        let (a, b) = (local(a), local(b));
        adj[a].push(b);
        adj[b].push(a);
    }

    let cycle = find_cycle(&adj);
    let mut in_h = vec![false; k];
    let mut embedded = vec![vec![false; k]; k];
    for (p, &v) in cycle.iter().enumerate() {
        let w = cycle[(p + 1) % cycle.len()];
        in_h[v] = true;
        embedded[v][w] = true;
        embedded[w][v] = true;
    }
    let mut faces = vec![cycle.clone(), cycle];
    let mut edges_left = block.len() - faces[0].len();

    while edges_left > 0 {
        let frags = fragments(&adj, &in_h, &embedded);
        let face_masks: Vec<u64> = faces
            .iter()
            .map(|f| f.iter().fold(0u64, |m, &v| m | 1 << v))
            .collect();
        let mut choice = None;
        for (fi, frag) in frags.iter().enumerate() {
            let att = frag.attachments.iter().fold(0u64, |m, &v| m | 1 << v);
            let adm: Vec<usize> = (0..faces.len())
                .filter(|&f| face_masks[f] & att == att)
                .collect();
            match adm.len() {
                0 => return false,
                1 => {
                    choice = Some((fi, adm[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((fi, adm[0]));
                    }
                }
            }
        }
        let (fi, face) = choice.expect("at least one fragment");
        let path = fragment_path(&adj, &in_h, &frags[fi]);
        for w in path.windows(2) {
            embedded[w[0]][w[1]] = true;
            embedded[w[1]][w[0]] = true;
            edges_left -= 1;
        }
        for &v in &path {
            in_h[v] = true;
        }
        let f = faces.swap_remove(face);
        let (a, b) = (path[0], *path.last().unwrap());
        let ia = f.iter().position(|&v| v == a).unwrap();
        let ib = f.iter().position(|&v| v == b).unwrap();
        let walk = |from: usize, to: usize| {
            let mut w = vec![f[from]];
            let mut p = from;
            while p != to {
                p = (p + 1) % f.len();
                w.push(f[p]);
            }
            w
        };
        let inner = &path[1..path.len() - 1];
        let mut f1 = walk(ia, ib);
        f1.extend(inner.iter().rev());
        let mut f2 = walk(ib, ia);
        f2.extend(inner.iter());
        faces.push(f1);
        faces.push(f2);
    }
    true
}

fn find_cycle(adj: &[Vec<usize>]) -> Vec<usize> {
    let k = adj.len();
    let mut parent = vec![usize::MAX; k];
    let mut depth = vec![usize::MAX; k];
    let mut stack = vec![(0usize, 0usize)];
    depth[0] = 0;
    while let Some(&mut (u, ref mut next)) = stack.last_mut() {
        if *next < adj[u].len() {
            let v = adj[u][*next];
            *next += 1;
            if depth[v] == usize::MAX {
                depth[v] = depth[u] + 1;
                parent[v] = u;
                stack.push((v, 0));
            } else if v != parent[u] && depth[v] < depth[u] {
                let mut cyc = vec![u];
                let mut x = u;
                while x != v {
                    x = parent[x];
                    cyc.push(x);
                }
                return cyc;
            }
        } else {
            stack.pop();
        }
    }
    panic!("biconnected block without a cycle");
}

struct Fragment {
    attachments: Vec<usize>,
    interior: Vec<usize>,
    chord: Option<(usize, usize)>,
}

fn fragments(adj: &[Vec<usize>], in_h: &[bool], embedded: &[Vec<bool>]) -> Vec<Fragment> {
    let k = adj.len();
    let mut out = Vec::new();
    for u in 0..k {
        if !in_h[u] {
            continue;
        }
        for &v in &adj[u] {
            if u < v && in_h[v] && !embedded[u][v] {
                out.push(Fragment {
                    attachments: vec![u, v],
                    interior: Vec::new(),
                    chord: Some((u, v)),
                });
            }
        }
    }
    let mut seen = vec![false; k];
    for s in 0..k {
        if in_h[s] || seen[s] {
            continue;
        }
        let mut interior = Vec::new();
        let mut att = Vec::new();
        let mut queue = VecDeque::from([s]);
        seen[s] = true;
        while let Some(x) = queue.pop_front() {
            interior.push(x);
            for &y in &adj[x] {
                if in_h[y] {
                    if !att.contains(&y) {
                        att.push(y);
                    }
                } else if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        out.push(Fragment {
            attachments: att,
            interior,
            chord: None,
        });
    }
    out
}

fn fragment_path(adj: &[Vec<usize>], in_h: &[bool], frag: &Fragment) -> Vec<usize> {
    if let Some((u, v)) = frag.chord {
        return vec![u, v];
    }
    let a = frag.attachments[0];
    let start = *frag
        .interior
        .iter()
        .find(|&&x| adj[x].contains(&a))
        .expect("attachment adjacent to interior");
    let mut prev = vec![usize::MAX; adj.len()];
    prev[start] = start;
    let mut queue = VecDeque::from([start]);
    while let Some(x) = queue.pop_front() {
        if let Some(&b) = adj[x].iter().find(|&&y| in_h[y] && y != a) {
            let mut path = vec![b, x];
            let mut y = x;
            while y != start {
                y = prev[y];
                path.push(y);
            }
            path.push(a);
            path.reverse();
            return path;
        }
        for &y in &adj[x] {
            if !in_h[y] && prev[y] == usize::MAX {
                prev[y] = x;
                queue.push_back(y);
            }
        }
    }
    panic!("fragment of a biconnected block has a single attachment");
}

// ---------------------------------------------------------------------------
// automorphisms, isomorphism, Orellana-Scott pairs

/// Backtracking search for a bijection `f` (0-indexed images) with
/// `g.has_edge(u,v) == h.has_edge(f(u),f(v))` that also satisfies `allowed`
/// for each assigned vertex.
fn find_isomorphism(
    g: &Graph,
    h: &Graph,
    allowed: &dyn Fn(usize, usize) -> bool,
    extra: &dyn Fn(&[usize]) -> bool,
) -> Option<Vec<usize>> {
    let n = g.n();
    if n != h.n() || g.m() != h.m() {
        return None;
    }
    let (ga, ha) = (adjacency_matrix(g), adjacency_matrix(h));
    let gd: Vec<usize> = (1..=n).map(|v| g.degree(v)).collect();
    let hd: Vec<usize> = (1..=n).map(|v| h.degree(v)).collect();
    let mut image = vec![0usize; n + 1];
    let mut used = vec![false; n + 1];
    fn rec(
        v: usize,
        n: usize,
        ga: &[Vec<bool>],
        ha: &[Vec<bool>],
        gd: &[usize],
        hd: &[usize],
        image: &mut Vec<usize>,
        used: &mut Vec<bool>,
        allowed: &dyn Fn(usize, usize) -> bool,
        extra: &dyn Fn(&[usize]) -> bool,
    ) -> bool {
        if v > n {
            return extra(&image[1..]);
        }
        for w in 1..=n {
            if used[w] || gd[v - 1] != hd[w - 1] || !allowed(v, w) {
                continue;
            }
            if (1..v).all(|u| ga[u][v] == ha[image[u]][w]) {
                image[v] = w;
                used[w] = true;
                if rec(v + 1, n, ga, ha, gd, hd, image, used, allowed, extra) {
                    return true;
                }
                used[w] = false;
            }
        }
        false
    }
    if rec(1, n, &ga, &ha, &gd, &hd, &mut image, &mut used, allowed, extra) {
        Some(image[1..].to_vec())
    } else {
        None
    }
}

fn adjacency_matrix(g: &Graph) -> Vec<Vec<bool>> {
    let mut a = vec![vec![false; g.n() + 1]; g.n() + 1];
    for &(i, j) in g.edges() {
        a[i][j] = true;
        a[j][i] = true;
    }
    a
}

/// An isomorphism `g -> h` as an image vector (`f(v) = out[v - 1]`).
pub fn isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    find_isomorphism(g, h, &|_, _| true, &|_| true)
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    isomorphism(g, h).is_some()
}

/// Build the Orellana-Scott pair `(base + uw + wz, base + vz + wz)`.
///
/// The base must contain `uz` and `vw`, must not contain `uw`, `vz`, `wz`, and
/// must have an automorphism exchanging the sets `{u,w}` and `{v,z}`.
pub fn orellana_scott_pair(
    base: &Graph,
    u: usize,
    v: usize,
    w: usize,
    z: usize,
) -> Result<(Graph, Graph)> {
    let quad = [u, v, w, z];
    for &x in &quad {
        if x < 1 || x > base.n() {
            return Err(Error::Precondition(format!("vertex {x} is not in the base graph")));
        }
    }
    let mut sorted = quad;
    sorted.sort_unstable();
    if sorted.windows(2).any(|p| p[0] == p[1]) {
        return Err(Error::Precondition("u, v, w, z must be distinct".into()));
    }
    for (a, b, name) in [(u, z, "uz"), (v, w, "vw")] {
        if !base.has_edge(a, b) {
            return Err(Error::Precondition(format!("base is missing required edge {name}")));
        }
    }
    for (a, b, name) in [(u, w, "uw"), (v, z, "vz"), (w, z, "wz")] {
        if base.has_edge(a, b) {
            return Err(Error::Precondition(format!("base already has forbidden edge {name}")));
        }
    }
    let in_uw = |x: usize| x == u || x == w;
    let in_vz = |x: usize| x == v || x == z;
    let allowed = |x: usize, y: usize| {
        (!in_uw(x) || in_vz(y)) && (!in_vz(x) || in_uw(y))
    };
    if find_isomorphism(base, base, &allowed, &|_| true).is_none() {
        return Err(Error::Precondition(
            "base has no automorphism exchanging {u,w} and {v,z}".into(),
        ));
    }
    let first = base.with_edges(&[(u, w), (w, z)])?;
    let second = base.with_edges(&[(v, z), (w, z)])?;
    Ok((first, second))
}

// ---------------------------------------------------------------------------
// builtin graphs

pub const BUILTIN_NAMES: &[&str] = &[
    "K1", "K2", "K3", "K4", "K5", "K6", "K33", "C3", "C4", "C5", "C6", "C7", "star4", "star5",
    "star6", "star7", "G1", "G2", "G3", "G4", "G5", "G6", "G7", "G8",
];

fn from_codes(n: usize, codes: &[u32]) -> Graph {
    Graph::new(n, codes.iter().map(|&c| ((c / 10) as usize, (c % 10) as usize)))
        .expect("builtin graph")
}

/// Base of the G7/G8 pair on 7 vertices with `(u, v, w, z) = (1, 2, 3, 4)`:
/// edges `uz`, `vw`, vertices 6 and 7 joined to `u` and `z`, vertex 5 joined
/// to `v`, `w`, 6 and 7. The reflection `1<->4, 2<->3` is an automorphism.
pub fn family_base() -> Graph {
    from_codes(7, &[14, 16, 17, 23, 25, 35, 46, 47, 56, 57])
}

/// Vertices `(u, v, w, z)` of the family base.
pub const FAMILY_QUAD: (usize, usize, usize, usize) = (1, 2, 3, 4);

pub fn builtin(name: &str) -> Option<Graph> {
    let g = match name {
        "K1" => Graph::new(1, []).unwrap(),
        "K2" => Graph::complete(2),
        "K3" => Graph::complete(3),
        "K4" => Graph::complete(4),
        "K5" => Graph::complete(5),
        "K6" => Graph::complete(6),
        "K33" => Graph::complete_bipartite(&[1, 3, 5], &[2, 4, 6]),
        "C3" => Graph::cycle(3),
        "C4" => Graph::cycle(4),
        "C5" => Graph::cycle(5),
        "C6" => Graph::cycle(6),
        "C7" => Graph::cycle(7),
        "star4" => Graph::star(4),
        "star5" => Graph::star(5),
        "star6" => Graph::star(6),
        "star7" => Graph::star(7),
        "G1" => from_codes(6, &[12, 13, 23, 34, 35, 36, 45, 46, 56]),
        "G2" => from_codes(6, &[12, 23, 24, 34, 35, 36, 45, 46, 56]),
        "G3" => from_codes(6, &[12, 13, 14, 23, 24, 34, 35, 36, 45, 46, 56]),
        "G4" => from_codes(6, &[12, 14, 23, 24, 25, 34, 35, 36, 45, 46, 56]),
        "G5" => from_codes(6, &[12, 15, 16, 23, 24, 26, 34, 36, 45, 46, 56]),
        "G6" => from_codes(6, &[12, 13, 14, 16, 23, 24, 25, 34, 35, 45, 56]),
        "G7" | "G8" => {
            let (u, v, w, z) = FAMILY_QUAD;
            let (a, b) = orellana_scott_pair(&family_base(), u, v, w, z).expect("family base");
            if name == "G7" {
                a
            } else {
                b
            }
        }
        _ => return None,
    };
    Some(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k3_signs() {
        let full = 0b111;
        assert_eq!(lattice_sign(full, 0).unwrap(), 1);
        assert_eq!(lattice_sign(full, 1).unwrap(), -1);
        assert_eq!(lattice_sign(full, 2).unwrap(), 1);
        assert!(lattice_sign(0b101, 1).is_err());
    }

    #[test]
    fn components_example() {
        let g = Graph::complete(6);
        let mask = (1 << g.edge_index(4, 5).unwrap()) | (1 << g.edge_index(3, 6).unwrap());
        let f = components_of(&g, mask);
        assert_eq!(f.blocks, vec![vec![3, 6], vec![4, 5], vec![1], vec![2]]);
        assert_eq!(f.shape(), vec![2, 2, 1, 1]);
        let k3 = Graph::complete(3);
        assert_eq!(components_of(&k3, 0).shape(), vec![1, 1, 1]);
        assert_eq!(components_of(&k3, 0b111).blocks, vec![vec![1, 2, 3]]);
    }

    #[test]
    fn graph6_small() {
        let k1 = parse_graph6("@").unwrap();
        assert_eq!((k1.n(), k1.m()), (1, 0));
        let k3 = parse_graph6("Bw").unwrap();
        assert_eq!(k3.edges(), &[(1, 2), (1, 3), (2, 3)]);
        assert_eq!(encode_graph6(&Graph::complete(5)), "D~{");
        assert!(parse_graph6("~?@").is_err());
        assert!(parse_graph6("D~").is_err());
    }

    #[test]
    fn planarity_basics() {
        assert!(!is_planar(&Graph::complete(5)));
        assert!(!is_planar(&builtin("K33").unwrap()));
        assert!(is_planar(&Graph::complete(4)));
        assert!(!is_planar(&builtin("G6").unwrap()));
        assert!(is_planar(&Graph::cycle(7)));
    }

    #[test]
    fn blocks() {
        assert_eq!(Graph::star(5).block_count(), 4);
        assert_eq!(Graph::cycle(5).block_count(), 1);
    }

    #[test]
    fn edge_list_round_trip() {
        let g = builtin("G1").unwrap();
        assert_eq!(parse_edge_list(&g.to_edge_list_text()).unwrap(), g);
        assert!(parse_edge_list("3\n1 1\n").is_err());
        assert!(parse_edge_list("3\n1 2 3\n").is_err());
    }
}
