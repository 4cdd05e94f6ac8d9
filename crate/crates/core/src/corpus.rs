//! Small graph corpora: connected graphs up to isomorphism, and trees.

use crate::graph::{encode_graph6, Graph};
use crate::group_algebra::Permutation;

/// Pairs `(i, j)` with `0 <= i < j < n` in the bit order used for masks.
fn pair_list(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for j in 1..n {
        for i in 0..j {
            out.push((i, j));
        }
    }
    out
}

/// The smallest adjacency mask over all relabelings.
fn min_mask(mask: u32, pairs: &[(usize, usize)], index: &[Vec<usize>], perms: &[Vec<usize>]) -> u32 {
    let mut best = mask;
    for p in perms {
        let mut m = 0u32;
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                m |= 1 << index[p[i]][p[j]];
            }
        }
        best = best.min(m);
    }
    best
}

fn mask_graph(n: usize, mask: u32, pairs: &[(usize, usize)]) -> Graph {
    let edges = pairs
        .iter()
        .enumerate()
        .filter(|(k, _)| mask >> k & 1 == 1)
        .map(|(_, &(i, j))| (i + 1, j + 1));
    Graph::new(n, edges).expect("valid mask")
}

/// One representative per isomorphism class of graphs on exactly `n`
/// vertices (`n <= 7`), the minimal-mask labeling, in increasing mask order.
pub fn graphs_on(n: usize, connected_only: bool) -> Vec<Graph> {
    assert!((1..=7).contains(&n), "corpus supports 1 <= n <= 7");
    let pairs = pair_list(n);
    let mut index = vec![vec![0usize; n]; n];
    for (k, &(i, j)) in pairs.iter().enumerate() {
        index[i][j] = k;
        index[j][i] = k;
    }
    let perms: Vec<Vec<usize>> = Permutation::all(n)
        .iter()
        .map(|p| p.images().iter().map(|&x| x as usize - 1).collect())
        .collect();
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << pairs.len()) {
        if min_mask(mask, &pairs, &index, &perms) != mask {
            continue;
        }
        let g = mask_graph(n, mask, &pairs);
        if !connected_only || g.is_connected() {
            out.push(g);
        }
    }
    out
}

/// All connected graphs on `1..=max_n` vertices up to isomorphism.
pub fn connected_graphs(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(|n| graphs_on(n, true)).collect()
}

/// Trees on `1..=max_n` vertices up to isomorphism.
pub fn trees(max_n: usize) -> Vec<Graph> {
    connected_graphs(max_n)
        .into_iter()
        .filter(|g| g.m() + 1 == g.n())
        .collect()
}

/// One graph6 string per line.
pub fn to_graph6_lines(graphs: &[Graph]) -> String {
    graphs.iter().map(|g| encode_graph6(g) + "\n").collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| graphs_on(n, true).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112]);
        let all: Vec<usize> = (1..=5).map(|n| graphs_on(n, false).len()).collect();
        assert_eq!(all, vec![1, 2, 4, 11, 34]);
        assert_eq!(trees(6).len(), 14);
    }
}
