//! Structural invariants: d∘d = 0, straightening soundness, Smith forms
//! against a naive oracle, universal coefficients, isotypic Euler
//! characteristics, and agreement of the restricted and full complexes.

mod common;

use common::{all_numberings, chain_euler, naive_smith, random_matrix, sound_against};
use csh::complex::{build_full_complex, build_restricted_complex, IntegerChainComplex};
use csh::corpus::connected_graphs;
use csh::graph::{builtin, Graph};
use csh::homology::{betti_mod_p, homology, isotype_decomposition, isotype_multiplicities};
use csh::snf::{rank_q, smith_normal_form};
use csh::sparse::SparseMatrix;
use csh::straighten::{oracle_straighten, straighten};
use csh::tableau::{partitions, standard_tableaux, Partition};
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::{rngs::StdRng, Rng, SeedableRng};

fn random_graph(n: usize, mask: u32) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for u in 1..=n {
        for v in u + 1..=n {
            if mask >> k & 1 == 1 {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::new(n, edges).unwrap()
}

fn assert_dd_zero(c: &IntegerChainComplex) {
    for w in c.boundaries.windows(2) {
        assert!(w[0].mul(&w[1]).is_zero());
    }
}

// ---------------------------------------------------------------------------
// d∘d = 0

#[test]
fn dd_zero_on_fixture_complexes() {
    for name in ["K3", "G1", "G2", "G3", "G4", "G5", "G6", "K33", "K5"] {
        let g = builtin(name).unwrap();
        let c = build_full_complex(&g, Some(4)).unwrap();
        assert_dd_zero(&c);
    }
    for (name, shape) in [
        ("K3", vec![2, 1]),
        ("G1", vec![2, 2, 2]),
        ("G4", vec![2, 2, 2]),
        ("G6", vec![2, 2, 1, 1]),
        ("K33", vec![2, 2, 1, 1]),
        ("K5", vec![2, 2, 1]),
    ] {
        let c = build_restricted_complex(&builtin(name).unwrap(), &Partition::new(shape).unwrap()).unwrap();
        assert_dd_zero(&c);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn dd_zero_on_random_graphs(n in 2usize..=5, mask in any::<u32>()) {
        let g = random_graph(n, mask);
        let c = build_full_complex(&g, None).unwrap();
        for w in c.boundaries.windows(2) {
            prop_assert!(w[0].mul(&w[1]).is_zero());
        }
    }

    #[test]
    fn dd_zero_on_random_restricted(n in 4usize..=6, k in 1usize..=3, mask in any::<u32>()) {
        prop_assume!(2 * k <= n);
        let g = random_graph(n, mask);
        let c = build_restricted_complex(&g, &Partition::two_column(n, k)).unwrap();
        for w in c.boundaries.windows(2) {
            prop_assert!(w[0].mul(&w[1]).is_zero());
        }
    }
}

// ---------------------------------------------------------------------------
// straightening

#[test]
fn straightening_exhaustive_up_to_five() {
    for n in 1..=5 {
        for shape in partitions(n) {
            let syt = standard_tableaux(&shape);
            for s in all_numberings(&shape) {
                let e = straighten(&s);
                assert_eq!(e, oracle_straighten(&s).unwrap(), "{s}");
                assert!(sound_against(&s, &syt[0]), "{s}");
                if s.is_standard() {
                    assert!(syt.iter().all(|u| e.get(u) == (u == &s) as i64), "{s}");
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(30))]

    #[test]
    fn straightening_sound_for_any_reference(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let shapes = partitions(6);
        let shape = &shapes[rng.gen_range(0..shapes.len())];
        let all = all_numberings(shape);
        let s = &all[rng.gen_range(0..all.len())];
        let r = &all[rng.gen_range(0..all.len())];
        prop_assert!(sound_against(s, r));
    }
}

// ---------------------------------------------------------------------------
// Smith normal form

#[test]
fn smith_form_matches_naive_oracle() {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for k in 0..200 {
        let dense = random_matrix(&mut rng, k % 2 == 1);
        let s = smith_normal_form(&SparseMatrix::from_dense(&dense));
        let want = naive_smith(dense.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect());
        let got: Vec<i128> = s.factors().iter().map(|d| d.to_string().parse().unwrap()).collect();
        assert_eq!(got, want, "{dense:?}");
        assert_eq!(s.rank, rank_q(&SparseMatrix::from_dense(&dense)));
    }
}

#[test]
fn smith_form_with_large_entries() {
    // Entries large enough that the i64 path overflows and falls back.
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..20 {
        let dense: Vec<Vec<i64>> = (0..6)
            .map(|_| (0..6).map(|_| rng.gen_range(-1i64 << 40..1i64 << 40) * 2).collect())
            .collect();
        let s = smith_normal_form(&SparseMatrix::from_dense(&dense));
        let want = naive_factors_big(&dense);
        assert_eq!(s.factors(), want, "{dense:?}");
    }
}

/// Determinantal divisors over BigInt: d_k = gcd of k x k minors. Only for
/// 6 x 6 matrices, via the product d_k / d_{k-1}.
fn naive_factors_big(a: &[Vec<i64>]) -> Vec<BigInt> {
    use num_integer::Integer;
    use num_traits::{Signed, Zero};
    let n = a.len();
    let m: Vec<Vec<BigInt>> = a.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    fn det(m: &[Vec<BigInt>], rows: &[usize], cols: &[usize]) -> BigInt {
        if rows.len() == 1 {
            return m[rows[0]][cols[0]].clone();
        }
        let mut total = BigInt::zero();
        for (k, &c) in cols.iter().enumerate() {
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let term = &m[rows[0]][c] * det(m, &rows[1..], &rest);
            if k % 2 == 0 {
                total += term;
            } else {
                total -= term;
            }
        }
        total
    }
    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        (0u32..1 << n)
            .filter(|s| s.count_ones() as usize == k)
            .map(|s| (0..n).filter(|&i| s >> i & 1 == 1).collect())
            .collect()
    }
    let mut divisors = vec![BigInt::from(1)];
    for k in 1..=n {
        let mut g = BigInt::zero();
        for r in subsets(n, k) {
            for c in subsets(n, k) {
                g = g.gcd(&det(&m, &r, &c));
            }
        }
        if g.is_zero() {
            break;
        }
        divisors.push(g.abs());
    }
    divisors.windows(2).map(|w| &w[1] / &w[0]).collect()
}

// ---------------------------------------------------------------------------
// universal coefficients

fn universal_coefficients(c: &IntegerChainComplex) {
    let h = homology(c).unwrap();
    for p in [2u64, 3, 5] {
        for g in &h {
            let i = g.degree;
            if c.boundary(i + 1).is_none() {
                continue;
            }
            let below = if i == 0 { 0 } else { h[i - 1].count_torsion(p) };
            let want = g.free_rank + g.count_torsion(p) + below;
            assert_eq!(betti_mod_p(c, p, i).unwrap(), want, "p = {p}, i = {i}");
        }
    }
}

#[test]
fn universal_coefficients_on_fixtures() {
    for name in ["K3", "G1", "G2", "G3", "G4", "G5", "G6", "K33", "K5"] {
        let g = builtin(name).unwrap();
        universal_coefficients(&build_full_complex(&g, Some(3)).unwrap());
    }
    for g in [Graph::complete(4), Graph::cycle(5), Graph::star(5)] {
        universal_coefficients(&build_full_complex(&g, None).unwrap());
    }
    for (name, shape) in [
        ("K3", vec![2, 1]),
        ("G1", vec![2, 2, 2]),
        ("G2", vec![2, 2, 2]),
        ("G3", vec![2, 2, 2]),
        ("G4", vec![2, 2, 2]),
        ("G5", vec![2, 2, 1, 1]),
        ("G6", vec![2, 2, 1, 1]),
        ("K33", vec![2, 2, 1, 1]),
        ("K5", vec![2, 2, 1]),
    ] {
        let c = build_restricted_complex(&builtin(name).unwrap(), &Partition::new(shape).unwrap()).unwrap();
        universal_coefficients(&c);
    }
}

// ---------------------------------------------------------------------------
// isotypic Euler characteristic

#[test]
fn isotype_euler_characteristic() {
    for g in connected_graphs(5) {
        let c = build_full_complex(&g, None).unwrap();
        assert!(c.complete);
        for (lambda, mult) in isotype_decomposition(&c).unwrap() {
            let euler: i64 = mult
                .iter()
                .enumerate()
                .map(|(i, &x)| if i % 2 == 0 { x as i64 } else { -(x as i64) })
                .sum();
            assert_eq!(euler, chain_euler(&g, &lambda), "{g} {lambda}");
        }
    }
}

#[test]
fn isotypes_assemble_rational_homology() {
    // sum over lambda of f^lambda * mult = rank H_i(G; Q).
    for g in [Graph::complete(4), Graph::complete(5), Graph::cycle(5), builtin("G1").unwrap()] {
        let c = build_full_complex(&g, None).unwrap();
        let h = homology(&c).unwrap();
        let mut total = vec![0usize; h.len()];
        for (lambda, mult) in isotype_decomposition(&c).unwrap() {
            for (i, m) in mult.into_iter().enumerate() {
                total[i] += m * lambda.dim() as usize;
            }
        }
        let free: Vec<usize> = h.iter().map(|x| x.free_rank).collect();
        assert_eq!(total, free, "{g}");
    }
}

// ---------------------------------------------------------------------------
// restricted vs full

fn restricted_multiplicity(g: &Graph, lambda: &Partition) -> usize {
    let c = build_restricted_complex(g, lambda).unwrap();
    let r1 = rank_q(&c.boundaries[0]);
    let r2 = if c.boundaries.len() > 1 { rank_q(&c.boundaries[1]) } else { 0 };
    c.dims[1] - r1 - r2
}

fn full_multiplicity(g: &Graph, lambda: &Partition) -> usize {
    let c = build_full_complex(g, Some(2)).unwrap();
    isotype_multiplicities(&c, lambda).unwrap()[1]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn restricted_agrees_with_full(n in 4usize..=5, k in 1usize..=2, mask in any::<u32>()) {
        prop_assume!(2 * k <= n);
        let g = random_graph(n, mask);
        let lambda = Partition::two_column(n, k);
        prop_assert_eq!(restricted_multiplicity(&g, &lambda), full_multiplicity(&g, &lambda));
    }
}

#[test]
fn restricted_agrees_with_full_on_small_corpus() {
    for g in connected_graphs(5).into_iter().filter(|g| g.n() >= 3) {
        for k in 1..=g.n() / 2 {
            let lambda = Partition::two_column(g.n(), k);
            assert_eq!(restricted_multiplicity(&g, &lambda), full_multiplicity(&g, &lambda), "{g} {lambda}");
        }
    }
}
