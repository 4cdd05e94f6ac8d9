//! Integral torsion in H_1: printed witness pairs on the restricted
//! complexes, and full Smith forms on the full complexes.

use csh::complex::{build_restricted_complex_with, GeneratorOrder, IntegerChainComplex, RestrictedGenerators};
use csh::graph::builtin;
use csh::homology::{parse_chain, verify_torsion_witness, verify_torsion_witness_of_order};
use csh::scan::{scan_graph, ScanOptions};
use csh::tableau::Partition;
use csh::{build_full_complex, homology};

const K5_G: &str = "W_{18}+W_{19}+W_{1,10}+W_{26}-W_{27}-W_{2,10}+W_{35}+W_{37}+W_{39}+W_{45}+W_{46}+W_{48}-W_{5,10}-W_{69}+W_{78}";
const K5_H: &str = "X_2^1-X_7^2-X_9^1-X_9^2 + X_{10}^1";
const K33_G: &str = "W_{16}-W_{17}+W_{18}+W_{19} -W_{24}-W_{25}+W_{27}+W_{29} +W_{34}-W_{35}+W_{36}+W_{38} +W_{48}+W_{49} +W_{56}+W_{57} -W_{69}+W_{78}";
const K33_H: &str = "X_6^3-X_7^3+X_8^3-X_9^2";
const G6_G: &str = "-W_{18}-W_{19}-W_{1a}+W_{26}+W_{27}+W_{2a}+W_{35}+W_{37}+W_{39}-W_{45}-W_{46}+W_{48}+2W_{49}+2W_{4a}-W_{5a}-W_{5b}-W_{69}-W_{6b}-W_{78}+W_{8b}";
const G6_H: &str = "X_9^2+X_9^3+X_{10}^2+X_{10}^3+X_{11}^2+X_{11}^3";

fn restricted(name: &str, shape: &[usize], order: GeneratorOrder) -> IntegerChainComplex {
    let g = builtin(name).unwrap();
    let gens = RestrictedGenerators::with_order(&g, &Partition::new(shape.to_vec()).unwrap(), order).unwrap();
    build_restricted_complex_with(&gens, &g).unwrap()
}

/// The printed `W_{1,10}` style labels use a comma for two-digit indices;
/// the complex labels use hexadecimal digits.
fn hexify(text: &str) -> String {
    text.replace("1,10", "1a").replace("2,10", "2a").replace("5,10", "5a")
}

fn witness(c: &IntegerChainComplex, g: &str, h: &str) -> (Vec<i64>, Vec<i64>) {
    let g = parse_chain(&hexify(g), &c.labels[2]).unwrap();
    let h = parse_chain(h, &c.labels[1]).unwrap();
    assert!(g.iter().any(|&x| x != 0) && h.iter().any(|&x| x != 0));
    (g, h)
}

/// The printed K5 `h` is not a cycle of the printed `d_1` (row `Y_1` gives
/// `-2`); with the sign of `X_10^1` flipped, `d_2(-g) = 2h`.
const K5_H_FIXED: &str = "X_2^1-X_7^2-X_9^1-X_9^2 - X_{10}^1";

#[test]
fn k5_witness() {
    let c = restricted("K5", &[2, 2, 1], GeneratorOrder::RowWord);
    let (g, h) = witness(&c, K5_G, K5_H);
    assert_eq!(c.boundaries[0].mul_vec(&h), vec![-2, -2, 0, 0, 0]);
    assert!(!verify_torsion_witness(&c, &g, &h).unwrap());
    let (g, h) = witness(&c, K5_G, K5_H_FIXED);
    let neg: Vec<i64> = g.iter().map(|x| -x).collect();
    assert!(verify_torsion_witness(&c, &neg, &h).unwrap());
    assert!(!verify_torsion_witness_of_order(&c, &neg, &h, 3).unwrap());
}

#[test]
fn k33_witness() {
    let c = restricted("K33", &[2, 2, 1, 1], GeneratorOrder::RowWord);
    let (g, h) = witness(&c, K33_G, K33_H);
    assert!(verify_torsion_witness(&c, &g, &h).unwrap());
}

#[test]
fn g6_witness() {
    let c = restricted("G6", &[2, 2, 1, 1], GeneratorOrder::Numbering);
    let (g, h) = witness(&c, G6_G, G6_H);
    assert!(verify_torsion_witness(&c, &g, &h).unwrap());
}

#[test]
fn zero_pair_is_not_a_witness() {
    let c = restricted("K5", &[2, 2, 1], GeneratorOrder::RowWord);
    let g = vec![0; c.dims[2]];
    let h = vec![0; c.dims[1]];
    assert!(!verify_torsion_witness(&c, &g, &h).unwrap());
    assert!(verify_torsion_witness(&c, &g[1..], &h).is_err());
}

#[test]
fn boundary_is_not_a_witness() {
    // h = d_2 g satisfies d_2 g = 1 * h and d_1 h = 0, but h is a boundary.
    let c = restricted("K5", &[2, 2, 1], GeneratorOrder::RowWord);
    let mut g = vec![0; c.dims[2]];
    g[0] = 1;
    let h = c.boundaries[1].mul_vec(&g);
    assert!(!verify_torsion_witness_of_order(&c, &g, &h, 1).unwrap());
}

fn h1(name: &str) -> (usize, Vec<u64>) {
    let c = build_full_complex(&builtin(name).unwrap(), Some(2)).unwrap();
    let h = homology(&c).unwrap();
    (h[1].free_rank, h[1].torsion.clone())
}

#[test]
fn k5_full_h1() {
    assert_eq!(h1("K5"), (24, vec![2; 5]));
}

#[test]
fn k33_full_h1() {
    assert_eq!(h1("K33"), (25, vec![2; 4]));
}

#[test]
fn g6_full_h1_has_two_torsion() {
    let rec = scan_graph(&builtin("G6").unwrap(), &ScanOptions::default(), None).unwrap();
    assert!(!rec.planar);
    assert!(rec.h1_2torsion > 0);
    assert!(rec.confirmed);
}

