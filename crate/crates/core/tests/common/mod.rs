//! Shared helpers for the integration tests: printed-matrix fixtures and
//! independent oracles.

#![allow(dead_code)]

use std::path::PathBuf;

use csh::complex::{build_restricted_complex_with, GeneratorOrder, RestrictedGenerators};
use csh::graph::{builtin, components_of, subsets_of_size, Graph};
use csh::group_algebra::{v_element, v_element_checked, GroupAlgebraElement, Permutation};
use csh::snf::rank_q;
use csh::straighten::straighten;
use csh::tableau::{kostka, sort_descending, standard_tableaux, Numbering, Partition};
use num_bigint::BigInt;
use rand::{rngs::StdRng, Rng};

pub struct Printed {
    pub cols: Vec<String>,
    pub rows: Vec<String>,
    pub entries: Vec<Vec<i64>>,
}

pub fn load(name: &str) -> Printed {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join(format!("tests/fixtures/{name}.mat"));
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    let cols = lines.next().unwrap().split_whitespace().skip(1).map(String::from).collect();
    let mut rows = Vec::new();
    let mut entries = Vec::new();
    for l in lines {
        let mut f = l.split_whitespace();
        rows.push(f.next().unwrap().to_string());
        entries.push(f.map(|x| x.parse().unwrap()).collect());
    }
    Printed { cols, rows, entries }
}

fn strip(labels: &[String]) -> Vec<String> {
    labels.iter().map(|l| l.replace(['{', '}'], "")).collect()
}

pub fn check(graph: &str, shape: &[usize], stem: &str, kernel: Option<(usize, usize)>) {
    check_with(graph, shape, stem, kernel, GeneratorOrder::Numbering, &[]);
}

/// `swapped` lists edges (1-based) whose two generators the printed matrices
/// take in the opposite order.
pub fn check_with(
    graph: &str,
    shape: &[usize],
    stem: &str,
    kernel: Option<(usize, usize)>,
    order: GeneratorOrder,
    swapped: &[usize],
) {
    let g = builtin(graph).unwrap();
    let lambda = Partition::new(shape.to_vec()).unwrap();
    let mut gens = RestrictedGenerators::with_order(&g, &lambda, order).unwrap();
    for &e in swapped {
        gens.x[e - 1].swap(0, 1);
    }
    let c = build_restricted_complex_with(&gens, &g).unwrap();
    c.check().unwrap();
    let mut degrees = vec![1];
    if c.dims[2] > 0 {
        degrees.push(2);
    }
    for i in degrees {
        let p = load(&format!("{stem}_d{i}"));
        assert_eq!(strip(&c.labels[i]), p.cols, "{graph} d{i} columns");
        assert_eq!(strip(&c.labels[i - 1]), p.rows, "{graph} d{i} rows");
        let got = c.boundaries[i - 1].to_dense();
        for (r, (a, b)) in got.iter().zip(&p.entries).enumerate() {
            assert_eq!(a, b, "{graph} d{i} row {}", p.rows[r]);
        }
    }
    if let Some((ker, rank)) = kernel {
        let r1 = rank_q(&c.boundaries[0]);
        let r2 = rank_q(&c.boundaries[1]);
        assert_eq!((c.dims[1] - r1, r2), (ker, rank), "{graph} (dim ker d1, rank d2)");
    }
}

/// Every printed restricted matrix, with the derived kernel/rank pairs.
pub fn check_all_printed() {
    check("K3", &[2, 1], "k3", None);
    check("G1", &[2, 2, 2], "g1", Some((13, 11)));
    check("G2", &[2, 2, 2], "g2", Some((13, 12)));
    check("G3", &[2, 2, 2], "g3", Some((17, 16)));
    check_with("G4", &[2, 2, 2], "g4", Some((17, 17)), GeneratorOrder::Numbering, &[5]);
    check("G5", &[2, 2, 1, 1], "g5", Some((24, 23)));
    check("G6", &[2, 2, 1, 1], "g6", Some((24, 24)));
    check_with("K33", &[2, 2, 1, 1], "k33", Some((18, 18)), GeneratorOrder::RowWord, &[]);
    check_with("K5", &[2, 2, 1], "k5", Some((15, 15)), GeneratorOrder::RowWord, &[]);
}

pub fn all_numberings(shape: &Partition) -> Vec<Numbering> {
    Permutation::all(shape.n())
        .iter()
        .map(|p| {
            let mut w = p.images().iter().copied();
            let rows = shape.parts().iter().map(|&len| w.by_ref().take(len).collect()).collect();
            Numbering::new(rows).unwrap()
        })
        .collect()
}

/// `v_S` equals the straightened combination of `v_U` in the group algebra,
/// for the given reference numbering.
pub fn sound_against(s: &Numbering, reference: &Numbering) -> bool {
    let e = straighten(s);
    let mut rhs = GroupAlgebraElement::zero(s.n());
    for u in standard_tableaux(&s.shape()) {
        let c = e.get(&u);
        if c != 0 {
            rhs = rhs.add(&v_element(&u, reference).unwrap().scale(&BigInt::from(c)));
        }
    }
    v_element(s, reference).unwrap() == rhs
}

/// Textbook Smith form over i128: least nonzero pivot, division with
/// remainder, repeat; then fix divisibility by adding rows.
pub fn naive_smith(mut a: Vec<Vec<i128>>) -> Vec<i128> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if a[i][j] != 0 && best.map_or(true, |(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        let p = a[t][t];
        let mut clean = true;
        for i in t + 1..rows {
            let q = a[i][t] / p;
            if q != 0 {
                for j in t..cols {
                    a[i][j] -= q * a[t][j];
                }
            }
            clean &= a[i][t] == 0;
        }
        for j in t + 1..cols {
            let q = a[t][j] / p;
            if q != 0 {
                for i in t..rows {
                    a[i][j] -= q * a[i][t];
                }
            }
            clean &= a[t][j] == 0;
        }
        if !clean {
            continue;
        }
        if let Some(i) = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| a[i][j] % p != 0)) {
            for j in t..cols {
                a[t][j] += a[i][j];
            }
            continue;
        }
        diag.push(p.abs());
        t += 1;
    }
    diag
}

pub fn random_matrix(rng: &mut StdRng, unit_free: bool) -> Vec<Vec<i64>> {
    let rows = rng.gen_range(1..=7);
    let cols = rng.gen_range(1..=7);
    let values: &[i64] = if unit_free {
        &[0, 0, 2, -2, 3, 4, -6, 9]
    } else {
        &[0, 0, 0, 1, -1, 2, -3, 5]
    };
    (0..rows)
        .map(|_| (0..cols).map(|_| values[rng.gen_range(0..values.len())]).collect())
        .collect()
}

/// `sum_F (-1)^|F| K(lambda, lambda(F))` over all spanning subgraphs.
pub fn chain_euler(g: &Graph, lambda: &Partition) -> i64 {
    (0..=g.m())
        .map(|k| {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            subsets_of_size(g.m(), k)
                .into_iter()
                .map(|mask| {
                    let shape = Partition::from_unsorted(components_of(g, mask).shape());
                    sign * kostka(lambda, &shape).unwrap() as i64
                })
                .sum::<i64>()
        })
        .sum()
}

/// The sum of the four `(3,1)` polytabloids against `Y_1` vanishes and the
/// product `(e - (1 4))(e + (2 3) + (1 2 3))(e + (1 2))(e + (3 4))` equals
/// the first two of them.
pub fn four_term_identity() -> bool {
    let elt = |images: &[u8]| GroupAlgebraElement::of(Permutation::from_images(images.to_vec()).unwrap());
    let y1 = first_syt(&[3, 1]);
    let v = |t: &str| v_element_checked(&Numbering::parse(t).unwrap(), &y1).unwrap();
    let (a, b, c, d) = (v("123|4"), v("124|3"), v("134|2"), v("234|1"));
    let e = elt(&[1, 2, 3, 4]);
    let minus_14 = e.add(&elt(&[4, 2, 3, 1]).scale(&BigInt::from(-1)));
    let middle = e.add(&elt(&[1, 3, 2, 4])).add(&elt(&[2, 3, 1, 4]));
    let row_12 = e.add(&elt(&[2, 1, 3, 4]));
    let row_34 = e.add(&elt(&[1, 2, 4, 3]));
    let product = [middle, row_12, row_34]
        .iter()
        .fold(minus_14, |acc, x| acc.multiply(x).unwrap());
    let pair = a.add(&b);
    a.add(&b).add(&c).add(&d).is_zero()
        && !pair.is_zero()
        && product == pair
        && product == c.add(&d).scale(&BigInt::from(-1))
}

pub fn first_syt(shape: &[usize]) -> Numbering {
    let mut syt = standard_tableaux(&Partition::new(shape.to_vec()).unwrap());
    sort_descending(&mut syt);
    syt[0].clone()
}

