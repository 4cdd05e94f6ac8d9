//! Restricted boundary matrices against the matrices printed for each
//! fixture graph, entry by entry and label by label.

mod common;

use common::{check, check_with};
use csh::complex::GeneratorOrder;

#[test]
fn triangle() {
    check("K3", &[2, 1], "k3", None);
}

#[test]
fn g1_g2() {
    check("G1", &[2, 2, 2], "g1", Some((13, 11)));
    check("G2", &[2, 2, 2], "g2", Some((13, 12)));
}

#[test]
fn g3_g4() {
    check("G3", &[2, 2, 2], "g3", Some((17, 16)));
    check_with("G4", &[2, 2, 2], "g4", Some((17, 17)), GeneratorOrder::Numbering, &[5]);
}

#[test]
fn g5_g6() {
    check("G5", &[2, 2, 1, 1], "g5", Some((24, 23)));
    check("G6", &[2, 2, 1, 1], "g6", Some((24, 24)));
}

#[test]
fn k5() {
    check_with("K5", &[2, 2, 1], "k5", Some((15, 15)), GeneratorOrder::RowWord, &[]);
}

#[test]
fn k33() {
    check_with("K33", &[2, 2, 1, 1], "k33", Some((18, 18)), GeneratorOrder::RowWord, &[]);
}
