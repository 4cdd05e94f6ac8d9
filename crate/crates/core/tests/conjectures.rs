//! Homology-profile conjecture checks on small graphs.

use csh::graph::Graph;
use csh::scan::{conjecture_report, Status, DEFAULT_BUDGET};
use csh::{build_full_complex, builtin};

fn status(r: &csh::scan::ConjectureReport, name: &str) -> Status {
    r.checks.iter().find(|c| c.name == name).unwrap().status
}

#[test]
fn cycles() {
    for (n, want) in [(4, vec![1, 3, 3, 0, 0]), (5, vec![1, 4, 6, 4, 0, 0])] {
        let g = Graph::cycle(n);
        let r = conjecture_report(&g, DEFAULT_BUDGET, None).unwrap();
        let free: Vec<usize> = r.homology.iter().map(|h| h.free_rank).collect();
        assert_eq!(free, want, "C{n}");
        assert!(r.homology.iter().all(|h| h.torsion.is_empty()));
        // Oracle: the Euler characteristic of the chain complex.
        let chi = build_full_complex(&g, None).unwrap().euler_characteristic();
        let alt: i64 = free.iter().enumerate().map(|(i, &x)| if i % 2 == 0 { x as i64 } else { -(x as i64) }).sum();
        assert_eq!(alt, chi, "C{n}");
        assert_eq!(r.span, n - 1);
        for name in ["cycle_ranks", "nonvanishing", "span_bounds", "unimodal"] {
            assert_eq!(status(&r, name), Status::Pass, "C{n} {name}");
        }
    }
}

#[test]
fn star5() {
    let r = conjecture_report(&builtin("star5").unwrap(), DEFAULT_BUDGET, None).unwrap();
    assert_eq!((r.span, r.blocks, r.n), (2, 4, 5));
    assert_eq!(status(&r, "cycle_ranks"), Status::Skip);
    assert_eq!(status(&r, "span_bounds"), Status::Pass);
}

#[test]
fn fixtures_are_unimodal() {
    for name in ["K3", "K4", "C4", "C5", "star4", "star5"] {
        let r = conjecture_report(&builtin(name).unwrap(), DEFAULT_BUDGET, None).unwrap();
        assert_eq!(status(&r, "unimodal"), Status::Pass, "{name}");
        assert_eq!(status(&r, "nonvanishing"), Status::Pass, "{name}");
    }
}

#[test]
fn single_vertex_span_bound_fails() {
    // span_0(K_1) = 1 exceeds n - 1 = 0; informational only.
    let r = conjecture_report(&builtin("K1").unwrap(), DEFAULT_BUDGET, None).unwrap();
    assert_eq!(r.span, 1);
    assert_eq!(status(&r, "span_bounds"), Status::Fail);
}
