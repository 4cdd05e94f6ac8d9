//! The torsion/planarity scan over all connected graphs on at most six
//! vertices, with the fast verdicts checked against full Smith forms.

use csh::complex::build_full_complex;
use csh::corpus::{connected_graphs, to_graph6_lines, trees};
use csh::graph::parse_graph6;
use csh::homology::homology;
use csh::scan::{scan_graphs, ScanOptions, ScanSummary, Verdict};

#[test]
fn corpus_scan() {
    let graphs = connected_graphs(6);
    assert_eq!(graphs.len(), 143);
    let results = scan_graphs(&graphs, &ScanOptions::default(), None);
    let summary = ScanSummary::of(&results);
    assert_eq!(
        summary,
        ScanSummary { graphs: 143, with_torsion: 14, nonplanar: 14, counterexamples: 0, errors: 0 }
    );
    for (g, r) in graphs.iter().zip(&results) {
        let rec = r.as_ref().unwrap();
        assert_eq!(rec.h1_2torsion > 0, !rec.planar, "{g}");
        assert_eq!(rec.verdict, Verdict::Consistent);
        assert!(rec.h1_2torsion == 0 || rec.confirmed, "{g}");
        // Full Smith forms agree with the fast path on every graph.
        let h = homology(&build_full_complex(g, Some(2)).unwrap()).unwrap();
        let exact = h.get(1).map_or((0, 0), |x| (x.free_rank, x.count_torsion(2)));
        assert_eq!(exact, (rec.h1_free, rec.h1_2torsion), "{g}");
    }
}

#[test]
fn trees_have_no_torsion() {
    let t = trees(6);
    let s = ScanSummary::of(&scan_graphs(&t, &ScanOptions::default(), None));
    assert_eq!((s.graphs, s.with_torsion, s.nonplanar, s.counterexamples), (14, 0, 0, 0));
}

#[test]
fn corpus_round_trips_through_graph6() {
    let graphs = connected_graphs(6);
    let text = to_graph6_lines(&graphs);
    let back: Vec<_> = text.lines().map(|l| parse_graph6(l).unwrap()).collect();
    assert_eq!(back, graphs);
}
