//! Star graphs: H_0 = Z and the printed H_1 for four to seven vertices.

use csh::complex::build_full_complex;
use csh::graph::{builtin, Graph};
use csh::homology::{homology, rank_q_fast, torsion_signature_fast};
use csh::snf::rank_mod_p;

#[test]
fn small_stars_by_smith_form() {
    for (n, free) in [(4, 2), (5, 20), (6, 152)] {
        let g = Graph::star(n);
        assert_eq!(builtin(&format!("star{n}")).unwrap(), g);
        let h = homology(&build_full_complex(&g, Some(2)).unwrap()).unwrap();
        assert_eq!((h[0].free_rank, h[0].torsion.len()), (1, 0), "star{n} H_0");
        assert_eq!(h[1].free_rank, free, "star{n}");
        assert!(h[1].torsion.is_empty(), "star{n}");
    }
}

#[test]
fn star7_by_smith_form() {
    let h = homology(&build_full_complex(&Graph::star(7), Some(2)).unwrap()).unwrap();
    assert_eq!((h[0].free_rank, h[0].torsion.len()), (1, 0));
    assert_eq!((h[1].free_rank, h[1].torsion.clone()), (1092, vec![3]));
}

#[test]
fn star7_by_fast_path() {
    let c = build_full_complex(&Graph::star(7), Some(2)).unwrap();
    let d1 = c.boundary(1).unwrap();
    let d2 = c.boundary(2).unwrap();
    let free = c.dims[1] - rank_q_fast(&d1) - rank_q_fast(&d2);
    assert_eq!(free, 1092);
    assert_eq!(torsion_signature_fast(&c, 3, 1).unwrap(), 1);
    assert_eq!(torsion_signature_fast(&c, 2, 1).unwrap(), 0);
    assert_eq!(torsion_signature_fast(&c, 5, 1).unwrap(), 0);
    // H_0 = Z: d_1 has corank one, also modulo 3.
    assert_eq!(c.dims[0] - rank_mod_p(&d1, 3), 1);
}
