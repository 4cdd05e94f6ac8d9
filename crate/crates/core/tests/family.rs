//! Orellana-Scott pairs: preconditions, CSF equality and the planarity split.

use csh::graph::{are_isomorphic, family_base, orellana_scott_pair, Graph, FAMILY_QUAD};
use csh::symfun::csf_schur;

#[test]
fn builtin_pair() {
    let (u, v, w, z) = FAMILY_QUAD;
    let (a, b) = orellana_scott_pair(&family_base(), u, v, w, z).unwrap();
    assert_eq!(a, csh::builtin("G7").unwrap());
    assert_eq!(b, csh::builtin("G8").unwrap());
    assert!(!a.is_planar());
    assert!(b.is_planar());
    assert!(!are_isomorphic(&a, &b));
    assert_eq!(csf_schur(&a).unwrap(), csf_schur(&b).unwrap());
}

#[test]
fn vertical_reflection_gives_isomorphic_sides() {
    // u=1, v=2, w=3, z=4 with edges uz and vw; the swap u<->v, z<->w both
    // exchanges {u,w} with {v,z} and is the vertical reflection.
    let two_edges = Graph::new(4, [(1, 4), (2, 3)]).unwrap();
    let coned = Graph::new(5, [(1, 4), (2, 3), (1, 5), (2, 5), (3, 5), (4, 5)]).unwrap();
    for base in [two_edges, coned] {
        let (a, b) = orellana_scott_pair(&base, 1, 2, 3, 4).unwrap();
        assert!(are_isomorphic(&a, &b), "{base}");
        assert_eq!(csf_schur(&a).unwrap(), csf_schur(&b).unwrap());
    }
}

#[test]
fn precondition_errors() {
    let base = family_base();
    // Forbidden edge already present.
    let bad = base.with_edges(&[(1, 3)]).unwrap();
    let err = orellana_scott_pair(&bad, 1, 2, 3, 4).unwrap_err().to_string();
    assert!(err.contains("uw"), "{err}");
    // Missing required edge.
    let missing = Graph::new(4, [(2, 3)]).unwrap();
    let err = orellana_scott_pair(&missing, 1, 2, 3, 4).unwrap_err().to_string();
    assert!(err.contains("uz"), "{err}");
    // Repeated vertex, vertex out of range.
    assert!(orellana_scott_pair(&base, 1, 1, 3, 4).is_err());
    assert!(orellana_scott_pair(&base, 1, 2, 3, 9).is_err());
    // No automorphism: a pendant edge on u only.
    let lopsided = Graph::new(5, [(1, 4), (2, 3), (1, 5)]).unwrap();
    let err = orellana_scott_pair(&lopsided, 1, 2, 3, 4).unwrap_err().to_string();
    assert!(err.contains("automorphism"), "{err}");
}
