//! Build a pair from a base graph and a quadruple, then compare H1.
//! Pass `--h1` to compute H1 of both members (several seconds each).

use csh::graph::{are_isomorphic, family_base, orellana_scott_pair, FAMILY_QUAD};
use csh::homology::homology;
use csh::complex::build_full_complex_capped;
use csh::symfun::csf_schur;

fn main() -> csh::Result<()> {
    let (u, v, w, z) = FAMILY_QUAD;
    let (a, b) = orellana_scott_pair(&family_base(), u, v, w, z)?;
    println!("A = {a}\nB = {b}");
    println!("isomorphic {}, equal CSF {}", are_isomorphic(&a, &b), csf_schur(&a)? == csf_schur(&b)?);
    println!("planar {}/{}", a.is_planar(), b.is_planar());
    if std::env::args().any(|x| x == "--h1") {
        for (name, g) in [("A", &a), ("B", &b)] {
            let h = homology(&build_full_complex_capped(g, Some(2), 2_000_000)?)?;
            println!("H_1({name}) = {}", h[1]);
        }
    }
    Ok(())
}
