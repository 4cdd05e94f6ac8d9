//! Non-isomorphic fixture pairs with equal chromatic symmetric functions.

use csh::graph::are_isomorphic;
use csh::symfun::csf_schur;
use csh::builtin;

fn main() -> csh::Result<()> {
    for (a, b) in [("G1", "G2"), ("G3", "G4"), ("G5", "G6"), ("G7", "G8")] {
        let (ga, gb) = (builtin(a).expect("builtin"), builtin(b).expect("builtin"));
        let (xa, xb) = (csf_schur(&ga)?, csf_schur(&gb)?);
        println!(
            "{a}/{b}: isomorphic {}, equal CSF {}, planar {}/{}",
            are_isomorphic(&ga, &gb),
            xa == xb,
            ga.is_planar(),
            gb.is_planar()
        );
        println!("  {}", xa.to_json());
    }
    Ok(())
}
