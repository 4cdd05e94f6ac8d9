//! Restricted complexes of the six-vertex fixtures and their generators.

use csh::homology::{format_chain, homology_generators};
use csh::snf::rank_q;
use csh::{build_restricted_complex, builtin, Partition};

fn main() -> csh::Result<()> {
    for (name, shape) in [("G1", vec![2, 2, 2]), ("G2", vec![2, 2, 2]), ("G5", vec![2, 2, 1, 1])] {
        let lambda = Partition::new(shape)?;
        let c = build_restricted_complex(&builtin(name).expect("builtin"), &lambda)?;
        let (r1, r2) = (rank_q(&c.boundaries[0]), rank_q(&c.boundaries[1]));
        println!("{name}, S{lambda}: dims {:?}, ker d1 = {}, rank d2 = {r2}", c.dims, c.dims[1] - r1);
        for g in homology_generators(&c)? {
            println!("  {}", format_chain(&g, &c.labels[1]));
        }
    }
    Ok(())
}
