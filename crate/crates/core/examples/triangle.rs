//! The triangle K3: restricted matrices for S(2,1) and full integral homology.

use csh::homology::{format_chain, homology_generators};
use csh::{build_full_complex, build_restricted_complex, builtin, homology, Partition};

fn main() -> csh::Result<()> {
    let k3 = builtin("K3").expect("builtin");
    let c = build_restricted_complex(&k3, &Partition::new(vec![2, 1])?)?;
    println!("d1 = {:?}", c.boundaries[0].to_dense());
    for g in homology_generators(&c)? {
        println!("generator: {}", format_chain(&g, &c.labels[1]));
    }
    for h in homology(&build_full_complex(&k3, None)?)? {
        println!("H_{} = {h}", h.degree);
    }
    Ok(())
}
