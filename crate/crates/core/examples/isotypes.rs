//! Specht-module multiplicities in the rational homology of K4.

use csh::homology::isotype_decomposition;
use csh::{build_full_complex, homology, Graph};

fn main() -> csh::Result<()> {
    let c = build_full_complex(&Graph::complete(4), None)?;
    for h in homology(&c)? {
        println!("H_{} = {h}", h.degree);
    }
    for (lambda, mult) in isotype_decomposition(&c)? {
        println!("S{lambda}: {mult:?}");
    }
    Ok(())
}
