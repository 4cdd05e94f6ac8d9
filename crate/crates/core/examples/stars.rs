//! H0 and H1 of the star graphs K_{1,n-1}.

use csh::{build_full_complex, homology, Graph};

fn main() -> csh::Result<()> {
    for n in 3..=7 {
        let h = homology(&build_full_complex(&Graph::star(n), Some(2))?)?;
        println!("star on {n} vertices: H_0 = {}, H_1 = {}", h[0], h[1]);
    }
    Ok(())
}
