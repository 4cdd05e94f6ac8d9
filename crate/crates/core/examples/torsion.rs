//! Two-torsion in H1 of K3,3: the full Smith form and a restricted witness.

use csh::complex::{build_restricted_complex_with, GeneratorOrder, RestrictedGenerators};
use csh::homology::{parse_chain, verify_torsion_witness};
use csh::{build_full_complex, builtin, homology, Partition};

const G: &str = "W_{16}-W_{17}+W_{18}+W_{19}-W_{24}-W_{25}+W_{27}+W_{29}+W_{34}-W_{35}+W_{36}+W_{38}+W_{48}+W_{49}+W_{56}+W_{57}-W_{69}+W_{78}";
const H: &str = "X_6^3-X_7^3+X_8^3-X_9^2";

fn main() -> csh::Result<()> {
    let k33 = builtin("K33").expect("builtin");
    let h = homology(&build_full_complex(&k33, Some(2))?)?;
    println!("H_1(K33) = {}", h[1]);
    let gens = RestrictedGenerators::with_order(&k33, &Partition::new(vec![2, 2, 1, 1])?, GeneratorOrder::RowWord)?;
    let c = build_restricted_complex_with(&gens, &k33)?;
    let (g, h) = (parse_chain(G, &c.labels[2])?, parse_chain(H, &c.labels[1])?);
    println!("d2 g = 2h, d1 h = 0, h not a boundary: {}", verify_torsion_witness(&c, &g, &h)?);
    Ok(())
}
