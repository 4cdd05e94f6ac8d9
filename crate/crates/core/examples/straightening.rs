//! Straighten a few numberings into the standard basis of a Specht module.

use csh::straighten::straighten;
use csh::Numbering;

fn main() -> csh::Result<()> {
    for text in ["21|3", "31|2", "14|32", "531|42"] {
        let s = Numbering::parse(text)?;
        println!("{s} = {}", straighten(&s));
    }
    Ok(())
}
