//! Line bundle cohomology on P3 blown up in two points.

use singcat::toric::{cohomology, euler_characteristic, library};

fn main() -> singcat::Result<()> {
    let y = library("blowupP3_2pts")?;
    for d in ["0", "H", "H-E1", "-H+E1+E2", "-4H+3E1+2E2", "-H-E1+E2"] {
        let h = cohomology(&y, &y.divisor(d)?)?;
        println!("H^*(O({d})) = {h:?}, chi = {}", euler_characteristic(&h));
    }
    let k = y.canonical();
    println!("canonical divisor {:?}: {:?}", k.coeffs, cohomology(&y, &k)?);
    Ok(())
}
