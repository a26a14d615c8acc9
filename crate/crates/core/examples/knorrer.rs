//! Matrix factorizations of the curve node `zw` and their Knörrer
//! doubling to the 3-fold node `zw + xy`.

use singcat::groebner::{FPModule, QuotientRing};
use singcat::matfac::{knorrer, mf_from_module, mf_shift, mf_stable_hom};

fn main() -> singcat::Result<()> {
    let r = QuotientRing::parse("Q[z,w]/(z*w)")?;
    let mz = mf_from_module(&FPModule::parse("B/(w)", Some(&r))?)?;
    println!("M_z: {mz}");
    println!("shift of M_z: {}", mf_shift(&mz));
    let k = knorrer(&mz, "x", "y")?;
    println!("doubled: {k}");
    println!("valid: {}", k.is_valid());
    for (name, x) in [("before", &mz), ("after", &k)] {
        let h = mf_stable_hom(x, x)?;
        println!("{name}: stable End has even dim {} and odd dim {}", h.even, h.odd);
    }
    Ok(())
}
