//! Free resolutions and Ext groups between the two plane ideals on the
//! 3-fold node `xy + zw = 0`.

use singcat::groebner::{higher_ext_dims, resolve, FPModule, Grading, QuotientRing};

fn main() -> singcat::Result<()> {
    let r = QuotientRing::parse("Q[x,y,z,w]/(x*y+z*w)")?;
    let i1 = FPModule::parse("ideal (x, z)", Some(&r))?;
    let i2 = FPModule::parse("ideal (x, w)", Some(&r))?;
    let res = resolve(&i1, 5);
    println!("ranks of the resolution of I1: {:?}", (0..=5).map(|i| res.rank(i)).collect::<Vec<_>>());
    println!("resolution is a complex: {}", res.is_complex());
    for (name, n) in [("I1", &i1), ("I2", &i2)] {
        let dims = higher_ext_dims(&i1, n, 6, Grading::Total)?;
        println!("dim Ext^p(I1, {name}), p = 1..6: {dims:?}");
    }
    Ok(())
}
