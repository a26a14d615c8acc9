//! Intersection numbers with torus-invariant curves and the Cartier test
//! on the projective cone over a quadric surface.

use singcat::toric::{intersect_curve, library, weil_is_cartier};

fn main() -> singcat::Result<()> {
    let y = library("coneP1xP1_smallres")?;
    let c = y.wall(&[1, 3])?;
    for d in ["A", "B", "Hinf"] {
        println!("{d} . C = {}", intersect_curve(&y, &y.divisor(d)?, &c)?);
    }
    let x = library("coneP1xP1_projective")?;
    for d in ["A", "B", "A+B", "2A+2B", "A-B"] {
        println!("{d} is Cartier on the cone: {}", weil_is_cartier(&x, &x.divisor(d)?));
    }
    Ok(())
}
