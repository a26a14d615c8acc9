//! Reduced Gröbner basis of an ideal, and normal forms modulo it.

use singcat::groebner::QuotientRing;

fn main() -> singcat::Result<()> {
    let r = QuotientRing::parse("Q[x,y]/(x^2 - y, x*y)")?;
    println!("reduced basis:");
    for g in r.gb_polys() {
        println!("  {g}");
    }
    let p = r.parse_poly("x^3 + x^2*y + 2*x")?;
    println!("x^3 + x^2*y + 2*x reduces to {}", r.nf(&p));
    println!("Krull dimension {}", r.krull_dim());
    Ok(())
}
