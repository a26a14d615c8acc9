//! Versal non-commutative deformation of a simple collection: the two
//! plane ideals at a 3-fold node stop after one step, the residue field of
//! a curve node does not.

use singcat::groebner::{FPModule, Grading, QuotientRing};
use singcat::ncdef::{flatness_filtration_check, run, SimpleCollection};
use singcat::sodcheck::LocalModel;

fn main() -> singcat::Result<()> {
    let ls = LocalModel::node().modules()?;
    let rep = run(&SimpleCollection::new(ls.to_vec(), Grading::Degree(0))?, 8)?;
    let s = rep.final_state();
    println!("3-fold node: {:?}, dims {:?}", rep.outcome, rep.dims);
    println!("  radical square zero: {}", s.algebra.radical_square_zero());
    println!("  flat: {}", flatness_filtration_check(s).flat);

    let r = QuotientRing::parse("Q[x,y]/(x*y)")?;
    let k = FPModule::parse("R/(x, y)", Some(&r))?;
    let rep = run(&SimpleCollection::new(vec![k], Grading::Total)?, 4)?;
    println!("curve node: {:?}, dims {:?}", rep.outcome, rep.dims);
    Ok(())
}
