//! Deformation of the two rank-one reflexive ideals on the 3-fold node.

use std::time::Instant;

use singcat::groebner::{FPModule, Grading, QuotientRing};
use singcat::ncdef::{flatness_filtration_check, matches_two_cycle, run, Outcome, SimpleCollection};

#[test]
fn cone_ideals_terminate_after_one_step() {
    let t0 = Instant::now();
    let t = QuotientRing::parse("Q[x,y,z,w,v]/(x*y+z*w)").unwrap();
    let i1 = FPModule::parse("ideal (x, z)", Some(&t)).unwrap();
    let i2 = FPModule::parse("ideal (x, w)", Some(&t)).unwrap();
    let c = SimpleCollection::new(vec![i1, i2], Grading::Degree(0)).unwrap();
    let rep = run(&c, 8).unwrap();
    assert_eq!(rep.outcome, Outcome::Terminated { step: 1 });
    assert_eq!(rep.dims, vec![2, 4]);
    let s = rep.final_state();
    assert_eq!(s.full_end_dim, 4);
    assert!(s.algebra.radical_square_zero());
    assert!(matches_two_cycle(s));
    let f = flatness_filtration_check(s);
    assert!(f.flat);
    assert_eq!(f.multiplicities, vec![2, 2]);
    assert_eq!(s.fresh_ext1().unwrap(), vec![vec![0, 0], vec![0, 0]]);
    eprintln!("deformation: {:?}", t0.elapsed());
    assert_eq!(&s.self_ext(3).unwrap()[1..], &[0, 0, 0]);
    eprintln!("with self ext: {:?}", t0.elapsed());
}
