//! Cohomology of line bundles on the blowup of P3 in two torus-fixed points.

use singcat::toric::{cohomology, intersect_curve, library, Fan};

fn h(y: &Fan, d: &str) -> Vec<usize> {
    cohomology(y, &y.divisor(d).unwrap()).unwrap()
}

fn y() -> Fan {
    library("blowupP3_2pts").unwrap()
}

#[test]
fn acyclic_twists() {
    let y = y();
    for d in [
        "E1-E2",
        "-H+E1",
        "-H+E2",
        "-2H+E1+E2",
        "-2H+2E2",
        "-2H+2E1",
        "-3H+2E1+E2",
        "-3H+E1+2E2",
        "-4H+3E1+2E2",
        "-3H+E1+E2",
        "-4H+2E1+3E2",
        "-3H+2E2",
        "-3H+2E1+2E2",
        "-2H+E2",
        "-2H+E1",
        "-2H+2E1+E2",
        "-2H+E1+2E2",
        "-2H+2E1+2E2",
        "-H",
        "-H+E1+E2",
        "-E1",
        "-E2",
        "-H+2E1+E2",
    ] {
        assert_eq!(h(&y, d), vec![0; 4], "H^*({d})");
    }
}

#[test]
fn twists_without_higher_cohomology() {
    let y = y();
    for d in ["-E1+E2", "H-E1", "H-E2", "2H-E1-E2", "2H-2E2", "3H-2E1-E2", "3H-E1-2E2"] {
        assert!(h(&y, d)[1..].iter().all(|&x| x == 0), "H^*({d}) = {:?}", h(&y, d));
    }
    // sections: hyperplanes, through a point, quadrics through both points
    assert_eq!(h(&y, "H")[0], 4);
    assert_eq!(h(&y, "H-E1")[0], 3);
    assert_eq!(h(&y, "2H-E1-E2")[0], 8);
    assert_eq!(h(&y, "0"), vec![1, 0, 0, 0]);
}

#[test]
fn the_one_nonvanishing_ext() {
    let y = y();
    assert_eq!(h(&y, "H-2E1-E2"), vec![0, 1, 0, 0]);
}

#[test]
fn canonical_class_and_line() {
    let y = y();
    let l = y.wall(&[0, 1]).unwrap();
    let k = y.canonical();
    assert_eq!(intersect_curve(&y, &k, &l).unwrap(), 0);
    for c in ["-3H+2E1+E2", "-3H+E1+2E2", "-2H+E1+E2", "-H+E1", "0"] {
        assert_eq!(intersect_curve(&y, &y.divisor(c).unwrap(), &l).unwrap(), 0, "{c}");
    }
}
