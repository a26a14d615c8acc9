//! Exceptional collections on the two-point blowup of P3 and on its
//! contraction.

use singcat::sodcheck::{check_exceptional, check_orthogonal_to_f, CollectionSpec, Dim};
use singcat::toric::{library, weil_is_cartier};

const PULLBACKS: [&str; 5] = ["-3H+2E1+E2", "-3H+E1+2E2", "-2H+E1+E2", "-H+E1", "0"];

#[test]
fn eight_line_bundles_are_exceptional() {
    let y = library("blowupP3_2pts").unwrap();
    let c = CollectionSpec::line_bundles(
        "eight",
        &y,
        &["-3H+2E1+E2", "-3H+E1+2E2", "-2H+E1+E2", "-H+E1", "-H+E2", "-H+E1+E2", "0", "H-E1-E2"],
    )
    .unwrap();
    let r = check_exceptional(&c).unwrap();
    assert!(r.exceptional, "{:?}", r.witnesses);
}

#[test]
fn pulled_back_bundles_are_strong_exceptional() {
    let y = library("blowupP3_2pts").unwrap();
    let c = CollectionSpec::line_bundles("five", &y, &PULLBACKS).unwrap();
    let r = check_exceptional(&c).unwrap();
    assert!(r.exceptional && r.strong, "{:?}", r.witnesses);
    // Hom(O(C_4), O(C_1)) vanishes in every degree
    assert!(r.matrix[3][0].iter().all(Dim::is_zero));
    assert_eq!(r.matrix[4][4], vec![Dim::Exact(1), Dim::Exact(0), Dim::Exact(0), Dim::Exact(0)]);
}

#[test]
fn same_collection_on_the_singular_variety() {
    // the divisors have degree zero on the curve, so they are Cartier on X
    // and Ext groups can be computed there directly
    let x = library("contractP3_2pts").unwrap();
    for d in PULLBACKS {
        assert!(weil_is_cartier(&x, &x.divisor(d).unwrap()), "{d}");
    }
    assert!(!weil_is_cartier(&x, &x.divisor("E1").unwrap()));
    let c = CollectionSpec::line_bundles("five on X", &x, &PULLBACKS).unwrap();
    let r = check_exceptional(&c).unwrap();
    assert!(r.strong, "{:?}", r.witnesses);
}

#[test]
fn collection_is_orthogonal_to_the_deformation() {
    let y = library("blowupP3_2pts").unwrap();
    let c = CollectionSpec::line_bundles("five", &y, &PULLBACKS).unwrap();
    let d = [y.divisor("-H+E1+E2").unwrap(), y.divisor("-E1").unwrap()];
    let r = check_orthogonal_to_f(&c, &d).unwrap();
    assert_eq!(r.semiorthogonal_to_f, Some(true), "{:?}", r.witnesses);
    assert!(r.passed());
    let l_notes = r.notes.iter().filter(|n| n.starts_with("Ext(L_")).count();
    assert_eq!(l_notes, 10);
}
