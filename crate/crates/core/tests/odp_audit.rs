//! Hypothesis audits for the two 3-folds with one node.

use singcat::sodcheck::{verify_odp_hypotheses, OdpBundle};

#[test]
fn blowup_bundle_passes() {
    let a = verify_odp_hypotheses(&OdpBundle::blowup_p3().unwrap()).unwrap();
    for c in a.conditions.iter().chain(&a.conclusions) {
        eprintln!("{}: {} ({})", c.name, c.passed, c.detail);
    }
    assert!(a.passed());
    assert_eq!(a.dim_r, Some(4));
}

#[test]
fn quadric_cone_bundle_passes() {
    let a = verify_odp_hypotheses(&OdpBundle::quadric_cone().unwrap()).unwrap();
    for c in a.conditions.iter().chain(&a.conclusions) {
        eprintln!("{}: {} ({})", c.name, c.passed, c.detail);
    }
    assert!(a.passed());
    assert_eq!(a.dim_r, Some(4));
}
