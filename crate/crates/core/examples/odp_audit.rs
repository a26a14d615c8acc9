//! Hypothesis audit for a pair of rank-one sheaves through a 3-fold node.

use singcat::sodcheck::{verify_odp_hypotheses, OdpBundle};

fn main() -> singcat::Result<()> {
    let audit = verify_odp_hypotheses(&OdpBundle::quadric_cone()?)?;
    println!("{}", audit.bundle);
    for c in audit.conditions.iter().chain(&audit.conclusions) {
        println!("  [{}] {}: {}", if c.passed { "ok" } else { "FAILED" }, c.name, c.detail);
    }
    println!("dim End(F) at the node: {:?}", audit.dim_r);
    println!("all passed: {}", audit.passed());
    Ok(())
}
