//! Stable endomorphisms of the normalization of a nodal cubic, and how
//! the idempotents depend on the field.

use singcat::groebner::{stable_hom, FPModule, QuotientRing};

fn normalization(field: &str) -> singcat::Result<FPModule> {
    let ring = format!("{field}[z,w]/(z^2+z^3+w^2)");
    let r = QuotientRing::parse(&ring)?;
    FPModule::parse(&format!("module over {ring} generators e,t relations [[w,-z],[z^2+z,w]]"), Some(&r))
}

fn main() -> singcat::Result<()> {
    for field in ["Q", "F5", "F7"] {
        let c = normalization(field)?;
        let end = stable_hom(&c, &c)?;
        let alg = end.algebra()?;
        println!(
            "over {field}: dim {}, k[t]/(t^2+1): {}, idempotents: {}",
            end.dim(),
            alg.is_quadratic_minus_one(),
            alg.idempotents()?.len()
        );
    }
    Ok(())
}
