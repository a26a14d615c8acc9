//! Exceptionality of a collection of line bundles on a toric 3-fold.

use singcat::sodcheck::{check_exceptional, CollectionSpec};
use singcat::toric::library;

fn main() -> singcat::Result<()> {
    let y = library("blowupP3_2pts")?;
    let c = CollectionSpec::line_bundles("five", &y, &["-3H+2E1+E2", "-3H+E1+2E2", "-2H+E1+E2", "-H+E1", "0"])?;
    let r = check_exceptional(&c)?;
    println!("exceptional: {}, strong: {}", r.exceptional, r.strong);
    for (i, row) in r.matrix.iter().enumerate() {
        let cells: Vec<String> = row
            .iter()
            .map(|ext| ext.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        println!("  Ext^*(E_{}, E_j): {}", i + 1, cells.join(" | "));
    }
    let p3 = library("P3")?;
    let beilinson = CollectionSpec::line_bundles("P3", &p3, &["0", "H", "2H", "3H"])?;
    println!("O, O(1), O(2), O(3) on P3 strong: {}", check_exceptional(&beilinson)?.strong);
    Ok(())
}
