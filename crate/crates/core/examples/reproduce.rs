//! Runs the bundled claim list and prints a summary, as `singcat
//! reproduce` does.

use singcat::cli::manifest::{reproduce, select};

fn main() {
    let claims = select(Some("quadric-cone"), None, None).expect("known section");
    for e in reproduce(&claims) {
        println!("{:<36} {:?} {}", e.claim_id, e.verdict, e.computed);
    }
}
