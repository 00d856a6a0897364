//! Validity, indecomposability, inequivalence and fertility of a family,
//! on the eleven-member family and on the five 3-element indecomposables.
//!
//! ```text
//! cargo run --example verify_family
//! ```

use subcone::fixtures;
use subcone::grower::{greedy_mutual_clique, verify_family, Family, VerifyOptions};

fn main() -> subcone::Result<()> {
    let opts = VerifyOptions::default();
    let four = Family::axioms(fixtures::n4_family())?;
    println!("{}\n", verify_family(&four, &opts)?);

    let three: Vec<_> = fixtures::n3_indecomposables().into_iter().map(|(_, f)| f).collect();
    println!("{}\n", verify_family(&Family::axioms(three.clone())?, &opts)?);

    let clique = greedy_mutual_clique(&three)?;
    println!("largest greedy pairwise fertile subfamily: {} member(s)", clique.len());
    Ok(())
}
