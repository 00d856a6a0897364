//! Generalized polymatroids as GP-sums of a quotient pair, with their upper
//! and lower functions and the lift to one more coordinate.
//!
//! ```text
//! cargo run --example gp_sum
//! ```

use subcone::fixtures;
use subcone::polymat::{self, QuotientPair};
use subcone::submod::full_set;
use subcone::Rat;

fn main() -> subcone::Result<()> {
    let top = fixtures::s1();
    let bottom = fixtures::t1().translate(&[Rat::zero(), Rat::from(-1), Rat::from(-1)])?;
    println!("quotient: {}", polymat::is_quotient(&top, &bottom)?);
    let g = QuotientPair::new(top, bottom)?.gp_sum();
    println!("vertices:");
    for v in g.vertices()? {
        println!("  {v:?} lifts to {:?}", polymat::lift_point(&v));
    }
    for s in 0..=full_set(3) {
        println!("  X = {s:03b}: p = {}, b = {}", g.p(s), g.b(s));
    }
    println!("{}", subcone::io::to_json(&g)?);

    // top and bottom face must be a quotient pair
    let swapped = QuotientPair::new(fixtures::t1(), fixtures::s1());
    println!("T1 over S1: {}", swapped.map(|_| "ok".to_string()).unwrap_or_else(|e| e.to_string()));
    Ok(())
}
