//! Submodularity, tight triples and the ray certificate of a set function.
//!
//! ```text
//! cargo run --example submodular_check
//! ```

use subcone::fixtures;
use subcone::{Rat, SetFunction};

fn main() -> subcone::Result<()> {
    let t1 = fixtures::t1();
    let cert = t1.is_indecomposable()?;
    println!("T1 values: {:?}", t1.values());
    println!("T1 tight triples: {}", cert.tight.len());
    println!("T1 defo_dim = {}, indecomposable = {}", cert.defo_dim, cert.indecomposable);

    let perm = SetFunction::permutahedron(3);
    println!("permutahedron defo_dim = {}", perm.defo_dim());
    for (sigma, x) in perm.vertex_table()?.entries() {
        println!("  σ = {sigma:?} -> {x:?}");
    }

    let bad = SetFunction::from_fn(3, |x| Rat::from(x.count_ones().pow(2) as i64));
    match bad.first_violation() {
        Some(t) => println!("|X|^2 violates submodularity at {t:?}"),
        None => println!("|X|^2 is submodular"),
    }
    Ok(())
}
