//! Independence polytopes of deformed permutahedra, including the uniform
//! matroid U(2,4).
//!
//! ```text
//! cargo run --example independence_polytope
//! ```

use subcone::fixtures;
use subcone::polymat::independence_polytope;
use subcone::{Rat, SetFunction};

fn main() -> subcone::Result<()> {
    let u24 = SetFunction::from_fn(4, |x| Rat::from(x.count_ones().min(2) as i64));
    let ind = independence_polytope(&u24)?;
    let verts = ind.vertices()?;
    println!("U(2,4): {} vertices", verts.len());
    for v in &verts {
        println!("  {v:?}");
    }

    for (name, f) in fixtures::n3_indecomposables() {
        let ind = independence_polytope(&f)?;
        let cert = ind.lifted().is_indecomposable()?;
        println!(
            "{name}: {} vertices, lift indecomposable = {} (defo_dim {})",
            ind.vertices()?.len(),
            cert.indecomposable,
            cert.defo_dim
        );
    }
    Ok(())
}
