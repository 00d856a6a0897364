//! Extreme rays of the submodular cone by double description, cross-checked
//! against the eleven pairwise fertile deformed 4-permutahedra.
//!
//! ```text
//! cargo run --release --example enumerate_rays          # n = 2, 3, 4
//! cargo run --release --example enumerate_rays -- 3     # up to n = 3
//! ```

use std::time::Instant;

use subcone::fixtures;
use subcone::raycone::{cross_check, enumerate_rays, sc_facets, EnumerateOptions};

fn main() -> subcone::Result<()> {
    let max: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    for n in 2..=max {
        let start = Instant::now();
        let h = sc_facets(n)?;
        let facets = h.normals.len();
        let rays = enumerate_rays(h, &EnumerateOptions::default())?;
        println!("n = {n}: {facets} facets, {} rays in {:.2?}", rays.count(), start.elapsed());
        if n == 3 {
            print!("{}", rays.to_text());
        }
        if n == 4 {
            let check = cross_check(&fixtures::n4_family(), &rays)?;
            println!("family members found among the rays: {:?}", check.matches);
        }
    }
    Ok(())
}
