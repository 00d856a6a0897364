//! Seeds, fertility and compositions for the five indecomposable
//! deformed 3-permutahedra.
//!
//! ```text
//! cargo run --example fertile_pairs
//! ```

use subcone::fixtures;
use subcone::polymat::GPolymatroid;
use subcone::seeds;
use subcone::Rat;

fn main() -> subcone::Result<()> {
    let named = fixtures::n3_indecomposables();
    let fam: Vec<_> = named.iter().map(|(_, f)| f.clone()).collect();
    let graph = seeds::fertility_graph(&fam)?;
    println!("fertile ordered pairs:");
    for (u, v) in &graph.edges {
        let report = seeds::seed_report(&fam[*u], &fam[*v])?;
        println!(
            "  {} -> {}: lambda_min = {}, breakpoints {:?}",
            named[*u].0,
            named[*v].0,
            report.lambda_min.expect("fertile"),
            report.breakpoints
        );
    }

    let one = Rat::one();
    println!("\nphi(1, 1):");
    for (pn, p) in &named {
        let row: Vec<String> = fam
            .iter()
            .map(|q| format!("{:?}", seeds::phi(p, q, &one, &one).expect("same n")))
            .collect();
        println!("  {pn}: {}", row.join(" "));
    }

    for (top, bottom) in [("S1", "T1"), ("T2", "T1")] {
        let c = seeds::compose(&fixtures::n3_named(top), &fixtures::n3_named(bottom))?;
        let g = GPolymatroid::from_lifted(c.lifted.clone())?;
        println!("\n{top} over {bottom}: bottom shift {:?}", c.phi);
        for v in g.lifted_vertices()? {
            println!("  {v:?}");
        }
        println!("  certificate: {:?}", c.certificate);
    }
    Ok(())
}
