//! Exact comparison of `p^(2^(n−k))` with `2^(2^(n−2))` and `n^(2^n)` for the
//! families of size 11 at k = 4 and 656 at k = 5.
//!
//! ```text
//! cargo run --example bounds
//! ```

use subcone::grower::bound_report;

fn main() -> subcone::Result<()> {
    for (k, p) in [(4, 11), (5, 656)] {
        for n in 5..=12 {
            println!("{}", bound_report(k, p, n)?);
        }
        println!();
    }
    println!("{}", bound_report(5, 656, 40)?);
    Ok(())
}
