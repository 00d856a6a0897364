//! Grows the eleven pairwise fertile deformed 4-permutahedra to 121 members
//! on five elements, and optionally once more to 14 641 members on six.
//!
//! ```text
//! cargo run --release --example grow_family          # n = 5
//! cargo run --release --example grow_family -- 6     # n = 5 and n = 6
//! ```

use std::time::Instant;

use subcone::fixtures;
use subcone::grower::{grow_once, lineage, Family, VerifyOptions};

fn main() -> subcone::Result<()> {
    let target: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(5);
    let opts = VerifyOptions::default();
    let mut levels = vec![Family::axioms(fixtures::n4_family())?];
    while levels.last().expect("nonempty").n < target {
        let start = Instant::now();
        let parent = levels.last_mut().expect("nonempty");
        let grown = grow_once(parent, &opts)?;
        let report = grown.verdicts.as_ref().expect("verified");
        println!("{report}");
        println!("grown to n = {} in {:.1?}\n", grown.n, start.elapsed());
        levels.push(grown);
    }
    let top = levels.len() - 1;
    for idx in [0, levels[top].len() / 2, levels[top].len() - 1] {
        println!("member {:>5}: {}", idx + 1, lineage(&levels, top, idx)?);
    }
    Ok(())
}
