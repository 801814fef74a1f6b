//! How often the step vector leaves the polytope.
//!
//! Fast mode never enforces the cut invariants, so its step vectors are
//! checked rather than trusted; exact-lemma mode enforces them through the
//! tight-cut face. This counts membership failures in both modes over random
//! r-graphs, eight steps per graph.
//!
//! `cargo run --release --example membership_survey -- 40` sets the number of
//! graphs per (n, r).

use pmcover::cover::{greedy_cover, BoundLevel, CoverOptions};
use pmcover::generators::random_regular;

fn main() -> pmcover::Result<()> {
    let per_class: u64 = std::env::args()
        .nth(1)
        .map_or(10, |a| a.parse().expect("count"));
    println!(
        "{:<8} {:<5} {:>6} {:>12} {:>12}",
        "n", "r", "steps", "fast misses", "exact misses"
    );
    for (n, r) in [
        (10, 3),
        (14, 3),
        (16, 3),
        (10, 4),
        (14, 4),
        (16, 4),
        (10, 5),
        (14, 5),
    ] {
        let (mut steps, mut fast_misses, mut exact_misses) = (0, 0, 0);
        for seed in 0..per_class {
            let g = random_regular(n, r, seed)?;
            let k = 8;
            let fast = greedy_cover(&g, r, k, CoverOptions::default())?;
            let exact = greedy_cover(&g, r, k, CoverOptions::exact())?;
            for (f, e) in fast.certificates.iter().zip(&exact.certificates).skip(1) {
                steps += 1;
                fast_misses += usize::from(f.level != BoundLevel::L1);
                exact_misses += usize::from(e.level != BoundLevel::L1);
            }
        }
        println!("{n:<8} {r:<5} {steps:>6} {fast_misses:>12} {exact_misses:>12}");
    }
    Ok(())
}
