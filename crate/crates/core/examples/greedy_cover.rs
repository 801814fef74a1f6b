//! The certified greedy cover in both modes.
//!
//! Run with `cargo run --example greedy_cover -- 30 4 8` to choose the size,
//! degree and number of steps of the random graph used in fast mode.

use pmcover::cover::{greedy_cover, CoverOptions};
use pmcover::generators;
use pmcover::numeric::fmt_rational;

fn main() -> pmcover::Result<()> {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("numeric argument"))
        .collect();
    let (n, r, k) = match args[..] {
        [n, r, k] => (n, r as u32, k),
        _ => (30, 4, 8),
    };

    let petersen = generators::petersen();
    let exact = greedy_cover(&petersen, 3, 4, CoverOptions::exact())?;
    println!("petersen, exact-lemma mode:");
    for c in &exact.certificates {
        println!(
            "  step {} {:?}: gained {} of {} uncovered, certified >= {}",
            c.step,
            c.level,
            c.actual_gain,
            c.uncovered_before,
            fmt_rational(&c.predicted_gain)
        );
    }
    println!(
        "  covered {} (bound {})",
        fmt_rational(&exact.fraction),
        fmt_rational(&exact.bound)
    );

    let g = generators::random_regular(n, r, 1)?;
    let fast = greedy_cover(&g, r, k, CoverOptions::default())?;
    println!("random {r}-graph on {n} vertices, fast mode:");
    for c in &fast.certificates {
        println!(
            "  step {} {:?}: gained {} of {} uncovered, certified >= {}",
            c.step,
            c.level,
            c.actual_gain,
            c.uncovered_before,
            fmt_rational(&c.predicted_gain)
        );
    }
    println!(
        "  covered {} (bound {}, met: {})",
        fmt_rational(&fast.fraction),
        fmt_rational(&fast.bound),
        fast.bound_met
    );
    Ok(())
}
