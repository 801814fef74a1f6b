//! Search for 2r perfect matchings covering every edge exactly twice.

use pmcover::fractional::{bf_double_cover, DoubleCover};
use pmcover::generators;
use pmcover::matching::DEFAULT_PM_CAP;

fn main() -> pmcover::Result<()> {
    for (name, g, r) in [
        ("petersen", generators::petersen(), 3),
        ("k33", generators::k33(), 3),
        ("prism:6", generators::prism(6)?, 3),
        (
            "random_regular:12,4,5",
            generators::random_regular(12, 4, 5)?,
            4,
        ),
    ] {
        match bf_double_cover(&g, r, DEFAULT_PM_CAP)? {
            DoubleCover::Found(ms) => {
                println!("{name}: found");
                for m in ms {
                    println!("  {:?}", m.edges().ids());
                }
            }
            DoubleCover::Exhausted { matchings_searched } => {
                println!("{name}: none among {matchings_searched} perfect matchings");
            }
        }
    }
    Ok(())
}
