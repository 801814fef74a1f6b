//! Minimum odd cut under fractional weights, computed with a Gomory–Hu tree
//! and cross-checked against subset enumeration.

use pmcover::cuts::{min_odd_cut, min_odd_cut_brute_force, DEFAULT_ODD_CAP};
use pmcover::numeric::{fmt_rational, ratio};
use pmcover::{generators, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> pmcover::Result<()> {
    let g = generators::petersen();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for round in 0..5 {
        let w: Vec<Rational> = (0..g.edge_count())
            .map(|_| ratio(rng.gen_range(0..12), rng.gen_range(1..7)))
            .collect();
        let fast = min_odd_cut(&g, &w)?;
        let slow = min_odd_cut_brute_force(&g, &w, DEFAULT_ODD_CAP)?;
        assert_eq!(fast.value, slow.value);
        println!(
            "round {round}: min odd cut {} around {} (brute force agrees)",
            fmt_rational(&fast.value),
            fast.witness
        );
    }
    Ok(())
}
