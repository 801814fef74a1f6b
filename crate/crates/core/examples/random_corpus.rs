//! Random r-graphs from the pairing model, checked against the improved
//! bound with the exact-lemma greedy and the brute-force optimum.

use pmcover::cover::{greedy_cover, CoverOptions};
use pmcover::exact::ExactAnalyzer;
use pmcover::generators::random_regular;
use pmcover::matching::DEFAULT_PM_CAP;
use pmcover::numeric::fmt_rational;

fn main() -> pmcover::Result<()> {
    for (n, r) in [(10, 3), (12, 3), (10, 4), (12, 4), (10, 5), (12, 5)] {
        for seed in 0..2 {
            let g = random_regular(n, r, seed)?;
            let analyzer = ExactAnalyzer::new(&g, DEFAULT_PM_CAP)?;
            let greedy = greedy_cover(&g, r, 3, CoverOptions::exact())?;
            let best = analyzer.m_exact(3)?;
            println!(
                "n={n:<2} r={r} seed={seed}: {} PMs, bound {} <= greedy {} <= optimum {}",
                analyzer.matchings().len(),
                fmt_rational(&greedy.bound),
                fmt_rational(&greedy.fraction),
                fmt_rational(&best.fraction)
            );
            assert!(greedy.bound <= greedy.fraction && greedy.fraction <= best.fraction);
        }
    }
    Ok(())
}
