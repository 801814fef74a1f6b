//! Cut invariants after each greedy step, on a graph where the fast mode
//! and the exact-lemma mode may pick different matchings.

use pmcover::cover::{
    audit_cut_invariants, greedy_cover, CoverOptions, CoverState, CutAudit, Mode,
};
use pmcover::generators;

fn main() -> pmcover::Result<()> {
    let g = generators::random_regular(14, 4, 2)?;
    for mode in [Mode::Fast, Mode::ExactLemma] {
        let options = CoverOptions {
            mode,
            ..CoverOptions::default()
        };
        let report = greedy_cover(&g, 4, 5, options)?;
        println!("{mode:?}");
        for j in 1..=report.matchings.len() {
            let state = CoverState::from_matchings(&g, &report.matchings[..j]);
            let CutAudit::Checked(families) = audit_cut_invariants(&state, 4, 20)? else {
                unreachable!("14 vertices is within the default cap");
            };
            let line: Vec<String> = families
                .iter()
                .map(|f| {
                    format!(
                        "{}-cuts: {} checked, max sum {:?}, {}",
                        f.cut_size,
                        f.cuts,
                        f.max_sum,
                        if f.satisfied() { "ok" } else { "violated" }
                    )
                })
                .collect();
            println!("  after {j}: {}", line.join("; "));
        }
    }
    Ok(())
}
