//! Brute-force ground truth on the Petersen graph: its perfect matchings,
//! the best coverage by k of them, and the excessive index.

use pmcover::exact::ExactAnalyzer;
use pmcover::generators;
use pmcover::numeric::fmt_rational;

fn main() -> pmcover::Result<()> {
    let g = generators::petersen();
    let analyzer = ExactAnalyzer::new(&g, 1000)?;
    println!("{} perfect matchings", analyzer.matchings().len());
    for (i, m) in analyzer.matchings().iter().enumerate() {
        println!("  M{i}: {:?}", m.edges().ids());
    }
    for k in 1..=5 {
        let best = analyzer.m_exact(k)?;
        println!("best {k}-union covers {}", fmt_rational(&best.fraction));
    }
    let index = analyzer.excessive_index()?;
    println!("excessive index {}", index.value);
    Ok(())
}
