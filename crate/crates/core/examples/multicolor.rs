//! Multicolorings: r*p perfect matchings using every edge exactly p times.

use pmcover::fractional::multicoloring;
use pmcover::generators;
use pmcover::matching::DEFAULT_PM_CAP;

fn main() -> pmcover::Result<()> {
    for (name, g, r) in [
        ("k4", generators::k4(), 3),
        ("petersen", generators::petersen(), 3),
        ("prism:5", generators::prism(5)?, 3),
        ("dipole:4", generators::dipole(4)?, 4),
    ] {
        let mc = multicoloring(&g, r, DEFAULT_PM_CAP)?;
        let mut uses = vec![0u64; g.edge_count()];
        for m in &mc.matchings {
            for e in m.edges().iter() {
                uses[e] += 1;
            }
        }
        assert!(uses.iter().all(|&u| u == mc.p));
        println!("{name}: p = {}, {} matchings", mc.p, mc.matchings.len());
    }
    Ok(())
}
