//! Fractional 1-factors as convex combinations of perfect matchings: the
//! uniform vector and the step vector built after one greedy step.

use pmcover::fractional::{build_w_k, decompose, uniform, verify_membership};
use pmcover::generators;
use pmcover::matching::{enumerate_perfect_matchings, DEFAULT_PM_CAP};
use pmcover::numeric::fmt_rational;

fn main() -> pmcover::Result<()> {
    let g = generators::prism(4)?;
    let w1 = uniform(&g, 3)?;
    let d = decompose(&g, &w1, DEFAULT_PM_CAP)?;
    println!("uniform 1/3 on the cube:");
    for (m, c) in &d.terms {
        println!("  {} x {:?}", fmt_rational(c), m.edges().ids());
    }

    let first = enumerate_perfect_matchings(&g, DEFAULT_PM_CAP)?.remove(0);
    let w2 = build_w_k(&g, 3, 2, &first.characteristic(g.edge_count()))?;
    println!(
        "w_2 after {:?}: in polytope = {}",
        first.edges().ids(),
        verify_membership(&g, &w2)?.is_none()
    );
    let d2 = decompose(&g, &w2, DEFAULT_PM_CAP)?;
    for (m, c) in &d2.terms {
        println!("  {} x {:?}", fmt_rational(c), m.edges().ids());
    }
    assert_eq!(d2.reconstruct(g.edge_count()), w2.values());
    Ok(())
}
