//! Decide whether a few graphs are r-graphs and show the minimum odd cut.

use pmcover::cuts::is_r_graph;
use pmcover::generators;

fn main() -> pmcover::Result<()> {
    let graphs = [
        ("petersen", generators::petersen(), 3),
        ("k4", generators::k4(), 3),
        ("prism:5", generators::prism(5)?, 3),
        ("dipole:6", generators::dipole(6)?, 6),
        ("bridge_pair", generators::bridge_pair(), 3),
        (
            "random_regular:16,5,3",
            generators::random_regular(16, 5, 3)?,
            5,
        ),
    ];
    for (name, g, r) in &graphs {
        let check = is_r_graph(g, *r)?;
        println!(
            "{name:<24} r={r} n={:<3} m={:<3} r-graph: {:<5} min odd cut {} around {}",
            g.vertex_count(),
            g.edge_count(),
            check.is_r_graph,
            check.min_cut.value,
            check.min_cut.witness
        );
    }
    Ok(())
}
