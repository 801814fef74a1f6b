//! Reading and writing the edge-list format.

use pmcover::{generators, Multigraph};

fn main() -> pmcover::Result<()> {
    let text = "# a triple edge\n2 3\n0 1\n0 1\n\n0 1\n";
    let g = Multigraph::parse_edge_list(text)?;
    println!(
        "parsed n={} m={} regular(3)={}",
        g.vertex_count(),
        g.edge_count(),
        g.is_r_regular(3)
    );

    let p = generators::petersen();
    let serialized = p.to_edge_list();
    print!("{serialized}");
    assert_eq!(Multigraph::parse_edge_list(&serialized)?, p);

    match Multigraph::parse_edge_list("3 2\n0 1\n") {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
