//! The closed-form lower bounds, including the k = 2..9, r = 3..5 table and
//! the comparison of the three bound families.

use pmcover::bounds::{self, BoundKind};
use pmcover::numeric::fmt_rational;

fn main() -> pmcover::Result<()> {
    print!("{}", bounds::render_table());

    println!("\ncubic case against 1 - prod (i+1)/(2i+1):");
    for k in 1..=12 {
        let improved = bounds::bound_improved(3, k)?.value;
        let reference = bounds::cubic_reference(k);
        println!(
            "  k={k:<2} {} {}",
            fmt_rational(&improved),
            improved == reference
        );
    }

    println!("\nr=4: uniform / improved / conditional");
    for k in 1..=7 {
        let row: Vec<String> = [
            BoundKind::Uniform,
            BoundKind::Improved,
            BoundKind::DoubleCoverConditional,
        ]
        .into_iter()
        .map(|kind| bounds::bound(kind, 4, k).map(|b| b.decimal(4)))
        .collect::<pmcover::Result<_>>()?;
        println!("  k={k} {}", row.join(" / "));
    }
    Ok(())
}
