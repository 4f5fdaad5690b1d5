//! Least common left multiple of three operators.

use dfinite::cli::{format_operator, parse_operator};
use dfinite::instances::{build_lclm, lclm};

fn main() -> dfinite::Result<()> {
    let ops = ["x*Dx - 1", "x*Dx - 2", "Dx^2 + 1"]
        .iter()
        .map(|s| parse_operator(s))
        .collect::<dfinite::Result<Vec<_>>>()?;
    let l = lclm(&build_lclm(&ops)?)?;
    println!("L = {}", format_operator(&l));
    for op in &ops {
        let (_, rem) = l.right_divide(op)?;
        println!(
            "  right remainder by {}: {}",
            format_operator(op),
            if rem.is_zero() { "0" } else { "nonzero" }
        );
    }
    Ok(())
}
