//! Symmetric product, checked on truncated series solutions.

use dfinite::cli::{format_operator, parse_operator};
use dfinite::instances::{build_symprod, symprod, symprod_conjecture, verify_symprod, SERIES_PRECISION};

fn main() -> dfinite::Result<()> {
    let a = parse_operator("Dx^2 + x")?;
    let b = parse_operator("x*Dx - 1")?;
    let inst = build_symprod(&[a.clone(), b.clone()])?;
    let l = symprod(&inst)?;
    println!("L = {}", format_operator(&l));
    println!("series check: {}", verify_symprod(&inst, &l, SERIES_PRECISION, 3, 1)?);
    println!("conjectured degree curve: {}", symprod_conjecture(2, 1, 1, 1));
    Ok(())
}
