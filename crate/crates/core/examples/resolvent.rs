//! Differential resolvent of an algebraic function.

use dfinite::cli::{format_operator, parse_bipoly};
use dfinite::instances::{bound_algebraic, build_algebraic, resolvent, verify_resolvent};

fn main() -> dfinite::Result<()> {
    let p = parse_bipoly("y^3 - x*y - x^2")?;
    let inst = build_algebraic(&p)?;
    let l = resolvent(&inst)?;
    let r = l.order().unwrap();
    println!("L = {}", format_operator(&l));
    println!(
        "order {r}, degree {} (bound {})",
        l.degree().unwrap(),
        bound_algebraic(r, 2, 3)
    );
    println!("annihilates y: {}", verify_resolvent(&inst, &l));
    Ok(())
}
