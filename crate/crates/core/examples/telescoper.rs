//! Telescoper of a bivariate rational function with its certificate.

use dfinite::cli::{format_operator, parse_ratfun2};
use dfinite::instances::{bound_hermite, build_hermite, telescoper, verify_certificate, verify_telescoper};

fn main() -> dfinite::Result<()> {
    let (p, q) = parse_ratfun2("(x*y + 1)/(y^2 - x^2 - x)")?;
    let inst = build_hermite(&p, &q)?;
    let (l, cert) = telescoper(&inst, true)?;
    println!("L = {}", format_operator(&l));
    let r = l.order().unwrap();
    let (dx, dy) = (inst.d_x(), inst.d_y());
    println!("degree {} (bound {})", l.degree().unwrap(), bound_hermite(r, dx, dy));
    println!("Hermite remainder vanishes: {}", verify_telescoper(&inst, &l)?);
    if let Some(h) = cert {
        println!("L(f) = d/dy h exactly: {}", verify_certificate(&inst, &l, &h));
    }
    Ok(())
}
