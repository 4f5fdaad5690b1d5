//! Determinantal denominators of a rational matrix and its inverse.

use dfinite::arith::{Poly, RatFun};
use dfinite::linalg::{det_denominator, det_rational, RatMatrix};

fn main() -> dfinite::Result<()> {
    let x = Poly::x();
    let xm1 = Poly::from_ints(&[-1, 1]);
    let r = RatMatrix::from_rows(vec![
        vec![
            RatFun::new(Poly::one(), x.clone()),
            RatFun::new(Poly::one(), xm1.clone()),
        ],
        vec![RatFun::from_poly(x.clone()), RatFun::new(Poly::one(), &x * &xm1)],
    ]);
    for l in 0..=2 {
        println!("phi_{l}(R) = {}", det_denominator(&r, l));
    }
    let det = det_rational(&r)?;
    let inv = r.inverse()?;
    println!("det R = {det}");
    println!("phi_2(R^-1) = {}", det_denominator(&inv, 2));
    let lhs = &det.den().monic() * &det_denominator(&inv, 2);
    let rhs = &det.num().monic() * &det_denominator(&r, 2);
    println!("inverse law holds: {}", lhs == rhs);
    Ok(())
}
