//! Minimal relation for a pseudo-linear map given directly by its matrix.

use dfinite::arith::{Poly, RatFun};
use dfinite::linalg::RatMatrix;
use dfinite::pseudolin::{
    bound_realisation, solve_min_relation, trivial_realisation, verify_relation, PseudoLinearMap,
};

fn main() -> dfinite::Result<()> {
    // T = [[1/x, 1/(x+1)], [0, 2/x]]
    let x = Poly::x();
    let x1 = Poly::from_ints(&[1, 1]);
    let t = RatMatrix::from_rows(vec![
        vec![RatFun::new(Poly::one(), x.clone()), RatFun::new(Poly::one(), x1)],
        vec![RatFun::zero(), RatFun::new(Poly::from_ints(&[2]), x)],
    ]);
    let map = PseudoLinearMap::new(t)?;
    let a = vec![Poly::one(), Poly::from_ints(&[0, 1])];
    let rel = solve_min_relation(&map, &a)?;
    let real = trivial_realisation(&map);
    println!("rho = {}", rel.rho());
    for (i, eta) in rel.eta().iter().enumerate() {
        let bound = bound_realisation(rel.rho(), 1, real.delta_degree(), i);
        println!("  eta_{i} = {eta}   (degree bound {bound})");
    }
    println!("relation holds: {}", verify_relation(&map, &a, &rel));
    Ok(())
}
