//! Determinantal denominators.

use itertools::Itertools;

use super::{det_rational, RatMatrix};
use crate::arith::{Poly, RatFun};

/// Monic lcm of the denominators of `entries`.
pub fn lcm_denominator(entries: &[RatFun]) -> Poly {
    entries
        .iter()
        .filter(|e| !e.den().is_one())
        .fold(Poly::one(), |acc, e| acc.lcm(e.den()))
}

/// `phi_l(R)`: the monic lcm of the denominators of every minor of `R` of
/// order at most `l`. `phi_0 = 1`.
///
/// Minors are enumerated exhaustively, so the cost is combinatorial in the
/// dimensions; intended for matrices of size at most about 6.
pub fn det_denominator(r: &RatMatrix, l: usize) -> Poly {
    let top = l.min(r.rows()).min(r.cols());
    let mut acc = Poly::one();
    if top >= 1 {
        acc = lcm_denominator(r.entries());
    }
    for k in 2..=top {
        for rows in (0..r.rows()).combinations(k) {
            for cols in (0..r.cols()).combinations(k) {
                let minor = det_rational(&r.submatrix(&rows, &cols)).expect("square minor");
                if !minor.den().is_one() {
                    acc = acc.lcm(minor.den());
                }
            }
        }
    }
    acc
}
