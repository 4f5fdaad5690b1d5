//! Exact arithmetic over `Q`: univariate polynomials, reduced rational
//! functions and bivariate polynomials layered as polynomials in `y`.

mod bipoly;
mod poly;
mod ratfun;
mod zpoly;

pub use bipoly::{resultant_y, squarefree, squarefree_y, BiPoly, Var, YPoly};
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
pub use poly::Poly;
pub use ratfun::RatFun;

pub(crate) use poly::rat;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Minimal ring interface shared by matrix entries.
pub trait Ring: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
}

macro_rules! impl_ring {
    ($ty:ty) => {
        impl Ring for $ty {
            fn zero() -> Self {
                <$ty>::zero()
            }
            fn one() -> Self {
                <$ty>::one()
            }
            fn is_zero(&self) -> bool {
                <$ty>::is_zero(self)
            }
            fn add(&self, other: &Self) -> Self {
                self + other
            }
            fn sub(&self, other: &Self) -> Self {
                self - other
            }
            fn mul(&self, other: &Self) -> Self {
                self * other
            }
            fn neg(&self) -> Self {
                -self
            }
        }
    };
}

impl_ring!(Poly);
impl_ring!(RatFun);

impl Ring for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
}

/// Divides a family of polynomials by their joint polynomial content and
/// joint rational content, then fixes the sign so that the leading
/// coefficient of the last nonzero member is positive.
///
/// The result has integer coefficients with gcd 1 and no common polynomial
/// factor. All-zero input is returned unchanged.
pub fn primitive_family(polys: &[Poly]) -> Vec<Poly> {
    let g = polys.iter().fold(Poly::zero(), |acc, p| acc.gcd(p));
    if g.is_zero() {
        return polys.to_vec();
    }
    let reduced: Vec<Poly> = polys.iter().map(|p| p.exact_div(&g)).collect();
    let den = reduced
        .iter()
        .fold(BigInt::one(), |acc, p| acc.lcm(&p.denominator_lcm()));
    let scaled: Vec<Poly> = reduced
        .iter()
        .map(|p| p.scale(&BigRational::from_integer(den.clone())))
        .collect();
    let num_gcd = scaled.iter().fold(BigInt::zero(), |acc, p| acc.gcd(&p.numerator_gcd()));
    let sign_neg = scaled
        .iter()
        .rev()
        .find(|p| !p.is_zero())
        .and_then(Poly::lc)
        .is_some_and(Signed::is_negative);
    let mut factor = BigRational::new(BigInt::one(), num_gcd);
    if sign_neg {
        factor = -factor;
    }
    scaled.iter().map(|p| p.scale(&factor)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primitive_family_normalises() {
        let fam = vec![Poly::from_ints(&[0, 2]), Poly::from_ints(&[0, 0, -4])];
        // common factor 2x, sign fixed by last member
        assert_eq!(
            primitive_family(&fam),
            vec![Poly::from_ints(&[-1]), Poly::from_ints(&[0, 2])]
        );
        let halves = vec![
            Poly::new(vec![BigRational::new(1.into(), 2.into())]),
            Poly::from_ints(&[1, 1]),
        ];
        assert_eq!(
            primitive_family(&halves),
            vec![Poly::from_ints(&[1]), Poly::from_ints(&[2, 2])]
        );
    }
}
