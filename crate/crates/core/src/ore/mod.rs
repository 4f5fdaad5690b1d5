//! Linear differential operators with coefficients in `Q(x)`, over either
//! the derivation `Dx = d/dx` or the Euler operator `E = x d/dx`.
//!
//! Both generators satisfy a Leibniz commutation rule `G f = f G + delta(f)`
//! with `delta(f) = f'` for `Dx` and `delta(f) = x f'` for `E`, so one
//! multiplication routine covers both.

mod euler;
mod series;

use std::fmt;

use num_traits::Signed;

use crate::arith::{primitive_family, rat, BigRational, Poly, RatFun};
use crate::error::{Error, Result};
use crate::linalg::lcm_denominator;

pub use euler::{falling_factorial_coeffs, from_euler, infinity_not_irregular, to_euler, to_euler_raw};
pub use series::{series_solution, TruncSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    /// `d/dx`
    Dx,
    /// `x d/dx`
    Euler,
}

impl Generator {
    pub fn symbol(self) -> &'static str {
        match self {
            Generator::Dx => "Dx",
            Generator::Euler => "Ex",
        }
    }

    /// The derivation `delta` with `G f = f G + delta(f)`.
    pub fn delta(self, f: &RatFun) -> RatFun {
        match self {
            Generator::Dx => f.derivative(),
            Generator::Euler => f.derivative().mul_poly(&Poly::x()),
        }
    }
}

/// `sum_j coeffs[j] * G^j`, coefficients on the left.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OrePoly {
    generator: Generator,
    coeffs: Vec<RatFun>,
}

impl OrePoly {
    pub fn new(generator: Generator, mut coeffs: Vec<RatFun>) -> Self {
        while coeffs.last().is_some_and(RatFun::is_zero) {
            coeffs.pop();
        }
        OrePoly { generator, coeffs }
    }

    pub fn from_polys(generator: Generator, coeffs: &[Poly]) -> Self {
        Self::new(generator, coeffs.iter().cloned().map(RatFun::from_poly).collect())
    }

    /// Shorthand for tests and examples: `rows[j]` lists integer
    /// coefficients of the polynomial attached to `G^j`.
    pub fn from_int_rows(generator: Generator, rows: &[&[i64]]) -> Self {
        let polys: Vec<Poly> = rows.iter().map(|r| Poly::from_ints(r)).collect();
        Self::from_polys(generator, &polys)
    }

    pub fn zero(generator: Generator) -> Self {
        OrePoly {
            generator,
            coeffs: Vec::new(),
        }
    }

    pub fn one(generator: Generator) -> Self {
        Self::scalar(generator, RatFun::one())
    }

    pub fn scalar(generator: Generator, f: RatFun) -> Self {
        Self::new(generator, vec![f])
    }

    /// `c * G^k`.
    pub fn monomial(generator: Generator, c: RatFun, k: usize) -> Self {
        let mut coeffs = vec![RatFun::zero(); k + 1];
        coeffs[k] = c;
        Self::new(generator, coeffs)
    }

    pub fn generator(&self) -> Generator {
        self.generator
    }

    pub fn coeffs(&self) -> &[RatFun] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> RatFun {
        self.coeffs.get(j).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Order, `None` for the zero operator.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lc(&self) -> Option<&RatFun> {
        self.coeffs.last()
    }

    /// Polynomial coefficients, when every coefficient is a polynomial.
    pub fn poly_coeffs(&self) -> Option<Vec<Poly>> {
        self.coeffs
            .iter()
            .map(|c| c.is_poly().then(|| c.num().clone()))
            .collect()
    }

    /// Maximum coefficient degree in `x` of the denominator-free form.
    pub fn degree(&self) -> Option<usize> {
        self.cleared_polys().iter().filter_map(Poly::degree).max()
    }

    fn cleared_polys(&self) -> Vec<Poly> {
        let den = lcm_denominator(&self.coeffs);
        self.coeffs.iter().map(|c| c.num() * &den.exact_div(c.den())).collect()
    }

    /// Clears denominators, divides out the rational content and makes the
    /// leading coefficient's leading term positive. Keeps any common
    /// polynomial factor.
    pub fn clear_denominators(&self) -> OrePoly {
        if self.is_zero() {
            return self.clone();
        }
        let polys = self.cleared_polys();
        let mut num_gcd = num_bigint::BigInt::from(0);
        let mut den_lcm = num_bigint::BigInt::from(1);
        for p in &polys {
            num_gcd = num_integer::Integer::gcd(&num_gcd, &p.numerator_gcd());
            den_lcm = num_integer::Integer::lcm(&den_lcm, &p.denominator_lcm());
        }
        let mut factor = BigRational::new(den_lcm, num_gcd);
        if polys.last().and_then(Poly::lc).is_some_and(Signed::is_negative) {
            factor = -factor;
        }
        let polys: Vec<Poly> = polys.iter().map(|p| p.scale(&factor)).collect();
        Self::from_polys(self.generator, &polys)
    }

    /// Canonical primitive form: integer coefficients, no common polynomial
    /// factor, positive leading term of the leading coefficient.
    pub fn primitive(&self) -> OrePoly {
        if self.is_zero() {
            return self.clone();
        }
        Self::from_polys(self.generator, &primitive_family(&self.cleared_polys()))
    }

    /// Left multiplication by a rational function.
    pub fn scale_left(&self, f: &RatFun) -> OrePoly {
        Self::new(self.generator, self.coeffs.iter().map(|c| f * c).collect())
    }

    pub fn add(&self, other: &OrePoly) -> Result<OrePoly> {
        self.check_generator(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        Ok(Self::new(
            self.generator,
            (0..n).map(|j| &self.coeff(j) + &other.coeff(j)).collect(),
        ))
    }

    pub fn sub(&self, other: &OrePoly) -> Result<OrePoly> {
        self.check_generator(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        Ok(Self::new(
            self.generator,
            (0..n).map(|j| &self.coeff(j) - &other.coeff(j)).collect(),
        ))
    }

    pub fn neg(&self) -> OrePoly {
        Self::new(self.generator, self.coeffs.iter().map(|c| -c).collect())
    }

    fn check_generator(&self, other: &OrePoly) -> Result<()> {
        if self.generator != other.generator {
            return Err(Error::GeneratorMismatch);
        }
        Ok(())
    }

    /// Noncommutative product `self * other`.
    pub fn mul(&self, other: &OrePoly) -> Result<OrePoly> {
        self.check_generator(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.generator));
        }
        let ord_a = self.coeffs.len() - 1;
        let g = self.generator;
        // deltas[j][k] = delta^k(b_j)
        let deltas: Vec<Vec<RatFun>> = other
            .coeffs
            .iter()
            .map(|b| {
                let mut v = Vec::with_capacity(ord_a + 1);
                v.push(b.clone());
                for k in 0..ord_a {
                    let next = g.delta(&v[k]);
                    v.push(next);
                }
                v
            })
            .collect();
        let mut out = vec![RatFun::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, ai) in self.coeffs.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            let binom = binomial_row(i);
            for (j, dj) in deltas.iter().enumerate() {
                for (k, dk) in dj.iter().enumerate().take(i + 1) {
                    if dk.is_zero() {
                        continue;
                    }
                    let term = (ai * dk).scale(&binom[k]);
                    let slot = i - k + j;
                    out[slot] = &out[slot] + &term;
                }
            }
        }
        Ok(Self::new(g, out))
    }

    /// Applies the operator to a rational function.
    pub fn apply(&self, f: &RatFun) -> RatFun {
        let mut acc = RatFun::zero();
        let mut cur = f.clone();
        for (j, c) in self.coeffs.iter().enumerate() {
            if j > 0 {
                cur = self.generator.delta(&cur);
            }
            if !c.is_zero() && !cur.is_zero() {
                acc = &acc + &(c * &cur);
            }
        }
        acc
    }

    /// Right Euclidean division: `self = q * divisor + r` with
    /// `order(r) < order(divisor)`.
    pub fn right_divide(&self, divisor: &OrePoly) -> Result<(OrePoly, OrePoly)> {
        self.check_generator(divisor)?;
        let Some(db) = divisor.order() else {
            return Err(Error::ZeroInput("right division by the zero operator"));
        };
        let g = self.generator;
        let inv_lc = divisor.coeffs[db].recip();
        let mut q = Self::zero(g);
        let mut r = self.clone();
        while let Some(dr) = r.order() {
            if dr < db {
                break;
            }
            let c = &r.coeffs[dr] * &inv_lc;
            let term = Self::monomial(g, c, dr - db);
            r = r.sub(&term.mul(divisor)?)?;
            debug_assert!(r.order().is_none_or(|o| o < dr));
            q = q.add(&term)?;
        }
        Ok((q, r))
    }

    /// The operator conjugated by the translation `x -> x + c`; only
    /// meaningful for `Dx`, which is translation invariant.
    pub fn shift(&self, c: &BigRational) -> OrePoly {
        debug_assert_eq!(self.generator, Generator::Dx);
        Self::new(self.generator, self.coeffs.iter().map(|f| f.shift(c)).collect())
    }

    /// Smallest natural number `c` at which the leading coefficient does
    /// not vanish.
    pub fn first_ordinary_point(&self) -> Option<u64> {
        let lc = self.lc()?;
        (0..).find(|&c| lc.num().eval(&rat(c as i64)) != rat(0))
    }
}

/// Binomial coefficients `C(n, k)` for `k = 0..=n`.
fn binomial_row(n: usize) -> Vec<BigRational> {
    let mut row = vec![rat(1)];
    for k in 1..=n {
        let prev = row[k - 1].clone();
        row.push(prev * rat((n - k + 1) as i64) / rat(k as i64));
    }
    row
}

impl fmt::Display for OrePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::cli::format_operator(self))
    }
}

impl fmt::Debug for OrePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OrePoly[{}]({self})", self.generator.symbol())
    }
}
