//! Reduced rational functions in `Q(x)`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::{forward_owned_binop, Poly};

/// A fraction `num/den` with `gcd(num, den) = 1` and `den` monic.
/// Zero is stored as `0/1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: Poly,
    den: Poly,
}

impl RatFun {
    /// Builds and reduces `num/den`. Panics if `den` is zero.
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.exact_div(&g), den.exact_div(&g))
        };
        Self::from_coprime(num, den)
    }

    /// Trusts that `num` and `den` are coprime; only makes `den` monic.
    fn from_coprime(num: Poly, den: Poly) -> Self {
        let lc = den.lc().expect("nonzero denominator").clone();
        if lc.is_one() {
            RatFun { num, den }
        } else {
            let inv = lc.recip();
            RatFun {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn zero() -> Self {
        RatFun {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    pub fn x() -> Self {
        Self::from_poly(Poly::x())
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFun {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_poly(Poly::from(c))
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn into_parts(self) -> (Poly, Poly) {
        (self.num, self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_poly(&self) -> bool {
        self.den.is_one()
    }

    /// `deg num - deg den`; `None` for zero.
    pub fn degree(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.num.deg_i64() - self.den.deg_i64())
    }

    /// Limit at infinity is zero.
    pub fn is_strictly_proper(&self) -> bool {
        self.num.deg_i64() < self.den.deg_i64()
    }

    pub fn recip(&self) -> RatFun {
        assert!(!self.is_zero(), "reciprocal of zero rational function");
        Self::from_coprime(self.den.clone(), self.num.clone())
    }

    pub fn scale(&self, c: &BigRational) -> RatFun {
        if c.is_zero() {
            return Self::zero();
        }
        RatFun {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn mul_poly(&self, p: &Poly) -> RatFun {
        if p.is_zero() || self.is_zero() {
            return Self::zero();
        }
        let g = p.gcd(&self.den);
        if g.is_one() {
            return Self::from_coprime(&self.num * p, self.den.clone());
        }
        Self::from_coprime(&self.num * &p.exact_div(&g), self.den.exact_div(&g))
    }

    pub fn derivative(&self) -> RatFun {
        if self.den.is_one() {
            return Self::from_poly(self.num.derivative());
        }
        // (n/d)' = (n'd - nd')/d^2; only factors of d can cancel.
        let dprime = self.den.derivative();
        let num = &(&self.num.derivative() * &self.den) - &(&self.num * &dprime);
        RatFun::new(num, &self.den * &self.den)
    }

    pub fn eval(&self, at: &BigRational) -> Option<BigRational> {
        let d = self.den.eval(at);
        (!d.is_zero()).then(|| self.num.eval(at) / d)
    }

    /// The composition `f(x + c)`.
    pub fn shift(&self, c: &BigRational) -> RatFun {
        RatFun::new(self.num.shift(c), self.den.shift(c))
    }

    pub fn pow(&self, e: u32) -> RatFun {
        RatFun {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }
}

impl Default for RatFun {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<Poly> for RatFun {
    fn from(p: Poly) -> Self {
        Self::from_poly(p)
    }
}

impl From<i64> for RatFun {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &Poly| {
            let s = p.to_string();
            if p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 || s.contains('*') || s.starts_with('-') {
                format!("({s})")
            } else {
                s
            }
        };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFun({self})")
    }
}

impl Add<&RatFun> for &RatFun {
    type Output = RatFun;
    fn add(self, rhs: &RatFun) -> RatFun {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RatFun::new(&self.num + &rhs.num, self.den.clone());
        }
        if self.den.is_one() {
            return RatFun::from_coprime(&(&self.num * &rhs.den) + &rhs.num, rhs.den.clone());
        }
        if rhs.den.is_one() {
            return RatFun::from_coprime(&self.num + &(&rhs.num * &self.den), self.den.clone());
        }
        // Henrici: only factors of g = gcd(b, d) can cancel in a/b + c/d.
        let g = self.den.gcd(&rhs.den);
        let b_g = self.den.exact_div(&g);
        let d_g = rhs.den.exact_div(&g);
        let num = &(&self.num * &d_g) + &(&rhs.num * &b_g);
        if num.is_zero() {
            return RatFun::zero();
        }
        let den = &self.den * &d_g;
        if g.is_one() {
            return RatFun::from_coprime(num, den);
        }
        let h = num.gcd(&g);
        if h.is_one() {
            RatFun::from_coprime(num, den)
        } else {
            RatFun::from_coprime(num.exact_div(&h), den.exact_div(&h))
        }
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        -&self
    }
}

impl Sub<&RatFun> for &RatFun {
    type Output = RatFun;
    fn sub(self, rhs: &RatFun) -> RatFun {
        self + &(-rhs)
    }
}

impl Mul<&RatFun> for &RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &RatFun) -> RatFun {
        if self.is_zero() || rhs.is_zero() {
            return RatFun::zero();
        }
        if rhs.den.is_one() {
            return self.mul_poly(&rhs.num);
        }
        if self.den.is_one() {
            return rhs.mul_poly(&self.num);
        }
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let num = &self.num.exact_div(&g1) * &rhs.num.exact_div(&g2);
        let den = &self.den.exact_div(&g2) * &rhs.den.exact_div(&g1);
        RatFun::from_coprime(num, den)
    }
}

impl Div<&RatFun> for &RatFun {
    type Output = RatFun;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &RatFun) -> RatFun {
        self * &rhs.recip()
    }
}

forward_owned_binop!(RatFun, Add, add);
forward_owned_binop!(RatFun, Sub, sub);
forward_owned_binop!(RatFun, Mul, mul);
forward_owned_binop!(RatFun, Div, div);
