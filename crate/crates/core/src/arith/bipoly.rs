//! Bivariate polynomials as polynomials in `y`: over `Q[x]` ([`BiPoly`]) and
//! over `Q(x)` ([`YPoly`]).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::poly::{forward_owned_binop, rat, Poly};
use super::ratfun::RatFun;
use crate::error::{Error, Result};
use crate::linalg::{det_fraction_free, sylvester};

/// Differentiation variable for [`BiPoly::derivative`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Var {
    X,
    Y,
}

/// An element of `Q[x][y]`; `ycoeffs[j]` is the coefficient of `y^j`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    ycoeffs: Vec<Poly>,
}

impl BiPoly {
    pub fn new(mut ycoeffs: Vec<Poly>) -> Self {
        while ycoeffs.last().is_some_and(Poly::is_zero) {
            ycoeffs.pop();
        }
        BiPoly { ycoeffs }
    }

    /// `rows[j]` lists the integer x-coefficients of `y^j`, constant first.
    pub fn from_rows(rows: &[&[i64]]) -> Self {
        Self::new(rows.iter().map(|r| Poly::from_ints(r)).collect())
    }

    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn from_poly(p: Poly) -> Self {
        Self::new(vec![p])
    }

    pub fn y() -> Self {
        Self::new(vec![Poly::zero(), Poly::one()])
    }

    pub fn x() -> Self {
        Self::from_poly(Poly::x())
    }

    pub fn is_zero(&self) -> bool {
        self.ycoeffs.is_empty()
    }

    pub fn ycoeffs(&self) -> &[Poly] {
        &self.ycoeffs
    }

    pub fn ycoeff(&self, j: usize) -> Poly {
        self.ycoeffs.get(j).cloned().unwrap_or_default()
    }

    pub fn deg_y(&self) -> Option<usize> {
        self.ycoeffs.len().checked_sub(1)
    }

    pub fn deg_x(&self) -> Option<usize> {
        self.ycoeffs.iter().filter_map(Poly::degree).max()
    }

    /// Leading coefficient in `y`.
    pub fn lc_y(&self) -> Poly {
        self.ycoeffs.last().cloned().unwrap_or_default()
    }

    /// Coefficient of `x^k`, returned as a univariate polynomial in `y`.
    pub fn x_coeff(&self, k: usize) -> Poly {
        Poly::new(self.ycoeffs.iter().map(|p| p.coeff(k)).collect())
    }

    pub fn derivative(&self, var: Var) -> BiPoly {
        match var {
            Var::X => BiPoly::new(self.ycoeffs.iter().map(Poly::derivative).collect()),
            Var::Y => BiPoly::new(
                self.ycoeffs
                    .iter()
                    .enumerate()
                    .skip(1)
                    .map(|(j, p)| p.scale(&rat(j as i64)))
                    .collect(),
            ),
        }
    }

    pub fn scale_poly(&self, p: &Poly) -> BiPoly {
        BiPoly::new(self.ycoeffs.iter().map(|c| c * p).collect())
    }

    /// Multiplication by `y^k`.
    pub fn shl_y(&self, k: usize) -> BiPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut ycoeffs = vec![Poly::zero(); k];
        ycoeffs.extend(self.ycoeffs.iter().cloned());
        BiPoly { ycoeffs }
    }

    pub fn to_ypoly(&self) -> YPoly {
        YPoly::new(self.ycoeffs.iter().cloned().map(RatFun::from_poly).collect())
    }

    /// Monic gcd of the `y`-coefficients.
    pub fn content_x(&self) -> Poly {
        self.ycoeffs.iter().fold(Poly::zero(), |acc, c| acc.gcd(c))
    }

    /// Exact division in `Q[x][y]`, or `None` when `divisor` does not divide.
    pub fn checked_div(&self, divisor: &BiPoly) -> Option<BiPoly> {
        if divisor.is_zero() {
            return None;
        }
        let (q, r) = self.to_ypoly().div_rem(&divisor.to_ypoly());
        if !r.is_zero() {
            return None;
        }
        q.to_bipoly()
    }

    /// A gcd in `Q[x][y]`, normalised to have monic `x`-content and a
    /// monic leading coefficient in the top `y` and `x` degree.
    pub fn gcd(&self, other: &BiPoly) -> BiPoly {
        if self.is_zero() {
            return other.normalized();
        }
        if other.is_zero() {
            return self.normalized();
        }
        let content = self.content_x().gcd(&other.content_x());
        let g = self.to_ypoly().gcd(&other.to_ypoly());
        let (g, _) = g.clear_denominators();
        let cg = g.content_x();
        let prim = BiPoly::new(g.ycoeffs.iter().map(|c| c.exact_div(&cg)).collect());
        prim.scale_poly(&content).normalized()
    }

    fn normalized(&self) -> BiPoly {
        match self.lc_y().lc() {
            None => BiPoly::zero(),
            Some(c) => {
                let inv = c.recip();
                BiPoly::new(self.ycoeffs.iter().map(|p| p.scale(&inv)).collect())
            }
        }
    }

    pub fn display_with(&self, x: &str, y: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts: Vec<String> = Vec::new();
        for (j, c) in self.ycoeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let ymono = match j {
                0 => String::new(),
                1 => y.to_string(),
                _ => format!("{y}^{j}"),
            };
            let cs = c.display_in(x);
            let single = c.coeffs().iter().filter(|v| !v.is_zero()).count() == 1;
            let term = if ymono.is_empty() {
                cs
            } else if c.is_one() {
                ymono
            } else if single && cs == "-1" {
                format!("-{ymono}")
            } else if single {
                format!("{cs}*{ymono}")
            } else {
                format!("({cs})*{ymono}")
            };
            parts.push(term);
        }
        let mut out = String::new();
        for (k, t) in parts.into_iter().enumerate() {
            if k == 0 {
                out.push_str(&t);
            } else if let Some(rest) = t.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(&t);
            }
        }
        out
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("x", "y"))
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({self})")
    }
}

impl From<Poly> for BiPoly {
    fn from(p: Poly) -> Self {
        BiPoly::from_poly(p)
    }
}

fn zip_longest<T: Clone + Default>(a: &[T], b: &[T], f: impl Fn(&T, &T) -> T) -> Vec<T> {
    let n = a.len().max(b.len());
    let zero = T::default();
    (0..n)
        .map(|i| f(a.get(i).unwrap_or(&zero), b.get(i).unwrap_or(&zero)))
        .collect()
}

impl Add<&BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        BiPoly::new(zip_longest(&self.ycoeffs, &rhs.ycoeffs, |a, b| a + b))
    }
}

impl Sub<&BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        BiPoly::new(zip_longest(&self.ycoeffs, &rhs.ycoeffs, |a, b| a - b))
    }
}

impl Mul<&BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        if self.is_zero() || rhs.is_zero() {
            return BiPoly::zero();
        }
        let mut out = vec![Poly::zero(); self.ycoeffs.len() + rhs.ycoeffs.len() - 1];
        for (i, a) in self.ycoeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.ycoeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = &out[i + j] + &(a * b);
                }
            }
        }
        BiPoly::new(out)
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            ycoeffs: self.ycoeffs.iter().map(|c| -c).collect(),
        }
    }
}

forward_owned_binop!(BiPoly, Add, add);
forward_owned_binop!(BiPoly, Sub, sub);
forward_owned_binop!(BiPoly, Mul, mul);

/// An element of `Q(x)[y]`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct YPoly {
    ycoeffs: Vec<RatFun>,
}

impl YPoly {
    pub fn new(mut ycoeffs: Vec<RatFun>) -> Self {
        while ycoeffs.last().is_some_and(RatFun::is_zero) {
            ycoeffs.pop();
        }
        YPoly { ycoeffs }
    }

    pub fn zero() -> Self {
        YPoly::default()
    }

    pub fn constant(c: RatFun) -> Self {
        Self::new(vec![c])
    }

    /// Coordinates in the basis `1, y, ..., y^(len-1)`, zero-padded.
    pub fn from_coords(coords: &[RatFun]) -> Self {
        Self::new(coords.to_vec())
    }

    pub fn coords(&self, len: usize) -> Vec<RatFun> {
        (0..len).map(|j| self.coeff(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.ycoeffs.is_empty()
    }

    pub fn ycoeffs(&self) -> &[RatFun] {
        &self.ycoeffs
    }

    pub fn coeff(&self, j: usize) -> RatFun {
        self.ycoeffs.get(j).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.ycoeffs.len().checked_sub(1)
    }

    pub fn lc(&self) -> Option<&RatFun> {
        self.ycoeffs.last()
    }

    pub fn scale(&self, c: &RatFun) -> YPoly {
        if c.is_zero() {
            return YPoly::zero();
        }
        YPoly::new(self.ycoeffs.iter().map(|a| a * c).collect())
    }

    pub fn shl(&self, k: usize) -> YPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut ycoeffs = vec![RatFun::zero(); k];
        ycoeffs.extend(self.ycoeffs.iter().cloned());
        YPoly { ycoeffs }
    }

    pub fn monic(&self) -> YPoly {
        match self.lc() {
            None => YPoly::zero(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    pub fn derivative_y(&self) -> YPoly {
        YPoly::new(
            self.ycoeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(j, c)| c.scale(&rat(j as i64)))
                .collect(),
        )
    }

    /// Coefficientwise `d/dx`.
    pub fn derivative_x(&self) -> YPoly {
        YPoly::new(self.ycoeffs.iter().map(RatFun::derivative).collect())
    }

    pub fn div_rem(&self, divisor: &YPoly) -> (YPoly, YPoly) {
        let dd = divisor.degree().expect("division by zero y-polynomial");
        let Some(nd) = self.degree() else {
            return (YPoly::zero(), YPoly::zero());
        };
        if nd < dd {
            return (YPoly::zero(), self.clone());
        }
        let inv_lc = divisor.ycoeffs[dd].recip();
        let mut rem = self.ycoeffs.clone();
        let mut quot = vec![RatFun::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = &rem[k + dd] * &inv_lc;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.ycoeffs.iter().enumerate() {
                if !dc.is_zero() {
                    rem[k + j] = &rem[k + j] - &(&c * dc);
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (YPoly::new(quot), YPoly::new(rem))
    }

    pub fn rem(&self, divisor: &YPoly) -> YPoly {
        self.div_rem(divisor).1
    }

    /// Monic gcd over `Q(x)`.
    pub fn gcd(&self, other: &YPoly) -> YPoly {
        let (mut a, mut b) = (self.monic(), other.monic());
        while !b.is_zero() {
            let r = a.rem(&b).monic();
            a = b;
            b = r;
        }
        a
    }

    /// `(g, s, t)` with `s*self + t*other = g` and `g` monic.
    pub fn gcdex(&self, other: &YPoly) -> (YPoly, YPoly, YPoly) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (YPoly::constant(RatFun::one()), YPoly::zero());
        let (mut t0, mut t1) = (YPoly::zero(), YPoly::constant(RatFun::one()));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.lc().cloned() {
            None => (YPoly::zero(), YPoly::zero(), YPoly::zero()),
            Some(lc) => {
                let inv = lc.recip();
                (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
            }
        }
    }

    /// `(p, m)` with `self = p / m`, `p` in `Q[x][y]` and `m` the monic lcm of
    /// coefficient denominators.
    pub fn clear_denominators(&self) -> (BiPoly, Poly) {
        let m = self.ycoeffs.iter().fold(Poly::one(), |acc, c| acc.lcm(c.den()));
        let p = BiPoly::new(self.ycoeffs.iter().map(|c| c.num() * &m.exact_div(c.den())).collect());
        (p, m)
    }

    pub fn to_bipoly(&self) -> Option<BiPoly> {
        self.ycoeffs
            .iter()
            .all(RatFun::is_poly)
            .then(|| BiPoly::new(self.ycoeffs.iter().map(|c| c.num().clone()).collect()))
    }
}

impl fmt::Display for YPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .ycoeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| match j {
                0 => format!("({c})"),
                1 => format!("({c})*y"),
                _ => format!("({c})*y^{j}"),
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

impl fmt::Debug for YPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "YPoly({self})")
    }
}

impl From<&BiPoly> for YPoly {
    fn from(p: &BiPoly) -> Self {
        p.to_ypoly()
    }
}

impl Add<&YPoly> for &YPoly {
    type Output = YPoly;
    fn add(self, rhs: &YPoly) -> YPoly {
        YPoly::new(zip_longest(&self.ycoeffs, &rhs.ycoeffs, |a, b| a + b))
    }
}

impl Sub<&YPoly> for &YPoly {
    type Output = YPoly;
    fn sub(self, rhs: &YPoly) -> YPoly {
        YPoly::new(zip_longest(&self.ycoeffs, &rhs.ycoeffs, |a, b| a - b))
    }
}

impl Mul<&YPoly> for &YPoly {
    type Output = YPoly;
    fn mul(self, rhs: &YPoly) -> YPoly {
        if self.is_zero() || rhs.is_zero() {
            return YPoly::zero();
        }
        let mut out = vec![RatFun::zero(); self.ycoeffs.len() + rhs.ycoeffs.len() - 1];
        for (i, a) in self.ycoeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.ycoeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = &out[i + j] + &(a * b);
                }
            }
        }
        YPoly::new(out)
    }
}

impl Neg for &YPoly {
    type Output = YPoly;
    fn neg(self) -> YPoly {
        YPoly {
            ycoeffs: self.ycoeffs.iter().map(|c| -c).collect(),
        }
    }
}

forward_owned_binop!(YPoly, Add, add);
forward_owned_binop!(YPoly, Sub, sub);
forward_owned_binop!(YPoly, Mul, mul);

/// `res_y(a, b)` as the determinant of the Sylvester matrix (see
/// [`sylvester`] for the row convention, which fixes the sign).
pub fn resultant_y(a: &BiPoly, b: &BiPoly) -> Result<Poly> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroInput("resultant of a zero polynomial"));
    }
    det_fraction_free(&sylvester(a, b))
}

/// Whether `gcd(q, dq/dy)` over `Q(x)` is constant in `y`.
pub fn squarefree_y(q: &BiPoly) -> bool {
    if q.is_zero() {
        return false;
    }
    let g = q.to_ypoly().gcd(&q.derivative(Var::Y).to_ypoly());
    g.degree().is_none_or(|d| d == 0)
}

/// Square-free test for a univariate polynomial.
pub fn squarefree(p: &Poly) -> bool {
    !p.is_zero() && p.gcd(&p.derivative()).is_constant()
}
