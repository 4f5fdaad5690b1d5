//! Truncated power series at `x = 0` and series solutions of operators
//! at an ordinary point.

use super::{Generator, OrePoly};
use crate::arith::{rat, BigRational, Poly};
use crate::error::{Error, Result};

/// `sum_{k <= precision} c_k x^k`, known exactly up to `precision`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncSeries {
    coeffs: Vec<BigRational>,
}

/// `a! / b!` for `a >= b`.
fn falling(a: usize, b: usize) -> BigRational {
    (b + 1..=a).fold(rat(1), |acc, k| acc * rat(k as i64))
}

impl TruncSeries {
    /// Terms `x^0 .. x^(coeffs.len() - 1)`; `coeffs` must be nonempty.
    pub fn new(coeffs: Vec<BigRational>) -> Self {
        assert!(!coeffs.is_empty(), "series needs at least one term");
        TruncSeries { coeffs }
    }

    pub fn from_poly(p: &Poly, precision: usize) -> Self {
        Self::new((0..=precision).map(|k| p.coeff(k)).collect())
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(|| rat(0))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| *c == rat(0))
    }

    pub fn truncate(&self, precision: usize) -> Self {
        Self::new(self.coeffs[..=precision.min(self.precision())].to_vec())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.precision().min(other.precision());
        let mut out = vec![rat(0); n + 1];
        for (i, a) in self.coeffs.iter().take(n + 1).enumerate() {
            if *a == rat(0) {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(n + 1 - i).enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn mul_poly(&self, p: &Poly) -> Self {
        self.mul(&Self::from_poly(p, self.precision()))
    }

    /// Derivative; loses one term of precision. A series known only to
    /// its constant term differentiates to that same precision-0 zero.
    pub fn derivative(&self) -> Self {
        if self.precision() == 0 {
            return Self::new(vec![rat(0)]);
        }
        Self::new(
            (1..self.coeffs.len())
                .map(|k| &self.coeffs[k] * rat(k as i64))
                .collect(),
        )
    }

    /// Applies a `Dx` operator with polynomial coefficients. The result is
    /// exact up to `precision - order`.
    pub fn apply(&self, l: &OrePoly) -> Result<Self> {
        if l.generator() != Generator::Dx {
            return Err(Error::GeneratorMismatch);
        }
        let Some(r) = l.order() else {
            return Ok(Self::new(vec![rat(0); self.coeffs.len()]));
        };
        if r > self.precision() {
            return Err(Error::Dimension(format!(
                "series of precision {} under an operator of order {r}",
                self.precision()
            )));
        }
        let p = l.clear_denominators().poly_coeffs().expect("cleared");
        let prec = self.precision() - r;
        let mut acc = Self::new(vec![rat(0); prec + 1]);
        let mut d = self.clone();
        for (j, pj) in p.iter().enumerate() {
            if j > 0 {
                d = d.derivative();
            }
            let term = d.truncate(prec).mul_poly(pj);
            for (k, c) in term.coeffs.into_iter().enumerate() {
                acc.coeffs[k] += c;
            }
        }
        Ok(acc)
    }
}

/// Power series solution at `x = 0` with `s^(k)(0) = init[k]` for
/// `k < order`, up to `x^precision`.
///
/// Fails with [`Error::SingularPoint`] if the leading coefficient vanishes
/// at the origin.
pub fn series_solution(l: &OrePoly, init: &[BigRational], precision: usize) -> Result<TruncSeries> {
    if l.generator() != Generator::Dx {
        return Err(Error::GeneratorMismatch);
    }
    let Some(r) = l.order() else {
        return Err(Error::ZeroInput("series solution of the zero operator"));
    };
    if init.len() != r {
        return Err(Error::Dimension(format!(
            "{} initial values for an operator of order {r}",
            init.len()
        )));
    }
    let p = l.clear_denominators().poly_coeffs().expect("cleared");
    let lead0 = p[r].coeff(0);
    if lead0 == rat(0) {
        return Err(Error::SingularPoint("leading coefficient vanishes at 0".into()));
    }
    let mut c: Vec<BigRational> = init.iter().enumerate().map(|(k, v)| v / falling(k, 0)).collect();
    for k in r..=precision {
        // coefficient of x^t in L(s), t = k - r, with c_k the unknown
        let t = k - r;
        let mut rest = rat(0);
        for (j, pj) in p.iter().enumerate() {
            for (l, pjl) in pj.coeffs().iter().enumerate() {
                if l > t || *pjl == rat(0) || (j == r && l == 0) {
                    continue;
                }
                let idx = t - l + j;
                rest += pjl * &c[idx] * falling(idx, t - l);
            }
        }
        c.push(-rest / (&lead0 * falling(k, t)));
    }
    c.truncate(precision + 1);
    Ok(TruncSeries::new(c))
}
