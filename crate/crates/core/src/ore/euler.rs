//! Conversion between the `Dx` and Euler bases, and the coefficient-degree
//! test for an irregular singularity at infinity.

use super::{Generator, OrePoly};
use crate::arith::{rat, BigRational, Poly, RatFun};
use crate::error::{Error, Result};

/// Coefficients of the falling factorial `E (E - 1) ... (E - j + 1)` in
/// powers of `E` (signed Stirling numbers of the first kind).
pub fn falling_factorial_coeffs(j: usize) -> Vec<BigRational> {
    let mut c = vec![rat(1)];
    for m in 0..j {
        // multiply by (E - m)
        let mut next = vec![rat(0); c.len() + 1];
        for (k, v) in c.iter().enumerate() {
            next[k + 1] += v;
            next[k] -= v * rat(m as i64);
        }
        c = next;
    }
    c
}

/// Stirling numbers of the second kind `S(j, k)`, `k = 0..=j`, giving
/// `E^j = sum_k S(j, k) x^k Dx^k`.
fn stirling2_row(j: usize) -> Vec<BigRational> {
    let mut row = vec![rat(1)];
    for n in 1..=j {
        let mut next = vec![rat(0); n + 1];
        for k in 1..=n {
            let a = row.get(k).cloned().unwrap_or_else(|| rat(0)) * rat(k as i64);
            let b = row[k - 1].clone();
            next[k] = a + b;
        }
        row = next;
    }
    row
}

/// Euler form with the normalisation used for the degree estimates: multiply by
/// `x^r` and rewrite `x^r p_j Dx^j = x^(r-j) p_j * E (E-1) ... (E-j+1)`.
/// No content is removed, so `deg q_r = deg p_r`.
pub fn to_euler_raw(l: &OrePoly) -> Result<OrePoly> {
    if l.generator() != Generator::Dx {
        return Err(Error::GeneratorMismatch);
    }
    let Some(r) = l.order() else {
        return Err(Error::ZeroInput("Euler conversion of the zero operator"));
    };
    let p = if let Some(p) = l.poly_coeffs() {
        p
    } else {
        l.clear_denominators().poly_coeffs().expect("cleared")
    };
    let mut q = vec![Poly::zero(); r + 1];
    for (j, pj) in p.iter().enumerate() {
        if pj.is_zero() {
            continue;
        }
        let lifted = pj.shl(r - j);
        for (k, s) in falling_factorial_coeffs(j).iter().enumerate() {
            if *s != rat(0) {
                q[k] = &q[k] + &lifted.scale(s);
            }
        }
    }
    Ok(OrePoly::from_polys(Generator::Euler, &q))
}

/// Euler form in canonical primitive normalisation.
pub fn to_euler(l: &OrePoly) -> Result<OrePoly> {
    Ok(to_euler_raw(l)?.primitive())
}

/// Substitutes `E = x Dx` and expands. Denominators and the rational
/// content are cleared; a common polynomial factor is kept.
pub fn from_euler(l: &OrePoly) -> Result<OrePoly> {
    if l.generator() != Generator::Euler {
        return Err(Error::GeneratorMismatch);
    }
    let Some(r) = l.order() else {
        return Err(Error::ZeroInput("Euler conversion of the zero operator"));
    };
    let mut p = vec![RatFun::zero(); r + 1];
    for (j, qj) in l.coeffs().iter().enumerate() {
        if qj.is_zero() {
            continue;
        }
        for (k, s) in stirling2_row(j).iter().enumerate() {
            if *s != rat(0) {
                let term = qj.mul_poly(&Poly::monomial(s.clone(), k));
                p[k] = &p[k] + &term;
            }
        }
    }
    Ok(OrePoly::new(Generator::Dx, p).clear_denominators())
}

/// Whether `x = infinity` is at worst a regular singular point:
/// `deg p_j + (r - j) <= deg p_r` for every nonzero coefficient.
pub fn infinity_not_irregular(l: &OrePoly) -> bool {
    let Some(r) = l.order() else {
        return true;
    };
    let p = l.clear_denominators().poly_coeffs().expect("cleared");
    let dr = p[r].deg_i64();
    p.iter()
        .enumerate()
        .filter(|(_, pj)| !pj.is_zero())
        .all(|(j, pj)| pj.deg_i64() + (r - j) as i64 <= dr)
}
