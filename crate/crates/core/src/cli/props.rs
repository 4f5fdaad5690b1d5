//! Single-trial property checks behind `check-props`. Each returns whether
//! the stated property held on the drawn instance.

use rand::Rng;

use super::random::{random_hermite, random_improper, random_ratmatrix, random_strictly_proper, random_vector};
use crate::arith::{resultant_y, Poly, Var};
use crate::error::Result;
use crate::instances::{build_hermite, genericity_check};
use crate::linalg::{det_denominator, det_rational, rank, RatMatrix};
use crate::pseudolin::{
    bound_direct, bound_realisation, krylov_denominator_check, solve_min_relation, verify_relation,
};

/// `phi_l(K) | Delta^(s_r)` for a Krylov matrix with a random increasing
/// exponent sequence ending at `s_r <= 4`.
pub fn krylov_trial(rng: &mut impl Rng, n: usize, delta: usize, allow_improper: bool) -> Result<bool> {
    let (map, real) = if allow_improper {
        random_improper(rng, n, delta)?
    } else {
        random_strictly_proper(rng, n, delta)?
    };
    let a = random_vector(rng, n, 2);
    let s_r = rng.gen_range(1..=4usize);
    let mut s: Vec<usize> = (0..s_r).filter(|_| rng.gen_bool(0.5)).collect();
    s.push(s_r);
    krylov_denominator_check(&map, &real, &a, &s, s.len().min(n), allow_improper)
}

/// Chain, rank and power laws for one matrix.
pub fn chain_laws(r: &RatMatrix) -> bool {
    let top = r.rows().min(r.cols());
    let phi: Vec<Poly> = (0..=top).map(|l| det_denominator(r, l)).collect();
    let rk = rank(r);
    (0..top).all(|l| phi[l].divides(&phi[l + 1]))
        && (rk..=top).all(|l| phi[l] == phi[rk])
        && (1..=top).all(|l| phi[l].divides(&phi[1].pow(l as u32)))
}

/// Sum and product laws for two square matrices of the same size.
pub fn sum_product_laws(r1: &RatMatrix, r2: &RatMatrix) -> Result<bool> {
    let n = r1.rows();
    let sum = r1.add(r2)?;
    let prod = r1.mul(r2)?;
    let coprime = det_denominator(r1, 1).gcd(&det_denominator(r2, 1)).degree() == Some(0);
    for l in 1..=n {
        let both = &det_denominator(r1, l) * &det_denominator(r2, l);
        let phi_sum = det_denominator(&sum, l);
        if !phi_sum.divides(&both) || !det_denominator(&prod, l).divides(&both) {
            return Ok(false);
        }
        if coprime && phi_sum != both {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `beta phi_m(R^-1) = alpha phi_m(R)` with `det R = c alpha / beta`.
/// Singular matrices pass vacuously.
pub fn inverse_identity(r: &RatMatrix) -> Result<bool> {
    let det = det_rational(r)?;
    if det.is_zero() {
        return Ok(true);
    }
    let m = r.rows();
    let alpha = det.num().monic();
    let beta = det.den().monic();
    let inv = r.inverse()?;
    Ok(&beta * &det_denominator(&inv, m) == &alpha * &det_denominator(r, m))
}

/// All determinantal-denominator laws on random `n x n` matrices, plus
/// `phi_l(T) | Delta` for a random realisation.
pub fn det_den_trial(rng: &mut impl Rng, n: usize, delta: usize) -> Result<bool> {
    let r1 = random_ratmatrix(rng, n, n);
    let r2 = random_ratmatrix(rng, n, n);
    let (map, real) = random_strictly_proper(rng, n, delta)?;
    let realised = (1..=n).all(|l| det_denominator(map.t(), l).divides(real.delta()));
    Ok(chain_laws(&r1) && chain_laws(&r2) && sum_product_laws(&r1, &r2)? && inverse_identity(&r1)? && realised)
}

/// `Delta = +-lc_y(q) res_y(q, q_y)` for the Hermite realisation, and
/// `deg res_y(q, q_y) = (2 d_y - 1) d_x` exactly when `q` is generic.
pub fn delta_resultant_trial(rng: &mut impl Rng, dx: usize, dy: usize, generic: bool) -> Result<bool> {
    let (p, q) = random_hermite(rng, dx, dy, generic)?;
    let inst = build_hermite(&p, &q)?;
    let res = resultant_y(&q, &q.derivative(Var::Y))?;
    let expected = &q.lc_y() * &res;
    let delta = inst.realisation().delta();
    let signed = *delta == expected || *delta == -&expected;
    let maximal = res.degree() == Some((2 * dy - 1) * dx);
    Ok(signed && maximal == genericity_check(&q))
}

/// Solves a random instance and checks the realisation bound and the
/// direct bound. With `allow_improper` the map has a polynomial part and
/// only the direct bound is checked; the realisation bound is returned
/// for the record.
pub fn bounds_trial(rng: &mut impl Rng, n: usize, delta: usize, allow_improper: bool) -> Result<(bool, bool)> {
    let (map, real) = if allow_improper {
        random_improper(rng, n, delta)?
    } else {
        random_strictly_proper(rng, n, delta)?
    };
    let a = random_vector(rng, n, 2);
    let rel = solve_min_relation(&map, &a)?;
    if !verify_relation(&map, &a, &rel) {
        return Ok((false, false));
    }
    let d_a = a.iter().filter_map(Poly::degree).max().unwrap_or(0);
    let (rho, deg) = (rel.rho(), rel.degrees());
    let (num, den) = map.t().clear_denominators();
    let d = den.degree().unwrap_or(0);
    let big_d = num.degree().unwrap_or(0);
    let direct = (0..=rho).all(|i| {
        let (power, rest) = bound_direct(rho, d_a, d, big_d, i);
        deg[i] <= (power * d) as i64 + rest
    });
    let realisation = (0..=rho).all(|i| deg[i] <= bound_realisation(rho, d_a, real.delta_degree(), i));
    Ok((direct, realisation))
}
