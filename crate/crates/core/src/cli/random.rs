//! Seeded random instances that honour the side conditions of each
//! problem. Every trial draws from its own ChaCha stream, so results do not
//! depend on how many trials ran before it.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::arith::{squarefree_y, BiPoly, Poly, RatFun};
use crate::error::{Error, Result};
use crate::instances::genericity_check;
use crate::linalg::{PolyMatrix, RatMatrix};
use crate::ore::{infinity_not_irregular, Generator, OrePoly};
use crate::pseudolin::{trivial_realisation, PseudoLinearMap, Realisation};

/// Resampling attempts before a generator gives up.
pub const RETRY_CAP: usize = 1000;

pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

fn small(rng: &mut impl Rng) -> i64 {
    rng.gen_range(-3..=3)
}

/// Coefficients uniform in `[-3, 3]`; with `exact`, the leading one is
/// nonzero.
pub fn random_poly(rng: &mut impl Rng, deg: usize, exact: bool) -> Poly {
    let mut c: Vec<i64> = (0..=deg).map(|_| small(rng)).collect();
    if exact {
        while c[deg] == 0 {
            c[deg] = small(rng);
        }
    }
    Poly::from_ints(&c)
}

fn random_bipoly(rng: &mut impl Rng, dx: usize, dy: usize) -> BiPoly {
    BiPoly::new((0..=dy).map(|_| random_poly(rng, dx, false)).collect())
}

fn coprime(p: &BiPoly, q: &BiPoly) -> bool {
    let g = p.gcd(q);
    g.deg_y().unwrap_or(0) == 0 && g.deg_x().unwrap_or(0) == 0
}

/// `(p, q)` with `deg_x q = d_x`, `deg_y q = d_y`, `q` square-free in `y`,
/// `deg_y p < d_y`, `deg_x p <= d_x` and `gcd(p, q) = 1`.
pub fn random_hermite(rng: &mut impl Rng, dx: usize, dy: usize, generic: bool) -> Result<(BiPoly, BiPoly)> {
    if dy == 0 {
        return Err(Error::Dimension("d_y must be at least 1".into()));
    }
    for _ in 0..RETRY_CAP {
        let q = random_bipoly(rng, dx, dy);
        if q.deg_y() != Some(dy) || q.deg_x() != Some(dx) || !squarefree_y(&q) {
            continue;
        }
        if generic && !genericity_check(&q) {
            continue;
        }
        let p = random_bipoly(rng, dx, dy - 1);
        if p.is_zero() || !coprime(&p, &q) {
            continue;
        }
        return Ok((p, q));
    }
    Err(Error::GenerationFailed(RETRY_CAP))
}

/// `P` with the given degrees, square-free in `y`.
pub fn random_algebraic(rng: &mut impl Rng, dx: usize, dy: usize, generic: bool) -> Result<BiPoly> {
    if dy == 0 {
        return Err(Error::Dimension("d_y must be at least 1".into()));
    }
    for _ in 0..RETRY_CAP {
        let p = random_bipoly(rng, dx, dy);
        if p.deg_y() != Some(dy) || p.deg_x() != Some(dx) || !squarefree_y(&p) {
            continue;
        }
        if generic && !genericity_check(&p) {
            continue;
        }
        return Ok(p);
    }
    Err(Error::GenerationFailed(RETRY_CAP))
}

/// Operator of order `r` whose leading coefficient has degree `d`. With
/// `regular_infinity`, `deg p_j <= d - (r - j)` so that infinity is not an
/// irregular singularity.
pub fn random_operator(rng: &mut impl Rng, r: usize, d: usize, regular_infinity: bool) -> Result<OrePoly> {
    for _ in 0..RETRY_CAP {
        let mut coeffs = Vec::with_capacity(r + 1);
        for j in 0..r {
            let cap = if regular_infinity {
                d as i64 - (r - j) as i64
            } else {
                d as i64
            };
            coeffs.push(if cap < 0 {
                Poly::zero()
            } else {
                random_poly(rng, cap as usize, false)
            });
        }
        coeffs.push(random_poly(rng, d, true));
        let l = OrePoly::from_polys(Generator::Dx, &coeffs);
        if regular_infinity && !infinity_not_irregular(&l) {
            continue;
        }
        return Ok(l);
    }
    Err(Error::GenerationFailed(RETRY_CAP))
}

/// Nonzero vector of polynomials of degree at most `deg`.
pub fn random_vector(rng: &mut impl Rng, n: usize, deg: usize) -> Vec<Poly> {
    loop {
        let v: Vec<Poly> = (0..n).map(|_| random_poly(rng, deg, false)).collect();
        if v.iter().any(|p| !p.is_zero()) {
            return v;
        }
    }
}

fn constant_matrix(rng: &mut impl Rng, rows: usize, cols: usize) -> PolyMatrix {
    let mut m = PolyMatrix::zeros(rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            m[(i, j)] = Poly::from(rng.gen_range(-2..=2));
        }
    }
    m
}

/// Strictly proper `T` of size `n` with a realisation of degree at most
/// `delta_max`: either the trivial realisation of `N / den` or a
/// state-space triple `B (xI - A)^-1 C`.
pub fn random_strictly_proper(
    rng: &mut impl Rng,
    n: usize,
    delta_max: usize,
) -> Result<(PseudoLinearMap, Realisation)> {
    if n == 0 || delta_max == 0 {
        return Err(Error::Dimension("strictly proper maps need n, delta >= 1".into()));
    }
    if delta_max >= n && rng.gen_bool(0.5) {
        let d = rng.gen_range(1..=delta_max / n);
        let mut den = random_poly(rng, d, false).coeffs().to_vec();
        den.resize(d + 1, crate::arith::rat(0));
        den[d] = crate::arith::rat(1);
        let den = Poly::new(den);
        let mut t = RatMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                t[(i, j)] = RatFun::new(random_poly(rng, d - 1, false), den.clone());
            }
        }
        let map = PseudoLinearMap::new(t)?;
        let real = trivial_realisation(&map);
        return Ok((map, real));
    }
    let m = rng.gen_range(1..=delta_max);
    let a = constant_matrix(rng, m, m);
    let mut xi_a = a.scale(&Poly::from(-1));
    for k in 0..m {
        xi_a[(k, k)] = &xi_a[(k, k)] + &Poly::x();
    }
    let b = constant_matrix(rng, n, m);
    let c = constant_matrix(rng, m, n);
    let real = Realisation::new(PolyMatrix::zeros(n, n), b, xi_a, c)?;
    let map = PseudoLinearMap::new(real.reconstruct()?)?;
    Ok((map, real))
}

/// A strictly proper map plus a random polynomial part of degree at most
/// one, with its trivial realisation.
pub fn random_improper(rng: &mut impl Rng, n: usize, delta_max: usize) -> Result<(PseudoLinearMap, Realisation)> {
    let (map, _) = random_strictly_proper(rng, n, delta_max)?;
    let mut t = map.t().clone();
    for i in 0..n {
        for j in 0..n {
            t[(i, j)] = &t[(i, j)] + &RatFun::from_poly(random_poly(rng, 1, false));
        }
    }
    let map = PseudoLinearMap::new(t)?;
    let real = trivial_realisation(&map);
    Ok((map, real))
}

/// Small rational matrix whose denominators are products of `x`, `x - 1`,
/// `x + 1`, `x - 2`.
pub fn random_ratmatrix(rng: &mut impl Rng, rows: usize, cols: usize) -> RatMatrix {
    let factors = [
        Poly::x(),
        Poly::from_ints(&[-1, 1]),
        Poly::from_ints(&[1, 1]),
        Poly::from_ints(&[-2, 1]),
    ];
    let mut m = RatMatrix::zeros(rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            if rng.gen_bool(0.2) {
                continue;
            }
            let den = factors
                .iter()
                .filter(|_| rng.gen_bool(0.35))
                .fold(Poly::one(), |acc, f| &acc * f);
            m[(i, j)] = RatFun::new(random_poly(rng, 2, false), den);
        }
    }
    m
}
