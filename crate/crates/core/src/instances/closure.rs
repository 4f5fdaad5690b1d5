//! Least common left multiples and symmetric products through the Euler
//! companion systems of the factors.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{rat, BigRational, Poly, RatFun};
use crate::error::{Error, Result};
use crate::linalg::{block_diag, companion, hstack, kronecker, vstack, PolyMatrix, RatMatrix};
use crate::ore::{infinity_not_irregular, series_solution, to_euler, Generator, OrePoly, TruncSeries};
use crate::pseudolin::{solve_min_relation, PseudoLinearMap, Realisation};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosureKind {
    Lclm,
    Symprod,
}

#[derive(Clone, Debug)]
pub struct ClosureInstance {
    kind: ClosureKind,
    operators: Vec<OrePoly>,
    euler_forms: Vec<OrePoly>,
    map: PseudoLinearMap,
    a: Vec<Poly>,
    realisation: Realisation,
}

/// Companion data of one factor in the Euler basis `E^j alpha`:
/// `D` (so that `E` acts as `D`), and `X_i`, `M_i` with
/// `X_i M_i^-1 = D / x`.
struct EulerBlock {
    euler: OrePoly,
    d: RatMatrix,
    x: PolyMatrix,
    m: PolyMatrix,
}

fn euler_block(l: &OrePoly) -> Result<EulerBlock> {
    if l.generator() != Generator::Dx {
        return Err(Error::GeneratorMismatch);
    }
    match l.order() {
        None => return Err(Error::ZeroInput("closure of the zero operator")),
        Some(0) => {
            return Err(Error::InvalidInstance(format!(
                "operator {l} has order 0 and no nonzero solutions"
            )))
        }
        Some(_) => {}
    }
    let euler = to_euler(l)?;
    let q = euler.poly_coeffs().expect("primitive Euler form");
    let r = q.len() - 1;
    let lower: Vec<RatFun> = q[..r].iter().cloned().map(RatFun::from_poly).collect();
    let d = companion(&lower, &RatFun::from_poly(q[r].clone()))?;
    let mut x = PolyMatrix::zeros(r, r);
    for j in 0..r - 1 {
        x[(j + 1, j)] = Poly::one();
    }
    for (j, qj) in q[..r].iter().enumerate() {
        x[(j, r - 1)] = qj.clone();
    }
    let mut diag = vec![Poly::x(); r];
    diag[r - 1] = &(-&q[r]) * &Poly::x();
    Ok(EulerBlock {
        euler,
        d,
        x,
        m: PolyMatrix::diagonal(&diag),
    })
}

fn inv_x() -> RatFun {
    RatFun::x().recip()
}

/// `T = (1/x) diag(D_1, ..., D_s)` with `a` equal to 1 at the start of
/// every block.
pub fn build_lclm(ops: &[OrePoly]) -> Result<ClosureInstance> {
    if ops.is_empty() {
        return Err(Error::InvalidInstance("no operators given".into()));
    }
    let blocks = ops.iter().map(euler_block).collect::<Result<Vec<_>>>()?;
    let ds: Vec<RatMatrix> = blocks.iter().map(|b| b.d.clone()).collect();
    let t = block_diag(&ds).scale(&inv_x());
    let big_r = t.rows();
    let mut a = vec![Poly::zero(); big_r];
    let mut start = 0;
    for b in &blocks {
        a[start] = Poly::one();
        start += b.d.rows();
    }
    let xs: Vec<PolyMatrix> = blocks.iter().map(|b| b.x.clone()).collect();
    let ms: Vec<PolyMatrix> = blocks.iter().map(|b| b.m.clone()).collect();
    let realisation = Realisation::new(
        PolyMatrix::zeros(big_r, big_r),
        block_diag(&xs),
        block_diag(&ms),
        PolyMatrix::identity(big_r),
    )?;
    Ok(ClosureInstance {
        kind: ClosureKind::Lclm,
        operators: ops.to_vec(),
        euler_forms: blocks.into_iter().map(|b| b.euler).collect(),
        map: PseudoLinearMap::new(t)?,
        a,
        realisation,
    })
}

/// `I_before (x) B (x) I_after`.
fn embed<T: crate::arith::Ring>(b: &crate::linalg::Matrix<T>, before: usize, after: usize) -> crate::linalg::Matrix<T> {
    let left = kronecker(&crate::linalg::Matrix::identity(before), b);
    kronecker(&left, &crate::linalg::Matrix::identity(after))
}

/// `T = (1/x) sum_i I (x) ... (x) D_i (x) ... (x) I` on the products
/// `E^{h_1} alpha_1 ... E^{h_s} alpha_s`, multi-indices in lexicographic
/// order, with `a = e_1`.
pub fn build_symprod(ops: &[OrePoly]) -> Result<ClosureInstance> {
    if ops.is_empty() {
        return Err(Error::InvalidInstance("no operators given".into()));
    }
    let blocks = ops.iter().map(euler_block).collect::<Result<Vec<_>>>()?;
    let orders: Vec<usize> = blocks.iter().map(|b| b.d.rows()).collect();
    let big_r: usize = orders.iter().product();
    let mut t = RatMatrix::zeros(big_r, big_r);
    let mut xs = Vec::new();
    let mut ms = Vec::new();
    for (i, b) in blocks.iter().enumerate() {
        let before: usize = orders[..i].iter().product();
        let after: usize = orders[i + 1..].iter().product();
        t = t.add(&embed(&b.d, before, after))?;
        xs.push(embed(&b.x, before, after));
        ms.push(embed(&b.m, before, after));
    }
    let t = t.scale(&inv_x());
    let mut a = vec![Poly::zero(); big_r];
    a[0] = Poly::one();
    let ys = vec![PolyMatrix::identity(big_r); blocks.len()];
    let realisation = Realisation::new(
        PolyMatrix::zeros(big_r, big_r),
        hstack(&xs),
        block_diag(&ms),
        vstack(&ys),
    )?;
    Ok(ClosureInstance {
        kind: ClosureKind::Symprod,
        operators: ops.to_vec(),
        euler_forms: blocks.into_iter().map(|b| b.euler).collect(),
        map: PseudoLinearMap::new(t)?,
        a,
        realisation,
    })
}

impl ClosureInstance {
    pub fn kind(&self) -> ClosureKind {
        self.kind
    }

    pub fn operators(&self) -> &[OrePoly] {
        &self.operators
    }

    pub fn euler_forms(&self) -> &[OrePoly] {
        &self.euler_forms
    }

    pub fn map(&self) -> &PseudoLinearMap {
        &self.map
    }

    pub fn a(&self) -> &[Poly] {
        &self.a
    }

    pub fn realisation(&self) -> &Realisation {
        &self.realisation
    }

    pub fn orders(&self) -> Vec<usize> {
        self.operators.iter().map(|l| l.order().expect("nonzero")).collect()
    }

    /// Degrees in `x` of the factors in primitive form.
    pub fn degrees(&self) -> Vec<usize> {
        self.operators
            .iter()
            .map(|l| l.primitive().degree().unwrap_or(0))
            .collect()
    }

    /// Whether no factor has an irregular singularity at infinity, the
    /// hypothesis of the degree bounds.
    pub fn regular_at_infinity(&self) -> bool {
        self.operators.iter().all(infinity_not_irregular)
    }

    fn solve(&self, kind: ClosureKind) -> Result<OrePoly> {
        if self.kind != kind {
            return Err(Error::InvalidInstance(format!(
                "instance built for {:?}, not {kind:?}",
                self.kind
            )));
        }
        Ok(solve_min_relation(&self.map, &self.a)?.operator())
    }
}

/// Least common left multiple in primitive form. The iterates are the
/// derivatives `alpha^(l)` of a generic sum, so the relation reads
/// directly as `sum eta_i Dx^i`.
pub fn lclm(inst: &ClosureInstance) -> Result<OrePoly> {
    inst.solve(ClosureKind::Lclm)
}

/// Symmetric product in primitive form.
pub fn symprod(inst: &ClosureInstance) -> Result<OrePoly> {
    inst.solve(ClosureKind::Symprod)
}

/// Every factor right-divides `l`.
pub fn verify_lclm(inst: &ClosureInstance, l: &OrePoly) -> Result<bool> {
    for op in &inst.operators {
        if !l.right_divide(op)?.1.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Number of terms used by [`verify_symprod`] unless told otherwise.
pub const SERIES_PRECISION: usize = 40;

/// Applies `l` to products of truncated series solutions of the factors
/// and checks that the result vanishes to the guaranteed order.
///
/// Series are taken at the smallest natural number that is an ordinary
/// point of every factor and of `l`. Initial conditions are small random
/// integers drawn from `seed`, one draw per round.
pub fn verify_symprod(inst: &ClosureInstance, l: &OrePoly, precision: usize, draws: usize, seed: u64) -> Result<bool> {
    let Some(ord) = l.order() else {
        return Ok(false);
    };
    if precision < ord {
        return Err(Error::Dimension(format!(
            "precision {precision} below the operator order {ord}"
        )));
    }
    let c = (0u64..)
        .find(|&c| {
            let at = rat(c as i64);
            std::iter::once(l)
                .chain(&inst.operators)
                .all(|op| op.lc().and_then(|lc| lc.eval(&at)).is_some_and(|v| v != rat(0)))
        })
        .expect("finitely many singular points");
    let shift = rat(c as i64);
    let factors: Vec<OrePoly> = inst.operators.iter().map(|op| op.shift(&shift)).collect();
    let l = l.shift(&shift);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..draws {
        let mut product = TruncSeries::new(vec![rat(1)]);
        let mut first = true;
        for f in &factors {
            let r = f.order().expect("nonzero");
            let mut init: Vec<BigRational> = (0..r).map(|_| rat(rng.gen_range(-5..=5))).collect();
            if init.iter().all(|v| *v == rat(0)) {
                init[0] = rat(1);
            }
            let s = series_solution(f, &init, precision)?;
            product = if first { s } else { product.mul(&s) };
            first = false;
        }
        if !product.apply(&l)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `r (r_1 + r_2 + 2d) - r (r - 1) / 2` for two factors and `R (s d + R)`
/// with `R = sum r_i` for `s > 2`.
pub fn bound_lclm(r: usize, r_list: &[usize], d: usize) -> i64 {
    let s = r_list.len() as i64;
    let big_r: i64 = r_list.iter().map(|&x| x as i64).sum();
    let (r, d) = (r as i64, d as i64);
    if s <= 2 {
        r * (big_r + 2 * d) - r * (r - 1) / 2
    } else {
        big_r * (s * d + big_r)
    }
}

/// `r (2 r_1 r_2 + d_1 r_2 + d_2 r_1) - r (r - 1) / 2`.
pub fn bound_symprod(r: usize, r1: usize, r2: usize, d1: usize, d2: usize) -> i64 {
    let (r, r1, r2, d1, d2) = (r as i64, r1 as i64, r2 as i64, d1 as i64, d2 as i64);
    r * (2 * r1 * r2 + d1 * r2 + d2 * r1) - r * (r - 1) / 2
}

/// `s R (R + d r^(s-1))` with `R = prod r_i`, `r = max r_i` and `d` a bound
/// on the factor degrees.
pub fn bound_symprod_general(r_list: &[usize], d: usize) -> i64 {
    let s = r_list.len() as i64;
    let big_r: i64 = r_list.iter().map(|&x| x as i64).product();
    let r_max = r_list.iter().copied().max().unwrap_or(0) as i64;
    s * big_r * (big_r + d as i64 * r_max.pow(s as u32 - 1))
}

/// `(r_1 r_2 - r_1 - r_2 + 2)(d_1 r_2 + d_2 r_1)`, a conjectured sharper
/// degree curve for two-factor symmetric products. Reported, never
/// asserted.
pub fn symprod_conjecture(r1: usize, r2: usize, d1: usize, d2: usize) -> i64 {
    let (r1, r2, d1, d2) = (r1 as i64, r2 as i64, d1 as i64, d2 as i64);
    (r1 * r2 - r1 - r2 + 2) * (d1 * r2 + d2 * r1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn op(rows: &[&[i64]]) -> OrePoly {
        OrePoly::from_int_rows(Generator::Dx, rows)
    }

    #[test]
    fn lclm_examples() {
        let inst = build_lclm(&[op(&[&[-1], &[0, 1]]), op(&[&[-2], &[0, 1]])]).unwrap();
        let t = inst.map().t();
        assert_eq!(t[(0, 0)], inv_x());
        assert_eq!(t[(1, 1)], RatFun::new(Poly::from(2), Poly::x()));
        assert_eq!(inst.a(), &[Poly::one(), Poly::one()]);
        assert!(inst.realisation().realises(inst.map()).unwrap());
        let l = lclm(&inst).unwrap();
        assert_eq!(l, op(&[&[2], &[0, -2], &[0, 0, 1]]));
        assert!(verify_lclm(&inst, &l).unwrap());

        let inst = build_lclm(&[op(&[&[-1], &[1]]), op(&[&[1], &[1]])]).unwrap();
        assert!(!inst.regular_at_infinity());
        assert!(!inst.map().t().is_strictly_proper());
        assert_eq!(lclm(&inst).unwrap(), op(&[&[-1], &[], &[1]]));

        let l = op(&[&[2], &[0, -2], &[0, 0, 1]]);
        let inst = build_lclm(&[l.clone(), l.clone()]).unwrap();
        assert_eq!(lclm(&inst).unwrap(), l);
    }

    #[test]
    fn symprod_examples() {
        let inst = build_symprod(&[op(&[&[-1], &[0, 1]]), op(&[&[-2], &[0, 1]])]).unwrap();
        assert_eq!(inst.map().t()[(0, 0)], RatFun::new(Poly::from(3), Poly::x()));
        assert_eq!(inst.realisation().delta_degree(), 2);
        assert!(inst.realisation().realises(inst.map()).unwrap());
        let l = symprod(&inst).unwrap();
        assert_eq!(l, op(&[&[-3], &[0, 1]]));
        assert!(verify_symprod(&inst, &l, SERIES_PRECISION, 3, 7).unwrap());

        let inst = build_symprod(&[op(&[&[-1], &[1]]), op(&[&[-1], &[1]])]).unwrap();
        assert_eq!(symprod(&inst).unwrap(), op(&[&[-2], &[1]]));

        let inst = build_symprod(&[op(&[&[-1], &[0, 1]]), op(&[&[2], &[0, -2], &[0, 0, 1]])]).unwrap();
        assert!(inst.realisation().realises(inst.map()).unwrap());
        let l = symprod(&inst).unwrap();
        assert_eq!(l, op(&[&[6], &[0, -4], &[0, 0, 1]]));
        assert!(verify_symprod(&inst, &l, SERIES_PRECISION, 3, 1).unwrap());
        let wrong = op(&[&[6], &[0, -3], &[0, 0, 1]]);
        assert!(!verify_symprod(&inst, &wrong, SERIES_PRECISION, 3, 1).unwrap());
    }

    #[test]
    fn three_factor_symprod() {
        let ops = [op(&[&[-1], &[0, 1]]), op(&[&[-1], &[0, 1]]), op(&[&[-1], &[], &[1]])];
        let inst = build_symprod(&ops).unwrap();
        assert!(inst.realisation().realises(inst.map()).unwrap());
        let l = symprod(&inst).unwrap();
        assert!(verify_symprod(&inst, &l, 20, 2, 3).unwrap());
    }

    #[test]
    fn bound_examples() {
        assert_eq!(bound_lclm(2, &[1, 1], 1), 7);
        assert_eq!(bound_lclm(3, &[1, 1, 1], 1), 18);
        assert_eq!(bound_symprod(1, 1, 1, 1, 1), 4);
        assert_eq!(bound_symprod(2, 1, 2, 1, 2), 15);
    }

    #[test]
    fn rejects_degenerate_factors() {
        assert!(build_lclm(&[OrePoly::zero(Generator::Dx)]).is_err());
        assert!(build_symprod(&[op(&[&[1]])]).is_err());
        assert!(build_lclm(&[]).is_err());
    }
}
