//! Differential resolvents of algebraic functions.

use crate::arith::{squarefree_y, BiPoly, Poly, RatFun, Var, YPoly};
use crate::error::{Error, Result};
use crate::linalg::{hstack, solve_rational, PolyMatrix, RatMatrix};
use crate::ore::{Generator, OrePoly};
use crate::pseudolin::{solve_min_relation, PseudoLinearMap, Realisation};

/// `r (2 d_y - 1) d_x - r (r - 1) / 2`.
pub fn bound_algebraic(r: usize, d_x: usize, d_y: usize) -> i64 {
    let (r, dx, dy) = (r as i64, d_x as i64, d_y as i64);
    r * (2 * dy - 1) * dx - r * (r - 1) / 2
}

/// `d (2 d^2 - 3 d / 2 + 1 / 2)`, the bound above at `r = d_x = d_y = d`.
pub fn resolvent_generic_bound(d: usize) -> i64 {
    let d = d as i64;
    d * (4 * d * d - 3 * d + 1) / 2
}

/// `d (2 d^2 - 3 d + 3)`, the degree curve observed on generic inputs.
pub fn resolvent_empirical_curve(d: usize) -> i64 {
    let d = d as i64;
    d * (2 * d * d - 3 * d + 3)
}

#[derive(Clone, Debug)]
pub struct AlgebraicInstance {
    p: BiPoly,
    d_x: usize,
    d_y: usize,
    map: PseudoLinearMap,
    realisation: Realisation,
}

/// Builds `T: a -> -a_y P_x / P_y mod P` on `Q(x)[y]_{<d_y}` through the
/// system `-a_y P_x = U P + V P_y` with `deg U < d_y - 1`, `deg V < d_y`.
/// `M` is the matrix of `(U, V) -> U P + V P_y`, `Y` the map
/// `a -> -a_y P_x`, and `X` keeps `V`.
pub fn build_algebraic(p: &BiPoly) -> Result<AlgebraicInstance> {
    let d_y = p
        .deg_y()
        .filter(|&d| d >= 1)
        .ok_or_else(|| Error::InvalidInstance("polynomial must involve y".into()))?;
    if !squarefree_y(p) {
        return Err(Error::NotSquareFree(p.to_string()));
    }
    let d_x = p.deg_x().unwrap_or(0);
    let size = 2 * d_y - 1;
    let py = p.derivative(Var::Y);
    let px = p.derivative(Var::X);
    let m = hstack(&[
        PolyMatrix::multiplication(p, size, d_y - 1),
        PolyMatrix::multiplication(&py, size, d_y),
    ]);
    let mut y = PolyMatrix::zeros(size, d_y);
    for j in 1..d_y {
        let col = px.shl_y(j - 1).scale_poly(&Poly::from(-(j as i64)));
        for (k, c) in col.ycoeffs().iter().enumerate() {
            y[(k, j)] = c.clone();
        }
    }
    let mut x = PolyMatrix::zeros(d_y, size);
    for j in 0..d_y {
        x[(j, d_y - 1 + j)] = Poly::one();
    }
    let realisation = Realisation::new(PolyMatrix::zeros(d_y, d_y), x, m.clone(), y.clone())?;
    let m_rat = m.to_rat();
    let y_rat = y.to_rat();
    let mut cols = Vec::with_capacity(d_y);
    for j in 0..d_y {
        let sol = solve_rational(&m_rat, &y_rat.column(j))?
            .ok_or_else(|| Error::InvalidInstance("Bezout system is inconsistent".into()))?;
        cols.push(sol[d_y - 1..].to_vec());
    }
    let map = PseudoLinearMap::new(RatMatrix::from_columns(&cols))?;
    Ok(AlgebraicInstance {
        p: p.clone(),
        d_x,
        d_y,
        map,
        realisation,
    })
}

impl AlgebraicInstance {
    pub fn p(&self) -> &BiPoly {
        &self.p
    }

    pub fn d_x(&self) -> usize {
        self.d_x
    }

    pub fn d_y(&self) -> usize {
        self.d_y
    }

    pub fn map(&self) -> &PseudoLinearMap {
        &self.map
    }

    pub fn realisation(&self) -> &Realisation {
        &self.realisation
    }

    pub fn is_generic(&self) -> bool {
        super::genericity_check(&self.p)
    }
}

/// Minimal operator annihilating every root `y(x)` of `P`.
pub fn resolvent(inst: &AlgebraicInstance) -> Result<OrePoly> {
    if inst.d_y == 1 {
        // single rational root alpha: alpha Dx - alpha'
        let alpha = -(&RatFun::new(inst.p.ycoeff(0), inst.p.ycoeff(1)));
        if alpha.is_zero() {
            return Ok(OrePoly::one(Generator::Dx));
        }
        let l = OrePoly::new(Generator::Dx, vec![-alpha.derivative(), alpha]);
        return Ok(l.primitive());
    }
    let mut a = vec![Poly::zero(); inst.d_y];
    a[1] = Poly::one();
    Ok(solve_min_relation(&inst.map, &a)?.operator())
}

/// Independent check through the recursion
/// `D_0 = y`, `D_{i+1} = d/dx D_i - (D_i)_y P_x / P_y mod P`:
/// `sum eta_i D_i` must vanish modulo `P`.
pub fn verify_resolvent(inst: &AlgebraicInstance, l: &OrePoly) -> bool {
    let p = inst.p.to_ypoly();
    let (g, _, inv_py) = p.gcdex(&inst.p.derivative(Var::Y).to_ypoly());
    if g.degree() != Some(0) {
        return false;
    }
    let px = inst.p.derivative(Var::X).to_ypoly();
    let mut d = YPoly::from_coords(&[RatFun::zero(), RatFun::one()]).rem(&p);
    let mut acc = YPoly::zero();
    for (i, c) in l.coeffs().iter().enumerate() {
        if i > 0 {
            let chain = &(&d.derivative_y() * &px) * &inv_py;
            d = (&d.derivative_x() - &chain).rem(&p);
        }
        acc = &acc + &d.scale(c);
    }
    acc.rem(&p).is_zero()
}
