//! Creative telescoping for `f = p / q` through Hermite reduction in `y`.

use crate::arith::{rat, squarefree_y, BiPoly, Poly, RatFun, Var, YPoly};
use crate::error::{Error, Result};
use crate::linalg::{hstack, solve_rational, PolyMatrix, RatMatrix};
use crate::ore::OrePoly;
use crate::pseudolin::{solve_min_relation, PseudoLinearMap, Realisation};

/// `num / q^power` for a fixed `q` known from context.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QFrac {
    pub num: YPoly,
    pub power: usize,
}

impl QFrac {
    pub fn zero() -> Self {
        QFrac {
            num: YPoly::zero(),
            power: 0,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn lift(&self, power: usize, q: &YPoly) -> YPoly {
        (self.power..power).fold(self.num.clone(), |acc, _| &acc * q)
    }

    pub fn add(&self, other: &QFrac, q: &YPoly) -> QFrac {
        let power = self.power.max(other.power);
        QFrac {
            num: &self.lift(power, q) + &other.lift(power, q),
            power,
        }
    }

    pub fn sub(&self, other: &QFrac, q: &YPoly) -> QFrac {
        self.add(&other.scale(&RatFun::from_int(-1)), q)
    }

    pub fn scale(&self, c: &RatFun) -> QFrac {
        QFrac {
            num: self.num.scale(c),
            power: self.power,
        }
    }

    /// `d/dy (N / q^k) = (N_y q - k N q_y) / q^(k+1)`.
    pub fn derivative_y(&self, q: &YPoly) -> QFrac {
        let k = RatFun::from_int(self.power as i64);
        QFrac {
            num: &(&self.num.derivative_y() * q) - &(&self.num * &q.derivative_y()).scale(&k),
            power: self.power + 1,
        }
    }

    /// `d/dx (N / q^k) = (N_x q - k N q_x) / q^(k+1)`.
    pub fn derivative_x(&self, q: &YPoly) -> QFrac {
        let k = RatFun::from_int(self.power as i64);
        QFrac {
            num: &(&self.num.derivative_x() * q) - &(&self.num * &q.derivative_x()).scale(&k),
            power: self.power + 1,
        }
    }

    /// Whether the value is zero as a rational function (the numerator may
    /// be a nonzero multiple of nothing only if it is zero).
    pub fn vanishes(&self) -> bool {
        self.num.is_zero()
    }
}

fn integral_y(p: &YPoly) -> YPoly {
    YPoly::new(
        std::iter::once(RatFun::zero())
            .chain(
                p.ycoeffs()
                    .iter()
                    .enumerate()
                    .map(|(j, c)| c.scale(&(rat(1) / rat(j as i64 + 1)))),
            )
            .collect(),
    )
}

/// Hermite reduction of `num / q^power` with respect to `y`:
/// returns `r` with `deg_y r < deg_y q` and, on request, `h` with
/// `num / q^power = d/dy h + r / q`.
pub fn hermite_reduce(num: &YPoly, power: usize, q: &BiPoly, want_certificate: bool) -> Result<(YPoly, Option<QFrac>)> {
    if !squarefree_y(q) || q.deg_y().is_none_or(|d| d == 0) {
        return Err(Error::NotSquareFree(q.to_string()));
    }
    let qy = q.to_ypoly();
    let dq = qy.derivative_y();
    let (_, _, t) = qy.gcdex(&dq);
    let mut n = num.clone();
    let mut cert = QFrac::zero();
    let mut m = power;
    while m >= 2 {
        // n = b q_y + c q with deg b < deg q
        let b = (&n * &t).rem(&qy);
        let (c, rest) = (&n - &(&b * &dq)).div_rem(&qy);
        debug_assert!(rest.is_zero());
        let inv = RatFun::constant(rat(1) / rat(m as i64 - 1));
        n = &c + &b.derivative_y().scale(&inv);
        if want_certificate {
            let step = QFrac {
                num: b.scale(&-&inv),
                power: m - 1,
            };
            cert = cert.add(&step, &qy);
        }
        m -= 1;
    }
    let (quot, r) = if m == 1 { n.div_rem(&qy) } else { (n, YPoly::zero()) };
    if want_certificate && !quot.is_zero() {
        let poly_part = QFrac {
            num: integral_y(&quot),
            power: 0,
        };
        cert = cert.add(&poly_part, &qy);
    }
    Ok((r, want_certificate.then_some(cert)))
}

/// Whether the x-leading coefficient of `q`, a polynomial in `y`, has
/// degree `deg_y q` and is square-free.
pub fn genericity_check(q: &BiPoly) -> bool {
    let (Some(dx), Some(dy)) = (q.deg_x(), q.deg_y()) else {
        return false;
    };
    let lead = q.x_coeff(dx);
    lead.degree() == Some(dy) && crate::arith::squarefree(&lead)
}

/// `r d_x + 2 r d_y d_x - r (r - 1) / 2`.
pub fn bound_hermite(r: usize, d_x: usize, d_y: usize) -> i64 {
    let (r, dx, dy) = (r as i64, d_x as i64, d_y as i64);
    r * dx + 2 * r * dy * dx - r * (r - 1) / 2
}

/// `(f = p / q, T, realisation)` for the telescoping problem.
#[derive(Clone, Debug)]
pub struct HermiteInstance {
    p: BiPoly,
    q: BiPoly,
    d_x: usize,
    d_y: usize,
    map: PseudoLinearMap,
    realisation: Realisation,
    /// `M^-1 Y`; its top half gives the integrated part `A` of each step.
    solved: RatMatrix,
}

fn column(p: &BiPoly, len: usize) -> Vec<Poly> {
    (0..len).map(|j| p.ycoeff(j)).collect()
}

/// Builds `T: a -> -herm(q_x a / q^2)` together with the realisation
/// `T = X M^-1 Y`, where `M` is the matrix of `(A, r) -> q A_y - q_y A + q r`,
/// `Y` multiplies by `-q_x` and `X` keeps the `r` part.
pub fn build_hermite(p: &BiPoly, q: &BiPoly) -> Result<HermiteInstance> {
    let d_y = q
        .deg_y()
        .filter(|&d| d >= 1)
        .ok_or_else(|| Error::InvalidInstance("denominator must involve y".into()))?;
    let d_x = q.deg_x().unwrap_or(0);
    if p.is_zero() {
        return Err(Error::InvalidInstance("zero numerator".into()));
    }
    if !squarefree_y(q) {
        return Err(Error::NotSquareFree(q.to_string()));
    }
    if p.deg_y().unwrap_or(0) >= d_y {
        return Err(Error::InvalidInstance(format!(
            "deg_y of numerator must be below {d_y}"
        )));
    }
    if p.deg_x().unwrap_or(0) > d_x {
        return Err(Error::InvalidInstance(format!(
            "deg_x of numerator must be at most {d_x}"
        )));
    }
    if p.gcd(q).deg_y().is_some_and(|d| d > 0) || p.gcd(q).deg_x().is_some_and(|d| d > 0) {
        return Err(Error::InvalidInstance(
            "numerator and denominator share a factor".into(),
        ));
    }

    let qy_ = q.derivative(Var::Y);
    let qx_ = q.derivative(Var::X);
    let size = 2 * d_y;
    let mut a_cols = Vec::with_capacity(d_y);
    let mut r_cols = Vec::with_capacity(d_y);
    let mut y_cols = Vec::with_capacity(d_y);
    for j in 0..d_y {
        let mut a_col = (-&qy_).shl_y(j);
        if j > 0 {
            a_col = &a_col + &q.shl_y(j - 1).scale_poly(&Poly::from(j as i64));
        }
        a_cols.push(column(&a_col, size));
        r_cols.push(column(&q.shl_y(j), size));
        y_cols.push(column(&(-&qx_).shl_y(j), size));
    }
    let m = hstack(&[PolyMatrix::from_columns(&a_cols), PolyMatrix::from_columns(&r_cols)]);
    let y = PolyMatrix::from_columns(&y_cols);
    let mut x = PolyMatrix::zeros(d_y, size);
    for j in 0..d_y {
        x[(j, d_y + j)] = Poly::one();
    }
    let realisation = Realisation::new(PolyMatrix::zeros(d_y, d_y), x, m.clone(), y.clone())?;
    debug_assert!(realisation.delta_degree() <= 2 * d_x * d_y);

    let m_rat = m.to_rat();
    let mut solved_cols = Vec::with_capacity(d_y);
    for j in 0..d_y {
        let sol = solve_rational(&m_rat, &y.to_rat().column(j))?
            .ok_or_else(|| Error::InvalidInstance("Hermite system is inconsistent".into()))?;
        solved_cols.push(sol);
    }
    let solved = RatMatrix::from_columns(&solved_cols);
    let rows: Vec<usize> = (d_y..size).collect();
    let cols: Vec<usize> = (0..d_y).collect();
    let map = PseudoLinearMap::new(solved.submatrix(&rows, &cols))?;
    Ok(HermiteInstance {
        p: p.clone(),
        q: q.clone(),
        d_x,
        d_y,
        map,
        realisation,
        solved,
    })
}

impl HermiteInstance {
    pub fn p(&self) -> &BiPoly {
        &self.p
    }

    pub fn q(&self) -> &BiPoly {
        &self.q
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

    /// Coordinates of `p` in `1, y, ..., y^(d_y - 1)`.
    pub fn a(&self) -> Vec<Poly> {
        column(&self.p, self.d_y)
    }

    pub fn is_generic(&self) -> bool {
        genericity_check(&self.q)
    }

    /// `A` with `q_x a = q A_y - q_y A + q r`, as a polynomial in `y`.
    fn integrated_part(&self, a: &[RatFun]) -> Result<YPoly> {
        let rows: Vec<usize> = (0..self.d_y).collect();
        let cols: Vec<usize> = (0..self.d_y).collect();
        let top = self.solved.submatrix(&rows, &cols);
        // M^-1 (q_x a) = -(M^-1 Y) a
        let coords: Vec<RatFun> = top.mul_vec(a)?.into_iter().map(|c| -c).collect();
        Ok(YPoly::from_coords(&coords))
    }
}

/// Minimal telescoper `L` with `L(f) = d/dy h`, and `h` on request.
pub fn telescoper(inst: &HermiteInstance, want_certificate: bool) -> Result<(OrePoly, Option<QFrac>)> {
    let a = inst.a();
    let rel = solve_min_relation(&inst.map, &a)?;
    let l = rel.operator();
    if !want_certificate {
        return Ok((l, None));
    }
    // d^i f / dx^i = d/dy h_i + a_i / q with h_0 = 0 and
    // h_{i+1} = d/dx h_i - A_i / q.
    let qy = inst.q.to_ypoly();
    let mut h = QFrac::zero();
    let mut cert = QFrac::zero();
    let mut ai: Vec<RatFun> = a.iter().cloned().map(RatFun::from_poly).collect();
    for (i, eta) in rel.eta().iter().enumerate() {
        if i > 0 {
            let big_a = inst.integrated_part(&ai)?;
            h = h.derivative_x(&qy).sub(&QFrac { num: big_a, power: 1 }, &qy);
            ai = inst.map.apply(&ai)?;
        }
        cert = cert.add(&h.scale(&RatFun::from_poly(eta.clone())), &qy);
    }
    Ok((l, Some(cert)))
}

/// `L(p / q)` as `N / q^(order + 1)`.
pub fn apply_to_fraction(l: &OrePoly, p: &BiPoly, q: &BiPoly) -> QFrac {
    let qy = q.to_ypoly();
    let mut term = QFrac {
        num: p.to_ypoly(),
        power: 1,
    };
    let mut acc = QFrac::zero();
    for (i, c) in l.coeffs().iter().enumerate() {
        if i > 0 {
            term = term.derivative_x(&qy);
        }
        if !c.is_zero() {
            acc = acc.add(&term.scale(c), &qy);
        }
    }
    acc
}

/// Independent check: the Hermite remainder of `L(f)` vanishes.
pub fn verify_telescoper(inst: &HermiteInstance, l: &OrePoly) -> Result<bool> {
    let lf = apply_to_fraction(l, &inst.p, &inst.q);
    let (r, _) = hermite_reduce(&lf.num, lf.power, &inst.q, false)?;
    Ok(r.is_zero())
}

/// Checks `L(f) - d/dy h = 0` exactly.
pub fn verify_certificate(inst: &HermiteInstance, l: &OrePoly, h: &QFrac) -> bool {
    let qy = inst.q.to_ypoly();
    let lf = apply_to_fraction(l, &inst.p, &inst.q);
    lf.sub(&h.derivative_y(&qy), &qy).vanishes()
}
