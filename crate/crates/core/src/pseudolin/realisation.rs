//! Realisations `T = W + X M^-1 Y` with polynomial matrices.

use super::PseudoLinearMap;
use crate::arith::Poly;
use crate::error::{Error, Result};
use crate::linalg::{det_fraction_free, lcm_denominator, PolyMatrix, RatMatrix};

#[derive(Clone, Debug, PartialEq)]
pub struct Realisation {
    w: PolyMatrix,
    x: PolyMatrix,
    m: PolyMatrix,
    y: PolyMatrix,
    delta: Poly,
}

impl Realisation {
    /// Checks shapes (`n x n`, `n x m`, `m x m`, `m x n`) and that `M` is
    /// non-singular.
    pub fn new(w: PolyMatrix, x: PolyMatrix, m: PolyMatrix, y: PolyMatrix) -> Result<Self> {
        let n = w.rows();
        let k = m.rows();
        let ok = w.cols() == n && x.rows() == n && x.cols() == k && m.cols() == k && y.rows() == k && y.cols() == n;
        if !ok {
            return Err(Error::Dimension(format!(
                "realisation shapes W {}x{}, X {}x{}, M {}x{}, Y {}x{}",
                w.rows(),
                w.cols(),
                x.rows(),
                x.cols(),
                m.rows(),
                m.cols(),
                y.rows(),
                y.cols()
            )));
        }
        let delta = det_fraction_free(&m)?;
        if delta.is_zero() {
            return Err(Error::InvalidInstance("realisation with singular M".into()));
        }
        Ok(Realisation { w, x, m, y, delta })
    }

    pub fn w(&self) -> &PolyMatrix {
        &self.w
    }

    pub fn x(&self) -> &PolyMatrix {
        &self.x
    }

    pub fn m(&self) -> &PolyMatrix {
        &self.m
    }

    pub fn y(&self) -> &PolyMatrix {
        &self.y
    }

    /// `det M`.
    pub fn delta(&self) -> &Poly {
        &self.delta
    }

    /// `deg det M`.
    pub fn delta_degree(&self) -> usize {
        self.delta.degree().expect("nonsingular")
    }

    /// `W + X M^-1 Y`.
    pub fn reconstruct(&self) -> Result<RatMatrix> {
        let minv = self.m.to_rat().inverse()?;
        let xmy = self.x.to_rat().mul(&minv)?.mul(&self.y.to_rat())?;
        self.w.to_rat().add(&xmy)
    }

    /// Whether this realisation reproduces `map`'s matrix exactly.
    pub fn realises(&self, map: &PseudoLinearMap) -> Result<bool> {
        Ok(&self.reconstruct()? == map.t())
    }
}

/// `W = 0`, `X = den T`, `M = den I`, `Y = I` with `den` the monic lcm of
/// the entry denominators.
pub fn trivial_realisation(map: &PseudoLinearMap) -> Realisation {
    let n = map.dim();
    let den = lcm_denominator(map.t().entries());
    let x = map.t().map(|e| e.num() * &den.exact_div(e.den()));
    let m = PolyMatrix::diagonal(&vec![den; n]);
    Realisation::new(PolyMatrix::zeros(n, n), x, m, PolyMatrix::identity(n))
        .expect("trivial realisation is well formed")
}
