//! Pseudo-linear maps `theta = d/dx + T` on `Q(x)^n`, their realisations,
//! and the minimal-relation solver.

mod bounds;
mod krylov;
mod realisation;
mod solver;

pub use bounds::{bound_direct, bound_realisation, BoundReport};
pub use krylov::{krylov_denominator_check, krylov_matrix};
pub use realisation::{trivial_realisation, Realisation};
pub use solver::{solve_min_relation, verify_relation, Relation};

use crate::arith::{Poly, RatFun};
use crate::error::{Error, Result};
use crate::linalg::RatMatrix;

/// `theta(v) = v' + T v`.
#[derive(Clone, Debug, PartialEq)]
pub struct PseudoLinearMap {
    t: RatMatrix,
}

impl PseudoLinearMap {
    pub fn new(t: RatMatrix) -> Result<Self> {
        if !t.is_square() {
            return Err(Error::Dimension(format!(
                "pseudo-linear map from a {}x{} matrix",
                t.rows(),
                t.cols()
            )));
        }
        Ok(PseudoLinearMap { t })
    }

    pub fn t(&self) -> &RatMatrix {
        &self.t
    }

    pub fn dim(&self) -> usize {
        self.t.rows()
    }

    pub fn apply(&self, v: &[RatFun]) -> Result<Vec<RatFun>> {
        theta_apply(self, v)
    }

    /// `[a, theta a, ..., theta^k a]`.
    pub fn iterates(&self, a: &[RatFun], k: usize) -> Result<Vec<Vec<RatFun>>> {
        let mut out = Vec::with_capacity(k + 1);
        out.push(a.to_vec());
        for i in 0..k {
            let next = self.apply(&out[i])?;
            out.push(next);
        }
        Ok(out)
    }
}

pub fn theta_apply(map: &PseudoLinearMap, v: &[RatFun]) -> Result<Vec<RatFun>> {
    let tv = map.t.mul_vec(v)?;
    Ok(v.iter().zip(tv).map(|(vi, ti)| &vi.derivative() + &ti).collect())
}

pub fn is_strictly_proper(t: &RatMatrix) -> bool {
    t.is_strictly_proper()
}

pub(crate) fn poly_column(a: &[Poly]) -> Vec<RatFun> {
    a.iter().cloned().map(RatFun::from_poly).collect()
}
