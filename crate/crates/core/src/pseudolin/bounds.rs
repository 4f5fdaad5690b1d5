//! Generic degree bounds on minimal relations, and the report type that
//! compares them with observed degrees.

use serde::Serialize;

/// Degree bound for `eta_i` given a realisation with `deg det M = delta`:
/// `rho d_a + rho delta - (rho (rho + 1) / 2 - i)`.
pub fn bound_realisation(rho: usize, d_a: usize, delta: usize, i: usize) -> i64 {
    assert!(i <= rho, "index {i} beyond order {rho}");
    let (rho, d_a, delta, i) = (rho as i64, d_a as i64, delta as i64, i as i64);
    rho * d_a + rho * delta - (rho * (rho + 1) / 2 - i)
}

/// Shape of the relation obtained by Cramer's rule on the Krylov system:
/// `eta_i = den^i p_i` with `deg p_i <= rho d_a + (rho (rho + 1) / 2 - i)
/// max(d - 1, D)`, where `d = deg den` and `D = deg(den T)`. Returns the
/// power of `den` and the degree bound on `p_i`.
pub fn bound_direct(rho: usize, d_a: usize, d: usize, big_d: usize, i: usize) -> (usize, i64) {
    assert!(i <= rho, "index {i} beyond order {rho}");
    let tilde = (d as i64 - 1).max(big_d as i64);
    let (r, d_a, ii) = (rho as i64, d_a as i64, i as i64);
    (i, r * d_a + (r * (r + 1) / 2 - ii) * tilde)
}

/// Observed coefficient degrees of a relation against a per-index bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub label: String,
    pub name: String,
    pub rho: usize,
    /// `deg eta_i`, `-1` for a zero coefficient.
    pub observed: Vec<i64>,
    pub bound: Vec<i64>,
    /// False when the hypotheses behind the bound fail for this instance;
    /// the numbers are still reported.
    pub asserted: bool,
}

impl BoundReport {
    pub fn new(
        label: impl Into<String>,
        name: impl Into<String>,
        observed: Vec<i64>,
        bound: Vec<i64>,
        asserted: bool,
    ) -> Self {
        assert_eq!(observed.len(), bound.len());
        BoundReport {
            label: label.into(),
            name: name.into(),
            rho: observed.len().saturating_sub(1),
            observed,
            bound,
            asserted,
        }
    }

    pub fn slack(&self) -> Vec<i64> {
        self.bound.iter().zip(&self.observed).map(|(b, o)| b - o).collect()
    }

    pub fn holds(&self) -> bool {
        self.slack().iter().all(|s| *s >= 0)
    }

    /// A failure only counts when the bound is asserted.
    pub fn violated(&self) -> bool {
        self.asserted && !self.holds()
    }

    pub fn max_observed(&self) -> i64 {
        self.observed.iter().copied().max().unwrap_or(-1)
    }

    pub fn max_bound(&self) -> i64 {
        self.bound.iter().copied().max().unwrap_or(-1)
    }
}
