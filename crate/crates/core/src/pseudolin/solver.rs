//! Minimal polynomial relation among the iterates `theta^i a`.

use super::{poly_column, PseudoLinearMap};
use crate::arith::{primitive_family, Poly, RatFun};
use crate::error::{Error, Result};
use crate::linalg::lcm_denominator;
use crate::ore::{Generator, OrePoly};

/// `sum_{i <= rho} eta_i theta^i a = 0`, primitive over `Z[x]` with a
/// positive leading term in `eta_rho`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    eta: Vec<Poly>,
}

impl Relation {
    /// Normalises `eta` to primitive form. Fails if the last entry is zero.
    pub fn new(eta: Vec<Poly>) -> Result<Self> {
        if eta.last().is_none_or(Poly::is_zero) {
            return Err(Error::ZeroInput("relation with zero leading coefficient"));
        }
        Ok(Relation {
            eta: primitive_family(&eta),
        })
    }

    /// Takes `eta` as given, without normalising.
    pub fn from_raw(eta: Vec<Poly>) -> Self {
        Relation { eta }
    }

    pub fn rho(&self) -> usize {
        self.eta.len().saturating_sub(1)
    }

    pub fn eta(&self) -> &[Poly] {
        &self.eta
    }

    /// `deg eta_i`, `-1` for zero entries.
    pub fn degrees(&self) -> Vec<i64> {
        self.eta.iter().map(Poly::deg_i64).collect()
    }

    pub fn max_degree(&self) -> i64 {
        self.degrees().into_iter().max().unwrap_or(-1)
    }

    /// `sum_i eta_i Dx^i`.
    pub fn operator(&self) -> OrePoly {
        OrePoly::from_polys(Generator::Dx, &self.eta)
    }
}

struct Row {
    vec: Vec<Poly>,
    comb: Vec<Poly>,
    pivot: usize,
}

fn remove_content(vec: &mut [Poly], comb: &mut [Poly]) {
    let g = vec
        .iter()
        .chain(comb.iter())
        .filter(|p| !p.is_zero())
        .fold(Poly::zero(), |acc, p| if acc.is_one() { acc } else { acc.gcd(p) });
    if g.is_zero() || g.is_one() {
        return;
    }
    for p in vec.iter_mut().chain(comb.iter_mut()) {
        *p = p.exact_div(&g);
    }
}

/// Finds the smallest `rho` such that `theta^rho a` depends on the earlier
/// iterates, and the relation expressing that dependency.
///
/// Iterates are cleared of denominators and reduced one at a time against
/// the rows already in echelon form. Each row carries the polynomial
/// combination of the cleared iterates it stands for, so the first row
/// that reduces to zero gives the relation directly.
pub fn solve_min_relation(map: &PseudoLinearMap, a: &[Poly]) -> Result<Relation> {
    let n = map.dim();
    if a.len() != n {
        return Err(Error::Dimension(format!(
            "vector of length {} for a map of dimension {n}",
            a.len()
        )));
    }
    if a.iter().all(Poly::is_zero) {
        return Err(Error::ZeroInput("minimal relation of the zero vector"));
    }
    let mut rows: Vec<Row> = Vec::new();
    let mut scales: Vec<Poly> = Vec::new();
    let mut v: Vec<RatFun> = poly_column(a);
    for i in 0..=n {
        if i > 0 {
            v = map.apply(&v)?;
        }
        let c = lcm_denominator(&v);
        let mut w: Vec<Poly> = v.iter().map(|e| e.num() * &c.exact_div(e.den())).collect();
        scales.push(c);
        let mut comb = vec![Poly::zero(); i + 1];
        comb[i] = Poly::one();
        for row in &rows {
            let f = w[row.pivot].clone();
            if f.is_zero() {
                continue;
            }
            let piv = &row.vec[row.pivot];
            for (wj, rj) in w.iter_mut().zip(&row.vec) {
                *wj = &(piv * &*wj) - &(&f * rj);
            }
            for (j, cj) in comb.iter_mut().enumerate() {
                let rj = row.comb.get(j).cloned().unwrap_or_default();
                *cj = &(piv * &*cj) - &(&f * &rj);
            }
            remove_content(&mut w, &mut comb);
        }
        if w.iter().all(Poly::is_zero) {
            let eta = comb.iter().zip(&scales).map(|(cj, sj)| cj * sj).collect();
            return Relation::new(eta);
        }
        let pivot = (0..n)
            .filter(|&j| !w[j].is_zero())
            .min_by_key(|&j| w[j].degree())
            .expect("nonzero row");
        rows.push(Row { vec: w, comb, pivot });
    }
    unreachable!("more than n independent vectors in dimension n")
}

/// Recomputes `sum eta_i theta^i a` exactly and checks that it vanishes.
pub fn verify_relation(map: &PseudoLinearMap, a: &[Poly], rel: &Relation) -> bool {
    if rel.eta.last().is_none_or(Poly::is_zero) || a.len() != map.dim() {
        return false;
    }
    let Ok(iterates) = map.iterates(&poly_column(a), rel.rho()) else {
        return false;
    };
    let mut acc = vec![RatFun::zero(); map.dim()];
    for (eta, it) in rel.eta.iter().zip(&iterates) {
        if eta.is_zero() {
            continue;
        }
        for (s, v) in acc.iter_mut().zip(it) {
            *s = &*s + &v.mul_poly(eta);
        }
    }
    acc.iter().all(RatFun::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::RatMatrix;

    fn map1(t: RatFun) -> PseudoLinearMap {
        PseudoLinearMap::new(RatMatrix::from_rows(vec![vec![t]])).unwrap()
    }

    #[test]
    fn one_dimensional_examples() {
        let map = map1(RatFun::x().recip());
        let rel = solve_min_relation(&map, &[Poly::one()]).unwrap();
        assert_eq!(rel.eta(), &[Poly::from(-1), Poly::x()]);
        assert!(verify_relation(&map, &[Poly::one()], &rel));

        let broken = Relation::from_raw(vec![Poly::zero(), Poly::x()]);
        assert!(!verify_relation(&map, &[Poly::one()], &broken));
        let short = Relation::from_raw(vec![Poly::one()]);
        assert!(!verify_relation(&map, &[Poly::one()], &short));

        let zero = map1(RatFun::zero());
        let rel = solve_min_relation(&zero, &[Poly::one()]).unwrap();
        assert_eq!(rel.eta(), &[Poly::zero(), Poly::one()]);
        assert!(verify_relation(&zero, &[Poly::one()], &rel));
    }

    #[test]
    fn zero_vector_rejected() {
        let map = map1(RatFun::one());
        assert!(solve_min_relation(&map, &[Poly::zero()]).is_err());
    }

    #[test]
    fn cyclic_two_dimensional() {
        // T = 0, a = (1, x): theta a = (0, 1), theta^2 a = 0
        let map = PseudoLinearMap::new(RatMatrix::zeros(2, 2)).unwrap();
        let a = [Poly::one(), Poly::x()];
        let rel = solve_min_relation(&map, &a).unwrap();
        assert_eq!(rel.rho(), 2);
        assert_eq!(rel.eta(), &[Poly::zero(), Poly::zero(), Poly::one()]);
    }
}
