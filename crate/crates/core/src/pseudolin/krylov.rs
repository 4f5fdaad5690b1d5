//! Denominators of Krylov matrices built from selected iterates.

use super::{poly_column, PseudoLinearMap, Realisation};
use crate::arith::Poly;
use crate::error::{Error, Result};
use crate::linalg::{det_denominator, RatMatrix};

/// `[theta^{s_1} a, ..., theta^{s_r} a]` as columns.
pub fn krylov_matrix(map: &PseudoLinearMap, a: &[Poly], s: &[usize]) -> Result<RatMatrix> {
    let top = s.iter().copied().max().unwrap_or(0);
    let it = map.iterates(&poly_column(a), top)?;
    let cols: Vec<_> = s.iter().map(|&k| it[k].clone()).collect();
    Ok(RatMatrix::from_columns(&cols))
}

/// Checks that `phi_l(K)` divides `det(M)^{s_r}` for every `l <= l_max`,
/// where `K` is the Krylov matrix for the nondecreasing exponents `s`.
///
/// The divisibility is only proven for strictly proper `T`; other maps
/// are rejected unless `allow_improper` is set.
pub fn krylov_denominator_check(
    map: &PseudoLinearMap,
    realisation: &Realisation,
    a: &[Poly],
    s: &[usize],
    l_max: usize,
    allow_improper: bool,
) -> Result<bool> {
    if !allow_improper && !map.t().is_strictly_proper() {
        return Err(Error::NotStrictlyProper);
    }
    if s.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::Dimension("exponents must be nondecreasing".into()));
    }
    let Some(&s_r) = s.last() else {
        return Ok(true);
    };
    let k = krylov_matrix(map, a, s)?;
    let target = realisation.delta().pow(s_r as u32);
    Ok((1..=l_max).all(|l| det_denominator(&k, l).divides(&target)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::RatFun;
    use crate::pseudolin::trivial_realisation;

    #[test]
    fn one_over_x() {
        let map = PseudoLinearMap::new(RatMatrix::from_rows(vec![vec![RatFun::x().recip()]])).unwrap();
        let real = trivial_realisation(&map);
        let k = krylov_matrix(&map, &[Poly::one()], &[0, 1, 2]).unwrap();
        assert_eq!(k.row(0), &[RatFun::one(), RatFun::x().recip(), RatFun::zero()]);
        assert!(krylov_denominator_check(&map, &real, &[Poly::one()], &[0, 1, 2], 3, false).unwrap());
    }

    #[test]
    fn improper_gate() {
        let map = PseudoLinearMap::new(RatMatrix::from_rows(vec![vec![RatFun::x()]])).unwrap();
        let real = trivial_realisation(&map);
        assert_eq!(
            krylov_denominator_check(&map, &real, &[Poly::one()], &[0, 1], 1, false),
            Err(Error::NotStrictlyProper)
        );
        assert!(krylov_denominator_check(&map, &real, &[Poly::one()], &[0, 1], 1, true).unwrap());
    }
}
