//! Fraction-free elimination: determinants, rank and exact solving.

use super::{PolyMatrix, RatMatrix};
use crate::arith::{Poly, RatFun};
use crate::error::{Error, Result};

/// Row echelon form produced by fraction-free elimination.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub matrix: PolyMatrix,
    /// `(row, col)` of each pivot, in order.
    pub pivots: Vec<(usize, usize)>,
    /// Original row index now sitting at each position.
    pub row_order: Vec<usize>,
    /// Parity of the row permutation.
    pub swaps: usize,
}

impl Echelon {
    /// Bareiss elimination with row pivoting. Column `c` is skipped when
    /// it has no nonzero entry at or below the current row; entries stay
    /// minors of the input so every division is exact.
    pub fn compute(m: &PolyMatrix) -> Echelon {
        let mut a = m.clone();
        let (rows, cols) = (a.rows(), a.cols());
        let mut row_order: Vec<usize> = (0..rows).collect();
        let mut pivots = Vec::new();
        let mut swaps = 0;
        let mut prev = Poly::one();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            // Prefer the lowest-degree pivot to limit growth.
            let Some(p) = (r..rows)
                .filter(|&i| !a[(i, c)].is_zero())
                .min_by_key(|&i| a[(i, c)].degree())
            else {
                continue;
            };
            if p != r {
                a.swap_rows(p, r);
                row_order.swap(p, r);
                swaps += 1;
            }
            let piv = a[(r, c)].clone();
            for i in r + 1..rows {
                let lead = a[(i, c)].clone();
                for j in c + 1..cols {
                    let v = &(&piv * &a[(i, j)]) - &(&lead * &a[(r, j)]);
                    a[(i, j)] = v.exact_div(&prev);
                }
                a[(i, c)] = Poly::zero();
            }
            prev = piv;
            pivots.push((r, c));
            r += 1;
        }
        Echelon {
            matrix: a,
            pivots,
            row_order,
            swaps,
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Exact determinant of a square polynomial matrix by Bareiss elimination.
pub fn det_fraction_free(m: &PolyMatrix) -> Result<Poly> {
    if !m.is_square() {
        return Err(Error::Dimension(format!(
            "determinant of a {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    let n = m.rows();
    if n == 0 {
        return Ok(Poly::one());
    }
    let e = Echelon::compute(m);
    if e.rank() < n {
        return Ok(Poly::zero());
    }
    let d = e.matrix[(n - 1, n - 1)].clone();
    Ok(if e.swaps % 2 == 1 { -d } else { d })
}

/// Determinant over `Q(x)`: each row is scaled to `Q[x]` first.
pub fn det_rational(m: &RatMatrix) -> Result<RatFun> {
    if !m.is_square() {
        return Err(Error::Dimension(format!(
            "determinant of a {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    let (cleared, scales) = m.transpose().clear_column_denominators();
    let det = det_fraction_free(&cleared)?;
    let scale = scales.iter().fold(Poly::one(), |acc, s| &acc * s);
    Ok(RatFun::new(det, scale))
}

/// Exact rank over `Q(x)`, computed after clearing column denominators.
pub fn rank(a: &RatMatrix) -> usize {
    let (p, _) = a.clear_column_denominators();
    Echelon::compute(&p).rank()
}

/// Solves `A x = b` for `A` of full column rank.
///
/// Returns `Ok(None)` when the system is inconsistent and
/// [`Error::RankDeficient`] when the columns of `A` are dependent.
pub fn solve_rational(a: &RatMatrix, b: &[RatFun]) -> Result<Option<Vec<RatFun>>> {
    let (n, m) = (a.rows(), a.cols());
    if b.len() != n {
        return Err(Error::Dimension(format!(
            "right-hand side of length {} for {n} rows",
            b.len()
        )));
    }
    let mut aug_cols: Vec<Vec<RatFun>> = (0..m).map(|j| a.column(j)).collect();
    aug_cols.push(b.to_vec());
    let (aug, scales) = RatMatrix::from_columns(&aug_cols).clear_column_denominators();
    let ech = Echelon::compute(&aug);
    if ech.pivots.iter().any(|&(_, c)| c == m) {
        return Ok(None);
    }
    if ech.rank() < m {
        return Err(Error::RankDeficient);
    }
    // Pivots sit on the diagonal of the leading m x m block.
    let e = &ech.matrix;
    let mut z = vec![RatFun::zero(); m];
    for k in (0..m).rev() {
        let mut acc = RatFun::from_poly(e[(k, m)].clone());
        for (j, zj) in z.iter().enumerate().skip(k + 1) {
            if !e[(k, j)].is_zero() && !zj.is_zero() {
                acc = &acc - &zj.mul_poly(&e[(k, j)]);
            }
        }
        z[k] = &acc / &RatFun::from_poly(e[(k, k)].clone());
    }
    let cb = RatFun::from_poly(scales[m].clone()).recip();
    Ok(Some(
        z.into_iter()
            .zip(&scales)
            .map(|(zj, cj)| &zj.mul_poly(cj) * &cb)
            .collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    fn r(n: &[i64], d: &[i64]) -> RatFun {
        RatFun::new(p(n), p(d))
    }

    #[test]
    fn det_examples() {
        let d = PolyMatrix::diagonal(&[Poly::x(), p(&[-1, 1])]);
        assert_eq!(det_fraction_free(&d).unwrap(), p(&[0, -1, 1]));
        let c = PolyMatrix::from_rows(vec![vec![p(&[1]), p(&[2])], vec![p(&[3]), p(&[4])]]);
        assert_eq!(det_fraction_free(&c).unwrap(), p(&[-2]));
        assert!(det_fraction_free(&PolyMatrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn det_needs_row_swap() {
        let m = PolyMatrix::from_rows(vec![
            vec![p(&[0]), p(&[1]), p(&[0])],
            vec![p(&[1]), p(&[0]), p(&[0])],
            vec![p(&[0]), p(&[0]), Poly::x()],
        ]);
        assert_eq!(det_fraction_free(&m).unwrap(), p(&[0, -1]));
    }

    #[test]
    fn solve_examples() {
        let a = RatMatrix::from_rows(vec![vec![RatFun::one()]]);
        let b = vec![r(&[1], &[0, 1])];
        assert_eq!(solve_rational(&a, &b).unwrap(), Some(b.clone()));

        let a = RatMatrix::diagonal(&[RatFun::x(), RatFun::one()]);
        let b = vec![RatFun::one(), r(&[1], &[0, 1])];
        let inv_x = r(&[1], &[0, 1]);
        assert_eq!(solve_rational(&a, &b).unwrap(), Some(vec![inv_x.clone(), inv_x]));

        let a = RatMatrix::from_rows(vec![
            vec![r(&[1], &[0, 1]), RatFun::one()],
            vec![RatFun::zero(), RatFun::x()],
        ]);
        let b = vec![RatFun::zero(), RatFun::from_poly(p(&[0, 0, 1]))];
        assert_eq!(
            solve_rational(&a, &b).unwrap(),
            Some(vec![RatFun::from_poly(p(&[0, 0, -1])), RatFun::x()])
        );
    }

    #[test]
    fn solve_inconsistent_and_deficient() {
        let a = RatMatrix::from_columns(&[vec![RatFun::one(), RatFun::x()]]);
        assert_eq!(solve_rational(&a, &[RatFun::one(), RatFun::one()]).unwrap(), None);
        let a = RatMatrix::from_rows(vec![
            vec![RatFun::one(), RatFun::x()],
            vec![RatFun::x(), RatFun::from_poly(p(&[0, 0, 1]))],
        ]);
        assert_eq!(
            solve_rational(&a, &[RatFun::one(), RatFun::x()]),
            Err(Error::RankDeficient)
        );
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&RatMatrix::zeros(2, 3)), 0);
        assert_eq!(rank(&RatMatrix::identity(3)), 3);
        let a = RatMatrix::from_rows(vec![
            vec![RatFun::one(), RatFun::x()],
            vec![RatFun::x(), RatFun::from_poly(p(&[0, 0, 1]))],
        ]);
        assert_eq!(rank(&a), 1);
    }

    #[test]
    fn det_rational_of_denominators() {
        let m = RatMatrix::from_rows(vec![
            vec![r(&[1], &[0, 1]), r(&[1], &[-1, 1])],
            vec![r(&[1], &[0, 0, 1]), r(&[1], &[0, 1])],
        ]);
        // 1/x^2 - 1/(x^2 (x-1)) = (x-2)/(x^2 (x-1))
        assert_eq!(det_rational(&m).unwrap(), r(&[-2, 1], &[0, 0, -1, 1]));
    }
}
