//! Structured matrix builders.

use super::{Matrix, PolyMatrix, RatMatrix};
use crate::arith::{BiPoly, Poly, RatFun, Ring};
use crate::error::{Error, Result};

/// Kronecker product; block `(i, j)` is `a[i, j] * b`.
pub fn kronecker<T: Ring>(a: &Matrix<T>, b: &Matrix<T>) -> Matrix<T> {
    let (ar, ac, br, bc) = (a.rows(), a.cols(), b.rows(), b.cols());
    let mut out = Matrix::zeros(ar * br, ac * bc);
    for i in 0..ar {
        for j in 0..ac {
            let s = &a[(i, j)];
            if s.is_zero() {
                continue;
            }
            for k in 0..br {
                for l in 0..bc {
                    out[(i * br + k, j * bc + l)] = s.mul(&b[(k, l)]);
                }
            }
        }
    }
    out
}

/// Companion matrix: ones on the subdiagonal, last column
/// `-coeffs[j] / lead`.
pub fn companion(coeffs: &[RatFun], lead: &RatFun) -> Result<RatMatrix> {
    if lead.is_zero() {
        return Err(Error::ZeroInput("companion matrix with zero leading coefficient"));
    }
    if coeffs.is_empty() {
        return Err(Error::Dimension("companion matrix of order 0".into()));
    }
    let r = coeffs.len();
    let mut m = RatMatrix::zeros(r, r);
    for j in 0..r - 1 {
        m[(j + 1, j)] = RatFun::one();
    }
    let inv = lead.recip();
    for (j, c) in coeffs.iter().enumerate() {
        m[(j, r - 1)] = -(c * &inv);
    }
    Ok(m)
}

/// Sylvester matrix of `a` and `b` with respect to `y`.
///
/// With `m = deg_y a` and `n = deg_y b`, the first `n` rows hold shifted
/// coefficients of `a` and the next `m` rows shifted coefficients of `b`,
/// highest power of `y` leftmost.
pub fn sylvester(a: &BiPoly, b: &BiPoly) -> PolyMatrix {
    let m = a.deg_y().unwrap_or(0);
    let n = b.deg_y().unwrap_or(0);
    let size = m + n;
    let mut s = PolyMatrix::zeros(size, size);
    for i in 0..n {
        for k in 0..=m {
            s[(i, i + k)] = a.ycoeff(m - k);
        }
    }
    for i in 0..m {
        for k in 0..=n {
            s[(n + i, i + k)] = b.ycoeff(n - k);
        }
    }
    s
}

pub fn block_diag<T: Ring>(blocks: &[Matrix<T>]) -> Matrix<T> {
    let rows = blocks.iter().map(Matrix::rows).sum();
    let cols = blocks.iter().map(Matrix::cols).sum();
    let mut out = Matrix::zeros(rows, cols);
    let (mut r0, mut c0) = (0, 0);
    for b in blocks {
        for i in 0..b.rows() {
            for j in 0..b.cols() {
                out[(r0 + i, c0 + j)] = b[(i, j)].clone();
            }
        }
        r0 += b.rows();
        c0 += b.cols();
    }
    out
}

/// Horizontal concatenation. Panics on mismatched row counts.
pub fn hstack<T: Ring>(blocks: &[Matrix<T>]) -> Matrix<T> {
    let rows = blocks.first().map_or(0, Matrix::rows);
    assert!(blocks.iter().all(|b| b.rows() == rows));
    let cols = blocks.iter().map(Matrix::cols).sum();
    let mut out = Matrix::zeros(rows, cols);
    let mut c0 = 0;
    for b in blocks {
        for i in 0..rows {
            for j in 0..b.cols() {
                out[(i, c0 + j)] = b[(i, j)].clone();
            }
        }
        c0 += b.cols();
    }
    out
}

/// Vertical concatenation. Panics on mismatched column counts.
pub fn vstack<T: Ring>(blocks: &[Matrix<T>]) -> Matrix<T> {
    let transposed: Vec<Matrix<T>> = blocks.iter().map(Matrix::transpose).collect();
    hstack(&transposed).transpose()
}

impl PolyMatrix {
    /// Matrix of multiplication by `p` from `Q(x)[y]_{<cols}` to
    /// `Q(x)[y]_{<rows}` in monomial bases.
    pub fn multiplication(p: &BiPoly, rows: usize, cols: usize) -> PolyMatrix {
        let mut m = PolyMatrix::zeros(rows, cols);
        for j in 0..cols {
            for (k, c) in p.ycoeffs().iter().enumerate() {
                if j + k < rows {
                    m[(j + k, j)] = c.clone();
                } else {
                    debug_assert!(c.is_zero(), "product leaves the target space");
                }
            }
        }
        m
    }

    pub fn constant(rows: usize, cols: usize, value: &Poly) -> PolyMatrix {
        let mut m = PolyMatrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = value.clone();
            }
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: i64) -> Poly {
        Poly::from(n)
    }

    #[test]
    fn kronecker_examples() {
        let i2 = PolyMatrix::identity(2);
        assert_eq!(kronecker(&i2, &i2), PolyMatrix::identity(4));
        let a = PolyMatrix::from_rows(vec![vec![Poly::x()]]);
        let b = PolyMatrix::from_rows(vec![vec![c(1), c(2)], vec![c(3), c(4)]]);
        assert_eq!(kronecker(&a, &b), b.scale(&Poly::x()));
        let swap = PolyMatrix::from_rows(vec![vec![c(0), c(1)], vec![c(1), c(0)]]);
        let k = kronecker(&swap, &i2);
        let expected = PolyMatrix::from_rows(vec![
            vec![c(0), c(0), c(1), c(0)],
            vec![c(0), c(0), c(0), c(1)],
            vec![c(1), c(0), c(0), c(0)],
            vec![c(0), c(1), c(0), c(0)],
        ]);
        assert_eq!(k, expected);
    }

    #[test]
    fn companion_examples() {
        let m = companion(&[RatFun::from_int(-1)], &RatFun::one()).unwrap();
        assert_eq!(m, RatMatrix::from_rows(vec![vec![RatFun::one()]]));
        let m = companion(&[RatFun::zero(), RatFun::from_int(-1)], &RatFun::one()).unwrap();
        assert_eq!(
            m,
            RatMatrix::from_rows(vec![
                vec![RatFun::zero(), RatFun::zero()],
                vec![RatFun::one(), RatFun::one()],
            ])
        );
        // x^2 D^2 - 2x D + 2
        let lead = RatFun::from_poly(Poly::from_ints(&[0, 0, 1]));
        let m = companion(
            &[RatFun::from_int(2), RatFun::from_poly(Poly::from_ints(&[0, -2]))],
            &lead,
        )
        .unwrap();
        assert_eq!(m[(0, 1)], RatFun::new(c(-2), Poly::from_ints(&[0, 0, 1])));
        assert_eq!(m[(1, 1)], RatFun::new(c(2), Poly::x()));
        assert_eq!(m[(1, 0)], RatFun::one());
        assert!(companion(&[RatFun::one()], &RatFun::zero()).is_err());
    }

    #[test]
    fn sylvester_row_convention() {
        let q = BiPoly::from_rows(&[&[0, 1], &[], &[1]]);
        let b = BiPoly::from_rows(&[&[], &[2]]);
        let s = sylvester(&q, &b);
        let expected = PolyMatrix::from_rows(vec![
            vec![c(1), c(0), Poly::x()],
            vec![c(2), c(0), c(0)],
            vec![c(0), c(2), c(0)],
        ]);
        assert_eq!(s, expected);
    }
}
