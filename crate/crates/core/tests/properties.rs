use proptest::collection::vec;
use proptest::prelude::*;

use dfinite::arith::{resultant_y, BiPoly, BigRational, Poly, RatFun, Var, YPoly};
use dfinite::cli::{format_operator, parse_operator};
use dfinite::linalg::{det_denominator, det_fraction_free, det_rational, rank, PolyMatrix, RatMatrix};
use dfinite::ore::{from_euler, series_solution, to_euler, to_euler_raw, Generator, OrePoly, TruncSeries};
use dfinite::pseudolin::{solve_min_relation, PseudoLinearMap};

fn rat(v: i64) -> BigRational {
    BigRational::from_integer(v.into())
}

fn poly(max_deg: usize) -> impl Strategy<Value = Poly> {
    vec(-5i64..=5, 0..=max_deg + 1).prop_map(|c| Poly::from_ints(&c))
}

fn nonzero_poly(max_deg: usize) -> impl Strategy<Value = Poly> {
    poly(max_deg).prop_filter("nonzero", |p| !p.is_zero())
}

fn ratfun(max_deg: usize) -> impl Strategy<Value = RatFun> {
    (poly(max_deg), nonzero_poly(max_deg)).prop_map(|(n, d)| RatFun::new(n, d))
}

fn bipoly() -> impl Strategy<Value = BiPoly> {
    vec(poly(2), 0..=3).prop_map(BiPoly::new)
}

/// `Dx` operator with polynomial coefficients, order `1..=r`.
fn operator(r: usize, d: usize) -> impl Strategy<Value = OrePoly> {
    (vec(poly(d), 1..=r), nonzero_poly(d)).prop_map(|(mut c, lead)| {
        c.push(lead);
        OrePoly::from_polys(Generator::Dx, &c)
    })
}

fn square(n: usize, deg: usize) -> impl Strategy<Value = Vec<Vec<RatFun>>> {
    vec(vec(ratfun(deg), n), n)
}

fn cofactor_det(m: &[Vec<RatFun>]) -> RatFun {
    if m.is_empty() {
        return RatFun::one();
    }
    let mut acc = RatFun::zero();
    for j in 0..m.len() {
        let minor: Vec<Vec<RatFun>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(k, _)| *k != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][j] * &cofactor_det(&minor);
        acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ratfun_cancellation(a in ratfun(3), b in ratfun(3)) {
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        if !b.is_zero() {
            prop_assert_eq!(&(&a * &b) / &b, a);
        }
    }

    #[test]
    fn gcd_scales_with_common_factor(a in nonzero_poly(4), b in nonzero_poly(4), g in nonzero_poly(3)) {
        let base = a.gcd(&b);
        prop_assume!(base.degree() == Some(0));
        prop_assert_eq!((&a * &g).gcd(&(&b * &g)), g.monic());
    }

    #[test]
    fn resultant_detects_common_factors(a in bipoly(), b in bipoly(), c in bipoly()) {
        prop_assume!(a.deg_y().is_some_and(|d| d >= 1) && b.deg_y().is_some_and(|d| d >= 1));
        let shares = |u: &BiPoly, v: &BiPoly| YPoly::from(u).gcd(&YPoly::from(v)).degree().is_some_and(|d| d > 0);
        let res = resultant_y(&a, &b).unwrap();
        prop_assert_eq!(res.is_zero(), shares(&a, &b));
        if c.deg_y().is_some_and(|d| d >= 1) {
            prop_assert!(resultant_y(&(&a * &c), &(&b * &c)).unwrap().is_zero());
        }
    }

    #[test]
    fn bipoly_derivative_rules(a in bipoly(), b in bipoly()) {
        for var in [Var::X, Var::Y] {
            prop_assert_eq!((&a + &b).derivative(var), &a.derivative(var) + &b.derivative(var));
            prop_assert_eq!(
                (&a * &b).derivative(var),
                &(&a.derivative(var) * &b) + &(&a * &b.derivative(var))
            );
        }
    }

    #[test]
    fn fraction_free_det_matches_cofactors(n in 1usize..=4, seed in vec(vec(-4i64..=4, 3), 16)) {
        let rows: Vec<Vec<Poly>> = (0..n).map(|i| (0..n).map(|j| Poly::from_ints(&seed[i * 4 + j])).collect()).collect();
        let rat_rows: Vec<Vec<RatFun>> = rows.iter().map(|r| r.iter().cloned().map(RatFun::from_poly).collect()).collect();
        let det = det_fraction_free(&PolyMatrix::from_rows(rows)).unwrap();
        prop_assert_eq!(RatFun::from_poly(det), cofactor_det(&rat_rows));
    }

    #[test]
    fn det_denominator_chain(m in (1usize..=3).prop_flat_map(|n| square(n, 1))) {
        let r = RatMatrix::from_rows(m);
        let n = r.rows();
        let phi: Vec<Poly> = (0..=n).map(|l| det_denominator(&r, l)).collect();
        let rk = rank(&r);
        for l in 0..n {
            prop_assert!(phi[l].divides(&phi[l + 1]));
        }
        for l in rk..=n {
            prop_assert_eq!(&phi[l], &phi[rk]);
        }
        for l in 1..=n {
            prop_assert!(phi[l].divides(&phi[1].pow(l as u32)));
        }
    }

    #[test]
    fn det_denominator_sum_and_product(
        (a, b) in (1usize..=3).prop_flat_map(|n| (square(n, 1), square(n, 1)))
    ) {
        let (r1, r2) = (RatMatrix::from_rows(a), RatMatrix::from_rows(b));
        let coprime = det_denominator(&r1, 1).gcd(&det_denominator(&r2, 1)).degree() == Some(0);
        let (sum, prod) = (r1.add(&r2).unwrap(), r1.mul(&r2).unwrap());
        for l in 1..=r1.rows() {
            let both = &det_denominator(&r1, l) * &det_denominator(&r2, l);
            prop_assert!(det_denominator(&sum, l).divides(&both));
            prop_assert!(det_denominator(&prod, l).divides(&both));
            if coprime {
                prop_assert_eq!(det_denominator(&sum, l), both);
            }
        }
    }

    #[test]
    fn det_denominator_inverse(m in (2usize..=3).prop_flat_map(|n| square(n, 1))) {
        let r = RatMatrix::from_rows(m);
        let det = det_rational(&r).unwrap();
        prop_assume!(!det.is_zero());
        let n = r.rows();
        let inv = r.inverse().unwrap();
        prop_assert_eq!(
            &det.den().monic() * &det_denominator(&inv, n),
            &det.num().monic() * &det_denominator(&r, n)
        );
    }

    #[test]
    fn ore_associative_and_distributive(a in operator(3, 3), b in operator(3, 3), c in operator(3, 3)) {
        let ab_c = a.mul(&b).unwrap().mul(&c).unwrap();
        let a_bc = a.mul(&b.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(ab_c, a_bc);
        let left = a.mul(&b.add(&c).unwrap()).unwrap();
        let right = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn right_division_reconstructs(a in operator(4, 3), b in operator(2, 2)) {
        let (q, r) = a.right_divide(&b).unwrap();
        prop_assert_eq!(q.mul(&b).unwrap().add(&r).unwrap(), a);
        prop_assert!(r.order().is_none_or(|o| o < b.order().unwrap()));
    }

    #[test]
    fn apply_is_a_ring_action(a in operator(2, 2), b in operator(2, 2), f in ratfun(2)) {
        prop_assert_eq!(a.mul(&b).unwrap().apply(&f), a.apply(&b.apply(&f)));
    }

    #[test]
    fn euler_round_trip(l in operator(3, 2), init in vec(-3i64..=3, 3)) {
        let back = from_euler(&to_euler(&l).unwrap()).unwrap();
        let (p, q) = (l.clear_denominators().poly_coeffs().unwrap(), back.poly_coeffs().unwrap());
        let r = l.order().unwrap();
        prop_assert_eq!(back.order(), Some(r));
        for j in 0..=r {
            prop_assert_eq!(&p[j] * &q[r], &q[j] * &p[r]);
        }
        prop_assume!(!p[r].coeff(0).eq(&rat(0)));
        let init: Vec<BigRational> = init[..r].iter().map(|&v| rat(v)).collect();
        let s: TruncSeries = series_solution(&l, &init, 30).unwrap();
        prop_assert!(s.apply(&l).unwrap().is_zero());
        prop_assert!(s.apply(&back).unwrap().is_zero());
    }

    #[test]
    fn euler_degree_bounds(l in operator(3, 3)) {
        let p = l.poly_coeffs().unwrap();
        let q = to_euler_raw(&l).unwrap().poly_coeffs().unwrap();
        let r = p.len() - 1;
        prop_assert_eq!(q[r].degree(), p[r].degree());
        for (j, qj) in q.iter().enumerate() {
            let cap = (j..=r)
                .filter(|&k| !p[k].is_zero())
                .map(|k| p[k].deg_i64() - k as i64)
                .max()
                .unwrap();
            prop_assert!(qj.deg_i64() <= r as i64 + cap);
        }
    }

    #[test]
    fn relation_is_minimal(
        (t, a) in (1usize..=3).prop_flat_map(|n| (square(n, 1), vec(nonzero_poly(2), n)))
    ) {
        let map = PseudoLinearMap::new(RatMatrix::from_rows(t)).unwrap();
        let rel = solve_min_relation(&map, &a).unwrap();
        let rho = rel.rho();
        let a_rat: Vec<RatFun> = a.iter().cloned().map(RatFun::from_poly).collect();
        let iters = map.iterates(&a_rat, rho).unwrap();
        prop_assert_eq!(rank(&RatMatrix::from_columns(&iters[..rho])), rho);
        prop_assert_eq!(rank(&RatMatrix::from_columns(&iters)), rho);
    }

    #[test]
    fn print_parse_round_trip(l in operator(3, 3)) {
        prop_assert_eq!(parse_operator(&format_operator(&l)).unwrap(), l);
    }
}
