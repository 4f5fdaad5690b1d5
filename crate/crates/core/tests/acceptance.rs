//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any criterion fails.

use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use dfinite::arith::{BigRational, Poly, RatFun};
use dfinite::cli::random::{
    random_algebraic, random_hermite, random_operator, random_strictly_proper, random_vector, trial_rng,
};
use dfinite::instances::{
    bound_algebraic, bound_hermite, bound_lclm, bound_symprod, build_algebraic, build_hermite, build_lclm,
    build_symprod, lclm, resolvent, resolvent_empirical_curve, resolvent_generic_bound, symprod, telescoper,
    verify_certificate, verify_resolvent, verify_symprod, verify_telescoper, SERIES_PRECISION,
};
use dfinite::linalg::RatMatrix;
use dfinite::ore::{Generator, OrePoly};
use dfinite::pseudolin::{
    bound_realisation, krylov_matrix, solve_min_relation, trivial_realisation, verify_relation, PseudoLinearMap,
    Realisation,
};

const SEED: u64 = 20240917;

struct Verdict {
    ok: bool,
    detail: String,
    elapsed: Duration,
}

/// Realisation-bound checks collected from the instance runs.
#[derive(Default, Clone, Copy)]
struct RealisationTally {
    checked: usize,
    violations: usize,
}

impl RealisationTally {
    fn record(&mut self, l: &OrePoly, map: &PseudoLinearMap, real: &Realisation, a: &[Poly]) {
        if !map.t().is_strictly_proper() {
            return;
        }
        let eta = l.poly_coeffs().expect("polynomial operator");
        let rho = eta.len() - 1;
        let d_a = a.iter().filter_map(Poly::degree).max().unwrap_or(0);
        self.checked += 1;
        let bad = eta
            .iter()
            .enumerate()
            .any(|(i, e)| e.deg_i64() > bound_realisation(rho, d_a, real.delta_degree(), i));
        self.violations += usize::from(bad);
    }

    fn merge(&mut self, other: RealisationTally) {
        self.checked += other.checked;
        self.violations += other.violations;
    }
}

// ---------- independent helpers ----------

fn rp(rng: &mut impl Rng, deg: usize) -> Poly {
    Poly::from_ints(&(0..=deg).map(|_| rng.gen_range(-4..=4)).collect::<Vec<_>>())
}

fn nonzero_rp(rng: &mut impl Rng, deg: usize) -> Poly {
    loop {
        let p = rp(rng, deg);
        if !p.is_zero() {
            return p;
        }
    }
}

fn rf(rng: &mut impl Rng, deg: usize) -> RatFun {
    RatFun::new(rp(rng, deg), nonzero_rp(rng, deg))
}

/// Determinant by cofactor expansion along the first row.
fn cofactor_det(m: &[Vec<RatFun>]) -> RatFun {
    let n = m.len();
    if n == 0 {
        return RatFun::one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = RatFun::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
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

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

fn minor(m: &[Vec<RatFun>], rows: &[usize], cols: &[usize]) -> RatFun {
    let sub: Vec<Vec<RatFun>> = rows
        .iter()
        .map(|&i| cols.iter().map(|&j| m[i][j].clone()).collect())
        .collect();
    cofactor_det(&sub)
}

fn to_rows(m: &RatMatrix) -> Vec<Vec<RatFun>> {
    (0..m.rows()).map(|i| m.row(i).to_vec()).collect()
}

/// Monic lcm of the denominators of all minors of order at most `l`.
fn phi(m: &[Vec<RatFun>], l: usize) -> Poly {
    let (r, c) = (m.len(), m.first().map_or(0, Vec::len));
    let mut acc = Poly::one();
    for k in 1..=l.min(r).min(c) {
        for rows in subsets(r, k) {
            for cols in subsets(c, k) {
                acc = acc.lcm(minor(m, &rows, &cols).den());
            }
        }
    }
    acc
}

fn theta(t: &[Vec<RatFun>], v: &[RatFun]) -> Vec<RatFun> {
    (0..v.len())
        .map(|i| {
            let mut s = v[i].derivative();
            for (tij, vj) in t[i].iter().zip(v) {
                s = &s + &(tij * vj);
            }
            s
        })
        .collect()
}

/// Canonical primitive form of a rational vector: cleared, polynomial gcd
/// and rational content removed, last entry with positive leading term.
fn normalize(eta: &[RatFun]) -> Vec<Poly> {
    let den = eta.iter().fold(Poly::one(), |acc, e| acc.lcm(e.den()));
    let polys: Vec<Poly> = eta.iter().map(|e| e.num() * &den.exact_div(e.den())).collect();
    let g = polys.iter().fold(Poly::zero(), |acc, p| acc.gcd(p));
    let polys: Vec<Poly> = polys.iter().map(|p| p.exact_div(&g)).collect();
    let dl = polys.iter().fold(num_bigint::BigInt::from(1), |acc, p| {
        num_integer::Integer::lcm(&acc, &p.denominator_lcm())
    });
    let polys: Vec<Poly> = polys
        .iter()
        .map(|p| p.scale(&BigRational::from_integer(dl.clone())))
        .collect();
    let ng = polys.iter().fold(num_bigint::BigInt::from(0), |acc, p| {
        num_integer::Integer::gcd(&acc, &p.numerator_gcd())
    });
    let mut c = BigRational::from_integer(ng).recip();
    if polys
        .last()
        .and_then(Poly::lc)
        .is_some_and(|lc| *lc < BigRational::from_integer(0.into()))
    {
        c = -c;
    }
    polys.iter().map(|p| p.scale(&c)).collect()
}

/// Dense nullspace oracle: smallest `rho` whose `(rho + 1)`-column Krylov
/// matrix loses rank, found with cofactor minors, and the kernel vector by
/// signed maximal minors.
fn oracle(t: &[Vec<RatFun>], a: &[Poly]) -> (usize, Vec<Poly>) {
    let n = a.len();
    let mut cols: Vec<Vec<RatFun>> = vec![a.iter().cloned().map(RatFun::from_poly).collect()];
    for k in 2..=n + 1 {
        let next = theta(t, cols.last().unwrap());
        cols.push(next);
        let km: Vec<Vec<RatFun>> = (0..n).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect();
        let all_cols: Vec<usize> = (0..k).collect();
        let dependent = k > n || subsets(n, k).iter().all(|rows| minor(&km, rows, &all_cols).is_zero());
        if !dependent {
            continue;
        }
        let rho = k - 1;
        let first: Vec<usize> = (0..rho).collect();
        let rows = subsets(n, rho)
            .into_iter()
            .find(|rows| !minor(&km, rows, &first).is_zero())
            .expect("leading columns independent");
        let eta: Vec<RatFun> = (0..=rho)
            .map(|j| {
                let others: Vec<usize> = (0..=rho).filter(|&c| c != j).collect();
                let m = minor(&km, &rows, &others);
                if j % 2 == 0 {
                    m
                } else {
                    -m
                }
            })
            .collect();
        return (rho, normalize(&eta));
    }
    unreachable!("n + 1 vectors in dimension n are dependent")
}

fn op(rows: &[&[i64]]) -> OrePoly {
    OrePoly::from_int_rows(Generator::Dx, rows)
}

// ---------- criteria ----------

fn c1_exactness() -> Verdict {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 1);
    let mut failures = 0;
    let trials = 1000;
    for _ in 0..trials {
        let (p, q, r) = (rp(&mut rng, 5), rp(&mut rng, 4), nonzero_rp(&mut rng, 3));
        let (a, b, c) = (rf(&mut rng, 3), rf(&mut rng, 3), rf(&mut rng, 2));
        let mut ok = &(&p + &q) + &r == &p + &(&q + &r)
            && &p * &q == &q * &p
            && &p * &(&q + &r) == &(&p * &q) + &(&p * &r)
            && &(&a * &b) * &c == &a * &(&b * &c)
            && &a * &(&b + &c) == &(&a * &b) + &(&a * &c)
            && &(&a + &b) - &b == a;
        if !a.is_zero() {
            ok &= (&a * &a.recip()).is_one();
        }
        if !b.is_zero() {
            ok &= &(&a / &b) * &b == a;
        }
        let (quot, rem) = p.div_rem(&r);
        ok &= &(&quot * &r) + &rem == p && rem.degree() < r.degree();
        if !p.is_zero() && !q.is_zero() {
            let g = p.gcd(&q);
            ok &= g.divides(&p) && g.divides(&q);
            ok &= (&p * &r).gcd(&(&q * &r)) == (&g * &r).monic();
            ok &= &g * &p.lcm(&q) == (&p * &q).monic();
            let (g2, s, t) = p.gcdex(&q);
            ok &= g2 == g && &(&s * &p) + &(&t * &q) == g;
        }
        failures += usize::from(!ok);
    }
    let elapsed = start.elapsed();
    Verdict {
        ok: failures == 0 && elapsed < Duration::from_secs(10),
        detail: format!("{} / {trials} identity rounds held", trials - failures),
        elapsed,
    }
}

fn c2_solver_oracle() -> Verdict {
    let start = Instant::now();
    let mut mismatches = 0u64;
    let trials = 100;
    for t in 0..trials {
        let mut rng = trial_rng(SEED ^ 2, t);
        let n = rng.gen_range(1..=3usize);
        let tm: Vec<Vec<RatFun>> = (0..n)
            .map(|_| {
                (0..n)
                    .map(|_| {
                        if rng.gen_bool(0.2) {
                            RatFun::zero()
                        } else {
                            rf(&mut rng, 2)
                        }
                    })
                    .collect()
            })
            .collect();
        let a = random_vector(&mut rng, n, 2);
        let map = PseudoLinearMap::new(RatMatrix::from_rows(tm.clone())).unwrap();
        let rel = solve_min_relation(&map, &a).unwrap();
        let (rho, eta) = oracle(&tm, &a);
        let ok = rel.rho() == rho && rel.eta() == eta.as_slice() && verify_relation(&map, &a, &rel);
        mismatches += u64::from(!ok);
    }
    let elapsed = start.elapsed();
    Verdict {
        ok: mismatches == 0 && elapsed < Duration::from_secs(60),
        detail: format!(
            "{} / {trials} relations matched the cofactor oracle",
            trials - mismatches
        ),
        elapsed,
    }
}

fn c3_realisation_bound(instances: RealisationTally) -> Verdict {
    let start = Instant::now();
    let mut violations = 0u64;
    let trials = 100;
    for t in 0..trials {
        let mut rng = trial_rng(SEED ^ 3, t);
        let n = rng.gen_range(1..=3usize);
        let d = rng.gen_range(1..=6 / n);
        let mut den = rp(&mut rng, d - 1);
        den = &den + &Poly::monomial(BigRational::from_integer(1.into()), d);
        let tm: Vec<Vec<RatFun>> = (0..n)
            .map(|_| (0..n).map(|_| RatFun::new(rp(&mut rng, d - 1), den.clone())).collect())
            .collect();
        let map = PseudoLinearMap::new(RatMatrix::from_rows(tm)).unwrap();
        let real = trivial_realisation(&map);
        let a = random_vector(&mut rng, n, 2);
        let rel = solve_min_relation(&map, &a).unwrap();
        let d_a = a.iter().filter_map(Poly::degree).max().unwrap_or(0);
        let delta = real.delta_degree();
        assert!(delta <= 6);
        let bad = rel
            .degrees()
            .iter()
            .enumerate()
            .any(|(i, &e)| e > bound_realisation(rel.rho(), d_a, delta, i));
        violations += u64::from(bad);
    }
    Verdict {
        ok: violations == 0 && instances.violations == 0,
        detail: format!(
            "{violations} violations on {trials} trivial realisations, {} on {} instance realisations",
            instances.violations, instances.checked
        ),
        elapsed: start.elapsed(),
    }
}

fn c4_krylov() -> Verdict {
    let start = Instant::now();
    let mut violations = 0u64;
    let trials = 200;
    for t in 0..trials {
        let mut rng = trial_rng(SEED ^ 4, t);
        let n = rng.gen_range(1..=3usize);
        let delta = rng.gen_range(1..=4usize);
        let (map, real) = random_strictly_proper(&mut rng, n, delta).unwrap();
        let a = random_vector(&mut rng, n, 2);
        let s_r = rng.gen_range(0..=4usize);
        let s: Vec<usize> = (0..=s_r).collect();
        let k = to_rows(&krylov_matrix(&map, &a, &s).unwrap());
        let target = real.delta().pow(s_r as u32);
        let ok = (1..=n.min(s.len())).all(|l| phi(&k, l).divides(&target));
        violations += u64::from(!ok);
    }
    let elapsed = start.elapsed();
    Verdict {
        ok: violations == 0 && elapsed < Duration::from_secs(300),
        detail: format!(
            "{} / {trials} Krylov matrices with phi_l(K) | Delta^s_r",
            trials - violations
        ),
        elapsed,
    }
}

fn c5_hermite() -> (Verdict, RealisationTally) {
    let start = Instant::now();
    let mut tally = RealisationTally::default();
    let mut failures = Vec::new();
    let trials = 50u64;
    for t in 0..trials {
        let (dx, dy) = (1 + (t % 3) as usize, 1 + ((t / 3) % 3) as usize);
        let mut rng = trial_rng(SEED ^ 5, t);
        let (p, q) = random_hermite(&mut rng, dx, dy, true).unwrap();
        let inst = build_hermite(&p, &q).unwrap();
        let want_cert = dx + dy <= 4;
        let (l, cert) = telescoper(&inst, want_cert).unwrap();
        let r = l.order().unwrap();
        let deg = l.degree().unwrap();
        let mut ok = r <= dy && deg as i64 <= bound_hermite(r, dx, dy) && verify_telescoper(&inst, &l).unwrap();
        if let Some(h) = &cert {
            ok &= verify_certificate(&inst, &l, h);
        }
        if !ok {
            failures.push(format!("trial {t} (dx={dx}, dy={dy})"));
        }
        tally.record(&l, inst.map(), inst.realisation(), &inst.a());
    }
    let ratios: Vec<f64> = (1..=3)
        .map(|d| bound_hermite(d, d, d) as f64 / (d * d * d) as f64)
        .collect();
    let envelope = ratios.windows(2).all(|w| w[1] < w[0])
        && ratios
            .iter()
            .enumerate()
            .all(|(k, &x)| x > 2.0 && (x - 2.0) * ((k + 1) as f64) <= 1.0);
    let verdict = Verdict {
        ok: failures.is_empty() && envelope,
        detail: format!(
            "{} / {trials} telescopers within order and degree bounds with zero Hermite remainder; \
             bound/d^3 for d = 1..3: {:.3}, {:.3}, {:.3}{}",
            trials as usize - failures.len(),
            ratios[0],
            ratios[1],
            ratios[2],
            if failures.is_empty() {
                String::new()
            } else {
                format!("; failed: {}", failures.join(", "))
            }
        ),
        elapsed: start.elapsed(),
    };
    (verdict, tally)
}

fn c6_resolvent() -> (Verdict, RealisationTally) {
    let start = Instant::now();
    let mut tally = RealisationTally::default();
    let mut failures = 0;
    let mut curve = (0, 0);
    let trials = 30u64;
    for t in 0..trials {
        let (dx, dy) = (2 + (t % 2) as usize, 2 + ((t / 2) % 2) as usize);
        let mut rng = trial_rng(SEED ^ 6, t);
        let p = random_algebraic(&mut rng, dx, dy, true).unwrap();
        let inst = build_algebraic(&p).unwrap();
        let l = resolvent(&inst).unwrap();
        let r = l.order().unwrap();
        let deg = l.degree().unwrap() as i64;
        let mut ok = deg <= bound_algebraic(r, dx, dy) && verify_resolvent(&inst, &l);
        if dx == dy {
            ok &= deg <= resolvent_generic_bound(dx);
            curve.1 += 1;
            curve.0 += usize::from(deg <= resolvent_empirical_curve(dx));
        }
        failures += usize::from(!ok);
        let mut a = vec![Poly::zero(); dy];
        a[1] = Poly::one();
        tally.record(&l, inst.map(), inst.realisation(), &a);
    }
    let verdict = Verdict {
        ok: failures == 0,
        detail: format!(
            "{} / {trials} resolvents within the degree bounds; empirical curve d(2d^2-3d+3) held on {} / {} \
             square cases (recorded only)",
            trials as usize - failures,
            curve.0,
            curve.1
        ),
        elapsed: start.elapsed(),
    };
    (verdict, tally)
}

fn c7_lclm() -> (Verdict, RealisationTally) {
    let start = Instant::now();
    let mut tally = RealisationTally::default();
    let mut failures = 0;
    let trials = 50u64;
    for t in 0..trials {
        let mut rng = trial_rng(SEED ^ 7, t);
        let s = if t % 10 < 7 { 2 } else { 3 };
        let ops: Vec<OrePoly> = (0..s)
            .map(|_| {
                let r = rng.gen_range(1..=3usize);
                let d = rng.gen_range(1..=3usize);
                random_operator(&mut rng, r, d, true).unwrap()
            })
            .collect();
        let inst = build_lclm(&ops).unwrap();
        let l = lclm(&inst).unwrap();
        let orders = inst.orders();
        let d = inst.degrees().into_iter().max().unwrap();
        let r = l.order().unwrap();
        let divisible = ops.iter().all(|o| l.right_divide(o).unwrap().1.is_zero());
        let ok = divisible && r <= orders.iter().sum() && l.degree().unwrap() as i64 <= bound_lclm(r, &orders, d);
        failures += usize::from(!ok);
        tally.record(&l, inst.map(), inst.realisation(), inst.a());
    }
    let closed = |ops: &[OrePoly], want: &OrePoly| lclm(&build_lclm(ops).unwrap()).unwrap() == *want;
    let l = op(&[&[2], &[0, -2], &[0, 0, 1]]);
    let examples = closed(&[op(&[&[-1], &[0, 1]]), op(&[&[-2], &[0, 1]])], &l)
        && closed(&[op(&[&[-1], &[1]]), op(&[&[1], &[1]])], &op(&[&[-1], &[], &[1]]))
        && closed(&[l.clone(), l.clone()], &l.primitive());
    let verdict = Verdict {
        ok: failures == 0 && examples,
        detail: format!(
            "{} / {trials} LCLMs divisible by every factor within order and degree bounds; closed forms {}",
            trials as usize - failures,
            if examples { "match" } else { "DIFFER" }
        ),
        elapsed: start.elapsed(),
    };
    (verdict, tally)
}

fn c8_symprod() -> (Verdict, RealisationTally) {
    let start = Instant::now();
    let mut tally = RealisationTally::default();
    let mut failures = 0;
    let trials = 30u64;
    for t in 0..trials {
        let mut rng = trial_rng(SEED ^ 8, t);
        let ops: Vec<OrePoly> = (0..2)
            .map(|_| {
                let r = rng.gen_range(1..=2usize);
                let d = rng.gen_range(1..=2usize);
                random_operator(&mut rng, r, d, true).unwrap()
            })
            .collect();
        let inst = build_symprod(&ops).unwrap();
        let l = symprod(&inst).unwrap();
        let (o, d) = (inst.orders(), inst.degrees());
        let r = l.order().unwrap();
        let ok = verify_symprod(&inst, &l, SERIES_PRECISION, 3, SEED ^ t).unwrap()
            && l.degree().unwrap() as i64 <= bound_symprod(r, o[0], o[1], d[0], d[1]);
        failures += usize::from(!ok);
        tally.record(&l, inst.map(), inst.realisation(), inst.a());
    }
    let closed = |ops: &[OrePoly], want: &OrePoly| symprod(&build_symprod(ops).unwrap()).unwrap() == *want;
    let examples = closed(&[op(&[&[-1], &[0, 1]]), op(&[&[-2], &[0, 1]])], &op(&[&[-3], &[0, 1]]))
        && closed(&[op(&[&[-1], &[1]]), op(&[&[-1], &[1]])], &op(&[&[-2], &[1]]))
        && closed(
            &[op(&[&[-1], &[0, 1]]), op(&[&[2], &[0, -2], &[0, 0, 1]])],
            &op(&[&[6], &[0, -4], &[0, 0, 1]]),
        );
    let verdict = Verdict {
        ok: failures == 0 && examples,
        detail: format!(
            "{} / {trials} symmetric products pass the order-{SERIES_PRECISION} series check (3 draws) within the \
             degree bound; closed forms {}",
            trials as usize - failures,
            if examples { "match" } else { "DIFFER" }
        ),
        elapsed: start.elapsed(),
    };
    (verdict, tally)
}

fn random_square(rng: &mut impl Rng, n: usize) -> Vec<Vec<RatFun>> {
    let factors = [
        Poly::x(),
        Poly::from_ints(&[-1, 1]),
        Poly::from_ints(&[1, 1]),
        Poly::from_ints(&[2, 1]),
    ];
    (0..n)
        .map(|_| {
            (0..n)
                .map(|_| {
                    let den = factors
                        .iter()
                        .filter(|_| rng.gen_bool(0.3))
                        .fold(Poly::one(), |acc, f| &acc * f);
                    RatFun::new(rp(rng, 1), den)
                })
                .collect()
        })
        .collect()
}

fn c9_det_den() -> Verdict {
    let start = Instant::now();
    let mut violations = 0u64;
    let trials = 200;
    for t in 0..trials {
        let mut rng = trial_rng(SEED ^ 9, t);
        let n = rng.gen_range(1..=3usize);
        let r1 = random_square(&mut rng, n);
        let r2 = random_square(&mut rng, n);
        let m1 = RatMatrix::from_rows(r1.clone());
        let m2 = RatMatrix::from_rows(r2.clone());
        let sum = to_rows(&m1.add(&m2).unwrap());
        let prod = to_rows(&m1.mul(&m2).unwrap());
        let coprime = phi(&r1, 1).gcd(&phi(&r2, 1)).is_one();
        let mut ok = true;
        for l in 1..=n {
            let (p1, p2) = (phi(&r1, l), phi(&r2, l));
            ok &= p1.divides(&phi(&r1, l + 1)) && p1.divides(&phi(&r1, 1).pow(l as u32));
            let both = &p1 * &p2;
            let ps = phi(&sum, l);
            ok &= ps.divides(&both) && phi(&prod, l).divides(&both);
            if coprime {
                ok &= ps == both;
            }
        }
        let det = cofactor_det(&r1);
        if !det.is_zero() {
            let inv = to_rows(&m1.inverse().unwrap());
            let (alpha, beta) = (det.num().monic(), det.den().monic());
            ok &= &beta * &phi(&inv, n) == &alpha * &phi(&r1, n);
        }
        violations += u64::from(!ok);
    }
    // phi_l(T) | Delta on instance realisations
    let mut inst_checked = 0;
    let mut inst_bad = 0;
    let mut check = |map: &PseudoLinearMap, real: &Realisation| {
        let t = to_rows(map.t());
        inst_checked += 1;
        let ok = (1..=t.len().min(3)).all(|l| phi(&t, l).divides(real.delta()));
        inst_bad += usize::from(!ok);
    };
    for t in 0..4u64 {
        let mut rng = trial_rng(SEED ^ 90, t);
        let (p, q) = random_hermite(&mut rng, 1 + (t % 2) as usize, 2, t % 2 == 0).unwrap();
        let h = build_hermite(&p, &q).unwrap();
        check(h.map(), h.realisation());
        let a =
            build_algebraic(&random_algebraic(&mut rng, 1 + (t % 2) as usize, 2 + (t % 2) as usize, false).unwrap())
                .unwrap();
        check(a.map(), a.realisation());
        let ops: Vec<OrePoly> = (0..2)
            .map(|_| random_operator(&mut rng, 1 + (t % 2) as usize, 1, true).unwrap())
            .collect();
        let c = build_lclm(&ops).unwrap();
        check(c.map(), c.realisation());
        let c = build_symprod(&ops).unwrap();
        check(c.map(), c.realisation());
    }
    Verdict {
        ok: violations == 0 && inst_bad == 0,
        detail: format!(
            "{} / {trials} random matrix pairs satisfy chain, sum, product and inverse laws; \
             phi_l(T) | Delta on {} / {inst_checked} instance realisations",
            trials - violations,
            inst_checked - inst_bad
        ),
        elapsed: start.elapsed(),
    }
}

fn c10_cli() -> Verdict {
    let start = Instant::now();
    let manifest = Path::new(env!("CARGO_MANIFEST_DIR"));
    let tmp = Path::new(env!("CARGO_TARGET_TMPDIR"));
    let schema: Value =
        serde_json::from_str(&std::fs::read_to_string(manifest.join("schemas/report.schema.json")).unwrap()).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    let cases: [(&str, &[&str]); 3] = [
        ("telescoper.txt", &["telescoper", "--f", "1/(y^2+x)"]),
        ("lclm.txt", &["lclm", "--op", "x*Dx-1", "--op", "x*Dx-2"]),
        (
            "check_props_krylov.txt",
            &[
                "check-props",
                "--prop",
                "krylov-denominator",
                "--trials",
                "200",
                "--n",
                "2",
                "--delta",
                "3",
                "--seed",
                "7",
            ],
        ),
    ];
    let mut problems = Vec::new();
    for (golden, args) in cases {
        let mut reports = Vec::new();
        for run in 0..2 {
            let json = tmp.join(format!("acceptance-{golden}-{run}.json"));
            let out = Command::new(env!("CARGO_BIN_EXE_dfinite"))
                .args(args)
                .arg("--json")
                .arg(&json)
                .output()
                .unwrap();
            let want = std::fs::read_to_string(manifest.join("tests/golden").join(golden)).unwrap();
            if out.status.code() != Some(0) || String::from_utf8_lossy(&out.stdout) != want {
                problems.push(format!("{golden}: output differs from golden"));
            }
            let mut report: Value = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
            if !validator.is_valid(&report) {
                problems.push(format!("{golden}: report fails the schema"));
            }
            report.as_object_mut().unwrap().remove("wall_ms");
            reports.push(report);
        }
        if reports[0] != reports[1] {
            problems.push(format!("{golden}: reruns differ"));
        }
    }
    Verdict {
        ok: problems.is_empty(),
        detail: if problems.is_empty() {
            "3 / 3 golden outputs match, reports validate, reruns identical".into()
        } else {
            problems.join("; ")
        },
        elapsed: start.elapsed(),
    }
}

fn main() {
    let names = [
        "exactness core",
        "solver vs cofactor oracle",
        "realisation bound soundness",
        "Krylov denominators",
        "Hermite telescopers",
        "resolvents",
        "LCLM",
        "symmetric products",
        "determinantal denominators",
        "CLI",
    ];
    let mut verdicts: Vec<Option<Verdict>> = (0..10).map(|_| None).collect();
    // Criteria with a wall-clock budget run alone so timings are not
    // inflated by contention.
    verdicts[0] = Some(c1_exactness());
    verdicts[1] = Some(c2_solver_oracle());
    verdicts[3] = Some(c4_krylov());
    std::thread::scope(|s| {
        let h5 = s.spawn(c5_hermite);
        let h6 = s.spawn(c6_resolvent);
        let h7 = s.spawn(c7_lclm);
        let h8 = s.spawn(c8_symprod);
        let h9 = s.spawn(c9_det_den);
        let h10 = s.spawn(c10_cli);
        let mut tally = RealisationTally::default();
        for (k, h) in [(4, h5), (5, h6), (6, h7), (7, h8)] {
            let (v, t) = h.join().unwrap();
            tally.merge(t);
            verdicts[k] = Some(v);
        }
        verdicts[8] = Some(h9.join().unwrap());
        verdicts[9] = Some(h10.join().unwrap());
        verdicts[2] = Some(c3_realisation_bound(tally));
    });
    let mut all = true;
    for (k, v) in verdicts.into_iter().enumerate() {
        let v = v.expect("criterion ran");
        all &= v.ok;
        println!(
            "criterion {:>2} {:<28} {} ({:.1} s): {}",
            k + 1,
            names[k],
            if v.ok { "PASS" } else { "FAIL" },
            v.elapsed.as_secs_f64(),
            v.detail
        );
    }
    if !all {
        std::process::exit(1);
    }
}
