//! Integer-coefficient kernels behind the rational `Poly` gcd and exact
//! division. Working on primitive integer vectors avoids the rational
//! normalisation that dominates Euclid over `Q`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Word-size primes for the coprimality test.
const PRIMES: [u64; 4] = [2305843009213693951, 2147483647, 1000000007, 998244353];

fn trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

pub(crate) fn content(v: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in v {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Divides out the content and makes the leading coefficient positive.
pub(crate) fn primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    trim(&mut v);
    let Some(lc) = v.last() else {
        return v;
    };
    let mut g = content(&v);
    if lc.is_negative() {
        g = -g;
    }
    if !g.is_one() {
        for c in &mut v {
            *c /= &g;
        }
    }
    v
}

fn reduce(v: &[BigInt], p: u64) -> Vec<u64> {
    let pb = BigInt::from(p);
    let mut out: Vec<u64> = v
        .iter()
        .map(|c| c.mod_floor(&pb).to_u64().expect("reduced below p"))
        .collect();
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut base, mut e, mut acc) = (a, p - 2, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    acc
}

/// Remainder of `a` by `b` modulo `p`, `b` nonzero.
fn rem_mod(mut a: Vec<u64>, b: &[u64], p: u64) -> Vec<u64> {
    let db = b.len() - 1;
    let inv = inv_mod(b[db], p);
    while a.len() > db {
        let k = a.len() - 1 - db;
        let c = mul_mod(*a.last().expect("nonempty"), inv, p);
        for (j, bj) in b.iter().enumerate() {
            let t = mul_mod(c, *bj, p);
            a[k + j] = (a[k + j] + p - t) % p;
        }
        while a.last() == Some(&0) {
            a.pop();
        }
    }
    a
}

/// Degree of `gcd(a, b) mod p` for a prime not dividing either leading
/// coefficient. It is never below the degree of the gcd over `Q`.
fn gcd_degree_mod(a: &[BigInt], b: &[BigInt]) -> Option<usize> {
    for &p in &PRIMES {
        let (mut x, mut y) = (reduce(a, p), reduce(b, p));
        if x.len() != a.len() || y.len() != b.len() {
            continue;
        }
        while !y.is_empty() {
            let r = rem_mod(x, &y, p);
            x = y;
            y = r;
        }
        return Some(x.len() - 1);
    }
    None
}

fn pow_mod(mut base: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for 64-bit integers.
fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for b in BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let (mut d, mut s) = (n - 1, 0);
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for b in BASES {
        let mut x = pow_mod(b, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primes just below `2^62`, in decreasing order.
fn primes() -> impl Iterator<Item = u64> {
    ((1u64 << 61)..(1u64 << 62)).rev().step_by(2).filter(|&n| is_prime(n))
}

/// Monic gcd modulo `p`.
fn gcd_mod(a: &[BigInt], b: &[BigInt], p: u64) -> Vec<u64> {
    let (mut x, mut y) = (reduce(a, p), reduce(b, p));
    while !y.is_empty() {
        let r = rem_mod(x, &y, p);
        x = y;
        y = r;
    }
    let inv = inv_mod(*x.last().expect("nonzero gcd"), p);
    x.iter().map(|&c| mul_mod(c, inv, p)).collect()
}

/// Maps values in `(-m/2, 3m/2)` to their representatives in
/// `(-m/2, m/2]`.
fn symmetric(v: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let half: BigInt = m >> 1;
    v.iter().map(|c| if *c > half { c - m } else { c.clone() }).collect()
}

/// Brown's modular gcd: images modulo word-size primes scaled by
/// `gcd(lc a, lc b)`, combined by CRT in symmetric representation until
/// the lift stops changing and its primitive part divides both inputs.
fn modular_gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let gamma = a.last().expect("nonzero").gcd(b.last().expect("nonzero"));
    let mut lift: Vec<BigInt> = Vec::new();
    let mut modulus = BigInt::one();
    let mut degree = usize::MAX;
    for p in primes() {
        let gp = gamma.mod_floor(&BigInt::from(p)).to_u64().expect("reduced");
        if gp == 0 || reduce(a, p).len() != a.len() || reduce(b, p).len() != b.len() {
            continue;
        }
        let image: Vec<u64> = gcd_mod(a, b, p).iter().map(|&c| mul_mod(c, gp, p)).collect();
        let d = image.len() - 1;
        if d == 0 {
            return vec![BigInt::one()];
        }
        if d > degree {
            continue;
        }
        if d < degree {
            degree = d;
            modulus = BigInt::from(p);
            lift = symmetric(&image.iter().map(|&c| BigInt::from(c)).collect::<Vec<_>>(), &modulus);
        } else {
            let pb = BigInt::from(p);
            let m_inv = BigInt::from(inv_mod(modulus.mod_floor(&pb).to_u64().expect("reduced"), p));
            let mut changed = false;
            for (h, &c) in lift.iter_mut().zip(&image) {
                let t = ((BigInt::from(c) - &*h) * &m_inv).mod_floor(&pb);
                if !t.is_zero() {
                    *h += &modulus * t;
                    changed = true;
                }
            }
            modulus *= pb;
            lift = symmetric(&lift, &modulus);
            if changed {
                continue;
            }
        }
        let candidate = primitive(lift.clone());
        if exact_div(a, &candidate).is_some() && exact_div(b, &candidate).is_some() {
            return candidate;
        }
    }
    unreachable!("infinitely many primes")
}

/// Primitive gcd of two nonzero primitive integer polynomials, with
/// positive leading coefficient.
pub(crate) fn gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.len() == 1 || b.len() == 1 {
        return vec![BigInt::one()];
    }
    if gcd_degree_mod(a, b) == Some(0) {
        return vec![BigInt::one()];
    }
    modular_gcd(a, b)
}

/// `a / b` over `Z` when `b` is primitive and divides `a` over `Q`, which
/// by Gauss' lemma makes the quotient integral.
pub(crate) fn exact_div(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    if a.len() < b.len() {
        return a.iter().all(Zero::is_zero).then(Vec::new);
    }
    let db = b.len() - 1;
    let lc = &b[db];
    let mut r = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len() - db];
    for k in (0..q.len()).rev() {
        let (c, rest) = r[k + db].div_rem(lc);
        if !rest.is_zero() {
            return None;
        }
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            r[k + j] -= &c * bj;
        }
        q[k] = c;
    }
    r.iter().all(Zero::is_zero).then_some(q)
}
