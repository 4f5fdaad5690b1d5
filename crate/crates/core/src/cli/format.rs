//! Canonical text form of operators: `sum_i p_i(x)*Dx^i`, descending in
//! the generator, each coefficient fully expanded.

use num_traits::{Signed, Zero};

use crate::arith::{Poly, RatFun};
use crate::ore::OrePoly;

fn generator_power(symbol: &str, j: usize) -> String {
    match j {
        0 => String::new(),
        1 => symbol.to_string(),
        _ => format!("{symbol}^{j}"),
    }
}

fn is_monomial(p: &Poly) -> bool {
    p.coeffs().iter().filter(|c| !c.is_zero()).count() == 1
}

/// A nonzero coefficient times `G^j`, rendered without its sign. Returns
/// `(negative, text)`.
fn term(c: &RatFun, symbol: &str, j: usize) -> (bool, String) {
    let g = generator_power(symbol, j);
    if !c.is_poly() {
        let text = if g.is_empty() {
            format!("{c}")
        } else {
            format!("({c})*{g}")
        };
        return (false, text);
    }
    let p = c.num();
    if j == 0 {
        let body = p.to_string();
        return match body.strip_prefix('-') {
            Some(rest) => (true, rest.to_string()),
            None => (false, body),
        };
    }
    let negative = p.lc().is_some_and(Signed::is_negative);
    let p = if negative { -p } else { p.clone() };
    let body = p.to_string();
    let text = if p.is_one() {
        g
    } else if is_monomial(&p) {
        format!("{body}*{g}")
    } else {
        format!("({body})*{g}")
    };
    (negative, text)
}

pub fn format_operator(l: &OrePoly) -> String {
    let symbol = l.generator().symbol();
    let mut out = String::new();
    for (j, c) in l.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let (negative, text) = term(c, symbol, j);
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        out.push_str(&text);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
