//! Expressions in `x`, `y` and `Dx`.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := ('+' | '-')? base ('^' nat)?
//! base   := nat | 'x' | 'y' | 'Dx' | '(' expr ')'
//! ```
//!
//! Operators are evaluated in the Ore ring, so `Dx*x` is `x*Dx + 1`.
//! Rational literals are written as quotients of naturals.

use num_bigint::BigInt;

use crate::arith::{BiPoly, BigRational, Poly, RatFun};
use crate::error::{Error, Result};
use crate::ore::{Generator, OrePoly};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Nat(BigInt),
    X,
    Y,
    Dx,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn err(pos: usize, msg: impl std::fmt::Display) -> Error {
    Error::Parse(format!("column {}: {msg}", pos + 1))
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let tok = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                out.push((Tok::Nat(digits.parse().expect("digits")), start));
                continue;
            }
            'D' if chars.get(i + 1) == Some(&'x') => {
                out.push((Tok::Dx, i));
                i += 2;
                continue;
            }
            'x' => Tok::X,
            'y' => Tok::Y,
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            other => return Err(err(i, format!("unexpected character '{other}'"))),
        };
        out.push((tok, i));
        i += 1;
    }
    Ok(out)
}

#[derive(Clone, Debug)]
enum Expr {
    Num(BigInt),
    X,
    Y(usize),
    Dx(usize),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>, usize),
    Pow(Box<Expr>, u32),
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(_, p)| *p)
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let at = self.here();
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.factor()?), at);
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn factor(&mut self) -> Result<Expr> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                return Ok(Expr::Neg(Box::new(self.factor()?)));
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                return self.factor();
            }
            _ => {}
        }
        let base = self.base()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            let at = self.here();
            match self.toks.get(self.pos) {
                Some((Tok::Nat(n), _)) => {
                    let e = u32::try_from(n).map_err(|_| err(at, "exponent too large"))?;
                    self.pos += 1;
                    return Ok(Expr::Pow(Box::new(base), e));
                }
                _ => return Err(err(at, "expected a natural exponent after '^'")),
            }
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<Expr> {
        let at = self.here();
        let Some((tok, _)) = self.toks.get(self.pos).cloned() else {
            return Err(err(at, "unexpected end of input"));
        };
        self.pos += 1;
        match tok {
            Tok::Nat(n) => Ok(Expr::Num(n)),
            Tok::X => Ok(Expr::X),
            Tok::Y => Ok(Expr::Y(at)),
            Tok::Dx => Ok(Expr::Dx(at)),
            Tok::LParen => {
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(err(self.here(), "expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            other => Err(err(at, format!("unexpected {}", describe(&other)))),
        }
    }
}

fn describe(t: &Tok) -> &'static str {
    match t {
        Tok::Plus => "'+'",
        Tok::Minus => "'-'",
        Tok::Star => "'*'",
        Tok::Slash => "'/'",
        Tok::Caret => "'^'",
        Tok::RParen => "')'",
        _ => "token",
    }
}

fn parse_expr(text: &str) -> Result<Expr> {
    let toks = tokenize(text)?;
    let end = text.chars().count();
    let mut p = Parser { toks, pos: 0, end };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(err(p.here(), "unexpected trailing input"));
    }
    Ok(e)
}

fn constant(n: &BigInt) -> BigRational {
    BigRational::from_integer(n.clone())
}

fn eval_operator(e: &Expr) -> Result<OrePoly> {
    let g = Generator::Dx;
    Ok(match e {
        Expr::Num(n) => OrePoly::scalar(g, RatFun::constant(constant(n))),
        Expr::X => OrePoly::scalar(g, RatFun::x()),
        Expr::Y(at) => return Err(err(*at, "'y' cannot appear in an operator")),
        Expr::Dx(_) => OrePoly::monomial(g, RatFun::one(), 1),
        Expr::Neg(a) => eval_operator(a)?.neg(),
        Expr::Add(a, b) => eval_operator(a)?.add(&eval_operator(b)?)?,
        Expr::Sub(a, b) => eval_operator(a)?.sub(&eval_operator(b)?)?,
        Expr::Mul(a, b) => eval_operator(a)?.mul(&eval_operator(b)?)?,
        Expr::Div(a, b, at) => {
            let d = eval_operator(b)?;
            match d.order() {
                None => return Err(err(*at, "division by zero")),
                Some(0) => {}
                Some(_) => return Err(err(*at, "'Dx' cannot appear in a divisor")),
            }
            let inv = OrePoly::scalar(g, d.coeff(0).recip());
            eval_operator(a)?.mul(&inv)?
        }
        Expr::Pow(a, k) => {
            let base = eval_operator(a)?;
            let mut acc = OrePoly::one(g);
            for _ in 0..*k {
                acc = acc.mul(&base)?;
            }
            acc
        }
    })
}

/// A fraction of bivariate polynomials, kept unreduced during evaluation.
#[derive(Clone)]
struct Frac {
    num: BiPoly,
    den: BiPoly,
}

impl Frac {
    fn poly(p: BiPoly) -> Self {
        Frac {
            num: p,
            den: BiPoly::from_poly(Poly::one()),
        }
    }
}

fn eval_frac(e: &Expr) -> Result<Frac> {
    Ok(match e {
        Expr::Num(n) => Frac::poly(BiPoly::from_poly(Poly::constant(constant(n)))),
        Expr::X => Frac::poly(BiPoly::x()),
        Expr::Y(_) => Frac::poly(BiPoly::y()),
        Expr::Dx(at) => return Err(err(*at, "'Dx' cannot appear in a rational function")),
        Expr::Neg(a) => {
            let f = eval_frac(a)?;
            Frac {
                num: -&f.num,
                den: f.den,
            }
        }
        Expr::Add(a, b) | Expr::Sub(a, b) => {
            let (f, h) = (eval_frac(a)?, eval_frac(b)?);
            let right = &h.num * &f.den;
            let left = &f.num * &h.den;
            Frac {
                num: if matches!(e, Expr::Add(..)) {
                    &left + &right
                } else {
                    &left - &right
                },
                den: &f.den * &h.den,
            }
        }
        Expr::Mul(a, b) => {
            let (f, h) = (eval_frac(a)?, eval_frac(b)?);
            Frac {
                num: &f.num * &h.num,
                den: &f.den * &h.den,
            }
        }
        Expr::Div(a, b, at) => {
            let (f, h) = (eval_frac(a)?, eval_frac(b)?);
            if h.num.is_zero() {
                return Err(err(*at, "division by zero"));
            }
            Frac {
                num: &f.num * &h.den,
                den: &f.den * &h.num,
            }
        }
        Expr::Pow(a, k) => {
            let f = eval_frac(a)?;
            let mut acc = Frac::poly(BiPoly::from_poly(Poly::one()));
            for _ in 0..*k {
                acc = Frac {
                    num: &acc.num * &f.num,
                    den: &acc.den * &f.den,
                };
            }
            acc
        }
    })
}

/// Parses `sum p_i(x) Dx^i` with polynomial `p_i`.
pub fn parse_operator(text: &str) -> Result<OrePoly> {
    let op = eval_operator(&parse_expr(text)?)?;
    if op.poly_coeffs().is_none() {
        return Err(Error::Parse(format!(
            "operator {op} does not have polynomial coefficients"
        )));
    }
    Ok(op)
}

/// Parses a rational function of `x` and `y` into `(p, q)` in lowest
/// terms, with `q` having a positive leading coefficient.
pub fn parse_ratfun2(text: &str) -> Result<(BiPoly, BiPoly)> {
    let f = eval_frac(&parse_expr(text)?)?;
    if f.den.is_zero() {
        return Err(Error::Parse("zero denominator".into()));
    }
    let g = f.num.gcd(&f.den);
    let (mut p, mut q) = if g.is_zero() {
        (f.num, f.den)
    } else {
        (
            f.num.checked_div(&g).expect("gcd divides"),
            f.den.checked_div(&g).expect("gcd divides"),
        )
    };
    // normalise q: integer coefficients, positive leading term
    let lead = q.lc_y();
    let c = lead.lc().cloned().expect("nonzero");
    let qs = q.ycoeffs().to_vec();
    let mut num_gcd = BigInt::from(0);
    let mut den_lcm = BigInt::from(1);
    for poly in &qs {
        num_gcd = num_integer::Integer::gcd(&num_gcd, &poly.numerator_gcd());
        den_lcm = num_integer::Integer::lcm(&den_lcm, &poly.denominator_lcm());
    }
    let mut factor = BigRational::new(den_lcm, num_gcd);
    if c < BigRational::from_integer(0.into()) {
        factor = -factor;
    }
    let scale = Poly::constant(factor);
    q = q.scale_poly(&scale);
    p = p.scale_poly(&scale);
    Ok((p, q))
}

/// Parses a polynomial in `x` and `y`.
pub fn parse_bipoly(text: &str) -> Result<BiPoly> {
    let (p, q) = parse_ratfun2(text)?;
    if q.deg_y() != Some(0) || q.deg_x() != Some(0) {
        return Err(Error::Parse(format!("{text} is not a polynomial")));
    }
    let inv = Poly::constant(q.ycoeff(0).coeff(0).recip());
    Ok(p.scale_poly(&inv))
}
