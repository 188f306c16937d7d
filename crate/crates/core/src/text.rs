//! Polynomial text: a small recursive-descent parser and the canonical
//! printer.
//!
//! Grammar: integer or rational (`3/4`) literals, declared variables,
//! `+ - * ^` and parentheses. `^` binds tightest and takes an integer
//! exponent (negative only on monomials). Juxtaposition is rejected.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::{grlex_cmp, BigRational, Error, ExponentVec, LaurentPoly, Result, Scalar, YPoly};

/// `x1, ..., xe, y`.
pub fn default_names(e: usize) -> Vec<String> {
    let mut v: Vec<String> = (1..=e).map(|i| format!("x{}", i)).collect();
    v.push("y".into());
    v
}

struct Parser<'a, C> {
    src: &'a str,
    pos: usize,
    names: &'a [String],
    _c: std::marker::PhantomData<C>,
}

impl<'a, C: Scalar> Parser<'a, C> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        let start = self.pos;
        while self.src[self.pos..].starts_with(|c: char| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| &self.src[start..self.pos])
    }

    fn nvars(&self) -> usize {
        self.names.len()
    }

    fn expr(&mut self) -> Result<LaurentPoly<C>> {
        let mut acc = if self.eat('-') {
            -&self.term()?
        } else {
            self.eat('+');
            self.term()?
        };
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<LaurentPoly<C>> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.unary()?;
            } else {
                match self.peek() {
                    Some(c) if c.is_alphanumeric() || c == '(' || c == '_' => {
                        return self.err("implicit multiplication; write `*`")
                    }
                    _ => return Ok(acc),
                }
            }
        }
    }

    fn unary(&mut self) -> Result<LaurentPoly<C>> {
        if self.eat('-') {
            return Ok(-&self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<LaurentPoly<C>> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        self.skip_ws();
        let neg = self.eat('-');
        self.skip_ws();
        let at = self.pos;
        let Some(d) = self.digits() else {
            return self.err("expected an integer exponent after `^`");
        };
        let k: u32 = d.parse().map_err(|_| Error::Parse {
            pos: at,
            msg: "exponent too large".into(),
        })?;
        if !neg {
            return Ok(base.pow(k));
        }
        match base.as_monomial() {
            Some((e, c)) if !c.is_zero() => {
                Ok(LaurentPoly::monomial(-e, C::one() / c.clone()).pow(k))
            }
            _ => Err(Error::Parse {
                pos: at,
                msg: "negative exponents are allowed only on monomials".into(),
            }),
        }
    }

    fn atom(&mut self) -> Result<LaurentPoly<C>> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected `)`");
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.digits().unwrap();
                let mut value = BigRational::from_integer(num.parse::<BigInt>().unwrap());
                if self.src[self.pos..].starts_with('/')
                    && self.src[self.pos + 1..].starts_with(|c: char| c.is_ascii_digit())
                {
                    self.pos += 1;
                    let at = self.pos;
                    let den: BigInt = self.digits().unwrap().parse().unwrap();
                    if den.is_zero() {
                        return Err(Error::Parse {
                            pos: at,
                            msg: "zero denominator".into(),
                        });
                    }
                    value /= BigRational::from_integer(den);
                }
                let c = C::from_rational(&value).ok_or_else(|| Error::Parse {
                    pos: self.pos,
                    msg: "literal not representable".into(),
                })?;
                Ok(LaurentPoly::constant(self.nvars(), c))
            }
            Some(c) if c.is_alphabetic() || c == '_' => {
                let start = self.pos;
                while self.src[self.pos..].starts_with(|c: char| c.is_alphanumeric() || c == '_') {
                    self.pos += self.src[self.pos..].chars().next().unwrap().len_utf8();
                }
                let name = &self.src[start..self.pos];
                let idx = self.names.iter().position(|n| n == name).or_else(|| {
                    // a lone coefficient variable may be written `x`
                    (name == "x" && self.names.len() == 2 && self.names[0] == "x1").then_some(0)
                });
                match idx {
                    Some(i) => Ok(LaurentPoly::var(self.nvars(), i)),
                    None => Err(Error::UndeclaredVariable(name.to_string())),
                }
            }
            Some(c) => self.err(format!("unexpected `{}`", c)),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses `text` over the variables `names` (in order).
pub fn parse_laurent<C: Scalar>(text: &str, names: &[String]) -> Result<LaurentPoly<C>> {
    let mut p = Parser {
        src: text,
        pos: 0,
        names,
        _c: std::marker::PhantomData,
    };
    if p.peek().is_none() {
        return p.err("empty input");
    }
    let out = p.expr()?;
    if let Some(c) = p.peek() {
        return p.err(format!("unexpected `{}`", c));
    }
    Ok(out)
}

/// Parses a polynomial in `x1, ..., xe, y`.
pub fn parse_poly<C: Scalar>(text: &str, e: usize) -> Result<YPoly<C>> {
    YPoly::from_laurent_with_y(&parse_laurent(text, &default_names(e))?)
}

/// Term order of the printer: last variable descending, then the diagonal
/// order descending on the full exponent.
fn print_cmp(a: &ExponentVec, b: &ExponentVec) -> Ordering {
    let last = |v: &ExponentVec| v.0.last().copied().unwrap_or(0);
    last(b).cmp(&last(a)).then_with(|| grlex_cmp(b, a))
}

fn monomial_text(e: &ExponentVec, names: &[String]) -> String {
    let mut parts = Vec::new();
    for (i, &k) in e.0.iter().enumerate() {
        match k {
            0 => {}
            1 => parts.push(names[i].clone()),
            _ => parts.push(format!("{}^{}", names[i], k)),
        }
    }
    parts.join("*")
}

/// Canonical text of a Laurent polynomial over `names`.
pub fn format_laurent<C: Scalar>(p: &LaurentPoly<C>, names: &[String]) -> String {
    format_sorted(p, names, print_cmp)
}

/// Terms in descending diagonal order only; used when no variable is
/// distinguished, as for polynomials in `X, Y`.
pub fn format_plain<C: Scalar>(p: &LaurentPoly<C>, names: &[String]) -> String {
    format_sorted(p, names, |a, b| grlex_cmp(b, a))
}

fn format_sorted<C: Scalar>(
    p: &LaurentPoly<C>,
    names: &[String],
    cmp: impl Fn(&ExponentVec, &ExponentVec) -> Ordering,
) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut terms: Vec<(&ExponentVec, &C)> = p.iter().collect();
    terms.sort_by(|a, b| cmp(a.0, b.0));
    let mut out = String::new();
    for (i, (e, c)) in terms.into_iter().enumerate() {
        let neg = *c < C::zero();
        let mag = if neg { -c.clone() } else { c.clone() };
        let mono = monomial_text(e, names);
        let body = if mono.is_empty() {
            format!("{}", mag)
        } else if mag.is_one() {
            mono
        } else {
            format!("{}*{}", mag, mono)
        };
        match (i, neg) {
            (0, true) => {
                out.push('-');
                out.push_str(&body);
            }
            (0, false) => out.push_str(&body),
            (_, true) => {
                out.push_str(" - ");
                out.push_str(&body);
            }
            (_, false) => {
                out.push_str(" + ");
                out.push_str(&body);
            }
        }
    }
    out
}

pub fn format_poly<C: Scalar>(f: &YPoly<C>) -> String {
    format_laurent(&f.to_laurent(), &default_names(f.nvars()))
}

/// Integer formatting helper for reports: exact decimal text.
pub fn bigint_text(v: &BigInt) -> String {
    if v.is_negative() {
        format!("-{}", v.abs())
    } else {
        v.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ypoly::ymono;
    use crate::{ev, q, Q};

    #[test]
    fn parse_examples() {
        let f: YPoly<Q> = parse_poly("y^2 - x1^3*x2", 2).unwrap();
        assert_eq!(f, &YPoly::y_pow(2, 2) - &ymono(ev![3, 1], 0, q(1, 1)));
        let f4: YPoly<Q> =
            parse_poly("y^4 - 2*x1*y^2 - 4*x1^2*x2*y + x1^2 - x1^3*x2^2", 2).unwrap();
        assert_eq!(f4.coeff(1), LaurentPoly::monomial(ev![2, 1], q(-4, 1)));
        assert_eq!(
            parse_poly::<Q>("y + z", 1),
            Err(Error::UndeclaredVariable("z".into()))
        );
        let g: YPoly<Q> = parse_poly("(y - x)^2 + 3/4*x^-1", 1).unwrap();
        assert_eq!(
            g.coeff(0),
            &LaurentPoly::monomial(ev![2], q(1, 1)) + &LaurentPoly::monomial(ev![-1], q(3, 4))
        );
        assert_eq!(
            parse_poly::<Q>("-x1^2", 1).unwrap().coeff(0),
            LaurentPoly::monomial(ev![2], q(-1, 1))
        );
    }

    #[test]
    fn parse_errors_carry_positions() {
        assert!(matches!(
            parse_poly::<Q>("2 y", 1),
            Err(Error::Parse { pos: 2, .. })
        ));
        assert!(matches!(
            parse_poly::<Q>("y^", 1),
            Err(Error::Parse { pos: 2, .. })
        ));
        assert!(matches!(
            parse_poly::<Q>("(y + 1", 1),
            Err(Error::Parse { pos: 6, .. })
        ));
        assert!(matches!(
            parse_poly::<Q>("(y + 1)^-1", 1),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_poly::<Q>("", 1),
            Err(Error::Parse { pos: 0, .. })
        ));
        assert!(matches!(
            parse_poly::<Q>("1/0", 1),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn printer() {
        let f4: YPoly<Q> =
            parse_poly("x1^2 - x1^3*x2^2 + y^4 - 2*x1*y^2 - 4*x1^2*x2*y", 2).unwrap();
        assert_eq!(
            format_poly(&f4),
            "y^4 - 2*x1*y^2 - 4*x1^2*x2*y - x1^3*x2^2 + x1^2"
        );
        let g: YPoly<Q> = parse_poly("-1/2 + y*x1^-3", 1).unwrap();
        assert_eq!(format_poly(&g), "x1^-3*y - 1/2");
        assert_eq!(format_poly(&YPoly::<Q>::zero(2)), "0");
        let xy = ["X".to_string(), "Y".to_string()];
        let d: LaurentPoly<Q> = parse_laurent("-Y + X^2 + X", &xy).unwrap();
        assert_eq!(format_plain(&d, &xy), "X^2 + X - Y");
        for text in [
            "y^4 - 2*x1*y^2 - 4*x1^2*x2*y - x1^3*x2^2 + x1^2",
            "x1^-3*y - 1/2",
        ] {
            let e = if text.contains("x2") { 2 } else { 1 };
            assert_eq!(format_poly(&parse_poly::<Q>(text, e).unwrap()), text);
        }
    }
}
