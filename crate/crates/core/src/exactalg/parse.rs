//! Reader for the textual forms produced by [`RatFunc::render`] and
//! [`RatFunc::render_compact`].

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::poly::Poly;
use super::ratfunc::{RatFunc, Var};
use crate::error::{Error, Result};

struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
    var: Option<Var>,
}

impl<'a> Cursor<'a> {
    fn peek(&mut self) -> Option<u8> {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err(&self, what: &str) -> Error {
        Error::Parse(format!(
            "{what} at byte {} of {:?}",
            self.pos,
            String::from_utf8_lossy(self.s)
        ))
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.peek();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        let text = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
        Ok(text.parse().unwrap())
    }

    fn var_power(&mut self) -> Result<usize> {
        let v = match self.peek() {
            Some(b't') => Var::T,
            Some(b'q') => Var::Q,
            _ => return Err(self.err("expected variable")),
        };
        self.pos += 1;
        match self.var {
            Some(existing) if existing != v => {
                return Err(Error::VariableMismatch(existing.symbol(), v.symbol()))
            }
            _ => self.var = Some(v),
        }
        if self.eat(b'^') {
            let e = self.integer()?;
            usize::try_from(e).map_err(|_| self.err("exponent too large"))
        } else {
            Ok(1)
        }
    }

    fn term(&mut self) -> Result<Poly> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                let d = if self.eat(b'/') { self.integer()? } else { BigInt::one() };
                if d == BigInt::from(0) {
                    return Err(self.err("zero denominator"));
                }
                let c = BigRational::new(n, d);
                if self.eat(b'*') {
                    let e = self.var_power()?;
                    Ok(Poly::monomial(c, e))
                } else {
                    Ok(Poly::constant(c))
                }
            }
            _ => {
                let e = self.var_power()?;
                Ok(Poly::monomial(BigRational::one(), e))
            }
        }
    }

    fn poly(&mut self) -> Result<Poly> {
        let mut neg = self.eat(b'-');
        let mut acc = Poly::zero();
        loop {
            let t = self.term()?;
            acc = if neg { &acc - &t } else { &acc + &t };
            if self.eat(b'+') {
                neg = false;
            } else if self.eat(b'-') {
                neg = true;
            } else {
                return Ok(acc);
            }
        }
    }
}

/// Parse a rational function; `default_var` is used when the text is a
/// constant and names no variable.
pub fn parse_ratfunc(text: &str, default_var: Var) -> Result<RatFunc> {
    let mut c = Cursor {
        s: text.as_bytes(),
        pos: 0,
        var: None,
    };
    let (num, den) = if c.peek() == Some(b'(') {
        c.pos += 1;
        let num = c.poly()?;
        if !c.eat(b')') {
            return Err(c.err("expected ')'"));
        }
        if c.eat(b'/') {
            if !c.eat(b'(') {
                return Err(c.err("expected '('"));
            }
            let den = c.poly()?;
            if !c.eat(b')') {
                return Err(c.err("expected ')'"));
            }
            (num, den)
        } else {
            (num, Poly::one())
        }
    } else {
        (c.poly()?, Poly::one())
    };
    if c.peek().is_some() {
        return Err(c.err("trailing input"));
    }
    RatFunc::new(num, den, c.var.unwrap_or(default_var))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_both_renderings() {
        let f = parse_ratfunc("(q^2 - 1)/(q)", Var::T).unwrap();
        assert_eq!(f.var(), Var::Q);
        assert_eq!(parse_ratfunc(&f.render(), Var::Q).unwrap(), f);
        assert_eq!(parse_ratfunc(&f.render_compact(), Var::Q).unwrap(), f);
        let g = parse_ratfunc("-3/2*t^3 + t - 7", Var::Q).unwrap();
        assert_eq!(g.render(), "-3/2*t^3 + t - 7");
        assert_eq!(parse_ratfunc("5", Var::T).unwrap(), RatFunc::from_int(5, Var::T));
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_ratfunc("q + t", Var::Q).is_err());
        assert!(parse_ratfunc("(q", Var::Q).is_err());
        assert!(parse_ratfunc("1/0", Var::Q).is_err());
        assert!(parse_ratfunc("(1)/(0)", Var::Q).is_err());
        assert!(parse_ratfunc("x", Var::Q).is_err());
    }
}
