//! Recursive-descent parser for polynomial text such as `3*x^2*y - (z+1)^2`.

use std::sync::Arc;

use super::poly::Poly;
use super::ring::PolyRing;
use crate::error::{Error, Result};

struct Parser<'a> {
    ring: &'a Arc<PolyRing>,
    src: &'a [u8],
    pos: usize,
}

pub(crate) fn parse_poly(ring: &Arc<PolyRing>, text: &str) -> Result<Poly> {
    let mut p = Parser {
        ring,
        src: text.as_bytes(),
        pos: 0,
    };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(out)
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse {
            line: 1,
            col: self.pos + 1,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                self.term()?.neg()
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?)?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = acc.mul(&self.factor()?)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.integer()?;
            let e = u32::try_from(e).map_err(|_| self.err("exponent too large"))?;
            if e > u16::MAX as u32 {
                return Err(Error::Overflow(format!("exponent {e} exceeds u16")));
            }
            return base.pow(e);
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<u64> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse::<u64>()
            .map_err(|_| Error::Overflow("integer literal too large".into()))
    }

    fn atom(&mut self) -> Result<Poly> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(b'-') => {
                self.pos += 1;
                Ok(self.factor()?.neg())
            }
            Some(c) if c.is_ascii_digit() => {
                let v = self.integer()?;
                let p = self.ring.field().characteristic() as u64;
                Ok(Poly::constant(self.ring, (v % p) as i64))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                match self.ring.var_index(name) {
                    Some(i) => Ok(Poly::var(self.ring, i)),
                    None => {
                        self.pos = start;
                        Err(Error::UndefinedName(name.to_string()))
                    }
                }
            }
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_spec_syntax() {
        let r = Arc::new(PolyRing::standard(&["x", "y", "z"]).unwrap());
        let p = parse_poly(&r, "3*x^2*y - z").unwrap();
        assert_eq!(p.to_string(), "3*x^2*y + 32002*z");
        assert_eq!(parse_poly(&r, "(x+y)^2 - x^2 - 2*x*y").unwrap().to_string(), "y^2");
        assert_eq!(parse_poly(&r, "0").unwrap().to_string(), "0");
        assert!(matches!(parse_poly(&r, "x + w"), Err(Error::UndefinedName(_))));
        assert!(matches!(parse_poly(&r, "x +"), Err(Error::Parse { .. })));
    }
}
