//! Reader for plain-text polynomials such as `4294967296 (z3 - z4)^2 (z1^2 + 1/2 z2)`.
//!
//! Grammar: sums of products of factors, where a factor is a rational or
//! decimal number, a variable `z<k>` (`z` alone means `z1`), or a
//! parenthesized expression, optionally raised to a nonnegative integer power.
//! Juxtaposition and `*` both denote multiplication.

use super::MPoly;
use crate::error::{Error, Result};
use crate::exactnum::{parse_rational, Rational};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

pub(super) fn parse_mpoly(s: &str) -> Result<MPoly> {
    let mut p = Parser { src: s.as_bytes(), pos: 0 };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("trailing input"));
    }
    Ok(out)
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at byte {} of {:?}", self.pos, String::from_utf8_lossy(self.src)))
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

    fn expr(&mut self) -> Result<MPoly> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -self.term()?
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
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MPoly> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = &acc * &self.factor()?;
                }
                Some(c) if c == b'(' || c == b'z' || c == b'.' || c.is_ascii_digit() => {
                    acc = &acc * &self.factor()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<MPoly> {
        let base = match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                e
            }
            Some(b'z') => {
                self.pos += 1;
                if self.src.get(self.pos) == Some(&b'_') {
                    self.pos += 1;
                }
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let idx: usize = if start == self.pos {
                    1
                } else {
                    std::str::from_utf8(&self.src[start..self.pos])
                        .unwrap()
                        .parse()
                        .map_err(|_| self.err("bad index"))?
                };
                if idx == 0 {
                    return Err(self.err("variables are numbered from 1"));
                }
                MPoly::var(idx, idx - 1)
            }
            Some(c) if c.is_ascii_digit() || c == b'.' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_digit() || matches!(self.src[self.pos], b'.' | b'/'))
                {
                    self.pos += 1;
                }
                let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                let q: Rational = parse_rational(text)?;
                MPoly::constant(0, q)
            }
            _ => return Err(self.err("expected a factor")),
        };
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            let k: u32 = std::str::from_utf8(&self.src[start..self.pos])
                .unwrap()
                .parse()
                .map_err(|_| self.err("bad exponent"))?;
            return Ok(base.pow(k));
        }
        Ok(base)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::int;

    #[test]
    fn products_and_powers() {
        let p = parse_mpoly("2 (z1 - z2)^2 * z3").unwrap();
        let q = parse_mpoly("2 z1^2 z3 - 4 z1 z2 z3 + 2 z2^2 z3").unwrap();
        assert_eq!(p, q);
        assert_eq!(parse_mpoly("-z").unwrap(), MPoly::var(1, 0).scale(&int(-1)));
        assert_eq!(parse_mpoly("3/4 z_2").unwrap().coeff(&[0, 1]), crate::exactnum::rat(3, 4));
    }

    #[test]
    fn errors() {
        for bad in ["", "z0", "(z1", "z1 +", "z1^", "2 ) "] {
            assert!(parse_mpoly(bad).is_err(), "{bad}");
        }
    }
}
