use std::str::FromStr;

use num_bigint::BigInt;

use super::atom::Atom;
use super::element::{AlgebraElement, Monomial};
use crate::arith::Rational;
use crate::combinatorics::Composition;
use crate::error::{Error, Result};

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(char::is_whitespace) {
            self.pos += self.src[self.pos..].chars().next().unwrap().len_utf8();
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

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected '{c}'"))
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        let len = self.src[start..].chars().take_while(char::is_ascii_digit).count();
        if len == 0 {
            return self.err("expected an integer");
        }
        self.pos += len;
        Ok(self.src[start..self.pos].parse().expect("digits"))
    }

    fn small(&mut self) -> Result<u32> {
        let at = self.pos;
        let n = self.integer()?;
        u32::try_from(n).map_err(|_| Error::Parse { pos: at, msg: "integer too large".into() })
    }

    fn expression(&mut self) -> Result<AlgebraElement> {
        let mut out = AlgebraElement::zero();
        let mut sign = Rational::one();
        if self.eat('-') {
            sign = -sign;
        } else {
            self.eat('+');
        }
        loop {
            let t = self.term()?;
            out = out + t.scale(&sign);
            if self.eat('+') {
                sign = Rational::one();
            } else if self.eat('-') {
                sign = -Rational::one();
            } else {
                break;
            }
        }
        Ok(out)
    }

    fn term(&mut self) -> Result<AlgebraElement> {
        let mut coeff = Rational::one();
        let mut factors: Vec<(Atom, u32)> = Vec::new();
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let num = self.integer()?;
                    let mut r = Rational::from_int(num);
                    if self.eat('/') {
                        let at = self.pos;
                        let den = self.integer()?;
                        r = Rational::from_bigs(r.numer().clone(), den)
                            .map_err(|_| Error::Parse { pos: at, msg: "zero denominator".into() })?;
                    }
                    coeff *= r;
                }
                Some(_) => {
                    let a = self.atom()?;
                    let e = if self.eat('^') { self.small()? } else { 1 };
                    factors.push((a, e));
                }
                None => return self.err("unexpected end of input"),
            }
            if !self.eat('*') {
                break;
            }
        }
        Ok(AlgebraElement::term(coeff, Monomial::from_factors(factors)))
    }

    fn atom(&mut self) -> Result<Atom> {
        self.skip_ws();
        let at = self.pos;
        let wrap = |r: Result<Atom>| r.map_err(|e| Error::Parse { pos: at, msg: e.to_string() });
        let rest = &self.src[self.pos..];
        if rest.starts_with('z') {
            self.pos += 1;
            self.expect('(')?;
            let k = self.small()?;
            self.expect(')')?;
            wrap(Atom::zeta(k))
        } else if rest.starts_with('m') {
            self.pos += 1;
            self.expect('(')?;
            let start = self.pos;
            let Some(len) = self.src[start..].find(')') else {
                return self.err("unclosed m(");
            };
            self.pos = start + len + 1;
            let s: Composition = self.src[start..start + len].parse().map_err(|e| match e {
                Error::Parse { pos, msg } => Error::Parse { pos: start + pos, msg },
                other => other,
            })?;
            wrap(Atom::mzv(s))
        } else if rest.starts_with('S') {
            self.pos += 1;
            self.expect('(')?;
            let p = self.small()?;
            self.expect(',')?;
            let q = self.small()?;
            self.expect(')')?;
            wrap(Atom::linear(p, q))
        } else {
            self.err("expected a number, z(..), m(..) or S(..)")
        }
    }
}

impl FromStr for AlgebraElement {
    type Err = Error;

    fn from_str(text: &str) -> Result<AlgebraElement> {
        let mut p = Parser { src: text, pos: 0 };
        if p.peek().is_none() {
            return p.err("empty expression");
        }
        if p.peek() == Some('0') && text.trim() == "0" {
            return Ok(AlgebraElement::zero());
        }
        let e = p.expression()?;
        if p.peek().is_some() {
            return p.err("unexpected trailing input");
        }
        Ok(e)
    }
}
