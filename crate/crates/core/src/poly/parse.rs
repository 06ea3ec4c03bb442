//! Text syntax for polynomials: integer or rational coefficients, optional
//! `*`, `^` for powers, parentheses, and the ring's declared variable names,
//! e.g. `x^2 + 3*x*y - 1/2 y z`.

use num_bigint::BigInt;

use super::monomial::Monomial;
use super::polynomial::{PolyRing, Polynomial};
use crate::error::{Error, Result};
use crate::field::Field;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn err(col: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line: 1,
        column: col,
        message: message.into(),
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push((Tok::Num(s.parse().expect("digits")), col));
            continue;
        }
        if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), col));
            continue;
        }
        let t = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            _ => return Err(err(col, format!("unexpected character `{c}`"))),
        };
        out.push((t, col));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a, F: Field> {
    ring: &'a PolyRing<F>,
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end_col: usize,
}

impl<'a, F: Field> Parser<'a, F> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |(_, c)| *c)
    }

    fn expr(&mut self) -> Result<Polynomial<F::Elem>> {
        let r = self.ring;
        let mut acc = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                r.neg(&self.term()?)
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = r.add(&acc, &self.term()?);
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = r.sub(&acc, &self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial<F::Elem>> {
        let r = self.ring;
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = r.mul(&acc, &self.power()?);
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let col = self.col();
                    let d = self.power()?;
                    let c = match d.terms() {
                        [(m, c)] if m.is_one() => c.clone(),
                        [] => return Err(err(col, "division by zero")),
                        _ => return Err(err(col, "division by a non-constant")),
                    };
                    let inv = r.field().inv(&c).map_err(|_| err(col, "division by zero in the field"))?;
                    acc = r.scale(&acc, &inv);
                }
                Some(Tok::Num(_)) | Some(Tok::Ident(_)) | Some(Tok::LParen) => {
                    acc = r.mul(&acc, &self.power()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<Polynomial<F::Elem>> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            let col = self.col();
            match self.toks.get(self.pos) {
                Some((Tok::Num(n), _)) => {
                    let e: u32 = n.try_into().map_err(|_| err(col, "exponent too large"))?;
                    if e > 1000 {
                        return Err(err(col, "exponent too large"));
                    }
                    self.pos += 1;
                    Ok(self.ring.pow(&base, e))
                }
                _ => Err(err(col, "expected a non-negative integer exponent")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Polynomial<F::Elem>> {
        let col = self.col();
        let r = self.ring;
        match self.toks.get(self.pos).cloned() {
            Some((Tok::Num(n), _)) => {
                self.pos += 1;
                let c = r
                    .field()
                    .from_ratio(&n, &BigInt::from(1))
                    .map_err(|e| err(col, e.to_string()))?;
                Ok(r.constant(c))
            }
            Some((Tok::Ident(name), _)) => {
                self.pos += 1;
                self.variable_product(&name, col)
            }
            Some((Tok::LParen, _)) => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(err(self.col(), "expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some((t, _)) => Err(err(col, format!("unexpected token {t:?}"))),
            None => Err(err(col, "unexpected end of input")),
        }
    }

    /// A declared variable, or a juxtaposition of single-letter variables
    /// such as `xy`.
    fn variable_product(&self, name: &str, col: usize) -> Result<Polynomial<F::Elem>> {
        let r = self.ring;
        if let Some(i) = r.names().iter().position(|n| n == name) {
            return Ok(r.var(i));
        }
        let mut exps = vec![0u32; r.nvars()];
        for ch in name.chars() {
            let s = ch.to_string();
            match r.names().iter().position(|n| *n == s) {
                Some(i) => exps[i] += 1,
                None => return Err(err(col, format!("unknown variable `{name}`"))),
            }
        }
        Ok(r.term(Monomial::from_exponents(&exps)?, r.field().one()))
    }
}

impl<F: Field> PolyRing<F> {
    /// Parses a polynomial in this ring's variables.
    pub fn parse(&self, text: &str) -> Result<Polynomial<F::Elem>> {
        let toks = lex(text)?;
        if toks.is_empty() {
            return Err(err(1, "empty polynomial"));
        }
        let mut p = Parser {
            ring: self,
            toks,
            pos: 0,
            end_col: text.chars().count() + 1,
        };
        let f = p.expr()?;
        if p.pos != p.toks.len() {
            return Err(err(p.col(), "trailing input"));
        }
        Ok(f)
    }
}
