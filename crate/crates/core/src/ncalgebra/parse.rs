//! Recursive-descent parser for noncommutative expressions.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' integer)*
//! atom   := integer | symbol | '(' expr ')'
//! ```
//!
//! Generators (`a b c d x y xi eta`, optionally suffixed `~`) keep their
//! order; parameters (`K p q g h u mu`) commute and fold into coefficients.
//! Division is only allowed by parameter expressions. Decimal literals are
//! rejected so every value stays exact.

use num_bigint::BigInt;
use thiserror::Error;

use super::{GenSymbol, NCPoly};
use crate::scalars::{RatFunc, Rational, Var};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at offset {offset}: {message}")]
    SyntaxError { offset: usize, message: String },
    #[error("unknown symbol `{name}` at offset {offset}")]
    UnknownSymbol { offset: usize, name: String },
    #[error("division by zero at offset {offset}")]
    DivisionByZero { offset: usize },
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Op(char),
}

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn tokens(src: &'a str) -> Result<Vec<(usize, Tok)>, ParseError> {
        let mut lx = Lexer { src, pos: 0 };
        let mut out = Vec::new();
        while let Some(t) = lx.next_token()? {
            out.push(t);
        }
        Ok(out)
    }

    fn next_token(&mut self) -> Result<Option<(usize, Tok)>, ParseError> {
        let bytes = self.src.as_bytes();
        while self.pos < bytes.len() && bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        if self.pos >= bytes.len() {
            return Ok(None);
        }
        let start = self.pos;
        let ch = bytes[start] as char;
        if ch.is_ascii_digit() {
            while self.pos < bytes.len() && bytes[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            if self.pos < bytes.len() && bytes[self.pos] == b'.' {
                return Err(ParseError::SyntaxError {
                    offset: self.pos,
                    message: "decimal literals are not exact; write n/d".into(),
                });
            }
            let n: BigInt = self.src[start..self.pos].parse().expect("digits");
            return Ok(Some((start, Tok::Int(n))));
        }
        if ch.is_ascii_alphabetic() {
            while self.pos < bytes.len() && (bytes[self.pos].is_ascii_alphanumeric() || bytes[self.pos] == b'_') {
                self.pos += 1;
            }
            if self.pos < bytes.len() && bytes[self.pos] == b'~' {
                self.pos += 1;
            }
            return Ok(Some((start, Tok::Ident(self.src[start..self.pos].to_string()))));
        }
        if "+-*/^()".contains(ch) {
            self.pos += 1;
            return Ok(Some((start, Tok::Op(ch))));
        }
        Err(ParseError::SyntaxError { offset: start, message: format!("unexpected character `{ch}`") })
    }
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    idx: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.idx).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.idx).map_or(self.end, |(o, _)| *o)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.idx += 1;
            true
        } else {
            false
        }
    }

    fn error<T>(&self, message: &str) -> Result<T, ParseError> {
        Err(ParseError::SyntaxError { offset: self.offset(), message: message.into() })
    }

    fn expr(&mut self) -> Result<NCPoly, ParseError> {
        let mut acc = self.term()?;
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

    fn term(&mut self) -> Result<NCPoly, ParseError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.unary()?;
            } else if self.peek() == Some(&Tok::Op('/')) {
                let offset = self.offset();
                self.idx += 1;
                let divisor = self.unary()?;
                let Some(d) = divisor.as_scalar() else {
                    return Err(ParseError::SyntaxError {
                        offset,
                        message: "division by an expression containing generators".into(),
                    });
                };
                let inv = d.inv().map_err(|_| ParseError::DivisionByZero { offset })?;
                acc = acc.scale(&inv);
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<NCPoly, ParseError> {
        if self.eat('-') {
            return Ok(-&self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<NCPoly, ParseError> {
        let mut base = self.atom()?;
        while self.eat('^') {
            match self.peek().cloned() {
                Some(Tok::Int(n)) => {
                    self.idx += 1;
                    let e: u32 = n.try_into().map_err(|_| ParseError::SyntaxError {
                        offset: self.offset(),
                        message: "exponent too large".into(),
                    })?;
                    base = base.pow(e);
                }
                _ => return self.error("expected a nonnegative integer exponent"),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<NCPoly, ParseError> {
        let offset = self.offset();
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.idx += 1;
                Ok(NCPoly::scalar(RatFunc::from_rational(Rational::from_integer(n))))
            }
            Some(Tok::Ident(name)) => {
                self.idx += 1;
                if let Ok(g) = name.parse::<GenSymbol>() {
                    Ok(NCPoly::generator(g))
                } else if let Ok(v) = name.parse::<Var>() {
                    Ok(NCPoly::scalar(RatFunc::var(v)))
                } else {
                    Err(ParseError::UnknownSymbol { offset, name })
                }
            }
            Some(Tok::Op('(')) => {
                self.idx += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return self.error("expected `)`");
                }
                Ok(inner)
            }
            Some(Tok::Op(c)) => self.error(&format!("unexpected `{c}`")),
            None => self.error("unexpected end of input"),
        }
    }
}

/// Parses an expression into an [`NCPoly`].
pub fn parse_expression(text: &str) -> Result<NCPoly, ParseError> {
    let toks = Lexer::tokens(text)?;
    let mut p = Parser { toks, idx: 0, end: text.len() };
    let out = p.expr()?;
    if p.idx < p.toks.len() {
        return p.error("trailing input");
    }
    Ok(out)
}

/// Parses a parameter-only expression into a [`RatFunc`].
pub fn parse_scalar(text: &str) -> Result<RatFunc, ParseError> {
    let p = parse_expression(text)?;
    p.as_scalar().ok_or_else(|| ParseError::SyntaxError {
        offset: 0,
        message: "expected a parameter expression without generators".into(),
    })
}

/// Parse that panics on malformed input; for the built-in relation tables.
pub(crate) fn nc(text: &str) -> NCPoly {
    parse_expression(text).unwrap_or_else(|e| panic!("bad built-in expression `{text}`: {e}"))
}
