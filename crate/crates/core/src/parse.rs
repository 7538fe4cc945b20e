//! Polynomial expressions: integer literals, variables, `+ - * ^` and parentheses.
//!
//! Precedence from tightest: `^`, unary `-`, `*`, binary `+`/`-`. So `-x^2`
//! is `-(x^2)` and `2*-x` is accepted.

use std::fmt;

use thiserror::Error;

use crate::poly::{MultiPoly, PolyError, Zmod};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("{line}:{column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{line}:{column}: unknown variable `{name}`")]
    UnknownVariable {
        line: usize,
        column: usize,
        name: String,
    },
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Source position, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub column: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolyExpr {
    /// Decimal digits, reduced only on evaluation.
    Int(String),
    Var(String, Pos),
    Neg(Box<PolyExpr>),
    Add(Box<PolyExpr>, Box<PolyExpr>),
    Sub(Box<PolyExpr>, Box<PolyExpr>),
    Mul(Box<PolyExpr>, Box<PolyExpr>),
    Pow(Box<PolyExpr>, u32),
}

impl PolyExpr {
    pub fn evaluate(&self, vars: &[String], ring: &Zmod) -> Result<MultiPoly, ParseError> {
        let n = vars.len();
        Ok(match self {
            PolyExpr::Int(digits) => {
                let m = ring.modulus();
                let c = digits
                    .bytes()
                    .fold(0u64, |acc, d| (acc * 10 + u64::from(d - b'0')) % m);
                MultiPoly::constant(ring.clone(), n, c as i64)
            }
            PolyExpr::Var(name, pos) => {
                let i = vars.iter().position(|v| v == name).ok_or_else(|| {
                    ParseError::UnknownVariable {
                        line: pos.line,
                        column: pos.column,
                        name: name.clone(),
                    }
                })?;
                MultiPoly::var(ring.clone(), n, i)
            }
            PolyExpr::Neg(a) => -&a.evaluate(vars, ring)?,
            PolyExpr::Add(a, b) => a.evaluate(vars, ring)?.try_add(&b.evaluate(vars, ring)?)?,
            PolyExpr::Sub(a, b) => a.evaluate(vars, ring)?.try_sub(&b.evaluate(vars, ring)?)?,
            PolyExpr::Mul(a, b) => a.evaluate(vars, ring)?.try_mul(&b.evaluate(vars, ring)?)?,
            PolyExpr::Pow(a, k) => a.evaluate(vars, ring)?.try_pow(*k)?,
        })
    }
}

impl fmt::Display for PolyExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyExpr::Int(d) => write!(f, "{d}"),
            PolyExpr::Var(v, _) => write!(f, "{v}"),
            PolyExpr::Neg(a) => write!(f, "(-{a})"),
            PolyExpr::Add(a, b) => write!(f, "({a} + {b})"),
            PolyExpr::Sub(a, b) => write!(f, "({a} - {b})"),
            PolyExpr::Mul(a, b) => write!(f, "({a}*{b})"),
            PolyExpr::Pow(a, k) => write!(f, "{a}^{k}"),
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    at: usize,
    line: usize,
    line_start: usize,
}

impl<'a> Parser<'a> {
    fn pos(&self) -> Pos {
        Pos {
            line: self.line,
            column: self.at - self.line_start + 1,
        }
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        let Pos { line, column } = self.pos();
        ParseError::Syntax {
            line,
            column,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while let Some(&c) = self.src.get(self.at) {
            if c == b'\n' {
                self.line += 1;
                self.line_start = self.at + 1;
            } else if !c.is_ascii_whitespace() {
                break;
            }
            self.at += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.at).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn describe(&mut self) -> String {
        match self.peek() {
            None => "unexpected end of input".to_string(),
            Some(c) => format!("unexpected `{}`", c as char),
        }
    }

    fn expr(&mut self) -> Result<PolyExpr, ParseError> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = PolyExpr::Add(Box::new(acc), Box::new(self.term()?));
            } else if self.eat(b'-') {
                acc = PolyExpr::Sub(Box::new(acc), Box::new(self.term()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<PolyExpr, ParseError> {
        let mut acc = self.unary()?;
        while self.eat(b'*') {
            acc = PolyExpr::Mul(Box::new(acc), Box::new(self.unary()?));
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<PolyExpr, ParseError> {
        if self.eat(b'-') {
            Ok(PolyExpr::Neg(Box::new(self.unary()?)))
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<PolyExpr, ParseError> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        if !matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            let msg = format!("{} after `^`, expected an exponent", self.describe());
            return Err(self.error(msg));
        }
        let start = self.pos();
        let digits = self.digits();
        let k = digits.parse::<u32>().map_err(|_| ParseError::Syntax {
            line: start.line,
            column: start.column,
            message: format!("exponent {digits} is too large"),
        })?;
        Ok(PolyExpr::Pow(Box::new(base), k))
    }

    fn digits(&mut self) -> String {
        let start = self.at;
        while self.src.get(self.at).is_some_and(u8::is_ascii_digit) {
            self.at += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.at]).into_owned()
    }

    fn atom(&mut self) -> Result<PolyExpr, ParseError> {
        match self.peek() {
            Some(b'(') => {
                self.at += 1;
                let e = self.expr()?;
                if !self.eat(b')') {
                    let msg = format!("{}, expected `)`", self.describe());
                    return Err(self.error(msg));
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => Ok(PolyExpr::Int(self.digits())),
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let pos = self.pos();
                let start = self.at;
                while self
                    .src
                    .get(self.at)
                    .is_some_and(|c| c.is_ascii_alphanumeric() || *c == b'_')
                {
                    self.at += 1;
                }
                let name = String::from_utf8_lossy(&self.src[start..self.at]).into_owned();
                Ok(PolyExpr::Var(name, pos))
            }
            _ => {
                let msg = format!("{}, expected a number, variable or `(`", self.describe());
                Err(self.error(msg))
            }
        }
    }
}

pub fn parse_expr(text: &str) -> Result<PolyExpr, ParseError> {
    let mut p = Parser {
        src: text.as_bytes(),
        at: 0,
        line: 1,
        line_start: 0,
    };
    let e = p.expr()?;
    if p.peek().is_some() {
        let msg = p.describe();
        return Err(p.error(msg));
    }
    Ok(e)
}

/// Parses and evaluates `text` over `ring` in the variables `vars`.
pub fn parse_poly(text: &str, vars: &[String], ring: &Zmod) -> Result<MultiPoly, ParseError> {
    for (i, v) in vars.iter().enumerate() {
        if vars[..i].contains(v) {
            return Err(ParseError::DuplicateVariable(v.clone()));
        }
    }
    parse_expr(text)?.evaluate(vars, ring)
}
