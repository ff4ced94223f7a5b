//! Exact parser for scalar literals such as `-1/2 + 3*z^2` or `(1 - z)^2`.
//!
//! Grammar:
//!
//! ```text
//! expr   := ['+' | '-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ['^' digits]
//! atom   := digits ['/' digits] | 'z' | '(' expr ')' | '-' atom
//! ```
//!
//! `z` denotes the primitive root ζₙ for the order declared by the caller.
//! No floating point value is ever formed.

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use super::{CycloElem, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("column {column}: {message}")]
pub struct ScalarParseError {
    /// 1-based character column within the literal.
    pub column: usize,
    pub message: String,
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
    order: u32,
}

impl Parser {
    fn err<T>(&self, message: impl Into<String>) -> Result<T, ScalarParseError> {
        Err(ScalarParseError {
            column: self.pos + 1,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn digits(&mut self) -> Result<BigInt, ScalarParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        Ok(s.parse().expect("ascii digits parse as an integer"))
    }

    fn expr(&mut self) -> Result<CycloElem, ScalarParseError> {
        let mut acc = match self.peek() {
            Some('+') => {
                self.pos += 1;
                self.term()?
            }
            Some('-') => {
                self.pos += 1;
                -self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some('-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<CycloElem, ScalarParseError> {
        let mut acc = self.factor()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<CycloElem, ScalarParseError> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            let e = self.digits()?;
            let e: u32 = match u32::try_from(&e) {
                Ok(e) if e <= 1 << 16 => e,
                _ => return self.err("exponent too large"),
            };
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<CycloElem, ScalarParseError> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let num = self.digits()?;
                if self.peek() == Some('/') {
                    self.pos += 1;
                    let den = self.digits()?;
                    if den.is_zero() {
                        return self.err("zero denominator");
                    }
                    return Ok(CycloElem::from_rational(Rational::new(num, den)));
                }
                Ok(CycloElem::from_rational(Rational::from_integer(num)))
            }
            Some('z') => {
                self.pos += 1;
                Ok(CycloElem::zeta(self.order))
            }
            Some('(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(')') {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                Ok(v)
            }
            Some('-') => {
                self.pos += 1;
                Ok(-self.atom()?)
            }
            Some(c) => self.err(format!("unexpected character '{c}'")),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses a scalar literal over Q(ζ_order). The result is promoted to `order`.
pub fn parse_scalar(src: &str, order: u32) -> Result<CycloElem, ScalarParseError> {
    if order == 0 {
        return Err(ScalarParseError {
            column: 1,
            message: "cyclotomic order must be positive".into(),
        });
    }
    let mut p = Parser {
        chars: src.chars().collect(),
        pos: 0,
        order,
    };
    let v = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(v.promote(order))
}
