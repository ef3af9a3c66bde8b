//! Reader for the textual polynomial grammar.
//!
//! ```text
//! poly   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := INT ['/' INT] | var ['^' INT]
//! var    := 'x' INT | 'x' | 'y' | 'z'
//! ```
//!
//! Indices in `xK` are 1-based. The aliases `x`, `y`, `z` stand for `x1`,
//! `x2`, `x3` and are only accepted when the arity is at most three.
//! Whitespace is ignored everywhere.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::ParseError;
use crate::poly::Poly;
use crate::Rational;

pub fn parse_poly(text: &str, arity: usize) -> Result<Poly, ParseError> {
    let mut p = Parser {
        chars: text
            .char_indices()
            .filter(|(_, c)| !c.is_whitespace())
            .collect(),
        pos: 0,
        arity,
        end: text.len(),
    };
    p.poly()
}

struct Parser {
    chars: Vec<(usize, char)>,
    pos: usize,
    arity: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.end, |&(o, _)| o)
    }

    fn syntax(&self, message: impl Into<String>) -> ParseError {
        ParseError::Syntax {
            position: self.offset(),
            message: message.into(),
        }
    }

    fn poly(&mut self) -> Result<Poly, ParseError> {
        if self.chars.is_empty() {
            return Err(self.syntax("empty input"));
        }
        let mut out = Poly::zero(self.arity);
        let mut sign = match self.peek() {
            Some('-') => {
                self.pos += 1;
                -1
            }
            Some('+') => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        loop {
            let (exps, coeff) = self.term()?;
            let coeff = if sign < 0 { -coeff } else { coeff };
            out.add_term(exps, coeff);
            match self.peek() {
                None => return Ok(out),
                Some('+') => sign = 1,
                Some('-') => sign = -1,
                Some(c) => return Err(self.syntax(format!("unexpected character `{c}`"))),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<(Vec<u32>, Rational), ParseError> {
        let mut exps = vec![0u32; self.arity];
        let mut coeff = Rational::one();
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    coeff *= self.rational()?;
                }
                Some(c) if c.is_ascii_alphabetic() => {
                    let index = self.variable()?;
                    let power = if self.peek() == Some('^') {
                        self.pos += 1;
                        let start = self.offset();
                        let n = self.integer()?;
                        u32::try_from(&n).map_err(|_| ParseError::Syntax {
                            position: start,
                            message: "exponent out of range".into(),
                        })?
                    } else {
                        1
                    };
                    exps[index] = exps[index]
                        .checked_add(power)
                        .ok_or_else(|| self.syntax("exponent out of range"))?;
                }
                Some(c) => return Err(self.syntax(format!("expected a factor, found `{c}`"))),
                None => return Err(self.syntax("expected a factor, found end of input")),
            }
            if self.peek() == Some('*') {
                self.pos += 1;
            } else {
                return Ok((exps, coeff));
            }
        }
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.syntax("expected a non-negative integer"));
        }
        let digits: String = self.chars[start..self.pos]
            .iter()
            .map(|&(_, c)| c)
            .collect();
        Ok(digits.parse().expect("ascii digits"))
    }

    fn rational(&mut self) -> Result<Rational, ParseError> {
        let numer = self.integer()?;
        if self.peek() != Some('/') {
            return Ok(Rational::from_integer(numer));
        }
        self.pos += 1;
        let at = self.offset();
        let denom = self.integer()?;
        if denom.is_zero() {
            return Err(ParseError::Syntax {
                position: at,
                message: "zero denominator".into(),
            });
        }
        Ok(Rational::new(numer, denom))
    }

    fn variable(&mut self) -> Result<usize, ParseError> {
        let position = self.offset();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == '_') {
            self.pos += 1;
        }
        let name: String = self.chars[start..self.pos]
            .iter()
            .map(|&(_, c)| c)
            .collect();
        let alias = match name.as_str() {
            "x" => Some(0),
            "y" => Some(1),
            "z" => Some(2),
            _ => None,
        };
        let index = match alias {
            Some(i) if self.arity <= 3 => i,
            Some(_) => return Err(ParseError::UnknownVariable { name, position }),
            None => match name.strip_prefix('x').and_then(|k| k.parse::<usize>().ok()) {
                Some(k) if k >= 1 && !name[1..].starts_with('0') => k - 1,
                _ => return Err(ParseError::UnknownVariable { name, position }),
            },
        };
        if index >= self.arity {
            return Err(ParseError::ArityMismatch {
                name,
                position,
                arity: self.arity,
            });
        }
        Ok(index)
    }
}
