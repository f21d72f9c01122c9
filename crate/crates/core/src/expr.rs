//! Text syntax for cohomology classes.
//!
//! The grammar is the one the CLI shares with the class printer:
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ['^' uint]
//! atom   := 's' digits | digits | '(' expr ')'
//! ```
//!
//! `s<k>` is the special class `σ_k` (rejected when `k` is 0 or exceeds the
//! rank), bare integers are constants of arbitrary size, and whitespace is
//! ignored between tokens (but not between `s` and its index). Printing a
//! class with [`ClassExpr`]'s `Display` and reparsing at the same rank
//! yields an equal class.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::classes::ClassExpr;
use crate::{Error, Result};

/// Largest accepted exponent; keeps a typo like `s1^9999999` from grinding
/// through gigantic expansions.
const MAX_EXPONENT: u64 = 4096;

/// Parses a class expression at the given ambient rank. Errors carry the
/// byte position where parsing stopped.
pub fn parse_class_expr(text: &str, rank: u32) -> Result<ClassExpr> {
    let mut parser = Parser {
        bytes: text.as_bytes(),
        pos: 0,
        rank,
    };
    let value = parser.expr()?;
    parser.skip_ws();
    if parser.pos != parser.bytes.len() {
        return Err(Error::Parse {
            pos: parser.pos,
            msg: "unexpected trailing input".into(),
        });
    }
    Ok(value)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    rank: u32,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self
            .bytes
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_whitespace())
        {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<ClassExpr> {
        let negate_first = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let mut acc = self.term()?;
        if negate_first {
            acc = -&acc;
        }
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = &acc + &t;
                }
                Some(b'-') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = &acc - &t;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<ClassExpr> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let f = self.factor()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<ClassExpr> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let (digits, pos) = self.digit_span()?;
            let exponent: u64 = digits.parse().unwrap_or(u64::MAX);
            if exponent > MAX_EXPONENT {
                return Err(Error::Parse {
                    pos,
                    msg: format!("exponent exceeds the supported maximum {MAX_EXPONENT}"),
                });
            }
            return Ok(base.pow(exponent as u32));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<ClassExpr> {
        match self.peek() {
            Some(b's') => {
                self.pos += 1;
                let (digits, _) = self.digit_span()?;
                let index: u64 = digits.parse().unwrap_or(u64::MAX);
                if index >= 1 && index <= self.rank as u64 {
                    Ok(ClassExpr::special(index as i64, self.rank))
                } else {
                    Err(Error::GeneratorOutOfRange {
                        index,
                        rank: self.rank,
                    })
                }
            }
            Some(b) if b.is_ascii_digit() => {
                let (digits, _) = self.digit_span()?;
                let value: BigInt = digits.parse().expect("digit span parses as an integer");
                Ok(ClassExpr::monomial(
                    self.rank,
                    &vec![0; self.rank as usize],
                    BigRational::from_integer(value),
                ))
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() == Some(b')') {
                    self.pos += 1;
                    Ok(inner)
                } else {
                    Err(Error::Parse {
                        pos: self.pos,
                        msg: "expected ')'".into(),
                    })
                }
            }
            Some(b) => Err(Error::Parse {
                pos: self.pos,
                msg: format!("unexpected character {:?}", b as char),
            }),
            None => Err(Error::Parse {
                pos: self.pos,
                msg: "unexpected end of input".into(),
            }),
        }
    }

    /// Reads a maximal nonempty run of digits starting exactly at the
    /// current position (no whitespace skipping — generator indices must
    /// touch their `s`). Returns the run and its starting byte position.
    fn digit_span(&mut self) -> Result<(&str, usize)> {
        let start = self.pos;
        while self
            .bytes
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_digit())
        {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(Error::Parse {
                pos: start,
                msg: "expected digits".into(),
            });
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos])
            .expect("ASCII digits are valid UTF-8");
        Ok((text, start))
    }
}
