//! Text syntax for monomials and ideals.
//!
//! ```text
//! IDEAL := "("? MONO ("," MONO)* ")"?
//! MONO  := "1" | FACTOR ("*"? FACTOR)*
//! FACTOR := ("x" | "y") ("^"? DIGITS)?
//! ```
//!
//! Whitespace is allowed between tokens. `x^3*y`, `x3y` and `x^3 y` all
//! denote the same monomial.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::{IdealError, ParseError};
use crate::monomial::{Monomial, MonomialIdeal};

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
    base: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            offset: self.base + self.pos,
            message: message.into(),
        }
    }

    fn digits(&mut self) -> Result<Option<u32>, ParseError> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if start == self.pos {
            return Ok(None);
        }
        let text = core::str::from_utf8(&self.src[start..self.pos]).unwrap_or("");
        text.parse::<u32>().map(Some).map_err(|_| ParseError {
            offset: self.base + start,
            message: "exponent out of range".to_string(),
        })
    }

    fn monomial(&mut self) -> Result<Monomial, ParseError> {
        self.skip_ws();
        if self.peek() == Some(b'1') {
            self.pos += 1;
            return Ok(Monomial::ONE);
        }
        let mut mono = Monomial::ONE;
        let mut factors = 0;
        loop {
            self.skip_ws();
            let var = match self.peek() {
                Some(b'x') => Monomial::X,
                Some(b'y') => Monomial::Y,
                Some(b'*') if factors > 0 => {
                    self.pos += 1;
                    self.skip_ws();
                    if !matches!(self.peek(), Some(b'x' | b'y')) {
                        return Err(self.error("expected `x` or `y` after `*`"));
                    }
                    continue;
                }
                _ if factors > 0 => break,
                _ => return Err(self.error("expected a monomial (`1`, or factors of `x` and `y`)")),
            };
            self.pos += 1;
            let caret = if self.peek() == Some(b'^') {
                self.pos += 1;
                true
            } else {
                false
            };
            let exp = match self.digits()? {
                Some(e) => e,
                None if caret => return Err(self.error("expected an exponent after `^`")),
                None => 1,
            };
            let factor = Monomial::new(var.xdeg * exp, var.ydeg * exp);
            mono = Monomial::new(
                mono.xdeg.checked_add(factor.xdeg).ok_or_else(|| self.error("exponent overflow"))?,
                mono.ydeg.checked_add(factor.ydeg).ok_or_else(|| self.error("exponent overflow"))?,
            );
            factors += 1;
        }
        Ok(mono)
    }
}

/// Parses a single monomial such as `x^2*y`, `xy3` or `1`.
pub fn parse_monomial(text: &str) -> Result<Monomial, ParseError> {
    let mut cur = Cursor {
        src: text.as_bytes(),
        pos: 0,
        base: 0,
    };
    let m = cur.monomial()?;
    cur.skip_ws();
    if cur.pos != cur.src.len() {
        return Err(cur.error("unexpected trailing input"));
    }
    Ok(m)
}

/// Parses a comma-separated generator list, optionally wrapped in
/// parentheses, and normalizes the result.
pub fn parse_ideal(text: &str) -> Result<MonomialIdeal, IdealError> {
    let raw = parse_generators(text)?;
    MonomialIdeal::normalize(&raw)
}

/// Parses the generator list without normalizing it.
pub fn parse_generators(text: &str) -> Result<Vec<Monomial>, ParseError> {
    let mut cur = Cursor {
        src: text.as_bytes(),
        pos: 0,
        base: 0,
    };
    cur.skip_ws();
    let parens = cur.peek() == Some(b'(');
    if parens {
        cur.pos += 1;
    }
    let mut out = Vec::new();
    cur.skip_ws();
    let empty = match cur.peek() {
        None => true,
        Some(b')') => parens,
        _ => false,
    };
    if !empty {
        loop {
            out.push(cur.monomial()?);
            cur.skip_ws();
            if cur.peek() == Some(b',') {
                cur.pos += 1;
                continue;
            }
            break;
        }
    }
    cur.skip_ws();
    if parens {
        if cur.peek() != Some(b')') {
            return Err(cur.error("expected `,` or `)`"));
        }
        cur.pos += 1;
        cur.skip_ws();
    }
    if cur.pos != cur.src.len() {
        return Err(cur.error(if parens {
            "unexpected trailing input"
        } else {
            "expected `,` or end of input"
        }));
    }
    Ok(out)
}
