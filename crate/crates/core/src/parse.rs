//! Text form of polynomials.
//!
//! ```text
//! poly   ::= ['+'|'-'] term (('+'|'-') term)*
//! term   ::= coeff ('*' factor)* | factor ('*' factor)*
//! coeff  ::= integer | integer '/' positive-integer
//! factor ::= varname ('^' natural)?
//! ```
//!
//! Whitespace between tokens is ignored. `Display` on [`Polynomial`] emits
//! exactly this grammar with no whitespace, and parsing that output gives the
//! same polynomial back.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::PolyError;
use crate::poly::{Monomial, Polynomial, Ring, Scalar};

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, want: char) -> bool {
        if self.peek() == Some(want) {
            self.pos += want.len_utf8();
            true
        } else {
            false
        }
    }

    fn take_while(&mut self, pred: impl Fn(char) -> bool) -> &'a str {
        self.skip_ws();
        let start = self.pos;
        while let Some(c) = self.src[self.pos..].chars().next() {
            if pred(c) {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
        &self.src[start..self.pos]
    }

    fn error(&self, message: impl Into<String>) -> PolyError {
        PolyError::Parse {
            position: self.pos,
            message: message.into(),
        }
    }

    fn natural(&mut self) -> Result<BigInt, PolyError> {
        let digits = self.take_while(|c| c.is_ascii_digit());
        if digits.is_empty() {
            return Err(self.error("expected digits"));
        }
        Ok(digits.parse().expect("ascii digits"))
    }
}

pub(crate) fn parse_polynomial(ring: &Ring, text: &str) -> Result<Polynomial, PolyError> {
    let mut cur = Cursor { src: text, pos: 0 };
    let mut out = Polynomial::zero(ring);
    let mut negate = if cur.eat('-') {
        true
    } else {
        cur.eat('+');
        false
    };
    loop {
        let (m, mut c) = parse_term(ring, &mut cur)?;
        if negate {
            c = -c;
        }
        out.insert_term(m, c);
        if cur.eat('+') {
            negate = false;
        } else if cur.eat('-') {
            negate = true;
        } else {
            break;
        }
    }
    if cur.peek().is_some() {
        return Err(cur.error("unexpected trailing input"));
    }
    Ok(out)
}

fn parse_term(ring: &Ring, cur: &mut Cursor<'_>) -> Result<(Monomial, Scalar), PolyError> {
    let mut exps = vec![0u32; ring.arity()];
    let coeff = match cur.peek() {
        Some(c) if c.is_ascii_digit() => {
            let num = cur.natural()?;
            let den = if cur.eat('/') {
                let d = cur.natural()?;
                if d.is_zero() {
                    return Err(cur.error("zero denominator"));
                }
                d
            } else {
                BigInt::one()
            };
            let c = Scalar::new(num, den);
            if !cur.eat('*') {
                return Ok((Monomial::new(exps), c));
            }
            c
        }
        _ => Scalar::one(),
    };
    loop {
        parse_factor(ring, cur, &mut exps)?;
        if !cur.eat('*') {
            break;
        }
    }
    Ok((Monomial::new(exps), coeff))
}

fn parse_factor(ring: &Ring, cur: &mut Cursor<'_>, exps: &mut [u32]) -> Result<(), PolyError> {
    match cur.peek() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return Err(cur.error("expected a variable")),
    }
    let name = cur.take_while(|c| c.is_ascii_alphanumeric() || c == '_');
    let idx = ring
        .index_of(name)
        .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
    let e = if cur.eat('^') {
        let n = cur.natural()?;
        u32::try_from(n).map_err(|_| cur.error("exponent too large"))?
    } else {
        1
    };
    exps[idx] = exps[idx]
        .checked_add(e)
        .ok_or_else(|| cur.error("exponent too large"))?;
    Ok(())
}
