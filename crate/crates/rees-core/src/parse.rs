//! Text form of polynomials.
//!
//! Grammar (whitespace insignificant, `*` separators required):
//!
//! ```text
//! expression ::= term {('+'|'-') term}
//! term       ::= [sign] [integer ['/' integer]] {'*' factor}
//! factor     ::= var ['^' integer]
//! var        ::= ('x'|'T') integer
//! ```
//!
//! A term must contain a coefficient or at least one factor. Variable
//! indices run 1..=n. `parse` then `format` then `parse` is the identity on
//! normal forms.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::field::Coeff;
use crate::monomial::{Monomial, Ring};
use crate::poly::Polynomial;

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Lexer<'a> {
        Lexer {
            src: src.as_bytes(),
            pos: 0,
        }
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

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    /// Digits only (no sign); at least one digit required.
    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected an integer"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(text.parse::<BigInt>().unwrap())
    }

    fn small_integer(&mut self, what: &str, max: u64) -> Result<u64> {
        use num_traits::ToPrimitive;
        let v = self.integer()?;
        match v.to_u64() {
            Some(v) if v <= max => Ok(v),
            _ => Err(self.err(format!("{what} too large"))),
        }
    }
}

/// Parse `text` as a polynomial over `ring`.
pub fn parse_polynomial(text: &str, ring: Ring) -> Result<Polynomial> {
    let mut lx = Lexer::new(text);
    let mut terms: Vec<(Monomial, Coeff)> = Vec::new();

    let mut pending_sign = match lx.peek() {
        Some(b'+') => {
            lx.bump();
            false
        }
        Some(b'-') => {
            lx.bump();
            true
        }
        _ => false,
    };

    loop {
        let (m, c) = parse_term(&mut lx, &ring)?;
        let c = if pending_sign { ring.field.neg(&c) } else { c };
        terms.push((m, c));
        match lx.peek() {
            None => break,
            Some(b'+') => {
                lx.bump();
                pending_sign = false;
            }
            Some(b'-') => {
                lx.bump();
                pending_sign = true;
            }
            Some(ch) => return Err(lx.err(format!("expected '+' or '-' before '{}'", ch as char))),
        }
        // A term may repeat a sign: "x1 + -x2".
        match lx.peek() {
            Some(b'+') => {
                lx.bump();
            }
            Some(b'-') => {
                lx.bump();
                pending_sign = !pending_sign;
            }
            _ => {}
        }
    }

    Ok(Polynomial::from_terms(ring, terms))
}

fn parse_term(lx: &mut Lexer<'_>, ring: &Ring) -> Result<(Monomial, Coeff)> {
    let mut coeff: Option<Coeff> = None;
    let mut mono = Monomial::one();
    let mut saw_factor = false;

    // Optional leading numeric coefficient.
    if matches!(lx.peek(), Some(c) if c.is_ascii_digit()) {
        let num = lx.integer()?;
        let den = if lx.peek() == Some(b'/') {
            lx.bump();
            lx.integer()?
        } else {
            BigInt::one()
        };
        let c = ring.field.from_fraction(&num, &den).map_err(|e| match e {
            Error::NonInvertibleDenominator { den, modulus } => Error::Parse {
                pos: lx.pos,
                msg: format!("denominator {den} is not invertible modulo {modulus}"),
            },
            other => other,
        })?;
        coeff = Some(c);
        // Factors, if any, must follow a '*'.
        while lx.peek() == Some(b'*') {
            lx.bump();
            parse_factor(lx, ring, &mut mono)?;
            saw_factor = true;
        }
    } else {
        // Leading factor, then '*'-separated factors.
        parse_factor(lx, ring, &mut mono)?;
        saw_factor = true;
        while lx.peek() == Some(b'*') {
            lx.bump();
            parse_factor(lx, ring, &mut mono)?;
        }
    }

    if coeff.is_none() && !saw_factor {
        return Err(lx.err("empty term"));
    }
    Ok((mono, coeff.unwrap_or_else(|| ring.field.one())))
}

fn parse_factor(lx: &mut Lexer<'_>, ring: &Ring, mono: &mut Monomial) -> Result<()> {
    let idx = match lx.peek() {
        Some(b'x') => {
            lx.bump();
            let i = lx.small_integer("variable index", usize::MAX as u64)? as usize;
            if i < 1 || i > ring.n {
                return Err(lx.err(format!("variable index x{i} out of range 1..={}", ring.n)));
            }
            ring.x(i - 1)
        }
        Some(b'T') => {
            lx.bump();
            let i = lx.small_integer("variable index", usize::MAX as u64)? as usize;
            if i < 1 || i > ring.n {
                return Err(lx.err(format!("variable index T{i} out of range 1..={}", ring.n)));
            }
            ring.t(i - 1)
        }
        Some(ch) => {
            return Err(lx.err(format!(
                "expected a variable ('x' or 'T'), found '{}'",
                ch as char
            )))
        }
        None => return Err(lx.err("expected a variable at end of input")),
    };
    let e = if lx.peek() == Some(b'^') {
        lx.bump();
        lx.small_integer("exponent", u16::MAX as u64)? as u16
    } else {
        1
    };
    let new = mono.exp(idx) as u32 + e as u32;
    if new > u16::MAX as u32 {
        return Err(lx.err("exponent too large"));
    }
    mono.set_exp(idx, new as u16);
    Ok(())
}
