//! Parser for rational functions in `X` and `T`.
//!
//! Accepts the printed form, e.g. `(1 - X^-1*T) / (1 - T)^2 * (1 - X*T)`, and
//! more generally sums of products of integers, `X`, `T` and parenthesized
//! expressions with integer powers. Everything after a `/` in a product is a
//! divisor, so `a / b * c` means `a / (b c)`. Divisors must be a unit
//! monomial times factors `1 - X^a*T`.

use askzeta_core::bivratfun::BivError;
use askzeta_core::{BivariateRational, LaurentPoly};
use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum ParseError {
    #[error("unexpected {found} at offset {at}")]
    Unexpected { found: String, at: usize },
    #[error("number too large at offset {0}")]
    Number(usize),
    #[error("negative power of a non-monomial at offset {0}")]
    NegativePower(usize),
    #[error(transparent)]
    Division(#[from] BivError),
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    X,
    T,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Open,
    Close,
}

fn lex(s: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let mut out = Vec::new();
    let chars: Vec<(usize, char)> = s.char_indices().collect();
    let mut i = 0;
    while i < chars.len() {
        let (at, c) = chars[i];
        let tok = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].1.is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().map(|&(_, c)| c).collect();
                out.push((Tok::Int(digits.parse().map_err(|_| ParseError::Number(at))?), at));
                continue;
            }
            'X' => Tok::X,
            'T' => Tok::T,
            '+' => Tok::Plus,
            '-' | '\u{2212}' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::Open,
            ')' => Tok::Close,
            other => return Err(ParseError::Unexpected { found: format!("`{other}`"), at }),
        };
        out.push((tok, at));
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |&(_, a)| a)
    }

    fn unexpected(&self) -> ParseError {
        let found = match self.toks.get(self.pos) {
            Some((t, _)) => format!("{t:?}"),
            None => "end of input".to_string(),
        };
        ParseError::Unexpected { found, at: self.offset() }
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<BivariateRational, ParseError> {
        let negate = if self.eat(&Tok::Minus) {
            true
        } else {
            self.eat(&Tok::Plus);
            false
        };
        let mut acc = self.term()?;
        if negate {
            acc = -&acc;
        }
        loop {
            if self.eat(&Tok::Plus) {
                acc = &acc + &self.term()?;
            } else if self.eat(&Tok::Minus) {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<BivariateRational, ParseError> {
        let mut num = self.power()?;
        while self.eat(&Tok::Star) {
            num = &num * &self.power()?;
        }
        if !self.eat(&Tok::Slash) {
            return Ok(num);
        }
        let mut den = self.power()?;
        while self.eat(&Tok::Star) || self.eat(&Tok::Slash) {
            den = &den * &self.power()?;
        }
        Ok(num.checked_div(&den)?)
    }

    fn signed_int(&mut self) -> Result<i64, ParseError> {
        let neg = self.eat(&Tok::Minus);
        let at = self.offset();
        match self.peek().cloned() {
            Some(Tok::Int(v)) => {
                self.pos += 1;
                let v: i64 = v.try_into().map_err(|_| ParseError::Number(at))?;
                Ok(if neg { -v } else { v })
            }
            _ => Err(self.unexpected()),
        }
    }

    fn power(&mut self) -> Result<BivariateRational, ParseError> {
        let at = self.offset();
        let (base, is_x) = self.atom()?;
        if !self.eat(&Tok::Caret) {
            return Ok(base);
        }
        let e = self.signed_int()?;
        if is_x {
            return Ok(BivariateRational::from_laurent(LaurentPoly::x_pow(e)));
        }
        let mut out = BivariateRational::one();
        for _ in 0..e.unsigned_abs() {
            out = &out * &base;
        }
        if e < 0 {
            out = BivariateRational::one().checked_div(&out).map_err(|_| ParseError::NegativePower(at))?;
        }
        Ok(out)
    }

    /// The atom, and whether it is the bare variable `X`.
    fn atom(&mut self) -> Result<(BivariateRational, bool), ParseError> {
        match self.peek().cloned() {
            Some(Tok::Int(v)) => {
                self.pos += 1;
                Ok((BivariateRational::from_laurent(LaurentPoly::constant(v)), false))
            }
            Some(Tok::X) => {
                self.pos += 1;
                Ok((BivariateRational::from_laurent(LaurentPoly::x_pow(1)), true))
            }
            Some(Tok::T) => {
                self.pos += 1;
                Ok((BivariateRational::monomial(1, 0, 1), false))
            }
            Some(Tok::Open) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(&Tok::Close) {
                    return Err(self.unexpected());
                }
                Ok((e, false))
            }
            _ => Err(self.unexpected()),
        }
    }
}

pub fn parse_rational(s: &str) -> Result<BivariateRational, ParseError> {
    let mut p = Parser { toks: lex(s)?, pos: 0, end: s.len() };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.unexpected());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printed_forms_roundtrip() {
        for s in [
            "(1 - X^-1*T) / (1 - T)^2",
            "(1 - 4*X^-1*T) / (1 - X*T) * (1 - T) * (1 - X^-1*T)^2",
            "1 / (1 - X*T)",
            "0",
            "-3*X^2*T",
            "-X^-1 + 1 + X",
        ] {
            assert_eq!(parse_rational(s).unwrap().to_string(), s);
        }
    }

    #[test]
    fn normalizes() {
        let w = parse_rational("(1 - X^-1*T)*(1 - X^-2*T) / (1 - T)^2 * (1 - X*T)").unwrap();
        assert_eq!(w.to_string(), "(1 - X^-2*T - X^-1*T + X^-3*T^2) / (1 - X*T) * (1 - T)^2");
        assert_eq!(parse_rational("(1 - T) / (1 - T)").unwrap().to_string(), "1");
        assert_eq!(parse_rational("X^2*T/X").unwrap().to_string(), "X*T");
        assert_eq!(parse_rational("(1 - T)^-1").unwrap().to_string(), "1 / (1 - T)");
    }

    #[test]
    fn rejects() {
        assert!(parse_rational("1 / (1 - 2*T)").is_err());
        assert!(parse_rational("(1 - T").is_err());
        assert!(parse_rational("1 +").is_err());
        assert!(parse_rational("Y").is_err());
        assert!(parse_rational("1 / 0").is_err());
    }
}
