//! Differential operator expressions.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' integer)?
//! atom   := integer ('/' integer)? | 'x' | 'Dx' | '(' expr ')'
//! ```
//!
//! Products are non-commutative and evaluated left to right, so `Dx*x`
//! is `x*Dx + 1`.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::field::{BigRat, RatFunc};
use crate::ore::DiffOp;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    X,
    Dx,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn err(pos: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        pos,
        msg: msg.into(),
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let v: BigInt = text[start..i].parse().expect("digits");
                out.push((start, Tok::Int(v)));
                continue;
            }
            b'x' => Tok::X,
            b'D' if bytes.get(i + 1) == Some(&b'x') => {
                out.push((i, Tok::Dx));
                i += 2;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            _ => {
                let ch = text[i..].chars().next().unwrap_or('?');
                return Err(err(i, format!("unexpected character '{ch}'")));
            }
        };
        out.push((i, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |(p, _)| *p)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.at).map(|(_, t)| t.clone());
        self.at += 1;
        t
    }

    fn expr(&mut self) -> Result<DiffOp> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<DiffOp> {
        let mut acc = self.unary()?;
        while self.peek() == Some(&Tok::Star) {
            self.bump();
            acc = &acc * &self.unary()?;
        }
        match self.peek() {
            Some(Tok::Int(_) | Tok::X | Tok::Dx | Tok::LParen) => {
                Err(err(self.pos(), "missing '*' between factors"))
            }
            _ => Ok(acc),
        }
    }

    fn unary(&mut self) -> Result<DiffOp> {
        if self.peek() == Some(&Tok::Minus) {
            self.bump();
            return Ok(-&self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<DiffOp> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.bump();
        let pos = self.pos();
        match self.bump() {
            Some(Tok::Int(e)) => {
                if self.peek() == Some(&Tok::Slash) {
                    return Err(err(pos, "exponent must be a nonnegative integer"));
                }
                let e: u32 = e
                    .try_into()
                    .map_err(|_| err(pos, "exponent too large"))?;
                Ok(base.pow(e))
            }
            Some(Tok::Minus) => Err(err(pos, "negative exponent")),
            _ => Err(err(pos, "exponent must be a nonnegative integer")),
        }
    }

    fn atom(&mut self) -> Result<DiffOp> {
        let pos = self.pos();
        match self.bump() {
            Some(Tok::Int(a)) => {
                if self.peek() != Some(&Tok::Slash) {
                    return Ok(constant(BigRat::from_integer(a)));
                }
                self.bump();
                let dpos = self.pos();
                match self.bump() {
                    Some(Tok::Int(b)) if b != BigInt::from(0) => {
                        Ok(constant(BigRat::new(a, b)))
                    }
                    Some(Tok::Int(_)) => Err(err(dpos, "zero denominator")),
                    _ => Err(err(dpos, "expected integer denominator")),
                }
            }
            Some(Tok::X) => Ok(DiffOp::x()),
            Some(Tok::Dx) => Ok(DiffOp::dx()),
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                let close = self.pos();
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(err(close, "expected ')'")),
                }
            }
            Some(Tok::Slash) => Err(err(pos, "'/' only allowed between integers")),
            Some(_) => Err(err(pos, "expected a number, 'x', 'Dx' or '('")),
            None => Err(err(pos, "unexpected end of input")),
        }
    }
}

fn constant(c: BigRat) -> DiffOp {
    DiffOp::scalar(RatFunc::constant(c))
}

/// Parses `text` into a differential operator, keeping rational constants.
pub fn parse_operator(text: &str) -> Result<DiffOp> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks,
        at: 0,
        end: text.len(),
    };
    if p.peek().is_none() {
        return Err(err(0, "empty expression"));
    }
    let op = p.expr()?;
    match p.peek() {
        None => Ok(op),
        Some(Tok::RParen) => Err(err(p.pos(), "unmatched ')'")),
        Some(_) => Err(err(p.pos(), "unexpected token")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pos_of(text: &str) -> usize {
        match parse_operator(text) {
            Err(Error::Parse { pos, .. }) => pos,
            other => panic!("expected parse error for {text:?}, got {other:?}"),
        }
    }

    #[test]
    fn examples() {
        let l = parse_operator("(x^2+1)*Dx^2 + 2*x*Dx").unwrap();
        assert_eq!(l, DiffOp::from_i64_table(&[&[], &[0, 2], &[1, 0, 1]]));
        let l = parse_operator("Dx - 1").unwrap();
        assert_eq!(l, DiffOp::from_i64_table(&[&[-1], &[1]]));
        assert!(parse_operator("Dx*x - (x*Dx + 1)").unwrap().is_zero());
    }

    #[test]
    fn rationals_and_unary_minus() {
        let l = parse_operator("-3/4*x*Dx - -2").unwrap();
        let want = DiffOp::new(vec![
            RatFunc::from_i64(2),
            RatFunc::from_poly(crate::field::RatPoly::monomial(BigRat::frac(-3, 4), 1)),
        ]);
        assert_eq!(l, want);
        assert_eq!(parse_operator("((x))^0").unwrap(), DiffOp::one());
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(pos_of("Dx x"), 3);
        assert_eq!(pos_of("x^-1"), 2);
        assert_eq!(pos_of("x^1/2"), 2);
        assert_eq!(pos_of("x^y"), 2);
        assert_eq!(pos_of("(x + 1"), 6);
        assert_eq!(pos_of("x + 1)"), 5);
        assert_eq!(pos_of("2*y"), 2);
        assert_eq!(pos_of("1/0"), 2);
        assert_eq!(pos_of(""), 0);
        assert_eq!(pos_of("x +"), 3);
        assert_eq!(pos_of("x/2"), 1);
    }
}
