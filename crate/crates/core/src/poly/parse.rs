//! Text syntax for polynomials:
//!
//! ```text
//! poly   := ('+'|'-')? term (('+'|'-') term)*
//! term   := power (('*' | '/' | <juxtaposition>) power)*
//! power  := atom ('^' integer)?
//! atom   := integer | variable | '(' poly ')'
//! ```
//!
//! Division is only allowed by nonzero constants. Variable tokens must match
//! a declared name exactly.

use std::sync::Arc;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::poly::{Polynomial, Ring, RingExt};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = text[start..i].parse().expect("digits");
                out.push((start, Tok::Num(n)));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(text[start..i].to_string())));
                continue;
            }
            _ => {
                return Err(Error::Parse {
                    pos: start,
                    msg: format!("unexpected character `{}`", text[start..].chars().next().unwrap()),
                })
            }
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    ring: &'a Arc<Ring>,
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.1)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|t| t.0).unwrap_or(self.end)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.offset(),
            msg: msg.into(),
        })
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let negate = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                true
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let first = self.term()?;
        let mut acc = if negate { -&first } else { first };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = acc.try_mul(&self.power()?)?;
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let at = self.offset();
                    let d = self.power()?;
                    let c = match d.as_constant() {
                        Some(c) => c,
                        None => {
                            return Err(Error::Parse {
                                pos: at,
                                msg: "division only by constants".into(),
                            })
                        }
                    };
                    let inv = self.ring.field().inv(&c).map_err(|_| Error::Parse {
                        pos: at,
                        msg: "division by zero".into(),
                    })?;
                    acc = acc.scale(&inv);
                }
                Some(Tok::Num(_)) | Some(Tok::Ident(_)) | Some(Tok::LParen) => {
                    acc = acc.try_mul(&self.power()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            match self.peek().cloned() {
                Some(Tok::Num(n)) => {
                    let e: u32 = n.try_into().map_err(|_| Error::ExponentOverflow)?;
                    self.pos += 1;
                    return base.pow(e);
                }
                _ => return self.err("expected a nonnegative integer exponent"),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(self.ring.constant(self.ring.field().from_bigint(&n)))
            }
            Some(Tok::Ident(name)) => match self.ring.var_index(&name) {
                Some(i) => {
                    self.pos += 1;
                    Ok(self.ring.var(i))
                }
                None => Err(Error::UnknownVariable(name)),
            },
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return self.err("expected `)`");
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(t) => self.err(format!("unexpected token {t:?}")),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses `text` into a canonical polynomial of `ring`.
pub fn parse_poly(ring: &Arc<Ring>, text: &str) -> Result<Polynomial> {
    let toks = tokenize(text)?;
    let mut p = Parser {
        ring,
        toks,
        pos: 0,
        end: text.len(),
    };
    if p.toks.is_empty() {
        return p.err("empty polynomial");
    }
    let poly = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{make_ring, Monomial, MonomialOrder, Scalar};

    #[test]
    fn two_term_form() {
        let r = make_ring(32003, &["x", "y"], 2, MonomialOrder::Grevlex).unwrap();
        let p = r.parse("x*T1 + y*T2").unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.degree(), Some(2));
        assert_eq!(p.form_degree(), Some(1));
    }

    #[test]
    fn cancellation_gives_zero() {
        let r = make_ring(32003, &["x"], 0, MonomialOrder::Grevlex).unwrap();
        assert!(r.parse("x - x").unwrap().terms().is_empty());
    }

    #[test]
    fn literals_reduce_into_field() {
        let r = make_ring(5, &["x", "y"], 0, MonomialOrder::Grevlex).unwrap();
        let p = r.parse("x^2*y - 3").unwrap();
        assert_eq!(
            p.terms(),
            &[
                (Monomial::new(vec![2, 1]).unwrap(), Scalar::Mod(1)),
                (Monomial::one(2), Scalar::Mod(2)),
            ]
        );
    }

    #[test]
    fn juxtaposition_and_parentheses() {
        let r = make_ring(0, &["x", "y"], 0, MonomialOrder::Grevlex).unwrap();
        assert_eq!(
            r.parse("2x y").unwrap(),
            r.parse("2*x*y").unwrap()
        );
        assert_eq!(
            r.parse("(x+y)^2").unwrap(),
            r.parse("x^2+2*x*y+y^2").unwrap()
        );
        assert_eq!(r.parse("-(x - y)").unwrap(), r.parse("y - x").unwrap());
        assert_eq!(r.parse("x/2 + x/2").unwrap(), r.var(0));
    }

    #[test]
    fn errors() {
        let r = make_ring(7, &["x"], 0, MonomialOrder::Grevlex).unwrap();
        assert_eq!(
            r.parse("x + z").unwrap_err(),
            Error::UnknownVariable("z".into())
        );
        assert!(matches!(r.parse("x +").unwrap_err(), Error::Parse { .. }));
        assert!(matches!(r.parse("(x").unwrap_err(), Error::Parse { .. }));
        assert!(matches!(r.parse("x $ 1").unwrap_err(), Error::Parse { pos: 2, .. }));
        assert!(matches!(r.parse("").unwrap_err(), Error::Parse { .. }));
        assert!(matches!(r.parse("x/x").unwrap_err(), Error::Parse { .. }));
        assert!(matches!(r.parse("x/7").unwrap_err(), Error::Parse { .. }));
        assert_eq!(
            r.parse("x^99999999999").unwrap_err(),
            Error::ExponentOverflow
        );
    }
}
