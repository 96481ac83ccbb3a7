//! Recursive-descent parser for the expression grammar: integers,
//! identifiers, `+ - * / ^`, unary minus, parentheses. `^` takes a
//! nonnegative integer literal. Whitespace is insignificant.

use super::polynomial::Polynomial;
use super::ratfun::RationalFunction;
use super::{Rational, Vars};
use crate::error::{Error, Result};
use num_bigint::BigInt;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>> {
    let mut out = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let pos = i;
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
            }
            '+' => {
                out.push((Tok::Plus, pos));
                i += 1;
            }
            '-' => {
                out.push((Tok::Minus, pos));
                i += 1;
            }
            '*' => {
                out.push((Tok::Star, pos));
                i += 1;
            }
            '/' => {
                out.push((Tok::Slash, pos));
                i += 1;
            }
            '^' => {
                out.push((Tok::Caret, pos));
                i += 1;
            }
            '(' => {
                out.push((Tok::LParen, pos));
                i += 1;
            }
            ')' => {
                out.push((Tok::RParen, pos));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = text[start..i].parse().expect("digits parse");
                out.push((Tok::Int(n), pos));
            }
            c if c.is_ascii_alphabetic() => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((Tok::Ident(text[start..i].to_string()), pos));
            }
            other => {
                return Err(Error::Parse {
                    pos,
                    msg: format!("unexpected character `{other}`"),
                });
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    idx: usize,
    vars: &'a Vars,
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.idx).map(|(t, _)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.idx).map_or(self.end, |(_, p)| *p)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.idx).map(|(t, _)| t.clone());
        self.idx += 1;
        t
    }

    fn expr(&mut self) -> Result<RationalFunction> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RationalFunction> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    acc = acc.mul(&self.unary()?);
                }
                Some(Tok::Slash) => {
                    let pos = self.pos();
                    self.bump();
                    let rhs = self.unary()?;
                    if rhs.is_zero() {
                        return Err(Error::Parse {
                            pos,
                            msg: "division by the zero polynomial".into(),
                        });
                    }
                    acc = acc.div(&rhs)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<RationalFunction> {
        if matches!(self.peek(), Some(Tok::Minus)) {
            self.bump();
            return Ok(self.unary()?.neg());
        }
        self.power()
    }

    fn power(&mut self) -> Result<RationalFunction> {
        let base = self.atom()?;
        if matches!(self.peek(), Some(Tok::Caret)) {
            self.bump();
            let pos = self.pos();
            match self.bump() {
                Some(Tok::Int(n)) => {
                    let e: u32 = n.try_into().map_err(|_| Error::Parse {
                        pos,
                        msg: "exponent out of range".into(),
                    })?;
                    return Ok(base.pow(e));
                }
                _ => {
                    return Err(Error::Parse {
                        pos,
                        msg: "`^` requires a nonnegative integer literal".into(),
                    })
                }
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<RationalFunction> {
        let pos = self.pos();
        match self.bump() {
            Some(Tok::Int(n)) => Ok(RationalFunction::constant(
                self.vars.clone(),
                Rational::from_integer(n),
            )),
            Some(Tok::Ident(name)) => match self.vars.resolve(&name) {
                Some(i) => Ok(RationalFunction::from_polynomial(Polynomial::var(
                    self.vars.clone(),
                    i,
                ))),
                None => Err(Error::UnknownIdentifier { name, pos }),
            },
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(Error::Parse {
                        pos: self.pos(),
                        msg: "expected `)`".into(),
                    }),
                }
            }
            other => Err(Error::Parse {
                pos,
                msg: match other {
                    Some(t) => format!("unexpected token {t:?}"),
                    None => "unexpected end of input".into(),
                },
            }),
        }
    }
}

/// Parses `text` into a canonical-form rational function over `vars`.
pub fn parse_expression(text: &str, vars: &Vars) -> Result<RationalFunction> {
    let toks = tokenize(text)?;
    let mut p = Parser {
        toks,
        idx: 0,
        vars,
        end: text.len(),
    };
    let out = p.expr()?;
    if p.idx != p.toks.len() {
        return Err(Error::Parse {
            pos: p.pos(),
            msg: "trailing input".into(),
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbolic::rat_int;

    fn vxy() -> Vars {
        Vars::new(["x", "y"])
    }

    #[test]
    fn zero_parses_to_zero_function() {
        let f = parse_expression("0", &vxy()).unwrap();
        assert!(f.is_zero());
    }

    #[test]
    fn cancellation_happens_at_parse_time() {
        // oracle: cross-multiply against the unreduced pair (x^2 - 1, x - 1)
        let vars = Vars::new(["x"]);
        let f = parse_expression("(x^2-1)/(x-1)", &vars).unwrap();
        let num = parse_expression("x^2-1", &vars).unwrap();
        let den = parse_expression("x-1", &vars).unwrap();
        assert_eq!(
            RationalFunction::from_polynomial(f.numerator().clone()).mul(&den),
            RationalFunction::from_polynomial(f.denominator().clone()).mul(&num)
        );
        assert_eq!(f, parse_expression("x+1", &vars).unwrap());
    }

    #[test]
    fn x_over_x_is_one() {
        let f = parse_expression("x/x", &vxy()).unwrap();
        assert_eq!(f, RationalFunction::one(vxy()));
    }

    #[test]
    fn precedence_and_unary_minus() {
        let f = parse_expression("-x^2 + 3*x*y - 1/2", &vxy()).unwrap();
        let x = RationalFunction::var(vxy(), 0);
        let y = RationalFunction::var(vxy(), 1);
        let expect =
            x.pow(2)
                .neg()
                .add(&x.mul(&y).scale(&rat_int(3)))
                .sub(&RationalFunction::constant(
                    vxy(),
                    crate::symbolic::rat(1, 2),
                ));
        assert_eq!(f, expect);
    }

    #[test]
    fn error_positions() {
        match parse_expression("x + ", &vxy()) {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("expected parse error, got {other:?}"),
        }
        match parse_expression("x + w", &vxy()) {
            Err(Error::UnknownIdentifier { name, pos }) => {
                assert_eq!(name, "w");
                assert_eq!(pos, 4);
            }
            other => panic!("expected unknown identifier, got {other:?}"),
        }
        match parse_expression("x ^ y", &vxy()) {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(matches!(
            parse_expression("1/(x-x)", &vxy()),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn canonical_aliases() {
        let vars = Vars::canonical(2);
        let f = parse_expression("x*y + x1*x2", &vars).unwrap();
        let g = parse_expression("2*x1*x2", &vars).unwrap();
        assert_eq!(f, g);
    }

    #[test]
    fn display_round_trips_through_parser() {
        let vars = Vars::new(["x", "y", "z"]);
        let f = parse_expression("(3*x^2 - y/2 + 1)/(z - x*y)", &vars).unwrap();
        let g = parse_expression(&f.to_string(), &vars).unwrap();
        assert_eq!(f, g);
    }
}
