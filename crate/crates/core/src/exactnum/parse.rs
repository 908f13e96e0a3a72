//! Recursive-descent parser for linear real expressions.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{sqrt_canonical, ExactError, ExactReal, Rational};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(Rational),
    Ident(String),
    Sqrt,
    LParen,
    RParen,
    Plus,
    Minus,
    Star,
    Slash,
}

fn lex(input: &str) -> Result<Vec<Tok>, ExactError> {
    let chars: Vec<char> = input.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '(' => {
                out.push(Tok::LParen);
                i += 1
            }
            ')' => {
                out.push(Tok::RParen);
                i += 1
            }
            '+' => {
                out.push(Tok::Plus);
                i += 1
            }
            '-' | '−' => {
                out.push(Tok::Minus);
                i += 1
            }
            '*' | '·' => {
                out.push(Tok::Star);
                i += 1
            }
            '/' => {
                out.push(Tok::Slash);
                i += 1
            }
            '√' => {
                out.push(Tok::Sqrt);
                i += 1
            }
            d if d.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let int_part: String = chars[start..i].iter().collect();
                let mut value = Rational::from_integer(int_part.parse::<BigInt>().unwrap());
                if i < chars.len() && chars[i] == '.' {
                    i += 1;
                    let fs = i;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                    let frac: String = chars[fs..i].iter().collect();
                    if !frac.is_empty() {
                        let num: BigInt = frac.parse().unwrap();
                        let den = num_traits::pow(BigInt::from(10), frac.len());
                        value += Rational::new(num, den);
                    }
                }
                out.push(Tok::Num(value));
            }
            a if a.is_alphabetic() || a == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                let word: String = chars[start..i].iter().collect();
                if word == "sqrt" {
                    out.push(Tok::Sqrt);
                } else {
                    out.push(Tok::Ident(word));
                }
            }
            other => {
                return Err(ExactError::Parse(format!(
                    "unexpected character {other:?} in {input:?}"
                )))
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    src: &'a str,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn err(&self, msg: &str) -> ExactError {
        ExactError::Parse(format!("{msg} in {:?}", self.src))
    }

    fn expr(&mut self) -> Result<ExactReal, ExactError> {
        let mut acc = ExactReal::zero();
        let mut sign = Rational::one();
        match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                sign = -sign;
            }
            Some(Tok::Plus) => self.pos += 1,
            _ => {}
        }
        loop {
            let t = self.term()?;
            acc = acc.add_scale(&sign, &t);
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    sign = Rational::one();
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    sign = -Rational::one();
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<ExactReal, ExactError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    let rhs = self.factor()?;
                    acc = match (acc.as_rational(), rhs.as_rational()) {
                        (Some(q), _) => rhs.scale(&q),
                        (_, Some(q)) => acc.scale(&q),
                        _ => return Err(self.err("product of two irrational factors")),
                    };
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let rhs = self.factor()?;
                    match rhs.as_rational() {
                        Some(q) if !q.is_zero() => acc = acc.scale(&q.recip()),
                        _ => return Err(self.err("division by zero or by an irrational")),
                    }
                }
                // implicit product such as `2x` or `3√2`
                Some(Tok::Ident(_)) | Some(Tok::Sqrt) | Some(Tok::LParen)
                    if acc.as_rational().is_some() =>
                {
                    let q = acc.as_rational().unwrap();
                    let rhs = self.factor()?;
                    acc = rhs.scale(&q);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<ExactReal, ExactError> {
        match self.next() {
            Some(Tok::Num(q)) => Ok(ExactReal::rational(q)),
            Some(Tok::Ident(name)) => Ok(ExactReal::symbol(name)),
            Some(Tok::Minus) => Ok(-self.factor()?),
            Some(Tok::Sqrt) => {
                let arg = self.factor()?;
                let q = arg
                    .as_rational()
                    .ok_or_else(|| self.err("square root of an irrational"))?;
                sqrt_canonical(&q)
            }
            Some(Tok::LParen) => {
                let e = self.expr()?;
                match self.next() {
                    Some(Tok::RParen) => Ok(e),
                    _ => Err(self.err("missing ')'")),
                }
            }
            _ => Err(self.err("expected a number, symbol, sqrt or '('")),
        }
    }
}

pub(super) fn parse_expr(input: &str) -> Result<ExactReal, ExactError> {
    let toks = lex(input)?;
    if toks.is_empty() {
        return Err(ExactError::Parse("empty expression".into()));
    }
    let mut p = Parser { toks, pos: 0, src: input };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input"));
    }
    Ok(e)
}

/// Parses a rational literal: `p`, `p/q`, or a finite decimal, optionally signed.
pub fn parse_rational(input: &str) -> Result<Rational, ExactError> {
    let e = parse_expr(input)?;
    e.as_rational()
        .ok_or_else(|| ExactError::Parse(format!("{input:?} is not rational")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, Generator};

    #[test]
    fn parses_linear_forms() {
        let e = parse_expr("3/2 + 2*x - sqrt(8)").unwrap();
        assert_eq!(e.coeff(&Generator::One), rat(3, 2));
        assert_eq!(e.coeff(&Generator::symbol("x")), rat(2, 1));
        assert_eq!(e.coeff(&Generator::Radical(2u32.into())), rat(-2, 1));
        assert_eq!(parse_expr("2x").unwrap(), parse_expr("2*x").unwrap());
        assert_eq!(parse_expr("-(x - y)/2").unwrap(), parse_expr("y/2 - x/2").unwrap());
        assert_eq!(parse_rational("0.25").unwrap(), rat(1, 4));
        assert_eq!(parse_rational("-7/14").unwrap(), rat(-1, 2));
    }

    #[test]
    fn rejects_nonlinear_and_garbage() {
        assert!(parse_expr("x*y").is_err());
        assert!(parse_expr("x/y").is_err());
        assert!(parse_expr("1/0").is_err());
        assert!(parse_expr("").is_err());
        assert!(parse_expr("2 +").is_err());
        assert!(parse_expr("x $ y").is_err());
        assert!(parse_rational("x").is_err());
    }
}
