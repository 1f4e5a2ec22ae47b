//! Text grammar for polynomial I/O.
//!
//! Grammar: integer and rational literals (`3`, `2/3`), variables from a
//! declared set, binary `+ - * ^`, parentheses. A leading `-` is allowed on
//! the first term and inside parentheses. Printing uses the canonical term
//! order, so `parse` then `print` is a normal form.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::base::Rational;
use crate::error::{Error, Result};
use crate::mpoly::{APoly, KPoly, MPoly, VarSet};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(Rational),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

fn err_at(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, col, msg: msg.into() }
}

fn lex(input: &str) -> Result<Vec<Spanned>> {
    let mut out = Vec::new();
    let mut line = 1usize;
    let mut col = 1usize;
    let chars: Vec<char> = input.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let (tline, tcol) = (line, col);
        let mut advance = |i: &mut usize, line: &mut usize, col: &mut usize| {
            if chars[*i] == '\n' {
                *line += 1;
                *col = 1;
            } else {
                *col += 1;
            }
            *i += 1;
        };
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                advance(&mut i, &mut line, &mut col);
            }
            '+' => {
                out.push(Spanned { tok: Tok::Plus, line: tline, col: tcol });
                advance(&mut i, &mut line, &mut col);
            }
            '-' => {
                out.push(Spanned { tok: Tok::Minus, line: tline, col: tcol });
                advance(&mut i, &mut line, &mut col);
            }
            '*' => {
                out.push(Spanned { tok: Tok::Star, line: tline, col: tcol });
                advance(&mut i, &mut line, &mut col);
            }
            '^' => {
                out.push(Spanned { tok: Tok::Caret, line: tline, col: tcol });
                advance(&mut i, &mut line, &mut col);
            }
            '(' => {
                out.push(Spanned { tok: Tok::LParen, line: tline, col: tcol });
                advance(&mut i, &mut line, &mut col);
            }
            ')' => {
                out.push(Spanned { tok: Tok::RParen, line: tline, col: tcol });
                advance(&mut i, &mut line, &mut col);
            }
            '0'..='9' => {
                let mut digits = String::new();
                while i < chars.len() && chars[i].is_ascii_digit() {
                    digits.push(chars[i]);
                    advance(&mut i, &mut line, &mut col);
                }
                let numer: BigInt = digits.parse().unwrap();
                // a '/' directly after an integer continues a rational literal
                if i < chars.len() && chars[i] == '/' {
                    advance(&mut i, &mut line, &mut col);
                    let (dline, dcol) = (line, col);
                    let mut dens = String::new();
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        dens.push(chars[i]);
                        advance(&mut i, &mut line, &mut col);
                    }
                    if dens.is_empty() {
                        return Err(err_at(dline, dcol, "expected denominator digits after '/'"));
                    }
                    let denom: BigInt = dens.parse().unwrap();
                    if denom.is_zero() {
                        return Err(err_at(dline, dcol, "zero denominator"));
                    }
                    out.push(Spanned {
                        tok: Tok::Num(Rational::new(numer, denom)),
                        line: tline,
                        col: tcol,
                    });
                } else {
                    out.push(Spanned {
                        tok: Tok::Num(Rational::from_integer(numer)),
                        line: tline,
                        col: tcol,
                    });
                }
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut name = String::new();
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    name.push(chars[i]);
                    advance(&mut i, &mut line, &mut col);
                }
                out.push(Spanned { tok: Tok::Ident(name), line: tline, col: tcol });
            }
            other => return Err(err_at(tline, tcol, format!("unexpected character {other:?}"))),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Spanned>,
    pos: usize,
    vars: &'a VarSet,
    end: (usize, usize),
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Spanned> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Spanned> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn here(&self) -> (usize, usize) {
        self.peek().map(|t| (t.line, t.col)).unwrap_or(self.end)
    }

    fn expr(&mut self) -> Result<KPoly> {
        let negate = matches!(self.peek().map(|t| &t.tok), Some(Tok::Minus));
        if negate {
            self.next();
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            match self.peek().map(|t| t.tok.clone()) {
                Some(Tok::Plus) => {
                    self.next();
                    let t = self.term()?;
                    acc = acc.add(&t);
                }
                Some(Tok::Minus) => {
                    self.next();
                    let t = self.term()?;
                    acc = acc.sub(&t);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<KPoly> {
        let mut acc = self.factor()?;
        while matches!(self.peek().map(|t| &t.tok), Some(Tok::Star)) {
            self.next();
            let f = self.factor()?;
            acc = acc.mul(&f);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<KPoly> {
        let base = self.atom()?;
        if matches!(self.peek().map(|t| &t.tok), Some(Tok::Caret)) {
            self.next();
            let (line, col) = self.here();
            match self.next() {
                Some(Spanned { tok: Tok::Num(n), .. }) if n.is_integer() && n >= Rational::zero() => {
                    let e: u32 = n.to_integer().try_into().map_err(|_| {
                        err_at(line, col, "exponent too large")
                    })?;
                    Ok(base.pow(e))
                }
                _ => Err(err_at(line, col, "expected a non-negative integer exponent after '^'")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<KPoly> {
        let (line, col) = self.here();
        match self.next() {
            Some(Spanned { tok: Tok::Num(n), .. }) => Ok(KPoly::constant(self.vars, n)),
            Some(Spanned { tok: Tok::Ident(name), line, col }) => {
                MPoly::var(self.vars, &name).map_err(|_| {
                    err_at(line, col, format!("unknown variable {name:?} (declared: {})", self.vars))
                })
            }
            Some(Spanned { tok: Tok::LParen, .. }) => {
                let inner = self.expr()?;
                let (l2, c2) = self.here();
                match self.next() {
                    Some(Spanned { tok: Tok::RParen, .. }) => Ok(inner),
                    _ => Err(err_at(l2, c2, "expected ')'")),
                }
            }
            Some(Spanned { tok, line, col }) => {
                Err(err_at(line, col, format!("expected operand, found {tok:?}")))
            }
            None => Err(err_at(line, col, "unexpected end of input")),
        }
    }
}

/// Parse a polynomial over `Q` in the declared variables.
pub fn parse_kpoly(input: &str, vars: &VarSet) -> Result<KPoly> {
    let toks = lex(input)?;
    let lines = input.lines().count().max(1);
    let last_len = input.lines().last().map_or(0, |l| l.len());
    let mut p = Parser { toks, pos: 0, vars, end: (lines, last_len + 1) };
    let poly = p.expr()?;
    if let Some(t) = p.peek() {
        return Err(err_at(t.line, t.col, format!("trailing input, found {:?}", t.tok)));
    }
    Ok(poly)
}

/// Parse a polynomial with coefficients in the valuation ring: the grammar
/// variable `x` is absorbed into the coefficients, the rest must belong to
/// `vars`.
pub fn parse_apoly(input: &str, vars: &VarSet) -> Result<APoly> {
    assert!(!vars.contains("x"), "the uniformizer x is not a polynomial variable");
    let k = parse_kpoly(input, &vars.prepend("x"))?;
    APoly::from_x_kpoly(&k)
}

/// Canonical string form of a polynomial over `A`, with the uniformizer
/// expanded as the variable `x`. Requires every coefficient to be an honest
/// polynomial in `x` (always the case for data built from grammar input).
pub fn render_apoly(p: &APoly) -> Result<String> {
    Ok(p.to_x_kpoly()?.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_print_round_trip() {
        let vars = VarSet::new(&["y", "z"]);
        for src in ["x^2*z + 1", "2*y", "y^2 - 1/3*y*z + 4", "-y + 2/7"] {
            let p = parse_apoly(src, &vars).unwrap();
            let printed = render_apoly(&p).unwrap();
            let again = parse_apoly(&printed, &vars).unwrap();
            assert_eq!(p, again, "round trip failed for {src}");
        }
    }

    #[test]
    fn canonical_order_is_descending_graded_lex() {
        let vars = VarSet::new(&["y", "z"]);
        let p = parse_apoly("1 + x^2*z", &vars).unwrap();
        assert_eq!(render_apoly(&p).unwrap(), "x^2*z + 1");
    }

    #[test]
    fn double_star_is_an_error_with_location() {
        let vars = VarSet::new(&["y"]);
        match parse_apoly("2**y", &vars) {
            Err(Error::Parse { line: 1, col, .. }) => assert_eq!(col, 3),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn unknown_variable_is_reported() {
        let vars = VarSet::new(&["y"]);
        match parse_kpoly("y + w", &vars) {
            Err(Error::Parse { col, msg, .. }) => {
                assert_eq!(col, 5);
                assert!(msg.contains("unknown variable"));
            }
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn rational_literals_and_parens() {
        let vars = VarSet::new(&["y"]);
        let p = parse_kpoly("2/3*(y + 1)^2", &vars).unwrap();
        assert_eq!(p.to_string(), "2/3*y^2 + 4/3*y + 2/3");
    }
}
