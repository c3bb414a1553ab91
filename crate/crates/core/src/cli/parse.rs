//! Recursive-descent parser for polynomial expressions with explicit `*` and `^`.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | '+' unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | identifier | '(' expr ')'
//! ```
//!
//! Division is allowed only by nonzero constants.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebra::{MultiPoly, Rational, TPoly};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Op(char),
    End,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let (mut line, mut column) = (1, 1);
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let (l0, c0) = (line, column);
        if c == '\n' {
            line += 1;
            column = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            column += 1;
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            column += i - start;
            out.push(Token {
                tok: Tok::Int(s.parse().expect("digits")),
                line: l0,
                column: c0,
            });
            continue;
        }
        if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            column += i - start;
            out.push(Token {
                tok: Tok::Ident(s),
                line: l0,
                column: c0,
            });
            continue;
        }
        if "+-*/^()".contains(c) {
            out.push(Token {
                tok: Tok::Op(c),
                line: l0,
                column: c0,
            });
            column += 1;
            i += 1;
            continue;
        }
        return Err(Error::Syntax {
            line: l0,
            column: c0,
            message: format!("unexpected character `{c}`"),
        });
    }
    out.push(Token {
        tok: Tok::End,
        line,
        column,
    });
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Token>,
    pos: usize,
    names: &'a [String],
    allow_t: bool,
}

impl Parser<'_> {
    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn err(&self, tok: &Token, message: impl Into<String>) -> Error {
        Error::Syntax {
            line: tok.line,
            column: tok.column,
            message: message.into(),
        }
    }

    fn nvars(&self) -> usize {
        self.names.len()
    }

    fn expr(&mut self) -> Result<MultiPoly> {
        let mut acc = self.term()?;
        loop {
            match self.peek().tok {
                Tok::Op('+') => {
                    self.bump();
                    acc += &self.term()?;
                }
                Tok::Op('-') => {
                    self.bump();
                    acc -= &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.unary()?;
        loop {
            match self.peek().tok {
                Tok::Op('*') => {
                    self.bump();
                    acc = &acc * &self.unary()?;
                }
                Tok::Op('/') => {
                    let at = self.bump();
                    let den = self.unary()?;
                    match den.as_constant() {
                        Some(c) if !c.is_zero() => acc = acc.scale(&c.recip()),
                        Some(_) => return Err(self.err(&at, "division by zero")),
                        None => return Err(self.err(&at, "division is only allowed by a nonzero constant")),
                    }
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<MultiPoly> {
        match self.peek().tok {
            Tok::Op('-') => {
                self.bump();
                Ok(-&self.unary()?)
            }
            Tok::Op('+') => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<MultiPoly> {
        let base = self.atom()?;
        if self.peek().tok != Tok::Op('^') {
            return Ok(base);
        }
        self.bump();
        let t = self.bump();
        match t.tok {
            Tok::Int(ref k) => {
                let k: u32 = u32::try_from(k).map_err(|_| self.err(&t, "exponent too large"))?;
                Ok(base.pow(k))
            }
            _ => Err(self.err(&t, "expected a nonnegative integer exponent")),
        }
    }

    fn atom(&mut self) -> Result<MultiPoly> {
        let t = self.bump();
        match t.tok {
            Tok::Int(ref k) => Ok(MultiPoly::constant(self.nvars(), Rational::from_integer(k.clone()))),
            Tok::Ident(ref name) => {
                if let Some(i) = self.names.iter().position(|n| n == name) {
                    return Ok(MultiPoly::var(self.nvars(), i));
                }
                if name == "t" && !self.allow_t {
                    return Err(Error::ReservedVariable);
                }
                Err(Error::UnknownVariable {
                    name: name.clone(),
                    line: t.line,
                    column: t.column,
                })
            }
            Tok::Op('(') => {
                let inner = self.expr()?;
                let close = self.bump();
                if close.tok != Tok::Op(')') {
                    return Err(self.err(&close, "expected `)`"));
                }
                Ok(inner)
            }
            Tok::End => Err(self.err(&t, "unexpected end of input")),
            Tok::Op(c) => Err(self.err(&t, format!("unexpected `{c}`"))),
        }
    }
}

fn parse_with(text: &str, names: &[String], allow_t: bool) -> Result<MultiPoly> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        names,
        allow_t,
    };
    let out = p.expr()?;
    let end = p.peek().clone();
    match end.tok {
        Tok::End => Ok(out),
        Tok::Ident(_) | Tok::Int(_) | Tok::Op('(') => Err(p.err(&end, "expected an operator; multiplication needs an explicit `*`")),
        _ => Err(p.err(&end, "unexpected trailing input")),
    }
}

/// Parses a polynomial in the given variables. The name `t` is reserved.
pub fn parse_poly(text: &str, names: &[String]) -> Result<MultiPoly> {
    if names.iter().any(|n| n == "t") {
        return Err(Error::ReservedVariable);
    }
    parse_with(text, names, false)
}

/// Parses a polynomial in the parameter `t`.
pub fn parse_tpoly(text: &str) -> Result<TPoly> {
    let p = parse_with(text, &["t".to_string()], true)?;
    let deg = p.terms().map(|(m, _)| m.exponents()[0] as usize).max();
    let mut coeffs = vec![Rational::zero(); deg.map_or(0, |d| d + 1)];
    for (m, c) in p.terms() {
        coeffs[m.exponents()[0] as usize] = c.clone();
    }
    Ok(TPoly::from_coeffs(coeffs))
}

/// Parses `;`-separated components `c_0; …; c_n` of `Σ c_k (-1)^k dx̂_k`.
pub fn parse_form_n(text: &str, names: &[String]) -> Result<Vec<MultiPoly>> {
    let parts: Vec<&str> = text.split(';').collect();
    if parts.len() != names.len() {
        return Err(Error::LengthMismatch {
            expected: names.len(),
            found: parts.len(),
        });
    }
    parts.iter().map(|s| parse_poly(s, names)).collect()
}
