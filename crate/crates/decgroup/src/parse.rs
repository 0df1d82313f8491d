//! Text grammar for polynomial systems, plus the canonical printer.
//!
//! System files:
//!
//! ```text
//! vars: x1 x2 x3 x4
//! # comment
//! x1*x2
//! x2 + x1 + 1
//! x3*(x3 + 1)
//! x3 + x4 - 1
//! ```
//!
//! The first non-blank line declares the variables; every later non-blank,
//! non-`#` line is one polynomial over `+ - * ^ ( )` with integer or `p/q`
//! literals. Multiplication is always explicit (`2*x1`, never `2x1`).
//! Division is only by nonzero rational constants.
//!
//! Point files share the `vars:` header and then hold one point per line,
//! whitespace-separated rational coordinates.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::monomial::MonomialOrder;
use crate::poly::Polynomial;
use crate::rational::Rat;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

impl ParseError {
    fn new(line: usize, col: usize, msg: impl Into<String>) -> Self {
        ParseError { line, col, msg: msg.into() }
    }
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.col, self.msg)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
    line: usize,
    col: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str, line: usize) -> Self {
        Lexer { src: src.as_bytes(), pos: 0, line, col: 1 }
    }

    fn error(&self, msg: impl Into<String>) -> ParseError {
        ParseError::new(self.line, self.col, msg)
    }

    fn tokens(mut self) -> Result<Vec<(Tok, usize)>, ParseError> {
        let mut out = Vec::new();
        while self.pos < self.src.len() {
            let c = self.src[self.pos];
            let col = self.col;
            match c {
                b' ' | b'\t' | b'\r' => {
                    self.pos += 1;
                    self.col += 1;
                }
                b'+' => self.push_sym(Tok::Plus, col, &mut out),
                b'-' => self.push_sym(Tok::Minus, col, &mut out),
                b'*' => self.push_sym(Tok::Star, col, &mut out),
                b'/' => self.push_sym(Tok::Slash, col, &mut out),
                b'^' => self.push_sym(Tok::Caret, col, &mut out),
                b'(' => self.push_sym(Tok::LParen, col, &mut out),
                b')' => self.push_sym(Tok::RParen, col, &mut out),
                b'0'..=b'9' => {
                    let start = self.pos;
                    while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                        self.pos += 1;
                        self.col += 1;
                    }
                    let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                    out.push((Tok::Int(text.parse().unwrap()), col));
                }
                b'A'..=b'Z' | b'a'..=b'z' => {
                    let start = self.pos;
                    while self.pos < self.src.len()
                        && (self.src[self.pos].is_ascii_alphanumeric()
                            || self.src[self.pos] == b'_')
                    {
                        self.pos += 1;
                        self.col += 1;
                    }
                    let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                    out.push((Tok::Ident(text.to_string()), col));
                }
                _ => {
                    return Err(self.error(format!(
                        "unexpected character '{}'",
                        char::from(c)
                    )))
                }
            }
        }
        Ok(out)
    }

    fn push_sym(&mut self, t: Tok, col: usize, out: &mut Vec<(Tok, usize)>) {
        out.push((t, col));
        self.pos += 1;
        self.col += 1;
    }
}

struct ExprParser<'a> {
    toks: &'a [(Tok, usize)],
    pos: usize,
    line: usize,
    names: &'a [String],
    arity: usize,
    order: MonomialOrder,
}

impl<'a> ExprParser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.toks
            .get(self.pos)
            .map(|(_, c)| *c)
            .unwrap_or_else(|| self.toks.last().map(|(_, c)| c + 1).unwrap_or(1))
    }

    fn error(&self, msg: impl Into<String>) -> ParseError {
        ParseError::new(self.line, self.col(), msg)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut negate = false;
        match self.peek() {
            Some(Tok::Minus) => {
                negate = true;
                self.bump();
            }
            Some(Tok::Plus) => {
                self.bump();
            }
            _ => {}
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    let t = self.term()?;
                    acc = acc.add(&t);
                }
                Some(Tok::Minus) => {
                    self.bump();
                    let t = self.term()?;
                    acc = acc.sub(&t);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    let f = self.factor()?;
                    acc = acc.mul(&f);
                }
                Some(Tok::Slash) => {
                    let col = self.col();
                    self.bump();
                    let f = self.factor()?;
                    match f.as_constant() {
                        Some(c) if !c.is_zero() => {
                            acc = acc.scale(&(Rat::one() / c));
                        }
                        Some(_) => {
                            return Err(ParseError::new(self.line, col, "division by zero"))
                        }
                        None => {
                            return Err(ParseError::new(
                                self.line,
                                col,
                                "division by a non-constant (only rational literal coefficients allowed)",
                            ))
                        }
                    }
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.base()?;
        if let Some(Tok::Caret) = self.peek() {
            self.bump();
            match self.bump() {
                Some(Tok::Int(e)) => {
                    let e: u32 = e
                        .try_into()
                        .map_err(|_| self.error("exponent too large"))?;
                    return Ok(base.pow(e));
                }
                _ => {
                    self.pos = self.pos.saturating_sub(1);
                    return Err(self.error("expected a non-negative integer exponent after '^'"));
                }
            }
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<Polynomial, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Minus) => {
                self.bump();
                Ok(self.base()?.neg())
            }
            Some(Tok::LParen) => {
                self.bump();
                let inner = self.expr()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => {
                        self.pos = self.pos.saturating_sub(1);
                        Err(self.error("expected ')'"))
                    }
                }
            }
            Some(Tok::Ident(name)) => {
                let col = self.col();
                self.bump();
                match self.names.iter().position(|n| *n == name) {
                    Some(i) => Ok(Polynomial::variable(i, self.arity, self.order.clone())),
                    None => Err(ParseError::new(
                        self.line,
                        col,
                        format!("undeclared variable '{name}'"),
                    )),
                }
            }
            Some(Tok::Int(n)) => {
                self.bump();
                Ok(Polynomial::constant(
                    Rat::from_integer(n),
                    self.arity,
                    self.order.clone(),
                ))
            }
            _ => Err(self.error("expected a variable, number, or '('")),
        }
    }
}

fn valid_ident(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn parse_vars_line(line: &str, lineno: usize) -> Result<Vec<String>, ParseError> {
    let rest = line
        .trim_start()
        .strip_prefix("vars:")
        .ok_or_else(|| ParseError::new(lineno, 1, "expected a 'vars:' declaration line"))?;
    let mut names = Vec::new();
    for word in rest.split_whitespace() {
        if !valid_ident(word) {
            return Err(ParseError::new(
                lineno,
                1,
                format!("invalid variable name '{word}'"),
            ));
        }
        if names.iter().any(|n| n == word) {
            return Err(ParseError::new(
                lineno,
                1,
                format!("duplicate variable '{word}'"),
            ));
        }
        names.push(word.to_string());
    }
    if names.is_empty() {
        return Err(ParseError::new(lineno, 1, "no variables declared"));
    }
    Ok(names)
}

fn is_skippable(line: &str) -> bool {
    let t = line.trim();
    t.is_empty() || t.starts_with('#')
}

/// Parses one polynomial expression against declared variables.
pub fn parse_poly(
    text: &str,
    names: &[String],
    order: &MonomialOrder,
    lineno: usize,
) -> Result<Polynomial, ParseError> {
    let toks = Lexer::new(text, lineno).tokens()?;
    if toks.is_empty() {
        return Err(ParseError::new(lineno, 1, "empty polynomial"));
    }
    let mut p = ExprParser {
        toks: &toks,
        pos: 0,
        line: lineno,
        names,
        arity: names.len(),
        order: order.clone(),
    };
    let poly = p.expr()?;
    if p.pos != toks.len() {
        return Err(p.error("unexpected trailing input (multiplication must be explicit)"));
    }
    Ok(poly)
}

/// Parses a whole system file: the variable list and one polynomial per
/// statement line.
pub fn parse_system(
    text: &str,
    order: &MonomialOrder,
) -> Result<(Vec<String>, Vec<Polynomial>), ParseError> {
    let mut lines = text.lines().enumerate();
    let (vars_lineno, names) = loop {
        match lines.next() {
            Some((i, line)) if is_skippable(line) => {
                let _ = i;
                continue;
            }
            Some((i, line)) => break (i + 1, parse_vars_line(line, i + 1)?),
            None => return Err(ParseError::new(1, 1, "empty input")),
        }
    };
    let _ = vars_lineno;
    let mut polys = Vec::new();
    for (i, line) in lines {
        if is_skippable(line) {
            continue;
        }
        polys.push(parse_poly(line, &names, order, i + 1)?);
    }
    Ok((names, polys))
}

/// Parses a point file: `vars:` header then one rational row per line.
pub fn parse_points(text: &str) -> Result<(Vec<String>, Vec<Vec<Rat>>), ParseError> {
    let mut lines = text.lines().enumerate();
    let names = loop {
        match lines.next() {
            Some((_, line)) if is_skippable(line) => continue,
            Some((i, line)) => break parse_vars_line(line, i + 1)?,
            None => return Err(ParseError::new(1, 1, "empty input")),
        }
    };
    let mut points = Vec::new();
    for (i, line) in lines {
        if is_skippable(line) {
            continue;
        }
        let mut row = Vec::new();
        for word in line.split_whitespace() {
            let r = crate::rational::parse_rat(word).ok_or_else(|| {
                ParseError::new(i + 1, 1, format!("invalid rational literal '{word}'"))
            })?;
            row.push(r);
        }
        if row.len() != names.len() {
            return Err(ParseError::new(
                i + 1,
                1,
                format!("expected {} coordinates, found {}", names.len(), row.len()),
            ));
        }
        points.push(row);
    }
    Ok((names, points))
}

/// Canonical text form: terms in descending order, explicit `*`, `^` only
/// for exponents above 1, e.g. `x4^2 - 3*x4 + 2`.
pub fn format_poly(p: &Polynomial, names: &[String]) -> String {
    assert_eq!(names.len(), p.arity(), "name list arity mismatch");
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (m, c)) in p.terms().iter().enumerate() {
        let neg = c.is_negative();
        if idx == 0 {
            if neg {
                out.push('-');
            }
        } else if neg {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let abs = crate::rational::abs(c);
        let mut factors: Vec<String> = Vec::new();
        if !abs.is_one() || m.is_one() {
            factors.push(crate::rational::format_rat(&abs));
        }
        for (i, &e) in m.exps().iter().enumerate() {
            if e == 0 {
                continue;
            }
            if e == 1 {
                factors.push(names[i].clone());
            } else {
                factors.push(format!("{}^{}", names[i], e));
            }
        }
        out.push_str(&factors.join("*"));
    }
    out
}

/// `x1..xn` default names.
pub fn default_names(arity: usize) -> Vec<String> {
    (1..=arity).map(|i| format!("x{i}")).collect()
}

/// `lambda, t1..tn` names for characteristic-polynomial rings.
pub fn lambda_names(n: usize) -> Vec<String> {
    let mut names = vec!["lambda".to_string()];
    names.extend((1..=n).map(|i| format!("t{i}")));
    names
}

/// Formats a whole system back into the file grammar.
pub fn format_system(names: &[String], polys: &[Polynomial]) -> String {
    let mut out = format!("vars: {}\n", names.join(" "));
    for p in polys {
        out.push_str(&format_poly(p, names));
        out.push('\n');
    }
    out
}
