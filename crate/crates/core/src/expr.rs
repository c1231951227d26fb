//! Arithmetic expression grammar shared by the scalar and torus-function
//! parsers:
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' '-'? int)?
//! atom   := int | ident | ident '[' int (',' int)* ']' | '(' expr ')'
//! ```
//!
//! Parsing yields an [`Expr`] tree; [`Expr::eval`] maps it into any
//! [`Interpret`] target.

use num_bigint::BigInt;

use crate::error::{Error, Result};

/// 1-based source position.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub column: usize,
}

impl Pos {
    pub fn error(self, message: impl Into<String>) -> Error {
        Error::Parse { line: self.line, column: self.column, message: message.into() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt),
    Var { name: String, index: Option<Vec<i64>>, pos: Pos },
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>, Pos),
    Neg(Box<Expr>),
    Pow(Box<Expr>, i64, Pos),
}

/// Semantics for [`Expr`].
pub trait Interpret {
    type Value;
    fn int(&self, n: &BigInt) -> Result<Self::Value>;
    fn var(&self, name: &str, index: Option<&[i64]>, pos: Pos) -> Result<Self::Value>;
    fn add(&self, a: Self::Value, b: Self::Value) -> Self::Value;
    fn sub(&self, a: Self::Value, b: Self::Value) -> Self::Value;
    fn mul(&self, a: Self::Value, b: Self::Value) -> Self::Value;
    fn div(&self, a: Self::Value, b: Self::Value, pos: Pos) -> Result<Self::Value>;
    fn neg(&self, a: Self::Value) -> Self::Value;
    fn pow(&self, a: Self::Value, e: i64, pos: Pos) -> Result<Self::Value>;
}

impl Expr {
    pub fn eval<I: Interpret>(&self, it: &I) -> Result<I::Value> {
        Ok(match self {
            Expr::Int(n) => it.int(n)?,
            Expr::Var { name, index, pos } => it.var(name, index.as_deref(), *pos)?,
            Expr::Add(a, b) => it.add(a.eval(it)?, b.eval(it)?),
            Expr::Sub(a, b) => it.sub(a.eval(it)?, b.eval(it)?),
            Expr::Mul(a, b) => it.mul(a.eval(it)?, b.eval(it)?),
            Expr::Div(a, b, pos) => it.div(a.eval(it)?, b.eval(it)?, *pos)?,
            Expr::Neg(a) => it.neg(a.eval(it)?),
            Expr::Pow(a, e, pos) => it.pow(a.eval(it)?, *e, *pos)?,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
    End,
}

fn tokenize(src: &str) -> Result<Vec<(Tok, Pos)>> {
    let mut out = Vec::new();
    let mut chars = src.chars().peekable();
    let (mut line, mut column) = (1, 1);
    while let Some(&c) = chars.peek() {
        let pos = Pos { line, column };
        if c == '\n' {
            chars.next();
            line += 1;
            column = 1;
            continue;
        }
        if c.is_whitespace() {
            chars.next();
            column += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                s.push(d);
                chars.next();
                column += 1;
            }
            out.push((Tok::Int(s.parse().unwrap()), pos));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_alphanumeric() || **d == '_') {
                s.push(d);
                chars.next();
                column += 1;
            }
            out.push((Tok::Ident(s), pos));
        } else if "+-*/^()[],".contains(c) {
            chars.next();
            column += 1;
            out.push((Tok::Sym(c), pos));
        } else {
            return Err(pos.error(format!("unexpected character {c:?}")));
        }
    }
    out.push((Tok::End, Pos { line, column }));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> (Tok, Pos) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn eat(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Sym(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.unexpected(&format!("expected '{c}'")))
        }
    }

    fn unexpected(&self, what: &str) -> Error {
        let found = match self.peek() {
            Tok::Int(n) => format!("integer {n}"),
            Tok::Ident(s) => format!("identifier {s:?}"),
            Tok::Sym(c) => format!("'{c}'"),
            Tok::End => "end of input".to_string(),
        };
        self.pos().error(format!("{what}, found {found}"))
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if *self.peek() == Tok::Sym('/') {
                let pos = self.bump().1;
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?), pos);
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn signed_int(&mut self) -> Result<i64> {
        let neg = self.eat('-');
        let pos = self.pos();
        match self.bump().0 {
            Tok::Int(n) => {
                let v: i64 = n.try_into().map_err(|_| pos.error("integer out of range"))?;
                Ok(if neg { -v } else { v })
            }
            _ => {
                self.at -= 1;
                Err(self.unexpected("expected an integer"))
            }
        }
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if *self.peek() == Tok::Sym('^') {
            let pos = self.bump().1;
            let e = self.signed_int()?;
            return Ok(Expr::Pow(Box::new(base), e, pos));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr> {
        let pos = self.pos();
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(Expr::Int(n))
            }
            Tok::Ident(name) => {
                self.bump();
                let index = if self.eat('[') {
                    let mut v = vec![self.signed_int()?];
                    while self.eat(',') {
                        v.push(self.signed_int()?);
                    }
                    self.expect(']')?;
                    Some(v)
                } else {
                    None
                };
                Ok(Expr::Var { name, index, pos })
            }
            Tok::Sym('(') => {
                self.bump();
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            _ => Err(self.unexpected("expected a number, variable or '('")),
        }
    }
}

pub fn parse(src: &str) -> Result<Expr> {
    let mut p = Parser { toks: tokenize(src)?, at: 0 };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.unexpected("expected an operator or end of input"));
    }
    Ok(e)
}

/// Parses and evaluates in one step.
pub fn parse_with<I: Interpret>(src: &str, it: &I) -> Result<I::Value> {
    parse(src)?.eval(it)
}
