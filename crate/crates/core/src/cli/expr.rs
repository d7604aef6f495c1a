//! Tiny integer expressions for partition families and `f` specs, e.g.
//! `d-2r`, `r+1`, `2*(d-r)`, `m-1`.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Int(i64),
    Var(char),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExprError(pub String);

impl fmt::Display for ExprError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for ExprError {}

impl Expr {
    pub fn parse(src: &str, vars: &[char]) -> Result<Self, ExprError> {
        let tokens: Vec<char> = src.chars().filter(|c| !c.is_whitespace()).collect();
        let mut parser = Parser {
            tokens,
            pos: 0,
            vars,
        };
        let expr = parser.sum()?;
        if parser.pos != parser.tokens.len() {
            return Err(ExprError(format!(
                "unexpected `{}` in `{src}`",
                parser.tokens[parser.pos]
            )));
        }
        Ok(expr)
    }

    pub fn eval(&self, lookup: &impl Fn(char) -> i64) -> i64 {
        match self {
            Expr::Int(v) => *v,
            Expr::Var(c) => lookup(*c),
            Expr::Neg(a) => -a.eval(lookup),
            Expr::Add(a, b) => a.eval(lookup) + b.eval(lookup),
            Expr::Sub(a, b) => a.eval(lookup) - b.eval(lookup),
            Expr::Mul(a, b) => a.eval(lookup) * b.eval(lookup),
        }
    }
}

struct Parser<'a> {
    tokens: Vec<char>,
    pos: usize,
    vars: &'a [char],
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.tokens.get(self.pos).copied()
    }

    fn sum(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = if self.peek() == Some('-') {
            self.pos += 1;
            Expr::Neg(Box::new(self.product()?))
        } else {
            self.product()?
        };
        while let Some(op @ ('+' | '-')) = self.peek() {
            self.pos += 1;
            let rhs = self.product()?;
            lhs = if op == '+' {
                Expr::Add(Box::new(lhs), Box::new(rhs))
            } else {
                Expr::Sub(Box::new(lhs), Box::new(rhs))
            };
        }
        Ok(lhs)
    }

    fn product(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.factor()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                }
                // Implicit multiplication: `2r`, `2(d-r)`.
                Some(c) if c == '(' || c.is_ascii_alphabetic() => {}
                _ => break,
            }
            let rhs = self.factor()?;
            lhs = Expr::Mul(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr, ExprError> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                    self.pos += 1;
                }
                let digits: String = self.tokens[start..self.pos].iter().collect();
                digits
                    .parse()
                    .map(Expr::Int)
                    .map_err(|_| ExprError(format!("integer `{digits}` out of range")))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                if !self.vars.contains(&c) {
                    let allowed: String = self.vars.iter().collect();
                    return Err(ExprError(format!(
                        "unknown variable `{c}` (allowed: {allowed})"
                    )));
                }
                self.pos += 1;
                Ok(Expr::Var(c))
            }
            Some(open @ ('(' | '{')) => {
                self.pos += 1;
                let inner = self.sum()?;
                let close = if open == '(' { ')' } else { '}' };
                if self.peek() != Some(close) {
                    return Err(ExprError(format!("missing `{close}`")));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) => Err(ExprError(format!("unexpected `{c}`"))),
            None => Err(ExprError("unexpected end of expression".into())),
        }
    }
}
