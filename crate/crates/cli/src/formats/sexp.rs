//! Expressions as s-expressions:
//! `(join 1 2 (union (create 1 a) (create 2 b)))`, with `relabel FROM TO`.

use cwlab_core::cliquewidth::Expression;

use crate::CliError;

pub fn print(e: &Expression) -> String {
    let mut out = String::new();
    write(e, &mut out);
    out
}

fn write(e: &Expression, out: &mut String) {
    match e {
        Expression::Create { label, tag } => out.push_str(&format!("(create {label} {tag})")),
        Expression::Union(l, r) => {
            out.push_str("(union ");
            write(l, out);
            out.push(' ');
            write(r, out);
            out.push(')');
        }
        Expression::Join { a, b, inner } => {
            out.push_str(&format!("(join {a} {b} "));
            write(inner, out);
            out.push(')');
        }
        Expression::Relabel { from, to, inner } => {
            out.push_str(&format!("(relabel {from} {to} "));
            write(inner, out);
            out.push(')');
        }
    }
}

#[derive(Debug, PartialEq)]
enum Token {
    Open,
    Close,
    Atom(String),
}

fn tokenize(text: &str) -> Vec<Token> {
    let mut tokens = Vec::new();
    let mut atom = String::new();
    for ch in text.chars() {
        if ch == '(' || ch == ')' || ch.is_whitespace() {
            if !atom.is_empty() {
                tokens.push(Token::Atom(std::mem::take(&mut atom)));
            }
            match ch {
                '(' => tokens.push(Token::Open),
                ')' => tokens.push(Token::Close),
                _ => {}
            }
        } else {
            atom.push(ch);
        }
    }
    if !atom.is_empty() {
        tokens.push(Token::Atom(atom));
    }
    tokens
}

struct Parser {
    tokens: Vec<Token>,
    at: usize,
}

fn bad(msg: impl Into<String>) -> CliError {
    CliError::Usage(format!("malformed expression: {}", msg.into()))
}

impl Parser {
    fn next(&mut self) -> Option<&Token> {
        let t = self.tokens.get(self.at);
        self.at += 1;
        t
    }

    fn atom(&mut self) -> Result<String, CliError> {
        match self.next() {
            Some(Token::Atom(a)) => Ok(a.clone()),
            other => Err(bad(format!("expected an atom, found {other:?}"))),
        }
    }

    fn label(&mut self) -> Result<u32, CliError> {
        let a = self.atom()?;
        match a.parse::<u32>() {
            Ok(l) if l > 0 => Ok(l),
            _ => Err(bad(format!("{a:?} is not a positive label"))),
        }
    }

    fn expr(&mut self) -> Result<Expression, CliError> {
        if self.next() != Some(&Token::Open) {
            return Err(bad("expected '('"));
        }
        let op = self.atom()?;
        let e = match op.as_str() {
            "create" => {
                let label = self.label()?;
                Expression::create(label, self.atom()?)
            }
            "union" => {
                let l = self.expr()?;
                Expression::union(l, self.expr()?)
            }
            "join" => {
                let (a, b) = (self.label()?, self.label()?);
                Expression::join(a, b, self.expr()?)
            }
            "relabel" => {
                let (from, to) = (self.label()?, self.label()?);
                Expression::relabel(from, to, self.expr()?)
            }
            other => return Err(bad(format!("unknown operation {other:?}"))),
        };
        if self.next() != Some(&Token::Close) {
            return Err(bad(format!("expected ')' after {op}")));
        }
        Ok(e)
    }
}

pub fn parse(text: &str) -> Result<Expression, CliError> {
    let mut p = Parser { tokens: tokenize(text), at: 0 };
    let e = p.expr()?;
    if p.at != p.tokens.len() {
        return Err(bad("trailing input"));
    }
    Ok(e)
}
