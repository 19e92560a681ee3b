//! Expressions: integers, identifiers, `s[3,1]` (or bare `[3,1]`), `+ - *`
//! and parentheses.

use lambda_schur::scalar::Ring;
use lambda_schur::{Error, Partition, Result};
use num_bigint::BigInt;

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Int(BigInt),
    Ident(String),
    Schur(Partition),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(BigInt),
    Ident(String),
    Partition(Partition),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            out.push(Token::Int(text.parse().expect("digits")));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Token::Ident(chars[start..i].iter().collect()));
        } else if c == '[' {
            let end = chars[i..]
                .iter()
                .position(|&d| d == ']')
                .ok_or_else(|| Error::Parse(format!("unclosed '[' in {:?}", s)))?;
            let text: String = chars[i..=i + end].iter().collect();
            out.push(Token::Partition(text.parse()?));
            i += end + 1;
        } else if "+-*()".contains(c) {
            out.push(Token::Op(c));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character {:?} in {:?}", c, s)));
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn sum(&mut self) -> Result<Expr> {
        let mut lhs = self.product()?;
        while let Some(Token::Op(op @ ('+' | '-'))) = self.peek().cloned() {
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

    fn product(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        while let Some(Token::Op('*')) = self.peek() {
            self.pos += 1;
            let rhs = self.unary()?;
            lhs = Expr::Mul(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr> {
        if let Some(Token::Op('-')) = self.peek() {
            self.pos += 1;
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.next() {
            Some(Token::Int(n)) => Ok(Expr::Int(n)),
            Some(Token::Partition(p)) => Ok(Expr::Schur(p)),
            Some(Token::Ident(name)) => {
                if name == "s" {
                    if let Some(Token::Partition(p)) = self.peek().cloned() {
                        self.pos += 1;
                        return Ok(Expr::Schur(p));
                    }
                }
                Ok(Expr::Ident(name))
            }
            Some(Token::Op('(')) => {
                let e = self.sum()?;
                match self.next() {
                    Some(Token::Op(')')) => Ok(e),
                    _ => Err(Error::Parse("expected ')'".into())),
                }
            }
            Some(t) => Err(Error::Parse(format!("unexpected token {:?}", t))),
            None => Err(Error::Parse("unexpected end of expression".into())),
        }
    }
}

pub fn parse(s: &str) -> Result<Expr> {
    let mut p = Parser {
        tokens: tokenize(s)?,
        pos: 0,
    };
    let e = p.sum()?;
    if p.pos != p.tokens.len() {
        return Err(Error::Parse(format!("trailing input in {:?}", s)));
    }
    Ok(e)
}

/// Evaluates with `atom` resolving identifiers and Schur literals.
pub fn eval<R: Ring>(ring: &R, e: &Expr, atom: &dyn Fn(&Expr) -> Result<R::Elem>) -> Result<R::Elem> {
    Ok(match e {
        Expr::Int(n) => ring.from_int(n),
        Expr::Ident(_) | Expr::Schur(_) => atom(e)?,
        Expr::Add(a, b) => ring.add(&eval(ring, a, atom)?, &eval(ring, b, atom)?),
        Expr::Sub(a, b) => ring.sub(&eval(ring, a, atom)?, &eval(ring, b, atom)?),
        Expr::Mul(a, b) => ring.mul(&eval(ring, a, atom)?, &eval(ring, b, atom)?),
        Expr::Neg(a) => ring.neg(&eval(ring, a, atom)?),
    })
}

/// `e3` ↦ `('e', 3)`.
pub fn indexed(name: &str) -> Option<(char, usize)> {
    let mut chars = name.chars();
    let head = chars.next()?;
    let rest = chars.as_str();
    if rest.is_empty() || !rest.chars().all(|c| c.is_ascii_digit()) {
        return None;
    }
    Some((head, rest.parse().ok()?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence() {
        let e = parse("e2*e1 - 2*s[2,1] + (h1)").unwrap();
        let Expr::Add(lhs, rhs) = e else { panic!() };
        assert_eq!(*rhs, Expr::Ident("h1".into()));
        let Expr::Sub(_, b) = *lhs else { panic!() };
        assert_eq!(*b, Expr::Mul(Box::new(Expr::Int(2.into())), Box::new(Expr::Schur("[2,1]".parse().unwrap()))));
    }

    #[test]
    fn errors() {
        assert!(parse("e2 +").is_err());
        assert!(parse("s[2,1").is_err());
        assert!(parse("(e1").is_err());
        assert!(parse("e1 $").is_err());
        assert_eq!(indexed("a12"), Some(('a', 12)));
        assert_eq!(indexed("gen"), None);
    }
}
