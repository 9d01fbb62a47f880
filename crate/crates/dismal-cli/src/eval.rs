//! Expression evaluator: numbers with an optional @base suffix combined with
//! "+" (dismal add) and "*" (dismal mul), "*" binding tighter. All numbers in
//! one expression must agree on the base; bare numbers are base 10.

use dismal::{Error, Num, Result};

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Number(Num),
    Plus,
    Star,
    LParen,
    RParen,
}

fn lex(expr: &str) -> Result<Vec<Token>> {
    let mut tokens = Vec::new();
    let bytes = expr.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' => i += 1,
            '+' => {
                tokens.push(Token::Plus);
                i += 1;
            }
            '*' => {
                tokens.push(Token::Star);
                i += 1;
            }
            '(' => {
                tokens.push(Token::LParen);
                i += 1;
            }
            ')' => {
                tokens.push(Token::RParen);
                i += 1;
            }
            _ if c.is_ascii_alphanumeric() => {
                let start = i;
                while i < bytes.len() && (bytes[i] as char).is_ascii_alphanumeric() {
                    i += 1;
                }
                if i < bytes.len() && bytes[i] == b'@' {
                    i += 1;
                    while i < bytes.len() && (bytes[i] as char).is_ascii_digit() {
                        i += 1;
                    }
                }
                tokens.push(Token::Number(Num::parse(&expr[start..i])?));
            }
            _ => return Err(Error::Parse(format!("unexpected character {c:?} in expression"))),
        }
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn expr(&mut self) -> Result<Num> {
        let mut acc = self.term()?;
        while self.peek() == Some(&Token::Plus) {
            self.pos += 1;
            let rhs = self.term()?;
            acc = checked_op(&acc, &rhs, Num::add)?;
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Num> {
        let mut acc = self.atom()?;
        while self.peek() == Some(&Token::Star) {
            self.pos += 1;
            let rhs = self.atom()?;
            acc = checked_op(&acc, &rhs, Num::mul)?;
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<Num> {
        match self.peek().cloned() {
            Some(Token::Number(n)) => {
                self.pos += 1;
                Ok(n)
            }
            Some(Token::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Token::RParen) {
                    return Err(Error::Parse("missing closing parenthesis".into()));
                }
                self.pos += 1;
                Ok(inner)
            }
            _ => Err(Error::Parse("expected a number or parenthesized expression".into())),
        }
    }
}

// The arithmetic ops silently coerce nothing; bases must match exactly.
fn checked_op(a: &Num, b: &Num, op: fn(&Num, &Num) -> Num) -> Result<Num> {
    if a.base() != b.base() {
        return Err(Error::MixedBase(a.base(), b.base()));
    }
    Ok(op(a, b))
}

pub fn eval(expr: &str) -> Result<Num> {
    let tokens = lex(expr)?;
    if tokens.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut parser = Parser { tokens, pos: 0 };
    let value = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(Error::Parse("trailing input after expression".into()));
    }
    Ok(value)
}
