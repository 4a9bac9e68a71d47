//! Predicate language over classification records.
//!
//! ```text
//! expr    := and ('||' and)*
//! and     := unary ('&&' unary)*
//! unary   := '!' unary | '(' expr ')' | flag | field CMP value
//! flag    := connected | has_isolated | well_covered | very_well_covered
//!          | one_well_covered | in_w2 | true | false
//! field   := n | alpha | lambda_star
//! CMP     := '==' | '!=' | '<' | '<=' | '>' | '>='
//! value   := INT | INT '/' INT | inf
//! ```

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;

use crate::classification::{ClassificationRecord, LambdaStar};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Flag {
    Connected,
    HasIsolated,
    WellCovered,
    VeryWellCovered,
    OneWellCovered,
    InW2,
    True,
    False,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Field {
    N,
    Alpha,
    LambdaStar,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cmp {
    Eq,
    Ne,
    Lt,
    Le,
    Gt,
    Ge,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Filter {
    Flag(Flag),
    Compare(Field, Cmp, LambdaStar),
    Not(Box<Filter>),
    And(Box<Filter>, Box<Filter>),
    Or(Box<Filter>, Box<Filter>),
}

impl Filter {
    pub fn matches(&self, r: &ClassificationRecord) -> bool {
        match self {
            Filter::Flag(f) => match f {
                Flag::Connected => r.connected,
                Flag::HasIsolated => r.has_isolated,
                Flag::WellCovered => r.well_covered,
                Flag::VeryWellCovered => r.very_well_covered,
                Flag::OneWellCovered => r.one_well_covered,
                Flag::InW2 => r.in_w2 == Some(true),
                Flag::True => true,
                Flag::False => false,
            },
            Filter::Compare(field, cmp, value) => {
                let lhs = match field {
                    Field::N => LambdaStar::Finite(Rational64::from(r.n as i64)),
                    Field::Alpha => LambdaStar::Finite(Rational64::from(r.alpha as i64)),
                    Field::LambdaStar => r.lambda_star,
                };
                let ord = lhs.cmp(value);
                match cmp {
                    Cmp::Eq => ord == Ordering::Equal,
                    Cmp::Ne => ord != Ordering::Equal,
                    Cmp::Lt => ord == Ordering::Less,
                    Cmp::Le => ord != Ordering::Greater,
                    Cmp::Gt => ord == Ordering::Greater,
                    Cmp::Ge => ord != Ordering::Less,
                }
            }
            Filter::Not(f) => !f.matches(r),
            Filter::And(a, b) => a.matches(r) && b.matches(r),
            Filter::Or(a, b) => a.matches(r) || b.matches(r),
        }
    }

    /// Whether evaluation reads the W₂ flag, which is only computed on request.
    pub fn uses_w2(&self) -> bool {
        match self {
            Filter::Flag(f) => *f == Flag::InW2,
            Filter::Compare(..) => false,
            Filter::Not(f) => f.uses_w2(),
            Filter::And(a, b) | Filter::Or(a, b) => a.uses_w2() || b.uses_w2(),
        }
    }
}

impl FromStr for Filter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let tokens = lex(s)?;
        let mut p = Parser {
            tokens,
            pos: 0,
            end: s.len(),
        };
        let f = p.or()?;
        if let Some((pos, t)) = p.tokens.get(p.pos) {
            return Err(err(*pos, format!("unexpected {t}")));
        }
        Ok(f)
    }
}

impl fmt::Display for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Filter::Flag(flag) => f.write_str(flag_name(*flag)),
            Filter::Compare(field, cmp, v) => {
                let field = match field {
                    Field::N => "n",
                    Field::Alpha => "alpha",
                    Field::LambdaStar => "lambda_star",
                };
                let cmp = match cmp {
                    Cmp::Eq => "==",
                    Cmp::Ne => "!=",
                    Cmp::Lt => "<",
                    Cmp::Le => "<=",
                    Cmp::Gt => ">",
                    Cmp::Ge => ">=",
                };
                write!(f, "{field} {cmp} {v}")
            }
            Filter::Not(x) => write!(f, "!({x})"),
            Filter::And(a, b) => write!(f, "({a} && {b})"),
            Filter::Or(a, b) => write!(f, "({a} || {b})"),
        }
    }
}

const FLAGS: [(&str, Flag); 8] = [
    ("connected", Flag::Connected),
    ("has_isolated", Flag::HasIsolated),
    ("well_covered", Flag::WellCovered),
    ("very_well_covered", Flag::VeryWellCovered),
    ("one_well_covered", Flag::OneWellCovered),
    ("in_w2", Flag::InW2),
    ("true", Flag::True),
    ("false", Flag::False),
];

fn flag_name(flag: Flag) -> &'static str {
    FLAGS.iter().find(|(_, f)| *f == flag).unwrap().0
}

fn err(pos: usize, msg: impl Into<String>) -> Error {
    Error::Filter {
        pos,
        msg: msg.into(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Ident(String),
    Number(String),
    Cmp(Cmp),
    Not,
    And,
    Or,
    Open,
    Close,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Ident(s) | Token::Number(s) => write!(f, "{s:?}"),
            Token::Cmp(c) => write!(f, "comparison {c:?}"),
            Token::Not => f.write_str("'!'"),
            Token::And => f.write_str("'&&'"),
            Token::Or => f.write_str("'||'"),
            Token::Open => f.write_str("'('"),
            Token::Close => f.write_str("')'"),
        }
    }
}

fn lex(s: &str) -> Result<Vec<(usize, Token)>> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let two = bytes.get(i..i + 2);
        let start = i;
        let token = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'(' => Token::Open,
            b')' => Token::Close,
            _ if two == Some(b"&&") => Token::And,
            _ if two == Some(b"||") => Token::Or,
            _ if two == Some(b"==") => Token::Cmp(Cmp::Eq),
            _ if two == Some(b"!=") => Token::Cmp(Cmp::Ne),
            _ if two == Some(b"<=") => Token::Cmp(Cmp::Le),
            _ if two == Some(b">=") => Token::Cmp(Cmp::Ge),
            b'<' => Token::Cmp(Cmp::Lt),
            b'>' => Token::Cmp(Cmp::Gt),
            b'!' => Token::Not,
            b'0'..=b'9' | b'-' => {
                i += 1;
                while i < bytes.len() && (bytes[i].is_ascii_digit() || bytes[i] == b'/') {
                    i += 1;
                }
                out.push((start, Token::Number(s[start..i].to_string())));
                continue;
            }
            _ if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Token::Ident(s[start..i].to_string())));
                continue;
            }
            _ => return Err(err(i, format!("unexpected character {:?}", c as char))),
        };
        i += match token {
            Token::And | Token::Or => 2,
            Token::Cmp(Cmp::Eq | Cmp::Ne | Cmp::Le | Cmp::Ge) => 2,
            _ => 1,
        };
        out.push((start, token));
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn or(&mut self) -> Result<Filter> {
        let mut lhs = self.and()?;
        while self.peek() == Some(&Token::Or) {
            self.pos += 1;
            lhs = Filter::Or(Box::new(lhs), Box::new(self.and()?));
        }
        Ok(lhs)
    }

    fn and(&mut self) -> Result<Filter> {
        let mut lhs = self.unary()?;
        while self.peek() == Some(&Token::And) {
            self.pos += 1;
            lhs = Filter::And(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Filter> {
        let at = self.offset();
        match self.next() {
            Some(Token::Not) => Ok(Filter::Not(Box::new(self.unary()?))),
            Some(Token::Open) => {
                let inner = self.or()?;
                let at = self.offset();
                match self.next() {
                    Some(Token::Close) => Ok(inner),
                    _ => Err(err(at, "expected ')'")),
                }
            }
            Some(Token::Ident(name)) => self.atom(at, &name),
            Some(t) => Err(err(at, format!("unexpected {t}"))),
            None => Err(err(at, "unexpected end of expression")),
        }
    }

    fn atom(&mut self, at: usize, name: &str) -> Result<Filter> {
        if let Some((_, flag)) = FLAGS.iter().find(|(n, _)| *n == name) {
            return Ok(Filter::Flag(*flag));
        }
        let field = match name {
            "n" => Field::N,
            "alpha" => Field::Alpha,
            "lambda_star" => Field::LambdaStar,
            _ => return Err(err(at, format!("unknown name {name:?}"))),
        };
        let at = self.offset();
        let Some(Token::Cmp(cmp)) = self.next() else {
            return Err(err(at, format!("expected a comparison after {name:?}")));
        };
        let at = self.offset();
        let value = match self.next() {
            Some(Token::Number(v)) | Some(Token::Ident(v)) => {
                v.parse::<LambdaStar>().map_err(|e| err(at, e))?
            }
            _ => return Err(err(at, "expected a number")),
        };
        Ok(Filter::Compare(field, cmp, value))
    }
}
