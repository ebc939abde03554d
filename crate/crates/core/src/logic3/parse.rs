//! Text syntax for predicates.
//!
//! ```text
//! pred    := quant | imp
//! quant   := ("forall" | "exists") ident "." pred
//! imp     := or [("=>" | "<=>" | "->" | "<->") imp]
//! or      := and ("|" and)*
//! and     := unary ("&" unary)*
//! unary   := ("~" | "[]T" | "[]TB" | "[]B") unary | quant | primary
//! primary := "(" pred ")" | ("K" | "E" | "Kw" | "Ew") "{" pred "}"
//!          | "'" label | "T" | "B" | "F" | ident
//! ```
//!
//! Labels are runs of alphanumerics, `_`, `*`, `+` and `-` (a `-` directly
//! before `>` ends the label), or a double-quoted string after the quote
//! mark. A quantifier body extends as far right as possible.

use super::pred::{is_label_char, BinOp, Modality, Pred, UnOp};
use crate::error::{Error, Result};
use crate::three::Three;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Atom(String),
    Ident(String),
    Un(UnOp),
    Bin(BinOp),
    LParen,
    RParen,
    LBrace,
    RBrace,
    Dot,
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::CharIndices<'a>>,
    src: &'a str,
    line: usize,
}

impl<'a> Lexer<'a> {
    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse { line: self.line, msg: msg.into() }
    }

    fn tokens(mut self) -> Result<(Vec<(Tok, usize)>, usize)> {
        let mut out = Vec::new();
        while let Some(&(i, c)) = self.chars.peek() {
            if c == '\n' {
                self.line += 1;
                self.chars.next();
                continue;
            }
            if c.is_whitespace() {
                self.chars.next();
                continue;
            }
            let line = self.line;
            let tok = match c {
                '\'' => {
                    self.chars.next();
                    Tok::Atom(self.label()?)
                }
                '(' => self.one(Tok::LParen),
                ')' => self.one(Tok::RParen),
                '{' => self.one(Tok::LBrace),
                '}' => self.one(Tok::RBrace),
                '.' => self.one(Tok::Dot),
                '~' => self.one(Tok::Un(UnOp::Not)),
                '&' => self.one(Tok::Bin(BinOp::And)),
                '|' => self.one(Tok::Bin(BinOp::Or)),
                '[' => {
                    let rest = &self.src[i..];
                    let (op, len) = if rest.starts_with("[]TB") {
                        (UnOp::BoxTB, 4)
                    } else if rest.starts_with("[]T") {
                        (UnOp::BoxT, 3)
                    } else if rest.starts_with("[]B") {
                        (UnOp::BoxB, 3)
                    } else {
                        return Err(self.err("expected []T, []TB or []B"));
                    };
                    self.skip(len);
                    Tok::Un(op)
                }
                '=' | '<' | '-' => {
                    let rest = &self.src[i..];
                    let table = [
                        ("<->", BinOp::Iff),
                        ("<=>", BinOp::MatIff),
                        ("=>", BinOp::MatImp),
                        ("->", BinOp::Imp),
                    ];
                    match table.iter().find(|(s, _)| rest.starts_with(s)) {
                        Some((s, op)) => {
                            self.skip(s.len());
                            Tok::Bin(*op)
                        }
                        None => return Err(self.err(format!("unexpected `{}`", c))),
                    }
                }
                c if c.is_alphabetic() || c == '_' => {
                    let mut s = String::new();
                    while let Some(&(_, d)) = self.chars.peek() {
                        if d.is_alphanumeric() || d == '_' {
                            s.push(d);
                            self.chars.next();
                        } else {
                            break;
                        }
                    }
                    Tok::Ident(s)
                }
                other => return Err(self.err(format!("unexpected `{}`", other))),
            };
            out.push((tok, line));
        }
        Ok((out, self.line))
    }

    fn one(&mut self, t: Tok) -> Tok {
        self.chars.next();
        t
    }

    fn skip(&mut self, n: usize) {
        for _ in 0..n {
            self.chars.next();
        }
    }

    fn label(&mut self) -> Result<String> {
        let mut s = String::new();
        if let Some(&(_, '"')) = self.chars.peek() {
            self.chars.next();
            loop {
                match self.chars.next() {
                    Some((_, '"')) => return Ok(s),
                    Some((_, '\\')) => match self.chars.next() {
                        Some((_, d)) => s.push(d),
                        None => return Err(self.err("unterminated label")),
                    },
                    Some((_, '\n')) | None => return Err(self.err("unterminated label")),
                    Some((_, d)) => s.push(d),
                }
            }
        }
        while let Some(&(i, d)) = self.chars.peek() {
            if !is_label_char(d) || (d == '-' && self.src[i + 1..].starts_with('>')) {
                break;
            }
            s.push(d);
            self.chars.next();
        }
        if s.is_empty() {
            return Err(self.err("empty atom label"));
        }
        Ok(s)
    }
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end_line: usize,
    labels: &'a [String],
}

const RESERVED: [&str; 9] = ["K", "E", "Kw", "Ew", "forall", "exists", "T", "B", "F"];

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn line(&self) -> usize {
        self.toks.get(self.pos).map(|(_, l)| *l).unwrap_or(self.end_line)
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse { line: self.line(), msg: msg.into() }
    }

    fn expect(&mut self, t: Tok, what: &str) -> Result<()> {
        if self.peek() == Some(&t) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected {}", what)))
        }
    }

    fn pred(&mut self) -> Result<Pred> {
        if let Some(q) = self.quant()? {
            return Ok(q);
        }
        let lhs = self.or()?;
        match self.peek() {
            Some(Tok::Bin(op @ (BinOp::MatImp | BinOp::MatIff | BinOp::Imp | BinOp::Iff))) => {
                let op = *op;
                self.pos += 1;
                let rhs = self.pred()?;
                Ok(Pred::bin(op, lhs, rhs))
            }
            _ => Ok(lhs),
        }
    }

    fn quant(&mut self) -> Result<Option<Pred>> {
        let kind = match self.peek() {
            Some(Tok::Ident(s)) if s == "forall" || s == "exists" => s.clone(),
            _ => return Ok(None),
        };
        self.pos += 1;
        let x = match self.peek() {
            Some(Tok::Ident(x)) if !RESERVED.contains(&x.as_str()) => x.clone(),
            _ => return Err(self.err("expected a variable after quantifier")),
        };
        self.pos += 1;
        self.expect(Tok::Dot, "`.` after quantified variable")?;
        let body = self.pred()?;
        Ok(Some(if kind == "forall" {
            Pred::forall(&x, body)
        } else {
            Pred::exists(&x, body)
        }))
    }

    fn or(&mut self) -> Result<Pred> {
        let mut acc = self.and()?;
        while self.peek() == Some(&Tok::Bin(BinOp::Or)) {
            self.pos += 1;
            acc = Pred::or(acc, self.and()?);
        }
        Ok(acc)
    }

    fn and(&mut self) -> Result<Pred> {
        let mut acc = self.unary()?;
        while self.peek() == Some(&Tok::Bin(BinOp::And)) {
            self.pos += 1;
            acc = Pred::and(acc, self.unary()?);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Pred> {
        if let Some(Tok::Un(op)) = self.peek() {
            let op = *op;
            self.pos += 1;
            return Ok(Pred::Un(op, Box::new(self.unary()?)));
        }
        if let Some(q) = self.quant()? {
            return Ok(q);
        }
        self.primary()
    }

    fn primary(&mut self) -> Result<Pred> {
        let tok = match self.peek() {
            Some(t) => t.clone(),
            None => return Err(self.err("unexpected end of input")),
        };
        self.pos += 1;
        match tok {
            Tok::LParen => {
                let p = self.pred()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(p)
            }
            Tok::Atom(l) => match self.labels.iter().position(|x| *x == l) {
                Some(i) => Ok(Pred::Atom(i)),
                None => Err(Error::UnknownPoint(l)),
            },
            Tok::Ident(s) => {
                let modal = match s.as_str() {
                    "K" => Some(Modality::K),
                    "E" => Some(Modality::E),
                    "Kw" => Some(Modality::Kw),
                    "Ew" => Some(Modality::Ew),
                    _ => None,
                };
                if let Some(m) = modal {
                    self.expect(Tok::LBrace, "`{` after modality")?;
                    let body = self.pred()?;
                    self.expect(Tok::RBrace, "`}`")?;
                    return Ok(Pred::modal(m, body));
                }
                match s.as_str() {
                    "T" => Ok(Pred::Const(Three::T)),
                    "B" => Ok(Pred::Const(Three::B)),
                    "F" => Ok(Pred::Const(Three::F)),
                    "forall" | "exists" => Err(self.err("misplaced quantifier")),
                    _ => Ok(Pred::Var(s)),
                }
            }
            other => {
                self.pos -= 1;
                Err(self.err(format!("unexpected token {:?}", other)))
            }
        }
    }
}

pub(crate) fn parse_at(text: &str, labels: &[String], line: usize) -> Result<Pred> {
    let lexer = Lexer { chars: text.char_indices().peekable(), src: text, line };
    let (toks, end_line) = lexer.tokens()?;
    let mut p = Parser { toks, pos: 0, end_line, labels };
    let pred = p.pred()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input"));
    }
    Ok(pred)
}

/// Parse a predicate, resolving atom labels against `labels`.
pub fn parse(text: &str, labels: &[String]) -> Result<Pred> {
    parse_at(text, labels, 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels() -> Vec<String> {
        ["0", "1", "a-b", "(x,y)"].iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn precedence() {
        let l = labels();
        let p = parse("'0 & '1 | ~'0 -> '1 -> B", &l).unwrap();
        let expect = Pred::imp(
            Pred::or(Pred::and(Pred::Atom(0), Pred::Atom(1)), Pred::not(Pred::Atom(0))),
            Pred::imp(Pred::Atom(1), Pred::Const(Three::B)),
        );
        assert_eq!(p, expect);
    }

    #[test]
    fn labels_with_dashes_and_quotes() {
        let l = labels();
        assert_eq!(parse("'a-b->'0", &l).unwrap(), Pred::imp(Pred::Atom(2), Pred::Atom(0)));
        assert_eq!(parse("'\"(x,y)\"", &l).unwrap(), Pred::Atom(3));
    }

    #[test]
    fn quantifier_body_extends_right() {
        let l = labels();
        let p = parse("'0 & forall x. x | '1", &l).unwrap();
        let expect = Pred::and(Pred::Atom(0), Pred::forall("x", Pred::or(Pred::var("x"), Pred::Atom(1))));
        assert_eq!(p, expect);
    }

    #[test]
    fn boxes_and_modalities() {
        let l = labels();
        let p = parse("[]TB []T ~K{'0 <=> '1} & Ew{[]B '0}", &l).unwrap();
        let k = Pred::modal(Modality::K, Pred::mat_iff(Pred::Atom(0), Pred::Atom(1)));
        let expect = Pred::and(
            Pred::box_tb(Pred::box_t(Pred::not(k))),
            Pred::modal(Modality::Ew, Pred::box_b(Pred::Atom(0))),
        );
        assert_eq!(p, expect);
    }

    #[test]
    fn errors() {
        let l = labels();
        assert!(matches!(parse("'zz", &l), Err(Error::UnknownPoint(_))));
        assert!(matches!(parse("'0 &", &l), Err(Error::Parse { .. })));
        assert!(matches!(parse("('0", &l), Err(Error::Parse { .. })));
        assert!(matches!(parse("forall K. K", &l), Err(Error::Parse { .. })));
        assert!(matches!(parse("\n'0 ) ", &l), Err(Error::Parse { line: 2, .. })));
    }
}
