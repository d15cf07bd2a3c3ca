//! Minimal S-expression reader and printer.
//!
//! Every textual format in this crate (terms, formulas, proofs, PR terms,
//! interpretations) is layered on this substrate. The printer is canonical:
//! single spaces, no line breaks, symbols emitted verbatim. Parsing the
//! printer's output always yields the same tree.

use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Sexp {
    Sym(String),
    List(Vec<Sexp>),
}

impl Sexp {
    pub fn sym(s: impl Into<String>) -> Sexp {
        Sexp::Sym(s.into())
    }

    pub fn list(items: Vec<Sexp>) -> Sexp {
        Sexp::List(items)
    }

    pub fn as_sym(&self) -> Option<&str> {
        match self {
            Sexp::Sym(s) => Some(s),
            Sexp::List(_) => None,
        }
    }

    pub fn as_list(&self) -> Option<&[Sexp]> {
        match self {
            Sexp::Sym(_) => None,
            Sexp::List(items) => Some(items),
        }
    }

    /// Head symbol of a list form, e.g. `forall` for `(forall x p)`.
    pub fn head(&self) -> Option<&str> {
        self.as_list().and_then(|l| l.first()).and_then(|h| h.as_sym())
    }
}

impl fmt::Display for Sexp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sexp::Sym(s) => write!(f, "{s}"),
            Sexp::List(items) => {
                write!(f, "(")?;
                for (i, item) in items.iter().enumerate() {
                    if i > 0 {
                        write!(f, " ")?;
                    }
                    write!(f, "{item}")?;
                }
                write!(f, ")")
            }
        }
    }
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
#[error("parse error at {line}:{col}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
    line: usize,
    col: usize,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Open,
    Close,
    Sym(String),
    Eof,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer { src, pos: 0, line: 1, col: 1 }
    }

    fn err(&self, msg: impl Into<String>) -> ParseError {
        ParseError { line: self.line, col: self.col, msg: msg.into() }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.src[self.pos..].chars().next()?;
        self.pos += c.len_utf8();
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn skip_trivia(&mut self) {
        loop {
            match self.peek() {
                Some(c) if c.is_whitespace() => {
                    self.bump();
                }
                Some(';') => {
                    while let Some(c) = self.bump() {
                        if c == '\n' {
                            break;
                        }
                    }
                }
                _ => break,
            }
        }
    }

    fn next_tok(&mut self) -> Result<(Tok, usize, usize), ParseError> {
        self.skip_trivia();
        let (line, col) = (self.line, self.col);
        match self.peek() {
            None => Ok((Tok::Eof, line, col)),
            Some('(') => {
                self.bump();
                Ok((Tok::Open, line, col))
            }
            Some(')') => {
                self.bump();
                Ok((Tok::Close, line, col))
            }
            Some(_) => {
                let start = self.pos;
                while let Some(c) = self.peek() {
                    if c.is_whitespace() || c == '(' || c == ')' || c == ';' {
                        break;
                    }
                    self.bump();
                }
                Ok((Tok::Sym(self.src[start..self.pos].to_string()), line, col))
            }
        }
    }
}

/// Parse a single S-expression; trailing input is an error.
pub fn parse(src: &str) -> Result<Sexp, ParseError> {
    let mut lex = Lexer::new(src);
    let e = parse_one(&mut lex)?;
    lex.skip_trivia();
    if lex.peek().is_some() {
        return Err(lex.err("trailing input after expression"));
    }
    Ok(e)
}

/// Parse a sequence of S-expressions up to end of input.
pub fn parse_many(src: &str) -> Result<Vec<Sexp>, ParseError> {
    let mut lex = Lexer::new(src);
    let mut out = Vec::new();
    loop {
        lex.skip_trivia();
        if lex.peek().is_none() {
            return Ok(out);
        }
        out.push(parse_one(&mut lex)?);
    }
}

fn parse_one(lex: &mut Lexer) -> Result<Sexp, ParseError> {
    let (tok, line, col) = lex.next_tok()?;
    match tok {
        Tok::Sym(s) => Ok(Sexp::Sym(s)),
        Tok::Open => {
            let mut items = Vec::new();
            loop {
                lex.skip_trivia();
                match lex.peek() {
                    None => {
                        return Err(ParseError { line, col, msg: "unclosed '('".into() })
                    }
                    Some(')') => {
                        lex.bump();
                        return Ok(Sexp::List(items));
                    }
                    Some(_) => items.push(parse_one(lex)?),
                }
            }
        }
        Tok::Close => Err(ParseError { line, col, msg: "unexpected ')'".into() }),
        Tok::Eof => Err(ParseError { line, col, msg: "unexpected end of input".into() }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip() {
        let src = "(forall x (exists y (atom R x y)))";
        let e = parse(src).unwrap();
        assert_eq!(e.to_string(), src);
    }

    #[test]
    fn comments_and_whitespace() {
        let e = parse("( a ; comment\n  b )").unwrap();
        assert_eq!(e.to_string(), "(a b)");
    }

    #[test]
    fn errors_carry_position() {
        let err = parse("(a b").unwrap_err();
        assert_eq!((err.line, err.col), (1, 1));
        let err = parse(")").unwrap_err();
        assert_eq!((err.line, err.col), (1, 1));
    }
}
