//! Parser and printer for the `.qpres` presentation grammar.
//!
//! ```text
//! statement := "gens" name+ | "rel" expr "=" expr
//! expr      := term { ("*" | "~") term }
//! term      := atom { "^" "(" gword ")" }
//! atom      := name | "(" expr ")"
//! gword     := gfactor+
//! gfactor   := (name | "(" gword ")") [ "^" signed-int ]
//! ```
//!
//! Statements are separated by newlines or `/`; `#` starts a comment.

use std::fmt::Write as _;

use super::{GWord, Presentation, WordExpr};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Name(String),
    Int(i64),
    Star,
    Tilde,
    Caret,
    LParen,
    RParen,
    Eq,
    Minus,
    Plus,
}

impl Token {
    fn describe(&self) -> String {
        match self {
            Token::Name(n) => format!("`{n}`"),
            Token::Int(i) => format!("`{i}`"),
            Token::Star => "`*`".into(),
            Token::Tilde => "`~`".into(),
            Token::Caret => "`^`".into(),
            Token::LParen => "`(`".into(),
            Token::RParen => "`)`".into(),
            Token::Eq => "`=`".into(),
            Token::Minus => "`-`".into(),
            Token::Plus => "`+`".into(),
        }
    }
}

fn tokenize(line: usize, text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(i, c)) = chars.peek() {
        match c {
            c if c.is_whitespace() => {
                chars.next();
            }
            '*' | '~' | '^' | '(' | ')' | '=' | '-' | '+' => {
                chars.next();
                out.push(match c {
                    '*' => Token::Star,
                    '~' => Token::Tilde,
                    '^' => Token::Caret,
                    '(' => Token::LParen,
                    ')' => Token::RParen,
                    '=' => Token::Eq,
                    '-' => Token::Minus,
                    _ => Token::Plus,
                });
            }
            c if c.is_ascii_digit() => {
                let mut end = i;
                while let Some(&(j, d)) = chars.peek() {
                    if !d.is_ascii_digit() {
                        break;
                    }
                    end = j + 1;
                    chars.next();
                }
                let value = text[i..end]
                    .parse()
                    .map_err(|_| Error::parse(line, format!("integer `{}` too large", &text[i..end])))?;
                out.push(Token::Int(value));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut end = i;
                while let Some(&(j, d)) = chars.peek() {
                    if !(d.is_ascii_alphanumeric() || d == '_') {
                        break;
                    }
                    end = j + 1;
                    chars.next();
                }
                out.push(Token::Name(text[i..end].to_string()));
            }
            other => return Err(Error::parse(line, format!("unexpected character `{other}`"))),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    line: usize,
    generators: &'a [String],
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn err(&self, message: impl Into<String>) -> Error {
        Error::parse(self.line, message)
    }

    fn expect(&mut self, want: Token) -> Result<()> {
        match self.bump() {
            Some(t) if t == want => Ok(()),
            Some(t) => Err(self.err(format!("expected {}, found {}", want.describe(), t.describe()))),
            None => Err(self.err(format!("expected {}, found end of input", want.describe()))),
        }
    }

    fn generator(&self, name: &str) -> Result<usize> {
        self.generators
            .iter()
            .position(|g| g == name)
            .ok_or_else(|| self.err(format!("unknown generator `{name}`")))
    }

    fn expr(&mut self) -> Result<WordExpr> {
        let mut left = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.bump();
                    left = WordExpr::Op(Box::new(left), Box::new(self.term()?));
                }
                Some(Token::Tilde) => {
                    self.bump();
                    left = WordExpr::InvOp(Box::new(left), Box::new(self.term()?));
                }
                _ => return Ok(left),
            }
        }
    }

    fn term(&mut self) -> Result<WordExpr> {
        let mut base = self.atom()?;
        while self.peek() == Some(&Token::Caret) {
            self.bump();
            self.expect(Token::LParen)?;
            let word = self.gword()?;
            self.expect(Token::RParen)?;
            let word = GWord::from_syllables(word);
            if word.is_empty() {
                return Err(self.err("exponent word reduces to the identity"));
            }
            base = WordExpr::Exp(Box::new(base), word);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<WordExpr> {
        match self.bump() {
            Some(Token::Name(name)) => Ok(WordExpr::Gen(self.generator(&name)?)),
            Some(Token::LParen) => {
                let inner = self.expr()?;
                self.expect(Token::RParen)?;
                Ok(inner)
            }
            Some(t) => Err(self.err(format!("expected a generator or `(`, found {}", t.describe()))),
            None => Err(self.err("expected a generator or `(`, found end of input")),
        }
    }

    /// One or more factors, expanded into a syllable list (not yet reduced).
    fn gword(&mut self) -> Result<Vec<(usize, i64)>> {
        let mut out = Vec::new();
        loop {
            match self.peek() {
                Some(Token::Name(_)) | Some(Token::LParen) => out.extend(self.gfactor()?),
                _ if out.is_empty() => {
                    return Err(self.err("expected a generator word"));
                }
                _ => return Ok(out),
            }
        }
    }

    fn gfactor(&mut self) -> Result<Vec<(usize, i64)>> {
        let base = match self.bump() {
            Some(Token::Name(name)) => vec![(self.generator(&name)?, 1)],
            Some(Token::LParen) => {
                let inner = self.gword()?;
                self.expect(Token::RParen)?;
                inner
            }
            _ => unreachable!("gword checks the lookahead"),
        };
        if self.peek() != Some(&Token::Caret) {
            return Ok(base);
        }
        self.bump();
        let negative = match self.peek() {
            Some(Token::Minus) => {
                self.bump();
                true
            }
            Some(Token::Plus) => {
                self.bump();
                false
            }
            _ => false,
        };
        let exponent = match self.bump() {
            Some(Token::Int(0)) => return Err(self.err("zero exponent")),
            Some(Token::Int(k)) => k,
            Some(Token::LParen) => return Err(self.err("a generator word cannot be raised to a word; use an integer")),
            _ => return Err(self.err("expected an integer exponent")),
        };
        let repeats = usize::try_from(exponent)
            .ok()
            .filter(|&r| r.saturating_mul(base.len()) <= 1 << 20)
            .ok_or_else(|| self.err("exponent too large"))?;
        let unit: Vec<(usize, i64)> = if negative {
            base.iter().rev().map(|&(g, e)| (g, -e)).collect()
        } else {
            base
        };
        Ok(unit.iter().copied().cycle().take(unit.len() * repeats).collect())
    }

    fn finish(&self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(t) => Err(self.err(format!("unexpected {}", t.describe()))),
        }
    }
}

/// Parses a single word expression over `generators`.
pub(super) fn parse_expr(generators: &[String], text: &str, line: usize) -> Result<WordExpr> {
    let tokens = tokenize(line, text)?;
    if tokens.is_empty() {
        return Err(Error::parse(line, "empty expression"));
    }
    let mut p = Parser {
        tokens,
        pos: 0,
        line,
        generators,
    };
    let e = p.expr()?;
    p.finish()?;
    Ok(e)
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    chars.next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

pub fn parse_presentation(text: &str) -> Result<Presentation> {
    let mut generators: Option<Vec<String>> = None;
    let mut relations = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        for stmt in content.split('/') {
            let stmt = stmt.trim();
            if stmt.is_empty() {
                continue;
            }
            let (keyword, rest) = stmt.split_once(char::is_whitespace).unwrap_or((stmt, ""));
            match keyword {
                "gens" => {
                    if generators.is_some() {
                        return Err(Error::parse(line, "duplicate `gens` statement"));
                    }
                    let names: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
                    if names.is_empty() {
                        return Err(Error::parse(line, "`gens` needs at least one name"));
                    }
                    for (i, name) in names.iter().enumerate() {
                        if !is_identifier(name) || name == "gens" || name == "rel" {
                            return Err(Error::parse(line, format!("invalid generator name `{name}`")));
                        }
                        if names[..i].contains(name) {
                            return Err(Error::parse(line, format!("generator `{name}` listed twice")));
                        }
                    }
                    generators = Some(names);
                }
                "rel" => {
                    let gens = generators
                        .as_deref()
                        .ok_or_else(|| Error::parse(line, "`rel` before `gens`"))?;
                    let (lhs, rhs) = rest
                        .split_once('=')
                        .ok_or_else(|| Error::parse(line, "relation needs `=`"))?;
                    if lhs.trim().is_empty() || rhs.trim().is_empty() {
                        return Err(Error::parse(line, "empty relation side"));
                    }
                    if rhs.contains('=') {
                        return Err(Error::parse(line, "relation has more than one `=`"));
                    }
                    relations.push((parse_expr(gens, lhs, line)?, parse_expr(gens, rhs, line)?));
                }
                other => return Err(Error::parse(line, format!("expected `gens` or `rel`, found `{other}`"))),
            }
        }
    }
    let generators = generators.ok_or_else(|| Error::parse(0, "missing `gens` statement"))?;
    Ok(Presentation { generators, relations })
}

pub(super) fn write_gword(out: &mut String, names: &[String], word: &GWord) {
    for (i, &(g, e)) in word.syllables().iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        out.push_str(&names[g]);
        if e != 1 {
            let _ = write!(out, "^{e}");
        }
    }
}

pub(super) fn write_expr(out: &mut String, names: &[String], e: &WordExpr) {
    let needs_parens = |e: &WordExpr| matches!(e, WordExpr::Op(..) | WordExpr::InvOp(..));
    match e {
        WordExpr::Gen(g) => out.push_str(&names[*g]),
        WordExpr::Op(l, r) | WordExpr::InvOp(l, r) => {
            write_expr(out, names, l);
            out.push_str(if matches!(e, WordExpr::Op(..)) { " * " } else { " ~ " });
            if needs_parens(r) {
                out.push('(');
                write_expr(out, names, r);
                out.push(')');
            } else {
                write_expr(out, names, r);
            }
        }
        WordExpr::Exp(base, word) => {
            if needs_parens(base) {
                out.push('(');
                write_expr(out, names, base);
                out.push(')');
            } else {
                write_expr(out, names, base);
            }
            out.push_str("^(");
            write_gword(out, names, word);
            out.push(')');
        }
    }
}
