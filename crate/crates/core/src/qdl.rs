//! The `.qdl` quandle file format.
//!
//! ```text
//! # comment
//! quandle
//! n 3
//! table
//! 0 2 1
//! 2 1 0
//! 1 0 2
//! involution 0 1 2
//! ```
//!
//! Rows give `x * y` for `y = 0..n`. An optional `inverse` section of `n`
//! rows may follow the table; it is cross-checked against the inverse
//! derived from the table.

use crate::error::{Error, Result};
use crate::involution::{validate_good_involution, GoodInvolution};
use crate::quandle::{validate_quandle, Element, Quandle};

/// A syntactically valid `.qdl` document, before any axiom checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QdlDocument {
    pub n: usize,
    pub table: Vec<Vec<Element>>,
    pub inverse: Option<Vec<Vec<Element>>>,
    pub involution: Option<Vec<Element>>,
}

fn numbers(line: usize, fields: &[&str], n: Option<usize>) -> Result<Vec<usize>> {
    fields
        .iter()
        .map(|f| {
            let v: usize = f
                .parse()
                .map_err(|_| Error::parse(line, format!("expected a non-negative integer, found `{f}`")))?;
            match n {
                Some(n) if v >= n => Err(Error::parse(line, format!("element {v} out of range for n = {n}"))),
                _ => Ok(v),
            }
        })
        .collect()
}

struct Cursor<'a> {
    lines: Box<dyn Iterator<Item = (usize, &'a str)> + 'a>,
    last: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        let lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        Cursor {
            lines: Box::new(lines),
            last: 0,
        }
    }

    fn next(&mut self) -> Option<(usize, Vec<&'a str>)> {
        let (no, line) = self.lines.next()?;
        self.last = no;
        Some((no, line.split_whitespace().collect()))
    }

    fn expect(&mut self, what: &str) -> Result<(usize, Vec<&'a str>)> {
        self.next()
            .ok_or_else(|| Error::parse(self.last + 1, format!("unexpected end of file, expected {what}")))
    }

    fn rows(&mut self, n: usize, what: &str) -> Result<Vec<Vec<Element>>> {
        (0..n)
            .map(|row| {
                let (no, fields) = self.expect(what)?;
                if fields.len() != n {
                    return Err(Error::parse(
                        no,
                        format!("{what} row {row} has {} entries, expected {n}", fields.len()),
                    ));
                }
                numbers(no, &fields, Some(n))
            })
            .collect()
    }
}

pub fn parse_qdl(text: &str) -> Result<QdlDocument> {
    let mut cur = Cursor::new(text);
    let (no, header) = cur.expect("`quandle`")?;
    if header != ["quandle"] {
        return Err(Error::parse(no, "expected header line `quandle`"));
    }
    let (no, size) = cur.expect("`n <int>`")?;
    if size.len() != 2 || size[0] != "n" {
        return Err(Error::parse(no, "expected `n <int>`"));
    }
    let n = numbers(no, &size[1..], None)?[0];
    if n == 0 {
        return Err(Error::parse(no, "n must be positive"));
    }
    let (no, kw) = cur.expect("`table`")?;
    if kw != ["table"] {
        return Err(Error::parse(no, "expected `table`"));
    }
    let table = cur.rows(n, "table")?;

    let mut doc = QdlDocument {
        n,
        table,
        inverse: None,
        involution: None,
    };
    while let Some((no, fields)) = cur.next() {
        match fields[0] {
            "inverse" if fields.len() == 1 && doc.inverse.is_none() && doc.involution.is_none() => {
                doc.inverse = Some(cur.rows(n, "inverse")?);
            }
            "involution" if doc.involution.is_none() => {
                if fields.len() != n + 1 {
                    return Err(Error::parse(
                        no,
                        format!("involution has {} entries, expected {n}", fields.len() - 1),
                    ));
                }
                doc.involution = Some(numbers(no, &fields[1..], Some(n))?);
            }
            other => return Err(Error::parse(no, format!("unexpected `{other}`"))),
        }
    }
    Ok(doc)
}

impl QdlDocument {
    /// Validates the table (and inverse table, if present) as a quandle.
    pub fn quandle(&self) -> Result<Quandle> {
        match &self.inverse {
            Some(inv) => Quandle::with_inverse(&self.table, inv),
            None => validate_quandle(&self.table),
        }
    }

    /// Validates the involution line, if present, against `q`.
    pub fn good_involution(&self, q: &Quandle) -> Option<Result<GoodInvolution>> {
        self.involution.as_ref().map(|rho| validate_good_involution(q, rho))
    }
}

pub fn write_qdl(q: &Quandle, involution: Option<&GoodInvolution>) -> String {
    let mut out = format!("quandle\nn {}\ntable\n", q.len());
    for row in q.table() {
        let row: Vec<String> = row.iter().map(ToString::to_string).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    if let Some(rho) = involution {
        let images: Vec<String> = rho.map().iter().map(ToString::to_string).collect();
        out.push_str(&format!("involution {}\n", images.join(" ")));
    }
    out
}
