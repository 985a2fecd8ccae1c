//! File loading and error mapping.

use std::fmt::Display;
use std::path::Path;

use qtensor::{
    parse_presentation, parse_qdl, validate_good_involution, Error, GoodInvolution, Presentation, QdlDocument, Quandle,
};

pub enum Failure {
    /// Parse or usage error, exit 2.
    Usage(String),
    /// Well-formed input failing a check, exit 1.
    Validation(String),
    /// Validation failure with a report still worth printing.
    Report(String, String),
}

impl Failure {
    pub fn usage(path: &Path, e: impl Display) -> Failure {
        Failure::Usage(format!("{}: {e}", path.display()))
    }

    /// Routes a library error by kind; parse errors name the line.
    pub fn from_core(path: &Path, e: Error) -> Failure {
        match e {
            Error::Parse { line: 0, message } => Failure::Usage(format!("{}: {message}", path.display())),
            Error::Parse { line, message } => Failure::Usage(format!("{}:{line}: {message}", path.display())),
            e if e.is_input_error() => Failure::usage(path, e),
            e => Failure::Validation(format!("{}: {e}", path.display())),
        }
    }

    pub fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Validation(_) | Failure::Report(..) => 1,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Validation(m) | Failure::Report(_, m) => m,
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::usage(path, e))
}

pub fn load_qdl(path: &Path) -> Result<QdlDocument, Failure> {
    parse_qdl(&read(path)?).map_err(|e| Failure::from_core(path, e))
}

pub fn load_presentation(path: &Path) -> Result<Presentation, Failure> {
    parse_presentation(&read(path)?).map_err(|e| Failure::from_core(path, e))
}

/// Accepts `[0,2,1]`, `0,2,1` or `0 2 1`.
pub fn parse_rho_flag(text: &str) -> Result<Vec<usize>, Failure> {
    text.trim()
        .trim_start_matches('[')
        .trim_end_matches(']')
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse()
                .map_err(|_| Failure::Usage(format!("--rho: expected a non-negative integer, found `{s}`")))
        })
        .collect()
}

pub struct Loaded {
    pub q: Quandle,
    pub rho: Option<GoodInvolution>,
}

/// Loads and validates a quandle; `rho_flag` overrides the file's involution.
pub fn load_quandle(path: &Path, rho_flag: Option<&str>) -> Result<Loaded, Failure> {
    let doc = load_qdl(path)?;
    let q = doc.quandle().map_err(|e| Failure::from_core(path, e))?;
    let rho = match rho_flag {
        Some(text) => Some(parse_rho_flag(text)?),
        None => doc.involution,
    };
    let rho = rho
        .map(|r| validate_good_involution(&q, &r))
        .transpose()
        .map_err(|e| Failure::from_core(path, e))?;
    Ok(Loaded { q, rho })
}
