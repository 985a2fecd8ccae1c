use std::fmt;

use thiserror::Error;

use crate::quandle::Element;

/// A failed quandle axiom, with the witness that breaks it.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum AxiomViolation {
    /// Q1: `x * x != x`.
    Idempotence { x: Element, got: Element },
    /// Q2: the right translation by `y` is not a bijection; `x1 * y == x2 * y`.
    NotBijective { y: Element, x1: Element, x2: Element },
    /// Q3: `(x * y) * z != (x * z) * (y * z)`.
    Distributivity { x: Element, y: Element, z: Element },
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomViolation::Idempotence { x, got } => {
                write!(f, "Q1 fails at x={x}: {x}*{x} = {got}")
            }
            AxiomViolation::NotBijective { y, x1, x2 } => write!(
                f,
                "Q2-bijectivity fails for y={y}: {x1}*{y} = {x2}*{y} with {x1} != {x2}"
            ),
            AxiomViolation::Distributivity { x, y, z } => {
                write!(f, "Q3 fails at (x, y, z) = ({x}, {y}, {z})")
            }
        }
    }
}

/// A failed good-involution condition.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum InvolutionViolation {
    /// `rho(rho(x)) != x`.
    NotInvolution { x: Element },
    /// S1: `rho(x * y) != rho(x) * y`.
    S1 { x: Element, y: Element },
    /// S2: `x * rho(y) != x ~ y`.
    S2 { x: Element, y: Element },
}

impl fmt::Display for InvolutionViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvolutionViolation::NotInvolution { x } => {
                write!(f, "not an involution at x={x}")
            }
            InvolutionViolation::S1 { x, y } => write!(f, "S1 fails at (x, y) = ({x}, {y})"),
            InvolutionViolation::S2 { x, y } => write!(f, "S2 fails at (x, y) = ({x}, {y})"),
        }
    }
}

fn join<T: fmt::Display>(items: &[T]) -> String {
    let shown: Vec<String> = items.iter().take(8).map(|v| v.to_string()).collect();
    let mut out = shown.join("; ");
    if items.len() > 8 {
        out.push_str(&format!("; ... ({} total)", items.len()));
    }
    out
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("empty table: a quandle needs at least one element")]
    Empty,
    #[error("table is not square: row {row} has {len} entries, expected {n}")]
    NotSquare { row: usize, len: usize, n: usize },
    #[error("element {value} is out of range for a carrier of size {n}")]
    OutOfRange { value: usize, n: usize },
    #[error("size mismatch: expected {expected}, got {got}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("quandle axioms violated: {}", join(.0))]
    Axioms(Vec<AxiomViolation>),
    #[error("supplied inverse table disagrees with the derived one at ({x}, {y})")]
    InverseMismatch { x: Element, y: Element },
    #[error("not a good involution: {}", join(.0))]
    Involution(Vec<InvolutionViolation>),
    #[error("not a quandle homomorphism: f({x}*{y}) != f({x})*f({y})")]
    NotHom { x: Element, y: Element },
    #[error("not a group: {0}")]
    NotGroup(String),
    #[error("size {n} exceeds the enumeration bound {bound}")]
    BoundExceeded { n: usize, bound: usize },
    #[error("search space of {size} assignments exceeds the cap {cap}")]
    SearchSpace { size: u128, cap: u128 },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("assignment does not satisfy relation {index}")]
    RelationFails { index: usize },
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    /// True for errors that describe malformed input rather than a
    /// mathematical property that failed to hold.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Empty
                | Error::NotSquare { .. }
                | Error::OutOfRange { .. }
                | Error::SizeMismatch { .. }
                | Error::Parse { .. }
                | Error::BoundExceeded { .. }
                | Error::SearchSpace { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
