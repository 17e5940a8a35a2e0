use std::fmt;

use serde::Serialize;

/// One violated group axiom, with the smallest witness found.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "axiom", rename_all = "snake_case")]
pub enum GroupViolation {
    NotSquare { row: usize, len: usize },
    OutOfRange { row: usize, col: usize, value: usize },
    NotLatinSquare { row: Option<usize>, col: Option<usize> },
    NoIdentity,
    NotAssociative { a: usize, b: usize, c: usize },
    NoInverse { a: usize },
}

impl fmt::Display for GroupViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NotSquare { row, len } => write!(f, "row {row} has length {len}"),
            Self::OutOfRange { row, col, value } => {
                write!(f, "entry ({row},{col}) = {value} is out of range")
            }
            Self::NotLatinSquare { row: Some(r), .. } => write!(f, "row {r} repeats an entry"),
            Self::NotLatinSquare { col: Some(c), .. } => write!(f, "column {c} repeats an entry"),
            Self::NotLatinSquare { .. } => write!(f, "not a latin square"),
            Self::NoIdentity => write!(f, "no two-sided identity"),
            Self::NotAssociative { a, b, c } => write!(f, "({a}{b}){c} != {a}({b}{c})"),
            Self::NoInverse { a } => write!(f, "{a} has no two-sided inverse"),
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("table is not a group: {}", join(.0))]
    InvalidGroup(Vec<GroupViolation>),
    #[error("{what} of order {order} exceeds cap {cap}")]
    OrderCapExceeded { what: &'static str, order: usize, cap: usize },
    #[error("element set is not a subgroup")]
    NotASubgroup,
    #[error("lambda_{0} is not an automorphism of the additive group")]
    LambdaNotAutomorphism(usize),
    #[error("map assigned to {0} is not an automorphism")]
    NotAutomorphism(usize),
    #[error("map is not a (anti-)homomorphism at ({0}, {1})")]
    NotHomomorphism(usize, usize),
    #[error("kernel condition fails at ({0}, {1})")]
    KernelConditionFails(usize, usize),
    #[error("not an exact factorization: {0}")]
    NotExactFactorization(String),
    #[error("alpha is not bilinear into the center at ({0}, {1}, {2})")]
    NotBilinear(usize, usize, usize),
    #[error("f does not induce an endomorphism modulo the center at ({0}, {1})")]
    NotEndomorphismModCenter(usize, usize),
    #[error("image of f is not abelian modulo the center at ({0}, {1})")]
    ImageNotAbelianModCenter(usize, usize),
    #[error("braces do not share the additive table")]
    AdditiveTablesDiffer,
    #[error("systems live on different carriers")]
    CarrierMismatch,
    #[error("systems have different base operations")]
    BaseMismatch,
    #[error("precondition fails: {0}")]
    PreconditionFails(String),
    #[error("not a Rota-Baxter operator at ({0}, {1})")]
    NotRotaBaxter(usize, usize),
    #[error("element set is not an ideal")]
    NotAnIdeal,
    #[error("brace is not lambda-anti-homomorphic at ({0}, {1})")]
    NotAntiHomomorphic(usize, usize),
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("word with exponent sum {0} is not in the kernel")]
    NotInKernel(i64),
    #[error("fundamental domain needs |k| <= {needed} but the window is |k| <= {window}")]
    WindowTooSmall { window: i64, needed: i64 },
    #[error("integer overflow")]
    Overflow,
    #[error("formula {id} mismatch: {lhs} != {rhs}")]
    FormulaMismatch { id: String, lhs: String, rhs: String },
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("JSON error at line {line}, column {column}: {msg}")]
    Json { line: usize, column: usize, msg: String },
    #[error("internal criterion mismatch: {0}")]
    CriterionMismatch(String),
    #[error("unsupported format: {0}")]
    UnsupportedFormat(String),
}

fn join(v: &[GroupViolation]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; ")
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json { line: e.line(), column: e.column(), msg: e.to_string() }
    }
}
