use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid symbol table: {0}")]
    InvalidTable(String),
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("leaf `{0}` cannot have children")]
    LeafWithChildren(String),
    #[error("a context needs exactly one hole, found {0}")]
    HoleCount(usize),
    #[error("malformed term at byte {pos}: {msg}")]
    Malformed { pos: usize, msg: String },
    #[error("letter {0} is outside the alphabet")]
    LetterOutOfRange(usize),
    #[error("alphabet mismatch: {0} letters vs {1} letters")]
    AlphabetMismatch(usize, usize),
    #[error("invalid machine: {0}")]
    InvalidMachine(String),
    #[error("quotient not well defined: a subset reaches outputs {0} and {1} in different classes")]
    WellDefinedness(usize, usize),
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),
    #[error("unknown operator `{0}`")]
    UnknownOperator(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("element index {0} is outside the carrier")]
    ElementOutOfRange(usize),
    #[error("leaf `{0}` has no value")]
    UnvaluedLeaf(String),
    #[error("the relation is not a congruence")]
    NotACongruence,
    #[error("symbol tables differ")]
    TableMismatch,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("size cap exceeded: {0}")]
    SizeCap(String),
}
