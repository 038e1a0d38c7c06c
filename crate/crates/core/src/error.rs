use alloc::string::String;
use core::fmt;

/// Errors raised by the kernel.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Two maps do not compose or an entry list has the wrong length.
    DimensionMismatch { expected: usize, found: usize },
    /// Operands live over different fields.
    FieldMismatch,
    /// A square matrix was required.
    NotSquare { rows: usize, cols: usize },
    /// A linear-system row has the wrong number of coefficients.
    RowLengthMismatch { row: usize, expected: usize, found: usize },
    /// The requested modulus is not a usable prime.
    InvalidModulus(u64),
    /// A scalar literal could not be parsed.
    Parse(String),
    /// Endomorphisms of an object fail to commute.
    NonCommuting { left: &'static str, right: &'static str },
    /// A coherence map needs kappa and nu but the object has none.
    MissingEndomorphism(&'static str),
    /// Grouped objects do not match the index sequence.
    GroupShapeMismatch { group: usize, expected: usize, found: usize },
    /// Padding input does not match the index sequence.
    LengthMismatch { expected: usize, found: usize },
    /// A slot index lies outside the double sequence.
    SlotOutOfRange { i: usize, j: usize },
    /// Nested instance data has the wrong shape.
    ShapeMismatch(String),
    /// A structure map required by the operation is absent.
    MissingMap(&'static str),
    /// Modules passed together live over different structures.
    MixedStructures,
    /// A designated endomorphism is not a structure morphism.
    InvariantViolation(String),
    /// An endomorphism that must be inverted is singular.
    NotInvertible(&'static str),
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::FieldMismatch => f.write_str("operands are over different fields"),
            Error::NotSquare { rows, cols } => write!(f, "matrix is {rows}x{cols}, not square"),
            Error::RowLengthMismatch { row, expected, found } => {
                write!(f, "row {row} has {found} coefficients, expected {expected}")
            }
            Error::InvalidModulus(p) => write!(f, "{p} is not a supported prime modulus"),
            Error::Parse(s) => write!(f, "cannot parse scalar: {s}"),
            Error::NonCommuting { left, right } => write!(f, "{left} and {right} do not commute"),
            Error::MissingEndomorphism(name) => write!(f, "object has no {name}"),
            Error::GroupShapeMismatch { group, expected, found } => {
                write!(f, "group {group} holds {found} objects, expected {expected}")
            }
            Error::LengthMismatch { expected, found } => {
                write!(f, "expected {expected} slots, found {found}")
            }
            Error::SlotOutOfRange { i, j } => write!(f, "slot ({i},{j}) out of range"),
            Error::ShapeMismatch(s) => write!(f, "shape mismatch: {s}"),
            Error::MissingMap(name) => write!(f, "structure map {name} is missing"),
            Error::MixedStructures => f.write_str("modules are over different structures"),
            Error::InvariantViolation(s) => write!(f, "invariant violated: {s}"),
            Error::NotInvertible(name) => write!(f, "{name} is not invertible"),
        }
    }
}

impl core::error::Error for Error {}
