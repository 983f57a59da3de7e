use thiserror::Error;

use crate::text::ParseError;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("monomials or ideals live over different variable sets")]
    VariableMismatch,
    #[error("exponent vector has length {found}, expected {expected}")]
    Arity { expected: usize, found: usize },
    #[error("at most {max} variables are supported, got {found}")]
    TooManyVariables { max: usize, found: usize },
    #[error("variable name `{0}` is declared twice")]
    DuplicateVariable(String),
    #[error("variable names must be nonempty")]
    EmptyVariableName,
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("the zero ideal is not accepted here")]
    ZeroIdeal,
    #[error("the unit ideal is not accepted here")]
    UnitIdeal,
    #[error("ideal is not polymatroidal")]
    NotPolymatroidal,
    #[error("ideal is not squarefree")]
    NotSquarefree,
    #[error("ideal is not generated in a single degree")]
    NotSingleDegree,
    #[error("ideal is not fully supported")]
    NotFullySupported,
    #[error("ideal is not equidimensional")]
    NotEquidimensional,
    #[error("simplicial complex is not pure")]
    NonPureComplex,
    #[error("expected generators of degree {expected}, found degree {found}")]
    WrongDegree { expected: u32, found: u32 },
    #[error("shift s = {s} must be 0 or the generating degree {d}")]
    InvalidShift { s: u32, d: u32 },
    #[error("lemma hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("no prime-power presentation with exponents bounded by {bound}")]
    NoPresentation { bound: u32 },
    #[error("{0} is not a prime")]
    InvalidField(u64),
    #[error("Veronese-type caps sum to {sum}, below the degree {degree}")]
    EmptyVeroneseType { sum: u64, degree: u32 },
    #[error("work budget of {budget} exceeded (needs at least {needed})")]
    BudgetExceeded { budget: u64, needed: u64 },
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}
