use thiserror::Error;

use crate::ExponentVec;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("polynomial is not monic in y")]
    NotMonic,
    #[error("zero polynomial where a nonzero one is required")]
    ZeroPolynomial,
    #[error("both operands have y-degree 0; no variable to eliminate")]
    NothingToEliminate,
    #[error("{divisor} does not divide the y-degree {degree}")]
    DegreeNotDivisible { degree: usize, divisor: usize },
    #[error("base has y-degree {found}, expected {expected}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("base ladder violated: {0}")]
    BadLadder(String),
    #[error("approximate root iteration did not reach a fixed point after {0} steps")]
    NoFixedPoint(usize),
    #[error("ambient variable count mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("negative exponent where a polynomial is required")]
    NegativeExponent,
    #[error("{0} is not a characteristic exponent: it lies in the lattice of the previous ones")]
    NotCharacteristic(ExponentVec),
    #[error("characteristic exponents must be strictly increasing coordinate-wise")]
    NotIncreasing,
    #[error("lattice index {found} does not close at n^(e-1) = {expected}; the branch does not have degree n")]
    DegreeInconsistent { expected: String, found: String },
    #[error("non-integral value: {0}")]
    NonIntegral(String),
    #[error("generator {0} lies outside N^e")]
    GeneratorOutsideOrthant(ExponentVec),
    #[error("formal order minimizer is not unique: {first:?} and {second:?} both give {value}")]
    NonUniqueMinimizer {
        first: Vec<usize>,
        second: Vec<usize>,
        value: ExponentVec,
    },
    #[error("zero discriminant: the polynomial is not squarefree")]
    ZeroDiscriminant,
    #[error("not quasi-ordinary: {0}")]
    NotQuasiOrdinary(String),
    #[error("insufficient precision: {0}")]
    InsufficientPrecision(String),
    #[error("computation requires an algebraic extension of the coefficient field: {0}")]
    AlgebraicExtensionRequired(String),
    #[error("root lies in a smaller ring: the polynomial is reducible (root degree {root_degree} < {degree})")]
    ReducibleRoot { root_degree: usize, degree: usize },
    #[error("not quasi-homogeneous for weights ({0}, {1})")]
    NotQuasiHomogeneous(i64, i64),
    #[error("substitution exceeded the degree bound {0}")]
    DegreeBoundExceeded(i64),
    #[error("invariant violation: {0}")]
    Invariant(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("undeclared variable `{0}`")]
    UndeclaredVariable(String),
}

pub type Result<T> = std::result::Result<T, Error>;
