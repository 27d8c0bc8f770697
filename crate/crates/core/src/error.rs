use thiserror::Error;

/// Errors raised by the semigroup operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("frobenius number must be positive")]
    ZeroFrobenius,
    #[error("element {element} lies outside the open range (0, {frobenius})")]
    OutOfRange { element: usize, frobenius: usize },
    #[error("{frobenius} cannot be the frobenius number of a set that contains it")]
    FrobeniusViolated { frobenius: usize },
    #[error("set is not closed under addition: {a} + {b} = {} is missing", a + b)]
    NotClosed { a: usize, b: usize },
    #[error("generators have gcd {gcd}, expected 1")]
    GcdNotOne { gcd: usize },
    #[error("the semigroup of all nonnegative integers has no frobenius number")]
    NotRepresentable,
    #[error("{0} is not a nonzero element of the semigroup")]
    NotAMember(usize),
    #[error("removing the multiplicity of Δ(F+1) changes the frobenius number")]
    WouldChangeFrobenius,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("no minimal generator is congruent to {residue} modulo {modulus}")]
    ResidueClassMissing { residue: usize, modulus: usize },
    #[error("{elements:?} is not a Sat({frobenius})-set")]
    NotASatFSet { frobenius: usize, elements: Vec<usize> },
    #[error("semigroup is not saturated")]
    NotSaturated,
    #[error("semigroup has frobenius number {actual}, expected {expected}")]
    WrongFrobenius { expected: usize, actual: usize },
    #[error("{ds:?} is not a Sat({frobenius})-sequence")]
    NotASatSequence { frobenius: usize, ds: Vec<usize> },
    #[error("invalid rank witness: {0}")]
    InvalidWitness(String),
    #[error("frobenius number {frobenius} exceeds the brute-force limit {limit}")]
    TooLarge { frobenius: usize, limit: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
