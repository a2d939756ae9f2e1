//! Engine error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum EngineError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at evaluation point: {0}")]
    PoleAtPoint(String),
    #[error("square root of {0} is irrational at the evaluation point")]
    IrrationalSquareRoot(String),
    #[error("rewrite budget exceeded ({0} steps); suspected rule-orientation bug")]
    NonTerminating(u64),
    #[error("unknown generator: {0}")]
    UnknownGenerator(String),
    #[error("elements belong to different algebra configurations")]
    MixedConfiguration,
    #[error("star is undefined on words containing {0}")]
    StarUndefined(String),
    #[error("act() operand contains a partial derivative")]
    OperandContainsPartial,
    #[error("rank mismatch while deriving quadratic rules: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("inconsistent rule derivation: {0}")]
    InconsistentDerivation(String),
    #[error("operand has wrong form degree: expected {expected}, got {got}")]
    WrongDegree { expected: usize, got: usize },
    #[error("element leaves the sector where the operation is defined: {0}")]
    SectorViolation(String),
    #[error("matrix is not invertible in the algebra")]
    NotInvertible,
    #[error("harmonicity check not supported for n = {0} (construction still allowed)")]
    UnsupportedN(usize),
    #[error("braided star fails antimultiplicativity on: {0}")]
    StarInconsistency(String),
    #[error("the epsilon-table constant k has not been resolved yet")]
    UnresolvedConstant,
    #[error("no solution for the table constant k")]
    NoSolution,
    #[error("solution for the table constant k is not unique")]
    NonUnique,
    #[error("unknown suite: {0}")]
    UnknownSuite(String),
    #[error("expression is not specializable: {0}")]
    NotSpecializable(String),
    #[error("{0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, EngineError>;
